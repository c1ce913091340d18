#include "ribbon/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <thread>

#include "compact.hpp"
#include "ribbon/topology.hpp"
#include "union_find.hpp"

namespace ribbon {
namespace {

using Counts = std::map<Monomial, std::int64_t, CanonicalOrder>;

void accumulate(const detail::CompactGraph& c, int full_rank, std::uint64_t begin, std::uint64_t end,
                Counts& out) {
  detail::MeasureScratch scratch;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    const auto m = detail::measure(c, mask, scratch);
    const int rank = c.vertex_count - m.components;
    const int nullity = m.kept_edges - rank;
    Monomial mono;
    mono.x1 = full_rank - rank;
    mono.y1 = nullity;
    mono.z = m.components - m.closed_faces + nullity;
    mono.s = m.boundary_components;
    mono.w = m.nonorientable;
    mono.t = c.flag_count + 2 * (c.edge_count - m.kept_edges);
    ++out[mono];
  }
}

BRPoly edgeless_component(const RibbonGraph& g) {
  const auto inv = basic_invariants(g);
  return BRPoly::monomial(
      {.z = 1 - inv.closed_faces, .s = inv.boundary_components, .t = inv.flags});
}

BRPoly recurse(const RibbonGraph& g) {
  auto parts = components(g);
  if (parts.size() > 1) {
    BRPoly out = 1;
    for (const auto& part : parts) out *= recurse(part);
    return out;
  }
  if (g.edge_count() == 0) return g.vertex_count() == 0 ? BRPoly(1) : edgeless_component(g);

  for (const auto& [e, t] : g.edges()) {
    if (g.is_loop(e)) continue;
    const BRPoly cut = recurse(cut_edge(g, e));
    const BRPoly con = recurse(contract_edge(g, e));
    if (classify_edge(g, e).kind == EdgeClass::Kind::bridge) return BRPoly::x_minus_1() * cut + con;
    return cut + con;
  }
  // Every edge is a loop and the graph is connected: a rosette.
  for (const auto& [e, t] : g.edges()) {
    if (!classify_edge(g, e).is_trivial_loop()) continue;
    BRPoly factor = BRPoly::y_minus_1();
    if (t == Twist::twisted) factor *= BRPoly::var_z() * BRPoly::var_w();
    return recurse(cut_edge(g, e)) + factor * recurse(contract_edge(g, e));
  }
  return state_sum_r(g);
}

// Faces of the subgraph on the kept darts: states (dart, direction), one step
// crosses the edge, flips direction on a twist and turns at the far vertex.
// Every face is met once in each direction.
int closed_face_count(const RibbonGraph& g, const std::vector<std::string>& kept) {
  std::map<std::string, int> dart_index;
  std::vector<std::string> dart_edge;
  std::vector<int> succ;
  std::vector<int> pred;
  int isolated = 0;
  for (const auto& v : g.vertices()) {
    std::vector<int> here;
    for (const auto& s : v.rotation) {
      if (s.is_flag() || !std::binary_search(kept.begin(), kept.end(), s.id)) continue;
      const int d = static_cast<int>(dart_edge.size());
      dart_index.emplace(s.text(), d);
      dart_edge.push_back(s.id);
      here.push_back(d);
    }
    if (here.empty()) {
      ++isolated;
      continue;
    }
    succ.resize(dart_edge.size());
    pred.resize(dart_edge.size());
    for (std::size_t i = 0; i < here.size(); ++i) {
      succ[here[i]] = here[(i + 1) % here.size()];
      pred[here[(i + 1) % here.size()]] = here[i];
    }
  }
  const int darts = static_cast<int>(dart_edge.size());
  std::vector<int> mate(darts);
  std::vector<bool> twisted(darts);
  for (const auto& [text, d] : dart_index) {
    const std::string& e = dart_edge[d];
    const bool is_a = text.back() == 'a';
    mate[d] = dart_index.at(e + (is_a ? ".b" : ".a"));
    twisted[d] = g.twist(e) == Twist::twisted;
  }

  std::vector<bool> seen(2 * static_cast<std::size_t>(darts), false);
  int orbits = 0;
  for (int start = 0; start < 2 * darts; ++start) {
    if (seen[start]) continue;
    ++orbits;
    int state = start;
    while (!seen[state]) {
      seen[state] = true;
      const int d = state >> 1;
      int dir = state & 1;
      const int far = mate[d];
      if (twisted[d]) dir ^= 1;
      const int next = dir == 0 ? succ[far] : pred[far];
      state = 2 * next + dir;
    }
  }
  return orbits / 2 + isolated;
}

struct SimpleOrient {
  int components = 0;
  int nonorientable = 0;
};

SimpleOrient orient(const RibbonGraph& g, const std::vector<std::string>& kept) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const auto& e : kept) {
    const int a = static_cast<int>(g.locate_end(e, End::a).vertex);
    const int b = static_cast<int>(g.locate_end(e, End::b).vertex);
    const int w = g.twist(e) == Twist::twisted ? 1 : 0;
    adj[a].push_back({b, w});
    adj[b].push_back({a, w});
  }
  SimpleOrient out;
  std::vector<int> colour(n, -1);
  for (int root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    ++out.components;
    colour[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (auto [u, w] : adj[v]) {
        if (colour[u] < 0) {
          colour[u] = colour[v] ^ w;
          stack.push_back(u);
        } else if (colour[u] != (colour[v] ^ w)) {
          out.nonorientable = 1;
        }
      }
    }
  }
  return out;
}

struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

int multigraph_components(const Multigraph& m) {
  detail::UnionFind uf(m.vertices);
  int count = m.vertices;
  for (auto [a, b] : m.edges) {
    if (uf.find(a) != uf.find(b)) {
      uf.unite(a, b);
      --count;
    }
  }
  return count;
}

BRPoly tutte(const Multigraph& m) {
  if (m.edges.empty()) return 1;
  Multigraph rest = m;
  const auto [a, b] = rest.edges.back();
  rest.edges.pop_back();
  if (a == b) return BRPoly::var_y() * tutte(rest);

  Multigraph merged = rest;
  for (auto& [u, v] : merged.edges) {
    if (u == b) u = a;
    if (v == b) v = a;
  }
  if (multigraph_components(rest) > multigraph_components(m)) return BRPoly::var_x() * tutte(merged);
  return tutte(rest) + tutte(merged);
}

}  // namespace

BRPoly state_sum_r(const RibbonGraph& g, const StateSumOptions& options) {
  const detail::CompactGraph c = detail::compact(g);
  if (c.edge_count > 63) throw GraphError("state sum limited to 63 edges");
  const int full_rank = c.vertex_count - detail::measure(c, ~std::uint64_t{0}).components;
  const std::uint64_t total = std::uint64_t{1} << c.edge_count;

  Counts counts;
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  if (!options.parallel || threads <= 1 || total < 64) {
    accumulate(c, full_rank, 0, total, counts);
  } else {
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
    std::vector<Counts> partial(threads);
    std::vector<std::thread> pool;
    const std::uint64_t block = total / threads;
    for (unsigned i = 0; i < threads; ++i) {
      const std::uint64_t begin = i * block;
      const std::uint64_t end = i + 1 == threads ? total : begin + block;
      pool.emplace_back([&, i, begin, end] { accumulate(c, full_rank, begin, end, partial[i]); });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : partial) {
      for (const auto& [m, n] : p) counts[m] += n;
    }
  }

  BRPoly out;
  for (const auto& [m, n] : counts) out.add_term(m, mpz_class(static_cast<long>(n)));
  return out;
}

BRPoly recurrence_r(const RibbonGraph& g) { return recurse(g); }

BRPoly r_prime(const RibbonGraph& g) { return substitute_s_inv_z(state_sum_r(g)); }

BRPoly br_oracle_closed(const RibbonGraph& g) {
  if (g.flag_count() != 0) throw GraphError("closed polynomial needs a flagless graph");
  std::vector<std::string> edges;
  for (const auto& [e, t] : g.edges()) edges.push_back(e);
  if (edges.size() > 30) throw GraphError("too many edges for the closed oracle");

  const int vertices = static_cast<int>(g.vertex_count());
  const int full_rank = vertices - orient(g, edges).components;
  BRPoly out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((mask >> i) & 1U) kept.push_back(edges[i]);
    }
    const auto o = orient(g, kept);
    const int rank = vertices - o.components;
    const int nullity = static_cast<int>(kept.size()) - rank;
    const int faces = closed_face_count(g, kept);
    out.add_term({.x1 = full_rank - rank,
                  .y1 = nullity,
                  .z = o.components - faces + nullity,
                  .w = o.nonorientable},
                 1);
  }
  return out;
}

BRPoly tutte_oracle(const RibbonGraph& g) {
  Multigraph m;
  m.vertices = static_cast<int>(g.vertex_count());
  for (const auto& [e, t] : g.edges()) {
    m.edges.emplace_back(static_cast<int>(g.locate_end(e, End::a).vertex),
                         static_cast<int>(g.locate_end(e, End::b).vertex));
  }
  return tutte(m);
}

BRPoly coeff_rijklm(const RibbonGraph& g, int i, int j, int k, int l, int m) {
  return coefficient_slice(state_sum_r(g), i, j, k, l, m);
}

EdgeIdentity check_edge_identity(const RibbonGraph& g, const std::string& edge, const Evaluator& eval) {
  EdgeIdentity out;
  out.edge = edge;
  out.cls = classify_edge(g, edge);
  if (out.cls.kind == EdgeClass::Kind::loop && !out.cls.is_trivial_loop()) {
    out.rule = "none";
    return out;
  }
  const BRPoly whole = eval(g);
  const BRPoly cut = eval(cut_edge(g, edge));
  const BRPoly con = eval(contract_edge(g, edge));
  BRPoly rhs;
  switch (out.cls.kind) {
    case EdgeClass::Kind::regular:
      out.rule = "regular";
      rhs = cut + con;
      break;
    case EdgeClass::Kind::bridge:
      out.rule = "bridge";
      rhs = BRPoly::x_minus_1() * cut + con;
      break;
    case EdgeClass::Kind::loop:
      if (out.cls.twist == Twist::twisted) {
        out.rule = "twisted-loop";
        rhs = cut + BRPoly::y_minus_1() * BRPoly::var_z() * BRPoly::var_w() * con;
      } else {
        out.rule = "untwisted-loop";
        rhs = cut + BRPoly::y_minus_1() * con;
      }
      break;
  }
  out.applicable = true;
  out.holds = whole == rhs;
  return out;
}

}  // namespace ribbon
