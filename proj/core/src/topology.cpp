#include "ribbon/topology.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

#include "compact.hpp"

namespace ribbon {

BoundaryReport trace_boundary(const RibbonGraph& g) {
  const detail::CompactGraph c = detail::compact(g);
  const int nodes = 2 * c.stub_count();

  std::vector<int> band(nodes);
  std::vector<bool> flag_band(nodes, false);
  for (int st = 0; st < c.stub_count(); ++st) {
    const int e = c.edge_of_stub[st];
    if (e < 0) {
      band[2 * st] = 2 * st + 1;
      band[2 * st + 1] = 2 * st;
      flag_band[2 * st] = flag_band[2 * st + 1] = true;
    } else if (c.twisted[e]) {
      band[2 * st] = 2 * c.mate[st];
      band[2 * st + 1] = 2 * c.mate[st] + 1;
    } else {
      band[2 * st] = 2 * c.mate[st] + 1;
      band[2 * st + 1] = 2 * c.mate[st];
    }
  }

  std::vector<int> order(nodes);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const auto& tx = c.stub_text[x >> 1];
    const auto& ty = c.stub_text[y >> 1];
    if (tx != ty) return tx < ty;
    return (x & 1) < (y & 1);
  });

  BoundaryReport report;
  std::vector<bool> seen(nodes, false);
  for (int start : order) {
    if (seen[start]) continue;
    BoundaryWalk walk;
    int node = start;
    do {
      seen[node] = true;
      walk.strands.push_back({c.stub_text[node >> 1], static_cast<Side>(node & 1)});
      if (flag_band[node]) walk.flags.push_back(c.stub_text[node >> 1]);
      node = band[node];
      seen[node] = true;
      walk.strands.push_back({c.stub_text[node >> 1], static_cast<Side>(node & 1)});
      const int st = node >> 1;
      node = (node & 1) ? 2 * c.next_stub[st] : 2 * c.prev_stub[st] + 1;
    } while (node != start);
    if (walk.open()) {
      ++report.boundary_components;
    } else {
      ++report.closed_faces;
    }
    report.walks.push_back(std::move(walk));
  }
  for (int i = 0; i < c.bare_vertices; ++i) {
    report.walks.emplace_back();
    ++report.closed_faces;
  }
  return report;
}

BoundaryGraph boundary_graph(const RibbonGraph& g) {
  BoundaryGraph out;
  for (const auto& walk : trace_boundary(g).walks) {
    if (!walk.open()) continue;
    auto least = std::min_element(walk.flags.begin(), walk.flags.end());
    std::vector<std::string> cycle(least, walk.flags.end());
    cycle.insert(cycle.end(), walk.flags.begin(), least);
    out.components.push_back(std::move(cycle));
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

int orientability(const RibbonGraph& g) {
  const detail::CompactGraph c = detail::compact(g);
  return detail::measure(c, ~std::uint64_t{0}).nonorientable;
}

InvariantTuple basic_invariants(const RibbonGraph& g) {
  const detail::CompactGraph c = detail::compact(g);
  if (c.edge_count > 63) throw GraphError("graphs with more than 63 edges are not supported");
  const auto m = detail::measure(c, ~std::uint64_t{0});
  InvariantTuple inv;
  inv.vertices = c.vertex_count;
  inv.edges = c.edge_count;
  inv.flags = c.flag_count;
  inv.components = m.components;
  inv.rank = inv.vertices - inv.components;
  inv.nullity = inv.edges - inv.rank;
  inv.closed_faces = m.closed_faces;
  inv.boundary_components = m.boundary_components;
  inv.nonorientable = m.nonorientable;
  return inv;
}

RibbonGraph realize_csubgraph(const RibbonGraph& g, const std::set<std::string>& keep) {
  for (const auto& e : keep) {
    if (!g.has_edge(e)) throw GraphError("unknown edge '" + e + "'");
  }
  RibbonGraph out = g;
  for (const auto& [e, t] : g.edges()) {
    if (!keep.count(e)) out = cut_edge(out, e);
  }
  return out;
}

std::string to_json(const InvariantTuple& inv, const BoundaryGraph& boundary) {
  nlohmann::ordered_json j;
  j["k"] = inv.components;
  j["r"] = inv.rank;
  j["n"] = inv.nullity;
  j["F_int"] = inv.closed_faces;
  j["C_bnd"] = inv.boundary_components;
  j["t"] = inv.nonorientable;
  j["f"] = inv.flags;
  j["boundary"] = boundary.components;
  return j.dump();
}

}  // namespace ribbon
