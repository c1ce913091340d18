#include "ribbon/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "union_find.hpp"

namespace ribbon {
namespace {

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

template <class T>
std::vector<T> rotated(const std::vector<T>& seq, std::size_t start) {
  std::vector<T> out;
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) out.push_back(seq[(start + i) % seq.size()]);
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> all_ids(const RibbonGraph& g) {
  std::vector<std::string> ids;
  for (const auto& v : g.vertices()) ids.push_back(v.id);
  for (const auto& [e, t] : g.edges()) ids.push_back(e);
  for (const auto& f : g.flags()) ids.push_back(f);
  return ids;
}

// Copy of g2 with every id prefixed so nothing collides with g1. Returns the
// prefix applied (empty when no collision existed).
std::pair<RibbonGraph, std::string> namespaced(const RibbonGraph& g1, const RibbonGraph& g2) {
  auto collides = [&](const std::string& prefix) {
    for (const auto& id : all_ids(g2)) {
      if (g1.id_in_use(prefix + id)) return true;
    }
    return false;
  };
  std::string prefix;
  while (collides(prefix)) prefix += "u_";
  if (prefix.empty()) return {g2, prefix};

  std::vector<Vertex> vs;
  for (const auto& v : g2.vertices()) {
    Vertex nv{prefix + v.id, {}};
    for (const auto& s : v.rotation) {
      Stub ns = s;
      ns.id = prefix + s.id;
      nv.rotation.push_back(ns);
    }
    vs.push_back(std::move(nv));
  }
  std::map<std::string, Twist> es;
  for (const auto& [e, t] : g2.edges()) es.emplace(prefix + e, t);
  std::set<std::string> fs;
  for (const auto& f : g2.flags()) fs.insert(prefix + f);
  return {RibbonGraph(std::move(vs), std::move(es), std::move(fs), g2.name()), prefix};
}

}  // namespace

std::string Stub::text() const {
  if (is_flag()) return id;
  return id + (end == End::a ? ".a" : ".b");
}

RibbonGraph::RibbonGraph(std::vector<Vertex> vertices, std::map<std::string, Twist> edges,
                         std::set<std::string> flags, std::string name)
    : name_(std::move(name)), vertices_(std::move(vertices)), edges_(std::move(edges)), flags_(std::move(flags)) {
  std::set<std::string> vertex_ids;
  for (const auto& v : vertices_) {
    if (!valid_id(v.id)) throw GraphError("invalid vertex id '" + v.id + "'");
    if (!vertex_ids.insert(v.id).second) throw GraphError("duplicate vertex id '" + v.id + "'");
  }
  for (const auto& [e, t] : edges_) {
    if (!valid_id(e)) throw GraphError("invalid edge id '" + e + "'");
    if (flags_.count(e)) throw GraphError("duplicate id '" + e + "' used for an edge and a flag");
  }
  for (const auto& f : flags_) {
    if (!valid_id(f)) throw GraphError("invalid flag id '" + f + "'");
  }
  for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
    const auto& rot = vertices_[vi].rotation;
    for (std::size_t p = 0; p < rot.size(); ++p) {
      const Stub& s = rot[p];
      if (s.is_flag() && !flags_.count(s.id)) throw GraphError("undeclared flag '" + s.id + "'");
      if (s.is_edge_end() && !edges_.count(s.id)) throw GraphError("undeclared edge '" + s.id + "'");
      if (!where_.emplace(s.text(), StubLocation{vi, p}).second) {
        throw GraphError("stub '" + s.text() + "' placed more than once");
      }
    }
  }
  for (const auto& [e, t] : edges_) {
    for (End end : {End::a, End::b}) {
      if (!where_.count(Stub::edge(e, end).text())) {
        throw GraphError("edge end '" + Stub::edge(e, end).text() + "' is not placed on any vertex");
      }
    }
  }
  for (const auto& f : flags_) {
    if (!where_.count(f)) throw GraphError("flag '" + f + "' is declared but not placed");
  }
}

Twist RibbonGraph::twist(const std::string& edge) const {
  auto it = edges_.find(edge);
  if (it == edges_.end()) throw GraphError("unknown edge '" + edge + "'");
  return it->second;
}

std::optional<std::size_t> RibbonGraph::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

StubLocation RibbonGraph::locate(const Stub& stub) const {
  auto it = where_.find(stub.text());
  if (it == where_.end()) throw GraphError("unknown stub '" + stub.text() + "'");
  return it->second;
}

bool RibbonGraph::is_loop(const std::string& edge) const {
  return locate_end(edge, End::a).vertex == locate_end(edge, End::b).vertex;
}

bool RibbonGraph::id_in_use(const std::string& id) const {
  if (edges_.count(id) || flags_.count(id)) return true;
  return std::any_of(vertices_.begin(), vertices_.end(), [&](const Vertex& v) { return v.id == id; });
}

std::string RibbonGraph::fresh_id(const std::string& base) const {
  std::string id = base;
  while (id_in_use(id)) id += "_";
  return id;
}

bool operator==(const RibbonGraph& lhs, const RibbonGraph& rhs) {
  if (lhs.edges_ != rhs.edges_ || lhs.flags_ != rhs.flags_) return false;
  if (lhs.vertices_.size() != rhs.vertices_.size()) return false;
  std::map<std::string, std::vector<Stub>> a;
  std::map<std::string, std::vector<Stub>> b;
  for (const auto& v : lhs.vertices_) a.emplace(v.id, canonical_rotation(v.rotation));
  for (const auto& v : rhs.vertices_) b.emplace(v.id, canonical_rotation(v.rotation));
  return a == b;
}

std::string to_string(EdgeClass::Kind kind) {
  switch (kind) {
    case EdgeClass::Kind::regular: return "regular";
    case EdgeClass::Kind::bridge: return "bridge";
    case EdgeClass::Kind::loop: return "self-loop";
  }
  return "?";
}

std::string describe(const EdgeClass& cls) {
  if (cls.kind != EdgeClass::Kind::loop) return to_string(cls.kind);
  std::string s = cls.triviality == EdgeClass::Triviality::trivial ? "trivial " : "nontrivial ";
  s += cls.twist == Twist::twisted ? "twisted " : "untwisted ";
  return s + "self-loop";
}

std::vector<Stub> canonical_rotation(const std::vector<Stub>& seq) {
  if (seq.empty()) return seq;
  std::size_t best = 0;
  std::string best_text = seq[0].text();
  for (std::size_t i = 1; i < seq.size(); ++i) {
    std::string t = seq[i].text();
    if (t < best_text) {
      best = i;
      best_text = std::move(t);
    }
  }
  return rotated(seq, best);
}

RibbonGraph parse_graph(std::string_view text) {
  std::string name;
  std::map<std::string, Twist> edges;
  std::vector<std::string> flag_order;
  std::set<std::string> flags;
  std::vector<Vertex> vertices;
  std::set<std::string> vertex_ids;
  std::map<std::string, std::size_t> placed;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    // '/' separates logical lines, so one-line inline graphs are accepted too.
    std::size_t seg_start = 0;
    while (seg_start <= raw.size()) {
      std::size_t slash = raw.find('/', seg_start);
      if (slash == std::string_view::npos) slash = raw.size();
      std::string_view line = trim(raw.substr(seg_start, slash - seg_start));
      seg_start = slash + 1;
      if (line.empty()) continue;

      if (line.starts_with("graph") && (line.size() == 5 || std::isspace(static_cast<unsigned char>(line[5])))) {
        auto toks = split_ws(line.substr(5));
        if (toks.size() > 1) throw ParseError(line_no, "graph name must be a single token");
        if (!toks.empty()) name = std::string(toks[0]);
      } else if (line.starts_with("edges:")) {
        for (auto tok : split_ws(line.substr(6))) {
          auto colon = tok.rfind(':');
          if (colon == std::string_view::npos) throw ParseError(line_no, "edge '" + std::string(tok) + "' lacks a sign");
          std::string id(tok.substr(0, colon));
          std::string_view sign = tok.substr(colon + 1);
          if (!valid_id(id)) throw ParseError(line_no, "invalid edge id '" + id + "'");
          Twist t;
          if (sign == "+") {
            t = Twist::untwisted;
          } else if (sign == "-") {
            t = Twist::twisted;
          } else {
            throw ParseError(line_no, "unknown sign token '" + std::string(sign) + "' for edge '" + id + "'");
          }
          if (!edges.emplace(id, t).second || flags.count(id)) throw ParseError(line_no, "duplicate id '" + id + "'");
        }
      } else if (line.starts_with("flags:")) {
        for (auto tok : split_ws(line.substr(6))) {
          std::string id(tok);
          if (!valid_id(id)) throw ParseError(line_no, "invalid flag id '" + id + "'");
          if (!flags.insert(id).second || edges.count(id)) throw ParseError(line_no, "duplicate id '" + id + "'");
          flag_order.push_back(id);
        }
      } else if (line.starts_with("vertex") && line.size() > 6 && std::isspace(static_cast<unsigned char>(line[6]))) {
        std::string_view rest = trim(line.substr(6));
        auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, "vertex line lacks ':'");
        std::string id(trim(rest.substr(0, colon)));
        if (!valid_id(id)) throw ParseError(line_no, "invalid vertex id '" + id + "'");
        if (!vertex_ids.insert(id).second) throw ParseError(line_no, "duplicate id '" + id + "'");
        Vertex v{id, {}};
        for (auto tok : split_ws(rest.substr(colon + 1))) {
          Stub s;
          auto dot = tok.find('.');
          if (dot != std::string_view::npos) {
            std::string e(tok.substr(0, dot));
            std::string_view end = tok.substr(dot + 1);
            if (end != "a" && end != "b") throw ParseError(line_no, "bad edge end '" + std::string(tok) + "'");
            if (!edges.count(e)) throw ParseError(line_no, "edge '" + e + "' is not declared");
            s = Stub::edge(e, end == "a" ? End::a : End::b);
          } else {
            std::string f(tok);
            if (!flags.count(f)) throw ParseError(line_no, "flag '" + f + "' is not declared");
            s = Stub::flag(f);
          }
          if (placed[s.text()]++ > 0) throw ParseError(line_no, "stub '" + s.text() + "' is repeated");
          v.rotation.push_back(std::move(s));
        }
        vertices.push_back(std::move(v));
      } else {
        throw ParseError(line_no, "unrecognised line '" + std::string(line) + "'");
      }
    }
  }

  for (const auto& [e, t] : edges) {
    for (const char* end : {".a", ".b"}) {
      if (!placed.count(e + end)) throw ParseError(line_no, "edge end " + e + end + " is unplaced");
    }
  }
  for (const auto& f : flag_order) {
    if (!placed.count(f)) throw ParseError(line_no, "flag '" + f + "' is declared but unplaced");
  }
  try {
    return RibbonGraph(std::move(vertices), std::move(edges), std::move(flags), std::move(name));
  } catch (const GraphError& err) {
    throw ParseError(line_no, err.what());
  }
}

std::string serialize_graph(const RibbonGraph& g) {
  std::ostringstream out;
  if (!g.name().empty()) out << "graph " << g.name() << '\n';
  out << "edges:";
  for (const auto& [e, t] : g.edges()) out << ' ' << e << (t == Twist::twisted ? ":-" : ":+");
  out << "\nflags:";
  for (const auto& f : g.flags()) out << ' ' << f;
  out << '\n';
  std::vector<const Vertex*> order;
  for (const auto& v : g.vertices()) order.push_back(&v);
  std::sort(order.begin(), order.end(), [](const Vertex* a, const Vertex* b) { return a->id < b->id; });
  for (const Vertex* v : order) {
    out << "vertex " << v->id << ':';
    for (const auto& s : canonical_rotation(v->rotation)) out << ' ' << s.text();
    out << '\n';
  }
  return out.str();
}

std::pair<std::string, std::string> cut_flag_ids(const RibbonGraph& g, const std::string& edge) {
  return {g.fresh_id(edge + "_a"), g.fresh_id(edge + "_b")};
}

RibbonGraph cut_edge(const RibbonGraph& g, const std::string& edge) {
  if (!g.has_edge(edge)) throw GraphError("unknown edge '" + edge + "'");
  auto [fa, fb] = cut_flag_ids(g, edge);
  auto vertices = g.vertices();
  for (auto& v : vertices) {
    for (auto& s : v.rotation) {
      if (s.is_edge_end() && s.id == edge) s = Stub::flag(s.end == End::a ? fa : fb);
    }
  }
  auto edges = g.edges();
  edges.erase(edge);
  auto flags = g.flags();
  flags.insert(fa);
  flags.insert(fb);
  return RibbonGraph(std::move(vertices), std::move(edges), std::move(flags), g.name());
}

RibbonGraph delete_edge(const RibbonGraph& g, const std::string& edge) {
  if (!g.has_edge(edge)) throw GraphError("unknown edge '" + edge + "'");
  auto vertices = g.vertices();
  for (auto& v : vertices) {
    std::erase_if(v.rotation, [&](const Stub& s) { return s.is_edge_end() && s.id == edge; });
  }
  auto edges = g.edges();
  edges.erase(edge);
  return RibbonGraph(std::move(vertices), std::move(edges), g.flags(), g.name());
}

RibbonGraph flip_vertex(const RibbonGraph& g, const std::string& vertex) {
  auto vi = g.vertex_index(vertex);
  if (!vi) throw GraphError("unknown vertex '" + vertex + "'");
  auto vertices = g.vertices();
  auto& rot = vertices[*vi].rotation;
  std::reverse(rot.begin(), rot.end());
  auto edges = g.edges();
  std::map<std::string, int> ends_here;
  for (const auto& s : rot) {
    if (s.is_edge_end()) ++ends_here[s.id];
  }
  for (const auto& [e, count] : ends_here) {
    if (count == 1) edges[e] = toggled(edges[e]);
  }
  return RibbonGraph(std::move(vertices), std::move(edges), g.flags(), g.name());
}

EdgeClass classify_edge(const RibbonGraph& g, const std::string& edge) {
  EdgeClass cls;
  cls.twist = g.twist(edge);
  const auto la = g.locate_end(edge, End::a);
  const auto lb = g.locate_end(edge, End::b);
  const std::size_t n = g.vertex_count();

  if (la.vertex == lb.vertex) {
    cls.kind = EdgeClass::Kind::loop;
    // Split the loop's vertex into its two sectors; node n stands for the
    // sector running from e.b round to e.a.
    const auto& rot = g.vertices()[la.vertex].rotation;
    const std::size_t len = rot.size();
    std::vector<bool> in_second(len, false);
    for (std::size_t i = (lb.position + 1) % len; i != la.position; i = (i + 1) % len) in_second[i] = true;
    auto node_of = [&](const StubLocation& loc) -> std::size_t {
      if (loc.vertex == la.vertex && in_second[loc.position]) return n;
      return loc.vertex;
    };
    detail::UnionFind uf(n + 1);
    for (const auto& [e, t] : g.edges()) {
      if (e == edge) continue;
      uf.unite(node_of(g.locate_end(e, End::a)), node_of(g.locate_end(e, End::b)));
    }
    cls.triviality = uf.find(la.vertex) != uf.find(n) ? EdgeClass::Triviality::trivial
                                                      : EdgeClass::Triviality::nontrivial;
    return cls;
  }

  detail::UnionFind uf(n);
  for (const auto& [e, t] : g.edges()) {
    if (e == edge) continue;
    uf.unite(g.locate_end(e, End::a).vertex, g.locate_end(e, End::b).vertex);
  }
  cls.kind = uf.find(la.vertex) != uf.find(lb.vertex) ? EdgeClass::Kind::bridge : EdgeClass::Kind::regular;
  return cls;
}

RibbonGraph contract_edge(const RibbonGraph& g, const std::string& edge) {
  if (!g.has_edge(edge)) throw GraphError("unknown edge '" + edge + "'");

  if (g.is_loop(edge)) {
    const EdgeClass cls = classify_edge(g, edge);
    if (cls.triviality != EdgeClass::Triviality::trivial) {
      throw GraphError("contraction of the nontrivial loop '" + edge + "' is not supported");
    }
    if (cls.twist == Twist::twisted) return delete_edge(g, edge);

    // Untwisted trivial loop: the vertex [e.a A e.b B] becomes [A] and [B].
    const auto la = g.locate_end(edge, End::a);
    const auto lb = g.locate_end(edge, End::b);
    const auto& rot = g.vertices()[la.vertex].rotation;
    const std::size_t len = rot.size();
    Vertex first{g.vertices()[la.vertex].id, {}};
    Vertex second{g.fresh_id(edge + "_v"), {}};
    for (std::size_t i = (la.position + 1) % len; i != lb.position; i = (i + 1) % len) first.rotation.push_back(rot[i]);
    for (std::size_t i = (lb.position + 1) % len; i != la.position; i = (i + 1) % len) second.rotation.push_back(rot[i]);
    auto vertices = g.vertices();
    vertices[la.vertex] = std::move(first);
    vertices.insert(vertices.begin() + static_cast<std::ptrdiff_t>(la.vertex) + 1, std::move(second));
    auto edges = g.edges();
    edges.erase(edge);
    return RibbonGraph(std::move(vertices), std::move(edges), g.flags(), g.name());
  }

  RibbonGraph h = g;
  if (g.twist(edge) == Twist::twisted) {
    h = flip_vertex(g, g.vertices()[g.locate_end(edge, End::b).vertex].id);
  }
  const auto la = h.locate_end(edge, End::a);
  const auto lb = h.locate_end(edge, End::b);
  const auto& r1 = h.vertices()[la.vertex].rotation;
  const auto& r2 = h.vertices()[lb.vertex].rotation;
  Vertex merged{h.vertices()[la.vertex].id, {}};
  for (std::size_t i = 1; i < r1.size(); ++i) merged.rotation.push_back(r1[(la.position + i) % r1.size()]);
  for (std::size_t i = 1; i < r2.size(); ++i) merged.rotation.push_back(r2[(lb.position + i) % r2.size()]);

  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < h.vertex_count(); ++i) {
    if (i == la.vertex) {
      vertices.push_back(merged);
    } else if (i != lb.vertex) {
      vertices.push_back(h.vertices()[i]);
    }
  }
  auto edges = h.edges();
  edges.erase(edge);
  return RibbonGraph(std::move(vertices), std::move(edges), h.flags(), g.name());
}

RibbonGraph disjoint_union(const RibbonGraph& g1, const RibbonGraph& g2) {
  auto [h2, prefix] = namespaced(g1, g2);
  auto vertices = g1.vertices();
  vertices.insert(vertices.end(), h2.vertices().begin(), h2.vertices().end());
  auto edges = g1.edges();
  edges.insert(h2.edges().begin(), h2.edges().end());
  auto flags = g1.flags();
  flags.insert(h2.flags().begin(), h2.flags().end());
  return RibbonGraph(std::move(vertices), std::move(edges), std::move(flags), g1.name());
}

RibbonGraph one_point_join(const RibbonGraph& g1, const std::string& v1, const RibbonGraph& g2,
                           const std::string& v2, std::size_t slot1, std::size_t slot2) {
  auto i1 = g1.vertex_index(v1);
  auto i2 = g2.vertex_index(v2);
  if (!i1) throw GraphError("unknown vertex '" + v1 + "'");
  if (!i2) throw GraphError("unknown vertex '" + v2 + "'");
  const auto& r1 = g1.vertices()[*i1].rotation;
  const auto& r2 = g2.vertices()[*i2].rotation;
  if (slot1 >= std::max<std::size_t>(r1.size(), 1) || slot2 >= std::max<std::size_t>(r2.size(), 1)) {
    throw GraphError("join slot out of range");
  }
  auto [h2, prefix] = namespaced(g1, g2);
  Vertex merged{v1, r1.empty() ? r1 : rotated(r1, slot1)};
  const auto& hr2 = h2.vertices()[*i2].rotation;
  auto tail = hr2.empty() ? hr2 : rotated(hr2, slot2);
  merged.rotation.insert(merged.rotation.end(), tail.begin(), tail.end());

  auto vertices = g1.vertices();
  vertices[*i1] = std::move(merged);
  for (std::size_t i = 0; i < h2.vertex_count(); ++i) {
    if (i != *i2) vertices.push_back(h2.vertices()[i]);
  }
  auto edges = g1.edges();
  edges.insert(h2.edges().begin(), h2.edges().end());
  auto flags = g1.flags();
  flags.insert(h2.flags().begin(), h2.flags().end());
  return RibbonGraph(std::move(vertices), std::move(edges), std::move(flags), g1.name());
}

std::size_t component_count(const RibbonGraph& g) {
  detail::UnionFind uf(g.vertex_count());
  for (const auto& [e, t] : g.edges()) uf.unite(g.locate_end(e, End::a).vertex, g.locate_end(e, End::b).vertex);
  return uf.sets();
}

std::vector<RibbonGraph> components(const RibbonGraph& g) {
  detail::UnionFind uf(g.vertex_count());
  for (const auto& [e, t] : g.edges()) uf.unite(g.locate_end(e, End::a).vertex, g.locate_end(e, End::b).vertex);
  std::map<std::size_t, std::size_t> slot_of_root;
  std::vector<std::vector<Vertex>> groups;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    auto [it, fresh] = slot_of_root.emplace(uf.find(i), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(g.vertices()[i]);
  }
  std::vector<RibbonGraph> out;
  for (auto& vs : groups) {
    std::map<std::string, Twist> edges;
    std::set<std::string> flags;
    for (const auto& v : vs) {
      for (const auto& s : v.rotation) {
        if (s.is_flag()) {
          flags.insert(s.id);
        } else {
          edges.emplace(s.id, g.twist(s.id));
        }
      }
    }
    out.emplace_back(std::move(vs), std::move(edges), std::move(flags), g.name());
  }
  return out;
}

RibbonGraph remove_flag(const RibbonGraph& g, const std::string& flag) {
  if (!g.has_flag(flag)) throw GraphError("unknown flag '" + flag + "'");
  auto vertices = g.vertices();
  for (auto& v : vertices) std::erase_if(v.rotation, [&](const Stub& s) { return s.is_flag() && s.id == flag; });
  auto flags = g.flags();
  flags.erase(flag);
  return RibbonGraph(std::move(vertices), g.edges(), std::move(flags), g.name());
}

RibbonGraph insert_flag(const RibbonGraph& g, const std::string& flag, const std::string& vertex,
                        std::size_t position) {
  auto vi = g.vertex_index(vertex);
  if (!vi) throw GraphError("unknown vertex '" + vertex + "'");
  if (g.id_in_use(flag)) throw GraphError("id '" + flag + "' already in use");
  auto vertices = g.vertices();
  auto& rot = vertices[*vi].rotation;
  if (position > rot.size()) throw GraphError("flag slot out of range");
  rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(position), Stub::flag(flag));
  auto flags = g.flags();
  flags.insert(flag);
  return RibbonGraph(std::move(vertices), g.edges(), std::move(flags), g.name());
}

}  // namespace ribbon
