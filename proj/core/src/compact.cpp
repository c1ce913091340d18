#include "compact.hpp"

#include <map>

namespace ribbon::detail {

CompactGraph compact(const RibbonGraph& g) {
  CompactGraph c;
  c.vertex_count = static_cast<int>(g.vertex_count());
  c.flag_count = static_cast<int>(g.flag_count());
  std::map<std::string, int> edge_index;
  for (const auto& [e, t] : g.edges()) {
    edge_index.emplace(e, static_cast<int>(c.edge_ids.size()));
    c.edge_ids.push_back(e);
    c.twisted.push_back(t == Twist::twisted ? 1 : 0);
  }
  c.edge_count = static_cast<int>(c.edge_ids.size());
  c.edge_ends.assign(c.edge_count, {-1, -1});
  c.edge_vertices_a.assign(c.edge_count, -1);
  c.edge_vertices_b.assign(c.edge_count, -1);

  for (int v = 0; v < c.vertex_count; ++v) {
    const auto& rot = g.vertices()[v].rotation;
    if (rot.empty()) {
      ++c.bare_vertices;
      continue;
    }
    const int base = c.stub_count();
    const int len = static_cast<int>(rot.size());
    for (int p = 0; p < len; ++p) {
      const Stub& s = rot[p];
      const int id = base + p;
      c.vertex_of_stub.push_back(v);
      c.next_stub.push_back(base + (p + 1) % len);
      c.prev_stub.push_back(base + (p + len - 1) % len);
      c.stub_text.push_back(s.text());
      if (s.is_flag()) {
        c.edge_of_stub.push_back(-1);
      } else {
        const int e = edge_index.at(s.id);
        c.edge_of_stub.push_back(e);
        c.edge_ends[e][s.end == End::a ? 0 : 1] = id;
        (s.end == End::a ? c.edge_vertices_a : c.edge_vertices_b)[e] = v;
      }
    }
  }
  c.mate.assign(c.stub_count(), -1);
  for (int e = 0; e < c.edge_count; ++e) {
    c.mate[c.edge_ends[e][0]] = c.edge_ends[e][1];
    c.mate[c.edge_ends[e][1]] = c.edge_ends[e][0];
  }
  return c;
}

namespace {

int find_root(std::vector<int>& parent, std::vector<int>& parity, int x, int& acc) {
  acc = 0;
  while (parent[x] != x) {
    acc ^= parity[x];
    x = parent[x];
  }
  return x;
}

}  // namespace

SubsetTopology measure(const CompactGraph& g, std::uint64_t keep, MeasureScratch& s) {
  SubsetTopology out;
  const int stubs = g.stub_count();
  const int nodes = 2 * stubs;
  s.band.resize(nodes);
  s.open_band.assign(nodes, 0);
  s.seen.assign(nodes, 0);

  for (int st = 0; st < stubs; ++st) {
    const int e = g.edge_of_stub[st];
    if (e < 0 || !((keep >> e) & 1U)) {
      // Flag, or an edge that has been cut: the band runs out to a free
      // segment and comes straight back on the other side.
      s.band[2 * st] = 2 * st + 1;
      s.band[2 * st + 1] = 2 * st;
      s.open_band[2 * st] = s.open_band[2 * st + 1] = 1;
    } else {
      const int m = g.mate[st];
      if (g.twisted[e]) {
        s.band[2 * st] = 2 * m;
        s.band[2 * st + 1] = 2 * m + 1;
      } else {
        s.band[2 * st] = 2 * m + 1;
        s.band[2 * st + 1] = 2 * m;
      }
    }
  }

  // Faces: alternate band and arc moves. The arc from side 1 of a stub runs
  // to side 0 of its successor, and back.
  for (int start = 0; start < nodes; ++start) {
    if (s.seen[start]) continue;
    bool open = false;
    int node = start;
    do {
      s.seen[node] = 1;
      open |= s.open_band[node] != 0;
      node = s.band[node];
      s.seen[node] = 1;
      const int st = node >> 1;
      node = (node & 1) ? 2 * g.next_stub[st] : 2 * g.prev_stub[st] + 1;
    } while (node != start);
    if (open) {
      ++out.boundary_components;
    } else {
      ++out.closed_faces;
    }
  }
  out.closed_faces += g.bare_vertices;

  // Components and orientability with a parity union-find.
  s.parent.resize(g.vertex_count);
  s.parity.assign(g.vertex_count, 0);
  for (int v = 0; v < g.vertex_count; ++v) s.parent[v] = v;
  int components = g.vertex_count;
  for (int e = 0; e < g.edge_count; ++e) {
    if (!((keep >> e) & 1U)) continue;
    ++out.kept_edges;
    int pa = 0;
    int pb = 0;
    const int ra = find_root(s.parent, s.parity, g.edge_vertices_a[e], pa);
    const int rb = find_root(s.parent, s.parity, g.edge_vertices_b[e], pb);
    const int want = g.twisted[e];
    if (ra == rb) {
      if ((pa ^ pb) != want) out.nonorientable = 1;
    } else {
      s.parent[rb] = ra;
      s.parity[rb] = pa ^ pb ^ want;
      --components;
    }
  }
  out.components = components;
  return out;
}

FaceLabels label_faces(const CompactGraph& g) {
  FaceLabels out;
  const int nodes = 2 * g.stub_count();
  out.face_of_node.assign(nodes, -1);
  for (int start = 0; start < nodes; ++start) {
    if (out.face_of_node[start] >= 0) continue;
    const int face = static_cast<int>(out.open.size());
    bool open = false;
    int node = start;
    do {
      out.face_of_node[node] = face;
      const int st = node >> 1;
      const int e = g.edge_of_stub[st];
      if (e < 0) {
        open = true;
        node ^= 1;
      } else {
        const int m = g.mate[st];
        node = g.twisted[e] ? 2 * m + (node & 1) : 2 * m + 1 - (node & 1);
      }
      out.face_of_node[node] = face;
      const int at = node >> 1;
      node = (node & 1) ? 2 * g.next_stub[at] : 2 * g.prev_stub[at] + 1;
    } while (node != start);
    out.open.push_back(open ? 1 : 0);
  }
  return out;
}

SubsetTopology measure(const CompactGraph& g, std::uint64_t keep) {
  MeasureScratch scratch;
  return measure(g, keep, scratch);
}

}  // namespace ribbon::detail
