#include "ribbon/flags.hpp"

#include <deque>
#include <map>
#include <unordered_map>

#include "compact.hpp"
#include "ribbon/invariants.hpp"

namespace ribbon {
namespace {

std::string state_key(const RibbonGraph& g) {
  std::string s = serialize_graph(g);
  if (s.starts_with("graph ")) s.erase(0, s.find('\n') + 1);
  return s;
}

struct Corner {
  std::size_t vertex;
  std::size_t position;
  int face;  // -1 for a bare vertex
};

// Corners of g with their faces, in vertex then slot order.
std::vector<Corner> corners(const RibbonGraph& g, const detail::FaceLabels& labels) {
  std::vector<Corner> out;
  int base = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto len = g.vertices()[v].rotation.size();
    if (len == 0) {
      out.push_back({v, 0, -1});
      continue;
    }
    for (std::size_t p = 0; p < len; ++p) {
      out.push_back({v, p, labels.face_of_node[2 * (base + static_cast<int>(p))]});
    }
    base += static_cast<int>(len);
  }
  return out;
}

}  // namespace

std::string to_string(FlagMove::Kind kind) {
  return kind == FlagMove::Kind::displacement ? "displacement" : "jump";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      break;
  }
  return "unknown";
}

RibbonGraph apply_move(const RibbonGraph& g, const FlagMove& move) {
  return insert_flag(remove_flag(g, move.flag), move.flag, move.target.vertex, move.target.position);
}

std::vector<FlagMove> legal_flag_moves(const RibbonGraph& g, MoveMode mode) {
  std::vector<FlagMove> out;
  const auto before = basic_invariants(g);
  for (const auto& f : g.flags()) {
    const auto loc = g.locate(Stub::flag(f));
    const RibbonGraph rest = remove_flag(g, f);
    const auto labels = detail::label_faces(detail::compact(rest));
    const auto all = corners(rest, labels);

    const std::size_t source_len = rest.vertices()[loc.vertex].rotation.size();
    const std::size_t source_pos = source_len == 0 ? 0 : loc.position % source_len;
    int source_face = -1;
    for (const auto& k : all) {
      if (k.vertex == loc.vertex && k.position == source_pos) source_face = k.face;
    }
    const bool source_keeps_flag = source_face >= 0 && labels.open[source_face];

    for (const auto& k : all) {
      if (k.vertex == loc.vertex && k.position == source_pos) continue;
      FlagMove mv{f,
                  {g.vertices()[loc.vertex].id, source_pos},
                  {rest.vertices()[k.vertex].id, k.position},
                  FlagMove::Kind::displacement};
      const bool same_face = k.face >= 0 && k.face == source_face;
      mv.kind = same_face ? FlagMove::Kind::displacement : FlagMove::Kind::jump;
      bool legal = false;
      if (mode == MoveMode::strict) {
        legal = same_face || (k.face >= 0 && labels.open[k.face] && source_keeps_flag);
      } else {
        const auto after = basic_invariants(apply_move(g, mv));
        legal = after.closed_faces == before.closed_faces && after.boundary_components == before.boundary_components;
      }
      if (legal) out.push_back(std::move(mv));
    }
  }
  return out;
}

EquivalenceResult flag_equivalent(const RibbonGraph& g1, const RibbonGraph& g2, std::size_t budget, MoveMode mode) {
  EquivalenceResult res;
  if (basic_invariants(g1) != basic_invariants(g2) || g1.flags() != g2.flags() || g1.edges() != g2.edges()) {
    res.verdict = Verdict::no;
    return res;
  }
  const std::string goal = state_key(g2);
  const std::string start = state_key(g1);

  struct Visit {
    std::string parent;
    FlagMove move;
  };
  std::unordered_map<std::string, Visit> visited;
  visited.emplace(start, Visit{});
  auto finish = [&](const std::string& key) {
    std::vector<FlagMove> path;
    for (std::string at = key; at != start;) {
      const auto& v = visited.at(at);
      path.push_back(v.move);
      at = v.parent;
    }
    res.witness.assign(path.rbegin(), path.rend());
    res.verdict = Verdict::yes;
    res.states = visited.size();
    return res;
  };
  if (start == goal) return finish(start);

  std::deque<std::pair<std::string, RibbonGraph>> frontier;
  frontier.emplace_back(start, g1);
  while (!frontier.empty()) {
    auto [key, g] = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& mv : legal_flag_moves(g, mode)) {
      RibbonGraph next = apply_move(g, mv);
      std::string next_key = state_key(next);
      if (visited.count(next_key)) continue;
      visited.emplace(next_key, Visit{key, mv});
      if (next_key == goal) return finish(next_key);
      if (visited.size() >= budget) {
        res.verdict = Verdict::unknown;
        res.states = visited.size();
        return res;
      }
      frontier.emplace_back(std::move(next_key), std::move(next));
    }
  }
  res.verdict = Verdict::no;
  res.states = visited.size();
  return res;
}

FlagClass flag_class(const RibbonGraph& g) { return {g, basic_invariants(g)}; }

BRPoly class_polynomial(const RibbonGraph& g) { return state_sum_r(g); }

}  // namespace ribbon
