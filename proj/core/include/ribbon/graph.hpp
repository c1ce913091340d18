#pragma once

// Ribbon graphs with flags, stored as signed rotation systems.
//
// A vertex is a disc whose boundary carries a cyclic sequence of stubs. A stub
// is either one end of an edge (a band glued to two stubs, possibly on the
// same vertex) or a flag (a band glued to one stub with a free outer segment).
// Rotations are read counterclockwise. Edges carry a twist bit.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ribbon {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class Twist : std::uint8_t { untwisted, twisted };
enum class End : std::uint8_t { a, b };

inline Twist toggled(Twist t) {
  return t == Twist::twisted ? Twist::untwisted : Twist::twisted;
}
inline End other(End e) { return e == End::a ? End::b : End::a; }

struct Stub {
  enum class Kind : std::uint8_t { edge_end, flag };

  Kind kind = Kind::flag;
  std::string id;
  End end = End::a;

  static Stub edge(std::string id, End end) { return {Kind::edge_end, std::move(id), end}; }
  static Stub flag(std::string id) { return {Kind::flag, std::move(id), End::a}; }

  bool is_flag() const { return kind == Kind::flag; }
  bool is_edge_end() const { return kind == Kind::edge_end; }
  // "e1.a", "e1.b" or the bare flag id.
  std::string text() const;

  friend bool operator==(const Stub&, const Stub&) = default;
};

struct Vertex {
  std::string id;
  std::vector<Stub> rotation;
};

// Position of a stub: vertex index into RibbonGraph::vertices() and slot index
// into that vertex's rotation.
struct StubLocation {
  std::size_t vertex = 0;
  std::size_t position = 0;
  friend bool operator==(const StubLocation&, const StubLocation&) = default;
};

class RibbonGraph {
 public:
  RibbonGraph() = default;
  // Validates every structural invariant; throws GraphError on violation.
  RibbonGraph(std::vector<Vertex> vertices, std::map<std::string, Twist> edges,
              std::set<std::string> flags, std::string name = {});

  const std::string& name() const { return name_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::map<std::string, Twist>& edges() const { return edges_; }
  const std::set<std::string>& flags() const { return flags_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t flag_count() const { return flags_.size(); }

  bool has_edge(const std::string& id) const { return edges_.count(id) != 0; }
  bool has_flag(const std::string& id) const { return flags_.count(id) != 0; }
  Twist twist(const std::string& edge) const;
  std::optional<std::size_t> vertex_index(const std::string& id) const;

  StubLocation locate(const Stub& stub) const;
  StubLocation locate_end(const std::string& edge, End end) const {
    return locate(Stub::edge(edge, end));
  }
  bool is_loop(const std::string& edge) const;

  // Ids already used in any namespace; fresh ids avoid all of them.
  bool id_in_use(const std::string& id) const;
  std::string fresh_id(const std::string& base) const;

  // Equality up to rotation of each vertex's cyclic sequence. Names ignored.
  friend bool operator==(const RibbonGraph& lhs, const RibbonGraph& rhs);

 private:
  std::string name_;
  std::vector<Vertex> vertices_;
  std::map<std::string, Twist> edges_;
  std::set<std::string> flags_;
  std::map<std::string, StubLocation> where_;
};

struct EdgeClass {
  enum class Kind : std::uint8_t { regular, bridge, loop };
  enum class Triviality : std::uint8_t { trivial, nontrivial };

  Kind kind = Kind::regular;
  Twist twist = Twist::untwisted;
  // Only meaningful for loops.
  Triviality triviality = Triviality::nontrivial;

  bool is_trivial_loop() const {
    return kind == Kind::loop && triviality == Triviality::trivial;
  }
  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

std::string to_string(EdgeClass::Kind kind);
std::string describe(const EdgeClass& cls);

RibbonGraph parse_graph(std::string_view text);
std::string serialize_graph(const RibbonGraph& g);

// Rotation of `seq` starting at its lexicographically least stub.
std::vector<Stub> canonical_rotation(const std::vector<Stub>& seq);

RibbonGraph cut_edge(const RibbonGraph& g, const std::string& edge);
RibbonGraph delete_edge(const RibbonGraph& g, const std::string& edge);
RibbonGraph contract_edge(const RibbonGraph& g, const std::string& edge);
EdgeClass classify_edge(const RibbonGraph& g, const std::string& edge);

// Fresh flag ids created when cutting `edge` (end a, end b). Deterministic in
// the graph's id sets, so cutting the same edge of two graphs with the same
// ids yields identically named flags.
std::pair<std::string, std::string> cut_flag_ids(const RibbonGraph& g, const std::string& edge);

// Reverse the rotation at a vertex and toggle every non-loop edge incident to
// it. Face structure is unchanged.
RibbonGraph flip_vertex(const RibbonGraph& g, const std::string& vertex);

RibbonGraph disjoint_union(const RibbonGraph& g1, const RibbonGraph& g2);
RibbonGraph one_point_join(const RibbonGraph& g1, const std::string& v1, const RibbonGraph& g2,
                           const std::string& v2, std::size_t slot1, std::size_t slot2);

// Number of connected components; flags never connect vertices.
std::size_t component_count(const RibbonGraph& g);
// Connected components as standalone graphs, ordered by least vertex index.
std::vector<RibbonGraph> components(const RibbonGraph& g);

// Add or remove a flag at an explicit slot (insert before `position`).
RibbonGraph remove_flag(const RibbonGraph& g, const std::string& flag);
RibbonGraph insert_flag(const RibbonGraph& g, const std::string& flag, const std::string& vertex,
                        std::size_t position);

}  // namespace ribbon
