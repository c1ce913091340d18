#pragma once

// Surface topology of a ribbon graph with flags.

#include <string>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon {

enum class Side : std::uint8_t { before = 0, after = 1 };

struct Strand {
  std::string stub;  // Stub::text()
  Side side = Side::before;
  friend bool operator==(const Strand&, const Strand&) = default;
};

// One boundary component. Closed walks never cross the free segment of a flag.
struct BoundaryWalk {
  std::vector<Strand> strands;
  std::vector<std::string> flags;  // in traversal order
  bool open() const { return !flags.empty(); }
};

struct BoundaryReport {
  std::vector<BoundaryWalk> walks;
  int closed_faces = 0;         // F_int
  int boundary_components = 0;  // C_bnd
};

// One cyclic flag sequence per open face, least flag first, components sorted.
struct BoundaryGraph {
  std::vector<std::vector<std::string>> components;
};

struct InvariantTuple {
  int vertices = 0;
  int edges = 0;
  int flags = 0;
  int components = 0;
  int rank = 0;
  int nullity = 0;
  int closed_faces = 0;
  int boundary_components = 0;
  int nonorientable = 0;  // t

  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

// Walks start at the lexicographically least unvisited (stub, side) and cross
// the band first. A bare vertex contributes one closed walk with no strands.
BoundaryReport trace_boundary(const RibbonGraph& g);
BoundaryGraph boundary_graph(const RibbonGraph& g);
int orientability(const RibbonGraph& g);
InvariantTuple basic_invariants(const RibbonGraph& g);

// Spanning c-subgraph: every edge outside `keep` is cut.
RibbonGraph realize_csubgraph(const RibbonGraph& g, const std::set<std::string>& keep);

std::string to_json(const InvariantTuple& inv, const BoundaryGraph& boundary);

}  // namespace ribbon
