#pragma once

// Index-based view of a RibbonGraph for the hot loops (boundary tracing over
// every spanning c-subgraph). Boundary nodes are (stub, side) pairs numbered
// 2*stub + side; side 0 is the corner before the stub in the rotation, side 1
// the corner after it.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon::detail {

struct CompactGraph {
  int vertex_count = 0;
  int edge_count = 0;
  int flag_count = 0;
  int bare_vertices = 0;  // vertices with an empty rotation

  std::vector<int> vertex_of_stub;
  std::vector<int> next_stub;  // successor in the rotation
  std::vector<int> prev_stub;
  std::vector<int> edge_of_stub;  // -1 for flags
  std::vector<int> mate;          // other end of the edge, -1 for flags
  std::vector<std::uint8_t> twisted;        // per edge
  std::vector<std::array<int, 2>> edge_ends;  // per edge: stub of end a, end b
  std::vector<int> edge_vertices_a, edge_vertices_b;

  std::vector<std::string> stub_text;
  std::vector<std::string> edge_ids;  // sorted, index = edge number

  int stub_count() const { return static_cast<int>(vertex_of_stub.size()); }
};

CompactGraph compact(const RibbonGraph& g);

struct SubsetTopology {
  int components = 0;
  int closed_faces = 0;
  int boundary_components = 0;
  int nonorientable = 0;
  int kept_edges = 0;
};

// Topology of the spanning c-subgraph keeping the edges whose bit is set in
// `keep`; every other edge counts as cut (its two stubs become flags).
SubsetTopology measure(const CompactGraph& g, std::uint64_t keep);

// Same, but with caller-provided scratch buffers to avoid allocation.
struct MeasureScratch {
  std::vector<int> band;
  std::vector<std::uint8_t> open_band;
  std::vector<std::uint8_t> seen;
  std::vector<int> parent;
  std::vector<int> parity;
};
SubsetTopology measure(const CompactGraph& g, std::uint64_t keep, MeasureScratch& scratch);

// Face id of every boundary node of the full graph, and whether each face
// passes a flag.
struct FaceLabels {
  std::vector<int> face_of_node;
  std::vector<std::uint8_t> open;
};
FaceLabels label_faces(const CompactGraph& g);

}  // namespace ribbon::detail
