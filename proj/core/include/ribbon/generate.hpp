#pragma once

#include <cstdint>

#include "ribbon/graph.hpp"

namespace ribbon {

struct GenerateOptions {
  int vertices = 1;
  int edges = 0;
  int flags = 0;
  double twist_prob = 0.0;
  // Spanning tree first when there are enough edges.
  bool connected = true;
};

// Vertices v1.., edges e1.., flags f1.., rotations shuffled. Same seed, same
// graph.
RibbonGraph random_graph(const GenerateOptions& options, std::uint64_t seed);

}  // namespace ribbon
