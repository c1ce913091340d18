#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ribbon/graph.hpp"
#include "ribbon/poly.hpp"

namespace ribbon {

struct StateSumOptions {
  bool parallel = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Sum over all spanning c-subgraphs. Limited to 63 edges.
BRPoly state_sum_r(const RibbonGraph& g, const StateSumOptions& options = {});

// Cut/contraction recursion down to edgeless graphs. Rosettes that carry only
// nontrivial loops are handed to the state sum.
BRPoly recurrence_r(const RibbonGraph& g);

// S -> 1/Z applied to the state sum.
BRPoly r_prime(const RibbonGraph& g);

// Classical polynomial of a flagless graph in (X-1), (Y-1), Z, W, summing over
// spanning subgraphs with edges deleted. Throws GraphError if g has flags.
BRPoly br_oracle_closed(const RibbonGraph& g);

// Rank-nullity Tutte polynomial of the underlying abstract multigraph, in
// (X-1), (Y-1). Deletion-contraction on an edge list.
BRPoly tutte_oracle(const RibbonGraph& g);

BRPoly coeff_rijklm(const RibbonGraph& g, int i, int j, int k, int l, int m);

using Evaluator = std::function<BRPoly(const RibbonGraph&)>;

struct EdgeIdentity {
  std::string edge;
  EdgeClass cls;
  std::string rule;  // "regular", "bridge", "twisted-loop", "untwisted-loop", "none"
  bool applicable = false;
  bool holds = false;
};

// Checks the cut/contraction identity that applies to `edge`. Nontrivial
// loops have none and come back with applicable = false.
EdgeIdentity check_edge_identity(const RibbonGraph& g, const std::string& edge,
                                 const Evaluator& eval = [](const RibbonGraph& h) { return state_sum_r(h); });

}  // namespace ribbon
