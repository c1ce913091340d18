#pragma once

// Flag moves and flag-equivalence classes.

#include <cstddef>
#include <string>
#include <vector>

#include "ribbon/graph.hpp"
#include "ribbon/poly.hpp"
#include "ribbon/topology.hpp"

namespace ribbon {

enum class MoveMode : std::uint8_t { strict, relaxed };

struct Slot {
  std::string vertex;
  std::size_t position = 0;  // insertion slot in the rotation without the flag
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct FlagMove {
  enum class Kind : std::uint8_t { displacement, jump };
  std::string flag;
  Slot source;
  Slot target;
  Kind kind = Kind::displacement;
  friend bool operator==(const FlagMove&, const FlagMove&) = default;
};

std::string to_string(FlagMove::Kind kind);

// Strict: displacement along the flag's own boundary circle, or a jump to
// another open circle when the source circle keeps a flag. Relaxed: any slot
// that leaves (F_int, C_bnd) unchanged.
std::vector<FlagMove> legal_flag_moves(const RibbonGraph& g, MoveMode mode = MoveMode::strict);
RibbonGraph apply_move(const RibbonGraph& g, const FlagMove& move);

enum class Verdict : std::uint8_t { yes, no, unknown };
std::string to_string(Verdict v);

struct EquivalenceResult {
  Verdict verdict = Verdict::unknown;
  std::vector<FlagMove> witness;  // g1 to g2 when verdict is yes
  std::size_t states = 0;
};

// Breadth-first search over legal moves from g1. "no" means the whole class of
// g1 was explored (or invariants differ); "unknown" means the budget ran out.
EquivalenceResult flag_equivalent(const RibbonGraph& g1, const RibbonGraph& g2, std::size_t budget = 10000,
                                  MoveMode mode = MoveMode::strict);

struct FlagClass {
  RibbonGraph representative;
  InvariantTuple invariants;
};
FlagClass flag_class(const RibbonGraph& g);

BRPoly class_polynomial(const RibbonGraph& g);

}  // namespace ribbon
