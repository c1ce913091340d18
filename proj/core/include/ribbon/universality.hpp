#pragma once

// Extraction of the coefficients lambda_{ijklm} of an invariant that obeys the
// cut/contraction system
//   phi(G) = phi(G cut e) + phi(G/e)           e regular
//   phi(G) = (x-1) phi(G cut e) + phi(G/e)     e a bridge
// and reconstruction of phi as sum lambda_{ijklm} R_{ijklm}(G; x).

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "ribbon/chord.hpp"
#include "ribbon/graph.hpp"
#include "ribbon/invariants.hpp"
#include "ribbon/poly.hpp"
#include "ribbon/topology.hpp"

namespace ribbon {

int gamma_fn(int m);

struct Signature {
  int i = 0, j = 0, k = 0, l = 0, m = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature& a, const Signature& b) {
    return std::tie(a.i, a.j, a.k, a.l, a.m) <=> std::tie(b.i, b.j, b.k, b.l, b.m);
  }
};

// Signature reached by the full subset of build_canonical(args).
Signature top_signature(const CanonicalArgs& args);
// Same for a disjoint union of canonical diagrams: sums, with m = max.
Signature top_signature(const std::vector<CanonicalArgs>& parts);

// Multisets of at most max_components admissible tuples whose chords add up
// to n and flags to at most max_l. Components are listed in the order of
// admissible_tuples.
std::vector<std::vector<CanonicalArgs>> canonical_unions(int n, int max_l, int max_components);
RibbonGraph union_graph(const std::vector<CanonicalArgs>& parts);

// Terms of an R polynomial grouped by signature; each value is a polynomial
// in (X-1) alone.
std::map<Signature, BRPoly> signature_slices(const BRPoly& r);

class InconsistentOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Ring>
struct RingOps;

template <>
struct RingOps<BRPoly> {
  static BRPoly from_integer(const mpz_class& c) { return BRPoly(c); }
  static BRPoly inverse(const BRPoly& a) {
    if (a == BRPoly(1) || a == BRPoly(-1)) return a;
    throw std::domain_error("only the units 1 and -1 are invertible");
  }
};

template <>
struct RingOps<mpq_class> {
  static mpq_class from_integer(const mpz_class& c) { return mpq_class(c); }
  static mpq_class inverse(const mpq_class& a) {
    if (a == 0) throw std::domain_error("zero is not invertible");
    return 1 / a;
  }
};

template <class Ring>
using PhiOracle = std::function<Ring(const RibbonGraph&)>;

template <class Ring>
struct LambdaTable {
  int max_n = 0;
  int max_flags = 0;  // at level max_n; level i covers max_flags + 2 (max_n - i)
  int max_components = 1;
  std::map<Signature, Ring> entries;

  int flag_limit(int i) const { return max_flags + 2 * (max_n - i); }
  bool covers(int i, int l) const { return i >= 0 && i <= max_n && l <= flag_limit(i); }
  Ring value(const Signature& s) const {
    auto it = entries.find(s);
    return it == entries.end() ? Ring(0) : it->second;
  }
};

// sum c (x-1)^a over the terms of a (X-1)-polynomial.
template <class Ring>
Ring at_x(const BRPoly& slice, const Ring& x_minus_1) {
  Ring out(0);
  for (const auto& [mono, c] : slice.terms()) {
    Ring term = RingOps<Ring>::from_integer(c);
    for (int a = 0; a < mono.x1; ++a) term = term * x_minus_1;
    out = out + term;
  }
  return out;
}

// sum over covered signatures with i < below of lambda * R_sig(G; x).
template <class Ring>
Ring lambda_sum(const LambdaTable<Ring>& table, const BRPoly& r, const Ring& x_minus_1, int below) {
  Ring out(0);
  for (const auto& [sig, slice] : signature_slices(r)) {
    if (sig.i >= below) continue;
    if (!table.covers(sig.i, sig.l)) {
      throw std::out_of_range("lambda table does not cover i=" + std::to_string(sig.i) +
                              " l=" + std::to_string(sig.l));
    }
    auto it = table.entries.find(sig);
    if (it == table.entries.end()) continue;
    out = out + it->second * at_x(slice, x_minus_1);
  }
  return out;
}

// Level n uses every canonical diagram with n chords and at most
// max_flags + 2 (max_n - n) flags, so lower levels cover the flags that cuts
// create. With max_components > 1 disjoint unions of canonical diagrams are
// used as well; they carry the signatures of disconnected c-subgraphs, which
// no one-vertex diagram reaches. Two diagrams with one signature must agree.
template <class Ring>
LambdaTable<Ring> extract_lambdas(const PhiOracle<Ring>& phi, const Ring& x, int max_n, int max_flags = 4,
                                  int max_components = 1) {
  if (max_n < 0 || max_flags < 0 || max_components < 1) throw std::invalid_argument("bad extraction bounds");
  LambdaTable<Ring> table;
  table.max_n = max_n;
  table.max_flags = max_flags;
  table.max_components = max_components;
  const Ring x_minus_1 = x - Ring(1);
  for (int n = 0; n <= max_n; ++n) {
    std::map<Signature, Ring> level;
    for (const auto& parts : canonical_unions(n, table.flag_limit(n), max_components)) {
      const RibbonGraph g = union_graph(parts);
      const Ring value = phi(g) - lambda_sum<Ring>(table, state_sum_r(g), x_minus_1, n);
      const Signature sig = top_signature(parts);
      auto [it, fresh] = level.emplace(sig, value);
      if (!fresh && !(it->second == value)) {
        throw InconsistentOracle("two canonical diagrams of signature (" + std::to_string(sig.i) + "," +
                                 std::to_string(sig.j) + "," + std::to_string(sig.k) + "," +
                                 std::to_string(sig.l) + "," + std::to_string(sig.m) + ") disagree");
      }
    }
    table.entries.merge(level);
  }
  return table;
}

template <class Ring>
Ring reconstruct_phi(const LambdaTable<Ring>& table, const RibbonGraph& g, const Ring& x) {
  if (static_cast<int>(g.vertex_count()) > table.max_components) {
    throw std::out_of_range("lambda table built for at most " + std::to_string(table.max_components) +
                            " components");
  }
  const Ring x_minus_1 = x - Ring(1);
  return lambda_sum<Ring>(table, state_sum_r(g), x_minus_1, table.max_n + 1);
}

// Phi'(G) = sigma^{-r(G)} tau^{-n(G)} phi(G).
template <class Ring>
PhiOracle<Ring> sigma_tau_normalize(PhiOracle<Ring> phi, const Ring& sigma, const Ring& tau) {
  const Ring sigma_inv = RingOps<Ring>::inverse(sigma);
  const Ring tau_inv = RingOps<Ring>::inverse(tau);
  return [phi = std::move(phi), sigma_inv, tau_inv](const RibbonGraph& g) {
    const auto inv = basic_invariants(g);
    Ring out = phi(g);
    for (int a = 0; a < inv.rank; ++a) out = out * sigma_inv;
    for (int b = 0; b < inv.nullity; ++b) out = out * tau_inv;
    return out;
  };
}

}  // namespace ribbon
