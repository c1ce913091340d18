#include "ribbon/universality.hpp"

#include <algorithm>
#include <functional>

namespace ribbon {

int gamma_fn(int m) {
  if (m < 0 || m > 2) throw std::invalid_argument("gamma is defined on {0, 1, 2}");
  return m == 0 ? 0 : 1;
}

Signature top_signature(const CanonicalArgs& a) {
  return {a.i, 2 * a.j + a.k + a.m, a.k, a.partition.total(), gamma_fn(a.m)};
}

Signature top_signature(const std::vector<CanonicalArgs>& parts) {
  Signature out;
  for (const auto& a : parts) {
    const Signature s = top_signature(a);
    out.i += s.i;
    out.j += s.j;
    out.k += s.k;
    out.l += s.l;
    out.m = std::max(out.m, s.m);
  }
  return out;
}

std::vector<std::vector<CanonicalArgs>> canonical_unions(int n, int max_l, int max_components) {
  const auto tuples = admissible_tuples(n, max_l);
  std::vector<std::vector<CanonicalArgs>> out;
  std::vector<CanonicalArgs> cur;
  std::function<void(std::size_t, int, int)> grow = [&](std::size_t from, int chords, int flags) {
    if (chords == n && !cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_components) return;
    for (std::size_t t = from; t < tuples.size(); ++t) {
      const auto& a = tuples[t];
      const int l = a.partition.total();
      if (chords + a.i > n || flags + l > max_l) continue;
      cur.push_back(a);
      grow(t, chords + a.i, flags + l);
      cur.pop_back();
    }
  };
  grow(0, 0, 0);
  return out;
}

RibbonGraph union_graph(const std::vector<CanonicalArgs>& parts) {
  RibbonGraph g;
  for (const auto& a : parts) {
    g = disjoint_union(g, diagram_to_rosette(build_canonical(a.i, a.j, a.k, a.partition, a.m)));
  }
  return g;
}

std::map<Signature, BRPoly> signature_slices(const BRPoly& r) {
  std::map<Signature, BRPoly> out;
  for (const auto& [mono, c] : r.terms()) {
    out[{mono.y1, mono.z, mono.s, mono.t, mono.w}].add_term(Monomial{.x1 = mono.x1}, c);
  }
  return out;
}

}  // namespace ribbon
