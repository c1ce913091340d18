#pragma once

// Signed open chord diagrams: the cyclic word of a one-vertex ribbon graph.

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon {

struct ChordDiagram {
  std::vector<std::string> word;       // chord ids twice, flag ids once
  std::map<std::string, Twist> signs;  // one entry per chord

  std::size_t chord_count() const { return signs.size(); }
  std::size_t flag_count() const { return word.size() - 2 * signs.size(); }
  bool is_chord(const std::string& token) const { return signs.count(token) != 0; }
};

// "word: e f1 e f2" and "signs: e:+" on separate lines (or split by '/').
ChordDiagram parse_diagram(std::string_view text);
std::string serialize_diagram(const ChordDiagram& d);

ChordDiagram rosette_to_diagram(const RibbonGraph& g);
RibbonGraph diagram_to_rosette(const ChordDiagram& d);

// Contracts non-loop edges until every component has one vertex. Boundary
// structure, nullity and orientability are unchanged.
RibbonGraph to_rosette(const RibbonGraph& g);

// (F_int, C_bnd) of the doubled diagram.
std::pair<int, int> doubling_components(const ChordDiagram& d);

struct RelatedDiagrams {
  ChordDiagram d1, d1_prime, d2, d2_prime;
};
// d1 = G/g, d1' = (G cut e)/g, d2 = G/e, d2' = (G cut g)/e.
RelatedDiagrams related_diagrams(const RibbonGraph& g2, const std::string& e, const std::string& g);

struct CanonicalClass {
  int i = 0, j = 0, k = 0, l = 0, m = 0;
  friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
  friend auto operator<=>(const CanonicalClass& a, const CanonicalClass& b) {
    return std::tie(a.i, a.j, a.k, a.l, a.m) <=> std::tie(b.i, b.j, b.k, b.l, b.m);
  }
};

CanonicalClass canonical_class(const ChordDiagram& d);
CanonicalClass canonical_class(const RibbonGraph& rosette);

// s trailing flags plus q chords carrying parts[p] >= 1 flags each.
struct FlagPartition {
  int s = 0;
  std::vector<int> parts;

  int total() const;
  int components() const { return static_cast<int>(parts.size()) + (s > 0 ? 1 : 0); }
  friend bool operator==(const FlagPartition&, const FlagPartition&) = default;
};

ChordDiagram build_canonical(int i, int j, int k, const FlagPartition& partition, int m);

// A canonical diagram in the class of `rosette`.
ChordDiagram canonical_representative(const RibbonGraph& rosette);

// Concatenation of d1 opened at slot p1 with d2 opened at slot p2. Ids of d2
// that collide with d1 are prefixed.
ChordDiagram diagram_sum(const ChordDiagram& d1, std::size_t p1, const ChordDiagram& d2, std::size_t p2);

struct CanonicalArgs {
  int i = 0, j = 0, k = 0, m = 0;
  FlagPartition partition;
};

// All admissible argument tuples with i <= max_i and at most max_l flags.
// Partitions list parts in non-increasing order.
std::vector<CanonicalArgs> admissible_tuples(int max_i, int max_l);

// Experimental direct rewrites about chord g. The word is read as
// [P g Q R g U] with |Q| = q and |U| = u.
//   rotation: [Q g P U g R]
//   twist:    [Q g P R' g U'] with R, U reversed; chords with exactly one end
//             in R U change sign.
ChordDiagram rotation_rewrite(const ChordDiagram& d, const std::string& g, std::size_t q, std::size_t u);
ChordDiagram twist_rewrite(const ChordDiagram& d, const std::string& g, std::size_t q, std::size_t u);

}  // namespace ribbon
