#include "ribbon/chord.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "ribbon/topology.hpp"

namespace ribbon {
namespace {

bool valid_token(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

void validate(const ChordDiagram& d) {
  std::map<std::string, int> seen;
  for (const auto& t : d.word) {
    if (!valid_token(t)) throw GraphError("invalid token '" + t + "'");
    ++seen[t];
  }
  for (const auto& [t, n] : seen) {
    if (n > 2) throw GraphError("token '" + t + "' occurs " + std::to_string(n) + " times");
    if (n == 2 && !d.is_chord(t)) throw GraphError("chord '" + t + "' has no sign");
    if (n == 1 && d.is_chord(t)) throw GraphError("chord '" + t + "' has one endpoint");
  }
  for (const auto& [c, s] : d.signs) {
    if (!seen.count(c)) throw GraphError("signed chord '" + c + "' is not in the word");
  }
}

std::string vertex_name(const ChordDiagram& d) {
  std::string v = "v";
  while (std::find(d.word.begin(), d.word.end(), v) != d.word.end()) v += "_";
  return v;
}

std::pair<std::size_t, std::size_t> chord_positions(const ChordDiagram& d, const std::string& g) {
  if (!d.is_chord(g)) throw GraphError("unknown chord '" + g + "'");
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < d.word.size(); ++i) {
    if (d.word[i] == g) at.push_back(i);
  }
  return {at[0], at[1]};
}

// Splits the word around chord g into the segment between its ends and the
// segment after its second end (wrapping round).
std::pair<std::vector<std::string>, std::vector<std::string>> around(const ChordDiagram& d, const std::string& g) {
  auto [p1, p2] = chord_positions(d, g);
  const std::size_t n = d.word.size();
  std::vector<std::string> inner(d.word.begin() + static_cast<std::ptrdiff_t>(p1) + 1,
                                 d.word.begin() + static_cast<std::ptrdiff_t>(p2));
  std::vector<std::string> outer;
  for (std::size_t i = (p2 + 1) % n; i != p1; i = (i + 1) % n) outer.push_back(d.word[i]);
  return {inner, outer};
}

template <class It>
void append(std::vector<std::string>& out, It first, It last) {
  out.insert(out.end(), first, last);
}

}  // namespace

ChordDiagram parse_diagram(std::string_view text) {
  ChordDiagram d;
  bool have_word = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream parts(raw);
    for (std::string line; std::getline(parts, line, '/');) {
      auto toks = tokens(line);
      if (toks.empty()) continue;
      if (toks[0] == "word:") {
        if (have_word) throw ParseError(line_no, "duplicate word line");
        have_word = true;
        d.word.assign(toks.begin() + 1, toks.end());
      } else if (toks[0] == "signs:") {
        for (std::size_t i = 1; i < toks.size(); ++i) {
          const auto colon = toks[i].rfind(':');
          if (colon == std::string::npos) throw ParseError(line_no, "sign entry '" + toks[i] + "' lacks ':'");
          const std::string id = toks[i].substr(0, colon);
          const std::string sign = toks[i].substr(colon + 1);
          if (sign != "+" && sign != "-") throw ParseError(line_no, "unknown sign token '" + sign + "'");
          if (!d.signs.emplace(id, sign == "-" ? Twist::twisted : Twist::untwisted).second) {
            throw ParseError(line_no, "duplicate sign for '" + id + "'");
          }
        }
      } else {
        throw ParseError(line_no, "unrecognised line '" + line + "'");
      }
    }
  }
  if (!have_word) throw ParseError(line_no, "missing word line");
  // Chords without an explicit sign are untwisted.
  std::map<std::string, int> count;
  for (const auto& t : d.word) ++count[t];
  for (const auto& [t, n] : count) {
    if (n == 2) d.signs.emplace(t, Twist::untwisted);
  }
  try {
    validate(d);
  } catch (const GraphError& err) {
    throw ParseError(line_no, err.what());
  }
  return d;
}

std::string serialize_diagram(const ChordDiagram& d) {
  std::string out = "word:";
  for (const auto& t : d.word) out += " " + t;
  out += "\nsigns:";
  for (const auto& [c, s] : d.signs) out += " " + c + (s == Twist::twisted ? ":-" : ":+");
  out += "\n";
  return out;
}

ChordDiagram rosette_to_diagram(const RibbonGraph& g) {
  if (g.vertex_count() != 1) throw GraphError("a chord diagram needs a one-vertex graph");
  ChordDiagram d;
  for (const auto& s : g.vertices()[0].rotation) d.word.push_back(s.id);
  d.signs = g.edges();
  return d;
}

RibbonGraph diagram_to_rosette(const ChordDiagram& d) {
  validate(d);
  Vertex v{vertex_name(d), {}};
  std::set<std::string> flags;
  std::set<std::string> opened;
  for (const auto& t : d.word) {
    if (!d.is_chord(t)) {
      flags.insert(t);
      v.rotation.push_back(Stub::flag(t));
    } else {
      v.rotation.push_back(Stub::edge(t, opened.insert(t).second ? End::a : End::b));
    }
  }
  return RibbonGraph({std::move(v)}, d.signs, std::move(flags));
}

RibbonGraph to_rosette(const RibbonGraph& g) {
  RibbonGraph h = g;
  for (;;) {
    auto it = std::find_if(h.edges().begin(), h.edges().end(), [&](const auto& kv) { return !h.is_loop(kv.first); });
    if (it == h.edges().end()) return h;
    h = contract_edge(h, it->first);
  }
}

std::pair<int, int> doubling_components(const ChordDiagram& d) {
  const auto inv = basic_invariants(diagram_to_rosette(d));
  return {inv.closed_faces, inv.boundary_components};
}

RelatedDiagrams related_diagrams(const RibbonGraph& g2, const std::string& e, const std::string& g) {
  if (g2.vertex_count() != 2) throw GraphError("related diagrams need a two-vertex graph");
  for (const auto& x : {e, g}) {
    if (!g2.has_edge(x)) throw GraphError("unknown edge '" + x + "'");
    if (g2.is_loop(x)) throw GraphError("edge '" + x + "' is a loop");
  }
  if (e == g) throw GraphError("the two edges must differ");
  RelatedDiagrams r;
  r.d1 = rosette_to_diagram(contract_edge(g2, g));
  r.d1_prime = rosette_to_diagram(contract_edge(cut_edge(g2, e), g));
  r.d2 = rosette_to_diagram(contract_edge(g2, e));
  r.d2_prime = rosette_to_diagram(contract_edge(cut_edge(g2, g), e));
  return r;
}

CanonicalClass canonical_class(const RibbonGraph& rosette) {
  if (rosette.vertex_count() != 1) throw GraphError("canonical class needs a one-vertex graph");
  const auto inv = basic_invariants(rosette);
  CanonicalClass c;
  c.i = inv.nullity;
  c.k = inv.boundary_components;
  c.l = inv.flags;
  const int zexp = 1 - inv.closed_faces + inv.nullity;
  const int excess = zexp - c.k;
  if (inv.nonorientable == 0) {
    if (excess % 2 != 0) throw std::logic_error("odd excess on an orientable diagram");
    c.m = 0;
  } else {
    c.m = excess % 2 != 0 ? 1 : 2;
  }
  c.j = (excess - c.m) / 2;
  if (excess < c.m || 2 * c.j > c.i - c.m) throw std::logic_error("canonical class out of range");
  return c;
}

CanonicalClass canonical_class(const ChordDiagram& d) { return canonical_class(diagram_to_rosette(d)); }

int FlagPartition::total() const { return std::accumulate(parts.begin(), parts.end(), s); }

ChordDiagram build_canonical(int i, int j, int k, const FlagPartition& partition, int m) {
  const int q = static_cast<int>(partition.parts.size());
  const int free = i - 2 * j - m;
  if (i < 0 || j < 0 || m < 0 || m > 2 || free < 0) throw std::invalid_argument("need 0 <= 2j <= i - m, m <= 2");
  if (partition.s < 0 || q > free) throw std::invalid_argument("too many flagged chords");
  if (std::any_of(partition.parts.begin(), partition.parts.end(), [](int p) { return p < 1; })) {
    throw std::invalid_argument("flag parts must be positive");
  }
  if (k != partition.components()) throw std::invalid_argument("k must equal q plus one if s > 0");

  ChordDiagram d;
  int chord = 0;
  int flag = 0;
  auto next_chord = [&](Twist t) {
    std::string id = "c" + std::to_string(++chord);
    d.signs.emplace(id, t);
    return id;
  };
  auto next_flag = [&] { return "f" + std::to_string(++flag); };

  for (int p = 0; p < j; ++p) {
    const auto a = next_chord(Twist::untwisted);
    const auto b = next_chord(Twist::untwisted);
    d.word.insert(d.word.end(), {a, b, a, b});
  }
  for (int p = 0; p < m; ++p) {
    const auto c = next_chord(Twist::twisted);
    d.word.insert(d.word.end(), {c, c});
  }
  for (int p = 0; p < free; ++p) {
    const auto c = next_chord(Twist::untwisted);
    d.word.push_back(c);
    if (p < q) {
      for (int f = 0; f < partition.parts[p]; ++f) d.word.push_back(next_flag());
    }
    d.word.push_back(c);
  }
  for (int f = 0; f < partition.s; ++f) d.word.push_back(next_flag());
  return d;
}

ChordDiagram canonical_representative(const RibbonGraph& rosette) {
  const CanonicalClass c = canonical_class(rosette);
  std::vector<int> sizes;
  for (const auto& comp : boundary_graph(rosette).components) sizes.push_back(static_cast<int>(comp.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  FlagPartition p;
  if (static_cast<int>(sizes.size()) <= c.i - 2 * c.j - c.m) {
    p.parts = sizes;
  } else {
    p.s = sizes.front();
    p.parts.assign(sizes.begin() + 1, sizes.end());
  }
  return build_canonical(c.i, c.j, c.k, p, c.m);
}

ChordDiagram diagram_sum(const ChordDiagram& d1, std::size_t p1, const ChordDiagram& d2, std::size_t p2) {
  validate(d1);
  validate(d2);
  if (p1 >= std::max<std::size_t>(d1.word.size(), 1) || p2 >= std::max<std::size_t>(d2.word.size(), 1)) {
    throw GraphError("sum slot out of range");
  }
  std::set<std::string> used(d1.word.begin(), d1.word.end());
  used.insert(d2.word.begin(), d2.word.end());
  std::map<std::string, std::string> rename;
  for (const auto& t : d2.word) {
    if (rename.count(t)) continue;
    std::string id = t;
    if (std::find(d1.word.begin(), d1.word.end(), t) != d1.word.end()) {
      do {
        id = "u_" + id;
      } while (used.count(id));
      used.insert(id);
    }
    rename.emplace(t, id);
  }

  ChordDiagram out;
  out.signs = d1.signs;
  for (const auto& [c, s] : d2.signs) out.signs.emplace(rename.at(c), s);
  const std::size_t n1 = d1.word.size();
  const std::size_t n2 = d2.word.size();
  for (std::size_t i = 0; i < n1; ++i) out.word.push_back(d1.word[(p1 + i) % n1]);
  for (std::size_t i = 0; i < n2; ++i) out.word.push_back(rename.at(d2.word[(p2 + i) % n2]));
  return out;
}

std::vector<CanonicalArgs> admissible_tuples(int max_i, int max_l) {
  std::vector<CanonicalArgs> out;
  // Non-increasing parts summing to `left`, each at most `cap`, at most `slots` of them.
  std::function<void(int, int, int, std::vector<int>&, std::vector<std::vector<int>>&)> parts_of =
      [&](int left, int cap, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& acc) {
        if (left == 0) {
          acc.push_back(cur);
          return;
        }
        if (slots == 0) return;
        for (int p = std::min(left, cap); p >= 1; --p) {
          cur.push_back(p);
          parts_of(left - p, p, slots - 1, cur, acc);
          cur.pop_back();
        }
      };
  for (int i = 0; i <= max_i; ++i) {
    for (int m = 0; m <= std::min(2, i); ++m) {
      for (int j = 0; 2 * j <= i - m; ++j) {
        const int free = i - 2 * j - m;
        for (int l = 0; l <= max_l; ++l) {
          for (int s = 0; s <= l; ++s) {
            std::vector<std::vector<int>> acc;
            std::vector<int> cur;
            parts_of(l - s, l - s, free, cur, acc);
            for (auto& parts : acc) {
              CanonicalArgs a;
              a.i = i;
              a.j = j;
              a.m = m;
              a.partition = {s, std::move(parts)};
              a.k = a.partition.components();
              out.push_back(std::move(a));
            }
          }
        }
      }
    }
  }
  return out;
}

ChordDiagram rotation_rewrite(const ChordDiagram& d, const std::string& g, std::size_t q, std::size_t u) {
  auto [inner, outer] = around(d, g);
  if (q > inner.size() || u > outer.size()) throw GraphError("rewrite split out of range");
  ChordDiagram out;
  out.signs = d.signs;
  append(out.word, inner.begin(), inner.begin() + static_cast<std::ptrdiff_t>(q));  // Q
  out.word.push_back(g);
  append(out.word, outer.begin() + static_cast<std::ptrdiff_t>(u), outer.end());    // P
  append(out.word, outer.begin(), outer.begin() + static_cast<std::ptrdiff_t>(u));  // U
  out.word.push_back(g);
  append(out.word, inner.begin() + static_cast<std::ptrdiff_t>(q), inner.end());    // R
  return out;
}

ChordDiagram twist_rewrite(const ChordDiagram& d, const std::string& g, std::size_t q, std::size_t u) {
  auto [inner, outer] = around(d, g);
  if (q > inner.size() || u > outer.size()) throw GraphError("rewrite split out of range");
  std::vector<std::string> r(inner.begin() + static_cast<std::ptrdiff_t>(q), inner.end());
  std::vector<std::string> uu(outer.begin(), outer.begin() + static_cast<std::ptrdiff_t>(u));
  std::map<std::string, int> moved;
  for (const auto& t : r) ++moved[t];
  for (const auto& t : uu) ++moved[t];

  ChordDiagram out;
  out.signs = d.signs;
  for (const auto& [t, n] : moved) {
    if (n == 1 && d.is_chord(t)) out.signs[t] = toggled(d.signs.at(t));
  }
  append(out.word, inner.begin(), inner.begin() + static_cast<std::ptrdiff_t>(q));  // Q
  out.word.push_back(g);
  append(out.word, outer.begin() + static_cast<std::ptrdiff_t>(u), outer.end());    // P
  append(out.word, r.rbegin(), r.rend());
  out.word.push_back(g);
  append(out.word, uu.rbegin(), uu.rend());
  return out;
}

}  // namespace ribbon
