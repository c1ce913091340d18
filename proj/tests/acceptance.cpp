// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "ribbon/chord.hpp"
#include "ribbon/flags.hpp"
#include "ribbon/generate.hpp"
#include "ribbon/invariants.hpp"
#include "ribbon/topology.hpp"
#include "ribbon/universality.hpp"

using namespace ribbon;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (ok) first_failure = why;
    ok = false;
  }
};

std::vector<RibbonGraph> criterion_corpus() {
  auto corpus = testing::exhaustive_corpus(3, 2);
  const auto extra = testing::random_corpus(200, {4, 8, 6, 0.3}, 20240601);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  return corpus;
}

const std::vector<RibbonGraph>& corpus() {
  static const auto c = criterion_corpus();
  return c;
}

Outcome recurrence_identities() {
  Outcome o;
  std::size_t checks = 0;
  std::size_t skipped = 0;
  for (const auto& g : corpus()) {
    for (const auto& [e, t] : g.edges()) {
      const auto r = check_edge_identity(g, e);
      if (!r.applicable) {
        ++skipped;
        continue;
      }
      ++checks;
      if (!r.holds) o.fail(r.rule + " identity fails at " + e + " in\n" + serialize_graph(g));
    }
  }
  o.detail = std::to_string(corpus().size()) + " graphs, " + std::to_string(checks) + " edge identities, " +
             std::to_string(skipped) + " nontrivial loops without an identity";
  return o;
}

Outcome evaluator_agreement() {
  Outcome o;
  for (const auto& g : corpus()) {
    if (to_json(state_sum_r(g)) != to_json(recurrence_r(g))) o.fail("evaluators differ on\n" + serialize_graph(g));
  }
  o.detail = std::to_string(corpus().size()) + " graphs";
  return o;
}

RibbonGraph terminal_graph(int bridges, int loops, int twisted) {
  std::vector<Vertex> vs{{"v0", {}}};
  std::map<std::string, Twist> edges;
  for (int i = 0; i < bridges; ++i) {
    const std::string e = "b" + std::to_string(i);
    edges[e] = Twist::untwisted;
    vs[0].rotation.push_back(Stub::edge(e, End::a));
    vs.push_back({"w" + std::to_string(i), {Stub::edge(e, End::b)}});
  }
  for (int i = 0; i < loops + twisted; ++i) {
    const std::string e = "l" + std::to_string(i);
    edges[e] = i < loops ? Twist::untwisted : Twist::twisted;
    vs[0].rotation.push_back(Stub::edge(e, End::a));
    vs[0].rotation.push_back(Stub::edge(e, End::b));
  }
  return RibbonGraph(std::move(vs), std::move(edges), {});
}

Outcome reductions() {
  Outcome o;
  const auto closed = testing::random_corpus(100, {4, 8, 0, 0.3}, 777);
  for (const auto& g : closed) {
    const BRPoly br = br_oracle_closed(g);
    if (set_t_one(r_prime(g)) != br) o.fail("R' at T=1 differs from the closed polynomial on\n" + serialize_graph(g));
    if (set_z_w_one(br) != tutte_oracle(g)) o.fail("closed polynomial at Z=W=1 differs from Tutte on\n" + serialize_graph(g));
  }
  int forms = 0;
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; n + m <= 4; ++m) {
      for (int p = 0; n + m + p <= 4; ++p) {
        ++forms;
        const BRPoly expect = BRPoly::var_x().pow(n) * BRPoly::var_y().pow(m) *
                              (BRPoly(1) + BRPoly::y_minus_1() * BRPoly::var_z() * BRPoly::var_w()).pow(p);
        if (br_oracle_closed(terminal_graph(n, m, p)) != expect) {
          o.fail("terminal form (" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(p) + ")");
        }
      }
    }
  }
  o.detail = "100 closed graphs, " + std::to_string(forms) + " terminal forms";
  return o;
}

Outcome multiplicativity() {
  Outcome o;
  std::mt19937_64 rng(4242);
  const auto left = testing::random_corpus(50, {3, 5, 3, 0.3}, 11);
  const auto right = testing::random_corpus(50, {3, 5, 3, 0.3}, 12);
  for (std::size_t i = 0; i < left.size(); ++i) {
    const auto& g1 = left[i];
    const auto& g2 = right[i];
    if (state_sum_r(disjoint_union(g1, g2)) != state_sum_r(g1) * state_sum_r(g2)) {
      o.fail("R not multiplicative over disjoint union");
    }
    const auto& v1 = g1.vertices()[rng() % g1.vertex_count()];
    const auto& v2 = g2.vertices()[rng() % g2.vertex_count()];
    const std::size_t s1 = rng() % std::max<std::size_t>(v1.rotation.size(), 1);
    const std::size_t s2 = rng() % std::max<std::size_t>(v2.rotation.size(), 1);
    const auto joined = one_point_join(g1, v1.id, g2, v2.id, s1, s2);
    if (r_prime(joined) != r_prime(g1) * r_prime(g2)) o.fail("R' not multiplicative over a one-point join");
  }
  o.detail = "50 pairs";
  return o;
}

mpq_class random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (;;) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

Outcome change_of_variables() {
  Outcome o;
  std::mt19937_64 rng(99);
  const auto graphs = testing::random_corpus(30, {3, 6, 5, 0.3}, 5150);
  int points = 0;
  for (const auto& g : graphs) {
    RibbonGraph bare = g;
    for (const auto& f : g.flags()) bare = remove_flag(bare, f);
    const BRPoly lhs = r_prime(g);
    const BRPoly closed = br_oracle_closed(bare);
    const int nullity = basic_invariants(g).nullity;
    for (int k = 0; k < 20; ++k) {
      EvalPoint p;
      p.x = random_rational(rng, false);
      p.y = random_rational(rng, false);
      p.z = random_rational(rng, true);
      p.w = random_rational(rng, false);
      p.t = random_rational(rng, true);
      const mpq_class t2 = p.t * p.t;
      EvalPoint q = p;
      q.x = (p.x - 1) * t2 + 1;
      q.y = (p.y - 1 + t2) / t2;
      mpq_class scale = 1;
      for (int i = 0; i < static_cast<int>(g.flag_count()) + 2 * nullity; ++i) scale *= p.t;
      ++points;
      if (evaluate(lhs, p) != scale * evaluate(closed, q)) o.fail("identity fails on\n" + serialize_graph(g));
    }
  }
  o.detail = "30 graphs, " + std::to_string(points) + " rational points";
  return o;
}

Outcome canonical_soundness() {
  Outcome o;
  const auto tuples = admissible_tuples(5, 4);
  for (const auto& a : tuples) {
    const auto d = build_canonical(a.i, a.j, a.k, a.partition, a.m);
    const CanonicalClass want{a.i, a.j, a.k, a.partition.total(), a.m};
    if (canonical_class(d) != want) o.fail("class round trip fails at i=" + std::to_string(a.i));
    const Signature top = top_signature(a);
    for (const auto& [sig, slice] : signature_slices(state_sum_r(diagram_to_rosette(d)))) {
      if (sig.i != a.i) continue;
      const bool expect_one = sig == top;
      if (expect_one ? slice != BRPoly(1) : !slice.is_zero()) o.fail("coefficient delta fails");
    }
  }
  o.detail = std::to_string(tuples.size()) + " admissible tuples";
  return o;
}

Outcome four_term() {
  Outcome o;
  std::mt19937_64 rng(31337);
  for (int n = 0; n < 100; ++n) {
    const auto g2 = testing::random_two_vertex(rng, static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), 0.35);
    const auto r = related_diagrams(g2, "e", "g");
    auto R = [](const ChordDiagram& d) { return state_sum_r(diagram_to_rosette(d)); };
    if (R(r.d1) - R(r.d1_prime) != R(r.d2) - R(r.d2_prime)) o.fail("four-term relation fails on\n" + serialize_graph(g2));
    if (canonical_class(r.d1) != canonical_class(r.d2)) o.fail("D1 and D2 classes differ on\n" + serialize_graph(g2));
  }
  o.detail = "100 two-vertex lifts";
  return o;
}

Outcome universality() {
  Outcome o;
  const PhiOracle<BRPoly> phi = [](const RibbonGraph& g) { return state_sum_r(g); };
  const auto table = extract_lambdas<BRPoly>(phi, BRPoly::var_x(), 4, 4, 3);
  for (const auto& [s, value] : table.entries) {
    const BRPoly expect = BRPoly::monomial({.y1 = s.i, .z = s.j, .s = s.k, .w = s.m, .t = s.l});
    if (value != expect) o.fail("lambda differs from its monomial");
  }

  std::mt19937_64 rng(8080);
  int tested = 0;
  int drawn = 0;
  while (tested < 50) {
    ++drawn;
    GenerateOptions opt;
    opt.vertices = 1 + static_cast<int>(rng() % 3);
    opt.edges = opt.vertices - 1 + static_cast<int>(rng() % 5);
    opt.flags = static_cast<int>(rng() % 5);
    opt.twist_prob = 0.3;
    const auto g = random_graph(opt, rng());
    const auto inv = basic_invariants(g);
    if (inv.components != 1 || inv.nullity > 4 || inv.flags + 2 * inv.edges > 12) continue;
    ++tested;
    if (reconstruct_phi(table, g, BRPoly::var_x()) != state_sum_r(g)) o.fail("reconstruction differs on\n" + serialize_graph(g));
  }
  o.detail = std::to_string(table.entries.size()) + " lambdas, 50 reconstructions (" + std::to_string(drawn) +
             " drawn)";
  return o;
}

Outcome flag_equivalence() {
  Outcome o;
  std::vector<RibbonGraph> graphs;
  for (const auto& g : testing::exhaustive_corpus(3, 2)) {
    if (g.flag_count() <= 4) graphs.push_back(g);
  }
  for (const auto& g : testing::random_corpus(60, {3, 4, 4, 0.3}, 909)) graphs.push_back(g);

  std::size_t moves = 0;
  std::size_t cut_checks = 0;
  for (const auto& g : graphs) {
    const auto inv = basic_invariants(g);
    const BRPoly r = state_sum_r(g);
    for (auto mode : {MoveMode::strict, MoveMode::relaxed}) {
      for (const auto& mv : legal_flag_moves(g, mode)) {
        ++moves;
        const auto h = apply_move(g, mv);
        if (basic_invariants(h) != inv) o.fail("move changes the invariant tuple on\n" + serialize_graph(g));
        if (mode == MoveMode::relaxed) continue;
        if (state_sum_r(h) != r) o.fail("moved graph has a different polynomial:\n" + serialize_graph(g));
        for (const auto& [e, t] : g.edges()) {
          ++cut_checks;
          const auto res = flag_equivalent(cut_edge(g, e), cut_edge(h, e), 10000);
          if (res.verdict != Verdict::yes) {
            o.fail("cut at " + e + " gives " + to_string(res.verdict) + " after " + mv.flag + " moves on\n" +
                   serialize_graph(g));
          }
        }
      }
    }
  }
  o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(moves) + " moves, " +
             std::to_string(cut_checks) + " cut checks";
  return o;
}

Outcome performance() {
  Outcome o;
  GenerateOptions opt;
  opt.vertices = 4;
  opt.edges = 12;
  opt.flags = 4;
  opt.twist_prob = 0.3;
  const auto g = random_graph(opt, 12);
  const auto t0 = std::chrono::steady_clock::now();
  const BRPoly serial = state_sum_r(g);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 10.0) o.fail("single-threaded state sum too slow");
  const BRPoly par = state_sum_r(g, {true, 4});
  if (to_json(par) != to_json(serial)) o.fail("parallel output differs");
  std::ostringstream s;
  s.precision(3);
  s << "|E|=12 f=4 in " << secs << " s, parallel identical";
  o.detail = s.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"recurrence identities", recurrence_identities},
      {"evaluator agreement", evaluator_agreement},
      {"reductions", reductions},
      {"multiplicativity", multiplicativity},
      {"change of variables", change_of_variables},
      {"canonical classes", canonical_soundness},
      {"four-term relation", four_term},
      {"universality", universality},
      {"flag equivalence", flag_equivalence},
      {"performance", performance},
  };
  // Optional arguments pick criteria by number.
  std::vector<bool> selected(criteria.size(), argc == 1);
  for (int a = 1; a < argc; ++a) {
    const std::size_t n = std::strtoul(argv[a], nullptr, 10);
    if (n >= 1 && n <= criteria.size()) selected[n - 1] = true;
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected[i]) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2zu %-22s %s (%.1f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    if (!o.ok) {
      ++failed;
      std::printf("       first failure: %s\n", o.first_failure.c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
