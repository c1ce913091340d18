#include <gtest/gtest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "ribbon/invariants.hpp"
#include "ribbon/topology.hpp"

using namespace ribbon;

namespace {

RibbonGraph g(const char* text) { return parse_graph(text); }

const BRPoly X = BRPoly::var_x();
const BRPoly X1 = BRPoly::x_minus_1();
const BRPoly Y = BRPoly::var_y();
const BRPoly Y1 = BRPoly::y_minus_1();
const BRPoly Z = BRPoly::var_z();
const BRPoly S = BRPoly::var_s();
const BRPoly W = BRPoly::var_w();
const BRPoly T = BRPoly::var_t();

const char* kBridge = "edges: e1:+ / vertex v1: e1.a / vertex v2: e1.b";
const char* kLoop = "edges: e:+ / vertex v: e.a e.b";
const char* kTwistedLoop = "edges: e:- / vertex v: e.a e.b";
const char* kCrossed = "edges: e:+ g:+ / vertex v: e.a g.a e.b g.b";

}  // namespace

TEST(StateSum, Examples) {
  EXPECT_EQ(state_sum_r(g("edges: / vertex v:")), BRPoly(1));
  EXPECT_EQ(state_sum_r(g("edges: / flags: f1 / vertex v: f1")), Z * S * T);
  EXPECT_EQ(state_sum_r(g(kLoop)), Y1 + Z * S * T.pow(2));
  EXPECT_EQ(state_sum_r(g(kTwistedLoop)), Y1 * Z * W + Z * S * T.pow(2));
  EXPECT_EQ(state_sum_r(g(kBridge)), 1 + X1 * Z.pow(2) * S.pow(2) * T.pow(2));
  EXPECT_EQ(state_sum_r(g(kCrossed)), Y1.pow(2) * Z.pow(2) + 2 * Y1 * Z.pow(2) * S.pow(2) * T.pow(2) + Z * S * T.pow(4));
}

TEST(StateSum, FlagsInBothSectors) {
  EXPECT_EQ(state_sum_r(g("edges: e:+ / flags: f1 f2 / vertex v: e.a f1 e.b f2")),
            Z * S * T.pow(4) + Y1 * Z.pow(2) * S.pow(2) * T.pow(2));
}

TEST(StateSum, EmptyGraph) { EXPECT_EQ(state_sum_r(RibbonGraph{}), BRPoly(1)); }

TEST(StateSum, ParallelMatchesSerial) {
  for (const auto& h : ribbon::testing::random_corpus(20, {4, 10, 3, 0.3}, 55)) {
    EXPECT_EQ(to_json(state_sum_r(h, {true, 3})), to_json(state_sum_r(h)));
  }
}

TEST(Recurrence, Examples) {
  EXPECT_EQ(recurrence_r(g(kBridge)), X1 * (Z * S * T).pow(2) + 1);
  EXPECT_EQ(recurrence_r(g(kTwistedLoop)), Z * S * T.pow(2) + Y1 * Z * W);
  EXPECT_EQ(recurrence_r(g(kCrossed)), state_sum_r(g(kCrossed)));
}

TEST(Recurrence, MatchesStateSumExhaustively) {
  for (const auto& h : ribbon::testing::exhaustive_corpus(2, 2)) {
    EXPECT_EQ(recurrence_r(h), state_sum_r(h)) << serialize_graph(h);
  }
}

TEST(Recurrence, MatchesStateSumRandomly) {
  for (const auto& h : ribbon::testing::random_corpus(60, {4, 8, 4, 0.3}, 66)) {
    EXPECT_EQ(recurrence_r(h), state_sum_r(h)) << serialize_graph(h);
  }
}

TEST(RPrime, Examples) {
  EXPECT_EQ(r_prime(g("edges: / flags: f1 / vertex v: f1")), T);
  EXPECT_EQ(r_prime(g(kBridge)), 1 + X1 * T.pow(2));
  EXPECT_EQ(r_prime(g(kLoop)), T.pow(2) + Y1);
}

TEST(RPrime, BridgeFactor) {
  const auto h = g("edges: e:+ l:+ / flags: f / vertex v: e.a f / vertex w: e.b l.a l.b");
  EXPECT_EQ(r_prime(h), (X1 * T.pow(2) + 1) * r_prime(contract_edge(h, "e")));
}

TEST(ClosedOracle, TerminalForms) {
  EXPECT_EQ(br_oracle_closed(g(kBridge)), X);
  EXPECT_EQ(br_oracle_closed(g(kTwistedLoop)), 1 + Y1 * Z * W);
  EXPECT_EQ(br_oracle_closed(g(kLoop)), Y);
  EXPECT_THROW(br_oracle_closed(g("edges: / flags: f / vertex v: f")), GraphError);
}

TEST(Tutte, Examples) {
  EXPECT_EQ(tutte_oracle(g(kBridge)), X);
  EXPECT_EQ(tutte_oracle(g(kLoop)), Y);
  const auto triangle = g("edges: a:+ b:+ c:+ / vertex u: a.a c.b / vertex v: a.b b.a / vertex w: b.b c.a");
  EXPECT_EQ(tutte_oracle(triangle), X.pow(2) + X + Y);
}

TEST(Tutte, IgnoresTwistsAndFlags) {
  for (const auto& h : ribbon::testing::random_corpus(40, {4, 6, 0, 0.5}, 4)) {
    EXPECT_EQ(set_z_w_one(br_oracle_closed(h)), tutte_oracle(h));
  }
}

TEST(Coefficients, Examples) {
  EXPECT_EQ(coeff_rijklm(g(kBridge), 0, 2, 2, 2, 0), X1);
  EXPECT_EQ(coeff_rijklm(g(kBridge), 0, 0, 0, 0, 0), BRPoly(1));
  EXPECT_TRUE(coeff_rijklm(g(kBridge), 2, 0, 0, 0, 0).is_zero());
}

TEST(Coefficients, CutContractionTermwise) {
  std::mt19937_64 rng(12);
  for (const auto& h : ribbon::testing::random_corpus(40, {3, 5, 2, 0.3}, 77)) {
    for (const auto& [e, t] : h.edges()) {
      const auto cls = classify_edge(h, e);
      if (cls.kind == EdgeClass::Kind::loop) continue;
      const BRPoly r = state_sum_r(h);
      for (const auto& [m, c] : r.terms()) {
        const BRPoly lhs = coeff_rijklm(h, m.y1, m.z, m.s, m.t, m.w);
        const BRPoly cut = coeff_rijklm(cut_edge(h, e), m.y1, m.z, m.s, m.t, m.w);
        const BRPoly con = coeff_rijklm(contract_edge(h, e), m.y1, m.z, m.s, m.t, m.w);
        EXPECT_EQ(lhs, (cls.kind == EdgeClass::Kind::bridge ? X1 * cut : cut) + con);
      }
    }
  }
}

TEST(EdgeIdentity, EveryRuleAppears) {
  std::set<std::string> rules;
  for (const auto& h : ribbon::testing::exhaustive_corpus(2, 1)) {
    for (const auto& [e, t] : h.edges()) {
      const auto r = check_edge_identity(h, e);
      rules.insert(r.rule);
      if (r.applicable) EXPECT_TRUE(r.holds) << r.rule << "\n" << serialize_graph(h);
    }
  }
  EXPECT_EQ(rules, (std::set<std::string>{"regular", "bridge", "twisted-loop", "untwisted-loop", "none"}));
}

TEST(EdgeIdentity, DetectsWrongEvaluator) {
  const auto h = g(kBridge);
  const auto r = check_edge_identity(h, "e1", [](const RibbonGraph& k) { return BRPoly(static_cast<long>(k.flag_count())); });
  EXPECT_TRUE(r.applicable);
  EXPECT_FALSE(r.holds);
}

TEST(Multiplicativity, DisjointUnion) {
  const auto a = ribbon::testing::random_corpus(20, {3, 4, 2, 0.3}, 1);
  const auto b = ribbon::testing::random_corpus(20, {3, 4, 2, 0.3}, 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(state_sum_r(disjoint_union(a[i], b[i])), state_sum_r(a[i]) * state_sum_r(b[i]));
  }
}

TEST(Multiplicativity, RPrimeOverOnePointJoin) {
  const auto loop = g("edges: e:+ / flags: f / vertex v: e.a f e.b");
  const auto twisted = g("edges: h:- / flags: k / vertex w: h.a k h.b");
  for (std::size_t s1 = 0; s1 < 3; ++s1) {
    for (std::size_t s2 = 0; s2 < 3; ++s2) {
      EXPECT_EQ(r_prime(one_point_join(loop, "v", twisted, "w", s1, s2)), r_prime(loop) * r_prime(twisted));
    }
  }
}

TEST(StateSum, ZExponentNonNegative) {
  for (const auto& h : ribbon::testing::random_corpus(60, {4, 7, 4, 0.4}, 31)) {
    const BRPoly r = state_sum_r(h);
    for (const auto& [m, c] : r.terms()) EXPECT_GE(m.z, 0);
  }
}
