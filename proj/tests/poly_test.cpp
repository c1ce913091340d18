#include <gtest/gtest.h>

#include <random>
#include <set>
#include <tuple>

#include "ribbon/poly.hpp"

using namespace ribbon;

namespace {

const BRPoly X1 = BRPoly::x_minus_1();
const BRPoly Y1 = BRPoly::y_minus_1();
const BRPoly Z = BRPoly::var_z();
const BRPoly S = BRPoly::var_s();
const BRPoly W = BRPoly::var_w();
const BRPoly T = BRPoly::var_t();

BRPoly random_poly(std::mt19937_64& rng) {
  BRPoly p;
  const int terms = static_cast<int>(rng() % 6);
  for (int i = 0; i < terms; ++i) {
    Monomial m{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 4) - 1,
               static_cast<int>(rng() % 3), static_cast<int>(rng() % 2), static_cast<int>(rng() % 4)};
    p.add_term(m, mpz_class(static_cast<long>(rng() % 11) - 5));
  }
  return p;
}

mpq_class q(long n, long d = 1) {
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Poly, RingBasics) {
  EXPECT_EQ(W * W, W);
  EXPECT_EQ((Z * S * T) * (Z * S * T), Z.pow(2) * S.pow(2) * T.pow(2));
  const BRPoly p = Y1 * Z + 3 * T;
  EXPECT_TRUE((p + (-1) * p).is_zero());
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(BRPoly(0).size(), 0u);
  EXPECT_EQ(BRPoly::var_x(), X1 + 1);
  EXPECT_EQ(W.pow(5), W);
  EXPECT_EQ(Z.pow(0), BRPoly(1));
}

TEST(Poly, LargeCoefficients) {
  BRPoly p = BRPoly(2) * Z + 1;
  const BRPoly big = p.pow(70);
  EXPECT_EQ(big.coefficient({.z = 70}), mpz_class(1) << 70);
}

TEST(Poly, SubstituteSInvZ) {
  EXPECT_EQ(substitute_s_inv_z(Z * S * T), T);
  EXPECT_EQ(substitute_s_inv_z(Z.pow(2) * S.pow(2) * T.pow(2)), T.pow(2));
  EXPECT_EQ(substitute_s_inv_z(Y1 * Z.pow(2) * S.pow(2) + 1), Y1 + 1);
  EXPECT_EQ(substitute_s_inv_z(S).coefficient({.z = -1}), 1);
}

TEST(Poly, Specialisations) {
  EXPECT_EQ(set_t_one(Z * T.pow(3) + Y1), Z + Y1);
  EXPECT_EQ(set_z_w_one(Y1 * Z * W + Z.pow(2)), Y1 + 1);
}

TEST(Poly, Evaluate) {
  EvalPoint p;
  EXPECT_EQ(evaluate(BRPoly(1), p), 1);
  p.y = 3;
  EXPECT_EQ(evaluate(Y1, p), 2);
  p.z = 2;
  p.s = 3;
  p.t = 5;
  EXPECT_EQ(evaluate(Z * S * T, p), 30);
  p.x = q(1, 2);
  EXPECT_EQ(evaluate(X1.pow(2), p), q(1, 4));
}

TEST(Poly, EvaluateLaurent) {
  EvalPoint p;
  p.z = 4;
  EXPECT_EQ(evaluate(substitute_s_inv_z(S), p), q(1, 4));
  p.z = 0;
  EXPECT_THROW(evaluate(substitute_s_inv_z(S), p), std::domain_error);
  EXPECT_EQ(evaluate(Z + 1, p), 1);
}

TEST(Poly, CoefficientSlice) {
  EXPECT_EQ(coefficient_slice(Z * S * T, 0, 1, 1, 1, 0), BRPoly(1));
  const BRPoly bridge = 1 + X1 * Z.pow(2) * S.pow(2) * T.pow(2);
  EXPECT_EQ(coefficient_slice(bridge, 0, 2, 2, 2, 0), X1);
  EXPECT_TRUE(coefficient_slice(bridge, 3, 0, 0, 0, 1).is_zero());
}

TEST(Poly, SliceReconstruction) {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 200; ++n) {
    const BRPoly p = random_poly(rng);
    std::set<std::tuple<int, int, int, int, int>> sigs;
    for (const auto& [m, c] : p.terms()) sigs.emplace(m.y1, m.z, m.s, m.t, m.w);
    BRPoly sum;
    for (const auto& [i, j, k, l, w] : sigs) {
      sum += coefficient_slice(p, i, j, k, l, w) * BRPoly::monomial({.y1 = i, .z = j, .s = k, .w = w, .t = l});
    }
    EXPECT_EQ(sum, p);
  }
}

TEST(Poly, Json) {
  EXPECT_EQ(to_json(BRPoly(0)), R"({"basis":["X-1","Y-1","Z","S","W","T"],"terms":[]})");
  EXPECT_NE(to_json(W).find(R"({"e":[0,0,0,0,1,0],"c":"1"})"), std::string::npos);
  std::mt19937_64 rng(2);
  for (int n = 0; n < 200; ++n) {
    const BRPoly p = random_poly(rng);
    EXPECT_EQ(poly_from_json(to_json(p)), p);
  }
  EXPECT_THROW(poly_from_json("{\"terms\":[{\"e\":[0,0],\"c\":\"1\"}]}"), std::exception);
  EXPECT_THROW(poly_from_json("not json"), std::exception);
}

TEST(Poly, Text) {
  EXPECT_EQ(to_text(BRPoly(0)), "0");
  EXPECT_EQ(to_text(Y1 + Z * S * T.pow(2)), "(Y-1) + Z·S·T^2");
  EXPECT_EQ(to_text(2 * Z.pow(2)), "2·Z^2");
}

TEST(Poly, CanonicalOrderIsTotalDegreeFirst) {
  const BRPoly p = Z.pow(3) + Y1 + 1;
  std::vector<int> degrees;
  for (const auto& [m, c] : p.terms()) degrees.push_back(m.total_degree());
  EXPECT_EQ(degrees, (std::vector<int>{0, 1, 3}));
}

TEST(PolyProperties, RingAxioms) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 150; ++n) {
    const BRPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    const BRPoly ab = a * b;
    for (const auto& [m, coef] : ab.terms()) EXPECT_LE(m.w, 1);
  }
}

TEST(PolyProperties, EvaluationHomomorphism) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int n = 0; n < 150; ++n) {
    const BRPoly a = random_poly(rng), b = random_poly(rng);
    EvalPoint p;
    p.x = num(rng);
    p.y = num(rng);
    p.z = q(num(rng) == 0 ? 1 : num(rng) | 1, 3);
    p.s = num(rng);
    p.t = q(num(rng), 2);
    p.w = rng() % 2;
    EXPECT_EQ(evaluate(a + b, p), evaluate(a, p) + evaluate(b, p));
    EXPECT_EQ(evaluate(a * b, p), evaluate(a, p) * evaluate(b, p));
  }
}
