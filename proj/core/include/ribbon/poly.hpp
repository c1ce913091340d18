#pragma once

// Exact sparse polynomials in (X-1), (Y-1), Z, S, W, T over the integers,
// modulo W^2 = W. Z exponents may be negative (needed for S -> 1/Z).

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ribbon {

struct Monomial {
  int x1 = 0;  // exponent of (X-1)
  int y1 = 0;  // exponent of (Y-1)
  int z = 0;
  int s = 0;
  int w = 0;  // 0 or 1
  int t = 0;

  int total_degree() const { return x1 + y1 + z + s + w + t; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Total degree first, then lexicographic on (x1, y1, z, s, w, t).
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct EvalPoint {
  mpq_class x = 1, y = 1, z = 1, s = 1, w = 1, t = 1;
};

class BRPoly {
 public:
  using Terms = std::map<Monomial, mpz_class, CanonicalOrder>;

  BRPoly() = default;
  BRPoly(long c);  // NOLINT(google-explicit-constructor): integers embed
  explicit BRPoly(const mpz_class& c);
  static BRPoly monomial(const Monomial& m, const mpz_class& c = 1);

  static BRPoly x_minus_1() { return monomial({.x1 = 1}); }
  static BRPoly y_minus_1() { return monomial({.y1 = 1}); }
  static BRPoly var_x() { return x_minus_1() + 1; }
  static BRPoly var_y() { return y_minus_1() + 1; }
  static BRPoly var_z() { return monomial({.z = 1}); }
  static BRPoly var_s() { return monomial({.s = 1}); }
  static BRPoly var_w() { return monomial({.w = 1}); }
  static BRPoly var_t() { return monomial({.t = 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  mpz_class coefficient(const Monomial& m) const;

  // Adds c * m in place; drops the term if it cancels.
  void add_term(const Monomial& m, const mpz_class& c);

  BRPoly& operator+=(const BRPoly& rhs);
  BRPoly& operator-=(const BRPoly& rhs);
  BRPoly& operator*=(const BRPoly& rhs);
  friend BRPoly operator+(BRPoly lhs, const BRPoly& rhs) { return lhs += rhs; }
  friend BRPoly operator-(BRPoly lhs, const BRPoly& rhs) { return lhs -= rhs; }
  friend BRPoly operator*(const BRPoly& lhs, const BRPoly& rhs);
  friend BRPoly operator-(const BRPoly& p);
  friend bool operator==(const BRPoly& a, const BRPoly& b) { return a.terms_ == b.terms_; }

  BRPoly pow(unsigned n) const;

 private:
  Terms terms_;
};

// Product of monomials with W^2 = W.
Monomial multiply(const Monomial& a, const Monomial& b);

// S -> Z^{-1}: Z exponent becomes z - s, S exponent 0.
BRPoly substitute_s_inv_z(const BRPoly& p);
// Specialisations that set variables to 1 symbolically.
BRPoly set_t_one(const BRPoly& p);
BRPoly set_z_w_one(const BRPoly& p);

// Throws std::domain_error when Z = 0 meets a negative Z exponent.
mpq_class evaluate(const BRPoly& p, const EvalPoint& point);

// Sum of c * (X-1)^a over terms whose remaining exponents equal (i,j,k,l,m),
// returned as a polynomial in (X-1) alone.
BRPoly coefficient_slice(const BRPoly& p, int i, int j, int k, int l, int m);

std::string to_json(const BRPoly& p);
BRPoly poly_from_json(std::string_view text);
// "(Y-1) + Z·S·T^2"; zero prints as "0".
std::string to_text(const BRPoly& p);

}  // namespace ribbon
