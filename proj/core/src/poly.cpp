#include "ribbon/poly.hpp"

#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace ribbon {
namespace {

auto key(const Monomial& m) { return std::tie(m.x1, m.y1, m.z, m.s, m.w, m.t); }

mpq_class power(const mpq_class& base, int e) {
  mpq_class out = 1;
  const bool invert = e < 0;
  for (int i = 0; i < (invert ? -e : e); ++i) out *= base;
  if (invert) {
    if (out == 0) throw std::domain_error("negative power of zero");
    out = 1 / out;
  }
  return out;
}

}  // namespace

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db;
  return key(a) < key(b);
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial m{a.x1 + b.x1, a.y1 + b.y1, a.z + b.z, a.s + b.s, a.w + b.w, a.t + b.t};
  if (m.w > 1) m.w = 1;
  return m;
}

BRPoly::BRPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

BRPoly::BRPoly(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

BRPoly BRPoly::monomial(const Monomial& m, const mpz_class& c) {
  if (m.w < 0 || m.w > 1) throw std::invalid_argument("W exponent must be 0 or 1");
  BRPoly p;
  p.add_term(m, c);
  return p;
}

mpz_class BRPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void BRPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BRPoly& BRPoly::operator+=(const BRPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BRPoly& BRPoly::operator-=(const BRPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BRPoly operator*(const BRPoly& lhs, const BRPoly& rhs) {
  BRPoly out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(multiply(ma, mb), ca * cb);
  }
  return out;
}

BRPoly& BRPoly::operator*=(const BRPoly& rhs) { return *this = *this * rhs; }

BRPoly operator-(const BRPoly& p) {
  BRPoly out;
  for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, -c);
  return out;
}

BRPoly BRPoly::pow(unsigned n) const {
  BRPoly out = 1;
  BRPoly base = *this;
  while (n) {
    if (n & 1U) out *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return out;
}

BRPoly substitute_s_inv_z(const BRPoly& p) {
  BRPoly out;
  for (const auto& [entry, c] : p.terms()) {
    Monomial m = entry;
    m.z -= m.s;
    m.s = 0;
    out.add_term(m, c);
  }
  return out;
}

BRPoly set_t_one(const BRPoly& p) {
  BRPoly out;
  for (const auto& [entry, c] : p.terms()) {
    Monomial m = entry;
    m.t = 0;
    out.add_term(m, c);
  }
  return out;
}

BRPoly set_z_w_one(const BRPoly& p) {
  BRPoly out;
  for (const auto& [entry, c] : p.terms()) {
    Monomial m = entry;
    m.z = 0;
    m.w = 0;
    out.add_term(m, c);
  }
  return out;
}

mpq_class evaluate(const BRPoly& p, const EvalPoint& point) {
  EvalPoint pt = point;
  for (mpq_class* v : {&pt.x, &pt.y, &pt.z, &pt.s, &pt.w, &pt.t}) v->canonicalize();
  const mpq_class xm1 = pt.x - 1;
  const mpq_class ym1 = pt.y - 1;
  mpq_class sum = 0;
  for (const auto& [m, c] : p.terms()) {
    if (m.z < 0 && pt.z == 0) throw std::domain_error("Z = 0 with a negative Z exponent");
    sum += mpq_class(c) * power(xm1, m.x1) * power(ym1, m.y1) * power(pt.z, m.z) * power(pt.s, m.s) *
           power(pt.w, m.w) * power(pt.t, m.t);
  }
  return sum;
}

BRPoly coefficient_slice(const BRPoly& p, int i, int j, int k, int l, int m) {
  BRPoly out;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.y1 == i && mono.z == j && mono.s == k && mono.t == l && mono.w == m) {
      out.add_term(Monomial{.x1 = mono.x1}, c);
    }
  }
  return out;
}

std::string to_json(const BRPoly& p) {
  nlohmann::ordered_json j;
  j["basis"] = {"X-1", "Y-1", "Z", "S", "W", "T"};
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json term;
    term["e"] = {m.x1, m.y1, m.z, m.s, m.w, m.t};
    term["c"] = c.get_str();
    j["terms"].push_back(std::move(term));
  }
  return j.dump();
}

BRPoly poly_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  BRPoly out;
  for (const auto& term : j.at("terms")) {
    const auto& e = term.at("e");
    if (e.size() != 6) throw std::invalid_argument("exponent vector must have 6 entries");
    Monomial m{e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>(), e[4].get<int>(),
               e[5].get<int>()};
    if (m.w < 0 || m.w > 1) throw std::invalid_argument("W exponent must be 0 or 1");
    out.add_term(m, mpz_class(term.at("c").get<std::string>()));
  }
  return out;
}

std::string to_text(const BRPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string factors;
    auto factor = [&](const char* name, int e) {
      if (e == 0) return;
      if (!factors.empty()) factors += "·";
      factors += name;
      if (e != 1) factors += "^" + std::to_string(e);
    };
    factor("(X-1)", m.x1);
    factor("(Y-1)", m.y1);
    factor("Z", m.z);
    factor("S", m.s);
    factor("W", m.w);
    factor("T", m.t);

    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "·";
      out += factors;
    }
    first = false;
  }
  return out;
}

}  // namespace ribbon
