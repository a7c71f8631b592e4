#include "frobtorus/intpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "frobtorus/error.hpp"

namespace frobtorus {

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

namespace intpoly {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear_root(const BigInt& a) { return IntPolynomial(std::vector<BigInt>{-a, 1}); }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

const BigInt& IntPolynomial::lead() const {
  if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < c_.size()) out[i] += c_[i];
    if (i < o.c_.size()) out[i] += o.c_[i];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < c_.size()) out[i] += c_[i];
    if (i < o.c_.size()) out[i] -= o.c_[i];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& s) const {
  std::vector<BigInt> out(c_);
  for (auto& c : out) c *= s;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const { return *this * BigInt(-1); }

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (lead() < 0) g = -g;
  return divided_by(g);
}

IntPolynomial IntPolynomial::divided_by(const BigInt& s) const {
  if (s == 0) throw Error(ErrorCode::DivisionByZero, "polynomial divided by zero scalar");
  std::vector<BigInt> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!mpz_divisible_p(c_[i].get_mpz_t(), s.get_mpz_t())) {
      throw Error(ErrorCode::NonIntegralCoefficient, "inexact scalar division");
    }
    mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), s.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::compose_power(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(degree()) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) s += mag.get_str();
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

bool less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const int c = cmp(a.coeffs()[static_cast<std::size_t>(i)], b.coeffs()[static_cast<std::size_t>(i)]);
    if (c != 0) return c < 0;
  }
  return false;
}

Division pseudo_divmod(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "pseudo-division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {{}, a};
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const BigInt& lb = b.lead();
  for (int d = a.degree(); d >= db; --d) {
    const BigInt c = rem[static_cast<std::size_t>(d)];
    for (auto& v : rem) v *= lb;
    for (auto& v : quo) v *= lb;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(d - db)] += c;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d - db + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  const int db = b.degree();
  if (a.degree() < db) return std::nullopt;
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const BigInt& lb = b.lead();
  BigInt t;
  for (int d = a.degree(); d >= db; --d) {
    const BigInt& c = rem[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), c.get_mpz_t(), lb.get_mpz_t());
    quo[static_cast<std::size_t>(d - db)] = t;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d - db + i)] -= t * b.coeffs()[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < db; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quo));
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) { return exact_quotient(a, b).has_value(); }

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_divmod(x, y).remainder;
    x = std::move(y);
    y = r.is_zero() ? IntPolynomial{} : r.primitive_part();
  }
  return x.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of zero");
  const IntPolynomial p = f.primitive_part();
  if (p.degree() <= 0) return IntPolynomial::constant(1);
  const IntPolynomial g = gcd(p, p.derivative());
  auto q = exact_quotient(p, g);
  if (!q) throw Error(ErrorCode::InvariantViolation, "gcd does not divide its argument");
  return q->primitive_part();
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<IntPolynomial> out;
  const IntPolynomial p = f.primitive_part();
  if (p.degree() <= 0) return out;
  auto quotient = [](const IntPolynomial& a, const IntPolynomial& b) {
    auto q = exact_quotient(a, b);
    if (!q) throw Error(ErrorCode::InvariantViolation, "inexact division in squarefree decomposition");
    return *q;
  };
  const IntPolynomial dp = p.derivative();
  const IntPolynomial a0 = gcd(p, dp);
  IntPolynomial b = quotient(p, a0);
  IntPolynomial c = quotient(dp, a0);
  IntPolynomial d = c - b.derivative();
  while (b.degree() > 0) {
    const IntPolynomial a = gcd(b, d);
    out.push_back(a);
    b = quotient(b, a);
    c = quotient(d, a);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

IntPolynomial Factorization::product() const {
  IntPolynomial out = IntPolynomial::constant(unit);
  for (const auto& f : factors) out = out * f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return out;
}

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const IntPolynomial& cyclotomic(unsigned m) {
  if (m == 0) throw Error(ErrorCode::InvariantViolation, "cyclotomic index must be positive");
  static std::recursive_mutex mutex;
  static std::map<unsigned, IntPolynomial> memo;
  std::lock_guard lock(mutex);
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  // x^m - 1 divided by Phi_d for every proper divisor d.
  IntPolynomial acc = IntPolynomial::monomial(1, static_cast<int>(m)) - IntPolynomial::constant(1);
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto q = exact_quotient(acc, cyclotomic(d));
    if (!q) throw Error(ErrorCode::InvariantViolation, "cyclotomic division is not exact");
    acc = std::move(*q);
  }
  return memo.emplace(m, std::move(acc)).first->second;
}

}  // namespace intpoly
}  // namespace frobtorus
