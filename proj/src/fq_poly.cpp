#include "frobtorus/fq_poly.hpp"

#include <algorithm>
#include <utility>

#include "frobtorus/error.hpp"

namespace frobtorus::gf {

FqPoly::FqPoly(FieldPtr field) : field_(std::move(field)) {}

FqPoly::FqPoly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto c : c_) {
    if (c >= field_->order()) throw Error(ErrorCode::InvariantViolation, "coefficient code out of range");
  }
  trim();
}

FqPoly FqPoly::x(const FieldPtr& field) { return {field, {0, 1}}; }

FqPoly FqPoly::constant(const FieldPtr& field, Code c) { return {field, {c}}; }

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly::Code FqPoly::coeff(int i) const noexcept {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
  std::vector<Code> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->add(coeff(int(i)), o.coeff(int(i)));
  return {field_, std::move(out)};
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
  std::vector<Code> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(coeff(int(i)), o.coeff(int(i)));
  return {field_, std::move(out)};
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
  if (is_zero() || o.is_zero()) return FqPoly(field_);
  std::vector<Code> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      out[i + j] = field_->add(out[i + j], field_->mul(c_[i], o.c_[j]));
    }
  }
  return {field_, std::move(out)};
}

FqPoly FqPoly::scaled(Code s) const {
  std::vector<Code> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_->mul(c_[i], s);
  return {field_, std::move(out)};
}

FqPoly FqPoly::derivative() const {
  std::vector<Code> out;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out.push_back(field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i))));
  }
  return {field_, std::move(out)};
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lead()));
}

FqPoly::Code FqPoly::evaluate(Code x) const {
  Code acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

FqDivision divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto& F = *a.field();
  std::vector<FqPoly::Code> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {FqPoly(a.field()), a};
  std::vector<FqPoly::Code> quo(a.degree() - db + 1, 0);
  const auto lead_inv = F.inv(b.lead());
  for (int d = a.degree(); d >= db; --d) {
    const auto c = rem[d];
    if (c == 0) continue;
    const auto factor = F.mul(c, lead_inv);
    quo[d - db] = factor;
    for (int i = 0; i <= db; ++i) rem[d - db + i] = F.sub(rem[d - db + i], F.mul(factor, b.coeffs()[i]));
  }
  return {FqPoly(a.field(), std::move(quo)), FqPoly(a.field(), std::move(rem))};
}

FqPoly mod(const FqPoly& a, const FqPoly& m) { return divmod(a, m).remainder; }

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a;
  FqPoly y = b;
  while (!y.is_zero()) {
    FqPoly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) { return mod(a * b, m); }

FqPoly powmod(const FqPoly& a, std::uint64_t e, const FqPoly& m) {
  FqPoly result = mod(FqPoly::constant(a.field(), 1), m);
  FqPoly base = mod(a, m);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const FqPoly& m) {
  const int n = m.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const auto& field = m.field();
  const std::uint64_t q = field->order();
  const FqPoly x = FqPoly::x(field);
  // frob[d] = x^{q^d} mod m
  std::vector<FqPoly> frob;
  frob.push_back(mod(x, m));
  for (int d = 1; d <= n; ++d) frob.push_back(powmod(frob.back(), q, m));
  if (!(frob[n] == mod(x, m))) return false;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    if (gcd(frob[d] - x, m).degree() > 0) return false;
  }
  return true;
}

}  // namespace frobtorus::gf
