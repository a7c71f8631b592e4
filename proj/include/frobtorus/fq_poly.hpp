#pragma once

#include <cstdint>
#include <vector>

#include "frobtorus/gf.hpp"

namespace frobtorus::gf {

/// Dense polynomial over a FieldSpec, coefficients low-to-high as field codes.
/// Trailing zeros are always stripped; the zero polynomial has no coefficients.
class FqPoly {
 public:
  using Code = FieldSpec::Code;

  explicit FqPoly(FieldPtr field);
  FqPoly(FieldPtr field, std::vector<Code> coeffs);

  static FqPoly x(const FieldPtr& field);
  static FqPoly constant(const FieldPtr& field, Code c);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Code>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Code coeff(int i) const noexcept;
  Code lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator*(const FqPoly& o) const;
  FqPoly scaled(Code s) const;
  bool operator==(const FqPoly& o) const { return c_ == o.c_; }

  FqPoly derivative() const;
  FqPoly monic() const;
  Code evaluate(Code x) const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Code> c_;
};

struct FqDivision {
  FqPoly quotient;
  FqPoly remainder;
};

FqDivision divmod(const FqPoly& a, const FqPoly& b);
FqPoly mod(const FqPoly& a, const FqPoly& m);
/// Monic gcd; gcd(0, 0) = 0.
FqPoly gcd(const FqPoly& a, const FqPoly& b);
FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m);
FqPoly powmod(const FqPoly& a, std::uint64_t e, const FqPoly& m);

/// Rabin-style test: x^{q^n} = x mod m and gcd(x^{q^d} - x, m) = 1 for every
/// proper divisor d of n = deg m.
bool is_irreducible(const FqPoly& m);

}  // namespace frobtorus::gf
