#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobtorus/curves.hpp"
#include "frobtorus/intpoly.hpp"

namespace frobtorus::zeta {

using intpoly::IntPolynomial;

/// Characteristic polynomial of Frobenius P(T) = sum c_i T^i, degree 2g,
/// over a field with q elements.
struct WeilPolynomial {
  BigInt q;
  int g = 0;
  std::vector<BigInt> coeffs;  // c_0 .. c_{2g}

  IntPolynomial poly() const { return IntPolynomial(coeffs); }
  bool operator==(const WeilPolynomial&) const = default;
};

/// Builds a WeilPolynomial and validates it (throws InvariantViolation).
WeilPolynomial make_weil(const BigInt& q, int g, std::vector<BigInt> coeffs);

/// Monic, degree 2g, c_0 = q^g, c_i = q^{g-i} c_{2g-i}, q a prime power.
/// Returns an empty string when all hold, otherwise the first violation.
std::string weil_invariant_violation(const WeilPolynomial& P);
void check_weil_invariants(const WeilPolynomial& P);

/// Characteristic p of the field with q elements.
BigInt characteristic_of(const BigInt& q);

/// s_i = q^i + 1 - N_i.
std::vector<BigInt> power_sums(const curves::PointCounts& counts);

WeilPolynomial weil_from_counts(const curves::PointCounts& counts);

struct WeilCheck {
  bool ok = false;
  double max_relative_deviation = 0.0;
  std::optional<std::complex<double>> offending_root;
};

inline constexpr double kRootModulusTolerance = 1e-9;

/// Numeric diagnostic: all roots have modulus sqrt(q) to relative 1e-9.
WeilCheck is_weil(const WeilPolynomial& P);

/// Complex roots of a squarefree integer polynomial (Aberth iteration with
/// Newton polishing in extended precision).
std::vector<std::complex<long double>> complex_roots(const IntPolynomial& f);

/// Middle coefficient c_g prime to p.
bool is_ordinary(const WeilPolynomial& P);

/// Ordinarity of an irreducible factor h of a Weil polynomial over a field of
/// characteristic p: even degree 2d with c_d prime to p. Odd-degree factors
/// (T -+ sqrt(q)) are never ordinary.
bool is_ordinary_factor(const IntPolynomial& h, const BigInt& p);

nlohmann::json big_to_json(const BigInt& v);
BigInt big_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WeilPolynomial& P);
/// Parses and validates; throws ParseError or InvariantViolation.
WeilPolynomial weil_from_json(const nlohmann::json& j);

}  // namespace frobtorus::zeta
