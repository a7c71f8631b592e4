#include "frobtorus/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "frobtorus/error.hpp"

namespace frobtorus::zeta {

namespace {

BigInt power(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

using cld = std::complex<long double>;

cld horner(const std::vector<cld>& a, cld z) {
  cld acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
  return acc;
}

}  // namespace

BigInt characteristic_of(const BigInt& q) {
  if (q < 2) throw Error(ErrorCode::InvariantViolation, "field size must be at least 2");
  for (unsigned long d = 2; BigInt(d) * d <= q; ++d) {
    if (mpz_divisible_ui_p(q.get_mpz_t(), d)) return d;
  }
  return q;
}

std::string weil_invariant_violation(const WeilPolynomial& P) {
  if (P.g < 1) return "genus must be at least 1";
  if (P.coeffs.size() != static_cast<std::size_t>(2 * P.g + 1)) return "coefficient count is not 2g+1";
  if (P.q < 2) return "q must be at least 2";
  const BigInt p = characteristic_of(P.q);
  BigInt rest = P.q;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) rest /= p;
  if (rest != 1) return "q is not a prime power";
  if (P.coeffs.back() != 1) return "not monic";
  if (P.coeffs.front() != power(P.q, static_cast<unsigned long>(P.g))) return "constant term is not q^g";
  for (int i = 0; i <= P.g; ++i) {
    const BigInt lhs = P.coeffs[static_cast<std::size_t>(i)];
    const BigInt rhs = power(P.q, static_cast<unsigned long>(P.g - i)) * P.coeffs[static_cast<std::size_t>(2 * P.g - i)];
    if (lhs != rhs) return "functional equation fails at c_" + std::to_string(i);
  }
  return {};
}

void check_weil_invariants(const WeilPolynomial& P) {
  if (auto why = weil_invariant_violation(P); !why.empty()) {
    throw Error(ErrorCode::InvariantViolation, "Weil polynomial " + P.poly().to_string() + ": " + why);
  }
}

WeilPolynomial make_weil(const BigInt& q, int g, std::vector<BigInt> coeffs) {
  WeilPolynomial P{q, g, std::move(coeffs)};
  check_weil_invariants(P);
  return P;
}

std::vector<BigInt> power_sums(const curves::PointCounts& counts) {
  std::vector<BigInt> s;
  BigInt qi = 1;
  for (auto n : counts.counts) {
    qi *= static_cast<unsigned long>(counts.q);
    s.push_back(qi + 1 - BigInt(static_cast<unsigned long>(n)));
  }
  return s;
}

WeilPolynomial weil_from_counts(const curves::PointCounts& counts) {
  const int g = counts.g;
  if (g < 1 || counts.counts.size() != static_cast<std::size_t>(g)) {
    throw Error(ErrorCode::InvariantViolation, "point counts must hold N_1..N_g");
  }
  const auto s = power_sums(counts);
  const BigInt q(static_cast<unsigned long>(counts.q));
  // L(T) = sum a_i T^i
  std::vector<BigInt> a(static_cast<std::size_t>(2 * g) + 1);
  a[0] = 1;
  for (int i = 1; i <= g; ++i) {
    BigInt acc = 0;
    for (int j = 1; j <= i; ++j) acc += s[static_cast<std::size_t>(j - 1)] * a[static_cast<std::size_t>(i - j)];
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(i))) {
      throw Error(ErrorCode::NonIntegralCoefficient,
                  "Newton identity for a_" + std::to_string(i) + " is not integral; counts are inconsistent");
    }
    a[static_cast<std::size_t>(i)] = -acc / i;
  }
  for (int i = g + 1; i <= 2 * g; ++i) {
    a[static_cast<std::size_t>(i)] = power(q, static_cast<unsigned long>(i - g)) * a[static_cast<std::size_t>(2 * g - i)];
  }
  std::vector<BigInt> c(a.rbegin(), a.rend());
  return make_weil(q, g, std::move(c));
}

std::vector<std::complex<long double>> complex_roots(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) return {};
  std::vector<cld> a;
  const long double lead = static_cast<long double>(mpz_get_d(f.lead().get_mpz_t()));
  for (const auto& c : f.coeffs()) a.emplace_back(static_cast<long double>(mpz_get_d(c.get_mpz_t())) / lead, 0.0L);
  if (n == 1) return {-a[0]};

  std::vector<cld> da;
  for (std::size_t i = 1; i < a.size(); ++i) da.push_back(a[i] * static_cast<long double>(i));

  // Cauchy radius bound for the starting circle.
  long double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(i)]));
  radius = std::min(1.0L + radius, std::pow(std::abs(a[0]) + 1.0L, 1.0L / n) + 1.0L);

  std::vector<cld> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }
  for (int iter = 0; iter < 1000; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      const cld pv = horner(a, z[k]);
      const cld dv = horner(da, z[k]);
      if (pv == cld(0)) continue;
      const cld ratio = pv / dv;
      cld repulsion = 0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      }
      const cld w = ratio / (1.0L - ratio * repulsion);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst < 1e-18L) break;
  }
  for (auto& r : z) {
    for (int i = 0; i < 3; ++i) {
      const cld dv = horner(da, r);
      if (dv == cld(0)) break;
      r -= horner(a, r) / dv;
    }
  }
  return z;
}

WeilCheck is_weil(const WeilPolynomial& P) {
  WeilCheck out;
  out.ok = true;
  const long double modulus = std::sqrt(static_cast<long double>(mpz_get_d(P.q.get_mpz_t())));
  for (const auto& r : complex_roots(intpoly::squarefree_part(P.poly()))) {
    const long double dev = std::abs(std::abs(r) / modulus - 1.0L);
    const double d = static_cast<double>(dev);
    if (!(d <= out.max_relative_deviation)) out.max_relative_deviation = d;
    if (!(dev <= kRootModulusTolerance)) {
      out.ok = false;
      if (!out.offending_root) {
        out.offending_root = std::complex<double>(static_cast<double>(r.real()), static_cast<double>(r.imag()));
      }
    }
  }
  return out;
}

bool is_ordinary(const WeilPolynomial& P) {
  const BigInt p = characteristic_of(P.q);
  return !mpz_divisible_p(P.coeffs[static_cast<std::size_t>(P.g)].get_mpz_t(), p.get_mpz_t());
}

bool is_ordinary_factor(const IntPolynomial& h, const BigInt& p) {
  const int d = h.degree();
  if (d < 1 || d % 2 != 0) return false;
  return !mpz_divisible_p(h.coeff(d / 2).get_mpz_t(), p.get_mpz_t());
}

nlohmann::json big_to_json(const BigInt& v) {
  static const BigInt limit = BigInt(1) << 53;
  if (abs(v) <= limit) return nlohmann::json(v.get_si());
  return nlohmann::json(v.get_str());
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    BigInt v;
    const bool has_digit = std::any_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (!has_digit || v.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad integer string '" + s + "'");
    return v;
  }
  throw Error(ErrorCode::ParseError, "expected an integer");
}

nlohmann::json to_json(const WeilPolynomial& P) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : P.coeffs) coeffs.push_back(big_to_json(c));
  return {{"q", big_to_json(P.q)}, {"g", P.g}, {"coeffs", coeffs}};
}

WeilPolynomial weil_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("g") || !j.contains("coeffs") || !j["coeffs"].is_array() ||
      !j["g"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "Weil polynomial JSON needs q, g and coeffs");
  }
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(big_from_json(c));
  return make_weil(big_from_json(j["q"]), j["g"].get<int>(), std::move(coeffs));
}

}  // namespace frobtorus::zeta
