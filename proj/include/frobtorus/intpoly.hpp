#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace frobtorus {

using BigInt = mpz_class;

/// Decimal rendering of a BigInt.
std::string to_decimal(const BigInt& v);

namespace intpoly {

/// Dense polynomial over Z, coefficients low-to-high, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, int degree);
  /// x - a
  static IntPolynomial linear_root(const BigInt& a);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^i, zero outside the stored range.
  BigInt coeff(int i) const;
  const BigInt& lead() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const BigInt& s) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  BigInt evaluate(const BigInt& x) const;
  IntPolynomial derivative() const;
  /// gcd of the coefficients, positive; 0 for the zero polynomial.
  BigInt content() const;
  /// Divided by content, leading coefficient made positive.
  IntPolynomial primitive_part() const;
  /// Exact division of every coefficient by s (throws NonIntegralCoefficient).
  IntPolynomial divided_by(const BigInt& s) const;
  /// p(x^k)
  IntPolynomial compose_power(int k) const;
  IntPolynomial pow(unsigned e) const;

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();

  std::vector<BigInt> c_;
};

/// Strict deterministic order (degree, then coefficients from the top).
bool less(const IntPolynomial& a, const IntPolynomial& b);

struct Division {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// lc(b)^{max(deg a - deg b + 1, 0)} a = q b + r.
Division pseudo_divmod(const IntPolynomial& a, const IntPolynomial& b);
/// a / b when b divides a over Z, otherwise nullopt.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
bool divides(const IntPolynomial& b, const IntPolynomial& a);

/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// f / gcd(f, f'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& f);

/// Yun decomposition of a primitive polynomial: result[i] is the product of
/// the irreducible factors of multiplicity i + 1.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f);

/// Res(f, g) = lc(f)^{deg g} prod_{f(a)=0} g(a), by the subresultant PRS.
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);

/// Polynomial in y with coefficients in Z[x]: G(x, y) = sum_j by_y[j](x) y^j.
struct BivariatePolynomial {
  std::vector<IntPolynomial> by_y;

  int degree_y() const;
  int degree_x() const;
};

/// Res_y(f(y), G(x, y)) as a polynomial in x, by evaluation at
/// x = 0, 1, -1, 2, -2, ... and Newton interpolation.
IntPolynomial resultant_y(const IntPolynomial& f, const BivariatePolynomial& G);

struct Factor {
  IntPolynomial poly;
  int multiplicity = 1;

  bool operator==(const Factor&) const = default;
};

struct Factorization {
  /// Signed content: f = unit * prod factor^multiplicity.
  BigInt unit = 1;
  /// Primitive irreducible factors with positive leading coefficient, sorted.
  std::vector<Factor> factors;

  IntPolynomial product() const;
};

struct FactorOptions {
  /// Good primes skipped before picking the lifting prime.
  int prime_offset = 0;
  /// Try the degree-pattern irreducibility proof first.
  bool degree_pattern_prepass = true;
};

/// Complete factorization over Q (Zassenhaus).
Factorization factor(const IntPolynomial& f, const FactorOptions& options = {});

bool is_irreducible(const IntPolynomial& f, const FactorOptions& options = {});

/// Irreducibility proof from factorization degree patterns modulo several
/// good primes whose possible factor degrees have no common nontrivial value.
struct DegreePatternCertificate {
  std::vector<unsigned long> primes;
  std::vector<std::vector<int>> patterns;  // sorted degrees of the factors mod each prime
};

std::optional<DegreePatternCertificate> degree_pattern_certificate(const IntPolynomial& f, int num_primes = 3);
bool verify_degree_pattern_certificate(const IntPolynomial& f, const DegreePatternCertificate& cert);

/// Smallest primes >= 17 not dividing lc(f) disc(f); f squarefree.
std::vector<unsigned long> good_primes(const IntPolynomial& f, std::size_t count, std::size_t skip = 0);

/// Phi_m, memoized.
const IntPolynomial& cyclotomic(unsigned m);

unsigned long euler_phi(unsigned long m);

}  // namespace intpoly
}  // namespace frobtorus
