#include <algorithm>
#include <utility>

#include "frobtorus/error.hpp"
#include "frobtorus/intpoly.hpp"

namespace frobtorus::intpoly {

namespace {

BigInt power(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw Error(ErrorCode::InvariantViolation, "subresultant division is not exact");
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace

BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant with the zero polynomial");
  const int m = f.degree();
  const int n = g.degree();
  if (n == 0) return power(g.lead(), static_cast<unsigned long>(m));
  if (m == 0) return power(f.lead(), static_cast<unsigned long>(n));

  IntPolynomial A = f;
  IntPolynomial B = g;
  int sign = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((m & 1) && (n & 1)) sign = -1;
  }
  const BigInt a = A.content();
  const BigInt b = B.content();
  A = A.divided_by(a);
  B = B.divided_by(b);
  const BigInt t =
      power(a, static_cast<unsigned long>(B.degree())) * power(b, static_cast<unsigned long>(A.degree()));

  BigInt lead_acc = 1;
  BigInt h = 1;
  for (;;) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    IntPolynomial R = pseudo_divmod(A, B).remainder;
    A = std::move(B);
    if (R.is_zero()) return 0;
    B = R.divided_by(lead_acc * power(h, static_cast<unsigned long>(delta)));
    lead_acc = A.lead();
    if (delta > 0) {
      h = exact_div(power(lead_acc, static_cast<unsigned long>(delta)), power(h, static_cast<unsigned long>(delta - 1)));
    }
    if (B.degree() == 0) {
      const int dA = A.degree();
      h = exact_div(power(B.lead(), static_cast<unsigned long>(dA)), power(h, static_cast<unsigned long>(dA - 1)));
      return sign * t * h;
    }
  }
}

int BivariatePolynomial::degree_y() const {
  for (std::size_t j = by_y.size(); j-- > 0;) {
    if (!by_y[j].is_zero()) return static_cast<int>(j);
  }
  return -1;
}

int BivariatePolynomial::degree_x() const {
  int d = -1;
  for (const auto& c : by_y) d = std::max(d, c.degree());
  return d;
}

IntPolynomial resultant_y(const IntPolynomial& f, const BivariatePolynomial& G) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "bivariate resultant with zero f");
  const int n = G.degree_y();
  if (n <= 0) throw Error(ErrorCode::ZeroPolynomial, "bivariate resultant needs positive y-degree");
  const int bound = std::max(f.degree(), 0) * std::max(G.degree_x(), 0);
  const int points = bound + 1;

  std::vector<BigInt> nodes;
  std::vector<BigInt> values;
  nodes.reserve(static_cast<std::size_t>(points));
  values.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    // 0, 1, -1, 2, -2, ...
    const long x0 = (i + 1) / 2 * ((i & 1) ? 1 : -1);
    const BigInt x(x0);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) coeffs[static_cast<std::size_t>(j)] = G.by_y[static_cast<std::size_t>(j)].evaluate(x);
    const IntPolynomial specialized(std::move(coeffs));
    BigInt value = 0;
    if (!specialized.is_zero()) {
      // The resultant with the formal y-degree n picks up lc(f) for every
      // degree lost by specialization.
      value = resultant(f, specialized) * power(f.lead(), static_cast<unsigned long>(n - specialized.degree()));
    }
    nodes.push_back(x);
    values.push_back(std::move(value));
  }

  // Newton divided differences; they stay integral for integer polynomials at
  // integer nodes.
  std::vector<BigInt> dd = values;
  for (int j = 1; j < points; ++j) {
    for (int i = points - 1; i >= j; --i) {
      const BigInt num = dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)];
      const BigInt den = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(i - j)];
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw Error(ErrorCode::InvariantViolation, "non-integral divided difference in interpolation");
      }
      mpz_divexact(dd[static_cast<std::size_t>(i)].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  IntPolynomial out = IntPolynomial::constant(dd.back());
  for (int i = points - 2; i >= 0; --i) {
    out = out * IntPolynomial::linear_root(nodes[static_cast<std::size_t>(i)]) +
          IntPolynomial::constant(dd[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace frobtorus::intpoly
