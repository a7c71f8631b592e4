#pragma once

// Slow reference implementations for cross-checking the library. Nothing
// here calls into frobtorus; only GMP is shared.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Big = mpz_class;

// ---------------------------------------------------------------------------
// Point counting by listing every (x, y).

/// F_{p^k} with elements as coefficient vectors, any irreducible modulus.
struct NaiveField {
  int p = 0;
  int k = 0;
  std::vector<int> modulus;  // monic, low-to-high
  std::vector<std::vector<int>> elements;

  NaiveField(int p_, int k_) : p(p_), k(k_) {
    modulus = find_modulus();
    std::vector<int> v(static_cast<std::size_t>(k), 0);
    for (;;) {
      elements.push_back(v);
      int i = 0;
      while (i < k && ++v[static_cast<std::size_t>(i)] == p) v[static_cast<std::size_t>(i++)] = 0;
      if (i == k) break;
    }
  }

  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
  }

  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<long> prod(static_cast<std::size_t>(2 * k), 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) prod[static_cast<std::size_t>(i + j)] += static_cast<long>(a[i]) * b[j];
    }
    for (int d = 2 * k - 1; d >= k; --d) {
      const long c = prod[static_cast<std::size_t>(d)] % p;
      if (c == 0) continue;
      for (int j = 0; j <= k; ++j) prod[static_cast<std::size_t>(d - k + j)] -= c * modulus[static_cast<std::size_t>(j)];
    }
    std::vector<int> r(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = static_cast<int>(((prod[static_cast<std::size_t>(i)] % p) + p) % p);
    return r;
  }

  std::vector<int> scalar(long c) const {
    std::vector<int> r(static_cast<std::size_t>(k), 0);
    r[0] = static_cast<int>(((c % p) + p) % p);
    return r;
  }

  bool is_zero(const std::vector<int>& a) const {
    for (int v : a) {
      if (v) return false;
    }
    return true;
  }

 private:
  // Remainder of a by monic b over F_p; both low-to-high.
  std::vector<int> rem(std::vector<int> a, const std::vector<int>& b) const {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
      const int c = a.back();
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
      a.pop_back();
    }
    return a;
  }

  bool divisible_by_some_monic(const std::vector<int>& m, int d) const {
    std::vector<int> cand(static_cast<std::size_t>(d) + 1, 0);
    cand.back() = 1;
    for (;;) {
      const auto r = rem(m, cand);
      bool zero = true;
      for (int v : r) zero = zero && v == 0;
      if (zero) return true;
      int i = 0;
      while (i < d && ++cand[static_cast<std::size_t>(i)] == p) cand[static_cast<std::size_t>(i++)] = 0;
      if (i == d) return false;
    }
  }

  std::vector<int> find_modulus() const {
    std::vector<int> m(static_cast<std::size_t>(k) + 1, 0);
    m.back() = 1;
    if (k == 1) return m;
    for (;;) {
      bool irreducible = true;
      for (int d = 1; 2 * d <= k && irreducible; ++d) irreducible = !divisible_by_some_monic(m, d);
      if (irreducible) return m;
      int i = 0;
      while (i < k && ++m[static_cast<std::size_t>(i)] == p) m[static_cast<std::size_t>(i++)] = 0;
      if (i == k) throw std::logic_error("no irreducible modulus");
    }
  }
};

/// #C(F_{p^i}) for y^2 + h y = f with coefficients in F_p, genus g.
inline std::uint64_t naive_count(int p, const std::vector<int>& h, const std::vector<int>& f, int g, int i) {
  const NaiveField F(p, i);
  auto eval = [&](const std::vector<int>& c, const std::vector<int>& x) {
    std::vector<int> acc = F.scalar(0);
    for (std::size_t j = c.size(); j-- > 0;) acc = F.add(F.mul(acc, x), F.scalar(c[j]));
    return acc;
  };
  std::uint64_t n = 0;
  for (const auto& x : F.elements) {
    const auto hx = eval(h, x);
    const auto fx = eval(f, x);
    for (const auto& y : F.elements) {
      // y^2 + h(x) y - f(x)
      const auto lhs = F.add(F.mul(y, y), F.mul(hx, y));
      if (F.add(lhs, F.mul(F.scalar(-1), fx)) == F.scalar(0)) ++n;
    }
  }
  // Chart at infinity u = 1/x, v = y / x^{g+1}: v^2 + H v = F at u = 0.
  const auto coeff = [](const std::vector<int>& c, int d) { return d < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(d)] : 0; };
  const auto H = F.scalar(coeff(h, g + 1));
  const auto Fc = F.scalar(coeff(f, 2 * g + 2));
  for (const auto& v : F.elements) {
    if (F.add(F.add(F.mul(v, v), F.mul(H, v)), F.mul(F.scalar(-1), Fc)) == F.scalar(0)) ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Integer polynomials as coefficient vectors, low-to-high.

using Poly = std::vector<Big>;

inline Poly trimmed(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

/// Determinant by fraction-free Bareiss elimination.
inline Big bareiss_det(std::vector<std::vector<Big>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Big sign = 1;
  Big prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Res(f, g) as the determinant of the Sylvester matrix.
inline Big sylvester_resultant(const Poly& f0, const Poly& g0) {
  const Poly f = trimmed(f0);
  const Poly g = trimmed(g0);
  if (f.empty() || g.empty()) throw std::invalid_argument("zero polynomial");
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  if (m + n == 0) return 1;
  std::vector<std::vector<Big>> s(m + n, std::vector<Big>(m + n, 0));
  // Rows hold coefficients from the top degree down.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = f[m - j];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = g[n - j];
  }
  return bareiss_det(std::move(s));
}

/// Discriminant up to sign and lc: Res(f, f').
inline Big res_with_derivative(const Poly& f) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return sylvester_resultant(f, d);
}

/// Power sums s_1..s_count of the roots of a monic polynomial (Newton).
inline std::vector<Big> root_power_sums(const Poly& f, std::size_t count) {
  const std::size_t d = f.size() - 1;
  auto c = [&](long j) -> Big {  // coefficient of T^{d-j} over lc
    if (j < 0 || static_cast<std::size_t>(j) > d) return 0;
    return f[d - static_cast<std::size_t>(j)];
  };
  std::vector<Big> s(count + 1, 0);
  for (std::size_t k = 1; k <= count; ++k) {
    Big acc = (k <= d) ? Big(c(static_cast<long>(k)) * static_cast<unsigned long>(k)) : Big(0);
    for (std::size_t j = 1; j < k && j <= d; ++j) acc += c(static_cast<long>(j)) * s[k - j];
    s[k] = -acc;
  }
  return s;
}

/// Charpoly of pi^n from the power sums of P's roots: monic, low-to-high.
inline Poly charpoly_from_power_sums(const Poly& P, int n) {
  const std::size_t d = P.size() - 1;
  const auto s = root_power_sums(P, d * static_cast<std::size_t>(n));
  // e_k from t_j = s_{jn} by Newton's identities.
  std::vector<Big> e(d + 1, 0);
  e[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    Big acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      const Big term = e[k - j] * s[j * static_cast<std::size_t>(n)];
      if (j % 2 == 1) acc += term; else acc -= term;
    }
    if (acc % static_cast<unsigned long>(k) != 0) throw std::logic_error("non-integral elementary symmetric function");
    e[k] = acc / static_cast<unsigned long>(k);
  }
  Poly out(d + 1);
  for (std::size_t k = 0; k <= d; ++k) out[d - k] = (k % 2 == 0) ? e[k] : Big(-e[k]);
  return out;
}

/// True when every pi^n, n <= max_n, has 2g distinct eigenvalues.
inline bool all_powers_separable(const Poly& P, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    if (res_with_derivative(charpoly_from_power_sums(P, n)) == 0) return false;
  }
  return true;
}

}  // namespace oracle
