#include <algorithm>
#include <bitset>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>

#include "frobtorus/error.hpp"
#include "frobtorus/intpoly.hpp"

namespace frobtorus::intpoly {

namespace {

// --- dense polynomials over F_p, p < 2^31 -------------------------------

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

ModPoly sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const u64 x = i < a.size() ? a[i] : 0;
    const u64 y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  trim(out);
  return out;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

ModPoly scale(const ModPoly& a, u64 s, u64 p) {
  ModPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s % p;
  trim(out);
  return out;
}

ModPoly monic(const ModPoly& a, u64 p) { return a.empty() ? a : scale(a, inv_mod(a.back(), p), p); }

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r = a;
  if (deg(a) < deg(b)) return {{}, r};
  ModPoly q(a.size() - b.size() + 1, 0);
  const u64 li = inv_mod(b.back(), p);
  for (int d = deg(a); d >= deg(b); --d) {
    const u64 c = r[static_cast<std::size_t>(d)] * li % p;
    if (!c) continue;
    q[static_cast<std::size_t>(d - deg(b))] = c;
    for (int i = 0; i <= deg(b); ++i) {
      auto& slot = r[static_cast<std::size_t>(d - deg(b) + i)];
      slot = (slot + p - c * b[static_cast<std::size_t>(i)] % p) % p;
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

ModPoly rem(const ModPoly& a, const ModPoly& b, u64 p) { return divmod(a, b, p).second; }

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// s a + t b = 1 for coprime a, b, with deg s < deg b and deg t < deg a.
std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw Error(ErrorCode::InvariantViolation, "Hensel factors are not coprime mod p");
  const u64 li = inv_mod(r0[0], p);
  return {scale(s0, li, p), scale(t0, li, p)};
}

ModPoly powmod(const ModPoly& base, const BigInt& e, const ModPoly& m, u64 p) {
  ModPoly result{1};
  result = rem(result, m, p);
  ModPoly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

ModPoly reduce_mod_p(const IntPolynomial& f, u64 p) {
  ModPoly out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
  trim(out);
  return out;
}

ModPoly derivative(const ModPoly& a, u64 p) {
  ModPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * (i % p) % p);
  trim(out);
  return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly u, u64 p) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly w = x;
  for (int d = 1; 2 * d <= deg(u); ++d) {
    w = powmod(w, BigInt(static_cast<unsigned long>(p)), u, p);
    ModPoly g = gcd(sub(w, x, p), u, p);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      u = divmod(u, g, p).first;
      w = rem(w, u, p);
    }
  }
  if (deg(u) > 0) out.emplace_back(u, deg(u));
  return out;
}

/// Cantor-Zassenhaus splitting of a product of irreducibles of degree d.
void equal_degree(const ModPoly& u, int d, u64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(u) == d) {
    out.push_back(u);
    return;
  }
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coeff(0, p - 1);
  for (;;) {
    ModPoly a(static_cast<std::size_t>(deg(u)));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = sub(powmod(a, e, u, p), ModPoly{1}, p);
    ModPoly g = gcd(b, u, p);
    if (deg(g) > 0 && deg(g) < deg(u)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(u, g, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(const IntPolynomial& f, u64 p) {
  const ModPoly u = monic(reduce_mod_p(f, p), p);
  std::mt19937_64 rng(p * 1000003u + static_cast<u64>(f.degree()));
  std::vector<ModPoly> out;
  for (auto& [g, d] : distinct_degree(u, p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::vector<int> degree_pattern(const IntPolynomial& f, u64 p) {
  std::vector<int> pattern;
  for (auto& [g, d] : distinct_degree(monic(reduce_mod_p(f, p), p), p)) {
    for (int i = 0; i < deg(g) / d; ++i) pattern.push_back(d);
  }
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

// --- Hensel lifting over Z/mZ ---------------------------------------------

IntPolynomial reduce(const IntPolynomial& a, const BigInt& m) {
  std::vector<BigInt> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) mpz_fdiv_r(out[i].get_mpz_t(), a.coeffs()[i].get_mpz_t(), m.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial symmetric(const IntPolynomial& a, const BigInt& m) {
  const BigInt half = m / 2;
  std::vector<BigInt> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    mpz_fdiv_r(out[i].get_mpz_t(), a.coeffs()[i].get_mpz_t(), m.get_mpz_t());
    if (out[i] > half) out[i] -= m;
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial lift(const ModPoly& a) {
  std::vector<BigInt> out;
  for (u64 c : a) out.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(out));
}

/// Division by a polynomial that is monic modulo m.
Division divmod_monic(const IntPolynomial& a, const IntPolynomial& b, const BigInt& m) {
  const int db = b.degree();
  std::vector<BigInt> r = reduce(a, m).coeffs();
  if (static_cast<int>(r.size()) - 1 < db) return {{}, IntPolynomial(std::move(r))};
  std::vector<BigInt> q(r.size() - static_cast<std::size_t>(db));
  for (int d = static_cast<int>(r.size()) - 1; d >= db; --d) {
    BigInt c = r[static_cast<std::size_t>(d)];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c == 0) continue;
    q[static_cast<std::size_t>(d - db)] = c;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(d - db + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {reduce(IntPolynomial(std::move(q)), m), reduce(IntPolynomial(std::move(r)), m)};
}

struct HenselState {
  IntPolynomial g, h, s, t;
};

/// One quadratic Hensel step m -> m^2 for f = g h with h monic and
/// s g + t h = 1.
HenselState hensel_step(const IntPolynomial& f, const HenselState& in, const BigInt& m2) {
  const IntPolynomial e = reduce(f - in.g * in.h, m2);
  auto [q, r] = divmod_monic(in.s * e, in.h, m2);
  HenselState out;
  out.g = reduce(in.g + in.t * e + q * in.g, m2);
  out.h = reduce(in.h + r, m2);
  const IntPolynomial b = reduce(in.s * out.g + in.t * out.h - IntPolynomial::constant(1), m2);
  auto [c, d] = divmod_monic(in.s * b, out.h, m2);
  out.s = reduce(in.s - d, m2);
  out.t = reduce(in.t - in.t * b - c * out.g, m2);
  return out;
}

/// Lifts f = lc(f) prod factors (mod p) to monic factors modulo the first
/// p^{2^j} >= target. `f` only needs to be known modulo that final modulus.
std::vector<IntPolynomial> multifactor_lift(const IntPolynomial& f, std::vector<ModPoly> factors, u64 p,
                                            const BigInt& target, BigInt& modulus) {
  modulus = p;
  while (modulus < target) modulus *= modulus;
  if (factors.size() == 1) {
    BigInt inv;
    BigInt lc = f.lead();
    mpz_fdiv_r(lc.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    if (!mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t())) {
      throw Error(ErrorCode::InvariantViolation, "leading coefficient not invertible in Hensel lifting");
    }
    return {reduce(f * inv, modulus)};
  }
  const ModPoly h0 = factors.front();
  ModPoly g0{mpz_fdiv_ui(f.lead().get_mpz_t(), p)};
  for (std::size_t i = 1; i < factors.size(); ++i) g0 = mul(g0, factors[i], p);
  auto [s0, t0] = bezout(g0, h0, p);
  HenselState st{lift(g0), lift(h0), lift(s0), lift(t0)};
  BigInt m = p;
  while (m < modulus) {
    m *= m;
    st = hensel_step(reduce(f, m), st, m);
  }
  std::vector<IntPolynomial> out{st.h};
  factors.erase(factors.begin());
  BigInt inner;
  auto rest = multifactor_lift(st.g, std::move(factors), p, target, inner);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

BigInt factor_bound(const IntPolynomial& f) {
  BigInt norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  BigInt two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
  return two_n * root * abs(f.lead());
}

/// Zassenhaus recombination for a primitive squarefree f of degree >= 2.
std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& f, const FactorOptions& options) {
  if (f.degree() <= 1) return {f};
  if (options.degree_pattern_prepass && degree_pattern_certificate(f)) return {f};

  const u64 p = good_primes(f, 1, static_cast<std::size_t>(options.prime_offset)).front();
  std::vector<ModPoly> modular = factor_mod_p(f, p);
  if (modular.size() == 1) return {f};

  const BigInt target = 2 * factor_bound(f) + 1;
  BigInt M;
  std::vector<IntPolynomial> lifted = multifactor_lift(f, modular, p, target, M);

  std::vector<IntPolynomial> found;
  IntPolynomial rest = f;
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

  std::size_t subset_size = 1;
  while (2 * subset_size <= live.size()) {
    bool split = false;
    std::vector<std::size_t> pick(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) pick[i] = i;
    for (;;) {
      IntPolynomial cand = IntPolynomial::constant(rest.lead());
      for (std::size_t i : pick) cand = reduce(cand * lifted[live[i]], M);
      const IntPolynomial g = symmetric(cand, M).primitive_part();
      if (g.degree() > 0) {
        if (auto q = exact_quotient(rest, g)) {
          found.push_back(g);
          rest = *q;
          std::vector<std::size_t> remaining;
          for (std::size_t i = 0; i < live.size(); ++i) {
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) remaining.push_back(live[i]);
          }
          live = std::move(remaining);
          split = true;
          break;
        }
      }
      // next combination in lexicographic order
      std::size_t k = subset_size;
      while (k > 0 && pick[k - 1] == live.size() - subset_size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < subset_size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!split) ++subset_size;
  }
  found.push_back(rest.primitive_part());
  return found;
}

}  // namespace

std::vector<unsigned long> good_primes(const IntPolynomial& f, std::size_t count, std::size_t skip) {
  if (f.degree() < 1) throw Error(ErrorCode::InvariantViolation, "good primes need a nonconstant polynomial");
  std::vector<unsigned long> out;
  for (u64 p = 17; out.size() < count; ++p) {
    bool prime = true;
    for (u64 d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (!prime) continue;
    if (mpz_divisible_ui_p(f.lead().get_mpz_t(), p)) continue;
    const ModPoly fp = reduce_mod_p(f, p);
    if (deg(gcd(fp, derivative(fp, p), p)) != 0) continue;
    if (skip > 0) {
      --skip;
      continue;
    }
    out.push_back(p);
    if (p > (u64{1} << 31)) throw Error(ErrorCode::InvariantViolation, "ran out of word-size primes");
  }
  return out;
}

std::optional<DegreePatternCertificate> degree_pattern_certificate(const IntPolynomial& f, int num_primes) {
  if (f.degree() < 2) return std::nullopt;
  DegreePatternCertificate cert;
  cert.primes = good_primes(f, static_cast<std::size_t>(num_primes));
  for (auto p : cert.primes) cert.patterns.push_back(degree_pattern(f, p));
  if (!verify_degree_pattern_certificate(f, cert)) return std::nullopt;
  return cert;
}

bool verify_degree_pattern_certificate(const IntPolynomial& f, const DegreePatternCertificate& cert) {
  const int n = f.degree();
  if (n < 2 || n > 64 || cert.primes.size() != cert.patterns.size() || cert.primes.empty()) return false;
  std::bitset<65> common;
  common.set();
  for (std::size_t i = 0; i < cert.primes.size(); ++i) {
    const u64 p = cert.primes[i];
    if (p < 2 || mpz_divisible_ui_p(f.lead().get_mpz_t(), p)) return false;
    const ModPoly fp = reduce_mod_p(f, p);
    if (deg(gcd(fp, derivative(fp, p), p)) != 0) return false;
    if (degree_pattern(f, p) != cert.patterns[i]) return false;
    std::bitset<65> reach;
    reach.set(0);
    for (int d : cert.patterns[i]) reach |= reach << static_cast<std::size_t>(d);
    common &= reach;
  }
  for (int d = 1; d < n; ++d) {
    if (common.test(static_cast<std::size_t>(d))) return false;
  }
  return true;
}

Factorization factor(const IntPolynomial& f, const FactorOptions& options) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of zero");
  Factorization out;
  out.unit = f.content();
  if (f.lead() < 0) out.unit = -out.unit;
  const auto parts = squarefree_decomposition(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    for (auto& g : factor_squarefree(parts[i], options)) {
      out.factors.push_back({std::move(g), static_cast<int>(i + 1)});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.poly != b.poly) return less(a.poly, b.poly);
    return a.multiplicity < b.multiplicity;
  });
  if (out.product() != f) throw Error(ErrorCode::InvariantViolation, "factorization does not reproduce its input");
  return out;
}

bool is_irreducible(const IntPolynomial& f, const FactorOptions& options) {
  if (f.degree() < 1) return false;
  const auto fac = factor(f, options);
  return fac.factors.size() == 1 && fac.factors.front().multiplicity == 1;
}

}  // namespace frobtorus::intpoly
