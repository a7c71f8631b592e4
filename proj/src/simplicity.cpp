#include "frobtorus/simplicity.hpp"

#include <map>
#include <mutex>

#include "frobtorus/error.hpp"

namespace frobtorus::simplicity {

using intpoly::BivariatePolynomial;
using intpoly::Factor;
using intpoly::Factorization;
using intpoly::FactorOptions;

namespace {

BigInt power(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

/// Second opinion on irreducibility: a different lifting prime, no prepass.
bool irreducible_second_pass(const IntPolynomial& f) {
  return intpoly::is_irreducible(f, FactorOptions{.prime_offset = 1, .degree_pattern_prepass = false});
}

bool same_certificate(const std::optional<IrreducibilityProof>& a, const std::optional<IrreducibilityProof>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  if (a->method != b->method || a->patterns.has_value() != b->patterns.has_value()) return false;
  if (!a->patterns) return true;
  return a->patterns->primes == b->patterns->primes && a->patterns->patterns == b->patterns->patterns;
}

nlohmann::json poly_json(const IntPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(zeta::big_to_json(c));
  return out;
}

IntPolynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial must be a coefficient array");
  std::vector<BigInt> c;
  for (const auto& v : j) c.push_back(zeta::big_from_json(v));
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial charpoly_power(const WeilPolynomial& P, int n) {
  return IntPolynomial(charpoly_power_weil(P, n).coeffs);
}

WeilPolynomial charpoly_power_weil(const WeilPolynomial& P, int n) {
  if (n < 1) throw Error(ErrorCode::InvariantViolation, "Frobenius power must be at least 1");
  const BigInt qn = power(P.q, static_cast<unsigned long>(n));
  if (n == 1) return P;
  BivariatePolynomial G;
  G.by_y.resize(static_cast<std::size_t>(n) + 1);
  G.by_y[0] = IntPolynomial{0, 1};
  G.by_y[static_cast<std::size_t>(n)] = IntPolynomial{-1};
  IntPolynomial c = intpoly::resultant_y(P.poly(), G);
  if (!c.is_zero() && c.lead() < 0) c = -c;
  if (c.degree() != 2 * P.g) throw Error(ErrorCode::InvariantViolation, "charpoly of pi^n has the wrong degree");
  return zeta::make_weil(qn, P.g, c.coeffs());
}

IntPolynomial minpoly_power(const WeilPolynomial& P, int n) { return intpoly::squarefree_part(charpoly_power(P, n)); }

FrobeniusPowerReport frobenius_power_report(const WeilPolynomial& P, int n) {
  FrobeniusPowerReport r;
  r.n = n;
  r.charpoly = charpoly_power(P, n);
  r.minpoly = intpoly::squarefree_part(r.charpoly);
  r.degree = r.minpoly.degree();
  return r;
}

IntPolynomial ratio_poly(const WeilPolynomial& P) {
  const int d = 2 * P.g;
  BivariatePolynomial G;
  G.by_y.resize(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    G.by_y[static_cast<std::size_t>(i)] = IntPolynomial::monomial(P.coeffs[static_cast<std::size_t>(i)], d - i);
  }
  return intpoly::resultant_y(P.poly(), G);
}

std::vector<int> orders_with_totient_at_most(unsigned long bound) {
  static std::mutex mutex;
  static std::map<unsigned long, std::vector<int>> memo;
  std::lock_guard lock(mutex);
  if (auto it = memo.find(bound); it != memo.end()) return it->second;
  // phi(m) >= sqrt(m / 2), so m <= 2 bound^2.
  std::vector<int> out;
  const unsigned long limit = 2 * bound * bound + 2;
  for (unsigned long m = 2; m <= limit; ++m) {
    if (intpoly::euler_phi(m) <= bound) out.push_back(static_cast<int>(m));
  }
  return memo.emplace(bound, std::move(out)).first->second;
}

std::vector<int> ratio_torsion_orders(const WeilPolynomial& P) {
  const IntPolynomial f = P.poly();
  if (intpoly::squarefree_part(f).degree() != f.degree()) {
    throw Error(ErrorCode::InvariantViolation, "ratio torsion needs a squarefree Weil polynomial");
  }
  const IntPolynomial R = ratio_poly(P);
  const unsigned long bound = static_cast<unsigned long>(R.degree());
  std::vector<int> out;
  for (int m : orders_with_totient_at_most(bound)) {
    if (intpoly::divides(intpoly::cyclotomic(static_cast<unsigned>(m)), R)) out.push_back(m);
  }
  return out;
}

bool elliptic_torus_test(const WeilPolynomial& P) { return intpoly::is_irreducible(P.poly()); }

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::AbsolutelySimple: return "AbsolutelySimple";
    case VerdictKind::NotSimple: return "NotSimple";
    case VerdictKind::NotAbsolutelySimple: return "NotAbsolutelySimple";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

VerdictKind verdict_kind_from_string(const std::string& s) {
  for (auto k : {VerdictKind::AbsolutelySimple, VerdictKind::NotSimple, VerdictKind::NotAbsolutelySimple,
                 VerdictKind::Inconclusive}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown verdict kind '" + s + "'");
}

bool SimplicityVerdict::operator==(const SimplicityVerdict& o) const {
  return kind == o.kind && witness_n == o.witness_n && factors == o.factors && torsion_orders == o.torsion_orders &&
         same_certificate(irreducibility, o.irreducibility) && reason == o.reason;
}

SimplicityVerdict classify(const WeilPolynomial& P) {
  zeta::check_weil_invariants(P);
  const BigInt p = zeta::characteristic_of(P.q);
  const IntPolynomial f = P.poly();
  SimplicityVerdict v;

  const Factorization fac = intpoly::factor(f);
  if (fac.factors.size() >= 2) {
    v.kind = VerdictKind::NotSimple;
    v.factors = fac.factors;
    return v;
  }
  const Factor& base = fac.factors.front();
  if (base.multiplicity >= 2) {
    v.factors = fac.factors;
    if (zeta::is_ordinary_factor(base.poly, p)) {
      v.kind = VerdictKind::NotAbsolutelySimple;
      v.witness_n = 1;
    } else {
      v.kind = VerdictKind::Inconclusive;
      v.reason = kReasonRepeatedNonOrdinary;
    }
    return v;
  }

  const std::vector<int> orders = ratio_torsion_orders(P);
  v.torsion_orders = orders;
  if (orders.empty()) {
    v.kind = VerdictKind::AbsolutelySimple;
    v.factors = {Factor{f, 1}};
    IrreducibilityProof proof;
    if (auto cert = intpoly::degree_pattern_certificate(f)) {
      proof.method = "degree-pattern";
      proof.patterns = std::move(cert);
    } else {
      proof.method = "recombination";
    }
    v.irreducibility = std::move(proof);
    return v;
  }

  std::vector<Factorization> at_orders;
  for (int m : orders) at_orders.push_back(intpoly::factor(charpoly_power(P, m)));
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (at_orders[i].factors.size() >= 2) {
      v.kind = VerdictKind::NotAbsolutelySimple;
      v.witness_n = orders[i];
      v.factors = at_orders[i].factors;
      return v;
    }
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const Factor& h = at_orders[i].factors.front();
    if (h.multiplicity >= 2 && zeta::is_ordinary_factor(h.poly, p)) {
      v.kind = VerdictKind::NotAbsolutelySimple;
      v.witness_n = orders[i];
      v.factors = at_orders[i].factors;
      return v;
    }
  }
  v.kind = VerdictKind::Inconclusive;
  v.reason = kReasonDropNonOrdinary;
  return v;
}

std::string replay_failure(const WeilPolynomial& P, const SimplicityVerdict& verdict) {
  if (auto why = zeta::weil_invariant_violation(P); !why.empty()) return "Weil polynomial invalid: " + why;
  const IntPolynomial f = P.poly();
  const BigInt p = zeta::characteristic_of(P.q);

  auto product = [](const std::vector<Factor>& fs) {
    Factorization tmp;
    tmp.factors = fs;
    return tmp.product();
  };
  auto all_irreducible = [](const std::vector<Factor>& fs) {
    for (const auto& x : fs) {
      if (x.multiplicity < 1 || !irreducible_second_pass(x.poly)) return false;
    }
    return true;
  };

  try {
    switch (verdict.kind) {
      case VerdictKind::AbsolutelySimple: {
        if (verdict.factors.size() != 1 || verdict.factors[0].poly != f || verdict.factors[0].multiplicity != 1) {
          return "certificate factor is not P itself";
        }
        if (!verdict.irreducibility) return "missing irreducibility proof";
        if (verdict.irreducibility->method == "degree-pattern") {
          if (!verdict.irreducibility->patterns ||
              !intpoly::verify_degree_pattern_certificate(f, *verdict.irreducibility->patterns)) {
            return "degree-pattern certificate does not verify";
          }
        } else if (verdict.irreducibility->method != "recombination" || !irreducible_second_pass(f)) {
          return "P is not irreducible";
        }
        if (!verdict.torsion_orders || !verdict.torsion_orders->empty()) return "torsion orders must be empty";
        if (!ratio_torsion_orders(P).empty()) return "ratio polynomial has cyclotomic factors";
        break;
      }
      case VerdictKind::NotSimple: {
        if (verdict.factors.size() < 2) return "fewer than two distinct factors";
        if (product(verdict.factors) != f) return "factors do not multiply to P";
        if (!all_irreducible(verdict.factors)) return "a certificate factor is reducible";
        break;
      }
      case VerdictKind::NotAbsolutelySimple: {
        if (!verdict.witness_n || *verdict.witness_n < 1) return "missing witness exponent";
        const IntPolynomial target = charpoly_power(P, *verdict.witness_n);
        if (product(verdict.factors) != target) return "factors do not multiply to the witness charpoly";
        if (!all_irreducible(verdict.factors)) return "a certificate factor is reducible";
        const bool split = verdict.factors.size() >= 2;
        const bool ordinary_power = verdict.factors.size() == 1 && verdict.factors[0].multiplicity >= 2 &&
                                    zeta::is_ordinary_factor(verdict.factors[0].poly, p);
        if (!split && !ordinary_power) return "witness is neither a splitting nor an ordinary repeated factor";
        break;
      }
      case VerdictKind::Inconclusive: {
        if (verdict.reason != kReasonRepeatedNonOrdinary && verdict.reason != kReasonDropNonOrdinary) {
          return "unknown inconclusive reason";
        }
        break;
      }
    }
    if (!(classify(P) == verdict)) return "re-classification disagrees with the recorded verdict";
  } catch (const Error& e) {
    return std::string("replay raised ") + e.what();
  }
  return {};
}

nlohmann::json to_json(const SimplicityVerdict& v) {
  nlohmann::json j;
  j["kind"] = to_string(v.kind);
  if (v.witness_n) j["witness_n"] = *v.witness_n;
  if (!v.factors.empty()) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : v.factors) fs.push_back({{"coeffs", poly_json(f.poly)}, {"multiplicity", f.multiplicity}});
    j["factors"] = fs;
  }
  if (v.torsion_orders) j["torsion_orders"] = *v.torsion_orders;
  if (v.irreducibility) {
    nlohmann::json irr{{"method", v.irreducibility->method}};
    if (v.irreducibility->patterns) {
      irr["primes"] = v.irreducibility->patterns->primes;
      irr["patterns"] = v.irreducibility->patterns->patterns;
    }
    j["irreducibility"] = irr;
  }
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

SimplicityVerdict verdict_from_json(const nlohmann::json& j) {
  try {
    SimplicityVerdict v;
    v.kind = verdict_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("witness_n")) v.witness_n = j["witness_n"].get<int>();
    if (j.contains("factors")) {
      for (const auto& f : j["factors"]) v.factors.push_back({poly_from_json(f.at("coeffs")), f.at("multiplicity").get<int>()});
    }
    if (j.contains("torsion_orders")) v.torsion_orders = j["torsion_orders"].get<std::vector<int>>();
    if (j.contains("irreducibility")) {
      const auto& irr = j["irreducibility"];
      IrreducibilityProof proof;
      proof.method = irr.at("method").get<std::string>();
      if (irr.contains("primes")) {
        intpoly::DegreePatternCertificate cert;
        cert.primes = irr["primes"].get<std::vector<unsigned long>>();
        cert.patterns = irr.at("patterns").get<std::vector<std::vector<int>>>();
        proof.patterns = std::move(cert);
      }
      v.irreducibility = std::move(proof);
    }
    if (j.contains("reason")) v.reason = j["reason"].get<std::string>();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("verdict JSON: ") + e.what());
  }
}

}  // namespace frobtorus::simplicity
