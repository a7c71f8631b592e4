#pragma once

// Absolute simplicity of an isogeny class from its Weil polynomial.
//
// Q[pi] is the Q-rational model of the Frobenius torus: when P is irreducible
// it is a field of degree 2g and Frobenius acts irreducibly. Absolute
// simplicity needs this for every power pi^n. The field Q(pi^n) can only lose
// degree when two Frobenius eigenvalues differ by a root of unity, and every
// such ratio is a root of the ratio polynomial R, so only the finitely many
// orders m with phi(m) <= deg R = 4g^2 need checking.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobtorus/intpoly.hpp"
#include "frobtorus/zeta.hpp"

namespace frobtorus::simplicity {

using intpoly::IntPolynomial;
using zeta::WeilPolynomial;

struct FrobeniusPowerReport {
  int n = 1;
  IntPolynomial charpoly;  // roots alpha_i^n, degree 2g
  IntPolynomial minpoly;   // squarefree part of charpoly
  int degree = 0;          // deg minpoly
};

/// Monic polynomial with roots alpha_i^n: Res_y(P(y), T - y^n). The result is
/// checked against the Weil invariants over q^n on every call.
IntPolynomial charpoly_power(const WeilPolynomial& P, int n);

/// charpoly_power as a Weil polynomial over the field with q^n elements.
WeilPolynomial charpoly_power_weil(const WeilPolynomial& P, int n);

IntPolynomial minpoly_power(const WeilPolynomial& P, int n);

FrobeniusPowerReport frobenius_power_report(const WeilPolynomial& P, int n);

/// Res_y(P(y), sum c_i x^{2g-i} y^i): degree (2g)^2, roots alpha_j / alpha_i.
IntPolynomial ratio_poly(const WeilPolynomial& P);

/// { m >= 2 : Phi_m | ratio_poly(P) }, over all m with phi(m) <= (2g)^2.
/// Requires P squarefree.
std::vector<int> ratio_torsion_orders(const WeilPolynomial& P);

/// All m >= 2 with phi(m) <= bound, ascending.
std::vector<int> orders_with_totient_at_most(unsigned long bound);

/// P irreducible over Q.
bool elliptic_torus_test(const WeilPolynomial& P);

enum class VerdictKind { AbsolutelySimple, NotSimple, NotAbsolutelySimple, Inconclusive };

std::string to_string(VerdictKind kind);
VerdictKind verdict_kind_from_string(const std::string& s);

inline constexpr const char* kReasonRepeatedNonOrdinary = "repeated-factor-non-ordinary";
inline constexpr const char* kReasonDropNonOrdinary = "degree-drop-pure-non-ordinary-power";

/// How irreducibility of P was established for an AbsolutelySimple verdict.
struct IrreducibilityProof {
  std::string method;  // "degree-pattern" or "recombination"
  std::optional<intpoly::DegreePatternCertificate> patterns;
};

struct SimplicityVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  /// Exponent n whose charpoly carries the witness (NotAbsolutelySimple).
  std::optional<int> witness_n;
  /// AbsolutelySimple: [(P, 1)]. NotSimple: factorization of P.
  /// NotAbsolutelySimple: factorization of charpoly_power(P, witness_n).
  /// Inconclusive: factorization of the polynomial that stopped the decision.
  std::vector<intpoly::Factor> factors;
  std::optional<std::vector<int>> torsion_orders;
  std::optional<IrreducibilityProof> irreducibility;
  std::string reason;

  bool operator==(const SimplicityVerdict& o) const;
};

SimplicityVerdict classify(const WeilPolynomial& P);

/// Re-checks a verdict's certificate against P. Returns an empty string when
/// it replays, otherwise what failed.
std::string replay_failure(const WeilPolynomial& P, const SimplicityVerdict& verdict);
inline bool replay(const WeilPolynomial& P, const SimplicityVerdict& verdict) {
  return replay_failure(P, verdict).empty();
}

nlohmann::json to_json(const SimplicityVerdict& v);
SimplicityVerdict verdict_from_json(const nlohmann::json& j);

}  // namespace frobtorus::simplicity
