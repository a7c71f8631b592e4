#include <doctest.h>

#include "frobtorus/error.hpp"
#include "frobtorus/simplicity.hpp"
#include "oracles/oracles.hpp"

using namespace frobtorus;
using namespace frobtorus::simplicity;
using frobtorus::BigInt;
using intpoly::Factor;

namespace {

WeilPolynomial W(long q, int g, std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return zeta::make_weil(BigInt(q), g, v);
}

WeilPolynomial from_poly(long q, int g, const IntPolynomial& f) { return zeta::make_weil(BigInt(q), g, f.coeffs()); }

}  // namespace

TEST_SUITE("simplicity") {
  TEST_CASE("charpoly_power examples") {
    CHECK(charpoly_power(W(5, 1, {5, -2, 1}), 2) == IntPolynomial{25, 6, 1});
    CHECK(charpoly_power(W(5, 1, {5, -2, 1}), 1) == IntPolynomial{5, -2, 1});
    CHECK(charpoly_power(W(5, 1, {5, 0, 1}), 2) == IntPolynomial{25, 10, 1});
    CHECK(charpoly_power(W(5, 2, {25, 0, 2, 0, 1}), 2) == IntPolynomial{25, 2, 1} * IntPolynomial{25, 2, 1});
    CHECK_THROWS_AS(charpoly_power(W(5, 1, {5, -2, 1}), 0), Error);
  }

  TEST_CASE("charpoly_power agrees with the power-sum oracle") {
    for (const auto& P : {W(5, 1, {5, -2, 1}), W(3, 2, {9, 0, 2, 0, 1}), W(3, 2, {9, 3, 1, 1, 1}),
                          W(7, 3, {343, 49, 7, -5, 1, 1, 1})}) {
      for (int n = 1; n <= 7; ++n) {
        CHECK(charpoly_power(P, n).coeffs() == oracle::charpoly_from_power_sums(P.coeffs, n));
      }
    }
  }

  TEST_CASE("minpoly_power examples") {
    CHECK(minpoly_power(W(5, 1, {5, 0, 1}), 2) == IntPolynomial{5, 1});
    CHECK(minpoly_power(W(5, 1, {5, -2, 1}), 2) == IntPolynomial{25, 6, 1});
    CHECK(minpoly_power(W(5, 1, {5, -2, 1}), 1) == IntPolynomial{5, -2, 1});
    const auto r = frobenius_power_report(W(5, 1, {5, 0, 1}), 2);
    CHECK(r.degree == 1);
    CHECK(intpoly::divides(r.minpoly, r.charpoly));
  }

  TEST_CASE("ratio polynomial") {
    const auto R1 = ratio_poly(W(5, 1, {5, 0, 1}));
    CHECK(R1.degree() == 4);
    const IntPolynomial xm1{-1, 1}, xp1{1, 1};
    CHECK(R1.primitive_part() == xm1 * xm1 * xp1 * xp1);

    const auto R2 = ratio_poly(W(5, 1, {5, -2, 1}));
    CHECK(R2.degree() == 4);
    const auto rest = intpoly::exact_quotient(R2, xm1 * xm1);
    REQUIRE(rest.has_value());
    CHECK(rest->primitive_part() == IntPolynomial{5, 6, 5});

    const auto R3 = ratio_poly(W(3, 2, {9, 3, 1, 1, 1}));
    CHECK(R3.degree() == 16);
    CHECK(intpoly::divides(xm1.pow(4), R3));
  }

  TEST_CASE("ratio torsion orders") {
    CHECK(ratio_torsion_orders(W(5, 1, {5, 0, 1})) == std::vector<int>{2});
    CHECK(ratio_torsion_orders(W(5, 1, {5, -2, 1})).empty());
    CHECK(ratio_torsion_orders(W(3, 2, {9, 0, 0, 0, 1})) == std::vector<int>{2, 4});
    CHECK_THROWS_AS(ratio_torsion_orders(W(25, 2, {625, 100, 54, 4, 1})), Error);
    const auto orders = orders_with_totient_at_most(4);
    CHECK(orders == std::vector<int>{2, 3, 4, 5, 6, 8, 10, 12});
  }

  TEST_CASE("elliptic torus test") {
    CHECK(elliptic_torus_test(W(5, 1, {5, -2, 1})));
    CHECK_FALSE(elliptic_torus_test(from_poly(5, 2, IntPolynomial{5, 0, 1} * IntPolynomial{5, -2, 1})));
    CHECK(elliptic_torus_test(W(5, 2, {25, 0, 2, 0, 1})));
  }

  TEST_CASE("classify examples") {
    const auto a = classify(W(5, 1, {5, -2, 1}));
    CHECK(a.kind == VerdictKind::AbsolutelySimple);
    CHECK(a.torsion_orders == std::vector<int>{});
    REQUIRE(a.irreducibility.has_value());

    const auto b = classify(from_poly(5, 2, IntPolynomial{5, 0, 1} * IntPolynomial{5, -2, 1}));
    CHECK(b.kind == VerdictKind::NotSimple);
    CHECK(b.factors.size() == 2);

    const auto c = classify(W(5, 2, {25, 0, 2, 0, 1}));
    CHECK(c.kind == VerdictKind::NotAbsolutelySimple);
    CHECK(c.witness_n == 2);
    CHECK(c.factors == std::vector<Factor>{{IntPolynomial{25, 2, 1}, 2}});

    const auto d = classify(W(3, 2, {9, 0, 0, 0, 1}));
    CHECK(d.kind == VerdictKind::Inconclusive);
    CHECK(d.reason == kReasonDropNonOrdinary);

    const auto e = classify(W(5, 1, {5, 0, 1}));
    CHECK(e.kind == VerdictKind::Inconclusive);

    // (T^2 + 2T + 25)^2 over q = 25: ordinary repeated factor.
    const auto f = classify(W(25, 2, {625, 100, 54, 4, 1}));
    CHECK(f.kind == VerdictKind::NotAbsolutelySimple);
    CHECK(f.witness_n == 1);

    // (T^2 + 25)^2 over q = 25: repeated non-ordinary factor.
    const auto g = classify(W(25, 2, {625, 0, 50, 0, 1}));
    CHECK(g.kind == VerdictKind::Inconclusive);
    CHECK(g.reason == kReasonRepeatedNonOrdinary);
  }

  TEST_CASE("products of non-isogenous elliptic curves are not simple") {
    for (long q : {3L, 5L, 7L}) {
      for (long a = -5; a <= 5; ++a) {
        for (long b = a + 1; b <= 5; ++b) {
          if (a * a > 4 * q || b * b > 4 * q) continue;
          const auto P = from_poly(q, 2, IntPolynomial{q, -a, 1} * IntPolynomial{q, -b, 1});
          CHECK(classify(P).kind == VerdictKind::NotSimple);
        }
      }
    }
  }

  TEST_CASE("Weil restrictions of ordinary elliptic curves are not absolutely simple") {
    for (long q : {3L, 5L}) {
      const long Q = q * q;
      for (long a = -2 * q; a <= 2 * q; ++a) {
        if (a % q == 0) continue;
        const IntPolynomial PE{Q, -a, 1};
        const auto P = from_poly(q, 2, PE.compose_power(2));
        if (!intpoly::is_irreducible(P.poly())) continue;
        const auto v = classify(P);
        CHECK(v.kind == VerdictKind::NotAbsolutelySimple);
        CHECK(replay(P, v));
      }
    }
  }

  TEST_CASE("multiplicativity") {
    const auto P = W(3, 2, {9, 3, 1, 1, 1});
    for (int m = 1; m <= 4; ++m) {
      const auto Pm = charpoly_power_weil(P, m);
      for (int n = 1; n <= 4; ++n) CHECK(charpoly_power(Pm, n) == charpoly_power(P, m * n));
    }
  }

  TEST_CASE("certificates replay and tampering is caught") {
    for (const auto& P : {W(5, 1, {5, -2, 1}), W(5, 2, {25, 0, 2, 0, 1}), W(3, 2, {9, 0, 0, 0, 1}),
                          from_poly(5, 2, IntPolynomial{5, 0, 1} * IntPolynomial{5, -2, 1}),
                          W(25, 2, {625, 100, 54, 4, 1})}) {
      const auto v = classify(P);
      CHECK(replay_failure(P, v) == "");
      CHECK(verdict_from_json(to_json(v)) == v);
    }
    const auto P = W(5, 1, {5, -2, 1});
    auto v = classify(P);
    v.torsion_orders = std::vector<int>{2};
    CHECK_FALSE(replay(P, v));

    auto w = classify(W(5, 2, {25, 0, 2, 0, 1}));
    w.witness_n = 3;
    CHECK_FALSE(replay(W(5, 2, {25, 0, 2, 0, 1}), w));

    auto x = classify(W(5, 1, {5, -2, 1}));
    x.irreducibility->patterns->patterns[0] = {2};
    CHECK_FALSE(replay(P, x));

    auto y = classify(W(3, 2, {9, 0, 0, 0, 1}));
    y.kind = VerdictKind::AbsolutelySimple;
    CHECK_FALSE(replay(W(3, 2, {9, 0, 0, 0, 1}), y));
  }

  TEST_CASE("verdict JSON shape") {
    const auto j = to_json(classify(W(5, 2, {25, 0, 2, 0, 1})));
    CHECK(j["kind"] == "NotAbsolutelySimple");
    CHECK(j["witness_n"] == 2);
    CHECK(j["factors"][0]["coeffs"] == nlohmann::json::parse("[25,2,1]"));
    CHECK(j["factors"][0]["multiplicity"] == 2);
    CHECK_THROWS_AS(verdict_from_json(nlohmann::json::parse(R"({"kind":"Maybe"})")), Error);
  }
}
