#include <doctest.h>

#include <random>
#include <set>

#include "frobtorus/error.hpp"
#include "frobtorus/fq_poly.hpp"
#include "frobtorus/gf.hpp"

using namespace frobtorus;
using namespace frobtorus::gf;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

FieldElement el(const FieldPtr& F, std::vector<std::uint32_t> rep) { return FieldElement::from_rep(F, rep); }

}  // namespace

TEST_SUITE("gf") {
  TEST_CASE("field_create examples") {
    auto F5 = field_create(5, 1);
    CHECK(F5->order() == 5);
    CHECK(F5->modulus() == std::vector<std::uint32_t>{0, 1});

    auto F9 = field_create(3, 2);
    CHECK(F9->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
    CHECK(F9->describe() == "F_3^2");

    CHECK(code_of([] { field_create(4, 1); }) == ErrorCode::NonPrime);
    CHECK(code_of([] { field_create(2, 21); }) == ErrorCode::SizeExceeded);
    CHECK(code_of([] { field_create(1, 1); }) == ErrorCode::NonPrime);
  }

  TEST_CASE("moduli are the first irreducible in lexicographic order") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
      auto F = field_create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
      auto Fp = field_create(static_cast<std::uint32_t>(p), 1);
      const auto& m = F->modulus();
      std::vector<FieldSpec::Code> mc(m.begin(), m.end());
      CHECK(is_irreducible(FqPoly(Fp, mc)));
      // Every monic degree-k polynomial before m (c_0 most significant) is reducible.
      std::vector<std::uint32_t> c(static_cast<std::size_t>(k), 0);
      for (;;) {
        std::vector<FieldSpec::Code> cand(c.begin(), c.end());
        cand.push_back(1);
        if (cand == mc) break;
        CHECK_FALSE(is_irreducible(FqPoly(Fp, cand)));
        int i = k - 1;
        while (i >= 0 && ++c[static_cast<std::size_t>(i)] == static_cast<std::uint32_t>(p)) c[static_cast<std::size_t>(i--)] = 0;
        REQUIRE(i >= 0);
      }
    }
  }

  TEST_CASE("inverse and power examples") {
    auto F7 = field_create(7, 1);
    auto n = [&](int v) { return FieldElement::from_int(F7, v); };
    CHECK(inv(n(3)) == n(5));
    CHECK(inv(n(1)) == n(1));
    CHECK(pow(n(3), 6) == n(1));
    CHECK(pow(n(2), 3) == n(1));
    CHECK(pow(n(0), 5) == n(0));
    CHECK(code_of([&] { inv(n(0)); }) == ErrorCode::DivisionByZero);

    auto F9 = field_create(3, 2);
    CHECK(inv(el(F9, {0, 1})) == el(F9, {0, 2}));  // inv(t) = 2t
  }

  TEST_CASE("enumeration order and cardinality") {
    CHECK(enumerate(field_create(5, 1)).size() == 5);
    CHECK(enumerate(field_create(3, 2)).size() == 9);
    auto F2 = enumerate(field_create(2, 1));
    REQUIRE(F2.size() == 2);
    CHECK(F2[0].is_zero());
    CHECK(F2[1].code() == 1);

    auto F9 = field_create(3, 2);
    auto all = enumerate(F9);
    CHECK(all[0].rep() == std::vector<std::uint32_t>{0, 0});
    CHECK(all[1].rep() == std::vector<std::uint32_t>{0, 1});
    CHECK(all[3].rep() == std::vector<std::uint32_t>{1, 0});
    std::set<FieldSpec::Code> seen;
    for (std::uint32_t r = 0; r < F9->order(); ++r) {
      CHECK(F9->rank_of(F9->code_at_rank(r)) == r);
      seen.insert(F9->code_at_rank(r));
    }
    CHECK(seen.size() == 9);
  }

  TEST_CASE("rep conventions") {
    auto F = field_create(5, 3);
    CHECK(F->rep(F->zero()) == std::vector<std::uint32_t>{0, 0, 0});
    CHECK(F->rep(F->one()) == std::vector<std::uint32_t>{1, 0, 0});
    for (auto c : F->rep(F->from_int(-1))) CHECK(c < 5);
  }

  TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(7);
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 5}, {3, 3}, {5, 2}, {7, 1}, {11, 2}, {2, 10}}) {
      auto F = field_create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
      std::uniform_int_distribution<std::uint32_t> pick(0, F->order() - 1);
      for (int t = 0; t < 200; ++t) {
        const auto a = F->code_at_rank(pick(rng));
        const auto b = F->code_at_rank(pick(rng));
        const auto c = F->code_at_rank(pick(rng));
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
        CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
        CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        CHECK(F->pow(F->add(a, b), static_cast<std::uint64_t>(p)) ==
              F->add(F->pow(a, static_cast<std::uint64_t>(p)), F->pow(b, static_cast<std::uint64_t>(p))));
        if (a != 0) {
          CHECK(F->pow(a, F->order() - 1) == F->one());
          CHECK(F->mul(a, F->inv(a)) == F->one());
        }
      }
    }
  }

  TEST_CASE("log tables and generator") {
    auto F = field_create(3, 3);
    const auto g = F->generator();
    std::set<FieldSpec::Code> powers;
    for (std::uint32_t l = 0; l + 1 < F->order(); ++l) {
      powers.insert(F->exp(l));
      CHECK(F->log(F->exp(l)) == l);
      const auto one_plus = F->add(F->one(), F->exp(l));
      if (one_plus == 0) {
        CHECK(F->zech(l) == FieldSpec::kZeroLog);
      } else {
        CHECK(F->exp(F->zech(l)) == one_plus);
      }
    }
    CHECK(powers.size() == F->order() - 1);
    CHECK(F->exp(1) == g);
  }

  TEST_CASE("quadratic character and trace") {
    auto F = field_create(7, 1);
    for (std::int64_t v = 0; v < 7; ++v) {
      const int expect = v == 0 ? 0 : (v == 1 || v == 2 || v == 4 ? 1 : -1);
      CHECK(F->chi(F->from_int(v)) == expect);
    }
    auto F16 = field_create(2, 4);
    int ones = 0;
    for (std::uint32_t c = 0; c < 16; ++c) {
      // Tr(a) = a + a^2 + a^4 + a^8 lies in F_2.
      auto t = F16->add(F16->add(c, F16->pow(c, 2)), F16->add(F16->pow(c, 4), F16->pow(c, 8)));
      CHECK(t == static_cast<std::uint32_t>(F16->trace_f2(c)));
      ones += F16->trace_f2(c);
    }
    CHECK(ones == 8);
  }

  TEST_CASE("polynomials over F_q") {
    auto F = field_create(5, 1);
    FqPoly f(F, {0, 1, 0, 1});  // x^3 + x
    CHECK(gcd(f, f.derivative()).degree() == 0);
    FqPoly g(F, {0, 0, 1, 1});  // x^2 (x + 1)
    CHECK(gcd(g, g.derivative()) == FqPoly(F, {0, 1}));
    auto d = divmod(f, FqPoly(F, {1, 1}));
    CHECK(d.quotient * FqPoly(F, {1, 1}) + d.remainder == f);
    CHECK(is_irreducible(FqPoly(F, {2, 0, 1})));       // x^2 + 2
    CHECK_FALSE(is_irreducible(FqPoly(F, {1, 0, 1}))); // x^2 + 1 = (x-2)(x+2)
  }
}
