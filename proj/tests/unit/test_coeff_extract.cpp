#include <doctest.h>

#include "../support/oracles.hpp"
#include "zeta_forge/coeff_extract.hpp"
#include "zeta_forge/errors.hpp"

using namespace zeta_forge;

namespace {

BigRational r(long p, long q = 1) { return make_rational(p, q); }

}  // namespace

TEST_CASE("series_mul") {
  CHECK(series_mul(EvenSeries(2, {1, 1}), EvenSeries(2, {1, -1})) == EvenSeries(2, {1, 0, -1}));
  CHECK(series_mul(EvenSeries(2, {1, -1}), EvenSeries(2, {1, r(-1, 4)})) == EvenSeries(2, {1, r(-5, 4), r(1, 4)}));
  EvenSeries x(3, {1, r(-1, 4)});
  CHECK(series_mul(x, series_recip(x)) == EvenSeries(3, {1}));
  CHECK_THROWS_AS(series_mul(EvenSeries(2), EvenSeries(3)), UsageError);
}

TEST_CASE("series_recip") {
  CHECK(series_recip(EvenSeries(3, {1, -1})) == EvenSeries(3, {1, 1, 1, 1}));
  CHECK(series_recip(EvenSeries(1, {4, -1})) == EvenSeries(1, {r(1, 4), r(1, 16)}));
  EvenSeries x(4, {2, -1});
  CHECK(series_recip(series_recip(x)) == x);
  CHECK_THROWS_AS(series_recip(EvenSeries(2, {0, 1})), DomainError);
}

TEST_CASE("term_series examples") {
  CHECK(term_series(IdentityId::Eq01Koecher, 1, 2) == EvenSeries(2, {r(5, 4), 1, 1}));
  CHECK(term_series(IdentityId::Eq03Bbb, 1, 0) == EvenSeries(0, {r(3, 2)}));
}

TEST_CASE("term_series agrees with exact term values") {
  // A truncated expansion at a small rational a must match the exact value up
  // to the size of the first dropped power.
  const BigRational a = r(1, 1000);
  const BigRational a2 = a * a;
  for (IdentityId id : kAllIdentities) {
    for (long n = 1; n <= 8; ++n) {
      EvenSeries s = term_series(id, n, 3);
      BigRational value = 0;
      BigRational power = 1;
      for (std::size_t j = 0; j <= 3; ++j) {
        value += s[j] * power;
        power *= a2;
      }
      const BigRational exact = identity_term(id, n, a);
      CHECK(abs(value - exact) < abs(exact) * r(1, 1000000000) * r(1, 1000000000) * r(1, 1000));
    }
  }
}

TEST_CASE("constant coefficients recover the Amdeberhan series") {
  for (long n = 1; n <= 10; ++n) {
    CHECK(term_series(IdentityId::Eq05Thm1, n, 0)[0] == named_term(NamedFormulaId::AmdeberhanZ3, n));
  }
}

TEST_CASE("a^2 coefficients match the corollary series term by term") {
  for (long n = 1; n <= 12; ++n) {
    CHECK(term_series(IdentityId::Eq05Thm1, n, 1)[1] == named_term(NamedFormulaId::Thm1Z5, n));
    CHECK(term_series(IdentityId::Eq06Thm2, n, 1)[1] == named_term(NamedFormulaId::Thm2Z4, n));
    CHECK(term_series(IdentityId::Eq07Thm4, n, 1)[1] == named_term(NamedFormulaId::Thm4Z5, n));
    CHECK(term_series(IdentityId::Eq07Thm4, n, 0)[0] == named_term(NamedFormulaId::AzZ3, n));
    CHECK(term_series(IdentityId::Eq06Thm2, n, 0)[0] == named_term(NamedFormulaId::Eq065Z2, n));
  }
}

TEST_CASE("Koecher coefficients are odd zeta values") {
  CoefficientReport report = gf_coefficients(IdentityId::Eq01Koecher, 3, 30);
  REQUIRE(report.values.size() == 4);
  const std::string_view expected[] = {oracle::kZeta3, oracle::kZeta5, oracle::kZeta7, oracle::kZeta9};
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(report.tail_bounds[j] < BigFloat::pow10(-30, 128));
    CHECK(oracle::close(report.values[j], oracle::value(expected[j]), 30));
  }
}

TEST_CASE("Leshchiner and BBB coefficients") {
  CoefficientReport leshchiner = gf_coefficients(IdentityId::Eq02Leshchiner, 1, 25);
  CHECK(oracle::close(leshchiner.values[0], oracle::value(oracle::kHalfZeta2), 25));
  // Σ(−1)^{k−1}/k⁴ = (7/8)ζ(4); a weight of 3/4 would not match the left-hand side.
  CHECK(oracle::close(leshchiner.values[1], oracle::value(oracle::kSevenEighthsZeta4), 25));
  CHECK_FALSE(oracle::close(leshchiner.values[1], oracle::value(oracle::kThreeQuarterZeta4), 2));
  CoefficientReport bbb = gf_coefficients(IdentityId::Eq03Bbb, 0, 25);
  CHECK(oracle::close(bbb.values[0], oracle::value(oracle::kZeta2), 25));
}

TEST_CASE("Leshchiner weights are eta/zeta = 1 - 2^(-2j-1)") {
  const long digits = 25;
  CoefficientReport alt = gf_coefficients(IdentityId::Eq02Leshchiner, 3, digits);
  CoefficientReport even = gf_coefficients(IdentityId::Eq03Bbb, 3, digits);
  for (std::size_t j = 0; j <= 3; ++j) {
    const BigRational weight = 1 - r(1, 2L << (2 * j));
    BigFloat ratio = alt.values[j] / even.values[j];
    CHECK(oracle::close(ratio, BigFloat(weight, ratio.precision()), digits - 2));
  }
}

TEST_CASE("order-0 coefficients equal the a = 0 sums") {
  for (IdentityId id : kAllIdentities) {
    CoefficientReport c = gf_coefficients(id, 0, 25);
    EvalReport s = sum_rhs(id, 0, 25);
    CHECK(oracle::close(c.values[0], s.value, 25, 2));
  }
}

TEST_CASE("coefficient tail bounds are sound") {
  for (IdentityId id : kAllIdentities) {
    CoefficientReport coarse = gf_coefficients(id, 3, 20);
    CoefficientReport fine = gf_coefficients(id, 3, 40);
    for (std::size_t j = 0; j <= 3; ++j) {
      CHECK(abs(coarse.values[j] - fine.values[j]) < coarse.tail_bounds[j]);
    }
  }
}

TEST_CASE("corollary checks") {
  CorollaryReport z5 = corollary_check(NamedFormulaId::Thm1Z5, 30);
  CHECK(z5.parent == IdentityId::Eq05Thm1);
  CHECK(z5.agrees);
  CHECK(oracle::close(z5.series.value, oracle::value(oracle::kZeta5), 30));

  CorollaryReport z4 = corollary_check(NamedFormulaId::Thm2Z4, 30);
  CHECK(z4.agrees);
  CHECK(oracle::close(z4.series.value, oracle::value(oracle::kZeta4), 30));

  CorollaryReport z5b = corollary_check(NamedFormulaId::Thm4Z5, 30);
  CHECK(z5b.agrees);
  CHECK(oracle::close(z5b.series.value, z5.series.value, 30, 2));

  CHECK_THROWS_AS(corollary_check(NamedFormulaId::AzZ3, 30), UsageError);
}

TEST_CASE("order limit") {
  CHECK_THROWS_AS(gf_coefficients(IdentityId::Eq01Koecher, 9, 20), UsageError);
}
