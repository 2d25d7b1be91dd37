// Runs the acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "zeta_forge/coeff_extract.hpp"
#include "zeta_forge/series_eval.hpp"
#include "zeta_forge/wz_verify.hpp"

using namespace zeta_forge;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      if (!ok) {
        detail << "; ";
      }
      ok = false;
      detail << what;
    }
  }
};

BigFloat tenth_power(long digits) { return BigFloat::pow10(-digits, BigFloat::bits_for_digits(digits + 20)); }

bool agree(const BigFloat& x, const BigFloat& y, const BigFloat& tolerance) { return abs(x - y) < tolerance; }

const BigRational kThird = make_rational(1, 3);
const BigRational kTwoFifths = make_rational(2, 5);

void exact_wz_relation(Verdict& v) {
  long checked = 0;
  for (PairId pair : kAllPairs) {
    GridReport report = check_pair(pair, 25, 25, default_sample_a());
    checked += report.checked_count;
    v.expect(report.passed(), std::string(to_string(pair)) + ": " + std::to_string(report.failures.size()) +
                                  " failures");
  }
  v.detail << (v.ok ? "" : "; ") << checked << " exact points";
}

void mutation_sensitivity(Verdict& v) {
  long mutants = 0;
  for (PairId pair : kAllPairs) {
    for (const auto& mutant : single_coefficient_mutations(pair_definition(pair))) {
      ++mutants;
      GridOptions options;
      options.stop_at_first_failure = true;
      v.expect(!check_pair(mutant, 10, 10, default_sample_a(), options).passed(),
               std::string(to_string(pair)) + " mutant survived");
    }
  }
  v.detail << (v.ok ? "" : "; ") << mutants << " single-coefficient mutants";
}

void identity_cross_agreement(Verdict& v) {
  const long digits = 25;
  for (IdentityId id : kAllIdentities) {
    for (const auto& a : {BigRational(0), kThird, kTwoFifths}) {
      EvalReport rhs = sum_rhs(id, a, digits);
      EvalReport lhs = sum_lhs_direct(lhs_family(id), a, digits);
      BigFloat tolerance = rhs.tail_bound + lhs.tail_bound;
      v.expect(agree(rhs.value, lhs.value, tolerance) && rhs.value.to_fixed(digits) == lhs.value.to_fixed(digits),
               std::string(to_string(id)) + " at a=" + to_string(a));
    }
  }
  const BigRational half = make_rational(1, 2);
  const BigFloat two(2L, 256);
  for (IdentityId id : {IdentityId::Eq03Bbb, IdentityId::Eq06Thm2}) {
    EvalReport r = sum_rhs(id, half, digits);
    v.expect(r.value.to_fixed(digits) == two.to_fixed(digits), std::string(to_string(id)) + " at a=1/2 is not 2");
  }
  EvalReport direct = sum_lhs_direct(LhsFamily::Even, half, digits);
  v.expect(direct.value.to_fixed(digits) == two.to_fixed(digits), "direct even sum at a=1/2 is not 2");
}

void zeta_constants(Verdict& v) {
  const auto start = std::chrono::steady_clock::now();
  const BigFloat tol50 = tenth_power(50) * BigFloat(2L, 64);
  const BigFloat tol40 = tenth_power(40) * BigFloat(2L, 64);
  const BigFloat markov = zeta_named(NamedFormulaId::MarkovZ3, 50).value;
  const BigFloat amdeberhan = zeta_named(NamedFormulaId::AmdeberhanZ3, 50).value;
  const BigFloat az = zeta_named(NamedFormulaId::AzZ3, 50).value;
  const BigFloat koecher = sum_rhs(IdentityId::Eq01Koecher, 0, 50).value;
  const BigFloat zeta3[] = {markov, amdeberhan, az, koecher};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      v.expect(agree(zeta3[i], zeta3[j], tol50), "zeta(3) series " + std::to_string(i) + "/" + std::to_string(j));
    }
  }
  // π itself comes from MPFR here, independently of every series above.
  const mpfr_prec_t bits = BigFloat::bits_for_digits(70);
  BigFloat pi = BigFloat::pi(bits);
  BigFloat pi2 = pi * pi;
  v.expect(agree(zeta_named(NamedFormulaId::Eq065Z2, 50).value, pi2 / BigFloat(6L, bits), tenth_power(50)),
           "eq065-z2 vs pi^2/6");
  v.expect(agree(zeta_named(NamedFormulaId::Thm2Z4, 40).value, pi2 * pi2 / BigFloat(90L, bits), tenth_power(40)),
           "thm2-z4 vs pi^4/90");
  v.expect(agree(zeta_named(NamedFormulaId::Thm1Z5, 40).value, zeta_named(NamedFormulaId::Thm4Z5, 40).value, tol40),
           "thm1-z5 vs thm4-z5");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.expect(seconds < 60, "took longer than a minute");
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3f s", seconds);
  v.detail << (v.ok ? "" : "; ") << buffer;
}

void convergence_ratios(Verdict& v) {
  struct Case {
    IdentityId id;
    long n;
    BigRational ratio;
    double tolerance;
  };
  const Case cases[] = {
      {IdentityId::Eq05Thm1, 50, make_rational(1, 27), 0.05},    {IdentityId::Eq06Thm2, 50, make_rational(1, 64), 0.05},
      {IdentityId::Eq07Thm4, 30, make_rational(1, 1024), 0.10},  {IdentityId::Eq01Koecher, 50, make_rational(1, 4), 0.05},
      {IdentityId::Eq02Leshchiner, 50, make_rational(1, 4), 0.05}, {IdentityId::Eq03Bbb, 50, make_rational(1, 4), 0.05},
      {IdentityId::Thm3, 50, make_rational(1, 16), 0.05},
  };
  for (const auto& c : cases) {
    auto table = convergence_table(c.id, 0, c.n);
    const auto& row = table.back();
    const bool present = row.n == c.n && row.ratio.has_value();
    const double observed = present ? row.ratio->to_double() : 0.0;
    const double expected = c.ratio.get_d();
    char buffer[96];
    std::snprintf(buffer, sizeof buffer, "%s n=%ld ratio %.6g vs %.6g", std::string(to_string(c.id)).c_str(), c.n,
                  observed, expected);
    v.expect(present && std::abs(observed / expected - 1) <= c.tolerance, buffer);
  }
}

void coefficient_extraction(Verdict& v) {
  CoefficientReport koecher = gf_coefficients(IdentityId::Eq01Koecher, 3, 30);
  const long odd[] = {3, 5, 7, 9};
  for (std::size_t j = 0; j < 4; ++j) {
    EvalReport reference = zeta_euler_maclaurin(odd[j], 30);
    v.expect(agree(koecher.values[j], reference.value, koecher.tail_bounds[j] + reference.tail_bound) &&
                 koecher.values[j].to_fixed(30) == reference.value.to_fixed(30),
             "zeta(" + std::to_string(odd[j]) + ")");
  }
  CoefficientReport leshchiner = gf_coefficients(IdentityId::Eq02Leshchiner, 1, 25);
  EvalReport zeta2 = zeta_euler_maclaurin(2, 25);
  EvalReport zeta4 = zeta_euler_maclaurin(4, 25);
  const mpfr_prec_t bits = zeta2.value.precision();
  v.expect(agree(leshchiner.values[0], zeta2.value / BigFloat(2L, bits), tenth_power(25) * BigFloat(2L, 64)),
           "(1/2) zeta(2)");
  const bool three_quarters =
      agree(leshchiner.values[1], zeta4.value * BigFloat(make_rational(3, 4), bits), tenth_power(25) * BigFloat(2L, 64));
  const bool seven_eighths =
      agree(leshchiner.values[1], zeta4.value * BigFloat(make_rational(7, 8), bits), tenth_power(25) * BigFloat(2L, 64));
  v.expect(three_quarters, "leshchiner a^2 coefficient " + leshchiner.values[1].to_fixed(25) + " is not (3/4) zeta(4)" +
                               (seven_eighths ? "; it equals (7/8) zeta(4), the eta(4) weight of the left-hand side" : ""));
  for (long n = 1; n <= 10; ++n) {
    v.expect(term_series(IdentityId::Eq05Thm1, n, 0)[0] == named_term(NamedFormulaId::AmdeberhanZ3, n),
             "constant coefficient at n=" + std::to_string(n));
  }
}

void propositions(Verdict& v) {
  for (PairId pair : kAllPairs) {
    for (const auto& a : {BigRational(0), kThird}) {
      DoublingReport report;
      try {
        report = doubling_protocol(pair, a, 32, 2, 30);
      } catch (const std::exception& e) {
        v.expect(false, e.what());
        continue;
      }
      v.expect(report.shrinking, std::string(to_string(pair)) + " at a=" + to_string(a) + " not shrinking 2x");
    }
  }
  for (const auto& a : default_sample_a()) {
    for (long n = 0; n <= 15; ++n) {
      v.expect(pair_F(PairId::Thm4, n + 1, n, a) + pair_G(PairId::Thm4, n, n, a) ==
                   identity_term(IdentityId::Eq07Thm4, n + 1, a),
               "thm4 diagonal at n=" + std::to_string(n));
    }
  }
}

void tail_bound_soundness(Verdict& v) {
  for (IdentityId id : kAllIdentities) {
    EvalReport coarse = sum_rhs(id, kThird, 20);
    EvalReport fine = sum_rhs(id, kThird, 40);
    v.expect(abs(coarse.value - fine.value) < coarse.tail_bound, std::string(to_string(id)));
  }
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<void(Verdict&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "exact WZ relation on the 26x26 grid for all pairs", exact_wz_relation},
      {2, "single-coefficient mutations are detected", mutation_sensitivity},
      {3, "accelerated and direct sums agree to 25 digits", identity_cross_agreement},
      {4, "zeta constants from the named series", zeta_constants},
      {5, "empirical convergence ratios", convergence_ratios},
      {6, "generating-function coefficient extraction", coefficient_extraction},
      {7, "truncation residuals shrink under doubling", propositions},
      {8, "tail bounds cover the digits=20 vs digits=40 gap", tail_bound_soundness},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    Verdict verdict;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(verdict);
    } catch (const std::exception& e) {
      verdict.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s [%.2f s]%s%s\n", verdict.ok ? "PASS" : "FAIL", criterion.number, criterion.title,
                seconds, verdict.detail.str().empty() ? "" : " - ", verdict.detail.str().c_str());
    std::fflush(stdout);
    failures += verdict.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
