#include "zeta_forge/wz_verify.hpp"

#include "zeta_forge/errors.hpp"

namespace zeta_forge {

std::vector<BigRational> default_sample_a() {
  return {make_rational(0), make_rational(1, 2), make_rational(1, 3),
          make_rational(2, 5), make_rational(7, 11), make_rational(1, 7)};
}

GridReport check_pair(const WZPairDef& definition, long n_max, long k_max, const std::vector<BigRational>& a_values,
                      const GridOptions& options) {
  if (n_max < 0 || k_max < 0) {
    throw UsageError("grid bounds must be nonnegative");
  }
  GridReport report{definition.id, n_max, k_max, a_values, {}, 0};
  for (const auto& a : a_values) {
    PairEvaluator eval(definition, a);
    for (long n = 0; n <= n_max; ++n) {
      const long k_limit = definition.id == PairId::Thm4 ? std::min(k_max, 2 * n - 2) : k_max;
      for (long k = 0; k <= k_limit; ++k) {
        ++report.checked_count;
        try {
          BigRational lhs = eval.F(n + 1, k) - eval.F(n, k);
          BigRational rhs = eval.G(n, k + 1) - eval.G(n, k);
          if (lhs != rhs) {
            report.failures.push_back(GridFailure{n, k, a, std::move(lhs), std::move(rhs), {}});
          }
        } catch (const DomainError& e) {
          report.failures.push_back(GridFailure{n, k, a, 0, 0, std::string("out of domain: ") + e.what()});
        }
        if (options.stop_at_first_failure && !report.failures.empty()) {
          return report;
        }
      }
    }
  }
  return report;
}

GridReport check_pair(PairId pair, long n_max, long k_max, const std::vector<BigRational>& a_values,
                      const GridOptions& options) {
  return check_pair(pair_definition(pair), n_max, k_max, a_values, options);
}

std::vector<WZPairDef> single_coefficient_mutations(const WZPairDef& definition, const BigRational& delta) {
  std::vector<WZPairDef> out;
  out.reserve(definition.q.size());
  for (std::size_t i = 0; i < definition.q.size(); ++i) {
    out.push_back(definition.with_perturbed_coefficient(i, delta));
  }
  return out;
}

namespace {

void require_truncation(long truncation) {
  if (truncation < 1) {
    throw UsageError("truncation must be >= 1");
  }
}

ResidualReport finish(PairId pair, int proposition, long truncation, const BigRational& a, long precision,
                      const BigRational& lhs, const BigRational& rhs, const BigRational& residual,
                      const std::vector<BigRational>& boundaries) {
  const mpfr_prec_t bits = BigFloat::bits_for_digits(precision);
  ResidualReport report{pair, proposition, truncation, a, BigFloat(lhs, bits), BigFloat(rhs, bits),
                        BigFloat(BigRational(abs(residual)), bits), {}};
  for (const auto& b : boundaries) {
    report.boundary_terms.emplace_back(b, bits);
  }
  return report;
}

}  // namespace

ResidualReport check_prop1(PairId pair, long truncation, const BigRational& a, long precision) {
  require_truncation(truncation);
  const WZPairDef& def = pair_definition(pair);
  if (def.proposition != 1) {
    throw UsageError("pair " + std::string(to_string(pair)) + " is certified through the diagonal sum; use check_prop2");
  }
  PairEvaluator eval(def, a);
  const long T = truncation;
  BigRational lhs = 0;
  BigRational rhs = 0;
  BigRational boundary_f = 0;
  BigRational boundary_g = 0;
  for (long i = 0; i <= T; ++i) {
    lhs += eval.F(0, i);
    rhs += eval.G(i, 0);
    boundary_f += eval.F(T, i);
    boundary_g += eval.G(i, T);
  }
  const BigRational residual = (lhs - boundary_f) - (rhs - boundary_g);
  return finish(pair, 1, T, a, precision, lhs, rhs, residual, {boundary_f, boundary_g});
}

ResidualReport check_prop2(PairId pair, long truncation, const BigRational& a, long precision) {
  require_truncation(truncation);
  const WZPairDef& def = pair_definition(pair);
  if (def.proposition != 2) {
    throw UsageError("pair " + std::string(to_string(pair)) + " is certified through Σ F(0,k); use check_prop1");
  }
  PairEvaluator eval(def, a);
  const long T = truncation;
  BigRational lhs = 0;
  BigRational rhs = 0;
  BigRational boundary = 0;
  for (long n = 0; n <= T; ++n) {
    lhs += eval.G(n, 0);
    rhs += eval.F(n + 1, n) + eval.G(n, n);
  }
  for (long k = 0; k < T; ++k) {
    boundary += eval.F(T, k);
  }
  const BigRational residual = lhs - (rhs - boundary);
  return finish(pair, 2, T, a, precision, lhs, rhs, residual, {boundary});
}

DoublingReport doubling_protocol(PairId pair, const BigRational& a, long initial_truncation, int doublings,
                                 long precision, long required_factor) {
  DoublingReport report;
  report.required_factor = required_factor;
  report.shrinking = true;
  const bool diagonal = pair_definition(pair).proposition == 2;
  int growth_streak = 0;
  long T = initial_truncation;
  for (int i = 0; i <= doublings; ++i, T *= 2) {
    report.steps.push_back(diagonal ? check_prop2(pair, T, a, precision) : check_prop1(pair, T, a, precision));
    if (i == 0) {
      continue;
    }
    const BigFloat& before = report.steps[report.steps.size() - 2].residual;
    const BigFloat& after = report.steps.back().residual;
    if (!(after * BigFloat(required_factor, 64) <= before)) {
      report.shrinking = false;
    }
    growth_streak = (after > before) ? growth_streak + 1 : 0;
    if (growth_streak >= 3) {
      throw CertificationError("pair " + std::string(to_string(pair)) + " at a = " + to_string(a) +
                               ": residual grew over three consecutive doublings up to T = " + std::to_string(T));
    }
  }
  return report;
}

}  // namespace zeta_forge
