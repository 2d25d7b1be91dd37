#include "zeta_forge/coeff_extract.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "zeta_forge/errors.hpp"

namespace zeta_forge {

EvenSeries::EvenSeries(std::size_t order, std::initializer_list<BigRational> leading) : coefficients_(order + 1) {
  std::size_t j = 0;
  for (const auto& c : leading) {
    if (j > order) {
      break;
    }
    coefficients_[j++] = c;
  }
}

EvenSeries series_mul(const EvenSeries& x, const EvenSeries& y) {
  if (x.order() != y.order()) {
    throw UsageError("series_mul: order mismatch (" + std::to_string(x.order()) + " vs " +
                     std::to_string(y.order()) + ")");
  }
  EvenSeries out(x.order());
  for (std::size_t i = 0; i <= x.order(); ++i) {
    if (x[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; i + j <= x.order(); ++j) {
      out[i + j] += x[i] * y[j];
    }
  }
  return out;
}

EvenSeries series_recip(const EvenSeries& x) {
  if (x[0] == 0) {
    throw DomainError("series_recip: constant coefficient is zero");
  }
  EvenSeries out(x.order());
  out[0] = 1 / x[0];
  for (std::size_t j = 1; j <= x.order(); ++j) {
    BigRational acc = 0;
    for (std::size_t i = 1; i <= j; ++i) {
      acc += x[i] * out[j - i];
    }
    out[j] = -acc * out[0];
  }
  return out;
}

void SeriesRing::multiply(Value& x, const Value& y) const { x = series_mul(x, y); }

void SeriesRing::divide(Value& x, const Value& y, const DenominatorFactor& factor) const {
  if (y[0] == 0) {
    throw DomainError(factor.describe() + " at a = 0");
  }
  x = series_mul(x, series_recip(y));
}

bool SeriesRing::is_zero(const Value& x) const {
  return std::all_of(x.coefficients().begin(), x.coefficients().end(), [](const BigRational& c) { return c == 0; });
}

EvenSeries term_series(IdentityId id, long n, std::size_t order) {
  return direct_identity_term(id, n, SeriesRing(order));
}

CoefficientReport gf_coefficients(IdentityId id, std::size_t order, long digits, const ExtractOptions& options) {
  if (digits < 1) {
    throw UsageError("digits must be >= 1, got " + std::to_string(digits));
  }
  if (order > options.max_order) {
    throw UsageError("order " + std::to_string(order) + " exceeds the configured maximum " +
                     std::to_string(options.max_order));
  }
  const BigRational ratio = identity_ratio(id);
  const long estimate = static_cast<long>(static_cast<double>(digits) / -std::log10(ratio.get_d())) + 20;
  const long working = digits + guard_digits(estimate);
  const mpfr_prec_t bits = BigFloat::bits_for_digits(working);
  const BigFloat r_star(BigRational((ratio + 1) / 2), bits);
  const BigFloat gap = BigFloat(1L, bits) - r_star;
  const BigFloat threshold = BigFloat::pow10(-(digits + 1), bits);

  IdentityTermStream<SeriesRing> stream(id, SeriesRing(order));
  std::vector<BigFloat> sums(order + 1, BigFloat(bits));
  std::vector<BigFloat> tails(order + 1, BigFloat(bits));
  std::vector<BigFloat> previous(order + 1, BigFloat(bits));
  BigFloat absolute_sum(64);
  std::optional<BigFloat> previous_constant;
  int contracting = 0;
  long terms = 0;
  for (long n = 1;; ++n) {
    if (n > options.eval.max_terms) {
      throw NonConvergenceError("coefficients of " + std::string(to_string(id)) + ": no contracting tail within " +
                                std::to_string(options.eval.max_terms) + " terms");
    }
    const EvenSeries t = stream.next();
    std::vector<BigFloat> current;
    current.reserve(order + 1);
    for (std::size_t j = 0; j <= order; ++j) {
      current.emplace_back(t[j], bits);
    }
    const BigFloat constant = abs(current[0]);
    if (previous_constant && !previous_constant->is_zero()) {
      contracting = (constant / *previous_constant <= r_star) ? contracting + 1 : 0;
    }
    if (contracting >= 5) {
      const BigFloat safety = BigFloat(n, bits) * BigFloat(n, bits) / gap;
      bool settled = true;
      for (std::size_t j = 0; j <= order && settled; ++j) {
        tails[j] = max(abs(current[j]), abs(previous[j])) * safety;
        settled = tails[j] < threshold;
      }
      if (settled) {
        break;
      }
    }
    for (std::size_t j = 0; j <= order; ++j) {
      sums[j] += current[j];
      absolute_sum += abs(current[j]);
    }
    ++terms;
    previous_constant = constant;
    previous = std::move(current);
  }

  BigFloat rounding = absolute_sum * BigFloat(2 * terms + 2, 64);
  mpfr_mul_2si(rounding.get(), rounding.get(), -static_cast<long>(bits), MPFR_RNDU);
  CoefficientReport report{id, std::move(sums), {}, terms, digits};
  for (auto& tail : tails) {
    report.tail_bounds.push_back(tail + rounding);
  }
  return report;
}

IdentityId corollary_parent(NamedFormulaId which) {
  switch (which) {
    case NamedFormulaId::Thm1Z5:
      return IdentityId::Eq05Thm1;
    case NamedFormulaId::Thm2Z4:
      return IdentityId::Eq06Thm2;
    case NamedFormulaId::Thm4Z5:
      return IdentityId::Eq07Thm4;
    default:
      throw UsageError("formula " + std::string(to_string(which)) +
                       " is not a coefficient corollary; expected thm1-z5, thm2-z4 or thm4-z5");
  }
}

CorollaryReport corollary_check(NamedFormulaId which, long digits, const ExtractOptions& options) {
  const IdentityId parent = corollary_parent(which);
  EvalReport series = zeta_named(which, digits, options.eval);
  CoefficientReport coefficients = gf_coefficients(parent, 1, digits, options);
  CorollaryReport report{which, parent, std::move(series), std::move(coefficients.values[1]),
                         std::move(coefficients.tail_bounds[1]), BigFloat(), false};
  report.difference = abs(report.series.value - report.extracted);
  report.agrees = report.difference < BigFloat(2L, 64) * BigFloat::pow10(-digits, report.difference.precision());
  return report;
}

}  // namespace zeta_forge
