#include "zeta_forge/series_eval.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>

#include "zeta_forge/errors.hpp"
#include "zeta_forge/identity_terms.hpp"

namespace zeta_forge {

EvalOptions EvalOptions::from_environment() {
  EvalOptions options;
  if (const char* raw = std::getenv("ZETA_FORGE_MAX_TERMS"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value <= 0) {
      throw UsageError("ZETA_FORGE_MAX_TERMS must be a positive integer, got '" + std::string(raw) + "'");
    }
    options.max_terms = value;
  }
  return options;
}

long guard_digits(long terms) {
  return 10 + static_cast<long>(std::ceil(std::log10(static_cast<double>(std::max(2L, terms)))));
}

namespace {

void require_digits(long digits) {
  if (digits < 1) {
    throw UsageError("digits must be >= 1, got " + std::to_string(digits));
  }
}

long terms_estimate(const BigRational& ratio, long digits) {
  const double per_term = -std::log10(ratio.get_d());
  return static_cast<long>(std::ceil(static_cast<double>(digits) / per_term)) + 10;
}

BigFloat rounding_bound(const BigFloat& absolute_sum, long operations, mpfr_prec_t bits) {
  BigFloat bound = absolute_sum * BigFloat(2 * operations + 2, 64);
  mpfr_mul_2si(bound.get(), bound.get(), -static_cast<long>(bits), MPFR_RNDU);
  return bound;
}

/// Shared by sum_rhs and zeta_named. `next` yields t_1, t_2, …; `exhausted`
/// reports that the remaining terms are identically zero.
EvalReport geometric_sum(const std::function<BigRational()>& next, const std::function<bool()>& exhausted,
                         const BigRational& ratio, long digits, const EvalOptions& options,
                         const std::string& what) {
  require_digits(digits);
  const long working = digits + guard_digits(terms_estimate(ratio, digits));
  const mpfr_prec_t bits = BigFloat::bits_for_digits(working);
  const BigFloat r_star(BigRational((ratio + 1) / 2), bits);
  const BigFloat contraction_gap = BigFloat(1L, bits) - r_star;
  const BigFloat threshold = BigFloat::pow10(-(digits + 1), bits);

  BigFloat sum(bits);
  BigFloat absolute_sum(64);
  BigFloat tail(bits);
  std::optional<BigFloat> previous;
  int contracting = 0;
  long terms = 0;
  for (long n = 1;; ++n) {
    if (n > options.max_terms) {
      throw NonConvergenceError(what + ": no contracting tail within " + std::to_string(options.max_terms) + " terms");
    }
    const BigRational t = next();
    if (t == 0) {
      if (exhausted()) {
        break;
      }
      ++terms;
      continue;
    }
    BigFloat term(t, bits);
    BigFloat magnitude = abs(term);
    if (previous) {
      contracting = (magnitude / *previous <= r_star) ? contracting + 1 : 0;
    }
    if (contracting >= 5) {
      BigFloat bound = magnitude / contraction_gap;
      if (bound < threshold) {
        tail = std::move(bound);
        break;
      }
    }
    sum += term;
    absolute_sum += magnitude;
    ++terms;
    previous = std::move(magnitude);
  }
  EvalReport report;
  report.tail_bound = tail + rounding_bound(absolute_sum, terms, bits);
  report.value = std::move(sum);
  report.terms_used = terms;
  report.working_precision = working;
  report.requested_digits = digits;
  return report;
}

// --- Euler–Maclaurin -------------------------------------------------------

/// coefficient · (x − root)^(−power)
struct PowerTerm {
  BigRational coefficient;
  BigRational root;
  long power;
};

struct Summand {
  std::vector<PowerTerm> pieces;
  /// Direct, cancellation-free evaluation at an integer point.
  std::function<BigFloat(long, mpfr_prec_t)> at;
  /// Largest |root|; the cutoff must sit well to its right.
  double reach = 0;
  /// Extra digits lost when recombining partial fractions.
  long cancellation = 0;
};

long cancellation_digits(const BigRational& a) {
  if (a == 0) {
    return 0;
  }
  const double magnitude = std::abs(a.get_d());
  return magnitude >= 1 ? 1 : static_cast<long>(std::ceil(-2 * std::log10(magnitude))) + 2;
}

Summand make_summand(LhsFamily family, const BigRational& a) {
  if (is_nonzero_integer(a)) {
    throw DomainError("left-hand side " + std::string(to_string(family)) + " has a pole at a = " + to_string(a));
  }
  const BigRational a2 = a * a;
  Summand s;
  s.reach = std::abs(a.get_d()) + 1;
  s.cancellation = cancellation_digits(a);
  switch (family) {
    case LhsFamily::Odd:
      if (a == 0) {
        s.pieces = {{1, 0, 3}};
      } else {
        s.pieces = {{-1 / a2, 0, 1}, {1 / (2 * a2), a, 1}, {1 / (2 * a2), -a, 1}};
      }
      s.at = [a2](long k, mpfr_prec_t bits) {
        BigFloat x(k, bits);
        return BigFloat(1L, bits) / (x * (x * x - BigFloat(a2, bits)));
      };
      break;
    case LhsFamily::Even:
      if (a == 0) {
        s.pieces = {{1, 0, 2}};
      } else {
        s.pieces = {{1 / (2 * a), a, 1}, {-1 / (2 * a), -a, 1}};
      }
      s.at = [a2](long k, mpfr_prec_t bits) {
        BigFloat x(k, bits);
        return BigFloat(1L, bits) / (x * x - BigFloat(a2, bits));
      };
      break;
    case LhsFamily::AltEven:
      // g(m) = f(2m−1) − f(2m), f(x) = 1/(x²−a²)
      if (a == 0) {
        s.pieces = {{make_rational(1, 4), make_rational(1, 2), 2}, {make_rational(-1, 4), 0, 2}};
      } else {
        const BigRational c = 1 / (4 * a);
        s.pieces = {{c, (1 + a) / 2, 1}, {-c, (1 - a) / 2, 1}, {-c, a / 2, 1}, {c, -a / 2, 1}};
      }
      s.at = [a2](long m, mpfr_prec_t bits) {
        const BigFloat A2(a2, bits);
        const BigFloat odd(2 * m - 1, bits);
        const BigFloat even(2 * m, bits);
        return BigFloat(4 * m - 1, bits) / ((odd * odd - A2) * (even * even - A2));
      };
      s.reach = std::abs(a.get_d()) / 2 + 1;
      break;
  }
  return s;
}

Summand zeta_summand(long s) {
  Summand out;
  out.pieces = {{1, 0, s}};
  out.at = [s](long k, mpfr_prec_t bits) { return pow(BigFloat(k, bits), -s); };
  out.reach = 1;
  return out;
}

// B_2, B_4, …, B_12
const std::array<BigRational, 6>& bernoulli() {
  static const std::array<BigRational, 6> values = {make_rational(1, 6),  make_rational(-1, 30),
                                                    make_rational(1, 42), make_rational(-1, 30),
                                                    make_rational(5, 66), make_rational(-691, 2730)};
  return values;
}

/// d-th derivative of the summand at x, from its partial fractions.
BigFloat derivative(const Summand& s, const BigFloat& x, long order, mpfr_prec_t bits) {
  BigFloat total(bits);
  for (const auto& piece : s.pieces) {
    const BigRational rising = pochhammer(BigRational(piece.power), static_cast<std::uint64_t>(order));
    const BigFloat shifted = x - BigFloat(piece.root, bits);
    BigFloat term = BigFloat(BigRational(piece.coefficient * rising), bits) * pow(shifted, -(piece.power + order));
    if (order % 2 == 1) {
      term = -term;
    }
    total += term;
  }
  return total;
}

/// |B_12/12! · f^(11)(N)|: size of the first correction left out.
BigFloat omitted_correction(const Summand& s, long cutoff, mpfr_prec_t bits) {
  const BigRational weight = bernoulli()[5] / BigRational(factorial(12));
  return abs(BigFloat(weight, bits) * derivative(s, BigFloat(cutoff, bits), 11, bits));
}

BigFloat tail_from(const Summand& s, long cutoff, mpfr_prec_t bits) {
  const BigFloat x(cutoff, bits);
  BigFloat integral(bits);
  BigRational log_weight = 0;
  for (const auto& piece : s.pieces) {
    const BigFloat c(piece.coefficient, bits);
    if (piece.power == 1) {
      // The 1/x parts cancel at infinity, leaving −Σ c·ln(1 − r/N).
      log_weight += piece.coefficient;
      integral -= c * log1p(-BigFloat(BigRational(piece.root / cutoff), bits));
    } else {
      integral += c * pow(x - BigFloat(piece.root, bits), 1 - piece.power) / BigFloat(piece.power - 1, bits);
    }
  }
  if (log_weight != 0) {
    throw std::logic_error("Euler-Maclaurin summand decays too slowly");
  }
  BigFloat tail = integral + s.at(cutoff, bits) / BigFloat(2L, bits);
  for (std::size_t j = 0; j < 5; ++j) {
    const long order = static_cast<long>(2 * j + 1);
    const BigRational weight = bernoulli()[j] / BigRational(factorial(2 * j + 2));
    tail -= BigFloat(weight, bits) * derivative(s, x, order, bits);
  }
  return tail;
}

EvalReport euler_maclaurin(const Summand& s, long digits, const EvalOptions& options, const std::string& what) {
  require_digits(digits);
  if (digits > options.oracle_ceiling) {
    throw UsageError(what + ": " + std::to_string(digits) + " digits exceeds the direct-summation ceiling of " +
                     std::to_string(options.oracle_ceiling));
  }
  const long minimum = std::max(16L, 2 * static_cast<long>(std::ceil(s.reach)) + 4);

  auto find_cutoff = [&](long target_digits, mpfr_prec_t bits) {
    const BigFloat target = BigFloat::pow10(-target_digits, bits);
    long hi = minimum;
    while (!(omitted_correction(s, hi, bits) < target)) {
      if (hi > options.max_terms) {
        throw NonConvergenceError(what + ": Euler-Maclaurin cutoff exceeds " + std::to_string(options.max_terms));
      }
      hi *= 2;
    }
    long lo = std::max(minimum, hi / 2);
    while (lo < hi) {
      const long mid = lo + (hi - lo) / 2;
      if (omitted_correction(s, mid, bits) < target) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return hi;
  };

  // The guard depends on the cutoff, so settle the cutoff twice.
  long guard = 10 + s.cancellation;
  long cutoff = find_cutoff(digits + guard, BigFloat::bits_for_digits(digits + guard + 10));
  guard = guard_digits(cutoff) + s.cancellation;
  const long working = digits + guard;
  const mpfr_prec_t bits = BigFloat::bits_for_digits(working);
  cutoff = find_cutoff(working, bits);

  BigFloat sum(bits);
  BigFloat absolute_sum(64);
  for (long k = 1; k < cutoff; ++k) {
    BigFloat term = s.at(k, bits);
    absolute_sum += abs(term);
    sum += term;
  }
  const BigFloat tail = tail_from(s, cutoff, bits);
  sum += tail;
  absolute_sum += abs(tail);

  BigFloat rounding = rounding_bound(absolute_sum, cutoff + 64, bits);
  if (s.cancellation > 0) {
    rounding *= BigFloat::pow10(s.cancellation, 64);
  }
  EvalReport report;
  report.tail_bound = omitted_correction(s, cutoff, bits) + rounding;
  report.value = std::move(sum);
  report.terms_used = cutoff - 1;
  report.working_precision = working;
  report.requested_digits = digits;
  return report;
}

}  // namespace

EvalReport sum_rhs(IdentityId id, const BigRational& a, long digits, const EvalOptions& options) {
  IdentityTermStream<ScalarRing> stream(id, ScalarRing(a));
  return geometric_sum([&stream] { return stream.next(); }, [&stream] { return stream.exhausted(); },
                       identity_ratio(id), digits, options, "identity " + std::string(to_string(id)));
}

EvalReport sum_lhs_direct(LhsFamily family, const BigRational& a, long digits, const EvalOptions& options) {
  return euler_maclaurin(make_summand(family, a), digits, options,
                         "left-hand side " + std::string(to_string(family)));
}

EvalReport zeta_euler_maclaurin(long s, long digits, const EvalOptions& options) {
  if (s < 2) {
    throw DomainError("zeta(" + std::to_string(s) + ") diverges; need s >= 2");
  }
  return euler_maclaurin(zeta_summand(s), digits, options, "zeta(" + std::to_string(s) + ")");
}

EvalReport zeta_named(NamedFormulaId id, long digits, const EvalOptions& options) {
  NamedTermStream stream(id);
  return geometric_sum([&stream] { return stream.next(); }, [] { return false; }, named_ratio(id), digits, options,
                       "formula " + std::string(to_string(id)));
}

std::vector<ConvergenceRow> convergence_table(IdentityId id, const BigRational& a, long n_max) {
  constexpr mpfr_prec_t kBits = 128;
  IdentityTermStream<ScalarRing> stream(id, ScalarRing(a));
  std::vector<ConvergenceRow> rows;
  BigRational current = stream.next();
  for (long n = 1; n <= n_max; ++n) {
    const BigRational following = stream.next();
    ConvergenceRow row;
    row.n = n;
    row.magnitude = BigFloat(BigRational(abs(current)), kBits);
    if (current != 0) {
      row.ratio = BigFloat(BigRational(abs(following / current)), kBits);
    }
    rows.push_back(std::move(row));
    current = following;
  }
  return rows;
}

}  // namespace zeta_forge
