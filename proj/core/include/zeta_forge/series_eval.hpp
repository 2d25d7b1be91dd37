#pragma once

#include <optional>
#include <vector>

#include "zeta_forge/big_float.hpp"
#include "zeta_forge/identity_catalog.hpp"

namespace zeta_forge {

struct EvalOptions {
  /// Hard cap on the number of summed terms (or the Euler–Maclaurin cutoff).
  long max_terms = 1'000'000;
  /// Largest precision sum_lhs_direct accepts.
  long oracle_ceiling = 60;

  /// Defaults, with max_terms overridden by ZETA_FORGE_MAX_TERMS when set.
  static EvalOptions from_environment();
};

struct EvalReport {
  BigFloat value;
  long terms_used = 0;
  /// Bound on |value − exact sum|; below 10^(−requested_digits).
  BigFloat tail_bound;
  long working_precision = 0;  ///< decimal digits carried internally
  long requested_digits = 0;
};

/// Sums the accelerated right-hand series of an identity.
///
/// Terms are exact rationals from the incremental term stream, rounded once at
/// working precision. Summation stops once five consecutive term ratios sit at
/// or below r* = (ratio+1)/2 and |t_N|/(1−r*) < 10^(−digits−1); that quantity
/// is the reported tail bound (plus accumulated rounding). A series whose
/// cumulative product hits an exact zero terminates with a zero tail.
EvalReport sum_rhs(IdentityId id, const BigRational& a, long digits, const EvalOptions& options = {});

/// Direct evaluation of a left-hand generating function: partial sum up to a
/// cutoff N plus an Euler–Maclaurin tail with corrections through the ninth
/// derivative. The reported bound is the first omitted correction plus
/// rounding. AltEven is paired (terms 2m−1 and 2m) before summation.
EvalReport sum_lhs_direct(LhsFamily family, const BigRational& a, long digits, const EvalOptions& options = {});

/// ζ(s) for integer s ≥ 2 by the same Euler–Maclaurin machinery.
EvalReport zeta_euler_maclaurin(long s, long digits, const EvalOptions& options = {});

/// Sums a named zeta series under the same tail-bound contract as sum_rhs.
EvalReport zeta_named(NamedFormulaId id, long digits, const EvalOptions& options = {});

struct ConvergenceRow {
  long n = 0;
  BigFloat magnitude;              ///< |t_n|
  std::optional<BigFloat> ratio;   ///< |t_{n+1}/t_n|; empty when t_n = 0
};

std::vector<ConvergenceRow> convergence_table(IdentityId id, const BigRational& a, long n_max);

/// Guard digits for a sum of roughly `terms` terms: 10 + ceil(log10(terms)).
long guard_digits(long terms);

}  // namespace zeta_forge
