#pragma once

#include <string>
#include <vector>

#include "zeta_forge/big_float.hpp"
#include "zeta_forge/identity_catalog.hpp"

namespace zeta_forge {

struct GridFailure {
  long n = 0;
  long k = 0;
  BigRational a;
  BigRational lhs;  ///< F(n+1,k) − F(n,k)
  BigRational rhs;  ///< G(n,k+1) − G(n,k)
  std::string note; ///< nonempty for out-of-domain points
};

struct GridReport {
  PairId pair;
  long n_max = 0;
  long k_max = 0;
  std::vector<BigRational> a_values;
  std::vector<GridFailure> failures;
  long checked_count = 0;

  bool passed() const { return failures.empty(); }
};

/// {0, 1/2, 1/3, 2/5, 7/11, 1/7}
std::vector<BigRational> default_sample_a();

struct GridOptions {
  /// Return as soon as one failure is recorded (mutation screening).
  bool stop_at_first_failure = false;
};

/// Tests F(n+1,k) − F(n,k) = G(n,k+1) − G(n,k) with exact rationals for
/// 0 ≤ n ≤ n_max, 0 ≤ k ≤ k_max and every a. THM4 points are clipped to
/// k ≤ 2n−2. Domain errors become failures annotated "out of domain".
GridReport check_pair(const WZPairDef& definition, long n_max, long k_max, const std::vector<BigRational>& a_values,
                      const GridOptions& options = {});
GridReport check_pair(PairId pair, long n_max, long k_max, const std::vector<BigRational>& a_values,
                      const GridOptions& options = {});

/// One definition per monomial of q, that coefficient shifted by `delta`.
std::vector<WZPairDef> single_coefficient_mutations(const WZPairDef& definition, const BigRational& delta = 1);

struct ResidualReport {
  PairId pair;
  int proposition = 1;
  long truncation = 0;
  BigRational a;
  BigFloat lhs_partial;
  BigFloat rhs_partial;
  /// Exact |(lhs − corrections) − (rhs − corrections)|, rounded once.
  BigFloat residual;
  /// Column form: Σ_{k≤T} F(T,k), Σ_{n≤T} G(n,T). Diagonal form: Σ_{k<T} F(T,k).
  std::vector<BigFloat> boundary_terms;
};

/// Σ_{k≤T} F(0,k) against Σ_{n≤T} G(n,0), each corrected by its boundary sum.
ResidualReport check_prop1(PairId pair, long truncation, const BigRational& a, long precision);

/// For THM4: Σ_{n≤T} G(n,0) against Σ_{n≤T}(F(n+1,n)+G(n,n)) − Σ_{k<T} F(T,k).
ResidualReport check_prop2(PairId pair, long truncation, const BigRational& a, long precision);

struct DoublingReport {
  std::vector<ResidualReport> steps;  ///< truncations T0, 2·T0, 4·T0, …
  /// Every doubling shrank the residual at least by `required_factor`.
  bool shrinking = false;
  long required_factor = 2;
};

/// Runs the pair's proposition at T0·2^i for i = 0..doublings. Throws
/// CertificationError when the residual grows on three consecutive doublings.
DoublingReport doubling_protocol(PairId pair, const BigRational& a, long initial_truncation, int doublings,
                                 long precision, long required_factor = 2);

}  // namespace zeta_forge
