#pragma once

#include <vector>

#include "zeta_forge/big_float.hpp"
#include "zeta_forge/identity_terms.hpp"
#include "zeta_forge/series_eval.hpp"

namespace zeta_forge {

/// Truncated power series c_0 + c_1·a² + … + c_J·a^{2J} with exact coefficients.
class EvenSeries {
 public:
  explicit EvenSeries(std::size_t order) : coefficients_(order + 1) {}
  EvenSeries(std::size_t order, std::initializer_list<BigRational> leading);

  std::size_t order() const { return coefficients_.size() - 1; }
  const BigRational& operator[](std::size_t j) const { return coefficients_[j]; }
  BigRational& operator[](std::size_t j) { return coefficients_[j]; }
  const std::vector<BigRational>& coefficients() const { return coefficients_; }

  friend bool operator==(const EvenSeries& x, const EvenSeries& y) = default;

 private:
  std::vector<BigRational> coefficients_;
};

/// Cauchy product truncated at the common order. Throws UsageError on an
/// order mismatch.
EvenSeries series_mul(const EvenSeries& x, const EvenSeries& y);
/// Multiplicative inverse to the same order. Throws DomainError when c_0 = 0.
EvenSeries series_recip(const EvenSeries& x);

class SeriesRing {
 public:
  using Value = EvenSeries;

  explicit SeriesRing(std::size_t order) : order_(order) {}
  std::size_t order() const { return order_; }

  Value constant(const BigRational& c) const { return EvenSeries(order_, {c}); }
  Value affine(const BigRational& c0, const BigRational& c1) const { return EvenSeries(order_, {c0, c1}); }
  Value quadratic(const BigRational& c0, const BigRational& c1, const BigRational& c2) const {
    return EvenSeries(order_, {c0, c1, c2});
  }
  void multiply(Value& x, const Value& y) const;
  void divide(Value& x, const Value& y, const DenominatorFactor& factor) const;
  bool is_zero(const Value& x) const;

 private:
  std::size_t order_;
};

/// Exact a²-expansion of identity_term(id, n, a) through order J.
EvenSeries term_series(IdentityId id, long n, std::size_t order);

struct CoefficientReport {
  IdentityId identity;
  std::vector<BigFloat> values;       ///< c_0 … c_J of the right-hand generating function
  std::vector<BigFloat> tail_bounds;  ///< per-coefficient, each below 10^(−digits)
  long terms_used = 0;
  long requested_digits = 0;
};

struct ExtractOptions {
  EvalOptions eval;
  std::size_t max_order = 8;
};

/// Sums term_series over n. A coefficient's tail is bounded by
/// n²·max(|c_j(t_n)|, |c_j(t_{n−1})|)/(1−r*), with r* the midpoint of the
/// identity's ratio and 1; the n² absorbs the harmonic-sum growth of c_j.
CoefficientReport gf_coefficients(IdentityId id, std::size_t order, long digits, const ExtractOptions& options = {});

/// Identity whose a² coefficient a corollary series reproduces.
IdentityId corollary_parent(NamedFormulaId which);

struct CorollaryReport {
  NamedFormulaId formula;
  IdentityId parent;
  EvalReport series;          ///< the corollary series summed directly
  BigFloat extracted;         ///< coefficient 1 of the parent's generating function
  BigFloat extracted_tail;
  BigFloat difference;        ///< |series.value − extracted|
  bool agrees = false;        ///< difference < 2·10^(−digits)
};

/// which ∈ {thm1-z5, thm2-z4, thm4-z5}; anything else throws UsageError.
CorollaryReport corollary_check(NamedFormulaId which, long digits, const ExtractOptions& options = {});

}  // namespace zeta_forge
