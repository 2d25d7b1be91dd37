#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "zeta_forge/exact_kernel.hpp"

namespace zeta_forge {

/// Binary floating-point number of explicit precision, backed by MPFR.
///
/// Binary operations produce a result at the larger precision of the two
/// operands and round to nearest. Precision is set at construction and never
/// changes implicitly.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultBits = 128;

  explicit BigFloat(mpfr_prec_t bits = kDefaultBits);
  BigFloat(long value, mpfr_prec_t bits);
  BigFloat(const BigRational& value, mpfr_prec_t bits);
  BigFloat(const BigInt& value, mpfr_prec_t bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// Precision in bits carrying at least `digits` significant decimal digits.
  static mpfr_prec_t bits_for_digits(long digits);

  static BigFloat pi(mpfr_prec_t bits);
  static BigFloat log2(mpfr_prec_t bits);
  /// 10^exponent rounded to the given precision.
  static BigFloat pow10(long exponent, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Base-10 exponent e with 10^e ≤ |x| < 10^(e+1); requires a nonzero value.
  long decimal_exponent() const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& lhs, const BigFloat& rhs);
  friend std::partial_ordering operator<=>(const BigFloat& lhs, const BigFloat& rhs);

  /// Fixed notation with exactly `decimals` digits after the point.
  std::string to_fixed(int decimals) const;
  /// Scientific notation with `significant` significant digits, e.g. "1.23457e-05".
  std::string to_scientific(int significant) const;
  /// Shortest of fixed/scientific with `significant` significant digits (printf %g).
  std::string to_general(int significant) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

BigFloat abs(BigFloat x);
BigFloat log1p(const BigFloat& x);
BigFloat pow(const BigFloat& x, long exponent);
BigFloat max(const BigFloat& x, const BigFloat& y);
/// |x − y| < 10^(−digits).
bool agree_to_digits(const BigFloat& x, const BigFloat& y, long digits);

}  // namespace zeta_forge
