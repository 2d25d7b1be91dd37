#include "zeta_forge/big_float.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace zeta_forge {

namespace {

mpfr_prec_t joint_precision(const BigFloat& x, const BigFloat& y) {
  return std::max(x.precision(), y.precision());
}

struct MpfrStringDeleter {
  void operator()(char* text) const { mpfr_free_str(text); }
};

std::string format(const char* pattern, int digits, mpfr_srcptr value) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, pattern, digits, value) < 0 || raw == nullptr) {
    return "nan";
  }
  std::unique_ptr<char, MpfrStringDeleter> owned(raw);
  return std::string(owned.get());
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Leave the source as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

mpfr_prec_t BigFloat::bits_for_digits(long digits) {
  const double bits = std::ceil(static_cast<double>(std::max(1L, digits)) * 3.3219280948873623) + 8;
  return static_cast<mpfr_prec_t>(bits);
}

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::log2(mpfr_prec_t bits) {
  BigFloat out(bits);
  mpfr_const_log2(out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::pow10(long exponent, mpfr_prec_t bits) {
  BigFloat out(10L, bits);
  mpfr_pow_si(out.value_, out.value_, exponent, MPFR_RNDN);
  return out;
}

long BigFloat::decimal_exponent() const {
  BigFloat magnitude(std::max<mpfr_prec_t>(precision(), 64));
  mpfr_abs(magnitude.value_, value_, MPFR_RNDN);
  mpfr_log10(magnitude.value_, magnitude.value_, MPFR_RNDN);
  return static_cast<long>(std::floor(magnitude.to_double()));
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  mpfr_prec_round(value_, joint_precision(*this, rhs), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  mpfr_prec_round(value_, joint_precision(*this, rhs), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  mpfr_prec_round(value_, joint_precision(*this, rhs), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  mpfr_prec_round(value_, joint_precision(*this, rhs), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

bool operator==(const BigFloat& lhs, const BigFloat& rhs) { return mpfr_equal_p(lhs.value_, rhs.value_) != 0; }

std::partial_ordering operator<=>(const BigFloat& lhs, const BigFloat& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string BigFloat::to_fixed(int decimals) const { return format("%.*RNf", decimals, value_); }

std::string BigFloat::to_scientific(int significant) const {
  return format("%.*RNe", std::max(0, significant - 1), value_);
}

std::string BigFloat::to_general(int significant) const { return format("%.*RNg", significant, value_); }

BigFloat abs(BigFloat x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

BigFloat log1p(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_log1p(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& x, long exponent) {
  BigFloat out(x.precision());
  mpfr_pow_si(out.get(), x.get(), exponent, MPFR_RNDN);
  return out;
}

BigFloat max(const BigFloat& x, const BigFloat& y) { return (x < y) ? y : x; }

bool agree_to_digits(const BigFloat& x, const BigFloat& y, long digits) {
  const BigFloat difference = abs(x - y);
  return difference < BigFloat::pow10(-digits, std::max<mpfr_prec_t>(difference.precision(), 64));
}

}  // namespace zeta_forge
