#include "zeta_forge/exact_kernel.hpp"

#include <cctype>

#include "zeta_forge/errors.hpp"

namespace zeta_forge {

BigRational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw DomainError("rational with zero denominator");
  }
  BigRational value(numerator, denominator);
  value.canonicalize();
  return value;
}

BigRational make_rational(long numerator, long denominator) {
  return make_rational(BigInt(numerator), BigInt(denominator));
}

namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && text.front() == '-') {
    text.remove_prefix(1);
  }
  if (text.empty()) {
    return false;
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  // The denominator carries no sign of its own.
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-') {
    throw UsageError("cannot parse rational literal '" + std::string(text) + "'; expected p/q or p");
  }
  const BigInt d(std::string(den), 10);
  if (d == 0) {
    throw UsageError("rational literal '" + std::string(text) + "' has a zero denominator");
  }
  return make_rational(BigInt(std::string(num), 10), d);
}

std::string to_string(const BigRational& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const BigRational& value) { return value.get_den() == 1; }

bool is_nonzero_integer(const BigRational& value) { return is_integer(value) && value != 0; }

BigRational pochhammer(const BigRational& base, std::uint64_t count) {
  const BigInt& u = base.get_num();
  const BigInt& v = base.get_den();
  BigInt numerator = 1;
  BigInt factor = u;
  for (std::uint64_t j = 0; j < count; ++j) {
    numerator *= factor;
    factor += v;
  }
  BigInt denominator;
  mpz_pow_ui(denominator.get_mpz_t(), v.get_mpz_t(), count);
  return make_rational(numerator, denominator);
}

BigRational symmetric_pochhammer(const BigRational& a, std::uint64_t count) {
  const BigInt p2 = a.get_num() * a.get_num();
  const BigInt q2 = a.get_den() * a.get_den();
  BigInt numerator = 1;
  for (std::uint64_t j = 1; j <= count; ++j) {
    numerator *= BigInt(j) * BigInt(j) * q2 - p2;
  }
  BigInt denominator;
  mpz_pow_ui(denominator.get_mpz_t(), q2.get_mpz_t(), count);
  return make_rational(numerator, denominator);
}

PochhammerState PochhammerState::start(BigRational base) {
  return PochhammerState{std::move(base), 0, BigRational(1)};
}

void advance(PochhammerState& state) {
  state.value *= state.base + BigRational(BigInt(state.count));
  ++state.count;
}

PochhammerState pochhammer_step(const PochhammerState& state) {
  PochhammerState next = state;
  advance(next);
  return next;
}

BigInt factorial(std::uint64_t n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) + "): k exceeds n");
  }
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace zeta_forge
