#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace zeta_forge {

using BigInt = mpz_class;
/// gmpxx canonicalizes after every arithmetic operation; values built from a
/// raw numerator/denominator pair must go through make_rational().
using BigRational = mpq_class;

BigRational make_rational(const BigInt& numerator, const BigInt& denominator);
BigRational make_rational(long numerator, long denominator = 1);

/// Parses "p/q" or "p" (decimal, optional leading minus). Throws UsageError.
BigRational parse_rational(std::string_view text);
/// Inverse of parse_rational: "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& value);

bool is_integer(const BigRational& value);
bool is_nonzero_integer(const BigRational& value);

/// Rising factorial base·(base+1)·…·(base+count−1); 1 when count is 0.
BigRational pochhammer(const BigRational& base, std::uint64_t count);

/// (1+a)_count·(1−a)_count written as ∏_{j=1}^{count} (j² − a²). Even in a.
BigRational symmetric_pochhammer(const BigRational& a, std::uint64_t count);

struct PochhammerState {
  BigRational base;
  std::uint64_t count = 0;
  BigRational value = 1;

  static PochhammerState start(BigRational base);
};

/// Advances to count+1 by multiplying in (base + count).
PochhammerState pochhammer_step(const PochhammerState& state);
void advance(PochhammerState& state);

BigInt factorial(std::uint64_t n);

/// Exact binomial coefficient. Throws DomainError when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

inline int sign_of_power(std::uint64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace zeta_forge
