#pragma once

// Term formulas of the generating-function identities, written once over an
// abstract "ring" so the same code yields exact values at a fixed a
// (ScalarRing) and truncated power series in a² (SeriesRing in
// coeff_extract.hpp).
//
// A Ring provides:
//   using Value;
//   Value constant(const BigRational& c);
//   Value affine(const BigRational& c0, const BigRational& c1);        // c0 + c1·a²
//   Value quadratic(const BigRational& c0, const BigRational& c1,
//                   const BigRational& c2);                            // c0 + c1·a² + c2·a⁴
//   void multiply(Value& x, const Value& y);
//   void divide(Value& x, const Value& y, const DenominatorFactor& f); // throws on a zero divisor
//   bool is_zero(const Value& x);

#include <string>

#include "zeta_forge/errors.hpp"
#include "zeta_forge/exact_kernel.hpp"
#include "zeta_forge/identity_catalog.hpp"

namespace zeta_forge {

struct DenominatorFactor {
  IdentityId identity;
  const char* expression;
  long n;
  long m = 0;

  std::string describe() const;
};

class ScalarRing {
 public:
  using Value = BigRational;

  explicit ScalarRing(BigRational a) : a_(std::move(a)), a2_(a_ * a_) {}

  const BigRational& a() const { return a_; }

  Value constant(const BigRational& c) const { return c; }
  Value affine(const BigRational& c0, const BigRational& c1) const { return c0 + c1 * a2_; }
  Value quadratic(const BigRational& c0, const BigRational& c1, const BigRational& c2) const {
    return c0 + a2_ * (c1 + c2 * a2_);
  }
  void multiply(Value& x, const Value& y) const { x *= y; }
  void divide(Value& x, const Value& y, const DenominatorFactor& factor) const {
    if (y == 0) {
      throw DomainError(factor.describe() + " for a = " + to_string(a_));
    }
    x /= y;
  }
  bool is_zero(const Value& x) const { return x == 0; }

 private:
  BigRational a_;
  BigRational a2_;
};

namespace detail {

inline BigRational q(long v) { return BigRational(v); }
inline BigRational q(const BigInt& v) { return BigRational(v); }
inline BigRational inverse_square(long m) { return make_rational(1, m * m); }

inline BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

/// Part of each term that does not involve a: signs, factorials, binomials.
inline BigRational rational_prefix(IdentityId id, long n, const BigInt& central, const BigInt& trinomial) {
  const BigInt nn(n);
  const int sign = sign_of_power(static_cast<std::uint64_t>(n - 1));
  switch (id) {
    case IdentityId::Eq01Koecher:
      return make_rational(BigInt(sign), 2 * nn * nn * nn * central);
    case IdentityId::Eq02Leshchiner:
      return make_rational(BigInt(1), 2 * nn * nn * central);
    case IdentityId::Eq03Bbb:
      return make_rational(BigInt(3), central);
    case IdentityId::Eq05Thm1:
      return make_rational(BigInt(1), 2 * nn * nn * nn * central * trinomial);
    case IdentityId::Eq06Thm2:
      return make_rational(BigInt(1), nn * central);
    case IdentityId::Thm3:
      // (1/4)/((m+1)(2m+1)) with m = n−1
      return make_rational(BigInt(1), 4 * nn * (2 * nn - 1));
    case IdentityId::Eq07Thm4:
      return make_rational(BigInt(2 * sign), nn * nn * nn * power(central, 5));
  }
  return 0;
}

/// Numerator polynomial in a² and the non-product denominator factors.
template <class Ring>
void apply_rational_factors(IdentityId id, long n, const Ring& ring, typename Ring::Value& t) {
  const BigRational N(n);
  const BigRational N2 = N * N;
  switch (id) {
    case IdentityId::Eq01Koecher:
      ring.multiply(t, ring.affine(5 * N2, q(-1)));
      ring.divide(t, ring.affine(N2, q(-1)), {id, "n^2 - a^2", n});
      return;
    case IdentityId::Eq02Leshchiner:
      ring.multiply(t, ring.affine(3 * N2, q(1)));
      ring.divide(t, ring.affine(N2, q(-1)), {id, "n^2 - a^2", n});
      return;
    case IdentityId::Eq03Bbb:
      ring.divide(t, ring.affine(N2, q(-1)), {id, "n^2 - a^2", n});
      return;
    case IdentityId::Eq05Thm1:
      ring.multiply(t, ring.quadratic(2 * N2 * (56 * N2 - 32 * N + 5), -(32 * N2 - 10 * N + 1), q(1)));
      ring.divide(t, ring.affine((2 * N - 1) * (2 * N - 1), q(-1)), {id, "(2n-1)^2 - a^2", n});
      ring.divide(t, ring.affine(4 * N2, q(-1)), {id, "4n^2 - a^2", n});
      return;
    case IdentityId::Eq06Thm2:
      ring.multiply(t, ring.affine(N2 * (21 * N - 8), -(9 * N - 2)));
      ring.divide(t, ring.affine(N2, q(-1)), {id, "n^2 - a^2", n});
      ring.divide(t, ring.affine(4 * N2, q(-1)), {id, "4n^2 - a^2", n});
      return;
    case IdentityId::Thm3: {
      const BigRational M = N - 1;
      ring.multiply(t, ring.affine(N2 * (30 * M + 19), -(12 * M + 7)));
      return;
    }
    case IdentityId::Eq07Thm4:
      ring.multiply(t, ring.quadratic(N2 * (205 * N2 - 160 * N + 32), -(62 * N2 - 40 * N + 8), q(1)));
      ring.divide(t, ring.affine(N2, q(-1)), {id, "n^2 - a^2", n});
      ring.divide(t, ring.affine(4 * N2, q(-1)), {id, "4n^2 - a^2", n});
      return;
  }
}

/// (j² − a²)
template <class Ring>
typename Ring::Value square_minus_a2(const Ring& ring, long j) {
  return ring.affine(q(j * j), q(-1));
}

/// (1 − a²/j²)
template <class Ring>
typename Ring::Value one_minus_a2_over_square(const Ring& ring, long j) {
  return ring.affine(q(1), -inverse_square(j));
}

/// Multiplies in the m-th factor of the cumulative product ∏_{m=1}^{n−1}(…).
template <class Ring>
void apply_cumulative_factor(IdentityId id, long n, long m, const Ring& ring, typename Ring::Value& p) {
  switch (id) {
    case IdentityId::Eq01Koecher:
    case IdentityId::Eq02Leshchiner:
      ring.multiply(p, one_minus_a2_over_square(ring, m));
      return;
    case IdentityId::Eq03Bbb:
      ring.multiply(p, ring.affine(q(m * m), q(-4)));
      ring.divide(p, square_minus_a2(ring, m), {id, "m^2 - a^2", n, m});
      return;
    case IdentityId::Eq05Thm1:
      ring.multiply(p, ring.affine(q(-1), inverse_square(m)));
      return;
    case IdentityId::Eq06Thm2:
      ring.multiply(p, ring.affine(q(m * m), q(-4)));
      return;
    case IdentityId::Eq07Thm4: {
      const auto f = one_minus_a2_over_square(ring, m);
      ring.multiply(p, f);
      ring.multiply(p, f);
      return;
    }
    case IdentityId::Thm3:
      return;
  }
}

}  // namespace detail

/// n-th right-hand term computed from scratch in O(n) ring operations.
template <class Ring>
typename Ring::Value direct_identity_term(IdentityId id, long n, const Ring& ring) {
  if (n < 1) {
    throw DomainError("identity " + std::string(to_string(id)) + ": term index must be >= 1");
  }
  const auto un = static_cast<std::uint64_t>(n);
  typename Ring::Value t = ring.constant(detail::rational_prefix(id, n, binomial(2 * un, un), binomial(3 * un, un)));
  detail::apply_rational_factors(id, n, ring, t);
  for (long m = 1; m < n; ++m) {
    detail::apply_cumulative_factor(id, n, m, ring, t);
  }
  switch (id) {
    case IdentityId::Eq06Thm2:
      for (long k = 1; k < n; ++k) {
        ring.divide(t, detail::square_minus_a2(ring, k + n), {id, "(k+n)^2 - a^2", n, k});
      }
      break;
    case IdentityId::Eq07Thm4:
      for (long m = 1; m < n; ++m) {
        ring.divide(t, detail::one_minus_a2_over_square(ring, n + m), {id, "1 - a^2/(n+m)^2", n, m});
      }
      break;
    case IdentityId::Thm3:
      // (1+a)_{n-1}²(1−a)_{n-1}² / ((1+a)_{2n}(1−a)_{2n})
      for (long j = 1; j < n; ++j) {
        const auto f = detail::square_minus_a2(ring, j);
        ring.multiply(t, f);
        ring.multiply(t, f);
      }
      for (long j = 1; j <= 2 * n; ++j) {
        ring.divide(t, detail::square_minus_a2(ring, j), {id, "(1+a)_{2n}(1-a)_{2n}", n, j});
      }
      break;
    default:
      break;
  }
  return t;
}

/// Emits terms n = 1, 2, … with a bounded number of ring operations per term.
template <class Ring>
class IdentityTermStream {
 public:
  using Value = typename Ring::Value;

  IdentityTermStream(IdentityId id, Ring ring)
      : id_(id), ring_(std::move(ring)), cumulative_(ring_.constant(1)), window_(ring_.constant(1)) {}

  Value next() {
    ++n_;
    const BigInt p(n_ - 1);
    central_ = central_ * (2 * p + 1) * (2 * p + 2) / ((p + 1) * (p + 1));
    trinomial_ = trinomial_ * (3 * p + 1) * (3 * p + 2) * (3 * p + 3) / ((p + 1) * (2 * p + 1) * (2 * p + 2));
    if (n_ > 1) {
      advance();
    } else {
      initialize();
    }
    Value t = ring_.constant(detail::rational_prefix(id_, n_, central_, trinomial_));
    detail::apply_rational_factors(id_, n_, ring_, t);
    ring_.multiply(t, cumulative_);
    ring_.multiply(t, window_);
    return t;
  }

  long index() const { return n_; }
  IdentityId id() const { return id_; }
  const Ring& ring() const { return ring_; }

  /// True once a vanishing factor has entered the cumulative product, so the
  /// current and all later terms are exactly zero.
  bool exhausted() const { return n_ > 0 && ring_.is_zero(cumulative_); }

 private:
  void initialize() {
    if (id_ == IdentityId::Thm3) {
      // 1/((1+a)_2(1−a)_2)
      ring_.divide(window_, detail::square_minus_a2(ring_, 1), {id_, "(1+a)_{2n}(1-a)_{2n}", 1, 1});
      ring_.divide(window_, detail::square_minus_a2(ring_, 2), {id_, "(1+a)_{2n}(1-a)_{2n}", 1, 2});
    }
  }

  // Moves every piece of state from index n−1 to n.
  void advance() {
    const long n = n_;
    const long prev = n - 1;
    detail::apply_cumulative_factor(id_, n, prev, ring_, cumulative_);
    switch (id_) {
      case IdentityId::Eq06Thm2:
        // ∏_{j=n+1}^{2n−1} (j²−a²) from the same product at n−1
        ring_.multiply(window_, detail::square_minus_a2(ring_, n));
        ring_.divide(window_, detail::square_minus_a2(ring_, 2 * n - 2), {id_, "(k+n)^2 - a^2", n, n - 2});
        ring_.divide(window_, detail::square_minus_a2(ring_, 2 * n - 1), {id_, "(k+n)^2 - a^2", n, n - 1});
        break;
      case IdentityId::Eq07Thm4:
        ring_.multiply(window_, detail::one_minus_a2_over_square(ring_, n));
        ring_.divide(window_, detail::one_minus_a2_over_square(ring_, 2 * n - 2), {id_, "1 - a^2/(n+m)^2", n, n - 2});
        ring_.divide(window_, detail::one_minus_a2_over_square(ring_, 2 * n - 1), {id_, "1 - a^2/(n+m)^2", n, n - 1});
        break;
      case IdentityId::Thm3: {
        const auto f = detail::square_minus_a2(ring_, n - 1);
        ring_.multiply(window_, f);
        ring_.multiply(window_, f);
        ring_.divide(window_, detail::square_minus_a2(ring_, 2 * n - 1), {id_, "(1+a)_{2n}(1-a)_{2n}", n, 2 * n - 1});
        ring_.divide(window_, detail::square_minus_a2(ring_, 2 * n), {id_, "(1+a)_{2n}(1-a)_{2n}", n, 2 * n});
        break;
      }
      default:
        break;
    }
  }

  IdentityId id_;
  Ring ring_;
  long n_ = 0;
  BigInt central_ = 1;
  BigInt trinomial_ = 1;
  Value cumulative_;
  Value window_;
};

}  // namespace zeta_forge
