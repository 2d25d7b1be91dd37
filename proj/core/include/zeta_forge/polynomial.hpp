#pragma once

#include <vector>

#include "zeta_forge/exact_kernel.hpp"

namespace zeta_forge {

/// c · n^n_degree · k^k_degree · (a²)^a2_degree
struct Monomial {
  BigRational coefficient;
  int n_degree = 0;
  int k_degree = 0;
  int a2_degree = 0;
};

/// Sparse polynomial in the lattice indices n, k and the parameter square a².
///
/// Holds the q(n,k) numerators of the WZ mates. Terms are kept merged and in a
/// fixed order, so monomial(i) addresses the same coefficient across copies.
class CertificatePolynomial {
 public:
  CertificatePolynomial() = default;
  CertificatePolynomial(long constant);  // NOLINT: integer literals read naturally in formulas
  CertificatePolynomial(BigRational constant);  // NOLINT

  static CertificatePolynomial n();
  static CertificatePolynomial k();
  static CertificatePolynomial a2();

  BigRational evaluate(long n, long k, const BigRational& a2) const;

  const std::vector<Monomial>& monomials() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Copy with the coefficient of monomial `index` shifted by `delta`.
  CertificatePolynomial perturbed(std::size_t index, const BigRational& delta) const;

  CertificatePolynomial& operator+=(const CertificatePolynomial& rhs);
  CertificatePolynomial& operator-=(const CertificatePolynomial& rhs);
  CertificatePolynomial& operator*=(const CertificatePolynomial& rhs);

  friend CertificatePolynomial operator+(CertificatePolynomial x, const CertificatePolynomial& y) { return x += y; }
  friend CertificatePolynomial operator-(CertificatePolynomial x, const CertificatePolynomial& y) { return x -= y; }
  friend CertificatePolynomial operator*(CertificatePolynomial x, const CertificatePolynomial& y) { return x *= y; }
  CertificatePolynomial operator-() const;

  friend bool operator==(const CertificatePolynomial& x, const CertificatePolynomial& y);

 private:
  void normalize();

  std::vector<Monomial> terms_;
};

CertificatePolynomial pow(const CertificatePolynomial& base, unsigned exponent);

}  // namespace zeta_forge
