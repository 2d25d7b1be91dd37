#include "zeta_forge/polynomial.hpp"

#include <algorithm>
#include <tuple>

namespace zeta_forge {

namespace {

auto degree_key(const Monomial& m) { return std::make_tuple(m.k_degree, m.n_degree, m.a2_degree); }

BigRational int_power(long base, int exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), BigInt(base).get_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(out);
}

}  // namespace

CertificatePolynomial::CertificatePolynomial(long constant) : CertificatePolynomial(BigRational(constant)) {}

CertificatePolynomial::CertificatePolynomial(BigRational constant) {
  if (constant != 0) {
    terms_.push_back(Monomial{std::move(constant), 0, 0, 0});
  }
}

CertificatePolynomial CertificatePolynomial::n() {
  CertificatePolynomial p;
  p.terms_.push_back(Monomial{BigRational(1), 1, 0, 0});
  return p;
}

CertificatePolynomial CertificatePolynomial::k() {
  CertificatePolynomial p;
  p.terms_.push_back(Monomial{BigRational(1), 0, 1, 0});
  return p;
}

CertificatePolynomial CertificatePolynomial::a2() {
  CertificatePolynomial p;
  p.terms_.push_back(Monomial{BigRational(1), 0, 0, 1});
  return p;
}

BigRational CertificatePolynomial::evaluate(long n, long k, const BigRational& a2) const {
  BigRational sum = 0;
  for (const auto& m : terms_) {
    BigRational a2_power = 1;
    for (int i = 0; i < m.a2_degree; ++i) {
      a2_power *= a2;
    }
    sum += m.coefficient * int_power(n, m.n_degree) * int_power(k, m.k_degree) * a2_power;
  }
  return sum;
}

CertificatePolynomial CertificatePolynomial::perturbed(std::size_t index, const BigRational& delta) const {
  CertificatePolynomial out = *this;
  out.terms_.at(index).coefficient += delta;
  // Keep zeroed monomials so indices stay stable for the caller.
  return out;
}

CertificatePolynomial& CertificatePolynomial::operator+=(const CertificatePolynomial& rhs) {
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  normalize();
  return *this;
}

CertificatePolynomial& CertificatePolynomial::operator-=(const CertificatePolynomial& rhs) { return *this += -rhs; }

CertificatePolynomial& CertificatePolynomial::operator*=(const CertificatePolynomial& rhs) {
  std::vector<Monomial> product;
  product.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& x : terms_) {
    for (const auto& y : rhs.terms_) {
      product.push_back(Monomial{x.coefficient * y.coefficient, x.n_degree + y.n_degree, x.k_degree + y.k_degree,
                                 x.a2_degree + y.a2_degree});
    }
  }
  terms_ = std::move(product);
  normalize();
  return *this;
}

CertificatePolynomial CertificatePolynomial::operator-() const {
  CertificatePolynomial out = *this;
  for (auto& m : out.terms_) {
    m.coefficient = -m.coefficient;
  }
  return out;
}

bool operator==(const CertificatePolynomial& x, const CertificatePolynomial& y) {
  if (x.terms_.size() != y.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (degree_key(x.terms_[i]) != degree_key(y.terms_[i]) || x.terms_[i].coefficient != y.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

void CertificatePolynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Monomial& a, const Monomial& b) { return degree_key(a) > degree_key(b); });
  std::vector<Monomial> merged;
  for (auto& m : terms_) {
    if (!merged.empty() && degree_key(merged.back()) == degree_key(m)) {
      merged.back().coefficient += m.coefficient;
    } else {
      merged.push_back(std::move(m));
    }
  }
  std::erase_if(merged, [](const Monomial& m) { return m.coefficient == 0; });
  terms_ = std::move(merged);
}

CertificatePolynomial pow(const CertificatePolynomial& base, unsigned exponent) {
  CertificatePolynomial out(1L);
  for (unsigned i = 0; i < exponent; ++i) {
    out *= base;
  }
  return out;
}

}  // namespace zeta_forge
