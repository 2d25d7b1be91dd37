#include "zeta_forge/identity_catalog.hpp"

#include <algorithm>
#include <map>

#include "zeta_forge/errors.hpp"
#include "zeta_forge/identity_terms.hpp"

namespace zeta_forge {

// ---------------------------------------------------------------------------
// Names

namespace {

constexpr std::array<std::string_view, 7> kPairNames = {"koecher", "leshchiner", "bbb", "thm1", "thm2", "thm3", "thm4"};
constexpr std::array<std::string_view, 9> kNamedNames = {"markov-z2", "markov-z3", "markov-z4",
                                                         "amdeberhan-z3", "thm1-z5", "eq065-z2",
                                                         "thm2-z4", "az-z3", "thm4-z5"};

template <class Enum, std::size_t N>
Enum parse_name(std::string_view text, const std::array<std::string_view, N>& names, const char* kind) {
  const auto it = std::find(names.begin(), names.end(), text);
  if (it == names.end()) {
    std::string message = "unknown " + std::string(kind) + " '" + std::string(text) + "'; expected one of";
    for (auto name : names) {
      message += " " + std::string(name);
    }
    throw UsageError(message);
  }
  return static_cast<Enum>(it - names.begin());
}

}  // namespace

std::string_view to_string(PairId id) { return kPairNames.at(static_cast<std::size_t>(id)); }
std::string_view to_string(IdentityId id) { return kPairNames.at(static_cast<std::size_t>(id)); }
std::string_view to_string(NamedFormulaId id) { return kNamedNames.at(static_cast<std::size_t>(id)); }

std::string_view to_string(LhsFamily family) {
  switch (family) {
    case LhsFamily::Odd:
      return "odd";
    case LhsFamily::Even:
      return "even";
    case LhsFamily::AltEven:
      return "alt-even";
  }
  return "?";
}

PairId parse_pair_id(std::string_view text) { return parse_name<PairId>(text, kPairNames, "pair"); }
IdentityId parse_identity_id(std::string_view text) { return parse_name<IdentityId>(text, kPairNames, "identity"); }
NamedFormulaId parse_named_formula_id(std::string_view text) {
  return parse_name<NamedFormulaId>(text, kNamedNames, "formula");
}

PairId pair_for(IdentityId id) { return static_cast<PairId>(static_cast<int>(id)); }
IdentityId identity_for(PairId id) { return static_cast<IdentityId>(static_cast<int>(id)); }

std::string DenominatorFactor::describe() const {
  std::string text = "identity " + std::string(to_string(identity)) + " term n=" + std::to_string(n);
  if (m != 0) {
    text += ", m=" + std::to_string(m);
  }
  return text + ": denominator factor " + expression + " vanishes";
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

CertificatePolynomial make_q(PairId id) {
  using P = CertificatePolynomial;
  const P n = P::n();
  const P k = P::k();
  const P A = P::a2();
  switch (id) {
    case PairId::Koecher:
      return 5 * pow(n + 1, 2) - A + pow(k, 2) + 4 * k * (n + 1);
    case PairId::Leshchiner:
      return 3 * pow(n + 1, 2) + A + pow(k, 2) + 4 * k * (n + 1);
    case PairId::Bbb:
      return 3 * n + 3 + 2 * k;
    case PairId::Thm1:
      return 2 * (2 * n + 1) * (pow(A, 2) - A * (32 * pow(n, 2) + 54 * n + 23) +
                                2 * pow(n + 1, 2) * (56 * pow(n, 2) + 80 * n + 29)) +
             pow(k, 4) * (9 * n + 6) + pow(k, 3) * (90 * pow(n, 2) + 132 * n + 48) +
             pow(k, 2) * (348 * pow(n, 3) + 792 * pow(n, 2) - 15 * A * n + 594 * n + 147 - 9 * A) +
             k * (624 * pow(n, 4) + 1932 * pow(n, 3) + 2214 * pow(n, 2) - 84 * A * pow(n, 2) - 117 * A * n +
                  1113 * n + 207 - 39 * A);
    case PairId::Thm2:
      return pow(n + 1, 2) * (21 * n + 13) - A * (9 * n + 7) + 2 * pow(k, 3) + pow(k, 2) * (13 * n + 11) +
             k * (28 * pow(n, 2) + 48 * n + 20 - 2 * A);
    case PairId::Thm3:
      return pow(n + 1, 3) * (30 * n + 19) - A * (n + 1) * (12 * n + 7) + 2 * pow(k, 3) * (n + 1) +
             2 * pow(k, 2) * (7 * pow(n, 2) + 13 * n + 6) +
             k * (34 * pow(n, 3) + 93 * pow(n, 2) + 84 * n - 4 * A * n + 25 - 3 * A);
    case PairId::Thm4:
      return pow(n + 1, 3) * (30 * n + 19) - A * (n + 1) * (12 * n + 7) +
             k * (21 * pow(n, 3) + 55 * pow(n, 2) + 47 * n + 13 - 3 * A * n - A);
  }
  return {};
}

const std::array<WZPairDef, 7>& pair_table() {
  static const std::array<WZPairDef, 7> table = [] {
    std::array<WZPairDef, 7> out{};
    for (auto id : kAllPairs) {
      out[static_cast<std::size_t>(id)] = WZPairDef{id, make_q(id), id == PairId::Thm4 ? 2 : 1};
    }
    return out;
  }();
  return table;
}

}  // namespace

WZPairDef WZPairDef::with_perturbed_coefficient(std::size_t monomial, const BigRational& delta) const {
  WZPairDef out = *this;
  out.q = q.perturbed(monomial, delta);
  return out;
}

const WZPairDef& pair_definition(PairId id) { return pair_table().at(static_cast<std::size_t>(id)); }

// ---------------------------------------------------------------------------
// PairEvaluator

PairEvaluator::PairEvaluator(WZPairDef definition, BigRational a)
    : def_(std::move(definition)), a_(std::move(a)), a2_(a_ * a_) {
  factorials_.emplace_back(1);
  sym_.emplace_back(1);
  sym_double_.emplace_back(1);
}

const BigInt& PairEvaluator::fact(long j) {
  while (static_cast<long>(factorials_.size()) <= j) {
    factorials_.push_back(factorials_.back() * BigInt(static_cast<long>(factorials_.size())));
  }
  return factorials_[static_cast<std::size_t>(j)];
}

const BigRational& PairEvaluator::sym(long j) {
  while (static_cast<long>(sym_.size()) <= j) {
    const long i = static_cast<long>(sym_.size());
    sym_.push_back(sym_.back() * (BigRational(i * i) - a2_));
  }
  return sym_[static_cast<std::size_t>(j)];
}

const BigRational& PairEvaluator::sym_double(long j) {
  while (static_cast<long>(sym_double_.size()) <= j) {
    const long i = static_cast<long>(sym_double_.size());
    sym_double_.push_back(sym_double_.back() * (BigRational(i * i) - 4 * a2_));
  }
  return sym_double_[static_cast<std::size_t>(j)];
}

BigRational PairEvaluator::nonzero(BigRational value, const char* factor, const char* function, long n,
                                   long k) const {
  if (value == 0) {
    throw DomainError("pair " + std::string(to_string(def_.id)) + " " + function + "(" + std::to_string(n) + ", " +
                      std::to_string(k) + ") at a = " + to_string(a_) + ": denominator factor " + factor +
                      " vanishes");
  }
  return value;
}

const BigRational& PairEvaluator::sym_denominator(long j, const char* function, long n, long k) {
  const BigRational& value = sym(j);
  if (value == 0) {
    nonzero(0, "(1+a)_m(1-a)_m", function, n, k);
  }
  return value;
}

void PairEvaluator::check_indices(const char* function, long n, long k) const {
  if (n < 0 || k < 0) {
    throw DomainError("pair " + std::string(to_string(def_.id)) + " " + function + ": indices must be nonnegative");
  }
  if (def_.id == PairId::Thm4) {
    const long limit = (function[0] == 'F') ? 2 * n - 1 : 2 * n;
    if (k > limit) {
      throw DomainError("pair thm4 " + std::string(function) + "(" + std::to_string(n) + ", " + std::to_string(k) +
                        "): requires k <= " + (function[0] == 'F' ? "2n-1" : "2n") +
                        " where the factorial (2n-k-1)! is defined");
    }
  }
}

BigRational PairEvaluator::F(long n, long k) {
  check_indices("F", n, k);
  const BigRational N(n);
  const BigRational K(k);
  const int sign_n = sign_of_power(static_cast<std::uint64_t>(n));
  const int sign_k = sign_of_power(static_cast<std::uint64_t>(k));
  switch (def_.id) {
    case PairId::Koecher: {
      const BigRational shifted = nonzero((N + K + 1) * (N + K + 1) - a2_, "(n+k+1)^2 - a^2", "F", n, k);
      return sign_n * BigRational(fact(k)) * sym(n) / (BigRational(fact(2 * n + k + 1)) * shifted);
    }
    case PairId::Leshchiner: {
      const BigRational shifted = nonzero((N + K + 1) * (N + K + 1) - a2_, "(n+k+1)^2 - a^2", "F", n, k);
      return sign_k * BigRational(fact(k)) * sym(n) * (N + K + 1) / (BigRational(fact(2 * n + k + 1)) * shifted);
    }
    case PairId::Bbb:
      return BigRational(fact(n) * fact(n)) * sym(k) * sym_double(n) /
             (BigRational(fact(2 * n)) * sym_denominator(n + k + 1, "F", n, k));
    case PairId::Thm1:
      return sign_n * BigRational(fact(n) * fact(2 * n) * fact(k)) * sym(k) * sym(n) * sym(2 * n) /
             (BigRational(fact(3 * n) * fact(2 * n + k + 1)) * sym_denominator(2 * n + k + 1, "F", n, k));
    case PairId::Thm2:
      return BigRational(fact(n) * fact(n)) * sym_double(n) * sym(n + k) /
             (BigRational(fact(2 * n)) * sym_denominator(2 * n + k + 1, "F", n, k));
    case PairId::Thm3:
      return sym(k) * sym(n) * sym(n) / (sym_denominator(2 * n + k + 1, "F", n, k) * (N + K + 1));
    case PairId::Thm4:
      return sign_k * sym(k) * sym(n) * sym(n) * BigRational(fact(2 * n - k - 1) * fact(k) * fact(n) * fact(n)) /
             (2 * BigRational(fact(n + k + 1) * fact(n + k + 1) * fact(2 * n)) * sym_denominator(2 * n, "F", n, k));
  }
  return 0;
}

BigRational PairEvaluator::G(long n, long k) {
  check_indices("G", n, k);
  const BigRational N(n);
  const BigRational K(k);
  const int sign_n = sign_of_power(static_cast<std::uint64_t>(n));
  const int sign_k = sign_of_power(static_cast<std::uint64_t>(k));
  const BigRational q = def_.q.evaluate(n, k, a2_);
  switch (def_.id) {
    case PairId::Koecher: {
      const BigRational shifted = nonzero((N + K + 1) * (N + K + 1) - a2_, "(n+k+1)^2 - a^2", "G", n, k);
      return sign_n * BigRational(fact(k)) * sym(n) * q / (BigRational(fact(2 * n + k + 2)) * shifted * (2 * N + 2));
    }
    case PairId::Leshchiner: {
      const BigRational shifted = nonzero((N + K + 1) * (N + K + 1) - a2_, "(n+k+1)^2 - a^2", "G", n, k);
      return sign_k * BigRational(fact(k)) * sym(n) * q / (2 * BigRational(fact(2 * n + k + 2)) * shifted);
    }
    case PairId::Bbb:
      return sym(k) * sym_double(n) * BigRational(fact(n) * fact(n + 1)) * q /
             (sym_denominator(n + k + 1, "G", n, k) * BigRational(fact(2 * n + 2)));
    case PairId::Thm1:
      return sign_n * BigRational(fact(k) * fact(n) * fact(2 * n)) * sym(k) * sym(n) * sym(2 * n) * q /
             (6 * BigRational(fact(3 * n + 2) * fact(2 * n + k + 2)) * sym_denominator(2 * n + k + 2, "G", n, k));
    case PairId::Thm2:
      return BigRational(fact(n) * fact(n)) * sym(n + k) * sym_double(n) * q /
             (2 * BigRational(fact(2 * n + 1)) * sym_denominator(2 * n + k + 2, "G", n, k));
    case PairId::Thm3:
      return sym(k) * sym(n) * sym(n) * q /
             (4 * sym_denominator(2 * n + k + 2, "G", n, k) * (N + K + 1) * (N + 1) * (2 * N + 1));
    case PairId::Thm4:
      return sign_k * sym(k) * sym(n) * sym(n) * BigRational(fact(2 * n - k) * fact(k) * fact(n) * fact(n)) * q /
             (4 * BigRational(fact(2 * n + 1) * fact(n + k + 1) * fact(n + k + 1)) *
              sym_denominator(2 * n + 2, "G", n, k));
  }
  return 0;
}

BigRational pair_F(PairId id, long n, long k, const BigRational& a) {
  return PairEvaluator(pair_definition(id), a).F(n, k);
}

BigRational pair_G(PairId id, long n, long k, const BigRational& a) {
  return PairEvaluator(pair_definition(id), a).G(n, k);
}

// ---------------------------------------------------------------------------
// Identities

namespace {

BigRational ratio_for(IdentityId id) {
  switch (id) {
    case IdentityId::Eq01Koecher:
    case IdentityId::Eq02Leshchiner:
    case IdentityId::Eq03Bbb:
      return make_rational(1, 4);
    case IdentityId::Eq05Thm1:
      return make_rational(1, 27);
    case IdentityId::Eq06Thm2:
      return make_rational(1, 64);
    case IdentityId::Thm3:
      return make_rational(1, 16);
    case IdentityId::Eq07Thm4:
      return make_rational(1, 1024);
  }
  return 0;
}

LhsFamily family_for(IdentityId id) {
  switch (id) {
    case IdentityId::Eq02Leshchiner:
      return LhsFamily::AltEven;
    case IdentityId::Eq03Bbb:
    case IdentityId::Eq06Thm2:
      return LhsFamily::Even;
    default:
      return LhsFamily::Odd;
  }
}

const std::array<IdentitySpec, 7>& identity_table() {
  static const std::array<IdentitySpec, 7> table = [] {
    std::array<IdentitySpec, 7> out{};
    for (auto id : kAllIdentities) {
      out[static_cast<std::size_t>(id)] =
          IdentitySpec{id, pair_for(id), family_for(id), ratio_for(id), 1,
                       [id](long n, const BigRational& a) { return identity_term(id, n, a); }};
    }
    return out;
  }();
  return table;
}

}  // namespace

const IdentitySpec& identity_spec(IdentityId id) { return identity_table().at(static_cast<std::size_t>(id)); }
LhsFamily lhs_family(IdentityId id) { return family_for(id); }

BigRational identity_term(IdentityId id, long n, const BigRational& a) {
  return direct_identity_term(id, n, ScalarRing(a));
}

BigRational identity_ratio(IdentityId id) { return ratio_for(id); }

// ---------------------------------------------------------------------------
// Named formulas

namespace {

/// Shared term body; `h2(j)` must return Σ_{i=1}^{j} 1/i².
template <class PrefixSum>
BigRational named_body(NamedFormulaId id, long n, const BigInt& central, const BigInt& trinomial, PrefixSum&& h2) {
  const BigRational N(n);
  const BigRational C(central);
  const BigRational T(trinomial);
  const int alt = sign_of_power(static_cast<std::uint64_t>(n - 1));  // (−1)^{n−1}
  const BigRational odd2 = (2 * N - 1) * (2 * N - 1);
  const BigRational n3 = N * N * N;
  const BigRational n5 = n3 * N * N;
  switch (id) {
    case NamedFormulaId::MarkovZ2:
      return 3 / (N * N * C);
    case NamedFormulaId::MarkovZ3:
      return make_rational(5 * alt, 2) / (n3 * C);
    case NamedFormulaId::MarkovZ4:
      return make_rational(36, 17) / (N * n3 * C);
    case NamedFormulaId::AmdeberhanZ3:
      return make_rational(alt, 4) * (56 * N * N - 32 * N + 5) / (n3 * odd2 * C * T);
    case NamedFormulaId::Thm1Z5: {
      const BigRational lead = make_rational(3 * alt, 16) * (4 * N - 1) * (16 * n3 - 8 * N * N + 4 * N - 1) /
                               (n5 * odd2 * odd2 * C * T);
      const BigRational tail = make_rational(-alt, 4) * (56 * N * N - 32 * N + 5) / (n3 * odd2 * C * T) * h2(n - 1);
      return lead + tail;
    }
    case NamedFormulaId::Eq065Z2:
      return (21 * N - 8) / (n3 * C * C * C);
    case NamedFormulaId::Thm2Z4: {
      const BigRational c3 = C * C * C;
      const BigRational inner = 4 * h2(n - 1) - (h2(2 * n - 1) - h2(n));
      return (69 * N - 32) / (4 * n5 * c3) - (21 * N - 8) / (n3 * c3) * inner;
    }
    case NamedFormulaId::AzZ3:
      return make_rational(alt, 2) * (205 * N * N - 160 * N + 32) / (n5 * C * C * C * C * C);
    case NamedFormulaId::Thm4Z5: {
      const BigRational c5 = C * C * C * C * C;
      const BigRational inner = h2(n - 1) - make_rational(1, 2) * (h2(2 * n) - h2(n - 1));
      return -alt * (31 * N * N - 20 * N + 4) / (n5 * N * N * c5) -
             alt * (205 * N * N - 160 * N + 32) / (n5 * c5) * inner;
    }
  }
  return 0;
}

}  // namespace

BigRational named_term(NamedFormulaId id, long n) {
  if (n < 1) {
    throw DomainError("formula " + std::string(to_string(id)) + ": term index must be >= 1");
  }
  const auto un = static_cast<std::uint64_t>(n);
  auto h2 = [](long j) {
    BigRational sum = 0;
    for (long i = 1; i <= j; ++i) {
      sum += make_rational(1, i * i);
    }
    return sum;
  };
  return named_body(id, n, binomial(2 * un, un), binomial(3 * un, un), h2);
}

BigRational named_ratio(NamedFormulaId id) {
  switch (id) {
    case NamedFormulaId::MarkovZ2:
    case NamedFormulaId::MarkovZ3:
    case NamedFormulaId::MarkovZ4:
      return make_rational(1, 4);
    case NamedFormulaId::AmdeberhanZ3:
    case NamedFormulaId::Thm1Z5:
      return make_rational(1, 27);
    case NamedFormulaId::Eq065Z2:
    case NamedFormulaId::Thm2Z4:
      return make_rational(1, 64);
    case NamedFormulaId::AzZ3:
    case NamedFormulaId::Thm4Z5:
      return make_rational(1, 1024);
  }
  return 0;
}

NamedTermStream::NamedTermStream(NamedFormulaId id) : id_(id) { prefix_.emplace_back(0); }

const BigRational& NamedTermStream::inverse_square_prefix(long j) {
  while (static_cast<long>(prefix_.size()) <= j) {
    const long i = static_cast<long>(prefix_.size());
    prefix_.push_back(prefix_.back() + make_rational(1, i * i));
  }
  return prefix_[static_cast<std::size_t>(j)];
}

BigRational NamedTermStream::next() {
  ++n_;
  if (n_ > 1) {
    const BigInt p(n_ - 1);
    central_ = central_ * (2 * p + 1) * (2 * p + 2) / ((p + 1) * (p + 1));
    trinomial_ = trinomial_ * (3 * p + 1) * (3 * p + 2) * (3 * p + 3) / ((p + 1) * (2 * p + 1) * (2 * p + 2));
  } else {
    central_ = 2;
    trinomial_ = 3;
  }
  return named_body(id_, n_, central_, trinomial_, [this](long j) -> const BigRational& {
    return inverse_square_prefix(j);
  });
}

}  // namespace zeta_forge
