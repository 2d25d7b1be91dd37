#pragma once

#include <array>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeta_forge/exact_kernel.hpp"
#include "zeta_forge/polynomial.hpp"

namespace zeta_forge {

enum class PairId { Koecher, Leshchiner, Bbb, Thm1, Thm2, Thm3, Thm4 };

enum class IdentityId { Eq01Koecher, Eq02Leshchiner, Eq03Bbb, Eq05Thm1, Eq06Thm2, Thm3, Eq07Thm4 };

enum class NamedFormulaId { MarkovZ2, MarkovZ3, MarkovZ4, AmdeberhanZ3, Thm1Z5, Eq065Z2, Thm2Z4, AzZ3, Thm4Z5 };

/// Left-hand generating function shared by a group of identities.
enum class LhsFamily {
  Odd,     ///< Σ_{k≥1} 1/(k(k²−a²)) = Σ_j ζ(2j+3) a^{2j}
  Even,    ///< Σ_{k≥1} 1/(k²−a²) = Σ_j ζ(2j+2) a^{2j}
  AltEven  ///< Σ_{k≥1} (−1)^{k−1}/(k²−a²) = Σ_j (1 − 2^{−j−1}) ζ(2j+2) a^{2j}
};

inline constexpr std::array<PairId, 7> kAllPairs = {PairId::Koecher, PairId::Leshchiner, PairId::Bbb, PairId::Thm1,
                                                    PairId::Thm2,    PairId::Thm3,       PairId::Thm4};
inline constexpr std::array<IdentityId, 7> kAllIdentities = {
    IdentityId::Eq01Koecher, IdentityId::Eq02Leshchiner, IdentityId::Eq03Bbb, IdentityId::Eq05Thm1,
    IdentityId::Eq06Thm2,    IdentityId::Thm3,           IdentityId::Eq07Thm4};
inline constexpr std::array<NamedFormulaId, 9> kAllNamedFormulas = {
    NamedFormulaId::MarkovZ2, NamedFormulaId::MarkovZ3, NamedFormulaId::MarkovZ4,
    NamedFormulaId::AmdeberhanZ3, NamedFormulaId::Thm1Z5, NamedFormulaId::Eq065Z2,
    NamedFormulaId::Thm2Z4, NamedFormulaId::AzZ3, NamedFormulaId::Thm4Z5};

// Identifiers serialize to "koecher", "leshchiner", "bbb", "thm1".."thm4".
// Identities share the name of their pair.
std::string_view to_string(PairId id);
std::string_view to_string(IdentityId id);
std::string_view to_string(NamedFormulaId id);
std::string_view to_string(LhsFamily family);
PairId parse_pair_id(std::string_view text);
IdentityId parse_identity_id(std::string_view text);
NamedFormulaId parse_named_formula_id(std::string_view text);

PairId pair_for(IdentityId id);
IdentityId identity_for(PairId id);

// ---------------------------------------------------------------------------
// WZ pairs

struct WZPairDef {
  PairId id;
  /// Polynomial numerator of G(n,k); evaluated at (n, k, a²).
  CertificatePolynomial q;
  /// 1 when the identity follows from Σ F(0,k) = Σ G(n,0); 2 for the diagonal
  /// summation used by THM4.
  int proposition = 1;

  WZPairDef with_perturbed_coefficient(std::size_t monomial, const BigRational& delta) const;
};

const WZPairDef& pair_definition(PairId id);

/// Evaluates F and G of one pair at a fixed a.
///
/// Keeps tables of factorials and of ∏_{j≤m}(j²−a²), ∏_{j≤m}(j²−4a²) which grow
/// on demand; one instance must not be shared between threads.
class PairEvaluator {
 public:
  PairEvaluator(WZPairDef definition, BigRational a);

  BigRational F(long n, long k);
  BigRational G(long n, long k);

  const WZPairDef& definition() const { return def_; }
  const BigRational& a() const { return a_; }

 private:
  const BigInt& fact(long j);
  const BigRational& sym(long j);
  const BigRational& sym_double(long j);
  const BigRational& sym_denominator(long j, const char* function, long n, long k);
  BigRational nonzero(BigRational value, const char* factor, const char* function, long n, long k) const;
  void check_indices(const char* function, long n, long k) const;

  WZPairDef def_;
  BigRational a_;
  BigRational a2_;
  std::deque<BigInt> factorials_;
  std::deque<BigRational> sym_;
  std::deque<BigRational> sym_double_;
};

BigRational pair_F(PairId id, long n, long k, const BigRational& a);
BigRational pair_G(PairId id, long n, long k, const BigRational& a);

// ---------------------------------------------------------------------------
// Generating-function identities

struct IdentitySpec {
  IdentityId id;
  PairId pair;
  LhsFamily family;
  /// Limit of |t_{n+1}/t_n| at fixed a.
  BigRational ratio;
  long start_index = 1;
  std::function<BigRational(long, const BigRational&)> rhs_term;
};

const IdentitySpec& identity_spec(IdentityId id);
LhsFamily lhs_family(IdentityId id);

/// n-th term (n ≥ 1) of the right-hand series, product included. Throws
/// DomainError naming the vanishing denominator factor.
BigRational identity_term(IdentityId id, long n, const BigRational& a);
BigRational identity_ratio(IdentityId id);

/// n-th term (n ≥ 1) of a named zeta series, inner harmonic sums included.
BigRational named_term(NamedFormulaId id, long n);
BigRational named_ratio(NamedFormulaId id);

/// Incremental version of named_term: O(1) big-number operations per term
/// apart from the inner sums.
class NamedTermStream {
 public:
  explicit NamedTermStream(NamedFormulaId id);
  BigRational next();
  long index() const { return n_; }

 private:
  const BigRational& inverse_square_prefix(long j);

  NamedFormulaId id_;
  long n_ = 0;
  BigInt central_ = 1;
  BigInt trinomial_ = 1;
  std::deque<BigRational> prefix_;  // Σ_{i≤j} 1/i²; deque keeps references stable
};

}  // namespace zeta_forge
