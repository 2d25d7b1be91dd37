#pragma once

#include <stdexcept>
#include <string>

namespace zeta_forge {

/// Argument outside the domain of a term function (a pole, or an index outside
/// the region where a factorial is defined).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed input: unparseable literal, unknown identifier, bad precision.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A summation failed to reach a contracting regime within its term budget.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truncation residual grew instead of shrinking under truncation doubling.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zeta_forge
