#pragma once

#include <stdexcept>
#include <string>

namespace mapasym {

/// An argument lies outside the domain of a formula (r <= 0, density outside
/// its interval, t outside (0,1), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The bracket handed to a root finder does not straddle a sign change.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative method ran out of its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request exceeds the resource guard (oracle census size).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested case is not covered by the implemented asymptotic formulas.
class NotCoveredError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace mapasym
