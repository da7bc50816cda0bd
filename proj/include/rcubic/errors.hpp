#pragma once

#include <stdexcept>
#include <string>

namespace rcubic {

/// A Sturm count was requested at an endpoint that is itself a root.
class EndpointRootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The map has an identically zero cubic part.
class NotCubicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on a map or quartic of the wrong class.
class WrongClassError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold by construction failed. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Refinement could not reach the requested residual within its step budget.
class ResidualBudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rcubic
