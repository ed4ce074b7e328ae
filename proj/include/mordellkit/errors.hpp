#pragma once

#include <stdexcept>
#include <string>

namespace mordellkit {

// Thrown when a refinement/summation limit is reached before the requested
// tolerance is met.
class NonConvergence : public std::runtime_error {
  public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the documented domain of an operation or kernel.
class DomainError : public std::invalid_argument {
  public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Declared decay data is unusable (rate <= 0 or not finite).
class InvalidDecay : public DomainError {
  public:
    explicit InvalidDecay(const std::string& what) : DomainError(what) {}
};

// Parameters violate an identity's side constraint (e.g. alpha*beta = 2*pi).
class ConstraintViolation : public std::invalid_argument {
  public:
    explicit ConstraintViolation(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace mordellkit
