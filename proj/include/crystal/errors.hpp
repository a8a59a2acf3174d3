#pragma once

#include <stdexcept>
#include <string>

namespace crystal {

/// Malformed input: shape mismatches, incompatible kinds, unparsable literals.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of an operation does not hold
/// (for example |G| not invertible, ring not a domain, datum not validated).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace crystal
