#pragma once

#include <stdexcept>
#include <string>

namespace hyperkunneth {

/// Malformed input text (exit code 1 at the CLI).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments to an API call: dimension mismatch, unknown option.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a domain invariant (exit code 2).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical identity that must hold did not (exit code 4).
/// Raised for things like a boundary leaving a sub-chain-complex or the
/// two Inf-of-tensor computations disagreeing.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperkunneth
