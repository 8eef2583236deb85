#pragma once

#include <stdexcept>
#include <string>

namespace conecalc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The caller handed us data that violates a documented contract
/// (malformed rationals, bad HN ladders, out-of-range k, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidPreset : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DegreeMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A caller-asserted hypothesis (e.g. "every bundle is semistable") is false.
class ContractViolation : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A class handed to the decomposition engine lies outside the
/// pseudoeffective cone. `what()` names the violated inequality.
class NotPseudoeffective : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Internal consistency check failed. Never expected; indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace conecalc
