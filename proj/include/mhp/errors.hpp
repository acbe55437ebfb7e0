#pragma once

#include <stdexcept>
#include <string>

namespace mhp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invariant-violating input (bad probabilities, unsorted levels,
// mismatched dimensions, ungrounded costs, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Prize outside a utility function's domain, or contract on a foreign
// output space.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Utility value outside the range of a (bounded) utility function.
class RangeError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

// An operation's precondition on the model does not hold (e.g. identification
// of c from a preference with bounded utility).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class IdentificationError : public Error {
 public:
  IdentificationError(const std::string& what, double prize_low, double prize_high)
      : Error(what), prize_low_(prize_low), prize_high_(prize_high) {}

  // Witness: prize_high > prize_low but the oracle does not strictly prefer it.
  double prize_low() const { return prize_low_; }
  double prize_high() const { return prize_high_; }

 private:
  double prize_low_;
  double prize_high_;
};

}  // namespace mhp
