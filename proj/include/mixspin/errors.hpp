#pragma once

#include <stdexcept>
#include <string>

namespace mixspin {

// Why an input lies outside the physical domain of the model.
enum class DomainReason { Ok, Singular, NonFinite, NonPositiveTemperature };

const char* to_string(DomainReason reason);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed request: bad enum value, invalid sweep spec, unknown preset id.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  DomainError(DomainReason reason, const std::string& what)
      : Error(what), reason_(reason) {}
  DomainReason reason() const noexcept { return reason_; }

 private:
  DomainReason reason_;
};

// Iterative numerics failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

// An input violated an operation's contract (e.g. a state whose trace is not 1).
class ContractError : public Error {
 public:
  using Error::Error;
};

// A printed, unstabilized formula produced a non-finite intermediate.
class EvaluationOverflow : public Error {
 public:
  using Error::Error;
};

// No epsilon crossing inside the scanned bracket.
class NoThreshold : public Error {
 public:
  using Error::Error;
};

}  // namespace mixspin
