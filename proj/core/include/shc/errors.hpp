#pragma once

#include <stdexcept>
#include <string>

namespace shc {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure could not deliver its advertised accuracy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Successive Laplace-inversion orders disagree beyond tolerance.
class IllConditionedError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A truncated series cannot certify its tail within the requested tolerance.
class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A first-passage query fell past the end of a sampled path.
class HorizonError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Malformed experiment configuration or input file.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace shc
