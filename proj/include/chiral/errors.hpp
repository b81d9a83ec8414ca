#pragma once

#include <stdexcept>
#include <string>

namespace chiral {

// Base class for all library errors.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fewer observations than the operation supports (chiral index needs n >= 2).
class DegenerateSample : public Error {
  using Error::Error;
};

// NaN or infinity among the observations.
class NonFiniteInput : public Error {
  using Error::Error;
};

// All observations equal: the index requires finite and non null inertia.
class ZeroInertia : public Error {
  using Error::Error;
};

// Permutation enumeration refused beyond the configured size cap.
class TooLargeForBruteForce : public Error {
  using Error::Error;
};

// Distribution parameters violate the law's constraints.
class InvalidDistribution : public Error {
  using Error::Error;
};

// Simulation configuration violates a documented bound.
class InvalidConfig : public Error {
  using Error::Error;
};

// Level is not one of the four tabulated probabilities.
class UnsupportedLevel : public Error {
  using Error::Error;
};

// Sample size inside [3, 10000] but not a grid point (exact policy only).
class SampleSizeNotTabulated : public Error {
  using Error::Error;
};

// Sample size outside the tabulated range [3, 10000].
class SampleSizeOutOfRange : public Error {
  using Error::Error;
};

// Malformed numeric input; carries the 1-based position of the bad token.
class InputParseError : public Error {
 public:
  InputParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace chiral
