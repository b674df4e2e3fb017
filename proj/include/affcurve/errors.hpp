#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affcurve {

/// Base class for all recoverable toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation requires a uniform parameter grid (resample first).
class NonUniformGrid : public Error {
 public:
  NonUniformGrid() : Error("operation requires a uniform parameter grid; resample first") {}
};

/// Fewer samples than the differentiation stencils need.
class GridTooShort : public Error {
 public:
  explicit GridTooShort(std::size_t got, std::size_t need)
      : Error("grid too short: " + std::to_string(got) + " samples, need at least " +
              std::to_string(need)) {}
};

/// det(c',c'',c''') fell to or below the threshold at some sample: the curve
/// is locally planar or violates the positive-orientation convention.
class DegenerateCurve : public Error {
 public:
  DegenerateCurve(std::size_t index, double value)
      : Error("nondegeneracy violated: det(c',c'',c''') = " + std::to_string(value) +
              " at sample " + std::to_string(index)),
        index_(index),
        value_(value) {}
  std::size_t index() const { return index_; }
  double value() const { return value_; }

 private:
  std::size_t index_;
  double value_;
};

class BadInitialFrame : public Error {
 public:
  explicit BadInitialFrame(double det)
      : Error("initial frame must be unimodular; det = " + std::to_string(det)) {}
};

class NonPositiveMass : public Error {
 public:
  NonPositiveMass() : Error("mass must be positive") {}
};

class EmptyOverlap : public Error {
 public:
  EmptyOverlap() : Error("signatures have no common arc-length range") {}
};

class RandomRejectionExhausted : public Error {
 public:
  RandomRejectionExhausted() : Error("random map rejection loop exceeded 1000 draws") {}
};

/// Matrix exponential overflowed the representable range.
class Overflow : public Error {
 public:
  Overflow() : Error("matrix exponential overflow") {}
};

/// Malformed CSV/JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace affcurve
