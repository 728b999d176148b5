#pragma once

#include "tagset/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tagset {

// Base class for every domain error raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands declare different coordinate dimensions and cannot be compared.
class DimensionMismatch : public Error {
public:
  DimensionMismatch(std::size_t a, std::size_t b)
      : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// An operation that requires a nonempty operand received an empty one.
class EmptyOperand : public Error {
public:
  explicit EmptyOperand(const std::string& what_operand)
      : Error("empty operand: " + what_operand) {}
};

// Operands share a (value, series) point, so they are not two disjoint
// objects; the contact predicate is defined only for disjoint operands.
class OverlapError : public Error {
public:
  using Error::Error;
};

// A stated precondition does not hold (cut position, mode, phase layout...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A cut exposed the configuration that cannot occur on a connected
// continuum: positions strictly between the two sides belong to neither of
// them. Carries the uncovered gap (degenerate when neither side attains an
// extreme value at all).
class FourthTypeError : public Error {
public:
  FourthTypeError(Rational gap_lo, Rational gap_hi)
      : Error(describe(gap_lo, gap_hi)), gap_lo_(std::move(gap_lo)), gap_hi_(std::move(gap_hi)) {}

  const Rational& gap_lo() const { return gap_lo_; }
  const Rational& gap_hi() const { return gap_hi_; }

private:
  static std::string describe(const Rational& lo, const Rational& hi) {
    if (lo < hi)
      return "fourth-type cut configuration: positions in (" + format_rational(lo) + ", " +
             format_rational(hi) +
             ") belong to neither side; the underlying set is not connected there";
    return "fourth-type cut configuration: neither side owns an extreme point at " +
           format_rational(lo);
  }

  Rational gap_lo_;
  Rational gap_hi_;
};

// Document text that does not parse or does not validate. line/column are
// 1-based; 0 means "not attributable to a source position".
class ParseError : public Error {
public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : Error(std::move(message)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace tagset
