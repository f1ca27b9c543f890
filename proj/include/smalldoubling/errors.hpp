#pragma once

#include <stdexcept>
#include <string>

namespace smalldoubling {

/// Base of every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or table would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A weight is not representable in the supplied GAP.
class NotCovered : public Error {
 public:
  using Error::Error;
};

/// The cover search could not find a GAP within its limits.
class NoCoverFound : public Error {
 public:
  using Error::Error;
};

/// A coordinate exceeds its (enlarged) dimension bound.
class OutOfBounds : public Error {
 public:
  OutOfBounds(std::size_t dim, const std::string& what) : Error(what), dimension(dim) {}
  std::size_t dimension;
};

/// An encoded value lies outside [0, prod(lambda*L_i+1)).
class OutOfRange : public Error {
 public:
  using Error::Error;
};

class ModeMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyPolynomial : public Error {
 public:
  using Error::Error;
};

/// No feasible solution exists (no tour, no clique, ...).
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

/// Steiner terminals lie in different connected components.
class Disconnected : public InfeasibleInstance {
 public:
  using InfeasibleInstance::InfeasibleInstance;
};

class KNotDivisibleBy3 : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds a brute-force oracle's size limit.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// A dense bounded-value routine would need more than its budget.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// An intermediate exponent escaped the lambda-enlarged encoding range.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  std::size_t line;
};

}  // namespace smalldoubling
