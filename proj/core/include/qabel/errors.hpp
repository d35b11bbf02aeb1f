#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qabel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A rational function was evaluated at a root of its reduced denominator.
class PoleAtPoint : public Error {
 public:
  explicit PoleAtPoint(const mpq_class& point)
      : Error("pole at q = " + point.get_str()), point_(point) {}

  const mpq_class& point() const noexcept { return point_; }

 private:
  mpq_class point_;
};

class InvalidIndex : public Error {
 public:
  using Error::Error;
};

/// Binary series operation on operands truncated at different orders.
class OrderMismatch : public Error {
 public:
  OrderMismatch(int lhs, int rhs)
      : Error("series order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class NonUnitConstantTerm : public Error {
 public:
  NonUnitConstantTerm() : Error("series division requires a nonzero, symbol-free constant term") {}
};

class OrderTooSmall : public Error {
 public:
  OrderTooSmall(int have, int need)
      : Error("series order " + std::to_string(have) + " is smaller than the requested " +
              std::to_string(need)) {}
};

class UnknownIdentity : public Error {
 public:
  explicit UnknownIdentity(const std::string& id) : Error("unknown identity '" + id + "'") {}
};

class MissingParam : public Error {
 public:
  MissingParam(const std::string& id, const std::string& name)
      : Error("identity '" + id + "' requires parameter '" + name + "'") {}
};

class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace qabel
