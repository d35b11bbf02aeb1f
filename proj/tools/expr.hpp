#pragma once

// Expression language of the command-line tool:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := base ('^' uint)?
//   base   := uint | symbol | call | '(' expr ')'
//   call   := name '(' expr (',' expr)* ')'
//
// Symbols are x, y, a, b, t and q. Unary minus binds looser than '^', so
// -x^2 is -(x^2).

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qabel/errors.hpp"
#include "qabel/mpoly.hpp"

namespace qabel::cli {

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::set<std::string> expected);

  std::size_t offset() const noexcept { return offset_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

class UnknownFunction : public Error {
 public:
  explicit UnknownFunction(const std::string& name) : Error("unknown function '" + name + "'") {}
};

class ArityError : public Error {
 public:
  using Error::Error;
};

/// A '/' whose denominator involves x, y, a, b or t.
class NonScalarDenominator : public Error {
 public:
  NonScalarDenominator() : Error("denominator must be a rational function of q alone") {}
};

/// A call argument that must be a nonnegative integer literal value.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct IntLit {
  mpz_class value;
};

/// One of x, y, a, b, t, q.
struct SymRef {
  char name;
};

struct BinOp {
  char op;  // + - * / ^
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Neg {
  ExprPtr operand;
};

struct Call {
  std::string name;
  std::vector<ExprPtr> args;
};

struct Expr {
  std::variant<IntLit, SymRef, BinOp, Neg, Call> node;
  std::size_t offset = 0;
};

/// Throws SyntaxError, UnknownFunction or ArityError.
Expr parse_expr(std::string_view text);

/// Fully parenthesized prefix form, e.g. "(+ (^ x 2) (* q a))".
std::string to_sexpr(const Expr& e);

/// Throws NonScalarDenominator, DivisionByZero or InvalidArgument.
MPoly eval_expr(const Expr& e);

}  // namespace qabel::cli
