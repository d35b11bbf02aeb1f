#include "expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "qabel/abel.hpp"
#include "qabel/qcomb.hpp"

namespace qabel::cli {

namespace {

std::string describe(std::size_t offset, const std::set<std::string>& expected) {
  std::ostringstream os;
  os << "syntax error at offset " << offset << ": expected ";
  if (expected.size() > 1) os << "one of ";
  bool first = true;
  for (const auto& e : expected) {
    if (!first) os << ", ";
    first = false;
    os << e;
  }
  return os.str();
}

struct Arity {
  std::size_t min;
  std::size_t max;
};

const std::map<std::string, Arity, std::less<>>& functions() {
  static const std::map<std::string, Arity, std::less<>> table{
      {"qnum", {1, 1}}, {"qfac", {1, 1}}, {"qbinom", {2, 2}}, {"qpoch", {2, 2}},
      {"A", {1, 4}},    {"G", {1, 4}},    {"B", {1, 4}},      {"Bg", {1, 4}},
      {"w", {1, 4}},    {"S", {1, 4}},    {"abelc", {1, 4}},
  };
  return table;
}

bool is_symbol_name(std::string_view name) {
  return name.size() == 1 && std::string_view("xyabtq").find(name[0]) != std::string_view::npos;
}

const std::set<std::string>& operand_tokens() {
  static const std::set<std::string> tokens{"integer", "symbol", "function call", "'('", "'-'"};
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail({"operator", "end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::set<std::string> expected) const {
    throw SyntaxError(pos_, std::move(expected));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr boxed(Expr e) { return std::make_unique<Expr>(std::move(e)); }

  Expr binary(char op, Expr lhs, Expr rhs, std::size_t offset) {
    return Expr{BinOp{op, boxed(std::move(lhs)), boxed(std::move(rhs))}, offset};
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary('+', std::move(lhs), term(), at);
      } else if (accept('-')) {
        lhs = binary('-', std::move(lhs), term(), at);
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = binary('*', std::move(lhs), unary(), at);
      } else if (accept('/')) {
        lhs = binary('/', std::move(lhs), unary(), at);
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) return Expr{Neg{boxed(unary())}, at};
    return factor();
  }

  Expr factor() {
    Expr b = base();
    skip_space();
    const std::size_t at = pos_;
    if (accept('^')) {
      skip_space();
      const std::size_t lit = pos_;
      if (pos_ >= text_.size() || std::isdigit(static_cast<unsigned char>(text_[pos_])) == 0) {
        fail({"nonnegative integer exponent"});
      }
      return binary('^', std::move(b), Expr{IntLit{digits()}, lit}, at);
    }
    return b;
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Expr base() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail(operand_tokens());
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) return Expr{IntLit{digits()}, at};
    if (accept('(')) {
      Expr inner = expr();
      if (!accept(')')) fail({"')'"});
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(at, pos_ - at));
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '(') return call(name, at);
      if (!is_symbol_name(name)) {
        pos_ = at;
        fail({"symbol x, y, a, b, t or q", "function call"});
      }
      return Expr{SymRef{name[0]}, at};
    }
    fail(operand_tokens());
  }

  Expr call(const std::string& name, std::size_t at) {
    const auto fn = functions().find(name);
    if (fn == functions().end()) throw UnknownFunction(name);
    accept('(');
    Call node{name, {}};
    node.args.push_back(boxed(expr()));
    while (accept(',')) node.args.push_back(boxed(expr()));
    if (!accept(')')) fail({"','", "')'"});
    const auto [lo, hi] = fn->second;
    const std::size_t n = node.args.size();
    if (n < lo || n > hi || (hi == 4 && n != 1 && n != 4)) {
      const std::string want = lo == hi ? std::to_string(lo) : "1 or 4";
      throw ArityError(name + " takes " + want + " argument(s), got " + std::to_string(n));
    }
    return Expr{std::move(node), at};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

long integer_arg(const MPoly& value, const std::string& fn) {
  if (value.is_constant()) {
    const QRat c = value.constant_term();
    if (c.is_constant()) {
      const mpq_class v = c.constant_value();
      if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
    }
  }
  throw InvalidArgument(fn + ": expected an integer argument, got " + value.to_string());
}

int index_arg(const MPoly& value, const std::string& fn) {
  const long v = integer_arg(value, fn);
  constexpr long kMaxIndex = 4096;
  if (v < 0 || v > kMaxIndex) {
    throw InvalidArgument(fn + ": index " + std::to_string(v) + " outside [0, " +
                          std::to_string(kMaxIndex) + "]");
  }
  return static_cast<int>(v);
}

MPoly eval_call(const Call& call) {
  std::vector<MPoly> args;
  for (const auto& a : call.args) args.push_back(eval_expr(*a));
  const std::string& fn = call.name;
  if (fn == "qnum") return qint(index_arg(args[0], fn));
  if (fn == "qfac") return qfac(index_arg(args[0], fn));
  if (fn == "qbinom") {
    const int n = index_arg(args[0], fn);
    return qbinom(n, static_cast<int>(std::clamp<long>(integer_arg(args[1], fn), -1, n + 1)));
  }
  if (fn == "qpoch") return qpoch(args[0], index_arg(args[1], fn));
  const auto family = family_from_name(fn);
  if (!family) throw UnknownFunction(fn);
  MPoly p = abel_poly(*family, index_arg(args[0], fn));
  if (args.size() == 4) {
    p = subst(p, {{Symbol::x, args[1]}, {Symbol::a, args[2]}, {Symbol::b, args[3]}});
  }
  return p;
}

struct Evaluator {
  MPoly operator()(const IntLit& lit) const { return QRat(mpq_class(lit.value)); }

  MPoly operator()(const SymRef& s) const {
    if (s.name == 'q') return QRat::q();
    return MPoly::var(*symbol_from_name(std::string_view(&s.name, 1)));
  }

  MPoly operator()(const Neg& n) const { return -eval_expr(*n.operand); }

  MPoly operator()(const Call& c) const { return eval_call(c); }

  MPoly operator()(const BinOp& op) const {
    if (op.op == '^') {
      const mpz_class& e = std::get<IntLit>(op.rhs->node).value;
      constexpr unsigned long kMaxExponent = 4096;
      if (!e.fits_ulong_p() || e.get_ui() > kMaxExponent) {
        throw InvalidArgument("exponent " + e.get_str() + " exceeds " +
                              std::to_string(kMaxExponent));
      }
      return pow(eval_expr(*op.lhs), static_cast<unsigned>(e.get_ui()));
    }
    const MPoly lhs = eval_expr(*op.lhs);
    const MPoly rhs = eval_expr(*op.rhs);
    switch (op.op) {
      case '+':
        return lhs + rhs;
      case '-':
        return lhs - rhs;
      case '*':
        return lhs * rhs;
      default:
        if (!rhs.is_constant()) throw NonScalarDenominator();
        if (rhs.is_zero()) throw DivisionByZero();
        return lhs * (QRat(1) / rhs.constant_term());
    }
  }
};

struct Printer {
  std::ostringstream& os;

  void operator()(const IntLit& lit) const { os << lit.value.get_str(); }
  void operator()(const SymRef& s) const { os << s.name; }
  void operator()(const Neg& n) const {
    os << "(- ";
    std::visit(*this, n.operand->node);
    os << ')';
  }
  void operator()(const BinOp& op) const {
    os << '(' << op.op << ' ';
    std::visit(*this, op.lhs->node);
    os << ' ';
    std::visit(*this, op.rhs->node);
    os << ')';
  }
  void operator()(const Call& c) const {
    os << '(' << c.name;
    for (const auto& a : c.args) {
      os << ' ';
      std::visit(*this, a->node);
    }
    os << ')';
  }
};

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::set<std::string> expected)
    : Error(describe(offset, expected)), offset_(offset), expected_(std::move(expected)) {}

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_sexpr(const Expr& e) {
  std::ostringstream os;
  std::visit(Printer{os}, e.node);
  return os.str();
}

MPoly eval_expr(const Expr& e) { return std::visit(Evaluator{}, e.node); }

}  // namespace qabel::cli
