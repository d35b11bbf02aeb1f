#pragma once

// Sparse polynomials in the closed symbol set {x, y, a, b, t} over Q(q).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qabel/qfield.hpp"

namespace qabel {

/// The only polynomial variables. t stands for q^n in difference-operator
/// computations; q itself lives inside the coefficients.
enum class Symbol : std::uint8_t { x, y, a, b, t };

inline constexpr std::size_t kSymbolCount = 5;
inline constexpr std::array<Symbol, kSymbolCount> kAllSymbols{Symbol::x, Symbol::y, Symbol::a,
                                                              Symbol::b, Symbol::t};

std::string_view symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(std::string_view name);

class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Symbol s, unsigned exponent = 1);

  unsigned exponent(Symbol s) const { return exps_[static_cast<std::size_t>(s)]; }
  Monomial with_exponent(Symbol s, unsigned exponent) const;
  unsigned total_degree() const;
  bool is_one() const { return total_degree() == 0; }

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Factors in alphabetical order, e.g. "a*b*x^2"; the unit monomial is "1".
  std::string to_string() const;

 private:
  std::array<std::uint16_t, kSymbolCount> exps_{};
};

/// Graded lexicographic order with x > y > a > b > t, largest first.
struct GradedLexGreater {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Polynomial in x, y, a, b, t with coefficients in Q(q). No stored
/// coefficient is zero; terms iterate in GradedLexGreater order.
class MPoly {
 public:
  using TermMap = std::map<Monomial, QRat, GradedLexGreater>;

  MPoly() = default;
  MPoly(const QRat& c);  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(QRat(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly var(Symbol s);
  static MPoly term(const QRat& c, const Monomial& m);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  QRat constant_term() const;
  QRat coeff(const Monomial& m) const;

  bool contains(Symbol s) const;
  unsigned degree_in(Symbol s) const;
  unsigned total_degree() const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const QRat& c);

  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  friend MPoly operator*(MPoly lhs, const QRat& c) { return lhs *= c; }
  friend MPoly operator*(const QRat& c, MPoly rhs) { return rhs *= c; }
  friend MPoly operator-(MPoly p);
  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// Terms in descending order, e.g. "q*x^2 - (q + 1)*a*x + b^2".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const QRat& c);

  TermMap terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);

/// Replaces every occurrence of s by value.
MPoly subst(const MPoly& p, Symbol s, const MPoly& value);

/// Simultaneous substitution: every symbol in the map is replaced by its
/// value in one pass, so values may mention the substituted symbols.
MPoly subst(const MPoly& p, const std::map<Symbol, MPoly>& values);

/// Sets q := 1 in every coefficient. Throws PoleAtPoint if a reduced
/// coefficient denominator vanishes at 1.
MPoly eval_q1(const MPoly& p);

/// Coefficients of p as a polynomial in s: result[d] is free of s and
/// sum_d result[d] * s^d == p.
std::vector<MPoly> coeffs_in(const MPoly& p, Symbol s);

/// Inverse of coeffs_in.
MPoly from_coeffs(const std::vector<MPoly>& coeffs, Symbol s);

/// Exact rational value at a point. Every symbol occurring in p must be
/// assigned; throws std::invalid_argument otherwise.
mpq_class eval_at(const MPoly& p, const mpq_class& q0,
                  const std::map<Symbol, mpq_class>& values);

}  // namespace qabel
