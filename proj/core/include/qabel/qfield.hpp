#pragma once

// Exact arithmetic in Q(q), the field of rational functions in one
// indeterminate q with rational coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace qabel {

/// Dense polynomial in q over Q. Index i of coeffs() holds the coefficient
/// of q^i; the highest stored coefficient is nonzero, so the zero polynomial
/// has no coefficients at all.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);

  static QPoly constant(const mpq_class& c);
  static QPoly monomial(const mpq_class& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// Number of nonzero coefficients.
  std::size_t term_count() const;
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Exponent of the lowest nonzero term; 0 for the zero polynomial.
  std::size_t valuation() const;

  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  mpq_class coeff(std::size_t i) const;
  const mpq_class& leading() const { return coeffs_.back(); }
  bool has_integer_coeffs() const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const mpq_class& c);

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  friend QPoly operator*(QPoly lhs, const mpq_class& c) { return lhs *= c; }
  friend QPoly operator-(QPoly p);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Multiplies by q^k.
  QPoly shifted_up(std::size_t k) const;
  /// Divides by q^k; requires valuation() >= k.
  QPoly shifted_down(std::size_t k) const;

  mpq_class eval(const mpq_class& q0) const;

  /// Descending powers of q, e.g. "q^2 + q + 1" or "1/2*q - 3".
  std::string to_string() const;

 private:
  void trim();

  std::vector<mpq_class> coeffs_;
};

struct QPolyDivision {
  QPoly quotient;
  QPoly remainder;
};

QPolyDivision divmod(const QPoly& num, const QPoly& den);

/// Quotient of a division known to be exact.
QPoly exact_quotient(const QPoly& num, const QPoly& den);

/// Greatest common divisor, normalized to a primitive integer polynomial with
/// positive leading coefficient. gcd(0, 0) is 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// An element num/den of Q(q) held in canonical form: the fraction is in
/// lowest terms, den is a primitive integer polynomial with positive leading
/// coefficient, and num carries any rational scalar. Zero is 0/1.
class QRat {
 public:
  QRat();
  QRat(int c);        // NOLINT(google-explicit-constructor)
  QRat(long c);       // NOLINT(google-explicit-constructor)
  QRat(long long c);  // NOLINT(google-explicit-constructor)
  QRat(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  explicit QRat(QPoly num);
  /// Throws DivisionByZero when den is zero.
  QRat(QPoly num, QPoly den);

  static QRat q();
  /// q^k for any integer k; negative powers become 1/q^|k|.
  static QRat q_pow(long k);

  const QPoly& num() const noexcept { return num_; }
  const QPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_one(); }
  /// True when the value does not depend on q.
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  /// The rational value of a constant element.
  mpq_class constant_value() const;
  /// Sign of the leading coefficient of the numerator (0 for zero).
  int leading_sign() const;

  QRat& operator+=(const QRat& rhs);
  QRat& operator-=(const QRat& rhs);
  QRat& operator*=(const QRat& rhs);
  /// Throws DivisionByZero.
  QRat& operator/=(const QRat& rhs);

  friend QRat operator+(QRat lhs, const QRat& rhs) { return lhs += rhs; }
  friend QRat operator-(QRat lhs, const QRat& rhs) { return lhs -= rhs; }
  friend QRat operator*(QRat lhs, const QRat& rhs) { return lhs *= rhs; }
  friend QRat operator/(QRat lhs, const QRat& rhs) { return lhs /= rhs; }
  friend QRat operator-(QRat r);
  friend bool operator==(const QRat&, const QRat&) = default;

  /// Exact substitution q := q0. Throws PoleAtPoint when the reduced
  /// denominator vanishes at q0.
  mpq_class eval(const mpq_class& q0) const;

  /// Canonical text: "(q^2 + q + 1)/(q + 1)", denominator 1 omitted.
  std::string to_string() const;

 private:
  struct Raw {};
  QRat(QPoly num, QPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}

  static QRat from_reduced(QPoly num, QPoly den);

  QPoly num_;
  QPoly den_;
};

/// Integer power; negative exponents invert (0^-k throws DivisionByZero).
QRat pow(const QRat& base, long exponent);

/// Parses an integer or "p/r" rational literal; throws std::invalid_argument.
mpq_class parse_rational(const std::string& text);

}  // namespace qabel
