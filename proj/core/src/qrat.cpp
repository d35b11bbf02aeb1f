#include <stdexcept>
#include <utility>

#include "qabel/errors.hpp"
#include "qabel/qfield.hpp"

namespace qabel {

namespace {

const QPoly& one_poly() {
  static const QPoly one = QPoly::constant(1);
  return one;
}

// Scalar s making s*den a primitive integer polynomial with positive
// leading coefficient.
mpq_class denominator_scale(const QPoly& den) {
  mpz_class lcm = 1;
  for (const auto& c : den.coeffs()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& c : den.coeffs()) {
    if (c == 0) continue;
    mpz_class v = lcm / c.get_den() * c.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  mpq_class s(lcm, g);
  s.canonicalize();
  if (den.leading() < 0) s = -s;
  return s;
}

}  // namespace

QRat::QRat() : den_(one_poly()) {}
QRat::QRat(int c) : QRat(mpq_class(c)) {}
QRat::QRat(long c) : QRat(mpq_class(c)) {}
QRat::QRat(long long c) : QRat(mpq_class(mpz_class(std::to_string(c)))) {}
QRat::QRat(const mpq_class& c) : num_(QPoly::constant(c)), den_(one_poly()) {}
QRat::QRat(QPoly num) : num_(std::move(num)), den_(one_poly()) {}

QRat::QRat(QPoly num, QPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den_ = one_poly();
    return;
  }
  if (den.is_constant()) {
    num *= mpq_class(1 / den.coeffs()[0]);
    num_ = std::move(num);
    den_ = one_poly();
    return;
  }
  QPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  *this = from_reduced(std::move(num), std::move(den));
}

QRat QRat::from_reduced(QPoly num, QPoly den) {
  if (num.is_zero()) return {};
  if (den.is_constant()) {
    num *= mpq_class(1 / den.coeffs()[0]);
    return QRat(std::move(num), one_poly(), Raw{});
  }
  mpq_class s = denominator_scale(den);
  if (s != 1) {
    num *= s;
    den *= s;
  }
  return QRat(std::move(num), std::move(den), Raw{});
}

QRat QRat::q() { return QRat(QPoly::monomial(1, 1)); }

QRat QRat::q_pow(long k) {
  if (k >= 0) return QRat(QPoly::monomial(1, static_cast<std::size_t>(k)));
  return QRat(one_poly(), QPoly::monomial(1, static_cast<std::size_t>(-k)), Raw{});
}

bool QRat::is_one() const { return num_.is_one() && den_.is_one(); }

mpq_class QRat::constant_value() const {
  if (!is_constant()) throw std::logic_error("QRat::constant_value on a q-dependent value");
  return num_.coeff(0);
}

int QRat::leading_sign() const {
  if (num_.is_zero()) return 0;
  return sgn(num_.leading());
}

QRat& QRat::operator+=(const QRat& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ += rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    QPoly t = num_ + rhs.num_;
    return *this = QRat(std::move(t), den_);
  }
  // Henrici: with g = gcd(d1, d2), only g can share factors with the new numerator.
  QPoly g = gcd(den_, rhs.den_);
  if (g.is_one()) {
    QPoly t = num_ * rhs.den_ + rhs.num_ * den_;
    QPoly d = den_ * rhs.den_;
    return *this = from_reduced(std::move(t), std::move(d));
  }
  QPoly d1 = exact_quotient(den_, g);
  QPoly d2 = exact_quotient(rhs.den_, g);
  QPoly t = num_ * d2 + rhs.num_ * d1;
  if (t.is_zero()) return *this = QRat();
  QPoly d = d1 * rhs.den_;
  QPoly h = gcd(t, g);
  if (!h.is_one()) {
    t = exact_quotient(t, h);
    d = exact_quotient(d, h);
  }
  return *this = from_reduced(std::move(t), std::move(d));
}

QRat& QRat::operator-=(const QRat& rhs) { return *this += -rhs; }

QRat& QRat::operator*=(const QRat& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = QRat();
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ *= rhs.num_;
    return *this;
  }
  QPoly n1 = num_;
  QPoly n2 = rhs.num_;
  QPoly d1 = den_;
  QPoly d2 = rhs.den_;
  if (!d2.is_one()) {
    QPoly g = gcd(n1, d2);
    if (!g.is_one()) {
      n1 = exact_quotient(n1, g);
      d2 = exact_quotient(d2, g);
    }
  }
  if (!d1.is_one()) {
    QPoly g = gcd(n2, d1);
    if (!g.is_one()) {
      n2 = exact_quotient(n2, g);
      d1 = exact_quotient(d1, g);
    }
  }
  return *this = from_reduced(n1 * n2, d1 * d2);
}

QRat& QRat::operator/=(const QRat& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  return *this *= from_reduced(rhs.den_, rhs.num_);
}

QRat operator-(QRat r) {
  r.num_ = -std::move(r.num_);
  return r;
}

QRat pow(const QRat& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DivisionByZero();
    return pow(QRat(1) / base, -exponent);
  }
  QRat result = 1;
  QRat sq = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1U) result *= sq;
    e >>= 1U;
    if (e != 0) sq *= sq;
  }
  return result;
}

mpq_class QRat::eval(const mpq_class& q0) const {
  mpq_class d = den_.eval(q0);
  if (d == 0) throw PoleAtPoint(q0);
  return num_.eval(q0) / d;
}

std::string QRat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

mpq_class parse_rational(const std::string& text) {
  mpq_class r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace qabel
