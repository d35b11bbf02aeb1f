#include "qabel/series.hpp"

#include <sstream>
#include <stdexcept>

#include "qabel/errors.hpp"
#include "qabel/qcomb.hpp"

namespace qabel {

namespace {

void require_same_order(const PowerSeries& lhs, const PowerSeries& rhs) {
  if (lhs.order() != rhs.order()) throw OrderMismatch(lhs.order(), rhs.order());
}

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

// Shared skeleton of abel_sum and classical_abel_sum. The z^m coefficient is
// accumulated with integer-like weights and divided by the m-th factorial
// once, keeping the inner sums polynomial.
template <typename Weight, typename Factorial>
PowerSeries assemble_abel_sum(const IndexedPoly& coeff, const IndexedPoly& shift, int order,
                              Weight weight, Factorial fact) {
  require_order(order);
  std::vector<MPoly> c(order + 1);
  std::vector<std::vector<MPoly>> powers(order + 1);
  for (int k = 0; k <= order; ++k) {
    c[k] = coeff(k);
    if (c[k].is_zero()) continue;
    const MPoly s = shift(k);
    powers[k].reserve(order - k + 1);
    powers[k].emplace_back(1);
    for (int j = 1; j <= order - k; ++j) powers[k].push_back(powers[k].back() * s);
  }
  std::vector<MPoly> out(order + 1);
  for (int m = 0; m <= order; ++m) {
    MPoly acc;
    for (int k = 0; k <= m; ++k) {
      if (c[k].is_zero()) continue;
      acc += c[k] * powers[k][m - k] * weight(m, k);
    }
    out[m] = acc * (QRat(1) / fact(m));
  }
  return PowerSeries(order, std::move(out));
}

}  // namespace

PowerSeries::PowerSeries(int order) : order_(order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries::PowerSeries(int order, std::vector<MPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  require_order(order);
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("series of order " + std::to_string(order) + " needs " +
                                std::to_string(order + 1) + " coefficients");
  }
}

PowerSeries PowerSeries::constant(const MPoly& c, int order) {
  PowerSeries f(order);
  f.coeffs_[0] = c;
  return f;
}

PowerSeries PowerSeries::z(int order) {
  PowerSeries f(order);
  if (order >= 1) f.coeffs_[1] = 1;
  return f;
}

bool PowerSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& rhs) { return *this = *this * rhs; }

PowerSeries& PowerSeries::operator*=(const MPoly& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs) {
  require_same_order(lhs, rhs);
  PowerSeries out(lhs.order_);
  for (int i = 0; i <= lhs.order_; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= lhs.order_; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

PowerSeries& PowerSeries::operator/=(const PowerSeries& rhs) {
  require_same_order(*this, rhs);
  const MPoly& g0 = rhs.coeffs_[0];
  if (g0.is_zero() || !g0.is_constant()) throw NonUnitConstantTerm();
  const QRat inv = QRat(1) / g0.constant_term();
  std::vector<MPoly> h(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    MPoly acc = coeffs_[k];
    for (std::size_t j = 1; j <= k; ++j) {
      if (!rhs.coeffs_[j].is_zero()) acc -= rhs.coeffs_[j] * h[k - j];
    }
    h[k] = acc * inv;
  }
  coeffs_ = std::move(h);
  return *this;
}

PowerSeries operator-(PowerSeries f) {
  for (auto& c : f.coeffs_) c = -c;
  return f;
}

bool operator==(const PowerSeries& lhs, const PowerSeries& rhs) {
  require_same_order(lhs, rhs);
  return lhs.coeffs_ == rhs.coeffs_;
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  for (int k = 0; k <= order_; ++k) {
    if (coeffs_[k].is_zero()) continue;
    os << '(' << coeffs_[k].to_string() << ')';
    if (k == 1) os << "*z";
    if (k > 1) os << "*z^" << k;
    os << " + ";
  }
  os << "O(z^" << order_ + 1 << ')';
  return os.str();
}

PowerSeries exp_series(ExpKind kind, const MPoly& c, int order) {
  require_order(order);
  std::vector<MPoly> out(order + 1);
  MPoly power = 1;
  for (int k = 0; k <= order; ++k) {
    QRat scale = QRat(1) / qfac(k);
    if (kind == ExpKind::big_E) scale *= QRat::q_pow(binom2(k));
    out[k] = power * scale;
    if (k < order) power *= c;
  }
  return PowerSeries(order, std::move(out));
}

PowerSeries classical_exp_series(const MPoly& c, int order) {
  require_order(order);
  std::vector<MPoly> out(order + 1);
  MPoly power = 1;
  for (int k = 0; k <= order; ++k) {
    out[k] = power * QRat(mpq_class(1, factorial(k)));
    if (k < order) power *= c;
  }
  return PowerSeries(order, std::move(out));
}

PowerSeries abel_sum(const IndexedPoly& coeff, const IndexedPoly& shift, int order) {
  return assemble_abel_sum(
      coeff, shift, order,
      [](int m, int k) { return qbinom(m, k) * QRat::q_pow(binom2(m - k)); },
      [](int m) { return qfac(m); });
}

PowerSeries classical_abel_sum(const IndexedPoly& coeff, const IndexedPoly& shift, int order) {
  return assemble_abel_sum(
      coeff, shift, order, [](int m, int k) { return QRat(mpq_class(binomial(m, k))); },
      [](int m) { return QRat(mpq_class(factorial(m))); });
}

}  // namespace qabel
