#pragma once

// Truncated formal power series in z with polynomial coefficients.

#include <functional>
#include <string>
#include <vector>

#include "qabel/mpoly.hpp"

namespace qabel {

/// sum_{k<=order} coeffs[k] z^k + O(z^(order+1)). Binary operations require
/// both operands to share the same order; a mismatch throws OrderMismatch.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  /// Throws std::invalid_argument unless coeffs.size() == order + 1.
  PowerSeries(int order, std::vector<MPoly> coeffs);

  static PowerSeries constant(const MPoly& c, int order);
  /// The series variable z itself.
  static PowerSeries z(int order);

  int order() const noexcept { return order_; }
  const MPoly& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<MPoly>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(const PowerSeries& rhs);
  PowerSeries& operator*=(const MPoly& c);
  /// Requires a nonzero, symbol-free constant term in rhs (NonUnitConstantTerm).
  PowerSeries& operator/=(const PowerSeries& rhs);

  friend PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) { return lhs += rhs; }
  friend PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs) { return lhs -= rhs; }
  friend PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs);
  friend PowerSeries operator*(PowerSeries lhs, const MPoly& c) { return lhs *= c; }
  friend PowerSeries operator/(PowerSeries lhs, const PowerSeries& rhs) { return lhs /= rhs; }
  friend PowerSeries operator-(PowerSeries f);

  /// Coefficient-wise equality; throws OrderMismatch on differing orders.
  friend bool operator==(const PowerSeries& lhs, const PowerSeries& rhs);

  /// "(c0) + (c1)*z + (c2)*z^2 + O(z^3)"; zero coefficients are skipped.
  std::string to_string() const;

 private:
  int order_;
  std::vector<MPoly> coeffs_;
};

enum class ExpKind { small_e, big_E };

/// e(cz) = sum c^k z^k/[k]! or E(cz) = sum q^binom(k,2) c^k z^k/[k]!.
PowerSeries exp_series(ExpKind kind, const MPoly& c, int order);

/// Classical exponential exp(cz) = sum c^k z^k/k!.
PowerSeries classical_exp_series(const MPoly& c, int order);

using IndexedPoly = std::function<MPoly(int)>;

/// sum_{k<=order} (coeff(k)/[k]!) z^k E(shift(k) z), truncated at order.
PowerSeries abel_sum(const IndexedPoly& coeff, const IndexedPoly& shift, int order);

/// Classical counterpart sum_k (coeff(k)/k!) z^k exp(shift(k) z).
PowerSeries classical_abel_sum(const IndexedPoly& coeff, const IndexedPoly& shift, int order);

}  // namespace qabel
