#include <stdexcept>
#include <string>

#include "qabel/abel.hpp"
#include "qabel/errors.hpp"
#include "qabel/qcomb.hpp"

namespace qabel {

namespace {

// [z^m] of e(c z) * g, where g(k) yields the k-th coefficient of g.
template <typename Coeff>
MPoly exp_product_coeff(const MPoly& c, int m, Coeff g) {
  MPoly out;
  MPoly power = 1;
  for (int i = 0; i <= m; ++i) {
    const MPoly gk = g(m - i);
    if (!gk.is_zero()) out += power * gk * (QRat(1) / qfac(i));
    if (i < m) power *= c;
  }
  return out;
}

MPoly shift_for(LagrangeMode mode, int n) {
  const MPoly a = MPoly::var(Symbol::a);
  const MPoly b = MPoly::var(Symbol::b);
  if (mode == LagrangeMode::plain) return qint(n) * a;
  return qint(n) * a + QRat::q_pow(n) * b;
}

}  // namespace

std::vector<MPoly> lagrange_coeffs(const PowerSeries& f, LagrangeMode mode, int count) {
  if (count < 0) throw std::invalid_argument("lagrange_coeffs: negative count");
  if (f.order() < count) throw OrderTooSmall(f.order(), count);

  const MPoly b = MPoly::var(Symbol::b);
  // L D^m g = [m]! [z^m] g, and (D f)_k = [k+1] f_{k+1}.
  auto fk = [&f](int k) { return f[static_cast<std::size_t>(k)]; };
  auto dfk = [&f](int k) { return f[static_cast<std::size_t>(k) + 1] * qint(k + 1); };

  std::vector<MPoly> c;
  c.reserve(static_cast<std::size_t>(count) + 1);
  c.push_back(f[0]);
  for (int n = 1; n <= count; ++n) {
    const MPoly s = shift_for(mode, n);
    switch (mode) {
      case LagrangeMode::plain:
        c.push_back(exp_product_coeff(-s, n - 1, dfk) * qfac(n - 1));
        break;
      case LagrangeMode::general_b: {
        const MPoly first = exp_product_coeff(-s, n - 1, dfk);
        const MPoly second = exp_product_coeff(-s * QRat::q_pow(-1), n - 1, fk);
        c.push_back((first - second * b * QRat::q_pow(n - 1)) * qfac(n - 1));
        break;
      }
      case LagrangeMode::buermann:
        c.push_back(exp_product_coeff(-s * QRat::q_pow(-1), n, fk) * qfac(n));
        break;
    }
  }
  return c;
}

PowerSeries lagrange_series(const std::vector<MPoly>& coeffs, LagrangeMode mode, int order) {
  if (order < 0 || coeffs.size() < static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("lagrange_series: need a coefficient for every order");
  }
  return abel_sum([&coeffs](int k) { return coeffs[static_cast<std::size_t>(k)]; },
                  [mode](int k) { return shift_for(mode, k); }, order);
}

PowerSeries lagrange_target(const PowerSeries& f, LagrangeMode mode) {
  if (mode != LagrangeMode::buermann) return f;
  PowerSeries divisor = PowerSeries::constant(1, f.order());
  divisor += PowerSeries::z(f.order()) * (MPoly::var(Symbol::a) * QRat::q_pow(-1));
  return f / divisor;
}

const std::vector<std::string_view>& builtin_series_names() {
  static const std::vector<std::string_view> names{"e_xz", "E_xz", "E_neg_yz", "z"};
  return names;
}

PowerSeries builtin_series(std::string_view name, int order) {
  const MPoly x = MPoly::var(Symbol::x);
  if (name == "e_xz") return exp_series(ExpKind::small_e, x, order);
  if (name == "E_xz") return exp_series(ExpKind::big_E, x, order);
  if (name == "E_neg_yz") return exp_series(ExpKind::big_E, -MPoly::var(Symbol::y), order);
  if (name == "z") return PowerSeries::z(order);
  throw std::invalid_argument("unknown series '" + std::string(name) +
                              "' (expected e_xz, E_xz, E_neg_yz or z)");
}

}  // namespace qabel
