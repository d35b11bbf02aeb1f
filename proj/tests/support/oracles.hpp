#pragma once

// Test-side reference computations. Each one reaches its answer by a route
// that shares no code path with the library function it checks.

#include <vector>

#include "qabel/abel.hpp"
#include "qabel/mpoly.hpp"
#include "qabel/qcomb.hpp"
#include "qabel/series.hpp"

namespace qabel::test {

/// Divides by v, assuming every term has positive v-degree.
inline MPoly divide_by(const MPoly& p, Symbol v) {
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    out += MPoly::term(c, m.with_exponent(v, m.exponent(v) - 1));
  }
  return out;
}

/// (f(v) - f(qv)) / ((1 - q) v), the defining difference quotient.
inline MPoly difference_quotient(const MPoly& f, Symbol v) {
  const MPoly shifted = subst(f, v, MPoly::var(v) * QRat::q());
  return divide_by((f - shifted) * (QRat(1) / (QRat(1) - QRat::q())), v);
}

/// (x - b) prod_{j=1}^{k-1} (q^j x - [k]a - b), 1 at k = 0.
inline MPoly g_product(int k) {
  if (k == 0) return 1;
  const MPoly x = MPoly::var(Symbol::x);
  const MPoly a = MPoly::var(Symbol::a);
  const MPoly b = MPoly::var(Symbol::b);
  MPoly out = x - b;
  for (int j = 1; j < k; ++j) out *= x * QRat::q_pow(j) - a * qint(k) - b;
  return out;
}

/// Coefficients of f in the basis G_k(x, a, b) by back substitution: the
/// x^k coefficient of G_k is q^binom(k,2), so the system is triangular.
inline std::vector<MPoly> g_basis_solve(const MPoly& f) {
  const int d = static_cast<int>(f.degree_in(Symbol::x));
  std::vector<MPoly> c(static_cast<std::size_t>(d) + 1);
  MPoly rest = f;
  for (int k = d; k >= 0; --k) {
    const auto layers = coeffs_in(rest, Symbol::x);
    const auto i = static_cast<std::size_t>(k);
    const MPoly top = i < layers.size() ? layers[i] : MPoly();
    c[i] = top * QRat::q_pow(-binom2(k));
    rest -= c[i] * g_product(k);
  }
  return c;
}

/// Solves target = sum_k c_k/[k]! z^k E(shift(k) z) order by order: the z^m
/// coefficient is c_m/[m]! plus terms in c_0..c_(m-1).
inline std::vector<MPoly> series_triangular_solve(const PowerSeries& target,
                                                  const IndexedPoly& shift) {
  const int order = target.order();
  std::vector<MPoly> c;
  for (int m = 0; m <= order; ++m) {
    MPoly known;
    for (int k = 0; k < m; ++k) {
      const int j = m - k;
      known += c[static_cast<std::size_t>(k)] * (QRat(1) / qfac(k)) * QRat::q_pow(binom2(j)) *
               pow(shift(k), static_cast<unsigned>(j)) * (QRat(1) / qfac(j));
    }
    c.push_back((target[static_cast<std::size_t>(m)] - known) * qfac(m));
  }
  return c;
}

/// The z-shift of each Lagrange mode, written out independently.
inline MPoly mode_shift(LagrangeMode mode, int k) {
  const MPoly a = MPoly::var(Symbol::a);
  const MPoly b = MPoly::var(Symbol::b);
  MPoly s = a * qint(k);
  if (mode != LagrangeMode::plain) s += b * QRat::q_pow(k);
  return s;
}

}  // namespace qabel::test
