#pragma once

// Linear operators acting on polynomials: the q-derivative, operator series
// in D, the evaluation functional L, the diagonal operator V, the difference
// operator Delta^k on t = q^n, and the Abel-type operators Q_n.

#include <functional>
#include <memory>
#include <vector>

#include "qabel/mpoly.hpp"
#include "qabel/series.hpp"

namespace qabel {

/// k-fold q-derivative in v, by the monomial rule D v^n = [n] v^(n-1).
MPoly qderiv(const MPoly& p, Symbol v, int k = 1);

/// k-fold ordinary derivative in v.
MPoly deriv(const MPoly& p, Symbol v, int k = 1);

/// Formal operator series sum_k g_k D^k. Coefficients come from a pure
/// generator and are cached as they are requested.
class DSeries {
 public:
  using Generator = std::function<MPoly(int)>;

  explicit DSeries(Generator gen);
  /// Finite operator; coefficients beyond the list are zero.
  explicit DSeries(std::vector<MPoly> coeffs);

  const MPoly& coeff(int k) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// sum_{k <= deg_v p} g_k * D_v^k p. Higher powers of D annihilate p.
MPoly apply(const DSeries& op, const MPoly& p, Symbol v);

/// e(cD) or E(cD).
DSeries exp_dseries(ExpKind kind, const MPoly& c);

/// exp(c d/dv) as a series in the ordinary derivative; pair it with
/// apply_classical.
DSeries classical_exp_dseries(const MPoly& c);

/// sum_k g_k * (d/dv)^k p.
MPoly apply_classical(const DSeries& op, const MPoly& p, Symbol v);

/// L p = p at v = 0.
MPoly functional_L(const MPoly& p, Symbol v);

/// V q^binom(m,2) v^m = v^m: scales the v-degree-m part by q^-binom(m,2).
MPoly v_operator(const MPoly& p, Symbol v);

/// Delta^k = (1 - qU)(1 - q^2 U)...(1 - q^k U) with U t^i = q^-i t^i.
MPoly delta_op(const MPoly& p, int k);

/// [n] written in t = q^n, i.e. (1 - t)/(1 - q).
MPoly qint_in_t();

enum class QnForm { closed, series };

/// The q-Abel operator Q_n acting in x, with parameters a and b. The closed
/// form composes D/q^(n-1), e(alpha D) and E(-beta D); the series form sums
/// the explicit expansion in powers of D/q^(n-1). Throws InvalidIndex for n < 1.
MPoly apply_qn(int n, const MPoly& p, QnForm form);

/// (D^m x - x (qD)^m - [m] D^(m-1)) x^n, which vanishes identically.
MPoly pincherle_residual(int m, int n);

/// f(D) x p - x f(qD) p - f'(D) p for the finite operator f(D) = sum c_k D^k,
/// where f' is the q-derivative of f in D.
MPoly pincherle_residual(const std::vector<MPoly>& f, const MPoly& p);

}  // namespace qabel
