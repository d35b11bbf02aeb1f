#include "qabel/operators.hpp"

#include <deque>
#include <mutex>
#include <string>

#include "qabel/errors.hpp"
#include "qabel/qcomb.hpp"

namespace qabel {

namespace {

// Multiplies the coefficient of each term by factor(exponent of v).
template <typename Factor>
MPoly scale_by_degree(const MPoly& p, Symbol v, Factor factor) {
  MPoly out;
  for (const auto& [m, c] : p.terms()) out += MPoly::term(c * factor(m.exponent(v)), m);
  return out;
}

// One step of a derivative-like map v^n -> w(n) v^(n-1).
template <typename Weight>
MPoly lower_degree(const MPoly& p, Symbol v, Weight weight) {
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    out += MPoly::term(c * weight(static_cast<int>(e)), m.with_exponent(v, e - 1));
  }
  return out;
}

template <typename Derivative>
MPoly apply_with(const DSeries& op, const MPoly& p, Derivative derivative) {
  MPoly out;
  MPoly dk = p;
  for (int k = 0; !dk.is_zero(); ++k) {
    const MPoly& g = op.coeff(k);
    if (!g.is_zero()) out += g * dk;
    dk = derivative(dk);
  }
  return out;
}

const MPoly& var_x() {
  static const MPoly x = MPoly::var(Symbol::x);
  return x;
}

}  // namespace

MPoly qderiv(const MPoly& p, Symbol v, int k) {
  if (k < 0) throw InvalidIndex("qderiv: negative order");
  MPoly out = p;
  for (int i = 0; i < k && !out.is_zero(); ++i) {
    out = lower_degree(out, v, [](int e) { return qint(e); });
  }
  return out;
}

MPoly deriv(const MPoly& p, Symbol v, int k) {
  if (k < 0) throw InvalidIndex("deriv: negative order");
  MPoly out = p;
  for (int i = 0; i < k && !out.is_zero(); ++i) {
    out = lower_degree(out, v, [](int e) { return QRat(e); });
  }
  return out;
}

struct DSeries::State {
  Generator gen;
  std::mutex mutex;
  std::deque<MPoly> cache;
};

DSeries::DSeries(Generator gen) : state_(std::make_shared<State>()) {
  state_->gen = std::move(gen);
}

DSeries::DSeries(std::vector<MPoly> coeffs)
    : DSeries([c = std::move(coeffs)](int k) {
        return static_cast<std::size_t>(k) < c.size() ? c[k] : MPoly();
      }) {}

const MPoly& DSeries::coeff(int k) const {
  std::lock_guard lock(state_->mutex);
  auto& cache = state_->cache;
  while (cache.size() <= static_cast<std::size_t>(k)) {
    cache.push_back(state_->gen(static_cast<int>(cache.size())));
  }
  return cache[k];
}

MPoly apply(const DSeries& op, const MPoly& p, Symbol v) {
  return apply_with(op, p, [v](const MPoly& f) { return qderiv(f, v); });
}

MPoly apply_classical(const DSeries& op, const MPoly& p, Symbol v) {
  return apply_with(op, p, [v](const MPoly& f) { return deriv(f, v); });
}

DSeries exp_dseries(ExpKind kind, const MPoly& c) {
  return DSeries([kind, c](int k) {
    QRat scale = QRat(1) / qfac(k);
    if (kind == ExpKind::big_E) scale *= QRat::q_pow(binom2(k));
    return pow(c, static_cast<unsigned>(k)) * scale;
  });
}

DSeries classical_exp_dseries(const MPoly& c) {
  return DSeries([c](int k) {
    return pow(c, static_cast<unsigned>(k)) * QRat(mpq_class(mpz_class(1), factorial(k)));
  });
}

MPoly functional_L(const MPoly& p, Symbol v) { return coeffs_in(p, v).front(); }

MPoly v_operator(const MPoly& p, Symbol v) {
  return scale_by_degree(p, v, [](unsigned m) { return QRat::q_pow(-binom2(m)); });
}

MPoly delta_op(const MPoly& p, int k) {
  if (k < 0) throw InvalidIndex("delta_op: negative order");
  MPoly out = p;
  for (int j = 1; j <= k; ++j) {
    const MPoly shifted = scale_by_degree(out, Symbol::t, [](unsigned i) {
      return QRat::q_pow(-static_cast<long>(i));
    });
    out -= shifted * QRat::q_pow(j);
  }
  return out;
}

MPoly qint_in_t() {
  static const MPoly value =
      (MPoly(1) - MPoly::var(Symbol::t)) * (QRat(1) / (QRat(1) - QRat::q()));
  return value;
}

MPoly apply_qn(int n, const MPoly& p, QnForm form) {
  if (n < 1) throw InvalidIndex("Q_n requires n >= 1, got " + std::to_string(n));
  const MPoly a = MPoly::var(Symbol::a);
  const MPoly b = MPoly::var(Symbol::b);
  const QRat step = QRat::q_pow(-(n - 1));

  if (form == QnForm::closed) {
    const MPoly alpha = (qint(n) * a + b) * QRat::q_pow(-(n - 1));
    const MPoly beta = (qint(n - 1) * a + b) * QRat::q_pow(-(n - 2));
    MPoly out = apply(exp_dseries(ExpKind::big_E, -beta), p, Symbol::x);
    out = apply(exp_dseries(ExpKind::small_e, alpha), out, Symbol::x);
    return qderiv(out, Symbol::x) * step;
  }

  MPoly out;
  MPoly product = 1;  // prod_{j<k} (([j+1] - q^n [j]) a + (1 - q^(j+1)) b)
  MPoly dk = qderiv(p, Symbol::x) * step;
  for (int k = 0; !dk.is_zero(); ++k) {
    out += product * dk * (QRat(1) / qfac(k));
    const MPoly factor =
        (qint(k + 1) - QRat::q_pow(n) * qint(k)) * a + (QRat(1) - QRat::q_pow(k + 1)) * b;
    product *= factor;
    dk = qderiv(dk, Symbol::x) * step;
  }
  return out;
}

MPoly pincherle_residual(int m, int n) {
  if (m < 0 || n < 0) throw InvalidIndex("pincherle_residual: negative index");
  std::vector<MPoly> f(static_cast<std::size_t>(m) + 1);
  f[m] = 1;
  return pincherle_residual(f, MPoly::term(1, Monomial::of(Symbol::x, static_cast<unsigned>(n))));
}

MPoly pincherle_residual(const std::vector<MPoly>& f, const MPoly& p) {
  const Symbol x = Symbol::x;
  const MPoly xp = var_x() * p;
  MPoly out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k].is_zero()) continue;
    const int ki = static_cast<int>(k);
    out += f[k] * qderiv(xp, x, ki);
    out -= f[k] * var_x() * qderiv(p, x, ki) * QRat::q_pow(ki);
    if (k > 0) out -= f[k] * qint(ki) * qderiv(p, x, ki - 1);
  }
  return out;
}

}  // namespace qabel
