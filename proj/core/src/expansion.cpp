#include "qabel/abel.hpp"
#include "qabel/operators.hpp"
#include "qabel/qcomb.hpp"

namespace qabel {

MPoly AbelCoefficients::reconstruct() const {
  MPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) out += coeffs[k] * abel_poly(basis, static_cast<int>(k));
  }
  return out;
}

AbelCoefficients abel_expand(const MPoly& f) {
  const MPoly a = MPoly::var(Symbol::a);
  const MPoly b = MPoly::var(Symbol::b);
  const int degree = static_cast<int>(f.degree_in(Symbol::x));

  AbelCoefficients out;
  out.coeffs.reserve(static_cast<std::size_t>(degree) + 1);
  MPoly dk = f;
  for (int k = 0; k <= degree; ++k) {
    // Node q^-k (b + [k]a) where D^k G_n vanishes for n != k.
    const MPoly node = (b + qint(k) * a) * QRat::q_pow(-k);
    const QRat scale = QRat::q_pow(-binom2(k)) / qfac(k);
    out.coeffs.push_back(subst(dk, Symbol::x, node) * scale);
    dk = qderiv(dk, Symbol::x);
  }
  return out;
}

}  // namespace qabel
