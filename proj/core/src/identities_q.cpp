// q-Abel identities. Polynomial identities are compared in x, y, a, b and
// series identities coefficientwise up to the order parameter N.

#include <string>

#include "identity_table.hpp"
#include "qabel/operators.hpp"
#include "qabel/qcomb.hpp"

namespace qabel::detail {

namespace {

QRat qp(long e) { return QRat::q_pow(e); }
QRat integer(const mpz_class& v) { return QRat(mpq_class(v)); }
QRat kronecker(int k, int n, const QRat& value) { return k == n ? value : QRat(0); }

ParamRange degree(const char* name, int lo, int hi) { return {name, lo, hi, ParamKind::degree}; }
ParamRange fixed(const char* name, int lo, int hi) { return {name, lo, hi, ParamKind::fixed}; }
ParamRange order_param(int hi = 24) { return {"N", 0, hi, ParamKind::order}; }

using Check = std::function<Residuals(const Params&, const Families&)>;
using Admissible = std::function<bool(const Params&)>;

struct Builder {
  std::vector<Identity>& table;

  void operator()(std::string id, std::string summary, std::vector<ParamRange> params, Check check,
                  Admissible admissible = {}) const {
    table.push_back(
        {{std::move(id), std::move(summary), std::move(params)}, std::move(admissible), std::move(check)});
  }
};

std::string at(const char* name, int v) { return std::string(name) + "=" + std::to_string(v); }

const MPoly kX = MPoly::var(Symbol::x);
const MPoly kY = MPoly::var(Symbol::y);
const MPoly kA = MPoly::var(Symbol::a);
const MPoly kB = MPoly::var(Symbol::b);
const MPoly kT = MPoly::var(Symbol::t);

MPoly dagger(const MPoly& y, const MPoly& x, int n) { return qprod(y, x, n, ProdSign::plus); }

// [n]a + q^n b, the shift of the A-expansion.
MPoly shift_A(int n) { return qint(n) * kA + qp(n) * kB; }
// [n]a + b, the shift of the G-expansion.
MPoly shift_G(int n) { return qint(n) * kA + kB; }

MPoly apply_x(ExpKind kind, const MPoly& c, const MPoly& p) {
  return apply(exp_dseries(kind, c), p, Symbol::x);
}

// x^n + [n] a x^(n-1) written as an independent expression.
MPoly s_poly(int n) {
  if (n == 0) return 1;
  return x_pow(Symbol::x, n) + qint(n) * kA * x_pow(Symbol::x, n - 1);
}

// Jackson's product x prod_{j=1}^{n-1} (q^j x - [n]a), 1 at n = 0.
MPoly jackson(int n) {
  if (n == 0) return 1;
  MPoly out = kX;
  for (int j = 1; j < n; ++j) out *= kX * qp(j) - qint(n) * kA;
  return out;
}

PowerSeries geometric(const MPoly& c, int order) {
  PowerSeries denom = PowerSeries::constant(1, order);
  denom -= PowerSeries::z(order) * c;
  return PowerSeries::constant(1, order) / denom;
}

void register_section1(const Builder& add) {
  add("1.3", "(y+x)...(y+q^(n-1)x) = sum [n,k] A_k(x,a,b) (y+([k]a+q^k b))^(n-k)",
      {degree("n", 0, 10)}, [](const Params& p, const Families& f) {
        const int n = p.at("n");
        MPoly rhs;
        MPoly rhs_b0;
        for (int k = 0; k <= n; ++k) {
          rhs += qbinom(n, k) * f(FamilyId::A, k) * dagger(kY, shift_A(k), n - k);
          rhs_b0 += qbinom(n, k) * jackson(k) * dagger(kY, qint(k) * kA, n - k);
        }
        const MPoly lhs = dagger(kY, kX, n);
        return Residuals{difference("(1.3)", lhs, rhs),
                         difference("A_n(x,a,0) vs Jackson product",
                                    subst(f(FamilyId::A, n), Symbol::b, MPoly()), jackson(n)),
                         difference("(1.3) at b=0", lhs, rhs_b0)};
      });

  add("1.4", "E(x D_y) y^n = sum A_k/[k]! E(([k]a+q^k b) D_y) D_y^k y^n", {degree("n", 0, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const MPoly yn = x_pow(Symbol::y, n);
        const MPoly lhs = apply(exp_dseries(ExpKind::big_E, kX), yn, Symbol::y);
        MPoly rhs;
        for (int k = 0; k <= n; ++k) {
          const MPoly dk = qderiv(yn, Symbol::y, k);
          rhs += f(FamilyId::A, k) * (QRat(1) / qfac(k)) *
                 apply(exp_dseries(ExpKind::big_E, shift_A(k)), dk, Symbol::y);
        }
        return Residuals{difference("(1.4)", lhs, rhs)};
      });

  add("1.5", "E(xz) = sum A_k(x,a,b)/[k]! z^k E(([k]a+q^k b) z)", {order_param()},
      [](const Params& p, const Families& f) {
        const int order = p.at("N");
        const PowerSeries rhs =
            abel_sum([&](int k) { return f(FamilyId::A, k); }, shift_A, order);
        return Residuals{difference("(1.5)", exp_series(ExpKind::big_E, kX, order), rhs)};
      });

  add("1.6", "A_n(x,a,0) = x prod_{j=1}^{n-1} (q^j x - [n]a) and the b=0 expansion",
      {degree("n", 0, 10)}, [](const Params& p, const Families& f) {
        const int n = p.at("n");
        MPoly rhs;
        for (int k = 0; k <= n; ++k) rhs += qbinom(n, k) * jackson(k) * dagger(kY, qint(k) * kA, n - k);
        return Residuals{
            difference("(1.6)", subst(f(FamilyId::A, n), Symbol::b, MPoly()), jackson(n)),
            difference("Jackson expansion", dagger(kY, kX, n), rhs)};
      });

  add("1.7", "G_n(x,a,b) = A_n(x, a+(1-q)b, b)", {degree("n", 0, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const MPoly shifted = subst(f(FamilyId::A, n), Symbol::a, kA + (QRat(1) - QRat::q()) * kB);
        return Residuals{difference("(1.7)", f(FamilyId::G, n), shifted)};
      });

  add("1.8", "(y+x)...(y+q^(n-1)x) = sum [n,k] G_k(x,a,b) prod_j (y+q^j([k]a+b))",
      {degree("n", 0, 10)}, [](const Params& p, const Families& f) {
        const int n = p.at("n");
        MPoly rhs;
        for (int k = 0; k <= n; ++k) rhs += qbinom(n, k) * f(FamilyId::G, k) * dagger(kY, shift_G(k), n - k);
        return Residuals{difference("(1.8)", dagger(kY, kX, n), rhs)};
      });

  add("1.9", "E(xz) = sum G_k(x,a,b)/[k]! z^k E(([k]a+b) z)", {order_param()},
      [](const Params& p, const Families& f) {
        const int order = p.at("N");
        const PowerSeries rhs =
            abel_sum([&](int k) { return f(FamilyId::G, k); }, shift_G, order);
        return Residuals{difference("(1.9)", exp_series(ExpKind::big_E, kX, order), rhs)};
      });

  add("e-inverse", "e(z) E(-z) = 1", {order_param()}, [](const Params& p, const Families&) {
    const int order = p.at("N");
    const MPoly z1 = 1;
    return Residuals{difference(
        "e(z)E(-z)",
        exp_series(ExpKind::small_e, z1, order) * exp_series(ExpKind::big_E, -z1, order),
        PowerSeries::constant(1, order))};
  });

  add("e-ratio", "e(xz)/e(yz) = sum (x-y)(x-qy)...(x-q^(k-1)y) z^k/[k]!", {order_param()},
      [](const Params& p, const Families&) {
        const int order = p.at("N");
        std::vector<MPoly> coeffs;
        for (int k = 0; k <= order; ++k) {
          coeffs.push_back(qprod(kX, kY, k, ProdSign::minus) * (QRat(1) / qfac(k)));
        }
        return Residuals{difference(
            "e(xz)/e(yz)",
            exp_series(ExpKind::small_e, kX, order) / exp_series(ExpKind::small_e, kY, order),
            PowerSeries(order, std::move(coeffs)))};
      });

  add("EaD", "E(aD) y^n = (y+a)(y+qa)...(y+q^(n-1)a)", {degree("n", 0, 10)},
      [](const Params& p, const Families&) {
        const int n = p.at("n");
        return Residuals{difference(
            "E(aD)y^n",
            apply(exp_dseries(ExpKind::big_E, kA), x_pow(Symbol::y, n), Symbol::y),
            dagger(kY, kA, n))};
      });
}

void register_section2(const Builder& add) {
  auto k_le_n = [](const Params& p) { return p.at("k") <= p.at("n"); };

  add("2.1", "D^k G_n(x,a,b) = q^binom(k,2) [n]!/[n-k]! G_(n-k)(q^k x, q^k a, b+[k]a)",
      {degree("n", 0, 10), degree("k", 0, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const int k = p.at("k");
        const MPoly shifted = subst(f(FamilyId::G, n - k), {{Symbol::x, kX * qp(k)},
                                                            {Symbol::a, kA * qp(k)},
                                                            {Symbol::b, kB + qint(k) * kA}});
        const QRat scale = qp(binom2(k)) * qfac(n) / qfac(n - k);
        return Residuals{
            difference("(2.1)", qderiv(f(FamilyId::G, n), Symbol::x, k), shifted * scale)};
      },
      k_le_n);

  add("2.2", "(D^k G_n)(q^-k (b+[k]a)) = q^binom(k,2) [k]! [k=n]",
      {degree("n", 0, 10), degree("k", 0, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const int k = p.at("k");
        const MPoly value =
            subst(qderiv(f(FamilyId::G, n), Symbol::x, k), Symbol::x, shift_G(k) * qp(-k));
        return Residuals{difference("(2.2)", value, MPoly(kronecker(k, n, qp(binom2(k)) * qfac(k))))};
      },
      k_le_n);

  add("2.3", "Abel expansion of (y+x)...(y+q^(n-1)x) in the basis G_k", {degree("n", 0, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const MPoly target = dagger(kY, kX, n);
        const AbelCoefficients expansion = abel_expand(target);
        Residuals out;
        MPoly rebuilt;
        for (int k = 0; k <= n; ++k) {
          const MPoly expected = qbinom(n, k) * dagger(kY, shift_G(k), n - k);
          const MPoly got = static_cast<std::size_t>(k) < expansion.coeffs.size()
                                ? expansion.coeffs[static_cast<std::size_t>(k)]
                                : MPoly();
          out.push_back(difference("c_" + std::to_string(k), got, expected));
          rebuilt += got * f(FamilyId::G, k);
        }
        out.push_back(difference("reconstruction", rebuilt, target));
        return out;
      });

  add("2.4",
      "G_n(x,-a,-y-b) = sum [n,k] G_k(x,-a,-b) y prod_{j=1}^{n-k-1} (y+(1-q^j)b+([n]-q^j[k])a)",
      {degree("n", 0, 10)}, [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const MPoly lhs = subst(f(FamilyId::G, n), {{Symbol::a, -kA}, {Symbol::b, -kY - kB}});
        MPoly rhs;
        for (int k = 0; k <= n; ++k) {
          MPoly factor = 1;
          if (k < n) {
            factor = kY;
            for (int j = 1; j < n - k; ++j) {
              factor *= kY + (QRat(1) - qp(j)) * kB + (qint(n) - qp(j) * qint(k)) * kA;
            }
          }
          rhs += qbinom(n, k) *
                 subst(f(FamilyId::G, k), {{Symbol::a, -kA}, {Symbol::b, -kB}}) * factor;
        }
        return Residuals{difference("(2.4)", lhs, rhs)};
      });

  add("post-2.4",
      "z^n = sum (-1)^k/[k]! ([n]a+b)([n+k]a+b)^(k-1) z^(n+k) E(([n+k]a+b) z)",
      {fixed("n", 0, 3), order_param()}, [](const Params& p, const Families&) {
        const int n = p.at("n");
        const int order = p.at("N");
        auto coeff = [n](int m) -> MPoly {
          if (m < n) return MPoly();
          const int k = m - n;
          if (k == 0) return qfac(m);
          const QRat sign = k % 2 == 0 ? QRat(1) : QRat(-1);
          return sign * qfac(m) / qfac(k) * shift_G(n) * pow(shift_G(m), static_cast<unsigned>(k - 1));
        };
        PowerSeries lhs(order);
        if (n <= order) {
          std::vector<MPoly> c(static_cast<std::size_t>(order) + 1);
          c[static_cast<std::size_t>(n)] = 1;
          lhs = PowerSeries(order, std::move(c));
        }
        return Residuals{difference("z^n", lhs, abel_sum(coeff, shift_G, order))};
      });
}

void register_section3(const Builder& add) {
  add("3.1",
      "w_n = sum (-1)^k [n,k] q^binom(n-k,2) ([n]a+b)^k x^(n-k) = q^binom(n,2) E(-([n]a+b)/q^(n-1) D) x^n",
      {degree("n", 0, 10)}, [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const MPoly c = shift_G(n);
        MPoly sum;
        for (int k = 0; k <= n; ++k) {
          const QRat sign = k % 2 == 0 ? QRat(1) : QRat(-1);
          sum += sign * qbinom(n, k) * qp(binom2(n - k)) * pow(c, static_cast<unsigned>(k)) *
                 x_pow(Symbol::x, n - k);
        }
        const MPoly operator_form =
            qp(binom2(n)) * apply_x(ExpKind::big_E, -(c * qp(1 - n)), x_pow(Symbol::x, n));
        return Residuals{difference("binomial form", f(FamilyId::w, n), sum),
                         difference("E-operator form", f(FamilyId::w, n), operator_form)};
      });

  add("3.2", "G_n(x,a,b) = (1 + aD) w_n(x,a,b)", {degree("n", 0, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const MPoly rhs = apply(DSeries({MPoly(1), kA}), f(FamilyId::w, n), Symbol::x);
        return Residuals{difference("(3.2)", f(FamilyId::G, n), rhs)};
      });

  add("S-def",
      "S_n = q^-binom(n,2) e(([n]a+b)/q^(n-1) D) G_n = x^n + [n]a x^(n-1)", {degree("n", 0, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const MPoly c = shift_G(n) * qp(1 - n);
        const MPoly from_g = qp(-binom2(n)) * apply_x(ExpKind::small_e, c, f(FamilyId::G, n));
        const MPoly back = qp(binom2(n)) * apply_x(ExpKind::big_E, -c, f(FamilyId::S, n));
        return Residuals{difference("S_n from G_n", from_g, f(FamilyId::S, n)),
                         difference("S_n closed form", f(FamilyId::S, n), s_poly(n)),
                         difference("G_n from S_n", back, f(FamilyId::G, n))};
      });

  add("S-ladder", "D S_n = [n] S_(n-1)", {degree("n", 1, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        return Residuals{difference("D S_n", qderiv(f(FamilyId::S, n), Symbol::x),
                                    qint(n) * f(FamilyId::S, n - 1))};
      });

  add("3.4", "Q_n G_n(x,a,b) = [n] G_(n-1)(x,a,b)", {degree("n", 1, 8)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const MPoly expected = qint(n) * f(FamilyId::G, n - 1);
        return Residuals{
            difference("(3.4) closed form", apply_qn(n, f(FamilyId::G, n), QnForm::closed), expected),
            difference("(3.4) series form", apply_qn(n, f(FamilyId::G, n), QnForm::series), expected)};
      });

  add("3.3-vs-3.5", "closed and expanded forms of Q_n agree on x^d", {degree("n", 1, 8), fixed("d", 0, 6)},
      [](const Params& p, const Families&) {
        const int n = p.at("n");
        const MPoly xd = x_pow(Symbol::x, p.at("d"));
        return Residuals{difference("Q_n x^d", apply_qn(n, xd, QnForm::closed),
                                    apply_qn(n, xd, QnForm::series))};
      });
}

void register_section4(const Builder& add) {
  add("4.2", "e(xz) = sum B_k(x,a)/[k]! z^k E([k]a z)", {order_param()},
      [](const Params& p, const Families& f) {
        const int order = p.at("N");
        const PowerSeries rhs = abel_sum([&](int k) { return f(FamilyId::B_plain, k); },
                                         [](int k) { return qint(k) * kA; }, order);
        return Residuals{difference("(4.2)", exp_series(ExpKind::small_e, kX, order), rhs)};
      });

  add("4.3", "B_n(x,a) = V A_n(x,a,0) = x e(-[n]aD) x^(n-1)", {degree("n", 0, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        MPoly sum = n == 0 ? MPoly(1) : MPoly();
        for (int k = 0; k < n; ++k) {
          const QRat sign = k % 2 == 0 ? QRat(1) : QRat(-1);
          sum += sign * qbinom(n - 1, k) * pow(qint(n) * kA, static_cast<unsigned>(k)) *
                 x_pow(Symbol::x, n - k);
        }
        const MPoly va = v_operator(subst(f(FamilyId::A, n), Symbol::b, MPoly()), Symbol::x);
        return Residuals{difference("V A_n(x,a,0)", f(FamilyId::B_plain, n), va),
                         difference("binomial form", f(FamilyId::B_plain, n), sum)};
      });

  add("4.4", "L E([k]aD) D^k B_n(x,a) = [n]! [k=n]", {degree("n", 0, 10), degree("k", 0, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const int k = p.at("k");
        const MPoly dk = qderiv(f(FamilyId::B_plain, n), Symbol::x, k);
        const MPoly lhs = functional_L(apply_x(ExpKind::big_E, qint(k) * kA, dk), Symbol::x);
        return Residuals{difference("(4.4)", lhs, MPoly(kronecker(k, n, qfac(n))))};
      });

  add("4.5", "q-Lagrange coefficients reproduce each built-in series", {order_param()},
      [](const Params& p, const Families&) {
        const int order = p.at("N");
        Residuals out;
        for (auto name : builtin_series_names()) {
          const PowerSeries fz = builtin_series(name, order);
          const auto c = lagrange_coeffs(fz, LagrangeMode::plain, order);
          out.push_back(difference(std::string(name), fz,
                                   lagrange_series(c, LagrangeMode::plain, order)));
        }
        return out;
      });

  add("4.6", "c_n = L D^(n-1) e(-[n]ax) f'(x) gives B_n(x,a) for e(xz) and (-[n]a)^(n-1) for z",
      {order_param()}, [](const Params& p, const Families& f) {
        const int order = p.at("N");
        const auto ce = lagrange_coeffs(exp_series(ExpKind::small_e, kX, order),
                                        LagrangeMode::plain, order);
        const auto cz = lagrange_coeffs(PowerSeries::z(order), LagrangeMode::plain, order);
        Residuals out;
        for (int n = 0; n <= order; ++n) {
          const auto i = static_cast<std::size_t>(n);
          out.push_back(difference("e(xz) " + at("c", n), ce[i], f(FamilyId::B_plain, n)));
          const MPoly expected =
              n == 0 ? MPoly() : pow(-(qint(n) * kA), static_cast<unsigned>(n - 1));
          out.push_back(difference("z " + at("c", n), cz[i], expected));
        }
        return out;
      });

  add("4.7", "q-Pincherle: (D^m x - x (qD)^m - [m] D^(m-1)) x^n = 0",
      {fixed("m", 0, 5), degree("n", 0, 10)}, [](const Params& p, const Families&) {
        return Residuals{Residual{"(4.7)", pincherle_residual(p.at("m"), p.at("n"))}};
      });

  add("4.8",
      "general-b coefficients of e(xz) are B_n(x,a,b) and reproduce each built-in series",
      {order_param()}, [](const Params& p, const Families& f) {
        const int order = p.at("N");
        Residuals out;
        const auto ce = lagrange_coeffs(exp_series(ExpKind::small_e, kX, order),
                                        LagrangeMode::general_b, order);
        for (int n = 0; n <= order; ++n) {
          out.push_back(difference(at("c", n), ce[static_cast<std::size_t>(n)],
                                   f(FamilyId::B_general, n)));
        }
        for (auto name : builtin_series_names()) {
          const PowerSeries fz = builtin_series(name, order);
          const auto c = lagrange_coeffs(fz, LagrangeMode::general_b, order);
          out.push_back(difference(std::string(name), fz,
                                   lagrange_series(c, LagrangeMode::general_b, order)));
        }
        return out;
      });

  add("4.9", "L E((q^k b + [k]a)D) D^k B_n(x,a,b) = [n]! [k=n]",
      {degree("n", 0, 10), degree("k", 0, 10)}, [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const int k = p.at("k");
        const MPoly dk = qderiv(f(FamilyId::B_general, n), Symbol::x, k);
        const MPoly lhs = functional_L(apply_x(ExpKind::big_E, shift_A(k), dk), Symbol::x);
        return Residuals{difference("(4.9)", lhs, MPoly(kronecker(k, n, qfac(n))))};
      });

  add("B-sum",
      "B_n(x,a,b) = sum (-1)^k x^(n-k) [n,k] (q^n b+[n]a)^(k-1) (q^(n-k) b+[n-k]a) and its e-form",
      {degree("n", 0, 10)}, [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const MPoly s = shift_A(n);
        MPoly sum = x_pow(Symbol::x, n);
        for (int k = 1; k <= n; ++k) {
          const QRat sign = k % 2 == 0 ? QRat(1) : QRat(-1);
          sum += sign * qbinom(n, k) * x_pow(Symbol::x, n - k) *
                 pow(s, static_cast<unsigned>(k - 1)) * shift_A(n - k);
        }
        Residuals out{difference("alternating sum", f(FamilyId::B_general, n), sum)};
        if (n >= 1) {
          const MPoly xn1 = x_pow(Symbol::x, n - 1);
          const MPoly e_form = kX * apply_x(ExpKind::small_e, -s, xn1) -
                               qp(n - 1) * kB * apply_x(ExpKind::small_e, -(s * qp(-1)), xn1);
          out.push_back(difference("e-form", f(FamilyId::B_general, n), e_form));
        }
        return out;
      });

  add("4.10", "B_n(x,a,b) = (1 + (a/q)D) e(-(q^n b+[n]a)/q D) x^n", {degree("n", 0, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const MPoly inner =
            apply_x(ExpKind::small_e, -(shift_A(n) * qp(-1)), x_pow(Symbol::x, n));
        const MPoly rhs = apply(DSeries({MPoly(1), kA * qp(-1)}), inner, Symbol::x);
        return Residuals{difference("(4.10)", f(FamilyId::B_general, n), rhs)};
      });

  add("4.11", "q-Lagrange-Buermann coefficients reproduce f/(1+az/q) for each built-in series",
      {order_param()}, [](const Params& p, const Families&) {
        const int order = p.at("N");
        Residuals out;
        for (auto name : builtin_series_names()) {
          const PowerSeries fz = builtin_series(name, order);
          const auto c = lagrange_coeffs(fz, LagrangeMode::buermann, order);
          out.push_back(difference(std::string(name),
                                   lagrange_target(fz, LagrangeMode::buermann),
                                   lagrange_series(c, LagrangeMode::buermann, order)));
        }
        return out;
      });

  add("4.12",
      "Buermann coefficients of E(-yz) are (c-y)(c-qy)...(c-q^(n-1)y) with c = -(q^n b+[n]a)/q",
      {order_param()}, [](const Params& p, const Families&) {
        const int order = p.at("N");
        const auto c = lagrange_coeffs(exp_series(ExpKind::big_E, -kY, order),
                                       LagrangeMode::buermann, order);
        Residuals out;
        for (int n = 0; n <= order; ++n) {
          const MPoly base = -(shift_A(n) * qp(-1));
          out.push_back(difference(at("c", n), c[static_cast<std::size_t>(n)],
                                   qprod(base, kY, n, ProdSign::minus)));
        }
        return out;
      });

  add("4.13",
      "E(xz)/(1-az) = sum (s_k+x)...(s_k+q^(k-1)x)/[k]! z^k E(-q s_k z), s_k = q^k b+[k]a",
      {order_param()}, [](const Params& p, const Families&) {
        const int order = p.at("N");
        const PowerSeries lhs = exp_series(ExpKind::big_E, kX, order) * geometric(kA, order);
        const PowerSeries rhs = abel_sum([](int k) { return dagger(shift_A(k), kX, k); },
                                         [](int k) { return -(shift_A(k) * QRat::q()); }, order);
        return Residuals{difference("(4.13)", lhs, rhs)};
      });
}

// [n]a + t b with [n] rewritten as (1 - t)/(1 - q).
MPoly shift_in_t(const MPoly& c) { return kT * c + qint_in_t() * kA; }

void register_section5(const Builder& add) {
  add("5.3", "Delta^k q^(in) = 0 for k >= i > 0", {fixed("i", 1, 4), fixed("k", 0, 6)},
      [](const Params& p, const Families&) {
        return Residuals{Residual{"(5.3)", delta_op(x_pow(Symbol::t, p.at("i")), p.at("k"))}};
      },
      [](const Params& p) { return p.at("k") >= p.at("i"); });

  add("5.4", "Delta^k 1 = (1-q)^k [k]!", {fixed("k", 0, 6)}, [](const Params& p, const Families&) {
    const int k = p.at("k");
    return Residuals{difference("(5.4)", delta_op(1, k), MPoly(pow(QRat(1) - QRat::q(), k) * qfac(k)))};
  });

  add("5.5", "Delta^k [n]^m = [k]! (1-q)^(k-m) for k >= m", {fixed("m", 0, 4), fixed("k", 0, 6)},
      [](const Params& p, const Families&) {
        const int m = p.at("m");
        const int k = p.at("k");
        return Residuals{difference("(5.5)", delta_op(pow(qint_in_t(), static_cast<unsigned>(m)), k),
                                    MPoly(qfac(k) * pow(QRat(1) - QRat::q(), k - m)))};
      },
      [](const Params& p) { return p.at("k") >= p.at("m"); });

  add("5.6", "Delta^k q^(in) [n]^m = 0 for k >= m + i, i > 0",
      {fixed("i", 1, 4), fixed("m", 0, 4), fixed("k", 0, 6)},
      [](const Params& p, const Families&) {
        const MPoly arg =
            x_pow(Symbol::t, p.at("i")) * pow(qint_in_t(), static_cast<unsigned>(p.at("m")));
        return Residuals{Residual{"(5.6)", delta_op(arg, p.at("k"))}};
      },
      [](const Params& p) { return p.at("k") >= p.at("m") + p.at("i"); });

  add("5.7", "Delta^n (q^(nj) (q^n x + [n]a)^(n-j)) = 0 for j > 0",
      {degree("n", 1, 8), fixed("j", 1, 8)},
      [](const Params& p, const Families&) {
        const int n = p.at("n");
        const int j = p.at("j");
        const MPoly arg =
            x_pow(Symbol::t, j) * pow(shift_in_t(kX), static_cast<unsigned>(n - j));
        return Residuals{Residual{"(5.7)", delta_op(arg, n)}};
      },
      [](const Params& p) { return p.at("j") <= p.at("n"); });

  add("5.8", "Delta^n ((q^n x + [n]a)^n) = [n]! a^n", {degree("n", 0, 8)},
      [](const Params& p, const Families&) {
        const int n = p.at("n");
        const auto e = static_cast<unsigned>(n);
        return Residuals{
            difference("(5.8)", delta_op(pow(shift_in_t(kX), e), n), qfac(n) * pow(kA, e))};
      });

  add("5.9",
      "sum [n,k] (-1)^k (c_k+x)...(c_k+q^(n-k-1)x) (x+qc_k)...(x+q^k c_k) = [n]! a^n, "
      "c_k = q^(n-k) b + [n-k]a",
      {degree("n", 0, 8)}, [](const Params& p, const Families&) {
        const int n = p.at("n");
        const auto e = static_cast<unsigned>(n);
        const MPoly expected = qfac(n) * pow(kA, e);
        MPoly direct;
        for (int k = 0; k <= n; ++k) {
          const MPoly c = shift_A(n - k);
          const QRat sign = k % 2 == 0 ? QRat(1) : QRat(-1);
          direct += sign * qbinom(n, k) * dagger(c, kX, n - k) * dagger(kX, c * QRat::q(), k);
        }
        // Each k-term equals q^binom(k+1,2) (c_k + q^-k x)...(c_k + q^(n-1-k) x),
        // so the sum is Delta^n applied termwise in x^j and evaluated at t = q^n.
        MPoly via_delta;
        for (int j = 0; j <= n; ++j) {
          const MPoly inner = x_pow(Symbol::t, j) * pow(shift_in_t(kB), static_cast<unsigned>(n - j));
          const MPoly reduced = subst(delta_op(inner, n), Symbol::t, MPoly(qp(n)));
          via_delta += qbinom(n, j) * qp(binom2(j) - static_cast<long>(n) * j) *
                       x_pow(Symbol::x, j) * reduced;
        }
        return Residuals{difference("(5.9)", direct, expected),
                         difference("(5.9) via Delta", via_delta, expected)};
      });

  add("5.10",
      "z^n/(1-az) = sum ([n+k]a+q^(n+k)b)^k/[k]! z^(n+k) E(-q([n+k]a+q^(n+k)b) z)",
      {fixed("n", 0, 3), order_param()}, [](const Params& p, const Families&) {
        const int n = p.at("n");
        const int order = p.at("N");
        std::vector<MPoly> zn(static_cast<std::size_t>(order) + 1);
        if (n <= order) zn[static_cast<std::size_t>(n)] = 1;
        const PowerSeries lhs = PowerSeries(order, std::move(zn)) * geometric(kA, order);
        auto coeff = [n](int m) -> MPoly {
          if (m < n) return MPoly();
          return qfac(m) / qfac(m - n) * pow(shift_A(m), static_cast<unsigned>(m - n));
        };
        const PowerSeries rhs =
            abel_sum(coeff, [](int m) { return -(shift_A(m) * QRat::q()); }, order);
        return Residuals{difference("(5.10)", lhs, rhs)};
      });

  add("5.11", "(y+x)...(y+q^(n-1)x) = sum [n,k] (s_k+x)...(s_k+q^(k-1)x) v(n,k), "
      "v = (y-qs_k)...(y-q^(n-k-1)s_k) (y-q^n b-[n]a), s_k = q^k b+[k]a",
      {degree("n", 0, 10)}, [](const Params& p, const Families&) {
        const int n = p.at("n");
        MPoly rhs;
        for (int k = 0; k <= n; ++k) {
          const MPoly s = shift_A(k);
          MPoly v = 1;
          if (k < n) v = qprod(kY, s * QRat::q(), n - k - 1, ProdSign::minus) * (kY - shift_A(n));
          rhs += qbinom(n, k) * dagger(s, kX, k) * v;
        }
        return Residuals{difference("(5.11)", dagger(kY, kX, n), rhs)};
      });

  add("5.12",
      "E(xz)/(1-(a+(1-q)b)z) = sum (b+[k]a+x)...(b+[k]a+q^(k-1)x)/[k]! z^k E(-q(b+[k]a) z)",
      {order_param()}, [](const Params& p, const Families&) {
        const int order = p.at("N");
        const PowerSeries lhs = exp_series(ExpKind::big_E, kX, order) *
                                geometric(kA + (QRat(1) - QRat::q()) * kB, order);
        const PowerSeries rhs = abel_sum([](int k) { return dagger(shift_G(k), kX, k); },
                                         [](int k) { return -(shift_G(k) * QRat::q()); }, order);
        return Residuals{difference("(5.12)", lhs, rhs)};
      });
}

void register_limits(const Builder& add) {
  add("limit-A", "A_n(x,a,b) at q=1 is (x-b)(x-b-na)^(n-1)", {degree("n", 0, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        return Residuals{difference("A_n at q=1", eval_q1(f(FamilyId::A, n)),
                                    eval_q1(f(FamilyId::classical, n)))};
      });

  add("limit-G", "G_n(x,a,b) at q=1 is (x-b)(x-b-na)^(n-1)", {degree("n", 0, 10)},
      [](const Params& p, const Families& f) {
        const int n = p.at("n");
        return Residuals{difference("G_n at q=1", eval_q1(f(FamilyId::G, n)),
                                    eval_q1(f(FamilyId::classical, n)))};
      });

  add("limit-B", "B_n(x,a) and B_n(x,a,b) at q=1 are x(x-na)^(n-1) and (x-b)(x-b-na)^(n-1)",
      {degree("n", 0, 10)}, [](const Params& p, const Families& f) {
        const int n = p.at("n");
        const MPoly classical = eval_q1(f(FamilyId::classical, n));
        return Residuals{
            difference("B_n(x,a) at q=1", eval_q1(f(FamilyId::B_plain, n)),
                       subst(classical, Symbol::b, MPoly())),
            difference("B_n(x,a,b) at q=1", eval_q1(f(FamilyId::B_general, n)), classical)};
      });

  add("limit-0.17",
      "the q=1 value of the alternating sum of products is sum (-1)^(n-k) binom(n,k) (x+b+ak)^n = n! a^n",
      {degree("n", 0, 8)}, [](const Params& p, const Families&) {
        const int n = p.at("n");
        const auto e = static_cast<unsigned>(n);
        MPoly lhs;
        for (int k = 0; k <= n; ++k) {
          const MPoly c = shift_A(n - k);
          const QRat sign = k % 2 == 0 ? QRat(1) : QRat(-1);
          lhs += sign * qbinom(n, k) * dagger(c, kX, n - k) * dagger(kX, c * QRat::q(), k);
        }
        MPoly classical;
        for (int k = 0; k <= n; ++k) {
          const QRat sign = (n - k) % 2 == 0 ? QRat(1) : QRat(-1);
          classical += sign * integer(binomial(n, k)) * pow(kX + kB + kA * QRat(k), e);
        }
        const MPoly expected = integer(factorial(n)) * pow(kA, e);
        return Residuals{difference("q=1 value", eval_q1(lhs), classical),
                         difference("classical sum", classical, expected)};
      });
}

}  // namespace

void register_q_identities(std::vector<Identity>& table) {
  const Builder add{table};
  register_section1(add);
  register_section2(add);
  register_section3(add);
  register_section4(add);
  register_section5(add);
  register_limits(add);
}

}  // namespace qabel::detail
