// Classical (q = 1) Abel identities, checked with ordinary derivatives and
// exponentials over rational coefficients.

#include "identity_table.hpp"
#include "qabel/operators.hpp"
#include "qabel/qcomb.hpp"

namespace qabel::detail {

namespace {

QRat integer(const mpz_class& v) { return QRat(mpq_class(v)); }
QRat inverse_factorial(int n) { return QRat(mpq_class(mpz_class(1), factorial(n))); }

ParamRange degree(const char* name, int lo, int hi) { return {name, lo, hi, ParamKind::degree}; }
ParamRange order_param() { return {"N", 0, 24, ParamKind::order}; }

// m! [z^m] of exp(c z) * g.
template <typename Coeff>
MPoly classical_exp_product(const MPoly& c, int m, Coeff g) {
  MPoly out;
  MPoly power = 1;
  for (int i = 0; i <= m; ++i) {
    out += power * g(m - i) * inverse_factorial(i);
    if (i < m) power *= c;
  }
  return out * integer(factorial(m));
}

}  // namespace

void register_classical(std::vector<Identity>& t) {
  const MPoly x = sym(Symbol::x);
  const MPoly y = sym(Symbol::y);
  const MPoly a = sym(Symbol::a);
  const MPoly b = sym(Symbol::b);

  t.push_back({{"0.3", "(x+y)^n = sum binom(n,k) a_k(x,a,b) (y+ka+b)^(n-k)", {degree("n", 0, 10)}},
               {},
               [=](const Params& p, const Families& f) {
                 const int n = p.at("n");
                 MPoly rhs;
                 for (int k = 0; k <= n; ++k) {
                   rhs += f(FamilyId::classical, k) * pow(y + a * QRat(k) + b, n - k) *
                          integer(binomial(n, k));
                 }
                 return Residuals{difference("(0.3)", pow(x + y, n), rhs)};
               }});

  t.push_back({{"0.4", "a_n(x,a,b) = (1 + a d/dx)(x-b-na)^n", {degree("n", 0, 10)}},
               {},
               [=](const Params& p, const Families& f) {
                 const int n = p.at("n");
                 const MPoly rhs =
                     apply_classical(DSeries({MPoly(1), a}), pow(x - b - a * QRat(n), n), Symbol::x);
                 return Residuals{difference("(0.4)", f(FamilyId::classical, n), rhs)};
               }});

  t.push_back({{"0.7", "exp(xz) = sum a_k(x,a,b)/k! z^k exp((b+ka)z)", {order_param()}},
               {},
               [=](const Params& p, const Families& f) {
                 const int order = p.at("N");
                 const PowerSeries rhs = classical_abel_sum(
                     [&](int k) { return f(FamilyId::classical, k); },
                     [&](int k) { return b + a * QRat(k); }, order);
                 return Residuals{difference("(0.7)", classical_exp_series(x, order), rhs)};
               }});

  t.push_back({{"0.9", "Q a_n = n a_(n-1) with Q = d/dx exp(a d/dx)", {degree("n", 1, 10)}},
               {},
               [=](const Params& p, const Families& f) {
                 const int n = p.at("n");
                 const MPoly shifted =
                     apply_classical(classical_exp_dseries(a), f(FamilyId::classical, n), Symbol::x);
                 return Residuals{difference("(0.9)", deriv(shifted, Symbol::x),
                                             f(FamilyId::classical, n - 1) * QRat(n))};
               }});

  t.push_back({{"0.10",
                "L (d/dx)^k exp(ka d/dx) a_n(x,a) = n! [k=n]",
                {degree("n", 0, 8), degree("k", 0, 8)}},
               {},
               [=](const Params& p, const Families& f) {
                 const int n = p.at("n");
                 const int k = p.at("k");
                 const MPoly an = subst(f(FamilyId::classical, n), Symbol::b, MPoly());
                 const MPoly shifted =
                     apply_classical(classical_exp_dseries(a * QRat(k)), an, Symbol::x);
                 const MPoly lhs = functional_L(deriv(shifted, Symbol::x, k), Symbol::x);
                 const MPoly rhs = k == n ? MPoly(integer(factorial(n))) : MPoly();
                 return Residuals{difference("(0.10)", lhs, rhs)};
               }});

  t.push_back(
      {{"0.12", "Lagrange: c_n = L d^(n-1) exp(-nax) f'(x) for f = exp(xz)", {order_param()}},
       {},
       [=](const Params& p, const Families& f) {
         const int order = p.at("N");
         const PowerSeries fz = classical_exp_series(x, order);
         std::vector<MPoly> c{fz[0]};
         for (int n = 1; n <= order; ++n) {
           c.push_back(classical_exp_product(-(a * QRat(n)), n - 1, [&](int k) {
             return fz[static_cast<std::size_t>(k) + 1] * QRat(k + 1);
           }));
         }
         Residuals out;
         for (int n = 0; n <= order; ++n) {
           out.push_back(difference("c_" + std::to_string(n) + " vs a_n(x,a)", c[n],
                                    subst(f(FamilyId::classical, n), Symbol::b, MPoly())));
         }
         out.push_back(difference(
             "(0.11) expansion", fz,
             classical_abel_sum([&](int k) { return c[k]; }, [&](int k) { return a * QRat(k); },
                                order)));
         return out;
       }});

  t.push_back({{"0.14",
                "Lagrange-Buermann: f/(1+az) = sum c_k/k! z^k exp(kaz), c_n = L d^n exp(-nax) f",
                {order_param()}},
               {},
               [=](const Params& p, const Families&) {
                 const int order = p.at("N");
                 const PowerSeries fz = classical_exp_series(x, order);
                 std::vector<MPoly> c;
                 for (int n = 0; n <= order; ++n) {
                   c.push_back(classical_exp_product(-(a * QRat(n)), n, [&](int k) { return fz[k]; }));
                 }
                 Residuals out;
                 for (int n = 0; n <= order; ++n) {
                   out.push_back(difference("c_" + std::to_string(n), c[n], pow(x - a * QRat(n), n)));
                 }
                 PowerSeries divisor = PowerSeries::constant(1, order);
                 divisor += PowerSeries::z(order) * a;
                 out.push_back(difference(
                     "(0.13) expansion", fz / divisor,
                     classical_abel_sum([&](int k) { return c[k]; },
                                        [&](int k) { return a * QRat(k); }, order)));
                 return out;
               }});

  t.push_back({{"0.16", "1/(1-az) = sum (x+ak)^k/k! z^k exp(-(ak+x)z)", {order_param()}},
               {},
               [=](const Params& p, const Families&) {
                 const int order = p.at("N");
                 PowerSeries denom = PowerSeries::constant(1, order);
                 denom -= PowerSeries::z(order) * a;
                 const PowerSeries lhs = PowerSeries::constant(1, order) / denom;
                 const PowerSeries rhs = classical_abel_sum(
                     [&](int k) { return pow(x + a * QRat(k), k); },
                     [&](int k) { return -(a * QRat(k) + x); }, order);
                 return Residuals{difference("(0.16)", lhs, rhs)};
               }});

  t.push_back({{"0.17", "n! a^n = sum (-1)^(n-k) binom(n,k) (x+ak)^n", {degree("n", 0, 10)}},
               {},
               [=](const Params& p, const Families&) {
                 const int n = p.at("n");
                 MPoly rhs;
                 for (int k = 0; k <= n; ++k) {
                   const QRat sign = (n - k) % 2 == 0 ? QRat(1) : QRat(-1);
                   rhs += pow(x + a * QRat(k), n) * integer(binomial(n, k)) * sign;
                 }
                 return Residuals{
                     difference("(0.17)", pow(a, n) * integer(factorial(n)), rhs)};
               }});
}

}  // namespace qabel::detail
