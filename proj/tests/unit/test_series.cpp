#include <doctest.h>

#include "qabel/abel.hpp"
#include "qabel/errors.hpp"
#include "qabel/qcomb.hpp"
#include "qabel/series.hpp"
#include "support/generators.hpp"

using namespace qabel;
using qabel::test::Gen;

namespace {

const MPoly x = MPoly::var(Symbol::x);
const MPoly y = MPoly::var(Symbol::y);
const MPoly a = MPoly::var(Symbol::a);
const MPoly b = MPoly::var(Symbol::b);
const QRat q = QRat::q();

PowerSeries one(int order) { return PowerSeries::constant(1, order); }

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("construction") {
    CHECK(PowerSeries(3).is_zero());
    CHECK(PowerSeries::z(2).coeffs() == std::vector<MPoly>{0, 1, 0});
    CHECK(PowerSeries::z(0).is_zero());
    CHECK_THROWS_AS(PowerSeries(2, {1, 2}), std::invalid_argument);
  }

  TEST_CASE("spec examples for arithmetic") {
    CHECK(exp_series(ExpKind::small_e, 1, 12) * exp_series(ExpKind::big_E, -1, 12) == one(12));
    const PowerSeries geo = one(7) / (one(7) - PowerSeries::z(7) * a);
    for (int k = 0; k <= 7; ++k) CHECK(geo[static_cast<std::size_t>(k)] == pow(a, static_cast<unsigned>(k)));
    const PowerSeries f = exp_series(ExpKind::big_E, x + a, 5);
    CHECK((f + (-f)).is_zero());
  }

  TEST_CASE("spec examples for exponentials") {
    const PowerSeries e3 = exp_series(ExpKind::small_e, x, 3);
    CHECK(e3.coeffs() ==
          std::vector<MPoly>{1, x, pow(x, 2) * (QRat(1) / qfac(2)), pow(x, 3) * (QRat(1) / qfac(3))});
    const PowerSeries big2 = exp_series(ExpKind::big_E, x, 2);
    CHECK(big2.coeffs() == std::vector<MPoly>{1, x, q * pow(x, 2) * (QRat(1) / qfac(2))});
    CHECK(exp_series(ExpKind::small_e, 0, 6) == one(6));
    CHECK_FALSE(exp_series(ExpKind::small_e, 1, 2) == exp_series(ExpKind::big_E, 1, 2));
  }

  TEST_CASE("spec examples for abel_sum") {
    const auto unit = [](int k) { return k == 0 ? MPoly(1) : MPoly(); };
    const auto zero_shift = [](int) { return MPoly(); };
    CHECK(abel_sum(unit, zero_shift, 6) == one(6));
    const auto g = [](int k) { return abel_poly(FamilyId::G, k); };
    const auto g_shift = [](int k) { return a * qint(k) + b; };
    CHECK(abel_sum(g, g_shift, 1) == one(1) + PowerSeries::z(1) * x);
    const auto ak = [](int k) { return abel_poly(FamilyId::A, k); };
    const auto a_shift = [](int k) { return a * qint(k) + b * QRat::q_pow(k); };
    CHECK(abel_sum(ak, a_shift, 7) == exp_series(ExpKind::big_E, x, 7));
  }

  TEST_CASE("e-ratio") {
    const int order = 8;
    const PowerSeries lhs =
        exp_series(ExpKind::small_e, x, order) / exp_series(ExpKind::small_e, y, order);
    std::vector<MPoly> c;
    for (int k = 0; k <= order; ++k) c.push_back(qprod(x, y, k, ProdSign::minus) * (QRat(1) / qfac(k)));
    CHECK(lhs == PowerSeries(order, c));
  }

  TEST_CASE("e and E are mutual inverses at order 16") {
    CHECK(exp_series(ExpKind::small_e, x, 16) * exp_series(ExpKind::big_E, -x, 16) == one(16));
  }

  TEST_CASE("classical exponential") {
    const PowerSeries e = classical_exp_series(x, 6);
    CHECK(e[3] == pow(x, 3) * QRat(mpq_class(1, 6)));
    CHECK(e * classical_exp_series(-x, 6) == one(6));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(one(3) + one(4), OrderMismatch);
    CHECK_THROWS_AS((void)(one(3) == one(4)), OrderMismatch);
    CHECK_THROWS_AS(one(3) / PowerSeries::z(3), NonUnitConstantTerm);
    CHECK_THROWS_AS(one(3) / (one(3) * x), NonUnitConstantTerm);
  }

  TEST_CASE("rendering") {
    CHECK(PowerSeries(2).to_string() == "O(z^3)");
    CHECK((one(2) + PowerSeries::z(2) * x).to_string() == "(1) + (x)*z + O(z^3)");
    CHECK((PowerSeries::z(2) * PowerSeries::z(2)).to_string() == "(1)*z^2 + O(z^3)");
  }

  TEST_CASE("property: division round trip") {
    Gen gen(0x21);
    const std::vector<Symbol> syms{Symbol::x, Symbol::a};
    for (int i = 0; i < 30; ++i) {
      const int order = gen.integer(0, 6);
      std::vector<MPoly> f;
      std::vector<MPoly> g;
      for (int k = 0; k <= order; ++k) {
        f.push_back(gen.mpoly(syms, 3, 2));
        g.push_back(k == 0 ? MPoly(gen.nonzero_qrat(2)) : gen.mpoly(syms, 3, 2));
      }
      const PowerSeries fs(order, f);
      const PowerSeries gs(order, g);
      CHECK((fs / gs) * gs == fs);
      CHECK((fs * gs) / gs == fs);
    }
  }

  TEST_CASE("property: ring axioms") {
    Gen gen(0x22);
    const std::vector<Symbol> syms{Symbol::x, Symbol::y};
    for (int i = 0; i < 30; ++i) {
      const int order = gen.integer(0, 5);
      auto make = [&] {
        std::vector<MPoly> c;
        for (int k = 0; k <= order; ++k) c.push_back(gen.mpoly(syms, 2, 2));
        return PowerSeries(order, c);
      };
      const PowerSeries f = make();
      const PowerSeries g = make();
      const PowerSeries h = make();
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
    }
  }
}
