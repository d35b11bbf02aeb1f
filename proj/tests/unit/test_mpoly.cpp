#include <doctest.h>

#include "qabel/abel.hpp"
#include "qabel/errors.hpp"
#include "qabel/mpoly.hpp"
#include "qabel/qcomb.hpp"
#include "support/generators.hpp"

using namespace qabel;
using qabel::test::Gen;

namespace {

const MPoly x = MPoly::var(Symbol::x);
const MPoly y = MPoly::var(Symbol::y);
const MPoly a = MPoly::var(Symbol::a);
const MPoly b = MPoly::var(Symbol::b);
const QRat q = QRat::q();

const std::vector<Symbol> kSymbols{Symbol::x, Symbol::y, Symbol::a, Symbol::b, Symbol::t};

}  // namespace

TEST_SUITE("mpoly") {
  TEST_CASE("symbols are closed") {
    CHECK(symbol_from_name("x") == Symbol::x);
    CHECK(symbol_from_name("t") == Symbol::t);
    CHECK_FALSE(symbol_from_name("z").has_value());
    CHECK_FALSE(symbol_from_name("q").has_value());
    CHECK(symbol_name(Symbol::b) == "b");
  }

  TEST_CASE("spec examples for arithmetic") {
    CHECK((x + a) * (x - a) == pow(x, 2) - pow(a, 2));
    const MPoly a2 = (x - b) * (q * x - (QRat(1) + q) * a - q * q * b);
    const MPoly expected = q * pow(x, 2) - (QRat(1) + q) * a * x - (q + q * q) * b * x +
                           (QRat(1) + q) * a * b + q * q * pow(b, 2);
    CHECK(a2 == expected);
    CHECK(a2 == abel_poly(FamilyId::A, 2));
    CHECK((MPoly() * (x + y)).is_zero());
  }

  TEST_CASE("spec examples for substitution") {
    CHECK(subst((QRat(1) + q) * x, Symbol::x, (a + b) * QRat::q_pow(-1)) ==
          (QRat(1) + q) * (a + b) * QRat::q_pow(-1));
    CHECK(subst(qprod(y, x, 3, ProdSign::plus), Symbol::y, MPoly()) == QRat::q_pow(3) * pow(x, 3));
    CHECK(subst(abel_poly(FamilyId::A, 2), Symbol::a, a + (QRat(1) - q) * b) ==
          abel_poly(FamilyId::G, 2));
  }

  TEST_CASE("simultaneous substitution does not cascade") {
    const MPoly p = x * y;
    CHECK(subst(p, {{Symbol::x, y}, {Symbol::y, x}}) == x * y);
    CHECK(subst(subst(p, Symbol::x, y), Symbol::y, x) == x * x);
  }

  TEST_CASE("spec examples for eval_q1") {
    CHECK(eval_q1(abel_poly(FamilyId::A, 2)) == (x - b) * (x - QRat(2) * a - b));
    CHECK(eval_q1(QRat(1) + q + q * q) == MPoly(3));
    CHECK_THROWS_AS(eval_q1(x * (QRat(1) / (QRat(1) - q))), PoleAtPoint);
  }

  TEST_CASE("spec examples for coeffs_in") {
    const auto g2 = coeffs_in(abel_poly(FamilyId::G, 2), Symbol::x);
    REQUIRE(g2.size() == 3);
    CHECK(g2[0] == (QRat(1) + q) * a * b + pow(b, 2));
    CHECK(g2[1] == -(QRat(1) + q) * (a + b));
    CHECK(g2[2] == MPoly(q));
    CHECK(coeffs_in(MPoly(7), Symbol::x) == std::vector<MPoly>{MPoly(7)});
    CHECK(coeffs_in(pow(x, 3), Symbol::x) == std::vector<MPoly>{0, 0, 0, 1});
  }

  TEST_CASE("term order is graded lex with x > y > a > b > t") {
    const MPoly p = MPoly::var(Symbol::t) + b + a + y + x + x * a + pow(y, 2) + pow(x, 2);
    std::vector<std::string> order;
    for (const auto& [m, c] : p.terms()) order.push_back(m.to_string());
    CHECK(order == std::vector<std::string>{"x^2", "a*x", "y^2", "x", "y", "a", "b", "t"});
  }

  TEST_CASE("rendering") {
    CHECK(MPoly().to_string() == "0");
    CHECK(MPoly(-2).to_string() == "-2");
    CHECK((x - y).to_string() == "x - y");
    CHECK((-x + QRat(1)).to_string() == "-x + 1");
    CHECK(((QRat(1) + q) * a * x).to_string() == "(q + 1)*a*x");
    CHECK((q * pow(x, 2)).to_string() == "q*x^2");
    CHECK((MPoly(QRat(1) + q)).to_string() == "(q + 1)");
    CHECK((x * QRat::q_pow(-1)).to_string() == "(1/q)*x");
    CHECK((x * QRat(mpq_class(-3, 2))).to_string() == "-3/2*x");
    CHECK(abel_poly(FamilyId::G, 2).to_string() ==
          "q*x^2 - (q + 1)*a*x - (q + 1)*b*x + (q + 1)*a*b + b^2");
  }

  TEST_CASE("eval_at") {
    const MPoly p = x * y + q;
    CHECK(eval_at(p, 2, {{Symbol::x, 3}, {Symbol::y, mpq_class(1, 3)}}) == 3);
    CHECK_THROWS_AS(eval_at(p, 2, {{Symbol::x, 3}}), std::invalid_argument);
  }

  TEST_CASE("property: ring axioms") {
    Gen gen(0x11);
    for (int i = 0; i < 80; ++i) {
      const MPoly p = gen.mpoly(kSymbols, 4, 2);
      const MPoly r = gen.mpoly(kSymbols, 4, 2);
      const MPoly s = gen.mpoly(kSymbols, 4, 2);
      CHECK(p + r == r + p);
      CHECK(p * r == r * p);
      CHECK((p * r) * s == p * (r * s));
      CHECK(p * (r + s) == p * r + p * s);
      CHECK((p - p).is_zero());
      CHECK(pow(p, 3) == p * p * p);
    }
  }

  TEST_CASE("property: substitution is a ring homomorphism") {
    Gen gen(0x12);
    for (int i = 0; i < 60; ++i) {
      const MPoly p = gen.mpoly(kSymbols, 4, 2);
      const MPoly r = gen.mpoly(kSymbols, 4, 2);
      const MPoly v = gen.mpoly(kSymbols, 2, 1);
      const Symbol s = kSymbols[static_cast<std::size_t>(gen.integer(0, 4))];
      CHECK(subst(p * r, s, v) == subst(p, s, v) * subst(r, s, v));
      CHECK(subst(p + r, s, v) == subst(p, s, v) + subst(r, s, v));
    }
  }

  TEST_CASE("property: coeffs_in recombines") {
    Gen gen(0x13);
    for (int i = 0; i < 60; ++i) {
      const MPoly p = gen.mpoly(kSymbols, 6, 3);
      for (Symbol s : kSymbols) {
        const auto layers = coeffs_in(p, s);
        for (const auto& layer : layers) CHECK_FALSE(layer.contains(s));
        CHECK(from_coeffs(layers, s) == p);
      }
    }
  }

  TEST_CASE("property: eval_q1 is a ring homomorphism") {
    Gen gen(0x14);
    for (int i = 0; i < 60; ++i) {
      MPoly p;
      MPoly r;
      for (int k = 0; k < 3; ++k) {
        p += MPoly::term(QRat(gen.qpoly(3)), gen.monomial(kSymbols, 2));
        r += MPoly::term(QRat(gen.qpoly(3)), gen.monomial(kSymbols, 2));
      }
      CHECK(eval_q1(p * r) == eval_q1(p) * eval_q1(r));
    }
  }
}
