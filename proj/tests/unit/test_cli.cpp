#include <doctest.h>

#include <json.hpp>

#include "commands.hpp"
#include "expr.hpp"
#include "qabel/abel.hpp"
#include "qabel/qcomb.hpp"
#include "support/generators.hpp"

using namespace qabel;
using namespace qabel::cli;
using qabel::test::Gen;

namespace {

MPoly eval(std::string_view text) { return eval_expr(parse_expr(text)); }

const MPoly x = MPoly::var(Symbol::x);
const MPoly a = MPoly::var(Symbol::a);
const QRat q = QRat::q();

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("spec examples for the parser") {
    CHECK(to_sexpr(parse_expr("x^2 + q*a")) == "(+ (^ x 2) (* q a))");
    CHECK(to_sexpr(parse_expr("qbinom(4,2)")) == "(qbinom 4 2)");
    try {
      parse_expr("x +");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.offset() == 3);
      CHECK_FALSE(e.expected().empty());
    }
  }

  TEST_CASE("precedence and associativity") {
    CHECK(to_sexpr(parse_expr("1-2-3")) == "(- (- 1 2) 3)");
    CHECK(to_sexpr(parse_expr("x/2/q")) == "(/ (/ x 2) q)");
    CHECK(to_sexpr(parse_expr("-x^2")) == "(- (^ x 2))");
    CHECK(to_sexpr(parse_expr("2*-a")) == "(* 2 (- a))");
    CHECK(to_sexpr(parse_expr(" ( x + y ) * t ")) == "(* (+ x y) t)");
  }

  TEST_CASE("parser errors") {
    CHECK_THROWS_AS(parse_expr(""), SyntaxError);
    CHECK_THROWS_AS(parse_expr("x y"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("(x"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("z"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("x^-1"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("foo(1)"), UnknownFunction);
    CHECK_THROWS_AS(parse_expr("qbinom(1)"), ArityError);
    CHECK_THROWS_AS(parse_expr("G(1,2)"), ArityError);
  }

  TEST_CASE("spec examples for evaluation") {
    CHECK(eval("G(2)") == abel_poly(FamilyId::G, 2));
    CHECK(eval("qnum(3)*x") == qint(3) * x);
    CHECK(eval("x/(1-q)") == x * (QRat(1) / (QRat(1) - q)));
    CHECK_THROWS_AS(eval("1/x"), NonScalarDenominator);
    CHECK_THROWS_AS(eval("x/(q-q)"), DivisionByZero);
    CHECK(eval("qfac(3)") == MPoly(qfac(3)));
    CHECK(eval("qbinom(4,2)") == MPoly(qbinom(4, 2)));
    CHECK(eval("qbinom(4,7)").is_zero());
    CHECK(eval("qpoch(a,2)") == qpoch(a, 2));
    CHECK(eval("A(2,x,a,0)") == subst(abel_poly(FamilyId::A, 2), Symbol::b, MPoly()));
    CHECK(eval("G(2,a,x,b)") == subst(abel_poly(FamilyId::G, 2), {{Symbol::x, a}, {Symbol::a, x}}));
    CHECK_THROWS_AS(eval("qnum(x)"), InvalidArgument);
    CHECK_THROWS_AS(eval("qnum(0-1)"), InvalidArgument);
  }

  TEST_CASE("property: rendering parses back to the same polynomial") {
    Gen gen(0x51);
    const std::vector<Symbol> syms{Symbol::x, Symbol::y, Symbol::a, Symbol::b, Symbol::t};
    for (int i = 0; i < 100; ++i) {
      const MPoly p = gen.mpoly(syms, 4, 3);
      CAPTURE(p.to_string());
      CHECK(eval(p.to_string()) == p);
    }
  }

  TEST_CASE("golden outputs") {
    const auto poly = run_command({"poly", "G", "2"});
    CHECK(poly.code == kExitOk);
    CHECK(poly.out == "q*x^2 - (q + 1)*a*x - (q + 1)*b*x + (q + 1)*a*b + b^2\n");

    const auto ev = run_command({"eval", "qnum(3)", "--q", "2"});
    CHECK(ev.code == kExitOk);
    CHECK(ev.out == "7\n");

    const auto ev2 = run_command({"eval", "x+a", "--q", "2", "--x", "1", "--a", "1/2"});
    CHECK(ev2.out == "3/2\n");

    const auto ex = run_command({"expand", "x^2"});
    CHECK(ex.code == kExitOk);
    CHECK(ex.out == "0: b^2\n1: ((q + 1)/q)*a + ((q + 1)/q)*b\n2: 1/q\n");

    const auto lg = run_command({"lagrange", "--mode", "plain", "--f", "z", "--terms", "2"});
    CHECK(lg.code == kExitOk);
    CHECK(lg.out == "0: 0\n1: 1\n2: -(q + 1)*a\n");
  }

  TEST_CASE("verify reports") {
    const auto text = run_command({"verify", "--id", "1.3", "--max-n", "4"});
    CHECK(text.code == kExitOk);
    std::size_t passes = 0;
    for (std::size_t pos = 0; (pos = text.out.find("PASS", pos)) != std::string::npos; ++pos) ++passes;
    CHECK(passes == 5);
    CHECK(text.out.find("5 checks, 5 passed, 0 failed") != std::string::npos);

    const auto js = run_command({"verify", "--id", "2.2", "--max-n", "2", "--json"});
    CHECK(js.code == kExitOk);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc.at("total") == 6);
    CHECK(doc.at("passed") == 6);
    CHECK(doc.at("failed") == 0);
    const auto& first = doc.at("entries").at(0);
    CHECK(first.at("identity") == "2.2");
    CHECK(first.at("params").at("n") == 0);
    CHECK(first.at("status") == "pass");
    CHECK(first.at("difference").is_null());
    CHECK(first.at("elapsed_ms").is_number());
  }

  TEST_CASE("failed checks exit 1 and carry a difference") {
    const auto r = run_command({"verify", "--id", "limit-A", "--max-n", "3", "--json", "--mutate", "A:2"});
    CHECK(r.code == kExitCheckFailed);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("failed") == 1);
    for (const auto& e : doc.at("entries")) {
      if (e.at("status") == "fail") CHECK(e.at("difference").is_string());
    }
    CHECK(run_command({"verify", "--id", "limit-A", "--max-n", "3", "--mutate", "A:2"}).out.find("FAIL") !=
          std::string::npos);
  }

  TEST_CASE("usage errors exit 2") {
    for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
             {},
             {"bogus"},
             {"verify", "--id", "9.9"},
             {"verify", "--order", "99"},
             {"verify", "--mutate", "Q:1"},
             {"poly", "Z", "2"},
             {"poly", "G", "-1"},
             {"eval", "x +", "--q", "2"},
             {"eval", "1/(1-q)", "--q", "1"},
             {"eval", "x", "--q", "1"},
             {"lagrange", "--mode", "odd", "--f", "z"},
             {"lagrange", "--f", "unknown"},
             {"expand", "1/x"}}) {
      CAPTURE(args.empty() ? std::string("<none>") : args.front());
      const auto r = run_command(args);
      CHECK(r.code == kExitUsage);
      CHECK_FALSE(r.err.empty());
    }
    const auto help = run_command({"--help"});
    CHECK(help.code == kExitOk);
  }

  TEST_CASE("list shows every identity") {
    const auto r = run_command({"list"});
    CHECK(r.code == kExitOk);
    for (const auto& info : identity_catalog()) CHECK(r.out.find(info.id) != std::string::npos);
  }
}
