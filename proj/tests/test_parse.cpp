#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coqe/equiv.hpp"
#include "coqe/parse.hpp"

using namespace coqe;

TEST_CASE("grammar basics") {
  Expr k = Expr::symbol("k");
  Expr x = Expr::symbol("x");
  Expr e = parse("k^2 * exp(2*x) / 2");
  CHECK(e == Expr(Rational(1, 2)) * Expr::pow(k, Rational(2)) *
                 Expr::exp(Expr(2) * x));
  CHECK(e.kind() == Kind::Product);
  CHECK(parse("sqrt(2)") == Expr::pow(Expr(2), Rational(1, 2)));
  CHECK(parse("exp(x)*exp(x)") == Expr::exp(Expr(2) * x));
  CHECK(parse("1/2") == Expr(Rational(1, 2)));
  CHECK(parse("0.25") == Expr(Rational(1, 4)));
  CHECK(parse("2 - 3 - 4") == Expr(-5));
  CHECK(parse("2/3/4") == Expr(Rational(1, 6)));
}

TEST_CASE("precedence: caret binds tighter than unary minus") {
  Expr x = Expr::symbol("x");
  CHECK(parse("-x^2") == -Expr::pow(x, Rational(2)));
  CHECK(parse("(-x)^2") == Expr::pow(x, Rational(2)));
  CHECK(parse("x^-2") == Expr::pow(x, Rational(-2)));
  CHECK(parse("-2^2") == Expr(-4));
}

TEST_CASE("tan desugars to sin over cos") {
  Expr x = Expr::symbol("x");
  CHECK(parse("tan(x)") == Expr::sin(x) / Expr::cos(x));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_WITH_AS(parse("1 + $"), doctest::Contains("byte 4"), Error);
  CHECK_THROWS_WITH_AS(parse("foo(x)"), doctest::Contains("unknown function"), Error);
  CHECK_THROWS_WITH_AS(parse("1.2.3"), doctest::Contains("malformed number"), Error);
  CHECK_THROWS_WITH_AS(parse("x^y"), doctest::Contains("rational constant"), Error);
  CHECK_THROWS_WITH_AS(parse("1/0"), doctest::Contains("division by zero"), Error);
  CHECK_THROWS_AS(parse("(x"), Error);
  CHECK_THROWS_AS(parse(""), Error);
  CHECK_THROWS_AS(parse("2 x"), Error);  // juxtaposition is not multiplication
}

TEST_CASE("symbol table restricts identifiers") {
  SymbolTable tab;
  tab["x"] = Expr::symbol("x");
  tab["k"] = Expr::symbol("k", true);
  CHECK(parse("k*x", tab) == Expr::symbol("k", true) * Expr::symbol("x"));
  CHECK_THROWS_WITH_AS(parse("w + x", tab), doctest::Contains("unknown symbol"), Error);
}

TEST_CASE("print/parse round trip on random trees") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3), op(0, 6);
  auto leaf = [&]() {
    int c = op(rng);
    if (c < 3) return Expr(Rational(num(rng), den(rng)));
    return c < 5 ? Expr::symbol("x") : Expr::symbol("y");
  };
  for (int i = 0; i < 300; ++i) {
    Expr e = leaf();
    for (int step = 0; step < 5; ++step) {
      switch (op(rng)) {
        case 0: e = e + leaf(); break;
        case 1: e = e - leaf(); break;
        case 2: e = e * leaf(); break;
        case 3: {
          Expr d = leaf();
          if (!d.is_zero_literal()) e = e / d;
          break;
        }
        case 4: e = Expr::pow(e, Rational(std::abs(num(rng)) % 3 + 2)); break;
        case 5: e = Expr::sin(e); break;
        default: e = Expr::cos(e); break;
      }
    }
    Expr back = parse(e.str());
    CHECK(back == e);
  }
}
