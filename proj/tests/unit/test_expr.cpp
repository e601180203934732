#include "doctest.h"

#include "semistar/expr.hpp"

using namespace semistar;

TEST_CASE("expression parser shapes") {
  Expr e = parse_expression("a(d, budget=2, aux=[ideal(X, Y)])");
  CHECK(e.kind == Expr::Kind::Call);
  CHECK(e.args.size() == 1);
  REQUIRE(e.kwargs.size() == 2);
  CHECK(e.kwargs[1].second.kind == Expr::Kind::List);

  Expr p = parse_expression("X^2 - 3*Y");
  CHECK(p.kind == Expr::Kind::Binary);
  CHECK(p.text == "-");

  CHECK_THROWS_AS(parse_expression("ideal(X,"), ParseError);
  CHECK_THROWS_AS(parse_expression("X $ Y"), ParseError);
  try {
    parse_expression("X + )");
  } catch (const ParseError& err) {
    CHECK(err.position == 4);
  }
}

TEST_CASE("environment on the local plane") {
  Environment env(parse_domain("Q[X,Y]_(X,Y)"));
  const auto& dom = *env.domain();
  FractionalIdeal i = env.ideal("ideal(X^2, Y^2)");
  CHECK(dom.contains(env.ideal("ideal(X, Y)^2"), env.element("X*Y")));
  CHECK_FALSE(dom.contains(i, env.element("X*Y")));
  StarPtr a = env.op("a(d, budget=2)");
  CHECK(a->member(i, env.element("X*Y")));
  CHECK(env.op("v")->member(env.ideal("ideal(X^2, X*Y)"), env.element("X")));
  CHECK(env.element("(X+1)/(1+X)") == dom.constant(1));
  CHECK(dom.equal(env.ideal("frac(ideal(X), Y)"), dom.scale(env.ideal("ideal(X)"), dom.constant(1) / env.element("Y"))));

  env.bind("P", env.eval("prime(X)"));
  CHECK(env.op("spectral([P])")->member(env.ideal("ideal(X*Y)"), env.element("X")));
  CHECK_THROWS_AS(env.eval("Z"), ParseError);
  CHECK_THROWS_AS(env.eval("ideal(X) - ideal(Y)"), ParseError);

  RationalFunctionElem z = env.rational_function("X*Y/(X^2 + Y^2*X†)");
  CHECK(z.f.to_string(dom) == "X*Y");
  CHECK(z.g.to_string(dom) == "X^2 + Y^2*X†");
  CHECK(same_function(z, env.rational_function("X*Y/(X^2 + Y^2*Xdag)")));

  ValuationSpec w = env.valuation("weight(1, 2)");
  (void)w;
  CHECK(env.op("valfam([lex([1,0],[0,1])], primes=[Y, X-Y], excluded=[X], cofinite=1)")->kind() != "");
}

TEST_CASE("domain shorthands") {
  CHECK(parse_domain("Z")->format(parse_domain("Z")->constant(7)) == "7");
  CHECK(parse_domain("Z_(5)")->is_unit(parse_domain("Z_(5)")->constant(3)));
  Environment q(parse_domain("Z[sqrt(-3)]"));
  CHECK(q.domain()->contains(q.domain()->unit_ideal(), q.element("4/(1+w)")) ==
        q.domain()->contains(q.domain()->unit_ideal(), q.element("1 - w")));
  CHECK_NOTHROW(parse_domain("Q[X,Y]_(X)"));
  CHECK_NOTHROW(parse_domain("Q[X,Y]"));
  CHECK_THROWS(parse_domain("R[X]"));
}
