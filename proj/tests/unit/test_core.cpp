#include "doctest.h"

#include "semistar/groebner.hpp"

#include <random>

using namespace semistar;

namespace {

const Poly X = Poly::variable(2, 0);
const Poly Y = Poly::variable(2, 1);
Poly c(long v) { return Poly::constant(2, v); }
PolyIdeal ideal(std::vector<Poly> g) { return PolyIdeal(2, std::move(g)); }

// Monomial-only brute force: is x^e in the monomial ideal generated by gens?
bool monomial_in(const std::vector<Exponent>& gens, const Exponent& e) {
  for (const auto& g : gens)
    if (divides(g, e)) return true;
  return false;
}

Poly random_poly(std::mt19937_64& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-3, 3);
  Poly p(2);
  for (int i = 0; i < terms; ++i) {
    int a = deg(rng), b = deg(rng);
    if (a + b > max_deg) continue;
    p.add_term({a, b}, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("monomial orders are total and multiplicative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(0, 4);
  for (auto order : {MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::elimination(1)}) {
    for (int i = 0; i < 200; ++i) {
      Exponent u{d(rng), d(rng), d(rng)}, v{d(rng), d(rng), d(rng)}, w{d(rng), d(rng), d(rng)};
      int c1 = order.compare(u, v);
      CHECK(c1 == -order.compare(v, u));
      if (u != v) CHECK(c1 != 0);
      if (c1 < 0) CHECK(order.compare(exponent_add(u, w), exponent_add(v, w)) < 0);
    }
  }
}

TEST_CASE("groebner_basis examples") {
  SUBCASE("already reduced") {
    std::vector<Poly> g{X};
    auto gb = groebner_basis(g, MonomialOrder::lex());
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == X);
  }
  SUBCASE("linear elimination") {
    std::vector<Poly> g{X + Y, X - Y};
    auto gb = groebner_basis(g, MonomialOrder::degrevlex());
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == X);
    CHECK(gb[1] == Y);
  }
  SUBCASE("monomial ideal is its own basis") {
    std::vector<Poly> g{X * X, X * Y, Y * Y};
    auto gb = groebner_basis(g, MonomialOrder::degrevlex());
    CHECK(gb.size() == 3);
    CHECK(gb[0] == X * X);
    CHECK(gb[1] == X * Y);
    CHECK(gb[2] == Y * Y);
  }
  SUBCASE("errors") {
    std::vector<Poly> mixed{X, Poly::variable(3, 0)};
    CHECK_THROWS_AS(groebner_basis(mixed, MonomialOrder::degrevlex()), std::invalid_argument);
    std::vector<Poly> zeros{Poly(2)};
    CHECK_THROWS_AS(groebner_basis(zeros, MonomialOrder::degrevlex()), std::invalid_argument);
  }
  SUBCASE("unit ideal") {
    std::vector<Poly> g{X * Y - c(1), X};
    auto gb = groebner_basis(g, MonomialOrder::degrevlex());
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == c(1));
  }
}

TEST_CASE("groebner basis generates the same ideal (two-way membership, sampled)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) {
      Poly p = random_poly(rng, 3, 4);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    for (auto order : {MonomialOrder::degrevlex(), MonomialOrder::lex()}) {
      auto gb = groebner_basis(gens, order);
      PolyIdeal by_gens(2, gens);
      for (const auto& g : gens) CHECK(normal_form(g, gb, order).is_zero());
      for (const auto& b : gb) {
        CHECK(by_gens.contains(b));
      }
      CHECK(gb == groebner_basis(gens, order));  // deterministic
    }
  }
}

TEST_CASE("ideal_membership examples") {
  CHECK(ideal_membership(Poly(2), ideal({X})));
  CHECK(ideal_membership(X * X * X, ideal({X * X})));
  CHECK_FALSE(ideal_membership(X * Y, ideal({X * X, Y * Y})));
}

TEST_CASE("ideal_combine examples") {
  auto s = ideal_combine(ideal({X}), ideal({Y}), CombineMode::Sum);
  CHECK(s.equals(ideal({X, Y})));
  auto p = ideal_combine(ideal({X}), ideal({Y}), CombineMode::Product);
  CHECK(p.equals(ideal({X * Y})));
  auto sq = ideal_combine(ideal({X, Y}), ideal({X, Y}), CombineMode::Product);
  CHECK(sq.equals(ideal({X * X, X * Y, Y * Y})));
}

TEST_CASE("ideal_intersect examples") {
  CHECK(ideal_intersect(ideal({X}), ideal({X, Y})).equals(ideal({X})));
  // Monomial oracle: x^a y^b lies in (X) ∩ (Y) iff a >= 1 and b >= 1.
  auto i = ideal_intersect(ideal({X}), ideal({Y}));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(i.contains(Poly::monomial({a, b}, 1)) == (a >= 1 && b >= 1));
  CHECK(i.equals(ideal({X * Y})));
  auto self = ideal({X * X + Y, X * Y});
  CHECK(ideal_intersect(self, self).equals(self));
}

TEST_CASE("ideal_colon examples") {
  auto i = ideal({X * X + Y, X * Y});
  CHECK(ideal_colon(i, ideal({c(1)})).equals(i));
  CHECK(ideal_colon(ideal({X * X, X * Y}), ideal({X})).equals(ideal({X, Y})));
  CHECK(ideal_colon(ideal({X}), ideal({Y})).equals(ideal({X})));
  CHECK_THROWS(ideal_colon(ideal({X}), Poly(2)));
}

TEST_CASE("ideal_saturate examples") {
  CHECK(ideal_saturate(ideal({X * Y}), Y).equals(ideal({X})));
  auto i = ideal({X * X + Y});
  CHECK(ideal_saturate(i, c(1)).equals(i));
  CHECK(ideal_saturate(ideal({X * X, X * Y}), Y).equals(ideal({X})));
}

TEST_CASE("intersection, colon and saturation invariants (sampled)") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    PolyIdeal i = ideal({random_poly(rng, 2, 3) + X * X, X * Y});
    PolyIdeal j = ideal({random_poly(rng, 2, 3) + Y, X});
    auto inter = ideal_intersect(i, j);
    CHECK(i.contains(inter));
    CHECK(j.contains(inter));
    auto col = ideal_colon(i, j);
    CHECK(i.contains(ideal_combine(col, j, CombineMode::Product)));
    auto sat = ideal_saturate(i, Y);
    CHECK(ideal_saturate(sat, Y).equals(sat));
  }
}

TEST_CASE("exact division and gcd") {
  auto q = exact_divide((X + Y) * (X - Y), X - Y);
  REQUIRE(q);
  CHECK(*q == X + Y);
  CHECK_FALSE(exact_divide(X * X + Y, X));
  CHECK(poly_gcd(X * X * Y, X * Y * Y) == X * Y);
  CHECK(poly_gcd((X + Y) * X, (X + Y) * Y) == X + Y);
  CHECK(poly_gcd(X, Y) == c(1));
  std::vector<Poly> three{X * X * (X - Y), X * (X - Y) * Y, X * (X - Y) * (c(1) + X)};
  CHECK(poly_gcd(three) == X * X - X * Y);
}

TEST_CASE("gcd against the principal-intersection oracle (sampled)") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Poly r = random_poly(rng, 2, 3) + X;
    Poly p = random_poly(rng, 2, 3) + Y * Y, q = random_poly(rng, 2, 3) + c(1);
    Poly a = r * p, b = r * q;
    Poly g = poly_gcd(a, b);
    auto pa = exact_divide(a, g), pb = exact_divide(b, g);
    REQUIRE(pa);
    REQUIRE(pb);
    CHECK(exact_divide(g, r.monic(MonomialOrder::degrevlex())));
    // Cofactors are coprime iff their principal ideals intersect in the product.
    CHECK(ideal_intersect(ideal({*pa}), ideal({*pb})).equals(ideal({*pa * *pb})));
  }
}

TEST_CASE("closed-form bases skip Buchberger") {
  reset_groebner_stats();
  auto gb = groebner_basis(std::vector<Poly>{X * X * Y, X * Y * Y * Y, X * X * Y * Y, Y * Y * Y * Y}, MonomialOrder::degrevlex());
  CHECK(gb == std::vector<Poly>{X * Y * Y * Y, Y * Y * Y * Y, X * X * Y});
  CHECK(groebner_basis(std::vector<Poly>{X * 3 + Y}, MonomialOrder::degrevlex()) ==
        std::vector<Poly>{X + Y * Rational(1, 3)});
  CHECK(ideal_intersect(ideal({X * X, Y}), ideal({X * Y * Y})).equals(ideal({X * X * Y * Y, X * Y * Y})));
  CHECK(groebner_stats().instances == 0);
}

TEST_CASE("colon with a common factor matches the elimination route (sampled)") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    Poly r = X + c(1) + random_poly(rng, 1, 2);
    if (r.is_constant()) continue;
    PolyIdeal i = ideal({r * (random_poly(rng, 2, 3) + X * X), r * X * Y});
    Poly g = (X + c(1)) * (random_poly(rng, 1, 2) + Y);
    PolyIdeal inter = ideal_intersect(i, ideal({g}));
    std::vector<Poly> direct;
    for (const auto& h : inter.generators()) direct.push_back(*exact_divide(h, g));
    CHECK(ideal_colon(i, g).equals(ideal(direct)));
  }
}

TEST_CASE("content_ideal reads coefficients") {
  // f = X1^2 + X2^2 * T in Q[X1, X2, T]
  Poly x1 = Poly::variable(3, 0), x2 = Poly::variable(3, 1), t = Poly::variable(3, 2);
  auto ci = content_ideal(x1 * x1 + x2 * x2 * t, 2);
  CHECK(ci.equals(PolyIdeal(2, {X * X, Y * Y})));
  CHECK_THROWS(content_ideal(Poly(3), 2));
}

TEST_CASE("newton_closure_monomial examples") {
  CHECK(newton_closure_monomial(ideal({X})).equals(ideal({X})));
  auto c22 = newton_closure_monomial(ideal({X * X, Y * Y}));
  CHECK(c22.equals(ideal({X * X, X * Y, Y * Y})));
  CHECK(c22.generators().size() == 3);
  // integral equation (XY)^2 - X^2 Y^2 = 0 certifies XY.
  auto c33 = newton_closure_monomial(ideal({X * X * X, Y * Y * Y}));
  CHECK(c33.equals(ideal({X * X * X, X * X * Y, X * Y * Y, Y * Y * Y})));
  CHECK_THROWS_AS(newton_closure_monomial(ideal({X + Y})), std::invalid_argument);
}

TEST_CASE("newton closure is a closure operator on sampled monomial ideals") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, 4);
  auto brute = [](const PolyIdeal& i, const Exponent& e) { return i.contains(Poly::monomial(e, 1)); };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> g;
    for (int k = 0; k < 3; ++k) g.push_back(Poly::monomial({d(rng), d(rng)}, 1));
    PolyIdeal i(2, g);
    auto cl = newton_closure_monomial(i);
    CHECK(cl.contains(i));                                   // extensive
    CHECK(newton_closure_monomial(cl).equals(cl));           // idempotent
    PolyIdeal bigger = ideal_combine(i, ideal({Poly::monomial({d(rng), d(rng)}, 1)}), CombineMode::Sum);
    CHECK(newton_closure_monomial(bigger).contains(cl));     // monotone
    // Integrality oracle: x^e in the closure implies (x^e)^k in I^k for k = 2 or smaller ideal.
    std::vector<Exponent> exps;
    for (const auto& p : i.generators()) exps.push_back(p.terms().begin()->first);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        Exponent e{a, b};
        if (monomial_in(exps, e)) CHECK(brute(cl, e));
      }
  }
}
