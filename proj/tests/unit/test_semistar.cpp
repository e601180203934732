#include "doctest.h"

#include "semistar/checks.hpp"
#include "semistar/semistar.hpp"

using namespace semistar;

namespace {

DomainPtr local2() {
  DomainSpec s;
  s.kind = DomainKind::PolyLocal;
  s.variables = {"X", "Y"};
  s.center = CenterKind::Origin;
  return make_domain(s);
}

DomainPtr quad(long d) {
  DomainSpec s;
  s.kind = DomainKind::QuadraticOrder;
  s.d = d;
  return make_domain(s);
}

DomainPtr integers() {
  DomainSpec s;
  s.kind = DomainKind::Integers;
  return make_domain(s);
}

const Poly PX = Poly::variable(2, 0);
const Poly PY = Poly::variable(2, 1);
Elem rf(const Poly& n, const Poly& d = Poly::constant(2, 1)) { return make_ratfunc(n, d); }
Elem q(long a, long b = 0) { return QuadNum{a, b, -3}; }

struct Fixture {
  DomainPtr d = local2();
  Elem x = rf(PX), y = rf(PY), one = rf(Poly::constant(2, 1));
  FractionalIdeal n = d->make_ideal({x, y});
  FractionalIdeal x2xy = d->make_ideal({x * x, x * y});
  FractionalIdeal x2y2 = d->make_ideal({x * x, y * y});
  PrimeIdeal px = d->make_prime({x}, false, "(X)");
  PrimeIdeal py = d->make_prime({y}, false, "(Y)");
  PrimeIdeal pxy = d->make_prime({x - y}, false, "(X-Y)");
  PrimeIdeal pn = d->make_prime({x, y}, false, "N");
};

bool same(const DomainPtr& d, const ClosureResult& r, const FractionalIdeal& e) {
  return r.oracle.presentation && d->equal(*r.oracle.presentation, e);
}

}  // namespace

TEST_CASE("built-in closures on Q[X,Y]_(X,Y)") {
  Fixture f;
  CHECK(same(f.d, make_identity(f.d)->apply(f.x2y2), f.x2y2));
  CHECK(same(f.d, make_v(f.d)->apply(f.n), f.d->unit_ideal()));
  auto s53 = make_ex53(f.d);
  CHECK(same(f.d, s53->apply(f.x2xy), f.x2xy));
  CHECK(same(f.d, s53->apply(f.n), f.n));
  CHECK(same(f.d, s53->apply(f.d->principal(f.x * f.y)), f.d->principal(f.x * f.y)));
  // (★1): scaling commutes with v.
  auto v = make_v(f.d);
  auto scaled = f.d->scale(f.x2xy, f.one / f.x);
  REQUIRE(v->apply(scaled).oracle.presentation);
  CHECK(f.d->equal(*v->apply(scaled).oracle.presentation, f.d->scale(*v->apply(f.x2xy).oracle.presentation, f.one / f.x)));
  CHECK(make_trivial(f.d)->apply(f.n).oracle.whole_field);
}

TEST_CASE("v on Z[√-3] keeps the conductor ideal") {
  auto o = quad(-3);
  auto p2 = o->make_ideal({q(2), q(1, 1)});
  CHECK(same(o, make_v(o)->apply(p2), p2));
}

TEST_CASE("finite-type closures and names") {
  Fixture f;
  auto t = make_t(f.d);
  CHECK(t->name() == "t");
  CHECK(t->flags().finite_type);
  CHECK(same(f.d, t->apply(f.x2xy), *make_v(f.d)->apply(f.x2xy).oracle.presentation));
  auto d = make_identity(f.d);
  CHECK(finite_type_closure(d) == d);
  auto sp = make_spectral(f.d, {f.px, f.py});
  CHECK(finite_type_closure(sp) == sp);
}

TEST_CASE("spectral and tilde operations") {
  Fixture f;
  auto tilde53 = tilde_of(make_ex53(f.d), {f.pn});
  for (const auto& e : {f.x2xy, f.x2y2, f.n}) CHECK(same(f.d, tilde53->apply(e), e));

  auto ext = make_extension(f.d, f.px);
  auto t_ext = tilde_of(ext, {f.px});
  for (const Elem& z : {f.x / f.y, f.x, f.one / f.y, f.one, f.one / f.x})
    CHECK(ext->member(f.x2xy, z) == t_ext->member(f.x2xy, z));

  auto tv = tilde_of(make_v(f.d), {f.px, f.py, f.pxy});
  auto r = tv->apply(f.x2xy);
  REQUIRE(r.contraction);
  CHECK(f.d->equal(*r.contraction, f.d->principal(f.x)));
  CHECK(r.oracle.member(f.x));
  CHECK_FALSE(r.oracle.member(f.one));
}

TEST_CASE("star_w membership") {
  Fixture f;
  auto wv = star_w_of(make_v(f.d));
  CHECK(wv->member(f.x2xy, f.x));
  CHECK(wv->member(f.d->unit_ideal(), f.one));
  CHECK_FALSE(wv->member(f.x2xy, f.one));
  auto wd = star_w_of(make_identity(f.d));
  CHECK_FALSE(wd->member(f.x2y2, f.x * f.y));
  CHECK(wd->member(f.x2y2, f.x * f.x));
}

TEST_CASE("star_w agrees with tilde over the listed height-one primes") {
  Fixture f;
  auto wv = star_w_of(make_v(f.d));
  auto tv = tilde_of(make_v(f.d), {f.px, f.py, f.pxy});
  // Inputs and probes only involve the listed primes.
  std::vector<FractionalIdeal> inputs{f.x2xy, f.x2y2, f.n, f.d->make_ideal({f.x * (f.x - f.y), f.y * (f.x - f.y)}),
                                      f.d->make_ideal({f.x * f.x, f.x * f.y, f.y * f.y * f.y})};
  for (const auto& e : inputs)
    for (const auto& z : probe_elements(*f.d, e, {f.x, f.y, f.x - f.y})) {
      INFO(f.d->format(e) << " " << f.d->format(z));
      CHECK(wv->member(e, z) == tv->member(e, z));
    }
}

TEST_CASE("star_a lower bounds") {
  Fixture f;
  auto d = make_identity(f.d);
  ABudget b;
  auto r = star_a_lower(d, f.x2y2, b);
  CHECK(r.oracle.member(f.x * f.y));
  CHECK(reverify_a_witnesses(d, f.x2y2, r));
  bool used_n = false;
  for (const auto& w : r.witnesses)
    if (f.d->equal(w.h, f.n)) used_n = true;
  CHECK(used_n);

  auto s53 = make_ex53(f.d);
  auto rn = star_a_lower(s53, f.n, b);
  CHECK(rn.oracle.member(f.one));
  CHECK(reverify_a_witnesses(s53, f.n, rn));

  ABudget pinned;
  pinned.upper = make_t(f.d);
  auto ra = star_a_lower(s53, f.x2xy, pinned);
  CHECK(ra.oracle.grade == Grade::Exact);
  CHECK(same(f.d, ra, f.d->principal(f.x)));
  auto r22 = star_a_lower(s53, f.x2y2, pinned);
  CHECK(r22.oracle.member(f.one));

  // A principal ideal of an integrally closed backend is its own ★_a closure.
  auto rp = star_a_lower(d, f.d->principal(f.x * f.y), b);
  CHECK(rp.oracle.member(f.x * f.y));
  CHECK_FALSE(rp.oracle.member(f.x));
}

TEST_CASE("star_a lower bound is monotone in the budget") {
  Fixture f;
  auto d = make_identity(f.d);
  ABudget small{1, {}, nullptr}, large{2, {f.n}, nullptr};
  auto e = f.d->make_ideal({f.x * f.x * f.x, f.y * f.y * f.y});
  auto r1 = star_a_lower(d, e, small), r2 = star_a_lower(d, e, large);
  for (const auto& z : probe_elements(*f.d, f.d->power(f.n, 3), {f.x, f.y}))
    if (r1.oracle.member(z)) CHECK(r2.oracle.member(z));
}

TEST_CASE("restriction to overrings") {
  Fixture f;
  auto d = make_identity(f.d);
  auto rd = restrict_to_overring(d, std::nullopt);
  CHECK(same(f.d, rd->apply(f.x2xy), f.x2xy));

  auto ext = make_extension(f.d, f.px);
  auto re = restrict_to_overring(ext, f.px);
  auto t = re->domain();
  CHECK(t->describe() == "Q[X,Y]_(X)");
  auto tx = t->principal(rf(PX));
  CHECK(same(t, re->apply(tx), tx));

  auto rv = restrict_to_overring(make_v(f.d), f.px);
  auto rtx = rv->apply(rv->domain()->principal(rf(PX)));
  CHECK(rtx.oracle.member(rf(PX)));
  CHECK_FALSE(rtx.oracle.member(rf(Poly::constant(2, 1))));
}

TEST_CASE("axiom suites") {
  AxiomPlan plan;
  plan.seed = 11;
  plan.samples = 100;
  auto o = quad(-3);
  for (const auto& line : check_axioms(make_v(o), plan)) {
    INFO(line.name << " " << line.counterexample);
    CHECK(line.passed);
  }
  for (const auto& line : check_axioms(make_identity(integers()), plan)) CHECK(line.passed);

  Fixture f;
  plan.samples = 30;
  auto lines = check_axioms(make_spectral(f.d, {f.px}), plan);
  for (const auto& line : lines) {
    INFO(line.name << " " << line.counterexample);
    CHECK(line.passed);
  }
  CHECK_FALSE(lines.back().skipped);
}

TEST_CASE("e.a.b. checks") {
  Fixture f;
  auto d = make_identity(f.d);
  auto n2 = f.d->power(f.n, 2);
  auto lines = check_eab(d, {{f.n, n2, f.x2y2}, {f.n, f.x2y2, f.x2y2}});
  REQUIRE(lines.size() == 2);
  CHECK_FALSE(lines[0].passed);
  CHECK(lines[0].counterexample.find("X*Y") != std::string::npos);
  CHECK(lines[1].passed);
}

TEST_CASE("ordering evidence") {
  Fixture f;
  std::vector<FractionalIdeal> samples{f.n, f.x2xy, f.x2y2, f.d->principal(f.x)};
  auto o = compare_ops(make_identity(f.d), make_v(f.d), samples);
  CHECK(o.verdict == "<=");
  CHECK_FALSE(o.witnesses.empty());

  ABudget pinned;
  pinned.upper = make_t(f.d);
  auto o2 = compare_ops(make_ex53(f.d), make_star_a(make_ex53(f.d), pinned), {f.x2xy});
  CHECK(o2.verdict == "<=");
  CHECK(o2.witnesses.front().find("X") != std::string::npos);
}

TEST_CASE("star-valuation overrings") {
  Fixture f;
  std::vector<FractionalIdeal> samples{f.d->principal(f.x), f.n, f.x2xy};
  auto ext = tilde_of(make_extension(f.d, f.px), {f.px});
  auto bad = is_star_valuation_overring(ValuationSpec::dvr_along(PY), ext, samples);
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness.find("X/Y") != std::string::npos);
  auto good = is_star_valuation_overring(ValuationSpec::monomial_weight({1, 0}), ext, samples);
  CHECK(good.holds);
  CHECK(is_star_valuation_overring(ValuationSpec::dvr_along(PY), make_identity(f.d), samples).holds);
}

TEST_CASE("quasi-star spectra") {
  Fixture f;
  std::vector<PrimeIdeal> cands{f.px, f.py, f.pxy, f.pn};
  auto s53 = make_ex53(f.d);
  auto sp = quasi_star_spectrum(s53, cands);
  REQUIRE(sp.maximal.size() == 1);
  CHECK(f.d->equal(sp.maximal.front().ideal, f.n));
  auto tsp = quasi_star_spectrum(tilde_of(s53, {f.pn}), cands);
  CHECK(tsp.quasi.size() == sp.quasi.size());
  CHECK(tsp.maximal.size() == 1);

  auto spv = quasi_star_spectrum(make_v(f.d), cands);
  CHECK(spv.maximal.size() == 3);
  CHECK_THROWS_AS(quasi_star_spectrum(s53, {}), std::invalid_argument);
}

TEST_CASE("tilde is idempotent") {
  Fixture f;
  auto t1 = tilde_of(make_v(f.d), {f.px, f.py});
  auto t2 = tilde_of(t1, {f.px, f.py});
  Sampler s(f.d, 3);
  for (int i = 0; i < 10; ++i) {
    auto e = s.ideal(true);
    for (const auto& z : probe_elements(*f.d, e, {f.x, f.y})) CHECK(t1->member(e, z) == t2->member(e, z));
  }
}
