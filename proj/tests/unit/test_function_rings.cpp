#include "doctest.h"

#include "semistar/function_rings.hpp"

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

DomainPtr integers(std::optional<long> p = std::nullopt) {
  DomainSpec s;
  s.kind = DomainKind::Integers;
  s.localize_at = p;
  return make_domain(s);
}

const Poly PX = Poly::variable(2, 0);
const Poly PY = Poly::variable(2, 1);
Elem rf(const Poly& n, const Poly& d = Poly::constant(2, 1)) { return make_ratfunc(n, d); }
Elem q(long a, long b = 0) { return QuadNum{a, b, -3}; }

struct Fixture {
  DomainPtr d = local2();
  Elem x = rf(PX), y = rf(PY), one = rf(Poly::constant(2, 1)), zero = rf(Poly(2));
  FractionalIdeal n = d->make_ideal({x, y});
  FractionalIdeal x2xy = d->make_ideal({x * x, x * y});
  FractionalIdeal x2y2 = d->make_ideal({x * x, y * y});
  PrimeIdeal px = d->make_prime({x}, false, "(X)");
  PrimeIdeal py = d->make_prime({y}, false, "(Y)");
  PrimeIdeal pxy = d->make_prime({x - y}, false, "(X-Y)");
  PrimeIdeal pn = d->make_prime({x, y}, false, "N");
  TPoly t(std::vector<Elem> c) { return TPoly(std::move(c)); }
  RationalFunctionElem ratio(std::vector<Elem> f, std::vector<Elem> g) { return {TPoly(std::move(f)), TPoly(std::move(g))}; }
};

}  // namespace

TEST_CASE("TPoly arithmetic and printing") {
  Fixture f;
  TPoly h = f.t({f.x, f.y});
  CHECK(h.to_string(*f.d) == "X + Y*X†");
  CHECK(f.t({f.x * f.x, f.zero, f.y * f.y}).to_string(*f.d) == "X^2 + Y^2*X†^2");
  CHECK((h * h).degree() == 2);
  CHECK((h + h.scaled(-f.one)).is_zero());
  CHECK(h.shifted(2).degree() == 3);
  RationalFunctionElem z{h, h.scaled(f.x)};
  RationalFunctionElem w{TPoly::constant(f.one), TPoly::constant(f.x)};
  CHECK(same_function(z, w));
  auto c = clear_denominators(*f.d, {TPoly::constant(f.one / f.x), TPoly::constant(f.y / (f.x + f.one))});
  CHECK(same_function(c, {TPoly::constant(f.one / f.x), TPoly::constant(f.y / (f.x + f.one))}));
  for (const auto* p : {&c.f, &c.g})
    for (const auto& k : p->support()) CHECK(f.d->in_ring(k));
}

TEST_CASE("the multiplicative set N") {
  Fixture f;
  TPoly h = f.t({f.x, f.y});
  CHECK(in_multiplicative_set_N(make_v(f.d), h));
  CHECK_FALSE(in_multiplicative_set_N(make_identity(f.d), h));
  CHECK(in_multiplicative_set_N(make_identity(f.d), TPoly::constant(f.one)));
  CHECK(in_multiplicative_set_N(make_ex53(f.d), TPoly::constant(f.one + f.x)));
  CHECK_THROWS(in_multiplicative_set_N(make_v(f.d), TPoly{}));
  CHECK_THROWS(in_multiplicative_set_N(make_v(f.d), TPoly::constant(f.one / f.x)));
}

TEST_CASE("N is saturated") {
  Fixture f;
  auto v = make_v(f.d);
  std::vector<TPoly> polys{f.t({f.x, f.y}), f.t({f.x}), f.t({f.x * f.x, f.y}), f.t({f.one, f.x}),
                           f.t({f.x - f.y, f.x * f.y})};
  for (const auto& a : polys)
    for (const auto& b : polys)
      CHECK(in_multiplicative_set_N(v, a * b) ==
            (in_multiplicative_set_N(v, a) && in_multiplicative_set_N(v, b)));
}

TEST_CASE("Nagata membership on Q[X,Y]_(X,Y)") {
  Fixture f;
  auto z = f.ratio({f.one}, {f.x, f.y});
  auto yes = na_member(make_v(f.d), z);
  CHECK(yes.verdict == Verdict::Yes);
  REQUIRE(yes.h);
  CHECK(yes.h->to_string(*f.d) == "X + Y*X†");
  CHECK(na_member(make_identity(f.d), z).verdict == Verdict::No);
  // g·k/g is a polynomial for any star.
  TPoly g = f.t({f.x, f.y}), k = f.t({f.x * f.y, f.one});
  CHECK(na_member(make_identity(f.d), {g * k, g}).verdict == Verdict::Yes);
  // Common factors cancel before the content test.
  CHECK(na_member(make_identity(f.d), {g.scaled(f.x), g.scaled(f.x * f.y)}).verdict == Verdict::No);
  CHECK(na_member(make_identity(f.d), {g * k, g * g.scaled(f.x)}).verdict == Verdict::No);
  CHECK(na_member(make_identity(f.d), f.ratio({f.x}, {f.one + f.y})).verdict == Verdict::Yes);
}

TEST_CASE("Nagata membership on Z and Z_(p)") {
  auto z = integers();
  auto d = make_identity(z);
  auto c = [&](long a) { return z->constant(a); };
  CHECK(na_member(d, {TPoly({c(1)}), TPoly({c(2), c(3)})}).verdict == Verdict::Yes);
  CHECK(na_member(d, {TPoly({c(1)}), TPoly({c(2), c(4)})}).verdict == Verdict::No);
  CHECK(na_member(d, {TPoly({c(6)}), TPoly({c(2), c(4)})}).verdict == Verdict::Yes);
  auto z5 = integers(5);
  auto c5 = [&](long a) { return z5->constant(a); };
  CHECK(na_member(make_identity(z5), {TPoly({c5(1)}), TPoly({c5(3), c5(6)})}).verdict == Verdict::Yes);
  CHECK(na_member(make_identity(z5), {TPoly({c5(1)}), TPoly({c5(5), c5(10)})}).verdict == Verdict::No);
}

TEST_CASE("Nagata membership on Z[√-3]") {
  auto o = quad(-3);
  auto v = make_v(o);
  auto yes = [&](std::vector<Elem> a, std::vector<Elem> b) {
    return na_member(v, {TPoly(std::move(a)), TPoly(std::move(b))}).verdict;
  };
  // c(g) = (2, 1+√-3) is v-closed, so 1/g is not in Na.
  CHECK(yes({q(1)}, {q(2), q(1, 1)}) == Verdict::No);
  // (1+√-3)/2 lies in the integral closure but not in D.
  CHECK(yes({q(1, 1)}, {q(2)}) == Verdict::No);
  CHECK(yes({q(2), q(1, 1)}, {q(2)}) == Verdict::No);
  CHECK(yes({q(4)}, {q(2)}) == Verdict::Yes);
  CHECK(yes({q(1)}, {q(1, 1), q(3)}) == Verdict::Yes);
  CHECK(yes({q(1)}, {q(0, 1), q(3)}) == Verdict::No);
  // Same element with a trailing zero coefficient in the denominator.
  CHECK(yes({q(1, 1)}, {q(2), q(0)}) == Verdict::No);
  // (1+√-3)/(1-√-3) = ω - 1 lies outside D; 4/(1+√-3) = 1-√-3 lies inside.
  CHECK(yes({q(1, 1)}, {q(1, -1)}) == Verdict::No);
  CHECK(yes({q(4)}, {q(1, 1), q(0)}) == Verdict::Yes);
}

TEST_CASE("Nagata traces on K agree with the w-operation") {
  auto o = quad(-3);
  for (const auto& star : {make_v(o), make_identity(o)}) {
    auto w = star_w_of(star);
    Sampler s(o, 5);
    for (int i = 0; i < 40; ++i) {
      Elem z = s.element();
      auto cert = na_member(star, {TPoly::constant(z), TPoly::constant(o->constant(1))});
      REQUIRE(cert.verdict != Verdict::Unknown);
      CHECK((cert.verdict == Verdict::Yes) == w->member(o->unit_ideal(), z));
    }
  }
}

TEST_CASE("Kronecker membership") {
  Fixture f;
  auto d = make_identity(f.d);
  auto kr = kr_member(d, f.ratio({f.x * f.y}, {f.x * f.x, f.y * f.y}));
  CHECK(kr.verdict == Verdict::Yes);
  REQUIRE(kr.h);
  CHECK(kr.h->to_string(*f.d) == "X + Y*X†");
  CHECK(na_member(d, f.ratio({f.x * f.y}, {f.x * f.x, f.y * f.y})).verdict == Verdict::No);

  KrBudget b;
  b.valuations = {ValuationSpec::monomial_weight({0, 1}, "W_Y")};
  auto no = kr_member(d, f.ratio({f.x}, {f.y}), b);
  CHECK(no.verdict == Verdict::No);
  REQUIRE(no.obstruction);
  CHECK(no.witness.find("0 < 1") != std::string::npos);
  CHECK(kr_member(d, f.ratio({f.x}, {f.y})).verdict == Verdict::Unknown);
  CHECK(kr_member(d, f.ratio({f.x, f.y}, {f.one})).verdict == Verdict::Yes);
  // Exact decision for e.a.b. operations.
  auto b_op = make_b(f.d);
  CHECK(kr_member(b_op, f.ratio({f.x * f.y}, {f.x * f.x, f.y * f.y})).verdict == Verdict::Yes);
  CHECK(kr_member(b_op, f.ratio({f.x}, {f.y})).verdict == Verdict::No);
}

TEST_CASE("extension and contraction through Na and Kr") {
  Fixture f;
  auto v = make_v(f.d);
  auto na = extend_contract_na(v, f.x2xy);
  auto px = f.d->principal(f.x);
  for (const auto& z : probe_elements(*f.d, f.x2xy, {f.x, f.y, f.x - f.y}))
    CHECK(na.member(z) == f.d->contains(px, z));
  auto na_d = extend_contract_na(make_identity(f.d), px);
  for (const auto& z : probe_elements(*f.d, px, {f.x, f.y})) CHECK(na_d.member(z) == f.d->contains(px, z));

  KrBudget b;
  b.upper = make_b(f.d);
  auto kr = extend_contract_kr(make_identity(f.d), f.x2y2, b);
  CHECK(kr.member(f.x * f.y));
  REQUIRE(kr.presentation);
  CHECK(kr.grade == Grade::Exact);
  CHECK(f.d->equal(*kr.presentation, f.d->make_ideal({f.x * f.x, f.x * f.y, f.y * f.y})));

  KrBudget bt;
  bt.upper = make_t(f.d);
  auto kr53 = extend_contract_kr(make_ex53(f.d), f.x2xy, bt);
  REQUIRE(kr53.presentation);
  CHECK(f.d->equal(*kr53.presentation, px));

  auto nag = make_nagata(v);
  CHECK(nag->member(f.x2xy, f.x));
  CHECK_FALSE(nag->member(f.x2xy, f.y));
}

TEST_CASE("maximal traces") {
  Fixture f;
  auto tv = na_maximal_trace(make_v(f.d), {f.px, f.py, f.pn});
  CHECK(tv.maximal.size() == 2);
  CHECK(tv.verified);
  auto t53 = na_maximal_trace(make_ex53(f.d), {f.px, f.py, f.pxy, f.pn});
  REQUIRE(t53.maximal.size() == 1);
  CHECK(f.d->equal(t53.maximal.front().ideal, f.n));
  CHECK(t53.verified);
  auto z5 = integers(5);
  auto t5 = na_maximal_trace(make_v(z5), {z5->make_prime({z5->constant(5)}, false, "(5)")});
  CHECK(t5.maximal.size() == 1);
  CHECK_THROWS(na_maximal_trace(make_v(f.d), {}));
}

TEST_CASE("Bézout combinations") {
  Fixture f;
  auto d = make_identity(f.d);
  auto c = kr_bezout_combine(TPoly::constant(f.x), TPoly::constant(f.y), d);
  CHECK(c.h.to_string(*f.d) == "X + Y*X†");
  CHECK(c.f_over_h.verdict == Verdict::Yes);
  CHECK(c.g_over_h.verdict == Verdict::Yes);
  auto c2 = kr_bezout_combine(TPoly::constant(f.x * f.x), TPoly::constant(f.y * f.y), d);
  CHECK(c2.h.to_string(*f.d) == "X^2 + Y^2*X†");
  auto same = kr_bezout_combine(TPoly::constant(f.x), TPoly::constant(f.x), d);
  CHECK(same.f_over_h.verdict == Verdict::Yes);
}

TEST_CASE("Na equality against maximal sets") {
  Fixture f;
  std::vector<PrimeIdeal> cands{f.px, f.py, f.pxy, f.pn};
  Sampler s(f.d, 9);
  std::vector<RationalFunctionElem> samples;
  for (int i = 0; i < 20; ++i) samples.push_back(sample_rational_function(s, *f.d));
  auto eq = na_equal_iff_M(make_identity(f.d), make_ex53(f.d), cands, samples);
  CHECK(eq.m_equal);
  CHECK(eq.samples_agree);
  auto ne = na_equal_iff_M(make_identity(f.d), make_v(f.d), cands, samples);
  CHECK_FALSE(ne.m_equal);
  REQUIRE(ne.separator);
  CHECK(ne.separator->to_string(*f.d) == "1/(X + Y*X†)");
  auto self = na_equal_iff_M(make_v(f.d), make_v(f.d), cands, samples);
  CHECK(self.m_equal);
  CHECK(self.samples_agree);
}

TEST_CASE("Na sits inside Kr on samples") {
  Fixture f;
  KrBudget b;
  b.nagata_route = false;
  for (const auto& star : {make_identity(f.d), make_v(f.d), make_ex53(f.d)}) {
    Sampler s(f.d, 21);
    for (int i = 0; i < 25; ++i) {
      auto z = sample_rational_function(s, *f.d);
      if (na_member(star, z).verdict == Verdict::Yes) CHECK(kr_member(star, z, b).verdict != Verdict::No);
    }
  }
}
