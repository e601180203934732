#include "backends.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace semistar::detail {

namespace {

const RatFunc& as_ratfunc(const Elem& z) {
  const auto* r = std::get_if<RatFunc>(&z);
  if (!r) throw std::invalid_argument("element is not a rational function");
  return *r;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  return *exact_divide(a * b, poly_gcd(a, b));
}

Poly monic(const Poly& p) { return p.monic(MonomialOrder::degrevlex()); }

std::vector<Poly> scaled(const PolyIdeal& i, const Poly& by) {
  std::vector<Poly> out;
  for (const auto& g : i.generators()) out.push_back(g * by);
  return out;
}

/// Order of E = (1/den)·I along a prime h.
int ideal_order(const PolyIdeal& i, const Poly& den, const Poly& h) {
  int m = INT_MAX;
  for (const auto& g : i.generators()) m = std::min(m, order_along(g, h));
  return m - order_along(den, h);
}

int elem_order(const RatFunc& r, const Poly& h) { return order_along(r.num, h) - order_along(r.den, h); }

}  // namespace

int order_along(const Poly& p, const Poly& f) {
  if (p.is_zero()) throw std::invalid_argument("order of zero");
  int k = 0;
  Poly cur = p;
  while (auto q = exact_divide(cur, f)) {
    cur = std::move(*q);
    ++k;
  }
  return k;
}

Poly as_poly(const Elem& z) {
  const RatFunc& r = as_ratfunc(z);
  if (!r.den.is_constant()) throw std::invalid_argument("element is not a polynomial");
  return r.num * (1 / r.den.constant_term());
}

PolyDomain::PolyDomain(std::vector<std::string> vars, CenterKind center, std::optional<Poly> center_generator)
    : vars_(std::move(vars)), center_(center), center_generator_(std::move(center_generator)) {
  const std::size_t n = vars_.size();
  if (center_ == CenterKind::Origin) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(Poly::variable(n, i));
    center_ideal_ = PolyIdeal(n, gens);
  } else if (center_ == CenterKind::Principal) {
    center_generator_ = monic(*center_generator_);
    center_ideal_ = PolyIdeal(n, {*center_generator_});
  }
}

std::string PolyDomain::describe() const {
  std::string s = "Q[";
  for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
  s += "]";
  if (center_ == CenterKind::Origin) {
    s += "_(";
    for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
    s += ")";
  } else if (center_ == CenterKind::Principal) {
    s += "_(" + center_generator_->to_string(vars_) + ")";
  }
  return s;
}

Elem PolyDomain::constant(const Rational& c) const { return embed(Poly::constant(arity(), c)); }

Elem PolyDomain::embed(const Poly& p) const { return RatFunc{p, Poly::constant(p.arity(), 1)}; }

std::vector<Elem> PolyDomain::atoms() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < arity(); ++i) out.push_back(embed(Poly::variable(arity(), i)));
  return out;
}

bool PolyDomain::escapes_center(const PolyIdeal& j) const {
  if (j.generators().empty()) return false;
  if (!center_ideal_) return j.is_unit();
  return std::any_of(j.generators().begin(), j.generators().end(),
                     [&](const Poly& g) { return !center_ideal_->contains(g); });
}

bool PolyDomain::in_ring(const Elem& z) const {
  const RatFunc& r = as_ratfunc(z);
  if (r.den.is_constant() || r.num.is_zero()) return true;
  Poly rest = *exact_divide(r.den, poly_gcd(r.num, r.den));
  return escapes_center(PolyIdeal(arity(), {rest}));
}

bool PolyDomain::is_unit(const Elem& z) const {
  if (is_zero(z)) return false;
  return in_ring(z) && in_ring(constant(1) / z);
}

PolyIdeal PolyDomain::numerator(const FractionalIdeal& e) const {
  std::vector<Poly> gens;
  for (const auto& g : e.num) gens.push_back(as_poly(g));
  return PolyIdeal(arity(), gens);
}

Poly PolyDomain::denominator(const FractionalIdeal& e) const { return as_poly(e.den); }

FractionalIdeal PolyDomain::from_parts(const PolyIdeal& num, const Poly& den) const {
  FractionalIdeal out{{}, embed(den)};
  for (const auto& g : num.generators()) out.num.push_back(embed(g));
  return out;
}

FractionalIdeal PolyDomain::make_ideal(const std::vector<Elem>& gens) const {
  Poly l = Poly::constant(arity(), 1);
  for (const auto& g : gens)
    if (!is_zero(g)) l = poly_lcm(l, monic(as_ratfunc(g).den));
  std::vector<Poly> nums;
  for (const auto& g : gens) {
    if (is_zero(g)) continue;
    const RatFunc& r = as_ratfunc(g);
    nums.push_back(*exact_divide(r.num * l, r.den));
  }
  if (nums.empty()) throw std::invalid_argument("zero ideal");
  return normalize(from_parts(PolyIdeal(arity(), nums), l));
}

FractionalIdeal PolyDomain::normalize(const FractionalIdeal& e) const {
  PolyIdeal i = numerator(e);
  Poly den = denominator(e);
  if (i.generators().empty()) throw std::invalid_argument("zero ideal");
  const std::size_t n = arity();
  const Poly one = Poly::constant(n, 1);
  if (center_ == CenterKind::Principal) {
    int k = ideal_order(i, den, *center_generator_);
    Poly pw = center_generator_->pow(static_cast<unsigned>(std::abs(k)));
    return k >= 0 ? from_parts(PolyIdeal(n, {pw}), one) : from_parts(PolyIdeal(n, {one}), pw);
  }
  if (center_ideal_) {
    if (escapes_center(i)) i = PolyIdeal::unit(n);
    if (escapes_center(PolyIdeal(n, {den}))) den = one;
  }
  std::vector<Poly> basis = i.basis();
  std::vector<Poly> all = basis;
  all.push_back(den);
  Poly g = poly_gcd(all);
  if (!g.is_constant()) {
    for (auto& b : basis) b = *exact_divide(b, g);
    den = *exact_divide(den, g);
    basis = PolyIdeal(n, basis).basis();
  }
  return from_parts(PolyIdeal(n, basis), monic(den));
}

bool PolyDomain::local_member(const PolyIdeal& num, const Poly& den, const RatFunc& z,
                              const std::optional<PolyIdeal>& q_ideal) const {
  if (z.num.is_zero()) return true;
  const PolyIdeal& q = q_ideal ? *q_ideal : *center_ideal_;
  Poly t = den * z.num;
  PolyIdeal qi(arity(), scaled(num, z.den));
  if (qi.contains(t)) return true;
  if (!q_ideal && !center_ideal_) return false;
  PolyIdeal j = ideal_colon(qi, t);
  return std::any_of(j.generators().begin(), j.generators().end(),
                     [&](const Poly& g) { return !q.contains(g); });
}

bool PolyDomain::contains(const FractionalIdeal& e, const Elem& z) const {
  const RatFunc& r = as_ratfunc(z);
  if (r.num.is_zero()) return true;
  if (center_ == CenterKind::Principal)
    return elem_order(r, *center_generator_) >= ideal_order(numerator(e), denominator(e), *center_generator_);
  return local_member(numerator(e), denominator(e), r, std::nullopt);
}

bool PolyDomain::contains_local(const FractionalIdeal& e, const Elem& z, const PrimeIdeal& q) const {
  const RatFunc& r = as_ratfunc(z);
  if (r.num.is_zero()) return true;
  PolyIdeal qn = numerator(q.ideal);
  if (qn.generators().size() == 1) {
    const Poly& h = qn.generators().front();
    return elem_order(r, h) >= ideal_order(numerator(e), denominator(e), h);
  }
  return local_member(numerator(e), denominator(e), r, qn);
}

FractionalIdeal PolyDomain::sum(const FractionalIdeal& e, const FractionalIdeal& f) const {
  Poly a = denominator(e), b = denominator(f);
  if (a == b) return normalize(from_parts(ideal_combine(numerator(e), numerator(f), CombineMode::Sum), a));
  PolyIdeal s(arity(), scaled(numerator(e), b));
  PolyIdeal t(arity(), scaled(numerator(f), a));
  return normalize(from_parts(ideal_combine(s, t, CombineMode::Sum), a * b));
}

FractionalIdeal PolyDomain::product(const FractionalIdeal& e, const FractionalIdeal& f) const {
  return normalize(from_parts(ideal_combine(numerator(e), numerator(f), CombineMode::Product),
                              denominator(e) * denominator(f)));
}

FractionalIdeal PolyDomain::intersect(const FractionalIdeal& e, const FractionalIdeal& f) const {
  Poly a = denominator(e), b = denominator(f);
  if (a == b) return normalize(from_parts(ideal_intersect(numerator(e), numerator(f)), a));
  PolyIdeal s(arity(), scaled(numerator(e), b));
  PolyIdeal t(arity(), scaled(numerator(f), a));
  return normalize(from_parts(ideal_intersect(s, t), a * b));
}

FractionalIdeal PolyDomain::colon(const FractionalIdeal& e, const FractionalIdeal& f) const {
  // (E:F) = (f/(e·a))·(aI : J) for E = I/e, F = J/f and any nonzero a ∈ J.
  PolyIdeal i = numerator(e), j = numerator(f);
  Poly a = *std::min_element(j.generators().begin(), j.generators().end(),
                             [](const Poly& x, const Poly& y) { return x.total_degree() < y.total_degree(); });
  PolyIdeal c = ideal_colon(PolyIdeal(arity(), scaled(i, a)), j);
  return normalize(from_parts(PolyIdeal(arity(), scaled(c, denominator(f))), denominator(e) * a));
}

PrimeIdeal PolyDomain::make_prime(const std::vector<Elem>& gens, bool assume_prime,
                                  const std::string& name) const {
  FractionalIdeal e = make_ideal(gens);
  if (!denominator(e).is_constant()) throw std::invalid_argument("prime must be an integral ideal");
  PolyIdeal i = numerator(e);
  bool proper = center_ideal_ ? !escapes_center(i) : !i.is_unit();
  if (!proper) throw std::invalid_argument("not a proper ideal of " + describe());
  const auto& basis = i.basis();
  bool linear = std::all_of(basis.begin(), basis.end(), [](const Poly& p) { return p.total_degree() <= 1; });
  PrimeCert cert = PrimeCert::UserAsserted;
  if (linear) {
    bool variables_only = basis.size() == arity() &&
                          std::all_of(basis.begin(), basis.end(), [](const Poly& p) { return p.is_monomial(); });
    cert = basis.size() == 1 ? PrimeCert::PrincipalIrreducible
           : variables_only  ? PrimeCert::MonomialMaximal
                             : PrimeCert::LinearPrime;
  } else if (!assume_prime) {
    throw std::invalid_argument("cannot certify " + i.to_string(vars_) + " as prime");
  }
  return {from_parts(PolyIdeal(arity(), basis), Poly::constant(arity(), 1)), cert, name};
}

}  // namespace semistar::detail
