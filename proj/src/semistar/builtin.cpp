#include "internal.hpp"

#include <stdexcept>

namespace semistar {

using detail::PolyDomain;

SemistarOp::SemistarOp(DomainPtr dom, std::string name, StarFlags flags, Grade grade)
    : dom_(std::move(dom)), name_(std::move(name)), flags_(flags), grade_(grade) {}

ClosureResult SemistarOp::apply(const FractionalIdeal& e) const {
  FractionalIdeal n = dom_->normalize(e);
  std::string key = dom_->format(n) + "|" + dom_->format(n.den);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  ClosureResult r = compute(n);
  std::lock_guard lock(cache_mutex_);
  return cache_.emplace(key, std::move(r)).first->second;
}

bool SemistarOp::member(const FractionalIdeal& e, const Elem& z) const {
  auto r = apply(e);
  return r.oracle.whole_field || r.oracle.member(z);
}

bool SemistarOp::covers(const FractionalIdeal& e, const FractionalIdeal& f) const {
  auto r = apply(e);
  if (r.oracle.whole_field) return true;
  for (const auto& g : dom_->generators(f))
    if (!r.oracle.member(g)) return false;
  return true;
}

ClosureResult SemistarOp::presented(const FractionalIdeal& p, Grade g, std::string description) const {
  ClosureResult r;
  FractionalIdeal n = dom_->normalize(p);
  DomainPtr dom = dom_;
  r.oracle.member = [dom, n](const Elem& z) { return dom->contains(n, z); };
  r.oracle.presentation = n;
  r.oracle.grade = g;
  r.oracle.description = std::move(description);
  return r;
}

namespace detail {

const PolyDomain& require_poly(const Domain& dom, const std::string& what) {
  const auto* pd = dynamic_cast<const PolyDomain*>(&dom);
  if (!pd) throw Unsupported(what + " is not available on " + dom.describe());
  return *pd;
}

GcdSplit gcd_split(const PolyDomain& pd, const FractionalIdeal& e) {
  PolyIdeal num = pd.numerator(e);
  Poly f = poly_gcd(num.generators());
  std::vector<Poly> co;
  for (const auto& g : num.generators()) co.push_back(*exact_divide(g, f));
  return {f, PolyIdeal(pd.arity(), co), pd.denominator(e)};
}

SpectralOp::SpectralOp(DomainPtr dom, std::vector<PrimeIdeal> delta, std::string name, std::string kind,
                       StarPtr base)
    : SemistarOp(std::move(dom), std::move(name), StarFlags{true, true, false}, Grade::Exact),
      delta_(std::move(delta)),
      kind_(std::move(kind)),
      base_(std::move(base)) {
  if (delta_.empty()) throw std::invalid_argument("spectral operation over an empty prime set");
}

ClosureResult SpectralOp::compute(const FractionalIdeal& e) const {
  const DomainPtr& dom = domain();
  for (const auto& p : delta_)
    if (is_local_center(*dom, p)) {
      // E ⊆ E^★ ⊆ E·D_M = E.
      auto r = presented(e, Grade::Exact, "E (center of the local backend in Δ)");
      r.contraction = dom->is_integral(e) ? std::optional(dom->intersect(dom->normalize(e), dom->unit_ideal()))
                                          : std::nullopt;
      return r;
    }
  ClosureResult r;
  std::vector<PrimeIdeal> delta = delta_;
  r.oracle.member = [dom, e, delta](const Elem& z) {
    for (const auto& p : delta)
      if (!dom->contains_local(e, z, p)) return false;
    return true;
  };
  r.oracle.grade = Grade::Exact;
  r.oracle.description = "∩ E·D_P over " + std::to_string(delta_.size()) + " primes";
  if (dom->is_integral(e)) {
    std::optional<FractionalIdeal> c = dom->unit_ideal();
    for (const auto& p : delta_) {
      auto o = localize_contract(dom, e, p);
      if (!o.presentation) {
        c.reset();
        break;
      }
      c = dom->intersect(*c, *o.presentation);
    }
    r.contraction = c;
  }
  return r;
}

}  // namespace detail

namespace {

class IdentityOp final : public SemistarOp {
 public:
  explicit IdentityOp(DomainPtr dom) : SemistarOp(std::move(dom), "d", {true, true, false}, Grade::Exact) {}
  std::string kind() const override { return "d"; }

 protected:
  ClosureResult compute(const FractionalIdeal& e) const override { return presented(e, Grade::Exact, "E"); }
};

class VOp final : public SemistarOp {
 public:
  explicit VOp(DomainPtr dom) : SemistarOp(std::move(dom), "v", {false, false, false}, Grade::Exact) {}
  std::string kind() const override { return "v"; }

 protected:
  ClosureResult compute(const FractionalIdeal& e) const override {
    return presented(domain()->dual(domain()->dual(e)), Grade::Exact, "(E^-1)^-1");
  }
};

class TrivialOp final : public SemistarOp {
 public:
  explicit TrivialOp(DomainPtr dom) : SemistarOp(std::move(dom), "e", {true, true, true}, Grade::Exact) {}
  std::string kind() const override { return "trivial"; }
  bool is_trivial() const override { return true; }

 protected:
  ClosureResult compute(const FractionalIdeal&) const override {
    ClosureResult r;
    r.oracle.member = [](const Elem&) { return true; };
    r.oracle.whole_field = true;
    r.oracle.description = "K";
    return r;
  }
};

class BOp final : public SemistarOp {
 public:
  explicit BOp(DomainPtr dom) : SemistarOp(std::move(dom), "b", {true, false, true}, Grade::Exact) {}
  std::string kind() const override { return "b"; }

 protected:
  ClosureResult compute(const FractionalIdeal& e) const override {
    const DomainPtr& dom = domain();
    if (dom->kind() == DomainKind::Integers) return presented(e, Grade::Exact, "E (Z is a PID)");
    const auto& pd = detail::require_poly(*dom, "b");
    auto s = detail::gcd_split(pd, e);
    if (pd.escapes_center(s.cofactor)) return presented(e, Grade::Exact, "E (principal)");
    if (!s.cofactor.is_monomial())
      throw Unsupported("b closure of " + dom->format(e) + ": cofactor is neither principal nor monomial");
    PolyIdeal closed = newton_closure_monomial(s.cofactor);
    std::vector<Poly> gens;
    for (const auto& g : closed.generators()) gens.push_back(g * s.f);
    return presented(pd.from_parts(PolyIdeal(pd.arity(), gens), s.den), Grade::Exact, "Newton closure");
  }
};

class Ex53Op final : public SemistarOp {
 public:
  explicit Ex53Op(DomainPtr dom) : SemistarOp(std::move(dom), "★53", {true, false, false}, Grade::Exact) {
    const auto& pd = detail::require_poly(*domain(), "the case-defined operation");
    if (pd.center() != CenterKind::Origin)
      throw Unsupported("the case-defined operation needs a backend localized at the origin");
  }
  std::string kind() const override { return "ex53"; }

 protected:
  ClosureResult compute(const FractionalIdeal& e) const override {
    const auto& pd = detail::require_poly(*domain(), "");
    auto s = detail::gcd_split(pd, e);
    if (pd.escapes_center(s.cofactor))
      return presented(pd.from_parts(PolyIdeal(pd.arity(), {s.f}), s.den), Grade::Exact, "principal: J");
    std::vector<Poly> gens;
    for (const auto& g : pd.center_ideal()->generators()) gens.push_back(g * s.f);
    ClosureResult r = presented(pd.from_parts(PolyIdeal(pd.arity(), gens), s.den), Grade::Exact, "f·N");
    r.witnesses.push_back({"gcd", pd.from_parts(PolyIdeal(pd.arity(), {s.f}), s.den), std::nullopt,
                           "f = " + s.f.to_string(pd.names())});
    return r;
  }
};

class ValuationFamilyOp final : public SemistarOp {
 public:
  ValuationFamilyOp(DomainPtr dom, ValuationFamily fam, std::string name)
      : SemistarOp(std::move(dom), std::move(name), {true, false, true}, Grade::Exact), fam_(std::move(fam)) {
    const auto& pd = detail::require_poly(*domain(), "valuation families");
    for (const auto& v : fam_.valuations)
      if (!is_overring_of(v, *domain()))
        throw std::invalid_argument(v.describe(pd.names()) + " is not an overring of " + domain()->describe());
    for (auto& f : fam_.dvr_primes) {
      f = f.monic(MonomialOrder::degrevlex());
      family_.push_back(ValuationSpec::dvr_along(f));
    }
    for (auto& f : fam_.excluded) f = f.monic(MonomialOrder::degrevlex());
    for (const auto& v : fam_.valuations) family_.push_back(v);
  }
  std::string kind() const override { return "valfam"; }

 protected:
  ClosureResult compute(const FractionalIdeal& e) const override {
    ClosureResult r;
    DomainPtr dom = domain();
    auto fam = fam_;
    auto family = family_;
    FractionalIdeal en = e;
    r.oracle.member = [dom, fam, family, en](const Elem& z) {
      if (is_zero(z)) return true;
      if (fam.cofinite) check_relevant(*dom, fam, en, z);
      for (const auto& v : family)
        if (!in_extension(v, *dom, en, z)) return false;
      return true;
    };
    r.oracle.grade = Grade::Exact;
    r.oracle.description = "∩ E·W over the family";
    return r;
  }

 private:
  static void check_relevant(const Domain& dom, const ValuationFamily& fam, const FractionalIdeal& e,
                             const Elem& z) {
    const auto& pd = detail::require_poly(dom, "");
    RatFunc rz = reduce_fully(std::get<RatFunc>(z));
    std::vector<Poly> risky{rz.den, poly_gcd(pd.numerator(e).generators())};
    for (Poly r : risky) {
      auto strip = [&](const std::vector<Poly>& ps) {
        for (const auto& p : ps)
          while (!r.is_constant())
            if (auto q = exact_divide(r, p)) r = *q; else break;
      };
      strip(fam.dvr_primes);
      strip(fam.excluded);
      if (!r.is_constant() && !pd.escapes_center(PolyIdeal(pd.arity(), {r})))
        throw Unsupported("query involves " + r.to_string(pd.names()) +
                          ", which has a factor outside the relevant-prime list");
    }
  }

  ValuationFamily fam_;
  std::vector<ValuationSpec> family_;
};

}  // namespace

StarPtr make_identity(const DomainPtr& dom) { return std::make_shared<IdentityOp>(dom); }
StarPtr make_v(const DomainPtr& dom) { return std::make_shared<VOp>(dom); }
StarPtr make_trivial(const DomainPtr& dom) { return std::make_shared<TrivialOp>(dom); }

StarPtr make_b(const DomainPtr& dom) {
  if (dom->kind() == DomainKind::QuadraticOrder) throw Unsupported("b is not available on " + dom->describe());
  return std::make_shared<BOp>(dom);
}

StarPtr make_ex53(const DomainPtr& dom) { return std::make_shared<Ex53Op>(dom); }

StarPtr make_spectral(const DomainPtr& dom, std::vector<PrimeIdeal> delta, std::string name) {
  if (name.empty()) {
    name = "★_{";
    for (std::size_t i = 0; i < delta.size(); ++i)
      name += (i ? "," : "") + (delta[i].name.empty() ? dom->format(delta[i].ideal) : delta[i].name);
    name += "}";
  }
  return std::make_shared<detail::SpectralOp>(dom, std::move(delta), std::move(name), "spectral", nullptr);
}

StarPtr make_extension(const DomainPtr& dom, const PrimeIdeal& p) {
  std::string name = "★_{D_" + (p.name.empty() ? dom->format(p.ideal) : p.name) + "}";
  return std::make_shared<detail::SpectralOp>(dom, std::vector<PrimeIdeal>{p}, name, "extension", nullptr);
}

StarPtr make_valuation_family(const DomainPtr& dom, ValuationFamily family, std::string name) {
  if (name.empty()) name = "★_W";
  return std::make_shared<ValuationFamilyOp>(dom, std::move(family), std::move(name));
}

}  // namespace semistar
