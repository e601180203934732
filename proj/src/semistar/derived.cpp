#include "internal.hpp"

#include <stdexcept>

namespace semistar {

namespace {

class FiniteTypeOp final : public SemistarOp {
 public:
  FiniteTypeOp(StarPtr base, std::string name)
      : SemistarOp(base->domain(), std::move(name),
                   {true, base->flags().stable_claimed, base->flags().eab_claimed}, base->grade()),
        base_(std::move(base)) {}
  std::string kind() const override { return base_->kind() == "v" ? "t" : "fin"; }
  StarPtr base() const override { return base_; }

 protected:
  // Every fractional ideal of a Noetherian backend is finitely generated.
  ClosureResult compute(const FractionalIdeal& e) const override { return base_->apply(e); }

 private:
  StarPtr base_;
};

class WOp final : public SemistarOp {
 public:
  explicit WOp(StarPtr base)
      : SemistarOp(base->domain(), base->kind() == "v" || base->kind() == "t" ? "w" : base->name() + "_w",
                   {true, true, false}, base->grade()),
        base_(std::move(base)) {}
  std::string kind() const override { return "w"; }
  StarPtr base() const override { return base_; }

 protected:
  ClosureResult compute(const FractionalIdeal& e) const override {
    ClosureResult r;
    DomainPtr dom = domain();
    StarPtr star = base_;
    r.oracle.member = [dom, star, e](const Elem& z) {
      if (is_zero(z)) return true;
      // (E :_D z) = (E ∩ zD)/z.
      FractionalIdeal h = dom->scale(dom->intersect(e, dom->principal(z)), dom->constant(1) / z);
      return star->member(h, dom->constant(1));
    };
    r.oracle.grade = grade();
    r.oracle.description = "∪ (E:H), H^★ = D^★";
    return r;
  }

 private:
  StarPtr base_;
};

class AOp final : public SemistarOp {
 public:
  AOp(StarPtr base, ABudget budget)
      : SemistarOp(base->domain(), base->name() + "_a", {true, false, true}, Grade::LowerBound),
        base_(std::move(base)),
        budget_(std::move(budget)) {}
  std::string kind() const override { return "a"; }
  StarPtr base() const override { return base_; }

 protected:
  ClosureResult compute(const FractionalIdeal& e) const override { return star_a_lower(base_, e, budget_); }

 private:
  StarPtr base_;
  ABudget budget_;
};

class RestrictOp final : public SemistarOp {
 public:
  RestrictOp(StarPtr base, DomainPtr t, std::optional<PrimeIdeal> p)
      : SemistarOp(std::move(t), "dot(" + base->name() + ")", {true, base->flags().stable_claimed, false},
                   base->grade()),
        base_(std::move(base)),
        p_(std::move(p)) {}
  std::string kind() const override { return "restrict"; }
  StarPtr base() const override { return base_; }

 protected:
  ClosureResult compute(const FractionalIdeal& e) const override {
    const DomainPtr& d = base_->domain();
    const DomainPtr& t = domain();
    FractionalIdeal f = d->make_ideal(t->generators(e));
    ClosureResult inner = base_->apply(f);
    ClosureResult r;
    r.witnesses = inner.witnesses;
    if (inner.oracle.whole_field || !p_) {
      r.oracle = inner.oracle;
      if (inner.oracle.presentation) r.oracle.presentation = t->make_ideal(d->generators(*inner.oracle.presentation));
      return r;
    }
    if (inner.oracle.presentation) {
      // (F·T)^★ = F^★·T for finite-type closures.
      r.oracle = localize_contract(d, *inner.oracle.presentation, *p_);
      r.oracle.presentation = t->make_ideal(d->generators(*inner.oracle.presentation));
      r.oracle.grade = inner.oracle.grade;
      r.oracle.description = "F^★·T";
      return r;
    }
    const auto* sp = dynamic_cast<const detail::SpectralOp*>(base_.get());
    bool inside = sp != nullptr;
    if (sp)
      for (const auto& q : sp->delta())
        if (!d->contains(p_->ideal, q.ideal)) inside = false;
    if (inside) {
      // Every D_Q with Q ⊆ P already contains T.
      r.oracle = inner.oracle;
      for (const auto& q : sp->delta())
        if (d->equal(q.ideal, p_->ideal)) r.oracle.presentation = t->normalize(e);
      return r;
    }
    // Search s ∉ P with s·z ∈ F^★.
    std::vector<Elem> pool{d->constant(1)};
    for (const auto& a : d->atoms()) {
      if (!d->contains(p_->ideal, a)) pool.push_back(a);
      Elem shifted = a + d->constant(1);
      if (!d->contains(p_->ideal, shifted)) pool.push_back(shifted);
    }
    StarPtr star = base_;
    PrimeIdeal p = *p_;
    r.oracle.member = [star, f, pool, d, p](const Elem& z) {
      if (star->member(f, z)) return true;
      if (const auto* rz = std::get_if<RatFunc>(&z)) {
        Elem den = RatFunc{rz->den, Poly::constant(rz->den.arity(), 1)};
        if (!d->contains(p.ideal, den) && star->member(f, z * den)) return true;
      }
      for (const auto& s : pool)
        if (star->member(f, z * s)) return true;
      return false;
    };
    r.oracle.grade = Grade::LowerBound;
    r.oracle.description = "F^★·T by a bounded search for s ∉ P";
    return r;
  }

 private:
  StarPtr base_;
  std::optional<PrimeIdeal> p_;
};

void require_nontrivial(const StarPtr& star) {
  if (star->is_trivial()) throw std::invalid_argument("derived operators reject the trivial operation");
}

}  // namespace

StarPtr finite_type_closure(const StarPtr& star) {
  if (star->flags().finite_type) return star;
  std::string name = star->kind() == "v" ? "t" : star->name() + "_f";
  return std::make_shared<FiniteTypeOp>(star, name);
}

StarPtr make_t(const DomainPtr& dom) { return finite_type_closure(make_v(dom)); }

StarPtr tilde_of(const StarPtr& star, std::vector<PrimeIdeal> mset) {
  require_nontrivial(star);
  if (mset.empty()) throw std::invalid_argument("tilde needs a nonempty set of quasi-maximal primes");
  return std::make_shared<detail::SpectralOp>(star->domain(), std::move(mset), "~" + star->name(), "tilde", star);
}

StarPtr star_w_of(const StarPtr& star) {
  require_nontrivial(star);
  return std::make_shared<WOp>(star);
}

StarPtr make_star_a(const StarPtr& star, ABudget budget) {
  require_nontrivial(star);
  if (budget.max_factors < 1) throw std::invalid_argument("empty witness budget");
  return std::make_shared<AOp>(star, std::move(budget));
}

ClosureResult star_a_lower(const StarPtr& star, const FractionalIdeal& f, const ABudget& budget) {
  require_nontrivial(star);
  if (budget.max_factors < 1) throw std::invalid_argument("empty witness budget");
  const DomainPtr& dom = star->domain();
  std::vector<FractionalIdeal> base{dom->normalize(f)};
  for (const auto& a : budget.aux) base.push_back(dom->normalize(a));
  if (auto c = local_center(*dom)) base.push_back(*c);
  // Pool: D and products of 1..max_factors members of `base` (multisets).
  std::vector<FractionalIdeal> pool{dom->unit_ideal()};
  std::vector<std::pair<FractionalIdeal, std::size_t>> layer;
  for (std::size_t i = 0; i < base.size(); ++i) layer.push_back({base[i], i});
  for (int k = 1; k <= budget.max_factors; ++k) {
    std::vector<std::pair<FractionalIdeal, std::size_t>> next;
    for (const auto& [h, last] : layer) {
      pool.push_back(h);
      if (k < budget.max_factors)
        for (std::size_t i = last; i < base.size(); ++i) next.push_back({dom->product(h, base[i]), i});
    }
    layer = std::move(next);
  }

  ClosureResult out;
  std::optional<FractionalIdeal> lower;
  bool all_presented = true;
  struct OraclePiece {
    FractionalIdeal h;
    ClosureResult fh;
  };
  std::vector<OraclePiece> oracle_pieces;
  for (const auto& h : pool) {
    ClosureResult fh = star->apply(dom->product(f, h));
    if (fh.oracle.whole_field) throw std::invalid_argument("(FH)^★ = K: trivial on this input");
    if (fh.oracle.presentation) {
      FractionalIdeal piece = dom->colon(*fh.oracle.presentation, h);
      if (!lower || !dom->contains(*lower, piece)) {
        out.witnesses.push_back({"H", h, piece, ""});
        lower = lower ? dom->sum(*lower, piece) : piece;
      }
    } else {
      all_presented = false;
      oracle_pieces.push_back({h, fh});
      out.witnesses.push_back({"H", h, std::nullopt, "oracle piece"});
    }
  }
  Grade grade = Grade::LowerBound;
  if (all_presented && budget.upper) {
    auto up = budget.upper->apply(f);
    if (up.oracle.presentation && dom->contains(*lower, *up.oracle.presentation)) {
      grade = Grade::Exact;
      out.witnesses.push_back({"upper", *up.oracle.presentation, std::nullopt,
                               "pinned by " + budget.upper->name()});
    }
  }
  if (all_presented) {
    FractionalIdeal n = dom->normalize(*lower);
    out.oracle.member = [dom, n](const Elem& z) { return dom->contains(n, z); };
    out.oracle.presentation = n;
  } else {
    std::optional<FractionalIdeal> lw = lower;
    out.oracle.member = [dom, lw, oracle_pieces](const Elem& z) {
      if (lw && dom->contains(*lw, z)) return true;
      for (const auto& op : oracle_pieces) {
        bool ok = true;
        for (const auto& g : dom->generators(op.h))
          if (!op.fh.oracle.member(z * g)) {
            ok = false;
            break;
          }
        if (ok) return true;
      }
      return false;
    };
  }
  out.oracle.grade = grade;
  out.oracle.description = "Σ ((FH)^★ : H) over " + std::to_string(pool.size()) + " witnesses";
  return out;
}

bool reverify_a_witnesses(const StarPtr& star, const FractionalIdeal& f, const ClosureResult& r) {
  const DomainPtr& dom = star->domain();
  for (const auto& w : r.witnesses) {
    if (w.role != "H" || !w.piece) continue;
    if (!star->covers(dom->product(f, w.h), dom->product(*w.piece, w.h))) return false;
  }
  return true;
}

DomainPtr localization_domain(const DomainPtr& dom, const std::optional<PrimeIdeal>& p) {
  if (!p) return dom;
  if (is_local_center(*dom, *p)) return dom;
  if (const auto* z = dynamic_cast<const detail::IntegersDomain*>(dom.get())) {
    if (z->localized_at()) throw Unsupported("Z_(p) has no other nonzero primes");
    DomainSpec s;
    s.kind = DomainKind::Integers;
    s.localize_at = z->generator(p->ideal).get_num().get_si();
    return make_domain(s);
  }
  if (const auto* pd = dynamic_cast<const detail::PolyDomain*>(dom.get())) {
    PolyIdeal pn = pd->numerator(p->ideal);
    DomainSpec s;
    s.kind = DomainKind::PolyLocal;
    s.variables = pd->names();
    if (pn.generators().size() == 1) {
      s.center = CenterKind::Principal;
      s.center_generator = pn.generators().front();
      s.assume_center_prime = true;
      return make_domain(s);
    }
    std::vector<Poly> vars;
    for (std::size_t i = 0; i < pd->arity(); ++i) vars.push_back(Poly::variable(pd->arity(), i));
    if (!pd->center_ideal() && pn.equals(PolyIdeal(pd->arity(), vars))) {
      s.center = CenterKind::Origin;
      return make_domain(s);
    }
  }
  throw Unsupported("localization at " + dom->format(p->ideal) + " is not representable");
}

StarPtr restrict_to_overring(const StarPtr& star, const std::optional<PrimeIdeal>& p) {
  require_nontrivial(star);
  DomainPtr t = localization_domain(star->domain(), p);
  std::optional<PrimeIdeal> eff = p;
  if (p && t == star->domain()) eff.reset();
  return std::make_shared<RestrictOp>(star, t, eff);
}

}  // namespace semistar
