#include "semistar/checks.hpp"

#include "internal.hpp"

#include <set>
#include <stdexcept>

namespace semistar {

namespace {

std::vector<Elem> stock_candidates(const Domain& dom) {
  std::vector<Elem> out;
  switch (dom.kind()) {
    case DomainKind::Integers:
      for (long p : {2, 3, 5, 7}) out.push_back(dom.constant(p));
      break;
    case DomainKind::QuadraticOrder: {
      Elem w = dom.atoms().front(), one = dom.constant(1);
      out = {dom.constant(2), one + w, one - w, w, dom.constant(5)};
      break;
    }
    case DomainKind::PolyLocal: {
      auto vars = dom.atoms();
      out = vars;
      if (vars.size() >= 2) {
        out.push_back(vars[0] - vars[1]);
        out.push_back(vars[0] + vars[1]);
      }
      out.push_back(vars[0] + dom.constant(1));
      break;
    }
  }
  return out;
}

std::string key(const Domain& dom, const Elem& z) { return dom.format(z); }

}  // namespace

Sampler::Sampler(DomainPtr dom, std::uint64_t seed) : dom_(std::move(dom)), rng_(seed) {
  for (const auto& c : stock_candidates(*dom_)) (dom_->is_unit(c) ? units_ : stock_).push_back(c);
  for (long u : {1, -1, 2}) {
    Elem c = dom_->constant(u);
    if (dom_->is_unit(c)) units_.push_back(c);
  }
  if (stock_.empty()) throw std::invalid_argument("no sampling primes for " + dom_->describe());
}

Elem Sampler::product_of_stock(int max_factors) {
  std::uniform_int_distribution<int> count(0, max_factors);
  std::uniform_int_distribution<std::size_t> pick(0, stock_.size() - 1), upick(0, units_.size() - 1);
  Elem r = units_[upick(rng_)];
  int k = count(rng_);
  for (int i = 0; i < k; ++i) r = r * stock_[pick(rng_)];
  return r;
}

Elem Sampler::integral_element(int max_factors) { return product_of_stock(max_factors); }

Elem Sampler::element() { return product_of_stock(3) / product_of_stock(2); }

FractionalIdeal Sampler::ideal(bool integral) {
  std::uniform_int_distribution<int> ngens(1, 3), coin(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, stock_.size() - 1);
  std::vector<Elem> gens;
  int n = ngens(rng_);
  for (int i = 0; i < n; ++i) gens.push_back(product_of_stock(3));
  FractionalIdeal e = dom_->make_ideal(gens);
  if (!integral && coin(rng_)) e = dom_->scale(e, dom_->constant(1) / stock_[pick(rng_)]);
  return e;
}

std::vector<Elem> probe_elements(const Domain& dom, const FractionalIdeal& e, const std::vector<Elem>& stock) {
  std::vector<Elem> out;
  std::set<std::string> seen;
  auto add = [&](const Elem& z) {
    if (!is_zero(z) && seen.insert(key(dom, z)).second) out.push_back(z);
  };
  add(dom.constant(1));
  auto gens = dom.generators(e);
  for (const auto& g : gens) add(g);
  for (const auto& g : gens)
    for (const auto& s : stock) {
      add(g / s);
      add(g * s);
    }
  for (const auto& s : stock) add(dom.constant(1) / s);
  return out;
}

namespace {

struct Probe {
  const StarPtr& star;
  const std::vector<Elem>& stock;
};

/// A^★ ⊆ B^★ (or A^{★1} ⊆ A^{★2} when two operations are given).
bool included(const StarPtr& s1, const FractionalIdeal& a, const StarPtr& s2, const FractionalIdeal& b,
              const std::vector<Elem>& stock, std::string& witness, bool& exact) {
  const auto& dom = s1->domain();
  auto r1 = s1->apply(a), r2 = s2->apply(b);
  if (r2.oracle.whole_field) return true;
  if (r1.oracle.whole_field) {
    witness = "K";
    return false;
  }
  if (r1.oracle.presentation) {
    for (const auto& g : dom->generators(*r1.oracle.presentation))
      if (!r2.oracle.member(g)) {
        witness = dom->format(g);
        return false;
      }
    return true;
  }
  exact = false;
  auto probes = probe_elements(*dom, a, stock);
  if (r2.oracle.presentation)
    for (const auto& y : probe_elements(*dom, *r2.oracle.presentation, stock)) probes.push_back(y);
  for (const auto& y : probes)
    if (r1.oracle.member(y) && !r2.oracle.member(y)) {
      witness = dom->format(y);
      return false;
    }
  return true;
}

bool same_closure(const StarPtr& s, const FractionalIdeal& a, const FractionalIdeal& b,
                  const std::vector<Elem>& stock, std::string& witness, bool& exact) {
  return included(s, a, s, b, stock, witness, exact) && included(s, b, s, a, stock, witness, exact);
}

void fail(CheckLine& line, const std::string& payload) {
  if (line.passed) line.counterexample = payload;
  line.passed = false;
}

}  // namespace

std::vector<CheckLine> check_axioms(const StarPtr& star, const AxiomPlan& plan) {
  const DomainPtr& dom = star->domain();
  Sampler sampler(dom, plan.seed);
  const auto& stock = sampler.stock();
  const bool lower = star->grade() == Grade::LowerBound;
  auto named = [](const char* n) {
    CheckLine l;
    l.name = n;
    return l;
  };
  CheckLine a1 = named("(★1) (zE)^★ = zE^★"), a2 = named("(★2) E ⊆ F ⇒ E^★ ⊆ F^★"), ext = named("(★3) E ⊆ E^★"),
            idem = named("(★3) (E^★)^★ = E^★"), stab = named("stability (E∩F)^★ = E^★ ∩ F^★");
  if (lower) idem.note = "lower-bound grade: only (E^★)^★ ⊇ E^★ is required";
  if (!star->flags().stable_claimed) {
    stab.skipped = true;
    stab.note = "stability not claimed";
  }
  bool all_exact = true;
  for (int i = 0; i < plan.samples; ++i) {
    FractionalIdeal e = sampler.ideal(), f = sampler.ideal();
    Elem z = sampler.element();
    std::string tag = "E = " + dom->format(e);
    std::string w;
    // (★1)
    {
      FractionalIdeal ze = dom->scale(e, z);
      auto rz = star->apply(ze), re = star->apply(e);
      bool ok = true;
      if (rz.oracle.whole_field || re.oracle.whole_field) {
        ok = rz.oracle.whole_field == re.oracle.whole_field;
      } else if (rz.oracle.presentation && re.oracle.presentation) {
        ok = dom->equal(*rz.oracle.presentation, dom->scale(*re.oracle.presentation, z));
      } else {
        all_exact = false;
        for (const auto& y : probe_elements(*dom, ze, stock))
          if (rz.oracle.member(y) != re.oracle.member(y / z)) {
            ok = false;
            w = dom->format(y);
            break;
          }
      }
      ++a1.checked;
      if (!ok) fail(a1, tag + ", z = " + dom->format(z) + (w.empty() ? "" : ", at " + w));
    }
    // (★2)
    {
      FractionalIdeal g = dom->sum(e, f);
      ++a2.checked;
      if (!included(star, e, star, g, stock, w, all_exact)) fail(a2, tag + " ⊆ " + dom->format(g) + ", at " + w);
    }
    // (★3) extensive
    {
      ++ext.checked;
      for (const auto& g : dom->generators(e))
        if (!star->member(e, g)) fail(ext, tag + ", generator " + dom->format(g));
    }
    // (★3) idempotent
    {
      auto r = star->apply(e);
      ++idem.checked;
      if (r.oracle.whole_field) {
        // K^★ = K.
      } else if (r.oracle.presentation) {
        const auto& p = *r.oracle.presentation;
        bool up = star->covers(p, p);
        bool down = lower || included(star, p, star, e, stock, w, all_exact);
        if (!up || !down) fail(idem, tag + ", E^★ = " + dom->format(p));
      } else {
        // E ⊆ E + yD ⊆ E^★ for y ∈ E^★ forces equal closures.
        all_exact = false;
        for (const auto& y : probe_elements(*dom, e, stock)) {
          if (!r.oracle.member(y) || dom->contains(e, y)) continue;
          FractionalIdeal ey = dom->sum(e, dom->principal(y));
          bool ok = lower ? included(star, e, star, ey, stock, w, all_exact)
                          : same_closure(star, e, ey, stock, w, all_exact);
          if (!ok) fail(idem, tag + ", y = " + dom->format(y) + ", at " + w);
          break;
        }
      }
    }
    // stability
    if (!stab.skipped) {
      FractionalIdeal ef = dom->intersect(e, f);
      auto ri = star->apply(ef), re = star->apply(e), rf = star->apply(f);
      ++stab.checked;
      bool ok = true;
      if (ri.oracle.presentation && re.oracle.presentation && rf.oracle.presentation) {
        ok = dom->equal(*ri.oracle.presentation, dom->intersect(*re.oracle.presentation, *rf.oracle.presentation));
      } else {
        all_exact = false;
        std::vector<Elem> probes = probe_elements(*dom, ef, stock);
        for (const auto& y : probe_elements(*dom, e, stock)) probes.push_back(y);
        for (const auto& y : probes)
          if (ri.oracle.member(y) != (re.oracle.member(y) && rf.oracle.member(y))) {
            ok = false;
            w = dom->format(y);
            break;
          }
      }
      if (!ok) fail(stab, tag + ", F = " + dom->format(f) + ", at " + w);
    }
  }
  std::vector<CheckLine> out{a1, a2, ext, idem, stab};
  if (!all_exact)
    for (auto& l : out)
      if (l.note.empty() && !l.skipped) l.note = "oracle comparisons on probe elements";
  return out;
}

std::vector<CheckLine> check_eab(const StarPtr& star, const std::vector<Triple>& triples) {
  const DomainPtr& dom = star->domain();
  std::vector<CheckLine> out;
  for (const auto& t : triples) {
    CheckLine line;
    line.name = "E = " + dom->format(t.e) + ", F = " + dom->format(t.f) + ", G = " + dom->format(t.g);
    line.checked = 1;
    // (EF)^★ ⊆ (EG)^★ ⇔ EF ⊆ (EG)^★.
    bool premise = star->covers(dom->product(t.e, t.g), dom->product(t.e, t.f));
    if (!premise) {
      line.note = "premise (EF)^★ ⊆ (EG)^★ fails; vacuous";
      out.push_back(line);
      continue;
    }
    auto rg = star->apply(t.g);
    for (const auto& g : dom->generators(t.f))
      if (!rg.oracle.whole_field && !rg.oracle.member(g)) {
        fail(line, dom->format(g) + " ∈ F^★ but ∉ G^★");
        break;
      }
    line.note = "premise holds";
    out.push_back(line);
  }
  return out;
}

Ordering compare_ops(const StarPtr& s1, const StarPtr& s2, const std::vector<FractionalIdeal>& samples) {
  const DomainPtr& dom = s1->domain();
  Sampler sampler(dom, 1);
  Ordering o;
  for (const auto& e : samples) {
    std::string w;
    if (o.le && !included(s1, e, s2, e, sampler.stock(), w, o.exact)) {
      o.le = false;
      o.witnesses.push_back("E = " + dom->format(e) + ": " + w + " ∈ E^" + s1->name() + " \\ E^" + s2->name());
    }
    w.clear();
    if (o.ge && !included(s2, e, s1, e, sampler.stock(), w, o.exact)) {
      o.ge = false;
      o.witnesses.push_back("E = " + dom->format(e) + ": " + w + " ∈ E^" + s2->name() + " \\ E^" + s1->name());
    }
  }
  o.verdict = o.le && o.ge ? "=" : o.le ? "<=" : o.ge ? ">=" : "incomparable";
  return o;
}

ValuationVerdict is_star_valuation_overring(const ValuationSpec& v, const StarPtr& star,
                                            const std::vector<FractionalIdeal>& samples) {
  const DomainPtr& dom = star->domain();
  if (!is_overring_of(v, *dom)) throw std::invalid_argument("valuation ring is not an overring of D");
  Sampler sampler(dom, 1);
  std::vector<Elem> stock = sampler.stock();
  PolyIdeal center = valuation_center(v);
  for (const auto& g : center.generators()) stock.push_back(RatFunc{g, Poly::constant(g.arity(), 1)});
  ValuationVerdict out;
  for (const auto& f : samples) {
    auto vf = ideal_value(v, *dom, f);
    auto r = star->apply(f);
    if (r.oracle.whole_field) {
      out.holds = false;
      out.witness = "F = " + dom->format(f) + ": F^★ = K";
      return out;
    }
    std::vector<Elem> cands = r.oracle.presentation ? dom->generators(*r.oracle.presentation)
                                                    : probe_elements(*dom, f, stock);
    for (const auto& y : cands) {
      if (!r.oracle.presentation && !r.oracle.member(y)) continue;
      if (compare_values(valuation_value(v, y), vf) < 0) {
        out.holds = false;
        out.witness = "F = " + dom->format(f) + ": " + dom->format(y) + " ∈ F^★ has value " +
                      value_to_string(valuation_value(v, y)) + " < " + value_to_string(vf);
        return out;
      }
    }
  }
  return out;
}

QuasiVerdict is_quasi_star_ideal(const FractionalIdeal& i, const StarPtr& star) {
  const DomainPtr& dom = star->domain();
  if (!dom->is_integral(i)) throw std::invalid_argument("ideal is not contained in D");
  auto r = star->apply(i);
  if (r.oracle.whole_field) return {dom->equal(i, dom->unit_ideal()), "presentation"};
  if (r.oracle.presentation) {
    auto c = dom->intersect(*r.oracle.presentation, dom->unit_ideal());
    return {dom->equal(c, i), "presentation"};
  }
  if (r.contraction) return {dom->equal(*r.contraction, i), "contraction"};
  Sampler sampler(dom, 1);
  std::vector<Elem> cands{dom->constant(1)};
  for (const auto& s : sampler.stock()) {
    cands.push_back(s);
    for (const auto& t : sampler.stock()) cands.push_back(s * t);
  }
  for (const auto& g : dom->generators(i))
    for (const auto& s : sampler.stock()) cands.push_back(g / s);
  for (const auto& y : cands)
    if (dom->in_ring(y) && !dom->contains(i, y) && r.oracle.member(y)) return {false, "sampled"};
  return {true, "sampled"};
}

Spectrum quasi_star_spectrum(const StarPtr& star, const std::vector<PrimeIdeal>& candidates) {
  if (candidates.empty()) throw std::invalid_argument("empty candidate list");
  const DomainPtr& dom = star->domain();
  Spectrum out;
  const auto* sp = dynamic_cast<const detail::SpectralOp*>(star.get());
  for (const auto& p : candidates) {
    QuasiVerdict q;
    if (sp) {
      // P^{★_Δ} ∩ D = P iff P lies in some member of Δ.
      q.route = "spectral";
      for (const auto& d : sp->delta())
        if (dom->contains(d.ideal, p.ideal)) q.quasi = true;
    } else {
      q = is_quasi_star_ideal(p.ideal, star);
    }
    out.routes.push_back((p.name.empty() ? dom->format(p.ideal) : p.name) + ": " + q.route);
    if (q.quasi) out.quasi.push_back(p);
  }
  for (const auto& p : out.quasi) {
    bool maximal = true;
    for (const auto& q : out.quasi)
      if (dom->contains(q.ideal, p.ideal) && !dom->equal(q.ideal, p.ideal)) maximal = false;
    if (maximal) out.maximal.push_back(p);
  }
  return out;
}

}  // namespace semistar
