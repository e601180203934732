#include "semistar/function_rings.hpp"

#include <set>

namespace semistar {

namespace {

std::vector<FractionalIdeal> multiplier_pool(const Domain& dom, const FractionalIdeal& cf, const FractionalIdeal& cg,
                                             const KrBudget& budget) {
  std::vector<FractionalIdeal> base;
  if (auto m = local_center(dom)) base.push_back(*m);
  for (const auto& b : {cf, cg, dom.sum(cf, cg)}) base.push_back(b);
  for (const auto& a : budget.aux) base.push_back(a);
  std::vector<FractionalIdeal> pool{dom.unit_ideal()};
  std::set<std::string> seen{dom.format(dom.normalize(dom.unit_ideal()))};
  std::vector<FractionalIdeal> layer{dom.unit_ideal()};
  for (int k = 0; k < budget.max_factors; ++k) {
    std::vector<FractionalIdeal> next;
    for (const auto& l : layer)
      for (const auto& b : base) {
        FractionalIdeal p = dom.normalize(dom.product(l, b));
        if (seen.insert(dom.format(p)).second) {
          pool.push_back(p);
          next.push_back(p);
        }
      }
    layer = std::move(next);
  }
  return pool;
}

}  // namespace

MembershipCertificate kr_member(const StarPtr& star, const RationalFunctionElem& z, const KrBudget& budget) {
  const DomainPtr& dom = star->domain();
  if (z.g.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (z.f.is_zero()) return {Verdict::Yes, "zero", "0 ∈ Kr", std::nullopt, std::nullopt};
  RationalFunctionElem c = clear_denominators(*dom, z);
  FractionalIdeal cf = content(*dom, c.f), cg = content(*dom, c.g);
  MembershipCertificate cert;
  if (star->flags().eab_claimed) {
    bool yes = star->covers(cg, cf);
    if (yes || star->grade() == Grade::Exact) {
      cert.route = "e.a.b.";
      cert.h = TPoly::constant(dom->constant(1));
      cert.verdict = yes ? Verdict::Yes : Verdict::No;
      cert.witness = yes ? "c(f)^★ ⊆ c(g)^★" : "c(f)^★ ⊄ c(g)^★";
      return cert;
    }
  }
  for (const auto& h : multiplier_pool(*dom, cf, cg, budget)) {
    if (star->covers(dom->product(cg, h), dom->product(cf, h))) {
      cert.verdict = Verdict::Yes;
      cert.route = "multiplier";
      cert.h = TPoly::spread(dom->generators(h));
      cert.witness = "h = " + cert.h->to_string(*dom) + ": c(f)c(h) ⊆ (c(g)c(h))^★";
      return cert;
    }
  }
  if (dom->kind() == DomainKind::PolyLocal) {
    std::vector<FractionalIdeal> samples = budget.samples;
    if (samples.empty()) samples = {cf, cg, dom->sum(cf, cg)};
    for (const auto& v : budget.valuations) {
      if (!is_overring_of(v, *dom)) continue;
      if (compare_values(ideal_value(v, *dom, cf), ideal_value(v, *dom, cg)) >= 0) continue;
      if (!is_star_valuation_overring(v, star, samples).holds) continue;
      cert.verdict = Verdict::No;
      cert.route = "valuation obstruction";
      cert.obstruction = v;
      cert.witness = (v.name.empty() ? std::string("V") : v.name) + ": value(c(f)) = " +
                     value_to_string(ideal_value(v, *dom, cf)) + " < " + value_to_string(ideal_value(v, *dom, cg)) +
                     " = value(c(g))";
      return cert;
    }
  }
  if (budget.nagata_route) {
    auto na = na_member(star, z);
    if (na.verdict == Verdict::Yes) {
      cert.verdict = Verdict::Yes;
      cert.route = "nagata";
      cert.h = na.h;
      cert.witness = "Na(D,★) ⊆ Kr(D,★): " + na.witness;
      return cert;
    }
  }
  cert.route = "budget exhausted";
  cert.witness = "no multiplier in the pool and no obstruction";
  return cert;
}

IdealOracle extend_contract_kr(const StarPtr& star, const FractionalIdeal& e, const KrBudget& budget) {
  DomainPtr dom = star->domain();
  TPoly fe = TPoly::spread(dom->generators(e));
  IdealOracle o;
  o.description = "E·Kr(D," + star->name() + ") ∩ K";
  o.grade = star->flags().eab_claimed ? Grade::Exact : Grade::LowerBound;
  auto kr = [star, fe, budget, dom](const Elem& z) {
    if (is_zero(z)) return Verdict::Yes;
    return kr_member(star, {TPoly::constant(z), fe}, budget).verdict;
  };
  o.member = [kr](const Elem& z) { return kr(z) == Verdict::Yes; };
  if (budget.upper && o.grade != Grade::Exact) {
    auto up = budget.upper->apply(e);
    if (up.oracle.presentation) {
      bool pinned = true;
      for (const auto& g : dom->generators(*up.oracle.presentation))
        if (kr(g) != Verdict::Yes) pinned = false;
      if (pinned) {
        o.presentation = up.oracle.presentation;
        o.member = up.oracle.member;
        o.grade = Grade::Exact;
        o.description += " = E^" + budget.upper->name();
      }
    }
  }
  return o;
}

BezoutCombination kr_bezout_combine(const TPoly& f, const TPoly& g, const StarPtr& star, const KrBudget& budget) {
  const Domain& dom = *star->domain();
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("zero polynomial");
  BezoutCombination out;
  int n = f.degree() + 1;
  out.h = f + g.shifted(n);
  out.f_over_h = kr_member(star, {f, out.h}, budget);
  out.g_over_h = kr_member(star, {g, out.h}, budget);
  out.combination = "h = 1·(" + f.to_string(dom) + ") + " + kFunctionVariable +
                    (n > 1 ? "^" + std::to_string(n) : "") + "·(" + g.to_string(dom) + ")";
  return out;
}

namespace {

bool same_primes(const Domain& dom, const std::vector<PrimeIdeal>& a, const std::vector<PrimeIdeal>& b) {
  auto covered = [&](const std::vector<PrimeIdeal>& x, const std::vector<PrimeIdeal>& y) {
    for (const auto& p : x) {
      bool found = false;
      for (const auto& q : y)
        if (dom.equal(p.ideal, q.ideal)) found = true;
      if (!found) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace

NaComparison na_equal_iff_M(const StarPtr& s1, const StarPtr& s2, const std::vector<PrimeIdeal>& candidates,
                            const std::vector<RationalFunctionElem>& samples) {
  const DomainPtr& dom = s1->domain();
  NaComparison out;
  out.m1 = quasi_star_spectrum(finite_type_closure(s1), candidates).maximal;
  out.m2 = quasi_star_spectrum(finite_type_closure(s2), candidates).maximal;
  out.m_equal = same_primes(*dom, out.m1, out.m2);
  for (const auto& z : samples) {
    auto a = na_member(s1, z).verdict, b = na_member(s2, z).verdict;
    if (a == Verdict::Unknown || b == Verdict::Unknown || a == b) continue;
    out.samples_agree = false;
    if (!out.separator) out.separator = z;
  }
  if (!out.m_equal) {
    std::vector<PrimeIdeal> diff;
    for (const auto* pair : {&out.m1, &out.m2})
      for (const auto& p : *pair)
        if (!same_primes(*dom, {p}, out.m1) || !same_primes(*dom, {p}, out.m2)) diff.push_back(p);
    for (const auto& p : diff) {
      RationalFunctionElem z{TPoly::constant(dom->constant(1)), TPoly::spread(dom->generators(p.ideal))};
      auto a = na_member(s1, z).verdict, b = na_member(s2, z).verdict;
      if (a != Verdict::Unknown && b != Verdict::Unknown && a != b) {
        out.separator = z;
        break;
      }
    }
    out.note = out.separator ? "separated by " + out.separator->to_string(*dom)
                             : "maximal sets differ but no separating element among the candidates";
  } else {
    out.note = out.samples_agree ? "Na memberships agree on " + std::to_string(samples.size()) + " samples"
                                 : "sampled Na memberships differ at " + out.separator->to_string(*dom);
  }
  return out;
}

}  // namespace semistar
