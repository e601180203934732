#include "semistar/domain.hpp"

#include "backends.hpp"

#include <stdexcept>

namespace semistar {

std::string to_string(PrimeCert c) {
  switch (c) {
    case PrimeCert::PrincipalIrreducible: return "principal-irreducible";
    case PrimeCert::MonomialMaximal: return "monomial-maximal";
    case PrimeCert::LinearPrime: return "linear";
    case PrimeCert::NormForm: return "norm-form";
    case PrimeCert::UserAsserted: return "user-asserted";
  }
  return "unknown";
}

std::string to_string(Grade g) {
  switch (g) {
    case Grade::Exact: return "exact";
    case Grade::LowerBound: return "lower-bound";
    case Grade::UpperBound: return "upper-bound";
  }
  return "unknown";
}

std::vector<Elem> Domain::generators(const FractionalIdeal& e) const {
  std::vector<Elem> out;
  out.reserve(e.num.size());
  for (const auto& g : e.num) out.push_back(g / e.den);
  return out;
}

bool Domain::contains(const FractionalIdeal& e, const FractionalIdeal& f) const {
  for (const auto& g : generators(f))
    if (!contains(e, g)) return false;
  return true;
}

bool Domain::equal(const FractionalIdeal& e, const FractionalIdeal& f) const {
  return contains(e, f) && contains(f, e);
}

bool Domain::is_integral(const FractionalIdeal& e) const {
  for (const auto& g : generators(e))
    if (!in_ring(g)) return false;
  return true;
}

FractionalIdeal Domain::scale(const FractionalIdeal& e, const Elem& z) const {
  if (is_zero(z)) throw std::invalid_argument("scaling by zero");
  std::vector<Elem> gens;
  for (const auto& g : generators(e)) gens.push_back(g * z);
  return make_ideal(gens);
}

FractionalIdeal Domain::power(const FractionalIdeal& e, int k) const {
  FractionalIdeal base = k < 0 ? dual(e) : e;
  FractionalIdeal r = unit_ideal();
  for (int i = 0; i < std::abs(k); ++i) r = product(r, base);
  return normalize(r);
}

std::string Domain::format(const FractionalIdeal& e) const {
  std::string s = "(";
  auto gens = generators(normalize(e));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += format(gens[i]);
  }
  return s + ")";
}

DomainPtr make_domain(const DomainSpec& spec) {
  switch (spec.kind) {
    case DomainKind::Integers:
      if (spec.localize_at && !is_prime_integer(Integer(*spec.localize_at)))
        throw std::invalid_argument("localization at a non-prime integer");
      return std::make_shared<detail::IntegersDomain>(spec.localize_at);
    case DomainKind::QuadraticOrder:
      if (spec.d == 0 || is_square(spec.d))
        throw std::invalid_argument("quadratic order needs a non-square d");
      return std::make_shared<detail::QuadDomain>(spec.d);
    case DomainKind::PolyLocal: {
      if (spec.variables.empty()) throw std::invalid_argument("polynomial backend needs variables");
      if (spec.center == CenterKind::Principal) {
        if (!spec.center_generator || spec.center_generator->arity() != spec.variables.size())
          throw std::invalid_argument("principal center needs a generator over the variables");
        const Poly& f = *spec.center_generator;
        if (f.total_degree() < 1) throw std::invalid_argument("center generator is a unit");
        if (f.total_degree() != 1 && !spec.assume_center_prime)
          throw std::invalid_argument("cannot certify the center " +
                                      f.to_string(spec.variables) + " as prime");
      }
      return std::make_shared<detail::PolyDomain>(spec.variables, spec.center, spec.center_generator);
    }
  }
  throw std::invalid_argument("unknown domain kind");
}

std::optional<FractionalIdeal> local_center(const Domain& dom) {
  if (auto* z = dynamic_cast<const detail::IntegersDomain*>(&dom)) {
    if (!z->localized_at()) return std::nullopt;
    return z->make_prime_center();
  }
  if (auto* pd = dynamic_cast<const detail::PolyDomain*>(&dom)) {
    if (!pd->center_ideal()) return std::nullopt;
    return pd->from_parts(*pd->center_ideal(), Poly::constant(pd->arity(), 1));
  }
  return std::nullopt;
}

bool is_local_center(const Domain& dom, const PrimeIdeal& p) {
  auto c = local_center(dom);
  return c && dom.equal(*c, p.ideal);
}

IdealOracle localize_contract(const DomainPtr& dom, const FractionalIdeal& e, const PrimeIdeal& p) {
  if (!dom->is_integral(p.ideal)) throw std::invalid_argument("prime is not contained in D");
  IdealOracle o;
  o.member = [dom, e, p](const Elem& z) { return dom->contains_local(e, z, p); };
  o.grade = Grade::Exact;
  o.description = dom->format(e) + "·D_" + (p.name.empty() ? dom->format(p.ideal) : p.name);
  if (!dom->is_integral(e)) return o;
  // Contraction to D when P is principal in a UFD backend.
  if (auto* z = dynamic_cast<const detail::IntegersDomain*>(dom.get())) {
    Rational q = z->generator(p.ideal), g = z->generator(e);
    Integer qi = q.get_num(), gi = g.get_num(), pw = 1;
    while (mpz_divisible_p(gi.get_mpz_t(), qi.get_mpz_t())) {
      gi /= qi;
      pw *= qi;
    }
    o.presentation = dom->make_ideal({Rational(pw)});
  } else if (auto* pd = dynamic_cast<const detail::PolyDomain*>(dom.get())) {
    auto pnum = pd->numerator(p.ideal);
    if (pnum.generators().size() == 1 && !pnum.is_unit()) {
      Poly f = pnum.generators().front();
      int k = -detail::order_along(pd->denominator(e), f);
      int m = 1 << 30;
      PolyIdeal en = pd->numerator(e);
      for (const auto& g : en.generators()) m = std::min(m, detail::order_along(g, f));
      o.presentation = pd->from_parts(PolyIdeal(pd->arity(), {f.pow(static_cast<unsigned>(std::max(0, k + m)))}),
                                      Poly::constant(pd->arity(), 1));
    } else if (pd->center_ideal() && pnum.equals(*pd->center_ideal())) {
      o.presentation = dom->normalize(e);
    }
  }
  if (!o.presentation) {
    // E ⊄ P gives E·D_P = D_P; E = P gives back P.
    bool inside = true;
    for (const auto& g : dom->generators(e))
      if (!dom->contains(p.ideal, g)) inside = false;
    if (!inside) o.presentation = dom->unit_ideal();
    else if (dom->equal(e, p.ideal)) o.presentation = dom->normalize(p.ideal);
  }
  return o;
}

}  // namespace semistar
