#include "semistar/valuation.hpp"

#include "backends.hpp"

#include <stdexcept>

namespace semistar {

namespace {

ValuationValue term_value(const ValuationSpec& v, const Exponent& e) {
  if (v.kind == ValuationSpec::Kind::MonomialWeight) {
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += v.weight[i] * e[i];
    return {s};
  }
  ValuationValue out;
  for (const auto& row : v.rows) {
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += Rational(row[i] * e[i]);
    out.push_back(s);
  }
  return out;
}

}  // namespace

ValuationSpec ValuationSpec::monomial_weight(std::vector<Rational> w, std::string name) {
  ValuationSpec v;
  v.kind = Kind::MonomialWeight;
  v.arity = w.size();
  v.weight = std::move(w);
  v.name = std::move(name);
  return v;
}

ValuationSpec ValuationSpec::lex_monomial(std::vector<long> r1, std::vector<long> r2, std::string name) {
  if (r1.size() != r2.size()) throw std::invalid_argument("lex rows of different length");
  if (r1.size() >= 2) {
    bool independent = false;
    for (std::size_t i = 0; i < r1.size(); ++i)
      for (std::size_t j = i + 1; j < r1.size(); ++j)
        if (r1[i] * r2[j] - r1[j] * r2[i] != 0) independent = true;
    if (!independent) throw std::invalid_argument("lex rows must be independent");
  }
  ValuationSpec v;
  v.kind = Kind::LexMonomial;
  v.arity = r1.size();
  v.rows = {std::move(r1), std::move(r2)};
  v.name = std::move(name);
  return v;
}

ValuationSpec ValuationSpec::dvr_along(const Poly& f, std::string name) {
  if (f.is_zero() || f.is_constant()) throw std::invalid_argument("DVR needs a non-constant prime");
  ValuationSpec v;
  v.kind = Kind::DVRAlongPrime;
  v.arity = f.arity();
  v.prime = f.monic(MonomialOrder::degrevlex());
  v.name = std::move(name);
  return v;
}

std::string ValuationSpec::describe(const std::vector<std::string>& vars) const {
  if (!name.empty()) return name;
  auto row = [](const auto& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + Rational(r[i]).get_str();
    return s + ")";
  };
  switch (kind) {
    case Kind::MonomialWeight: return "monomial" + row(weight);
    case Kind::LexMonomial: return "lex" + row(rows[0]) + row(rows[1]);
    case Kind::DVRAlongPrime: return "ord_" + prime.to_string(vars);
  }
  return "valuation";
}

ValuationValue value_of_poly(const ValuationSpec& v, const Poly& p) {
  if (p.is_zero()) throw std::domain_error("valuation of zero");
  if (p.arity() != v.arity) throw std::invalid_argument("valuation arity mismatch");
  if (v.kind == ValuationSpec::Kind::DVRAlongPrime) return {Rational(detail::order_along(p, v.prime))};
  ValuationValue best;
  for (const auto& [e, c] : p.terms()) {
    auto t = term_value(v, e);
    if (best.empty() || compare_values(t, best) < 0) best = t;
  }
  return best;
}

ValuationValue valuation_value(const ValuationSpec& v, const Elem& z) {
  const auto* r = std::get_if<RatFunc>(&z);
  if (!r) throw std::invalid_argument("valuations act on rational functions");
  if (r->num.is_zero()) throw std::domain_error("valuation of zero");
  auto a = value_of_poly(v, r->num), b = value_of_poly(v, r->den);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

int compare_values(const ValuationValue& a, const ValuationValue& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

ValuationValue add_values(const ValuationValue& a, const ValuationValue& b) {
  ValuationValue out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

bool value_nonnegative(const ValuationValue& a) {
  return compare_values(a, ValuationValue(a.size(), Rational(0))) >= 0;
}

std::string value_to_string(const ValuationValue& a) {
  if (a.size() == 1) return a[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].get_str();
  return s + ")";
}

ValuationValue ideal_value(const ValuationSpec& v, const Domain& dom, const FractionalIdeal& e) {
  ValuationValue best;
  for (const auto& g : dom.generators(e)) {
    if (is_zero(g)) continue;
    auto t = valuation_value(v, g);
    if (best.empty() || compare_values(t, best) < 0) best = t;
  }
  return best;
}

bool in_extension(const ValuationSpec& v, const Domain& dom, const FractionalIdeal& e, const Elem& z) {
  if (is_zero(z)) return true;
  return compare_values(valuation_value(v, z), ideal_value(v, dom, e)) >= 0;
}

bool contains_polynomials(const ValuationSpec& v) {
  if (v.kind == ValuationSpec::Kind::DVRAlongPrime) return true;
  for (std::size_t i = 0; i < v.arity; ++i) {
    Exponent e(v.arity, 0);
    e[i] = 1;
    if (!value_nonnegative(term_value(v, e))) return false;
  }
  return true;
}

PolyIdeal valuation_center(const ValuationSpec& v) {
  if (!contains_polynomials(v)) throw std::invalid_argument("valuation is negative on a variable");
  if (v.kind == ValuationSpec::Kind::DVRAlongPrime) return PolyIdeal(v.arity, {v.prime});
  std::vector<Poly> gens;
  const ValuationValue zero = v.kind == ValuationSpec::Kind::MonomialWeight ? ValuationValue{0}
                                                                            : ValuationValue{0, 0};
  for (std::size_t i = 0; i < v.arity; ++i) {
    Exponent e(v.arity, 0);
    e[i] = 1;
    if (compare_values(term_value(v, e), zero) > 0) gens.push_back(Poly::variable(v.arity, i));
  }
  return PolyIdeal(v.arity, gens);
}

bool contains_localization(const ValuationSpec& v, const Domain& dom, const PrimeIdeal& p) {
  const auto* pd = dynamic_cast<const detail::PolyDomain*>(&dom);
  if (!pd) throw std::invalid_argument("valuation overrings are supported on polynomial backends");
  if (!contains_polynomials(v)) return false;
  PolyIdeal c = valuation_center(v);
  return pd->numerator(p.ideal).contains(c);
}

bool is_overring_of(const ValuationSpec& v, const Domain& dom) {
  const auto* pd = dynamic_cast<const detail::PolyDomain*>(&dom);
  if (!pd) throw std::invalid_argument("valuation overrings are supported on polynomial backends");
  if (!contains_polynomials(v)) return false;
  if (!pd->center_ideal()) return true;
  return pd->center_ideal()->contains(valuation_center(v));
}

}  // namespace semistar
