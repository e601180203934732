#include "semistar/function_rings.hpp"

#include <algorithm>
#include <stdexcept>

namespace semistar {

TPoly::TPoly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly TPoly::spread(const std::vector<Elem>& coeffs) { return TPoly(coeffs); }

void TPoly::trim() {
  while (!coeffs_.empty() && semistar::is_zero(coeffs_.back())) coeffs_.pop_back();
}

std::vector<Elem> TPoly::support() const {
  std::vector<Elem> out;
  for (const auto& c : coeffs_)
    if (!semistar::is_zero(c)) out.push_back(c);
  return out;
}

TPoly TPoly::operator+(const TPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  std::vector<Elem> r(std::max(coeffs_.size(), o.coeffs_.size()), constant_like(coeffs_.front(), 0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = r[i] + coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] = r[i] + o.coeffs_[i];
  return TPoly(std::move(r));
}

TPoly TPoly::operator*(const TPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Elem> r(coeffs_.size() + o.coeffs_.size() - 1, constant_like(coeffs_.front(), 0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (semistar::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] = r[i + j] + coeffs_[i] * o.coeffs_[j];
  }
  return TPoly(std::move(r));
}

TPoly TPoly::scaled(const Elem& c) const {
  std::vector<Elem> r;
  for (const auto& a : coeffs_) r.push_back(a * c);
  return TPoly(std::move(r));
}

TPoly TPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<Elem> r(static_cast<std::size_t>(k), constant_like(coeffs_.front(), 0));
  r.insert(r.end(), coeffs_.begin(), coeffs_.end());
  return TPoly(std::move(r));
}

std::string TPoly::to_string(const Domain& dom) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (semistar::is_zero(coeffs_[i])) continue;
    std::string c = dom.format(coeffs_[i]);
    bool negative = !c.empty() && c.front() == '-' && c.find_first_of("+-", 1) == std::string::npos;
    if (negative) c = c.substr(1);
    if (c.find_first_of("+-", 1) != std::string::npos || c.find('/') != std::string::npos) c = "(" + c + ")";
    std::string term;
    if (i == 0) {
      term = c;
    } else {
      term = c == "1" ? "" : c + "*";
      term += kFunctionVariable;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

std::string RationalFunctionElem::to_string(const Domain& dom) const {
  auto wrap = [&](const TPoly& p) {
    std::string s = p.to_string(dom);
    return p.support().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(f) + "/" + wrap(g);
}

namespace {

/// m with m·c in the presentation ring of D.
Elem clearing_factor(const Elem& c) {
  return std::visit(
      [&](const auto& a) -> Elem {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return Rational(a.get_den());
        } else if constexpr (std::is_same_v<T, QuadNum>) {
          Integer l;
          mpz_lcm(l.get_mpz_t(), a.a.get_den_mpz_t(), a.b.get_den_mpz_t());
          return QuadNum{Rational(l), 0, a.d};
        } else {
          RatFunc r = reduce_fully(a);
          return RatFunc{r.den, Poly::constant(r.den.arity(), 1)};
        }
      },
      c);
}

}  // namespace

RationalFunctionElem clear_denominators(const Domain& dom, const RationalFunctionElem& z) {
  if (z.g.is_zero()) throw std::domain_error("rational function with zero denominator");
  Elem m = dom.constant(1);
  for (const auto* p : {&z.f, &z.g})
    for (const auto& c : p->coeffs())
      if (!is_zero(c)) {
        Elem k = clearing_factor(c * m);
        m = m * k;
      }
  auto reduce = [](const TPoly& p) {
    std::vector<Elem> out;
    for (const auto& c : p.coeffs()) {
      if (const auto* r = std::get_if<RatFunc>(&c))
        out.push_back(reduce_fully(*r));
      else
        out.push_back(c);
    }
    return TPoly(std::move(out));
  };
  return {reduce(z.f.scaled(m)), reduce(z.g.scaled(m))};
}

FractionalIdeal content(const Domain& dom, const TPoly& f) {
  auto s = f.support();
  if (s.empty()) throw std::invalid_argument("content of the zero polynomial");
  return dom.make_ideal(s);
}

bool same_function(const RationalFunctionElem& a, const RationalFunctionElem& b) {
  TPoly l = a.f * b.g, r = b.f * a.g;
  if (l.coeffs().size() != r.coeffs().size()) return false;
  for (std::size_t i = 0; i < l.coeffs().size(); ++i)
    if (!elem_equal(l.coeffs()[i], r.coeffs()[i])) return false;
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "?";
}

RationalFunctionElem sample_rational_function(Sampler& s, const Domain& dom) {
  std::uniform_int_distribution<int> deg(0, 2), coin(0, 3);
  auto poly = [&](bool nonzero) {
    std::vector<Elem> c;
    int n = deg(s.rng());
    for (int i = 0; i <= n; ++i) c.push_back(coin(s.rng()) == 0 ? dom.constant(0) : s.integral_element(2));
    TPoly p(std::move(c));
    if (nonzero && p.is_zero()) p = TPoly::constant(s.integral_element(2));
    return p;
  };
  TPoly f = poly(true), g = poly(true);
  return {f, g};
}

}  // namespace semistar
