#include "semistar/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace semistar {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exponent_lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent exponent_add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent exponent_sub(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

namespace {

int degrevlex_range(const Exponent& a, const Exponent& b, std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  switch (kind) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::DegRevLex:
      return degrevlex_range(a, b, 0, a.size());
    case Kind::Elimination: {
      std::size_t k = std::min(block, a.size());
      if (int c = degrevlex_range(a, b, 0, k); c != 0) return c;
      return degrevlex_range(a, b, k, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::key() const {
  switch (kind) {
    case Kind::Lex: return "lex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Elimination: return "elim" + std::to_string(block);
  }
  return "?";
}

Poly Poly::constant(std::size_t arity, const Rational& c) {
  Poly p(arity);
  p.add_term(Exponent(arity, 0), c);
  return p;
}

Poly Poly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw std::invalid_argument("variable index out of range");
  Exponent e(arity, 0);
  e[index] = 1;
  return monomial(e, 1);
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && semistar::total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const { return coefficient(Exponent(arity_, 0)); }

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, semistar::total_degree(e));
  return d;
}

int Poly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("polynomial arity mismatch");
  Poly r(a.arity_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(exponent_add(ea, eb), ca * cb);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(arity_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Exponent Poly::leading_exponent(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return best->first;
}

Rational Poly::leading_coefficient(const MonomialOrder& order) const {
  return coefficient(leading_exponent(order));
}

Poly Poly::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient(order);
  return *this * inv;
}

Poly Poly::embed(std::size_t new_arity, const std::vector<std::size_t>& placement) const {
  Poly r(new_arity);
  for (const auto& [e, c] : terms_) {
    Exponent ne(new_arity, 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[placement[i]] += e[i];
    r.add_term(ne, c);
  }
  return r;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<Poly> out;
  for (const auto& [e, c] : terms_) {
    auto k = static_cast<std::size_t>(e[var]);
    if (out.size() <= k) out.resize(k + 1, Poly(arity_));
    Exponent ne = e;
    ne[var] = 0;
    out[k].add_term(ne, c);
  }
  return out;
}

Poly Poly::drop_variable(std::size_t var) const {
  Poly r(arity_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[var] != 0) throw std::invalid_argument("variable still occurs");
    Exponent ne;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var) ne.push_back(e[i]);
    r.add_term(ne, c);
  }
  return r;
}

std::vector<std::string> default_variable_names(std::size_t arity) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arity; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  // Render in descending degrevlex so output is stable and readable.
  std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
  auto order = MonomialOrder::degrevlex();
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit_coeff = mag == 1;
    bool has_vars = semistar::total_degree(e) > 0;
    if (!unit_coeff || !has_vars) {
      if (is_integer(mag))
        os << mag.get_str();
      else
        os << "(" << mag.get_str() << ")";
    }
    bool printed = !unit_coeff || !has_vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      printed = true;
      os << names.at(i);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace semistar
