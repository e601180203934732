#include "semistar/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>

namespace semistar {

namespace {

// Terms kept in ascending order, so the leading term is back().
struct Term {
  Exponent exp;
  Rational coeff;
};
using TermList = std::vector<Term>;

TermList to_terms(const Poly& p, const MonomialOrder& order) {
  TermList t;
  t.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) t.push_back({e, c});
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.exp, b.exp) < 0; });
  return t;
}

Poly from_terms(const TermList& t, std::size_t arity) {
  Poly p(arity);
  for (const auto& term : t) p.add_term(term.exp, term.coeff);
  return p;
}

// a - c * x^shift * b, both ascending.
TermList sub_scaled(const TermList& a, const Rational& c, const Exponent& shift, const TermList& b,
                    const MonomialOrder& order) {
  TermList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Exponent be = exponent_add(b[j].exp, shift);
    if (i == a.size()) {
      out.push_back({std::move(be), -c * b[j].coeff});
      ++j;
      continue;
    }
    int cmp = order.compare(a[i].exp, be);
    if (cmp < 0) {
      out.push_back(a[i++]);
    } else if (cmp > 0) {
      out.push_back({std::move(be), -c * b[j].coeff});
      ++j;
    } else {
      Rational v = a[i].coeff - c * b[j].coeff;
      if (v != 0) out.push_back({a[i].exp, v});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(TermList& t) {
  if (t.empty()) return;
  Rational inv = 1 / t.back().coeff;
  for (auto& term : t) term.coeff *= inv;
}

// Full reduction: every term of the result is irreducible by `basis`.
TermList reduce(TermList p, const std::vector<TermList>& basis, const MonomialOrder& order) {
  TermList rem;
  while (!p.empty()) {
    const Term& lt = p.back();
    const TermList* divisor = nullptr;
    for (const auto& g : basis) {
      if (divides(g.back().exp, lt.exp)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.push_back(lt);
      p.pop_back();
      continue;
    }
    Rational factor = lt.coeff / divisor->back().coeff;
    Exponent shift = exponent_sub(lt.exp, divisor->back().exp);
    p = sub_scaled(p, factor, shift, *divisor, order);
  }
  std::reverse(rem.begin(), rem.end());
  return rem;
}

TermList s_polynomial(const TermList& f, const TermList& g, const MonomialOrder& order) {
  Exponent l = exponent_lcm(f.back().exp, g.back().exp);
  TermList sf = sub_scaled(TermList{}, -1, exponent_sub(l, f.back().exp), f, order);
  return sub_scaled(sf, 1, exponent_sub(l, g.back().exp), g, order);
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

namespace {
std::atomic<std::uint64_t> g_instances{0};
std::atomic<std::size_t> g_max_arity{0};
std::atomic<int> g_max_degree{0};

template <typename T>
void raise_to(std::atomic<T>& slot, T v) {
  T cur = slot.load();
  while (v > cur && !slot.compare_exchange_weak(cur, v)) {
  }
}
}  // namespace

GroebnerStats groebner_stats() { return {g_instances.load(), g_max_arity.load(), g_max_degree.load()}; }

void reset_groebner_stats() {
  g_instances = 0;
  g_max_arity = 0;
  g_max_degree = 0;
}

std::vector<Poly> groebner_basis(std::span<const Poly> gens, const MonomialOrder& order) {
  if (gens.empty()) throw std::invalid_argument("groebner_basis: empty generator list");
  const std::size_t arity = gens.front().arity();
  std::vector<const Poly*> nonzero;
  for (const auto& g : gens) {
    if (g.arity() != arity) throw std::invalid_argument("groebner_basis: arity mismatch");
    if (!g.is_zero()) nonzero.push_back(&g);
  }
  if (nonzero.empty()) throw std::invalid_argument("groebner_basis: all generators are zero");

  // Principal and monomial ideals have a closed-form reduced basis.
  if (nonzero.size() == 1) return {nonzero.front()->monic(order)};
  if (std::all_of(nonzero.begin(), nonzero.end(), [](const Poly* g) { return g->is_monomial(); })) {
    std::vector<Exponent> exps;
    for (const Poly* g : nonzero) exps.push_back(g->terms().begin()->first);
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<Exponent> minimal;
    for (const auto& e : exps) {
      bool redundant = std::any_of(exps.begin(), exps.end(),
                                   [&](const Exponent& f) { return f != e && divides(f, e); });
      if (!redundant) minimal.push_back(e);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Exponent& a, const Exponent& b) { return order.compare(a, b) > 0; });
    std::vector<Poly> out;
    for (const auto& e : minimal) out.push_back(Poly::monomial(e, 1));
    return out;
  }

  ++g_instances;
  raise_to(g_max_arity, arity);
  for (const Poly* g : nonzero) raise_to(g_max_degree, g->total_degree());
  std::vector<TermList> basis;
  for (const auto& g : gens) {
    if (g.arity() != arity) throw std::invalid_argument("groebner_basis: arity mismatch");
    if (g.is_zero()) continue;
    TermList t = to_terms(g, order);
    make_monic(t);
    basis.push_back(std::move(t));
  }
  if (basis.empty()) throw std::invalid_argument("groebner_basis: all generators are zero");

  // Pair (i, j) with i < j, keyed for the normal selection strategy.
  struct Pair {
    int degree;
    std::size_t j, i;
    auto operator<=>(const Pair&) const = default;
  };
  std::set<Pair> pairs;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Exponent l = exponent_lcm(basis[i].back().exp, basis[j].back().exp);
      pairs.insert({total_degree(l), j, i});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);
  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    Exponent l = exponent_lcm(basis[a].back().exp, basis[b].back().exp);
    return pairs.count({total_degree(l), b, a}) > 0;
  };

  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    const Exponent& li = basis[p.i].back().exp;
    const Exponent& lj = basis[p.j].back().exp;
    if (coprime(li, lj)) continue;
    Exponent l = exponent_lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (divides(basis[k].back().exp, l) && !pending(p.i, k) && !pending(p.j, k)) chain = true;
    }
    if (chain) continue;
    TermList r = reduce(s_polynomial(basis[p.i], basis[p.j], order), basis, order);
    if (r.empty()) continue;
    make_monic(r);
    basis.push_back(std::move(r));
    add_pairs(basis.size() - 1);
  }

  // Minimalize.
  std::vector<TermList> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const Exponent& lk = basis[k].back().exp;
      const Exponent& lm = basis[i].back().exp;
      if (divides(lk, lm) && (lk != lm || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<TermList> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    Term lead = minimal[i].back();
    TermList tail(minimal[i].begin(), minimal[i].end() - 1);
    TermList rt = reduce(tail, others, order);
    rt.push_back(lead);
    minimal[i] = std::move(rt);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const TermList& a, const TermList& b) {
    return order.compare(a.back().exp, b.back().exp) > 0;
  });
  std::vector<Poly> out;
  for (const auto& t : minimal) out.push_back(from_terms(t, arity));
  return out;
}

Poly normal_form(const Poly& p, std::span<const Poly> basis, const MonomialOrder& order) {
  std::vector<TermList> b;
  for (const auto& g : basis) {
    if (g.arity() != p.arity()) throw std::invalid_argument("normal_form: arity mismatch");
    if (!g.is_zero()) b.push_back(to_terms(g, order));
  }
  return from_terms(reduce(to_terms(p, order), b, order), p.arity());
}

std::optional<Poly> exact_divide(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  if (p.arity() != q.arity()) throw std::invalid_argument("exact_divide: arity mismatch");
  const auto order = MonomialOrder::degrevlex();
  TermList rest = to_terms(p, order);
  TermList d = to_terms(q, order);
  Poly quotient(p.arity());
  while (!rest.empty()) {
    const Term& lt = rest.back();
    if (!divides(d.back().exp, lt.exp)) return std::nullopt;
    Rational factor = lt.coeff / d.back().coeff;
    Exponent shift = exponent_sub(lt.exp, d.back().exp);
    quotient.add_term(shift, factor);
    rest = sub_scaled(rest, factor, shift, d, order);
  }
  return quotient;
}

PolyIdeal::PolyIdeal(std::size_t arity, std::vector<Poly> gens) : arity_(arity) {
  for (auto& g : gens) {
    if (g.arity() != arity) throw std::invalid_argument("PolyIdeal: arity mismatch");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

PolyIdeal PolyIdeal::unit(std::size_t arity) { return PolyIdeal(arity, {Poly::constant(arity, 1)}); }

bool PolyIdeal::is_zero() const { return gens_.empty(); }

const std::vector<Poly>& PolyIdeal::basis(const MonomialOrder& order) const {
  std::lock_guard lock(cache_->mutex);
  auto key = order.key();
  auto it = cache_->bases.find(key);
  if (it != cache_->bases.end()) return it->second;
  std::vector<Poly> gb;
  if (!gens_.empty()) gb = groebner_basis(gens_, order);
  return cache_->bases.emplace(key, std::move(gb)).first->second;
}

bool PolyIdeal::contains(const Poly& p) const {
  if (p.is_zero()) return true;
  if (gens_.empty()) return false;
  return normal_form(p, basis(), MonomialOrder::degrevlex()).is_zero();
}

bool PolyIdeal::contains(const PolyIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Poly& g) { return contains(g); });
}

bool PolyIdeal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant();
}

bool PolyIdeal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_monomial(); });
}

std::string PolyIdeal::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string(names);
  if (gens_.empty()) os << "0";
  os << ")";
  return os.str();
}

bool ideal_membership(const Poly& z, const PolyIdeal& ideal) {
  if (z.arity() != ideal.arity()) throw std::invalid_argument("ideal_membership: arity mismatch");
  return ideal.contains(z);
}

PolyIdeal ideal_combine(const PolyIdeal& a, const PolyIdeal& b, CombineMode mode) {
  if (a.arity() != b.arity()) throw std::invalid_argument("ideal_combine: arity mismatch");
  std::vector<Poly> gens;
  if (mode == CombineMode::Sum) {
    gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  } else {
    for (const auto& f : a.generators())
      for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return PolyIdeal(a.arity(), std::move(gens));
}

PolyIdeal ideal_intersect(const PolyIdeal& a, const PolyIdeal& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("ideal_intersect: arity mismatch");
  const std::size_t n = a.arity();
  if (a.is_zero() || b.is_zero()) return PolyIdeal(n, {});
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  if (a.is_monomial() && b.is_monomial()) {
    std::vector<Poly> gens;
    for (const auto& f : a.generators())
      for (const auto& g : b.generators())
        gens.push_back(Poly::monomial(exponent_lcm(f.terms().begin()->first, g.terms().begin()->first), 1));
    return PolyIdeal(n, std::move(gens));
  }
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  Poly t = Poly::variable(n + 1, 0);
  Poly one_minus_t = Poly::constant(n + 1, 1) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.embed(n + 1, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.embed(n + 1, shift));
  auto gb = groebner_basis(gens, MonomialOrder::elimination(1));
  std::vector<Poly> out;
  for (const auto& g : gb)
    if (g.degree_in(0) <= 0) out.push_back(g.drop_variable(0));
  return PolyIdeal(n, std::move(out));
}

PolyIdeal ideal_colon(const PolyIdeal& a, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("ideal_colon: zero divisor");
  const std::size_t n = a.arity();
  if (a.contains(g)) return PolyIdeal::unit(n);
  if (a.is_zero()) return a;
  // (m·a' : g) = (m/d)·(a' : g/d) with d = gcd(m, g).
  Poly m = poly_gcd(a.generators());
  if (!m.is_constant()) {
    Poly d = poly_gcd(m, g);
    std::vector<Poly> reduced;
    for (const auto& f : a.generators()) reduced.push_back(*exact_divide(f, m));
    PolyIdeal inner = ideal_colon(PolyIdeal(n, std::move(reduced)), *exact_divide(g, d));
    Poly c1 = *exact_divide(m, d);
    std::vector<Poly> out;
    for (const auto& h : inner.generators()) out.push_back(c1 * h);
    return PolyIdeal(n, std::move(out));
  }
  PolyIdeal inter = ideal_intersect(a, PolyIdeal(n, {g}));
  std::vector<Poly> out;
  for (const auto& h : inter.generators()) {
    auto q = exact_divide(h, g);
    if (!q) throw std::logic_error("ideal_colon: intersection element not divisible");
    out.push_back(std::move(*q));
  }
  return PolyIdeal(n, std::move(out));
}

PolyIdeal ideal_colon(const PolyIdeal& a, const PolyIdeal& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("ideal_colon: arity mismatch");
  if (b.is_zero()) throw std::invalid_argument("ideal_colon: zero ideal divisor");
  std::optional<PolyIdeal> acc;
  for (const auto& g : b.generators()) {
    PolyIdeal c = ideal_colon(a, g);
    acc = acc ? ideal_intersect(*acc, c) : c;
  }
  return *acc;
}

PolyIdeal ideal_saturate(const PolyIdeal& a, const Poly& g) {
  PolyIdeal current = a;
  for (;;) {
    PolyIdeal next = ideal_colon(current, g);
    if (current.contains(next)) return current;
    current = std::move(next);
  }
}

PolyIdeal ideal_tidy(const PolyIdeal& a) {
  const auto order = MonomialOrder::degrevlex();
  std::vector<Poly> gens;
  for (const auto& g : a.generators()) {
    Poly m = g.monic(order);
    if (std::find(gens.begin(), gens.end(), m) == gens.end()) gens.push_back(m);
  }
  std::sort(gens.begin(), gens.end(), [&](const Poly& x, const Poly& y) {
    return order.compare(x.leading_exponent(order), y.leading_exponent(order)) > 0;
  });
  return PolyIdeal(a.arity(), std::move(gens));
}

namespace {

int highest_variable(const Poly& p) {
  int v = -1;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) v = std::max(v, static_cast<int>(i));
  return v;
}

Poly times_power(const Poly& p, std::size_t var, int k) {
  Exponent e(p.arity(), 0);
  e[var] = k;
  return p * Poly::monomial(e, 1);
}

Poly gcd_rec(const Poly& f, const Poly& g);

// gcd of the coefficients with respect to `var`.
Poly content_in(const Poly& p, std::size_t var) {
  Poly acc(p.arity());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    acc = gcd_rec(acc, c);
    if (acc.is_constant()) break;
  }
  return acc;
}

Poly primitive_in(const Poly& p, std::size_t var) { return *exact_divide(p, content_in(p, var)); }

// lc(b)^k·a mod b with respect to `var`.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const Poly lb = b.coefficients_in(var).back();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    const Poly la = a.coefficients_in(var).back();
    a = lb * a - times_power(la * b, var, da - db);
  }
  return a;
}

// Primitive PRS, recursing on the highest variable present. Monic up to a
// rational factor only; the caller normalizes.
Poly gcd_rec(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  const std::size_t n = f.arity();
  const int v = std::max(highest_variable(f), highest_variable(g));
  if (v < 0) return Poly::constant(n, 1);
  const auto var = static_cast<std::size_t>(v);
  if (f.degree_in(var) == 0) return gcd_rec(f, content_in(g, var));
  if (g.degree_in(var) == 0) return gcd_rec(content_in(f, var), g);
  Poly c = gcd_rec(content_in(f, var), content_in(g, var));
  Poly a = primitive_in(f, var), b = primitive_in(g, var);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (true) {
    Poly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return c * b;
    if (r.degree_in(var) == 0) return c;
    a = std::move(b);
    b = primitive_in(r, var);
  }
}

}  // namespace

Poly poly_gcd(const Poly& f, const Poly& g) {
  const auto order = MonomialOrder::degrevlex();
  if (f.arity() != g.arity()) throw std::invalid_argument("poly_gcd: arity mismatch");
  if (f.is_zero() && g.is_zero()) return f;
  return gcd_rec(f, g).monic(order);
}

Poly poly_gcd(std::span<const Poly> polys) {
  if (polys.empty()) throw std::invalid_argument("poly_gcd: empty list");
  Poly acc(polys.front().arity());
  for (const auto& p : polys) {
    acc = poly_gcd(acc, p);
    if (acc.is_constant() && !acc.is_zero()) break;
  }
  return acc;
}

PolyIdeal content_ideal(const Poly& f, std::size_t var) {
  if (f.is_zero()) throw std::invalid_argument("content_ideal: zero polynomial");
  std::vector<Poly> coeffs;
  for (const auto& c : f.coefficients_in(var))
    if (!c.is_zero()) coeffs.push_back(c.drop_variable(var));
  return PolyIdeal(f.arity() - 1, std::move(coeffs));
}

namespace {

// Phase-one simplex with Bland's rule: is {x >= 0 : A x = b} nonempty? b >= 0.
bool lp_feasible(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  const std::size_t width = cols + rows + 1;  // originals, artificials, rhs
  std::vector<std::vector<Rational>> t(rows + 1, std::vector<Rational>(width));
  std::vector<std::size_t> basic(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) t[r][c] = a[r][c];
    t[r][cols + r] = 1;
    t[r][width - 1] = b[r];
    basic[r] = cols + r;
  }
  // Objective: minimise the sum of artificials, expressed in non-basic terms.
  for (std::size_t c = 0; c < width; ++c) {
    if (c >= cols && c < cols + rows) continue;
    Rational s = 0;
    for (std::size_t r = 0; r < rows; ++r) s += t[r][c];
    t[rows][c] = -s;
  }
  for (;;) {
    std::size_t enter = width;
    for (std::size_t c = 0; c + 1 < width; ++c)
      if (t[rows][c] < 0) {
        enter = c;
        break;
      }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][width - 1] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basic[r] < basic[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded: cannot happen in phase one
    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rational f = t[r][enter];
      for (std::size_t c = 0; c < width; ++c) t[r][c] -= f * t[leave][c];
    }
    basic[leave] = enter;
  }
  return t[rows][width - 1] == 0;
}

}  // namespace

bool in_newton_polyhedron(const std::vector<Exponent>& gens, const Exponent& point) {
  // lambda_i >= 0, sum lambda = 1, sum lambda_i a_i + s = point, s >= 0.
  const std::size_t m = gens.size();
  const std::size_t n = point.size();
  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(m + n));
  std::vector<Rational> b(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < m; ++i) a[k][i] = gens[i][k];
    a[k][m + k] = 1;
    b[k] = point[k];
  }
  for (std::size_t i = 0; i < m; ++i) a[n][i] = 1;
  b[n] = 1;
  return lp_feasible(a, b);
}

PolyIdeal newton_closure_monomial(const PolyIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("newton_closure_monomial: zero ideal");
  if (!ideal.is_monomial())
    throw std::invalid_argument("newton_closure_monomial: non-monomial generator");
  const std::size_t n = ideal.arity();
  std::vector<Exponent> exps;
  int max_deg = 0;
  for (const auto& g : ideal.generators()) {
    exps.push_back(g.terms().begin()->first);
    max_deg = std::max(max_deg, total_degree(exps.back()));
  }
  std::vector<Exponent> members;
  Exponent e(n, 0);
  // Enumerate exponents of total degree <= max_deg.
  auto rec = [&](auto&& self, std::size_t var, int budget) -> void {
    if (var == n) {
      if (in_newton_polyhedron(exps, e)) members.push_back(e);
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      e[var] = k;
      self(self, var + 1, budget - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, max_deg);
  std::vector<Poly> gens;
  for (const auto& m : members) {
    bool minimal = std::none_of(members.begin(), members.end(),
                                [&](const Exponent& o) { return o != m && divides(o, m); });
    if (minimal) gens.push_back(Poly::monomial(m, 1));
  }
  return ideal_tidy(PolyIdeal(n, std::move(gens)));
}

}  // namespace semistar
