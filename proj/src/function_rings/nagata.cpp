#include "semistar/function_rings.hpp"

#include "../domains/backends.hpp"

#include <stdexcept>

namespace semistar {

namespace {

void require_integral(const Domain& dom, const TPoly& h) {
  if (h.is_zero()) throw std::invalid_argument("zero polynomial");
  for (const auto& c : h.support())
    if (!dom.in_ring(c)) throw std::invalid_argument("coefficient " + dom.format(c) + " is not in D");
}

// ---- UFD backends: Z, Z_(p), Q[x]_(center) ----------------------------------

std::size_t base_arity(const Domain& dom) {
  return dom.kind() == DomainKind::PolyLocal ? dom.atoms().size() : 0;
}

Poly coefficient_poly(const Elem& c, std::size_t n) {
  if (const auto* r = std::get_if<Rational>(&c)) return Poly::constant(n == 0 ? 1 : n, *r);
  const auto& f = std::get<RatFunc>(c);
  if (!f.den.is_constant()) throw std::logic_error("uncleared coefficient");
  return f.num * (1 / f.den.constant_term());
}

/// The polynomial in base variables plus the function-ring variable (last slot).
Poly to_poly(const TPoly& p, std::size_t n) {
  std::size_t arity = n + 1;
  Poly out(arity);
  std::vector<std::size_t> placement;
  for (std::size_t i = 0; i < n; ++i) placement.push_back(i);
  Poly t = Poly::variable(arity, n);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (is_zero(p.coeffs()[i])) continue;
    Poly c = coefficient_poly(p.coeffs()[i], n);
    Poly e = n == 0 ? Poly::constant(1, c.constant_term()) : c.embed(arity, placement);
    out += e * t.pow(static_cast<unsigned>(i));
  }
  return out;
}

TPoly from_poly(const Poly& p, const Domain& dom, std::size_t n) {
  std::vector<Elem> coeffs;
  for (const auto& c : p.coefficients_in(n)) {
    if (n == 0)
      coeffs.push_back(dom.constant(c.constant_term()));
    else
      coeffs.push_back(make_ratfunc(c.drop_variable(n), Poly::constant(n, 1)));
  }
  return TPoly(std::move(coeffs));
}

/// Positive rational c with p/c primitive in Z[T].
Rational integer_content(const Poly& p) {
  Integer g = 0, l = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(abs(g), l);
  r.canonicalize();
  return r;
}

/// Denominator of f/g in lowest terms in the UFD D[X†].
TPoly coprime_denominator(const Domain& dom, const RationalFunctionElem& z) {
  std::size_t n = base_arity(dom);
  Poly f = to_poly(z.f, n), g = to_poly(z.g, n);
  Poly r = poly_gcd(f, g);
  Poly fp = *exact_divide(f, r), gp = *exact_divide(g, r);
  if (dom.kind() == DomainKind::Integers) {
    Rational cf = integer_content(fp), cg = integer_content(gp);
    Rational ratio = cf / cg;
    gp = gp * (Rational(ratio.get_den()) / cg);
  }
  return from_poly(gp, dom, n);
}

// ---- Z[√d]: prime-by-prime over the primes containing c(g) -----------------

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<PrimeIdeal> primes_above(const Domain& dom, const Integer& p, long d) {
  std::vector<PrimeIdeal> out;
  long pl = p.get_si();
  Elem pe = QuadNum{Rational(p), 0, d};
  for (long r = 0; r < pl; ++r) {
    long dm = ((d % pl) + pl) % pl;
    if ((r * r) % pl != dm) continue;
    out.push_back(dom.make_prime({pe, QuadNum{Rational(-r), 1, d}}, false, ""));
  }
  if (out.empty()) out.push_back(dom.make_prime({pe}, false, ""));
  return out;
}

int local_order(const Domain& dom, const Elem& y, const PrimeIdeal& q) {
  int k = 0;
  FractionalIdeal pw = q.ideal;
  while (k < 64 && dom.contains_local(pw, y, q)) {
    ++k;
    pw = dom.product(pw, q.ideal);
  }
  return k;
}

int gauss_order(const Domain& dom, const TPoly& f, const PrimeIdeal& q) {
  int best = 1 << 20;
  for (const auto& c : f.support()) best = std::min(best, local_order(dom, c, q));
  return best;
}

int v2(const Rational& x) {
  if (x == 0) return 1 << 20;
  return static_cast<int>(mpz_scan1(x.get_num_mpz_t(), 0)) - static_cast<int>(mpz_scan1(x.get_den_mpz_t(), 0));
}

/// u + v·ω coordinates over ω = (1 + √d)/2.
std::pair<Rational, Rational> omega_coords(const QuadNum& c) { return {c.a - c.b, 2 * c.b}; }

struct F4 {
  int a = 0, b = 0;  // a + b·ω with ω² = ω + 1
  F4 operator+(F4 o) const { return {a ^ o.a, b ^ o.b}; }
  F4 operator*(F4 o) const { return {(a & o.a) ^ (b & o.b), (a & o.b) ^ (b & o.a) ^ (b & o.b)}; }
  F4 frobenius() const { return {a ^ b, b}; }
};

int bit_of(const Rational& x) {
  // x in Z_(2): parity of the numerator.
  return mpz_odd_p(x.get_num_mpz_t()) ? 1 : 0;
}

std::vector<F4> reduce_mod_two(const TPoly& f, int shift) {
  std::vector<F4> out;
  Rational s(1);
  mpq_div_2exp(s.get_mpq_t(), s.get_mpq_t(), static_cast<unsigned long>(shift));
  for (const auto& c : f.coeffs()) {
    auto [u, v] = omega_coords(std::get<QuadNum>(c));
    out.push_back({bit_of(u * s), bit_of(v * s)});
  }
  return out;
}

int omega_order(const TPoly& f) {
  int best = 1 << 20;
  for (const auto& c : f.support()) {
    auto [u, v] = omega_coords(std::get<QuadNum>(c));
    best = std::min({best, v2(u), v2(v)});
  }
  return best;
}

/// f/g ∈ D_P(X†) at the singular prime above 2 when 2 is inert in the maximal
/// order: membership in O_P(X†) plus a residue in F_2(X†) ⊂ F_4(X†).
bool singular_member(const TPoly& f, const TPoly& g) {
  int a = omega_order(f), b = omega_order(g);
  if (a != b) return a > b;
  auto fr = reduce_mod_two(f, a), gr = reduce_mod_two(g, b);
  std::vector<F4> prod(fr.size() + gr.size(), F4{});
  for (std::size_t i = 0; i < fr.size(); ++i)
    for (std::size_t j = 0; j < gr.size(); ++j) prod[i + j] = prod[i + j] + fr[i] * gr[j].frobenius();
  for (const auto& c : prod)
    if (c.b != 0) return false;
  return true;
}

MembershipCertificate na_quadratic(const StarPtr& star, const RationalFunctionElem& z) {
  const Domain& dom = *star->domain();
  long d = std::get<QuadNum>(z.g.support().front()).d;
  Integer norms = 0;
  for (const auto& c : z.g.support()) {
    Rational nm = std::get<QuadNum>(c).norm();
    mpz_gcd(norms.get_mpz_t(), norms.get_mpz_t(), nm.get_num_mpz_t());
  }
  FractionalIdeal cg = content(dom, z.g);
  MembershipCertificate cert;
  cert.route = "local primes";
  std::string checked;
  bool unknown = false;
  long dm4 = ((d % 4) + 4) % 4, dm8 = ((d % 8) + 8) % 8;
  for (const auto& p : prime_factors(norms)) {
    for (const auto& q : primes_above(dom, p, d)) {
      if (!dom.contains(q.ideal, cg)) continue;
      if (star->member(q.ideal, dom.constant(1))) continue;  // not quasi-★
      std::string name = dom.format(q.ideal);
      checked += (checked.empty() ? "" : ", ") + name;
      bool singular = dm4 == 1 && p == 2;
      bool inside;
      if (!singular) {
        inside = gauss_order(dom, z.f, q) >= gauss_order(dom, z.g, q);
      } else if (dm8 == 5) {
        inside = singular_member(z.f, z.g);
      } else {
        unknown = true;
        continue;
      }
      if (!inside) {
        cert.verdict = Verdict::No;
        cert.witness = "not in D_Q(X†) for the quasi-★ prime Q = " + name;
        return cert;
      }
    }
  }
  cert.verdict = unknown ? Verdict::Unknown : Verdict::Yes;
  cert.witness = checked.empty() ? "c(g) lies in no quasi-★ prime" : "in D_Q(X†) for Q = " + checked;
  if (unknown) cert.witness += "; split singular prime above 2 undecided";
  return cert;
}

}  // namespace

bool in_multiplicative_set_N(const StarPtr& star, const TPoly& h) {
  const Domain& dom = *star->domain();
  require_integral(dom, h);
  return star->member(content(dom, h), dom.constant(1));
}

MembershipCertificate na_member(const StarPtr& star, const RationalFunctionElem& z) {
  const Domain& dom = *star->domain();
  if (z.g.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (z.f.is_zero()) return {Verdict::Yes, "zero", "0 ∈ Na", std::nullopt, std::nullopt};
  RationalFunctionElem c = clear_denominators(dom, z);
  if (dom.kind() == DomainKind::QuadraticOrder) return na_quadratic(star, c);
  TPoly n = coprime_denominator(dom, c);
  MembershipCertificate cert;
  cert.route = "coprime denominator";
  cert.h = n;
  bool yes = in_multiplicative_set_N(star, n);
  cert.verdict = yes ? Verdict::Yes : Verdict::No;
  cert.witness = yes ? "denominator " + n.to_string(dom) + " ∈ N(★)"
                     : "reduced denominator " + n.to_string(dom) + " has c(·)^★ ∌ 1";
  return cert;
}

IdealOracle extend_contract_na(const StarPtr& star, const FractionalIdeal& e) {
  DomainPtr dom = star->domain();
  IdealOracle o;
  o.description = "E·Na(D," + star->name() + ") ∩ K";
  o.member = [dom, star, e](const Elem& z) {
    if (is_zero(z)) return true;
    FractionalIdeal col = dom->intersect(dom->colon(e, dom->principal(z)), dom->unit_ideal());
    return in_multiplicative_set_N(star, TPoly::spread(dom->generators(col)));
  };
  return o;
}

namespace {

class NagataOp final : public SemistarOp {
 public:
  explicit NagataOp(StarPtr base)
      : SemistarOp(base->domain(), "na(" + base->name() + ")", {true, true, false}, Grade::Exact),
        base_(std::move(base)) {}
  std::string kind() const override { return "nagata"; }
  StarPtr base() const override { return base_; }

 protected:
  ClosureResult compute(const FractionalIdeal& e) const override {
    ClosureResult r;
    r.oracle = extend_contract_na(base_, e);
    return r;
  }

 private:
  StarPtr base_;
};

}  // namespace

StarPtr make_nagata(const StarPtr& star) { return std::make_shared<NagataOp>(star); }

MaximalTrace na_maximal_trace(const StarPtr& star, const std::vector<PrimeIdeal>& candidates) {
  const DomainPtr& dom = star->domain();
  Spectrum sp = quasi_star_spectrum(finite_type_closure(star), candidates);
  MaximalTrace out;
  out.maximal = sp.maximal;
  for (const auto& q : sp.maximal) {
    std::string name = q.name.empty() ? dom->format(q.ideal) : q.name;
    TPoly h = TPoly::spread(dom->generators(q.ideal));
    bool outside_n = !in_multiplicative_set_N(star, h);
    bool proper = !extend_contract_na(star, q.ideal).member(dom->constant(1));
    out.verified = out.verified && outside_n && proper;
    out.checks.push_back(name + ": " + h.to_string(*dom) + (outside_n ? " ∉ N(★)" : " ∈ N(★)") + ", 1 " +
                         (proper ? "∉" : "∈") + " Q·Na ∩ K");
  }
  return out;
}

}  // namespace semistar
