#include "backends.hpp"

#include <stdexcept>

namespace semistar::detail {

namespace {

const Rational& as_rational(const Elem& z) {
  const auto* r = std::get_if<Rational>(&z);
  if (!r) throw std::invalid_argument("element is not rational");
  return *r;
}

int valuation(Integer n, const Integer& q) {
  int v = 0;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
    n /= q;
    ++v;
  }
  return v;
}

int valuation(const Rational& z, const Integer& q) {
  return valuation(z.get_num(), q) - valuation(z.get_den(), q);
}

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

IntegersDomain::IntegersDomain(std::optional<long> p) : p_(p) {}

std::string IntegersDomain::describe() const {
  return p_ ? "Z_(" + std::to_string(*p_) + ")" : "Z";
}

std::vector<Elem> IntegersDomain::atoms() const { return {}; }

bool IntegersDomain::in_ring(const Elem& z) const {
  const Rational& r = as_rational(z);
  if (!p_) return r.get_den() == 1;
  return !mpz_divisible_ui_p(r.get_den().get_mpz_t(), static_cast<unsigned long>(*p_));
}

bool IntegersDomain::is_unit(const Elem& z) const {
  const Rational& r = as_rational(z);
  if (r == 0) return false;
  if (!p_) return abs(r) == 1;
  return valuation(r, Integer(*p_)) == 0;
}

Rational IntegersDomain::generator(const FractionalIdeal& e) const {
  Integer num = 0, den = 1;
  for (const auto& g : generators(e)) {
    const Rational& r = as_rational(g);
    num = gcd_int(num, r.get_num());
    den = lcm_int(den, r.get_den());
  }
  if (num == 0) throw std::invalid_argument("zero ideal");
  Rational g(num, den);
  g.canonicalize();
  if (!p_) return g;
  int v = valuation(g, Integer(*p_));
  Integer pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(*p_), static_cast<unsigned long>(std::abs(v)));
  return v >= 0 ? Rational(pw) : Rational(1, 1) / Rational(pw);
}

FractionalIdeal IntegersDomain::from_generator(const Rational& g) const {
  return {{Rational(g.get_num())}, Rational(g.get_den())};
}

FractionalIdeal IntegersDomain::make_ideal(const std::vector<Elem>& gens) const {
  FractionalIdeal raw{gens, Rational(1)};
  return from_generator(generator(raw));
}

FractionalIdeal IntegersDomain::normalize(const FractionalIdeal& e) const {
  return from_generator(generator(e));
}

bool IntegersDomain::contains(const FractionalIdeal& e, const Elem& z) const {
  const Rational& r = as_rational(z);
  if (r == 0) return true;
  return in_ring(Rational(r / generator(e)));
}

FractionalIdeal IntegersDomain::sum(const FractionalIdeal& e, const FractionalIdeal& f) const {
  return make_ideal({generator(e), generator(f)});
}

FractionalIdeal IntegersDomain::product(const FractionalIdeal& e, const FractionalIdeal& f) const {
  return from_generator(generator(e) * generator(f));
}

FractionalIdeal IntegersDomain::intersect(const FractionalIdeal& e, const FractionalIdeal& f) const {
  Rational a = generator(e), b = generator(f);
  Rational l(lcm_int(a.get_num(), b.get_num()), gcd_int(a.get_den(), b.get_den()));
  l.canonicalize();
  return normalize(from_generator(l));
}

FractionalIdeal IntegersDomain::colon(const FractionalIdeal& e, const FractionalIdeal& f) const {
  return from_generator(generator(e) / generator(f));
}

bool IntegersDomain::contains_local(const FractionalIdeal& e, const Elem& z, const PrimeIdeal& q) const {
  const Rational& r = as_rational(z);
  if (r == 0) return true;
  Integer qi = generator(q.ideal).get_num();
  return valuation(r, qi) >= valuation(generator(e), qi);
}

PrimeIdeal IntegersDomain::make_prime(const std::vector<Elem>& gens, bool assume_prime,
                                      const std::string& name) const {
  FractionalIdeal i = make_ideal(gens);
  Rational g = generator(i);
  if (g.get_den() != 1 || g == 1) throw std::invalid_argument("not a proper integral ideal of " + describe());
  bool prime = is_prime_integer(g.get_num());
  if (!prime && !assume_prime) throw std::invalid_argument(g.get_str() + " is not prime");
  return {i, prime ? PrimeCert::PrincipalIrreducible : PrimeCert::UserAsserted, name};
}

}  // namespace semistar::detail
