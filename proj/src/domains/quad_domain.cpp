#include "backends.hpp"

#include <stdexcept>

namespace semistar::detail {

namespace {

const QuadNum& as_quad(const Elem& z) {
  const auto* q = std::get_if<QuadNum>(&z);
  if (!q) throw std::invalid_argument("element is not in the quadratic field");
  return *q;
}

}  // namespace

std::string QuadDomain::describe() const { return "Z[√" + std::to_string(d_) + "]"; }

bool QuadDomain::in_ring(const Elem& z) const {
  const QuadNum& q = as_quad(z);
  return is_integer(q.a) && is_integer(q.b);
}

bool QuadDomain::is_unit(const Elem& z) const {
  if (is_zero(z) || !in_ring(z)) return false;
  return in_ring(constant(1) / z);
}

QuadLattice QuadDomain::lattice(const FractionalIdeal& e) const {
  std::vector<QuadNum> gens;
  for (const auto& g : generators(e))
    if (!is_zero(g)) gens.push_back(as_quad(g));
  if (gens.empty()) throw std::invalid_argument("zero ideal");
  return QuadLattice::ideal_span(gens, d_);
}

FractionalIdeal QuadDomain::from_lattice(const QuadLattice& l) const {
  return {{QuadNum{Rational(l.a()), Rational(l.b()), d_}, QuadNum{0, Rational(l.c()), d_}},
          QuadNum{Rational(l.den()), 0, d_}};
}

FractionalIdeal QuadDomain::make_ideal(const std::vector<Elem>& gens) const {
  return from_lattice(lattice(FractionalIdeal{gens, constant(1)}));
}

FractionalIdeal QuadDomain::normalize(const FractionalIdeal& e) const { return from_lattice(lattice(e)); }

bool QuadDomain::contains(const FractionalIdeal& e, const Elem& z) const {
  return lattice(e).contains(as_quad(z));
}

FractionalIdeal QuadDomain::sum(const FractionalIdeal& e, const FractionalIdeal& f) const {
  return from_lattice(lattice(e).sum(lattice(f)));
}

FractionalIdeal QuadDomain::product(const FractionalIdeal& e, const FractionalIdeal& f) const {
  return from_lattice(lattice(e).product(lattice(f)));
}

FractionalIdeal QuadDomain::intersect(const FractionalIdeal& e, const FractionalIdeal& f) const {
  return from_lattice(lattice(e).intersect(lattice(f)));
}

FractionalIdeal QuadDomain::colon(const FractionalIdeal& e, const FractionalIdeal& f) const {
  return from_lattice(lattice(e).colon(lattice(f)));
}

bool QuadDomain::contains_local(const FractionalIdeal& e, const Elem& z, const PrimeIdeal& q) const {
  if (is_zero(z)) return true;
  QuadNum inv = as_quad(constant(1) / z);
  QuadLattice j = lattice(e).scaled(inv).intersect(QuadLattice::order(d_));
  return !lattice(q.ideal).contains(j);
}

PrimeIdeal QuadDomain::make_prime(const std::vector<Elem>& gens, bool assume_prime,
                                  const std::string& name) const {
  QuadLattice l = lattice(FractionalIdeal{gens, constant(1)});
  QuadLattice order = QuadLattice::order(d_);
  if (!order.contains(l) || l == order) throw std::invalid_argument("not a proper integral ideal of " + describe());
  Integer index = l.a() * l.c();
  PrimeCert cert = PrimeCert::UserAsserted;
  if (is_prime_integer(index)) {
    cert = PrimeCert::NormForm;
  } else if (l.a() == l.c() && l.b() == 0 && l.a() != 2 && is_prime_integer(l.a()) &&
             legendre(Integer(d_), l.a()) == -1) {
    cert = PrimeCert::NormForm;  // inert rational prime
  } else if (!assume_prime) {
    throw std::invalid_argument("cannot certify " + format(from_lattice(l)) + " as prime");
  }
  return {from_lattice(l), cert, name};
}

}  // namespace semistar::detail
