#pragma once

#include "semistar/domain.hpp"

namespace semistar::detail {

class IntegersDomain final : public Domain {
 public:
  explicit IntegersDomain(std::optional<long> p);

  DomainKind kind() const override { return DomainKind::Integers; }
  std::string describe() const override;
  std::vector<std::string> names() const override { return {}; }
  Elem constant(const Rational& c) const override { return c; }
  std::vector<Elem> atoms() const override;
  bool in_ring(const Elem& z) const override;
  bool is_unit(const Elem& z) const override;
  FractionalIdeal make_ideal(const std::vector<Elem>& gens) const override;
  FractionalIdeal normalize(const FractionalIdeal& e) const override;
  bool contains(const FractionalIdeal& e, const Elem& z) const override;
  FractionalIdeal sum(const FractionalIdeal& e, const FractionalIdeal& f) const override;
  FractionalIdeal product(const FractionalIdeal& e, const FractionalIdeal& f) const override;
  FractionalIdeal intersect(const FractionalIdeal& e, const FractionalIdeal& f) const override;
  FractionalIdeal colon(const FractionalIdeal& e, const FractionalIdeal& f) const override;
  bool contains_local(const FractionalIdeal& e, const Elem& z, const PrimeIdeal& q) const override;
  PrimeIdeal make_prime(const std::vector<Elem>& gens, bool assume_prime,
                        const std::string& name) const override;

  /// The positive generator g with E = g·D (a power of p when localized).
  Rational generator(const FractionalIdeal& e) const;
  std::optional<long> localized_at() const { return p_; }
  FractionalIdeal make_prime_center() const { return from_generator(Rational(*p_)); }

 private:
  FractionalIdeal from_generator(const Rational& g) const;
  std::optional<long> p_;
};

class QuadDomain final : public Domain {
 public:
  explicit QuadDomain(long d) : d_(d) {}

  DomainKind kind() const override { return DomainKind::QuadraticOrder; }
  std::string describe() const override;
  std::vector<std::string> names() const override { return {"w"}; }
  Elem constant(const Rational& c) const override { return QuadNum{c, 0, d_}; }
  std::vector<Elem> atoms() const override { return {QuadNum{0, 1, d_}}; }
  bool in_ring(const Elem& z) const override;
  bool is_unit(const Elem& z) const override;
  FractionalIdeal make_ideal(const std::vector<Elem>& gens) const override;
  FractionalIdeal normalize(const FractionalIdeal& e) const override;
  bool contains(const FractionalIdeal& e, const Elem& z) const override;
  FractionalIdeal sum(const FractionalIdeal& e, const FractionalIdeal& f) const override;
  FractionalIdeal product(const FractionalIdeal& e, const FractionalIdeal& f) const override;
  FractionalIdeal intersect(const FractionalIdeal& e, const FractionalIdeal& f) const override;
  FractionalIdeal colon(const FractionalIdeal& e, const FractionalIdeal& f) const override;
  bool contains_local(const FractionalIdeal& e, const Elem& z, const PrimeIdeal& q) const override;
  PrimeIdeal make_prime(const std::vector<Elem>& gens, bool assume_prime,
                        const std::string& name) const override;

  long d() const { return d_; }
  QuadLattice lattice(const FractionalIdeal& e) const;
  FractionalIdeal from_lattice(const QuadLattice& l) const;

 private:
  long d_;
};

class PolyDomain final : public Domain {
 public:
  PolyDomain(std::vector<std::string> vars, CenterKind center, std::optional<Poly> center_generator);

  DomainKind kind() const override { return DomainKind::PolyLocal; }
  std::string describe() const override;
  std::vector<std::string> names() const override { return vars_; }
  Elem constant(const Rational& c) const override;
  std::vector<Elem> atoms() const override;
  bool in_ring(const Elem& z) const override;
  bool is_unit(const Elem& z) const override;
  FractionalIdeal make_ideal(const std::vector<Elem>& gens) const override;
  FractionalIdeal normalize(const FractionalIdeal& e) const override;
  bool contains(const FractionalIdeal& e, const Elem& z) const override;
  FractionalIdeal sum(const FractionalIdeal& e, const FractionalIdeal& f) const override;
  FractionalIdeal product(const FractionalIdeal& e, const FractionalIdeal& f) const override;
  FractionalIdeal intersect(const FractionalIdeal& e, const FractionalIdeal& f) const override;
  FractionalIdeal colon(const FractionalIdeal& e, const FractionalIdeal& f) const override;
  bool contains_local(const FractionalIdeal& e, const Elem& z, const PrimeIdeal& q) const override;
  PrimeIdeal make_prime(const std::vector<Elem>& gens, bool assume_prime,
                        const std::string& name) const override;

  std::size_t arity() const { return vars_.size(); }
  CenterKind center() const { return center_; }
  /// The center as an ideal of the polynomial ring (unset when not local).
  const std::optional<PolyIdeal>& center_ideal() const { return center_ideal_; }
  /// Numerator ideal of the polynomial ring and the polynomial denominator.
  PolyIdeal numerator(const FractionalIdeal& e) const;
  Poly denominator(const FractionalIdeal& e) const;
  FractionalIdeal from_parts(const PolyIdeal& num, const Poly& den) const;
  /// J·D = D, i.e. J is not inside the center (J is the unit ideal when not local).
  bool escapes_center(const PolyIdeal& j) const;
  Elem embed(const Poly& p) const;

 private:
  /// (qI : t) ⊄ Q test behind both membership queries; `q_ideal` unset means the center.
  bool local_member(const PolyIdeal& num, const Poly& den, const RatFunc& z,
                    const std::optional<PolyIdeal>& q_ideal) const;

  std::vector<std::string> vars_;
  CenterKind center_;
  std::optional<Poly> center_generator_;
  std::optional<PolyIdeal> center_ideal_;
};

/// ord_f(p) for a nonzero polynomial p, by repeated exact division.
int order_along(const Poly& p, const Poly& f);
/// The polynomial behind an element of the presentation ring.
Poly as_poly(const Elem& z);

}  // namespace semistar::detail
