#pragma once

#include "semistar/element.hpp"
#include "semistar/groebner.hpp"
#include "semistar/quadratic.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace semistar {

enum class DomainKind { Integers, QuadraticOrder, PolyLocal };
enum class CenterKind { None, Origin, Principal };

struct DomainSpec {
  DomainKind kind = DomainKind::Integers;
  std::optional<long> localize_at;             // Integers: Z_(p)
  long d = 0;                                  // QuadraticOrder: Z[√d]
  std::vector<std::string> variables;          // PolyLocal
  CenterKind center = CenterKind::None;        // PolyLocal
  std::optional<Poly> center_generator;        // PolyLocal, CenterKind::Principal
  bool assume_center_prime = false;
};

/// (1/den) · (num_1, ..., num_k) · D. The numerators and the denominator are
/// elements of the backend's presentation ring: Z, Z[ω] or Q[x_1..x_n].
struct FractionalIdeal {
  std::vector<Elem> num;
  Elem den;
};

enum class PrimeCert { PrincipalIrreducible, MonomialMaximal, LinearPrime, NormForm, UserAsserted };
std::string to_string(PrimeCert c);

struct PrimeIdeal {
  FractionalIdeal ideal;
  PrimeCert cert = PrimeCert::UserAsserted;
  std::string name;
};

enum class Grade { Exact, LowerBound, UpperBound };
std::string to_string(Grade g);

/// A D-submodule of K given by membership. `presentation` is a finite
/// generating set when one is known.
struct IdealOracle {
  std::function<bool(const Elem&)> member;
  std::optional<FractionalIdeal> presentation;
  Grade grade = Grade::Exact;
  bool whole_field = false;
  std::string description;
};

class Domain;
using DomainPtr = std::shared_ptr<const Domain>;

class Domain {
 public:
  virtual ~Domain() = default;

  virtual DomainKind kind() const = 0;
  virtual std::string describe() const = 0;
  /// Names used for printing and parsing: the variables, or {"w"} for ω.
  virtual std::vector<std::string> names() const = 0;

  virtual Elem constant(const Rational& c) const = 0;
  /// Generators of the presentation ring over Z or Q: the variables, or ω.
  virtual std::vector<Elem> atoms() const = 0;
  virtual bool in_ring(const Elem& z) const = 0;
  virtual bool is_unit(const Elem& z) const = 0;

  /// Ideal generated by arbitrary nonzero-set elements of K.
  virtual FractionalIdeal make_ideal(const std::vector<Elem>& gens) const = 0;
  virtual FractionalIdeal normalize(const FractionalIdeal& e) const = 0;
  virtual bool contains(const FractionalIdeal& e, const Elem& z) const = 0;
  virtual FractionalIdeal sum(const FractionalIdeal& e, const FractionalIdeal& f) const = 0;
  virtual FractionalIdeal product(const FractionalIdeal& e, const FractionalIdeal& f) const = 0;
  virtual FractionalIdeal intersect(const FractionalIdeal& e, const FractionalIdeal& f) const = 0;
  /// (E :_K F).
  virtual FractionalIdeal colon(const FractionalIdeal& e, const FractionalIdeal& f) const = 0;
  /// z ∈ E·D_Q for a prime Q of D.
  virtual bool contains_local(const FractionalIdeal& e, const Elem& z, const PrimeIdeal& q) const = 0;
  virtual PrimeIdeal make_prime(const std::vector<Elem>& gens, bool assume_prime,
                                const std::string& name) const = 0;

  // Derived services.
  std::vector<Elem> generators(const FractionalIdeal& e) const;
  bool contains(const FractionalIdeal& e, const FractionalIdeal& f) const;
  bool equal(const FractionalIdeal& e, const FractionalIdeal& f) const;
  bool is_integral(const FractionalIdeal& e) const;
  FractionalIdeal unit_ideal() const { return make_ideal({constant(1)}); }
  FractionalIdeal principal(const Elem& z) const { return make_ideal({z}); }
  FractionalIdeal scale(const FractionalIdeal& e, const Elem& z) const;
  FractionalIdeal dual(const FractionalIdeal& e) const { return colon(unit_ideal(), e); }
  FractionalIdeal power(const FractionalIdeal& e, int k) const;
  std::string format(const Elem& z) const { return to_string(z, names()); }
  std::string format(const FractionalIdeal& e) const;
};

/// Throws std::invalid_argument for a square d, a non-prime localization
/// prime, or a center that cannot be certified prime.
DomainPtr make_domain(const DomainSpec& spec);

/// Maximal ideal of a local backend (Z_(p), Q[x]_(center)); unset otherwise.
std::optional<FractionalIdeal> local_center(const Domain& dom);
bool is_local_center(const Domain& dom, const PrimeIdeal& p);

/// z ∈ E·D_P as an oracle; exact on every backend (generator-wise test of
/// (E :_D z) ⊄ P).
IdealOracle localize_contract(const DomainPtr& dom, const FractionalIdeal& e, const PrimeIdeal& p);

}  // namespace semistar
