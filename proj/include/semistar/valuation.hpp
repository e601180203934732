#pragma once

#include "semistar/domain.hpp"

#include <string>
#include <vector>

namespace semistar {

/// A computable valuation on Q(x_1..x_n) nonnegative on the polynomial ring.
struct ValuationSpec {
  enum class Kind { MonomialWeight, LexMonomial, DVRAlongPrime };
  Kind kind = Kind::MonomialWeight;
  std::size_t arity = 0;
  std::vector<Rational> weight;              // MonomialWeight
  std::vector<std::vector<long>> rows;       // LexMonomial, two rows
  Poly prime;                                // DVRAlongPrime
  std::string name;

  static ValuationSpec monomial_weight(std::vector<Rational> w, std::string name = {});
  static ValuationSpec lex_monomial(std::vector<long> r1, std::vector<long> r2, std::string name = {});
  static ValuationSpec dvr_along(const Poly& f, std::string name = {});

  std::string describe(const std::vector<std::string>& vars) const;
};

/// Values in Q (one slot), Z² ordered lexicographically, or Z.
using ValuationValue = std::vector<Rational>;

/// Throws std::domain_error for z = 0.
ValuationValue valuation_value(const ValuationSpec& v, const Elem& z);
ValuationValue value_of_poly(const ValuationSpec& v, const Poly& p);
int compare_values(const ValuationValue& a, const ValuationValue& b);
ValuationValue add_values(const ValuationValue& a, const ValuationValue& b);
bool value_nonnegative(const ValuationValue& a);
std::string value_to_string(const ValuationValue& a);

/// v(E) = min over generators.
ValuationValue ideal_value(const ValuationSpec& v, const Domain& dom, const FractionalIdeal& e);
/// z ∈ E·V.
bool in_extension(const ValuationSpec& v, const Domain& dom, const FractionalIdeal& e, const Elem& z);

/// Center of V on the polynomial ring, {p : v(p) > 0}; requires V ⊇ Q[x].
PolyIdeal valuation_center(const ValuationSpec& v);
/// V contains the polynomial ring.
bool contains_polynomials(const ValuationSpec& v);
/// V ⊇ D_P for a prime P of a polynomial backend: V ⊇ Q[x] and center ⊆ P.
bool contains_localization(const ValuationSpec& v, const Domain& dom, const PrimeIdeal& p);
/// V is an overring of the backend D itself.
bool is_overring_of(const ValuationSpec& v, const Domain& dom);

}  // namespace semistar
