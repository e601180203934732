#pragma once

#include "semistar/poly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace semistar {

/// Reduced Groebner basis (Buchberger, normal selection strategy, exact
/// rational arithmetic). Elements are monic and sorted by leading term,
/// descending. Throws std::invalid_argument on an empty or all-zero input or
/// mixed arities.
std::vector<Poly> groebner_basis(std::span<const Poly> gens, const MonomialOrder& order);

/// Process-wide counters over every groebner_basis call.
struct GroebnerStats {
  std::uint64_t instances = 0;
  std::size_t max_arity = 0;
  int max_input_degree = 0;
};
GroebnerStats groebner_stats();
void reset_groebner_stats();

/// Full normal form of `p` against a Groebner basis.
Poly normal_form(const Poly& p, std::span<const Poly> basis, const MonomialOrder& order);

/// Exact quotient p / q when q divides p, otherwise nullopt.
std::optional<Poly> exact_divide(const Poly& p, const Poly& q);

/// Ideal of Q[x_1..x_n] given by generators; reduced bases are cached per order.
class PolyIdeal {
 public:
  PolyIdeal() = default;
  PolyIdeal(std::size_t arity, std::vector<Poly> gens);
  static PolyIdeal unit(std::size_t arity);

  std::size_t arity() const { return arity_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_zero() const;

  /// Cached reduced Groebner basis; shared between copies.
  const std::vector<Poly>& basis(const MonomialOrder& order = MonomialOrder::degrevlex()) const;

  bool contains(const Poly& p) const;
  bool contains(const PolyIdeal& other) const;
  bool equals(const PolyIdeal& other) const { return contains(other) && other.contains(*this); }
  bool is_unit() const;
  bool is_monomial() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::vector<Poly>> bases;
  };
  std::size_t arity_ = 0;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

bool ideal_membership(const Poly& z, const PolyIdeal& ideal);

enum class CombineMode { Sum, Product };
PolyIdeal ideal_combine(const PolyIdeal& a, const PolyIdeal& b, CombineMode mode);

/// I ∩ J by eliminating a tag variable from t·I + (1−t)·J.
PolyIdeal ideal_intersect(const PolyIdeal& a, const PolyIdeal& b);

/// (I : g) = (1/g)(I ∩ (g)).
PolyIdeal ideal_colon(const PolyIdeal& a, const Poly& g);
/// (I : J) as the intersection of (I : g) over the generators g of J.
PolyIdeal ideal_colon(const PolyIdeal& a, const PolyIdeal& b);

/// (I : g^∞), iterating colons until the chain stabilizes.
PolyIdeal ideal_saturate(const PolyIdeal& a, const Poly& g);

/// Generators of I with duplicates and zeros removed, sorted; used for display.
PolyIdeal ideal_tidy(const PolyIdeal& a);

/// Monic gcd under degrevlex by primitive pseudo-remainder sequences.
Poly poly_gcd(const Poly& f, const Poly& g);
Poly poly_gcd(std::span<const Poly> polys);

/// Ideal of the remaining variables generated by the coefficients of `f`
/// with respect to variable `var`.
PolyIdeal content_ideal(const Poly& f, std::size_t var);

/// Integral closure of a monomial ideal: the monomials whose exponent lies in
/// the Newton polyhedron, listed up to the largest generator degree.
PolyIdeal newton_closure_monomial(const PolyIdeal& ideal);

/// Whether `point` lies in conv(gens) + R_{>=0}^n (exact LP feasibility).
bool in_newton_polyhedron(const std::vector<Exponent>& gens, const Exponent& point);

}  // namespace semistar
