#pragma once

#include "semistar/domain.hpp"
#include "semistar/valuation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace semistar {

struct StarFlags {
  bool finite_type = false;
  bool stable_claimed = false;
  bool eab_claimed = false;
};

/// One certificate behind a closure: an auxiliary ideal H and what it
/// contributed.
struct Witness {
  std::string role;
  FractionalIdeal h;
  std::optional<FractionalIdeal> piece;
  std::string note;
};

struct ClosureResult {
  IdealOracle oracle;
  /// E^★ ∩ D when it is known as a finite presentation.
  std::optional<FractionalIdeal> contraction;
  std::vector<Witness> witnesses;
};

class SemistarOp;
using StarPtr = std::shared_ptr<const SemistarOp>;

/// A closure operation on fractional ideals of one backend.
class SemistarOp {
 public:
  SemistarOp(DomainPtr dom, std::string name, StarFlags flags, Grade grade);
  virtual ~SemistarOp() = default;

  const DomainPtr& domain() const { return dom_; }
  const std::string& name() const { return name_; }
  const StarFlags& flags() const { return flags_; }
  Grade grade() const { return grade_; }
  virtual std::string kind() const = 0;
  virtual bool is_trivial() const { return false; }
  /// Underlying operation for derived operators, if any.
  virtual StarPtr base() const { return nullptr; }

  /// E^★; results are cached per normalized input.
  ClosureResult apply(const FractionalIdeal& e) const;
  bool member(const FractionalIdeal& e, const Elem& z) const;
  /// F ⊆ E^★, i.e. F^★ ⊆ E^★ for a genuine closure.
  bool covers(const FractionalIdeal& e, const FractionalIdeal& f) const;

 protected:
  virtual ClosureResult compute(const FractionalIdeal& e) const = 0;
  ClosureResult presented(const FractionalIdeal& p, Grade g, std::string description) const;

 private:
  DomainPtr dom_;
  std::string name_;
  StarFlags flags_;
  Grade grade_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, ClosureResult> cache_;
};

/// Thrown for (operation, backend) pairs and inputs outside the supported scope.
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Built-in operations.
StarPtr make_identity(const DomainPtr& dom);
StarPtr make_v(const DomainPtr& dom);
/// E ↦ ∩ {E·D_P | P ∈ Δ}; Δ must be nonempty.
StarPtr make_spectral(const DomainPtr& dom, std::vector<PrimeIdeal> delta, std::string name = {});
/// E ↦ E·D_P.
StarPtr make_extension(const DomainPtr& dom, const PrimeIdeal& p);
/// E ↦ K.
StarPtr make_trivial(const DomainPtr& dom);
/// Integral closure: monomial ideals (Newton polyhedron) and principal ideals
/// of polynomial backends; identity on Z and Z_(p).
StarPtr make_b(const DomainPtr& dom);
/// Case-defined operation on Q[x]_(x): principal ideals are closed, an ideal
/// with gcd f of its generators and non-principal cofactor goes to f·N.
StarPtr make_ex53(const DomainPtr& dom);

/// Valuation-family operation E ↦ ∩ {E·W | W ∈ family}. The family consists
/// of the explicit valuations, the DVRs along `dvr_primes`, and, when
/// `cofinite` is set, the DVRs along every other irreducible of the center
/// except `excluded`. Queries touching an irreducible that is neither listed
/// nor excluded raise Unsupported.
struct ValuationFamily {
  std::vector<ValuationSpec> valuations;
  std::vector<Poly> dvr_primes;
  std::vector<Poly> excluded;
  bool cofinite = false;
};
StarPtr make_valuation_family(const DomainPtr& dom, ValuationFamily family, std::string name = {});

// Derived operators.
StarPtr finite_type_closure(const StarPtr& star);
StarPtr make_t(const DomainPtr& dom);
/// Spectral operation over `mset`, the quasi-★_f-maximal primes supplied by
/// the caller.
StarPtr tilde_of(const StarPtr& star, std::vector<PrimeIdeal> mset);
/// z ∈ E^{★_w} ⇔ 1 ∈ ((E :_D z))^★.
StarPtr star_w_of(const StarPtr& star);

struct ABudget {
  int max_factors = 2;
  std::vector<FractionalIdeal> aux;
  /// Known upper bound (e.g. t); equality with the lower bound makes the result exact.
  StarPtr upper;
};
/// Certified lower bound for F^{★_a}: the sum of ((F·H)^★ : H) over H in the
/// witness pool.
ClosureResult star_a_lower(const StarPtr& star, const FractionalIdeal& f, const ABudget& budget);
StarPtr make_star_a(const StarPtr& star, ABudget budget);

/// Localization of the backend at P as a domain handle (D itself when P is its center).
DomainPtr localization_domain(const DomainPtr& dom, const std::optional<PrimeIdeal>& p);
/// The operation E ↦ (E·T)^★ on fractional ideals of T = D_P (T = D when p is unset).
StarPtr restrict_to_overring(const StarPtr& star, const std::optional<PrimeIdeal>& p);

/// Re-checks every logged (H, piece) of a ★_a closure: piece·H ⊆ (F·H)^★.
bool reverify_a_witnesses(const StarPtr& star, const FractionalIdeal& f, const ClosureResult& r);

}  // namespace semistar
