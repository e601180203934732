#pragma once

#include "semistar/checks.hpp"
#include "semistar/semistar.hpp"
#include "semistar/valuation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semistar {

/// Printed name of the function-ring variable.
inline constexpr const char* kFunctionVariable = "X†";

/// Polynomial in the function-ring variable with coefficients in K; index = power.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<Elem> coeffs);
  static TPoly constant(const Elem& c) { return TPoly({c}); }
  /// c_0 + c_1·X† + c_2·X†² + ... over the generators of an ideal.
  static TPoly spread(const std::vector<Elem>& coeffs);

  const std::vector<Elem>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Nonzero coefficients.
  std::vector<Elem> support() const;

  TPoly operator+(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly scaled(const Elem& c) const;
  TPoly shifted(int k) const;

  std::string to_string(const Domain& dom) const;

 private:
  void trim();
  std::vector<Elem> coeffs_;
};

/// f/g in K(X†), g ≠ 0.
struct RationalFunctionElem {
  TPoly f, g;
  std::string to_string(const Domain& dom) const;
};

/// Rescales f and g by one element of K so that every coefficient lies in D.
RationalFunctionElem clear_denominators(const Domain& dom, const RationalFunctionElem& z);
FractionalIdeal content(const Domain& dom, const TPoly& f);
/// f/g = p/q in K(X†) as elements of the fraction field (cross-multiplication).
bool same_function(const RationalFunctionElem& a, const RationalFunctionElem& b);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct MembershipCertificate {
  Verdict verdict = Verdict::Unknown;
  std::string route;
  std::string witness;
  /// Multiplier h for Kr, or an element of N(★) for Na.
  std::optional<TPoly> h;
  std::optional<ValuationSpec> obstruction;
};

/// c(h)^★ ∋ 1 for h with coefficients in D.
bool in_multiplicative_set_N(const StarPtr& star, const TPoly& h);

/// f/g ∈ Na(D,★). Exact on Z, Z_(p) and the polynomial backends (coprime
/// denominator in the UFD D[X†]); on Z[√d] decided prime by prime over the
/// primes containing c(g), Unknown only at a split singular prime.
MembershipCertificate na_member(const StarPtr& star, const RationalFunctionElem& z);

struct KrBudget {
  int max_factors = 2;
  std::vector<FractionalIdeal> aux;
  /// Candidate obstructions; each must pass the ★-valuation test on `samples`.
  std::vector<ValuationSpec> valuations;
  std::vector<FractionalIdeal> samples;
  /// Upper bound for ★_a used to pin extend_contract_kr.
  StarPtr upper;
  /// Accept Na membership as a certificate (Na(D,★) ⊆ Kr(D,★)).
  bool nagata_route = true;
};

/// f/g ∈ Kr(D,★): exact for e.a.b. operations, otherwise a multiplier search,
/// the Nagata route and valuation obstructions.
MembershipCertificate kr_member(const StarPtr& star, const RationalFunctionElem& z, const KrBudget& budget = {});

/// z ∈ E·Na(D,★) ∩ K via 1 ∈ c(h)^★ for h spread over (E :_D z).
IdealOracle extend_contract_na(const StarPtr& star, const FractionalIdeal& e);
/// E ↦ E·Na(D,★) ∩ K as an operation.
StarPtr make_nagata(const StarPtr& star);

/// z ∈ E·Kr(D,★) ∩ K via kr_member(z / f_E) with c(f_E) = E.
IdealOracle extend_contract_kr(const StarPtr& star, const FractionalIdeal& e, const KrBudget& budget = {});

struct MaximalTrace {
  std::vector<PrimeIdeal> maximal;
  std::vector<std::string> checks;
  bool verified = true;
};
MaximalTrace na_maximal_trace(const StarPtr& star, const std::vector<PrimeIdeal>& candidates);

struct BezoutCombination {
  TPoly h;
  MembershipCertificate f_over_h, g_over_h;
  std::string combination;
};
/// h = f + X†^N·g with N > deg f, so c(h) = c(f) + c(g).
BezoutCombination kr_bezout_combine(const TPoly& f, const TPoly& g, const StarPtr& star,
                                    const KrBudget& budget = {});

struct NaComparison {
  bool m_equal = false;
  std::vector<PrimeIdeal> m1, m2;
  /// Sampled Na memberships agree (when m_equal).
  bool samples_agree = true;
  std::optional<RationalFunctionElem> separator;
  std::string note;
};
NaComparison na_equal_iff_M(const StarPtr& s1, const StarPtr& s2, const std::vector<PrimeIdeal>& candidates,
                            const std::vector<RationalFunctionElem>& samples);

/// Random f/g of degree at most 2 whose coefficients are products of at most two stock elements.
RationalFunctionElem sample_rational_function(Sampler& s, const Domain& dom);

}  // namespace semistar
