#pragma once

#include "semistar/semistar.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace semistar {

/// Seeded generator of sample elements and ideals for one backend. Samples
/// are built from a small fixed stock of primes of D (and units), so every
/// sampled ideal is supported on known primes.
class Sampler {
 public:
  Sampler(DomainPtr dom, std::uint64_t seed);
  /// Nonzero element of K.
  Elem element();
  /// Nonzero element of D, a product of at most `max_factors` stock primes.
  Elem integral_element(int max_factors = 3);
  FractionalIdeal ideal(bool integral = false);
  /// The prime elements the samples are built from.
  const std::vector<Elem>& stock() const { return stock_; }
  std::mt19937_64& rng() { return rng_; }

 private:
  Elem product_of_stock(int max_factors);
  DomainPtr dom_;
  std::mt19937_64 rng_;
  std::vector<Elem> stock_;
  std::vector<Elem> units_;
};

/// Elements used to compare oracle-only closures: generators of E, shifted
/// by stock elements in both directions, and 1.
std::vector<Elem> probe_elements(const Domain& dom, const FractionalIdeal& e, const std::vector<Elem>& stock);

struct CheckLine {
  std::string name;
  bool passed = true;
  bool skipped = false;
  int checked = 0;
  std::string counterexample;
  std::string note;
};

struct AxiomPlan {
  std::uint64_t seed = 1;
  int samples = 100;
};
std::vector<CheckLine> check_axioms(const StarPtr& star, const AxiomPlan& plan);

struct Triple {
  FractionalIdeal e, f, g;
};
/// One line per triple; a failing line is an e.a.b. counterexample.
std::vector<CheckLine> check_eab(const StarPtr& star, const std::vector<Triple>& triples);

struct Ordering {
  bool le = true;  // E^{★1} ⊆ E^{★2} on all samples
  bool ge = true;
  std::string verdict;  // "<=", ">=", "=", "incomparable"
  std::vector<std::string> witnesses;
  bool exact = true;  // false when some comparison used probes
};
Ordering compare_ops(const StarPtr& s1, const StarPtr& s2, const std::vector<FractionalIdeal>& samples);

struct ValuationVerdict {
  bool holds = true;
  std::string witness;
  bool relative_to_samples = true;
};
ValuationVerdict is_star_valuation_overring(const ValuationSpec& v, const StarPtr& star,
                                            const std::vector<FractionalIdeal>& samples);

struct QuasiVerdict {
  bool quasi = false;
  std::string route;  // "presentation", "contraction", "spectral", "sampled"
};
/// I^★ ∩ D = I for an integral ideal I.
QuasiVerdict is_quasi_star_ideal(const FractionalIdeal& i, const StarPtr& star);

struct Spectrum {
  std::vector<PrimeIdeal> quasi;
  std::vector<PrimeIdeal> maximal;
  std::vector<std::string> routes;
  std::string note = "relative to candidates";
};
/// Quasi-★-primes among the candidates and the maximal ones among those.
Spectrum quasi_star_spectrum(const StarPtr& star, const std::vector<PrimeIdeal>& candidates);

}  // namespace semistar
