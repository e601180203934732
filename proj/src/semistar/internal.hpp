#pragma once

#include "semistar/semistar.hpp"

#include "../domains/backends.hpp"

namespace semistar::detail {

/// Spectral operations expose their prime set.
class SpectralOp : public SemistarOp {
 public:
  SpectralOp(DomainPtr dom, std::vector<PrimeIdeal> delta, std::string name, std::string kind, StarPtr base);
  std::string kind() const override { return kind_; }
  StarPtr base() const override { return base_; }
  const std::vector<PrimeIdeal>& delta() const { return delta_; }

 protected:
  ClosureResult compute(const FractionalIdeal& e) const override;

 private:
  std::vector<PrimeIdeal> delta_;
  std::string kind_;
  StarPtr base_;
};

const PolyDomain& require_poly(const Domain& dom, const std::string& what);
/// Splits the polynomial numerator of E as f·J with f the gcd of its generators.
struct GcdSplit {
  Poly f;
  PolyIdeal cofactor;
  Poly den;
};
GcdSplit gcd_split(const PolyDomain& pd, const FractionalIdeal& e);

}  // namespace semistar::detail
