#pragma once

#include "semistar/element.hpp"

#include <array>
#include <vector>

namespace semistar {

/// Integer row echelon form (Euclidean row operations), zero rows dropped.
std::vector<std::vector<Integer>> integer_echelon(std::vector<std::vector<Integer>> rows);

/// Full-rank Z-lattice in Q(√d) in Hermite normal form over the basis {1, ω}:
///   (1/den) · ( Z·(a + b·ω) + Z·(c·ω) ),   a, c > 0,  0 <= b < c,
/// with gcd(a, b, c, den) = 1. The form is canonical: equal lattices have
/// equal fields.
class QuadLattice {
 public:
  /// Z-span of the given elements; throws if the span is not of rank 2.
  static QuadLattice z_span(const std::vector<QuadNum>& gens, long d);
  /// Z[ω]-module generated by the given elements.
  static QuadLattice ideal_span(const std::vector<QuadNum>& gens, long d);
  static QuadLattice order(long d) { return ideal_span({QuadNum{1, 0, d}}, d); }

  long d() const { return d_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& den() const { return den_; }
  std::array<QuadNum, 2> basis() const;

  bool contains(const QuadNum& z) const;
  bool contains(const QuadLattice& other) const;
  QuadLattice intersect(const QuadLattice& other) const;
  QuadLattice sum(const QuadLattice& other) const;
  QuadLattice product(const QuadLattice& other) const;
  QuadLattice scaled(const QuadNum& z) const;
  /// {z in K : z · other ⊆ *this}.
  QuadLattice colon(const QuadLattice& other) const;

  bool operator==(const QuadLattice&) const = default;

 private:
  QuadLattice() = default;
  Integer a_, b_, c_, den_;
  long d_ = 0;
};

bool is_square(long n);
bool is_prime_integer(const Integer& n);
/// Legendre symbol (n / p) for an odd prime p.
int legendre(const Integer& n, const Integer& p);

}  // namespace semistar
