#pragma once

#include "semistar/poly.hpp"
#include "semistar/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace semistar {

/// a + b·√d in Q(√d).
struct QuadNum {
  Rational a = 0;
  Rational b = 0;
  long d = 0;

  bool operator==(const QuadNum& o) const { return a == o.a && b == o.b && d == o.d; }
  Rational norm() const { return a * a - b * b * d; }
  QuadNum conjugate() const { return {a, -b, d}; }
};

/// num / den in Q(x_1..x_n). Kept with a monic denominator; common factors
/// are cancelled when one side divides the other or they share a monomial.
struct RatFunc {
  Poly num;
  Poly den;

  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
};

/// Element of a quotient field K. The alternative in use is fixed by the
/// backend: Rational for the integer backends, QuadNum for quadratic orders,
/// RatFunc for polynomial backends.
using Elem = std::variant<Rational, QuadNum, RatFunc>;

Elem operator+(const Elem& x, const Elem& y);
Elem operator-(const Elem& x, const Elem& y);
Elem operator*(const Elem& x, const Elem& y);
Elem operator/(const Elem& x, const Elem& y);
Elem operator-(const Elem& x);
Elem pow(const Elem& x, int k);

bool is_zero(const Elem& x);
/// Equality in K (cross multiplication for rational functions).
bool elem_equal(const Elem& x, const Elem& y);

/// A constant of the same kind as `like`.
Elem constant_like(const Elem& like, const Rational& c);

RatFunc make_ratfunc(Poly num, Poly den);
/// Cancels the full polynomial gcd of numerator and denominator.
RatFunc reduce_fully(const RatFunc& f);

std::string to_string(const Elem& x, const std::vector<std::string>& names);

}  // namespace semistar
