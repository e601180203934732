#pragma once

#include "semistar/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace semistar {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);  // x^a | x^b
Exponent exponent_lcm(const Exponent& a, const Exponent& b);
Exponent exponent_add(const Exponent& a, const Exponent& b);
Exponent exponent_sub(const Exponent& a, const Exponent& b);

/// Total order on exponent vectors. Elimination(block) eliminates the first
/// `block` variables: degrevlex on the block, ties broken by degrevlex on the
/// remaining variables.
struct MonomialOrder {
  enum class Kind { Lex, DegRevLex, Elimination };
  Kind kind = Kind::DegRevLex;
  std::size_t block = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
  static MonomialOrder elimination(std::size_t block) { return {Kind::Elimination, block}; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Exponent& a, const Exponent& b) const;
  std::string key() const;
  bool operator==(const MonomialOrder&) const = default;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// No zero coefficient is ever stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t arity) : arity_(arity) {}

  static Poly constant(std::size_t arity, const Rational& c);
  static Poly variable(std::size_t arity, std::size_t index);
  static Poly monomial(const Exponent& e, const Rational& c);

  std::size_t arity() const { return arity_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const;
  Rational coefficient(const Exponent& e) const;
  int total_degree() const;
  int degree_in(std::size_t var) const;

  void add_term(const Exponent& e, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  bool operator==(const Poly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

  Poly pow(unsigned k) const;

  /// Leading exponent / coefficient under `order`; the polynomial must be nonzero.
  Exponent leading_exponent(const MonomialOrder& order) const;
  Rational leading_coefficient(const MonomialOrder& order) const;
  /// Scales so the leading coefficient under `order` is 1.
  Poly monic(const MonomialOrder& order) const;

  /// Re-embeds into `new_arity` variables; variable i goes to slot placement[i].
  Poly embed(std::size_t new_arity, const std::vector<std::size_t>& placement) const;
  /// Coefficients with respect to variable `var` (index = power); arity is kept.
  std::vector<Poly> coefficients_in(std::size_t var) const;
  /// Drops variable `var`, which must not occur.
  Poly drop_variable(std::size_t var) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t arity_ = 0;
  std::map<Exponent, Rational> terms_;
};

std::vector<std::string> default_variable_names(std::size_t arity);

}  // namespace semistar
