#pragma once

#include "semistar/function_rings.hpp"
#include "semistar/semistar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace semistar {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

struct Expr {
  enum class Kind { Number, Name, Call, List, Binary, Negate };
  Kind kind = Kind::Number;
  std::string text;  // number literal, name, callee or operator
  std::vector<Expr> args;
  std::vector<std::pair<std::string, Expr>> kwargs;
  std::size_t pos = 0;
};

/// Grammar: sums and products of atoms with ^ integer powers, calls
/// name(arg, key=arg), lists [a, b]. `X†` (or `Xdag`) is the function-ring variable.
Expr parse_expression(const std::string& text);

struct Value {
  enum class Kind { Element, RationalFunction, Ideal, Op, Prime, Valuation, List };
  Kind kind = Kind::Element;
  Elem elem;
  RationalFunctionElem rf;
  FractionalIdeal ideal;
  StarPtr op;
  PrimeIdeal prime;
  std::optional<ValuationSpec> valuation;
  std::vector<Value> list;
};
std::string kind_name(Value::Kind k);

/// Names bound by a scenario, evaluated against one domain.
class Environment {
 public:
  explicit Environment(DomainPtr dom) : dom_(std::move(dom)) {}
  const DomainPtr& domain() const { return dom_; }
  void bind(const std::string& name, Value v) { names_[name] = std::move(v); }
  bool bound(const std::string& name) const { return names_.count(name) > 0; }

  Value eval(const Expr& e) const;
  Value eval(const std::string& text) const { return eval(parse_expression(text)); }

  Elem element(const std::string& text) const;
  RationalFunctionElem rational_function(const std::string& text) const;
  FractionalIdeal ideal(const std::string& text) const;
  StarPtr op(const std::string& text) const;
  PrimeIdeal prime(const std::string& text) const;
  std::vector<PrimeIdeal> primes(const std::string& text) const;
  ValuationSpec valuation(const std::string& text) const;

  std::string format(const Value& v) const;

 private:
  Value call(const Expr& e) const;
  Value binary(const Expr& e) const;
  DomainPtr dom_;
  std::map<std::string, Value> names_;
};

/// Domain shorthand: Z, Z_(5), Z[sqrt(-3)], Q[X,Y], Q[X,Y]_(X,Y), Q[X,Y]_(X).
DomainPtr parse_domain(const std::string& text);

}  // namespace semistar
