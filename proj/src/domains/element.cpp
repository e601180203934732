#include "semistar/element.hpp"

#include "semistar/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace semistar {

namespace {

void require_same_d(const QuadNum& x, const QuadNum& y) {
  if (x.d != y.d) throw std::invalid_argument("quadratic elements from different fields");
}

Exponent min_exponent(const Poly& p, Exponent acc) {
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i) acc[i] = std::min(acc[i], e[i]);
  return acc;
}

Poly divide_monomial(const Poly& p, const Exponent& m) {
  Poly r(p.arity());
  for (const auto& [e, c] : p.terms()) r.add_term(exponent_sub(e, m), c);
  return r;
}

template <class Op>
Elem dispatch(const Elem& x, const Elem& y, Op op) {
  if (x.index() != y.index()) throw std::invalid_argument("elements from different backends");
  return std::visit(
      [&](const auto& a) -> Elem {
        using T = std::decay_t<decltype(a)>;
        return op(a, std::get<T>(y));
      },
      x);
}

}  // namespace

RatFunc make_ratfunc(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.arity() != den.arity()) throw std::invalid_argument("rational function arity mismatch");
  const std::size_t n = num.arity();
  if (num.is_zero()) return {Poly(n), Poly::constant(n, 1)};
  Exponent m = min_exponent(den, min_exponent(num, Exponent(n, 1 << 30)));
  if (std::any_of(m.begin(), m.end(), [](int v) { return v > 0; })) {
    num = divide_monomial(num, m);
    den = divide_monomial(den, m);
  }
  if (!den.is_constant()) {
    if (auto q = exact_divide(num, den)) {
      num = std::move(*q);
      den = Poly::constant(n, 1);
    } else if (!num.is_constant()) {
      if (auto r = exact_divide(den, num)) {
        den = std::move(*r);
        num = Poly::constant(n, 1);
      }
    }
  }
  Rational lc = den.leading_coefficient(MonomialOrder::degrevlex());
  return {num * (1 / lc), den * (1 / lc)};
}

RatFunc reduce_fully(const RatFunc& f) {
  if (f.num.is_zero() || f.den.is_constant()) return make_ratfunc(f.num, f.den);
  Poly g = poly_gcd(f.num, f.den);
  if (g.is_constant()) return make_ratfunc(f.num, f.den);
  return make_ratfunc(*exact_divide(f.num, g), *exact_divide(f.den, g));
}

Elem operator+(const Elem& x, const Elem& y) {
  return dispatch(x, y, [](const auto& a, const auto& b) -> Elem {
    using T = std::decay_t<decltype(a)>;
    if constexpr (std::is_same_v<T, Rational>) {
      return Rational(a + b);
    } else if constexpr (std::is_same_v<T, QuadNum>) {
      require_same_d(a, b);
      return QuadNum{a.a + b.a, a.b + b.b, a.d};
    } else {
      if (a.den == b.den) return make_ratfunc(a.num + b.num, a.den);
      return make_ratfunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
  });
}

Elem operator-(const Elem& x) {
  return std::visit(
      [](const auto& a) -> Elem {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Rational>)
          return Rational(-a);
        else if constexpr (std::is_same_v<T, QuadNum>)
          return QuadNum{-a.a, -a.b, a.d};
        else
          return RatFunc{-a.num, a.den};
      },
      x);
}

Elem operator-(const Elem& x, const Elem& y) { return x + (-y); }

Elem operator*(const Elem& x, const Elem& y) {
  return dispatch(x, y, [](const auto& a, const auto& b) -> Elem {
    using T = std::decay_t<decltype(a)>;
    if constexpr (std::is_same_v<T, Rational>) {
      return Rational(a * b);
    } else if constexpr (std::is_same_v<T, QuadNum>) {
      require_same_d(a, b);
      return QuadNum{a.a * b.a + a.b * b.b * a.d, a.a * b.b + a.b * b.a, a.d};
    } else {
      return make_ratfunc(a.num * b.num, a.den * b.den);
    }
  });
}

Elem operator/(const Elem& x, const Elem& y) {
  if (is_zero(y)) throw std::domain_error("division by zero");
  return dispatch(x, y, [](const auto& a, const auto& b) -> Elem {
    using T = std::decay_t<decltype(a)>;
    if constexpr (std::is_same_v<T, Rational>) {
      return Rational(a / b);
    } else if constexpr (std::is_same_v<T, QuadNum>) {
      require_same_d(a, b);
      Rational n = b.norm();
      QuadNum c = b.conjugate();
      return QuadNum{(a.a * c.a + a.b * c.b * a.d) / n, (a.a * c.b + a.b * c.a) / n, a.d};
    } else {
      return make_ratfunc(a.num * b.den, a.den * b.num);
    }
  });
}

Elem pow(const Elem& x, int k) {
  Elem base = k < 0 ? constant_like(x, 1) / x : x;
  Elem r = constant_like(x, 1);
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

bool is_zero(const Elem& x) {
  return std::visit(
      [](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Rational>)
          return a == 0;
        else if constexpr (std::is_same_v<T, QuadNum>)
          return a.a == 0 && a.b == 0;
        else
          return a.num.is_zero();
      },
      x);
}

bool elem_equal(const Elem& x, const Elem& y) {
  if (x.index() != y.index()) return false;
  if (const auto* f = std::get_if<RatFunc>(&x)) {
    const auto& g = std::get<RatFunc>(y);
    return f->num * g.den == g.num * f->den;
  }
  return x == y;
}

Elem constant_like(const Elem& like, const Rational& c) {
  return std::visit(
      [&](const auto& a) -> Elem {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Rational>)
          return c;
        else if constexpr (std::is_same_v<T, QuadNum>)
          return QuadNum{c, 0, a.d};
        else
          return RatFunc{Poly::constant(a.num.arity(), c), Poly::constant(a.num.arity(), 1)};
      },
      like);
}

std::string to_string(const Elem& x, const std::vector<std::string>& names) {
  return std::visit(
      [&](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return a.get_str();
        } else if constexpr (std::is_same_v<T, QuadNum>) {
          std::string w = names.empty() ? "w" : names.front();
          if (a.b == 0) return a.a.get_str();
          std::string bpart = a.b == 1 ? w : a.b == -1 ? "-" + w : a.b.get_str() + "*" + w;
          if (a.a == 0) return bpart;
          std::string sep = a.b < 0 ? " - " : " + ";
          Rational mb = abs(a.b);
          std::string mbpart = mb == 1 ? w : mb.get_str() + "*" + w;
          return a.a.get_str() + sep + mbpart;
        } else {
          std::string n = a.num.to_string(names);
          if (a.den.is_constant() && a.den.constant_term() == 1) return n;
          bool simple_num = a.num.terms().size() <= 1;
          bool simple_den = a.den.terms().size() == 1 &&
                            (a.den.is_constant() || a.den.terms().begin()->second == 1);
          return (simple_num ? n : "(" + n + ")") + "/" +
                 (simple_den ? a.den.to_string(names) : "(" + a.den.to_string(names) + ")");
        }
      },
      x);
}

}  // namespace semistar
