#include "semistar/expr.hpp"

#include <cctype>
#include <regex>

namespace semistar {

namespace {

const std::string kDagger = "\xE2\x80\xA0";

struct Token {
  enum class Kind { Number, Name, Symbol, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Number, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      if (s.compare(j, kDagger.size(), kDagger) == 0) j += kDagger.size();
      out.push_back({Token::Kind::Name, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("()[],=+-*/^").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) + "'", i);
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr parse() {
    Expr e = sum();
    if (peek().kind != Token::Kind::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool is(const char* sym) const { return peek().kind == Token::Kind::Symbol && peek().text == sym; }
  Token take() { return toks_[i_++]; }
  void expect(const char* sym) {
    if (!is(sym)) throw ParseError(std::string("expected '") + sym + "'", peek().pos);
    ++i_;
  }

  Expr binary(std::string op, Expr l, Expr r, std::size_t pos) {
    Expr e;
    e.kind = Expr::Kind::Binary;
    e.text = std::move(op);
    e.pos = pos;
    e.args = {std::move(l), std::move(r)};
    return e;
  }

  Expr sum() {
    Expr l = product();
    while (is("+") || is("-")) {
      Token op = take();
      l = binary(op.text, std::move(l), product(), op.pos);
    }
    return l;
  }

  Expr product() {
    Expr l = unary();
    while (is("*") || is("/")) {
      Token op = take();
      l = binary(op.text, std::move(l), unary(), op.pos);
    }
    return l;
  }

  Expr unary() {
    if (is("-")) {
      Token op = take();
      Expr e;
      e.kind = Expr::Kind::Negate;
      e.pos = op.pos;
      e.args = {unary()};
      return e;
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (is("^")) {
      Token op = take();
      bool neg = false;
      if (is("-")) {
        take();
        neg = true;
      }
      if (peek().kind != Token::Kind::Number) throw ParseError("expected integer exponent", peek().pos);
      Expr n;
      n.kind = Expr::Kind::Number;
      n.text = (neg ? "-" : "") + take().text;
      n.pos = op.pos;
      return binary("^", std::move(base), std::move(n), op.pos);
    }
    return base;
  }

  Expr atom() {
    const Token& t = peek();
    Expr e;
    e.pos = t.pos;
    if (t.kind == Token::Kind::Number) {
      e.kind = Expr::Kind::Number;
      e.text = take().text;
      return e;
    }
    if (t.kind == Token::Kind::Name) {
      e.text = take().text;
      if (!is("(")) {
        e.kind = Expr::Kind::Name;
        return e;
      }
      take();
      e.kind = Expr::Kind::Call;
      if (!is(")")) {
        for (;;) {
          if (peek().kind == Token::Kind::Name && toks_[i_ + 1].kind == Token::Kind::Symbol &&
              toks_[i_ + 1].text == "=") {
            std::string key = take().text;
            take();
            e.kwargs.emplace_back(key, sum());
          } else {
            if (!e.kwargs.empty()) throw ParseError("positional argument after keyword argument", peek().pos);
            e.args.push_back(sum());
          }
          if (!is(",")) break;
          take();
        }
      }
      expect(")");
      return e;
    }
    if (is("(")) {
      take();
      Expr inner = sum();
      expect(")");
      return inner;
    }
    if (is("[")) {
      take();
      e.kind = Expr::Kind::List;
      if (!is("]")) {
        for (;;) {
          e.args.push_back(sum());
          if (!is(",")) break;
          take();
        }
      }
      expect("]");
      return e;
    }
    throw ParseError(t.kind == Token::Kind::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

Value make_elem(Elem z) {
  Value v;
  v.kind = Value::Kind::Element;
  v.elem = std::move(z);
  return v;
}

Value make_rf(RationalFunctionElem z) {
  Value v;
  v.kind = Value::Kind::RationalFunction;
  v.rf = std::move(z);
  return v;
}

Value make_ideal_value(FractionalIdeal e) {
  Value v;
  v.kind = Value::Kind::Ideal;
  v.ideal = std::move(e);
  return v;
}

Value make_op(StarPtr s) {
  Value v;
  v.kind = Value::Kind::Op;
  v.op = std::move(s);
  return v;
}

Value make_prime_value(PrimeIdeal p) {
  Value v;
  v.kind = Value::Kind::Prime;
  v.prime = std::move(p);
  return v;
}

Value make_valuation(ValuationSpec s) {
  Value v;
  v.kind = Value::Kind::Valuation;
  v.valuation = std::move(s);
  return v;
}

[[noreturn]] void type_error(const Expr& e, const std::string& want, const Value& got) {
  throw ParseError("expected " + want + ", got " + kind_name(got.kind), e.pos);
}

RationalFunctionElem as_rf(const Value& v) {
  if (v.kind == Value::Kind::RationalFunction) return v.rf;
  return {TPoly::constant(v.elem), TPoly::constant(constant_like(v.elem, 1))};
}

RationalFunctionElem rf_add(const RationalFunctionElem& a, const RationalFunctionElem& b) {
  return {a.f * b.g + b.f * a.g, a.g * b.g};
}

RationalFunctionElem rf_mul(const RationalFunctionElem& a, const RationalFunctionElem& b) {
  return {a.f * b.f, a.g * b.g};
}

/// Drops common constant factors of the X†-free case back to an element.
Value settle(RationalFunctionElem z) {
  if (z.f.is_zero()) z.g = TPoly::constant(constant_like(z.g.support().front(), 1));
  return make_rf(std::move(z));
}

Rational as_rational(const Expr& e, const Elem& z) {
  if (const auto* r = std::get_if<Rational>(&z)) return *r;
  if (const auto* q = std::get_if<QuadNum>(&z); q && q->b == 0) return q->a;
  if (const auto* f = std::get_if<RatFunc>(&z); f && f->num.is_constant() && f->den.is_constant())
    return f->num.constant_term() / f->den.constant_term();
  throw ParseError("expected a rational number", e.pos);
}

long as_integer(const Expr& e, const Elem& z) {
  Rational r = as_rational(e, z);
  if (r.get_den() != 1) throw ParseError("expected an integer", e.pos);
  return r.get_num().get_si();
}

}  // namespace

Expr parse_expression(const std::string& text) { return Parser(tokenize(text)).parse(); }

std::string kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::Element:
      return "element";
    case Value::Kind::RationalFunction:
      return "rational function";
    case Value::Kind::Ideal:
      return "ideal";
    case Value::Kind::Op:
      return "operation";
    case Value::Kind::Prime:
      return "prime";
    case Value::Kind::Valuation:
      return "valuation";
    case Value::Kind::List:
      return "list";
  }
  return "?";
}

Value Environment::eval(const Expr& e) const {
  switch (e.kind) {
    case Expr::Kind::Number:
      return make_elem(dom_->constant(Rational(e.text)));
    case Expr::Kind::Name: {
      if (auto it = names_.find(e.text); it != names_.end()) return it->second;
      const auto names = dom_->names();
      const auto atoms = dom_->atoms();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == e.text) return make_elem(atoms[i]);
      if (e.text == "X" + kDagger || e.text == "Xdag") {
        Elem one = dom_->constant(1);
        return make_rf({TPoly({dom_->constant(0), one}), TPoly::constant(one)});
      }
      if (e.text == "d") return make_op(make_identity(dom_));
      if (e.text == "v") return make_op(make_v(dom_));
      if (e.text == "t") return make_op(make_t(dom_));
      if (e.text == "b") return make_op(make_b(dom_));
      if (e.text == "e") return make_op(make_trivial(dom_));
      if (e.text == "ex53") return make_op(make_ex53(dom_));
      throw ParseError("unbound name '" + e.text + "'", e.pos);
    }
    case Expr::Kind::List: {
      Value v;
      v.kind = Value::Kind::List;
      for (const auto& a : e.args) v.list.push_back(eval(a));
      return v;
    }
    case Expr::Kind::Negate: {
      Value v = eval(e.args.front());
      if (v.kind == Value::Kind::Element) return make_elem(-v.elem);
      if (v.kind == Value::Kind::RationalFunction) return make_rf({v.rf.f.scaled(dom_->constant(-1)), v.rf.g});
      type_error(e, "element", v);
    }
    case Expr::Kind::Binary:
      return binary(e);
    case Expr::Kind::Call:
      return call(e);
  }
  throw ParseError("bad expression", e.pos);
}

Value Environment::binary(const Expr& e) const {
  const Expr& le = e.args[0];
  const Expr& re = e.args[1];
  Value l = eval(le);
  if (e.text == "^") {
    long k = std::stol(re.text);
    if (l.kind == Value::Kind::Element) return make_elem(pow(l.elem, static_cast<int>(k)));
    if (l.kind == Value::Kind::Ideal) {
      if (k < 1) throw ParseError("ideal powers must be positive", e.pos);
      return make_ideal_value(dom_->power(l.ideal, static_cast<int>(k)));
    }
    if (l.kind == Value::Kind::RationalFunction) {
      RationalFunctionElem r = as_rf(make_elem(dom_->constant(1)));
      RationalFunctionElem b = k < 0 ? RationalFunctionElem{l.rf.g, l.rf.f} : l.rf;
      for (long i = 0; i < std::abs(k); ++i) r = rf_mul(r, b);
      return settle(r);
    }
    type_error(le, "element or ideal", l);
  }
  Value r = eval(re);
  using K = Value::Kind;
  if (l.kind == K::Element && r.kind == K::Element) {
    if (e.text == "+") return make_elem(l.elem + r.elem);
    if (e.text == "-") return make_elem(l.elem - r.elem);
    if (e.text == "*") return make_elem(l.elem * r.elem);
    if (is_zero(r.elem)) throw ParseError("division by zero", e.pos);
    return make_elem(l.elem / r.elem);
  }
  bool lfun = l.kind == K::Element || l.kind == K::RationalFunction;
  bool rfun = r.kind == K::Element || r.kind == K::RationalFunction;
  if (lfun && rfun) {
    RationalFunctionElem a = as_rf(l), b = as_rf(r);
    if (e.text == "+") return settle(rf_add(a, b));
    if (e.text == "-") return settle(rf_add(a, {b.f.scaled(dom_->constant(-1)), b.g}));
    if (e.text == "*") return settle(rf_mul(a, b));
    if (b.f.is_zero()) throw ParseError("division by zero", e.pos);
    return settle(rf_mul(a, {b.g, b.f}));
  }
  if (l.kind == K::Ideal && r.kind == K::Ideal) {
    if (e.text == "+") return make_ideal_value(dom_->sum(l.ideal, r.ideal));
    if (e.text == "*") return make_ideal_value(dom_->product(l.ideal, r.ideal));
    throw ParseError("ideals support + and * only", e.pos);
  }
  if (l.kind == K::Element && r.kind == K::Ideal && e.text == "*")
    return make_ideal_value(dom_->scale(r.ideal, l.elem));
  if (l.kind == K::Ideal && r.kind == K::Element && (e.text == "*" || e.text == "/")) {
    if (e.text == "*") return make_ideal_value(dom_->scale(l.ideal, r.elem));
    return make_ideal_value(dom_->scale(l.ideal, dom_->constant(1) / r.elem));
  }
  throw ParseError("operator '" + e.text + "' not defined for " + kind_name(l.kind) + " and " + kind_name(r.kind),
                   e.pos);
}

Value Environment::call(const Expr& e) const {
  const std::string& f = e.text;
  auto arg = [&](std::size_t i) -> Value {
    if (i >= e.args.size()) throw ParseError(f + ": missing argument " + std::to_string(i + 1), e.pos);
    return eval(e.args[i]);
  };
  auto kwarg = [&](const std::string& key) -> std::optional<std::pair<Value, const Expr*>> {
    for (const auto& [k, x] : e.kwargs)
      if (k == key) return std::pair<Value, const Expr*>{eval(x), &x};
    return std::nullopt;
  };
  auto elem_of = [&](std::size_t i) {
    Value v = arg(i);
    if (v.kind != Value::Kind::Element) type_error(e.args[i], "element", v);
    return v.elem;
  };
  auto op_of = [&](std::size_t i) {
    Value v = arg(i);
    if (v.kind != Value::Kind::Op) type_error(e.args[i], "operation", v);
    return v.op;
  };
  auto prime_of = [&](const Value& v, const Expr& where) -> PrimeIdeal {
    if (v.kind == Value::Kind::Prime) return v.prime;
    if (v.kind == Value::Kind::Element) return dom_->make_prime({v.elem}, false, format(v));
    if (v.kind == Value::Kind::Ideal)
      return dom_->make_prime(dom_->generators(v.ideal), false, dom_->format(v.ideal));
    type_error(where, "prime", v);
  };
  auto primes_of = [&](const Value& v, const Expr& where) {
    if (v.kind != Value::Kind::List) type_error(where, "list of primes", v);
    std::vector<PrimeIdeal> out;
    for (const auto& p : v.list) out.push_back(prime_of(p, where));
    return out;
  };
  auto elems_of = [&](const Value& v, const Expr& where) {
    if (v.kind != Value::Kind::List) type_error(where, "list", v);
    std::vector<Elem> out;
    for (const auto& p : v.list) {
      if (p.kind != Value::Kind::Element) type_error(where, "element", p);
      out.push_back(p.elem);
    }
    return out;
  };
  auto poly_of = [&](const Elem& z, const Expr& where) {
    const auto* r = std::get_if<RatFunc>(&z);
    if (!r || !r->den.is_constant()) throw ParseError("expected a polynomial", where.pos);
    return r->num * (1 / r->den.constant_term());
  };

  if (f == "ideal") {
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < e.args.size(); ++i) gens.push_back(elem_of(i));
    if (gens.empty()) throw ParseError("ideal() needs generators", e.pos);
    return make_ideal_value(dom_->make_ideal(gens));
  }
  if (f == "frac") {
    Value i = arg(0);
    if (i.kind != Value::Kind::Ideal) type_error(e.args[0], "ideal", i);
    return make_ideal_value(dom_->scale(i.ideal, dom_->constant(1) / elem_of(1)));
  }
  if (f == "prime" || f == "localize") {
    if (e.args.size() == 1) {
      Value v = arg(0);
      if (v.kind == Value::Kind::Prime) return v;
    }
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < e.args.size(); ++i) gens.push_back(elem_of(i));
    bool assume = false;
    if (auto a = kwarg("assume")) assume = as_integer(*a->second, a->first.elem) != 0;
    std::string name;
    for (std::size_t i = 0; i < gens.size(); ++i) name += (i ? ", " : "") + dom_->format(gens[i]);
    return make_prime_value(dom_->make_prime(gens, assume, "(" + name + ")"));
  }
  if (f == "extend") return make_op(make_extension(dom_, prime_of(arg(0), e.args[0])));
  if (f == "spectral") return make_op(make_spectral(dom_, primes_of(arg(0), e.args[0])));
  if (f == "w") return make_op(star_w_of(op_of(0)));
  if (f == "fin") return make_op(finite_type_closure(op_of(0)));
  if (f == "tilde") return make_op(tilde_of(op_of(0), primes_of(arg(1), e.args[1])));
  if (f == "nagata") return make_op(make_nagata(op_of(0)));
  if (f == "restrict") {
    std::optional<PrimeIdeal> p;
    if (e.args.size() > 1) p = prime_of(arg(1), e.args[1]);
    return make_op(restrict_to_overring(op_of(0), p));
  }
  if (f == "a") {
    ABudget b;
    if (auto k = kwarg("budget")) b.max_factors = static_cast<int>(as_integer(*k->second, k->first.elem));
    if (b.max_factors < 1) throw ParseError("budget must be positive", e.pos);
    if (auto u = kwarg("upper")) {
      if (u->first.kind != Value::Kind::Op) type_error(*u->second, "operation", u->first);
      b.upper = u->first.op;
    }
    if (auto a = kwarg("aux")) {
      if (a->first.kind != Value::Kind::List) type_error(*a->second, "list of ideals", a->first);
      for (const auto& x : a->first.list) {
        if (x.kind != Value::Kind::Ideal) type_error(*a->second, "ideal", x);
        b.aux.push_back(x.ideal);
      }
    }
    return make_op(make_star_a(op_of(0), b));
  }
  if (f == "valfam") {
    ValuationFamily fam;
    Value vals = arg(0);
    if (vals.kind != Value::Kind::List) type_error(e.args[0], "list of valuations", vals);
    for (const auto& v : vals.list) {
      if (v.kind != Value::Kind::Valuation) type_error(e.args[0], "valuation", v);
      fam.valuations.push_back(*v.valuation);
    }
    if (auto p = kwarg("primes"))
      for (const auto& z : elems_of(p->first, *p->second)) fam.dvr_primes.push_back(poly_of(z, *p->second));
    if (auto x = kwarg("excluded"))
      for (const auto& z : elems_of(x->first, *x->second)) fam.excluded.push_back(poly_of(z, *x->second));
    if (auto c = kwarg("cofinite")) fam.cofinite = as_integer(*c->second, c->first.elem) != 0;
    std::string name;
    if (auto n = kwarg("name")) name = format(n->first);
    return make_op(make_valuation_family(dom_, fam, name));
  }
  if (f == "weight") {
    std::vector<Rational> w;
    for (std::size_t i = 0; i < e.args.size(); ++i) w.push_back(as_rational(e.args[i], elem_of(i)));
    return make_valuation(ValuationSpec::monomial_weight(w));
  }
  if (f == "lex") {
    auto row = [&](std::size_t i) {
      Value v = arg(i);
      std::vector<long> out;
      for (const auto& z : elems_of(v, e.args[i])) out.push_back(as_integer(e.args[i], z));
      return out;
    };
    return make_valuation(ValuationSpec::lex_monomial(row(0), row(1)));
  }
  if (f == "dvr") return make_valuation(ValuationSpec::dvr_along(poly_of(elem_of(0), e.args[0])));
  throw ParseError("unknown function '" + f + "'", e.pos);
}

Elem Environment::element(const std::string& text) const {
  Expr e = parse_expression(text);
  Value v = eval(e);
  if (v.kind != Value::Kind::Element) type_error(e, "element", v);
  return v.elem;
}

RationalFunctionElem Environment::rational_function(const std::string& text) const {
  Expr e = parse_expression(text);
  Value v = eval(e);
  if (v.kind != Value::Kind::Element && v.kind != Value::Kind::RationalFunction) type_error(e, "rational function", v);
  return as_rf(v);
}

FractionalIdeal Environment::ideal(const std::string& text) const {
  Expr e = parse_expression(text);
  Value v = eval(e);
  if (v.kind == Value::Kind::Prime) return v.prime.ideal;
  if (v.kind != Value::Kind::Ideal) type_error(e, "ideal", v);
  return v.ideal;
}

StarPtr Environment::op(const std::string& text) const {
  Expr e = parse_expression(text);
  Value v = eval(e);
  if (v.kind != Value::Kind::Op) type_error(e, "operation", v);
  return v.op;
}

PrimeIdeal Environment::prime(const std::string& text) const {
  Expr e = parse_expression(text);
  Value v = eval(e);
  if (v.kind == Value::Kind::Prime) return v.prime;
  if (v.kind == Value::Kind::Element) return dom_->make_prime({v.elem}, false, format(v));
  if (v.kind == Value::Kind::Ideal) return dom_->make_prime(dom_->generators(v.ideal), false, dom_->format(v.ideal));
  type_error(e, "prime", v);
}

std::vector<PrimeIdeal> Environment::primes(const std::string& text) const {
  Expr e = parse_expression(text);
  Value v = eval(e);
  if (v.kind != Value::Kind::List) type_error(e, "list of primes", v);
  std::vector<PrimeIdeal> out;
  for (const auto& p : v.list) {
    if (p.kind == Value::Kind::Prime)
      out.push_back(p.prime);
    else if (p.kind == Value::Kind::Ideal)
      out.push_back(dom_->make_prime(dom_->generators(p.ideal), false, dom_->format(p.ideal)));
    else if (p.kind == Value::Kind::Element)
      out.push_back(dom_->make_prime({p.elem}, false, format(p)));
    else
      type_error(e, "prime", p);
  }
  return out;
}

ValuationSpec Environment::valuation(const std::string& text) const {
  Expr e = parse_expression(text);
  Value v = eval(e);
  if (v.kind != Value::Kind::Valuation) type_error(e, "valuation", v);
  return *v.valuation;
}

std::string Environment::format(const Value& v) const {
  switch (v.kind) {
    case Value::Kind::Element:
      return dom_->format(v.elem);
    case Value::Kind::RationalFunction:
      return v.rf.to_string(*dom_);
    case Value::Kind::Ideal:
      return dom_->format(v.ideal);
    case Value::Kind::Op:
      return v.op->name();
    case Value::Kind::Prime:
      return v.prime.name.empty() ? dom_->format(v.prime.ideal) : v.prime.name;
    case Value::Kind::Valuation:
      return v.valuation->name.empty() ? v.valuation->describe(dom_->names()) : v.valuation->name;
    case Value::Kind::List: {
      std::string s = "[";
      for (std::size_t i = 0; i < v.list.size(); ++i) s += (i ? ", " : "") + format(v.list[i]);
      return s + "]";
    }
  }
  return "?";
}

DomainPtr parse_domain(const std::string& text) {
  std::smatch m;
  DomainSpec s;
  static const std::regex z_re(R"(^\s*Z\s*$)"), zp_re(R"(^\s*Z_\((\d+)\)\s*$)"),
      quad_re(R"(^\s*Z\[(?:sqrt\((-?\d+)\)|√(-?\d+))\]\s*$)"),
      poly_re(R"(^\s*Q\[([A-Za-z_][A-Za-z0-9_]*(?:\s*,\s*[A-Za-z_][A-Za-z0-9_]*)*)\](?:_\((.+)\))?\s*$)");
  if (std::regex_match(text, m, z_re)) {
    s.kind = DomainKind::Integers;
    return make_domain(s);
  }
  if (std::regex_match(text, m, zp_re)) {
    s.kind = DomainKind::Integers;
    s.localize_at = std::stol(m[1]);
    return make_domain(s);
  }
  if (std::regex_match(text, m, quad_re)) {
    s.kind = DomainKind::QuadraticOrder;
    s.d = std::stol(m[1].matched ? m[1].str() : m[2].str());
    return make_domain(s);
  }
  if (std::regex_match(text, m, poly_re)) {
    s.kind = DomainKind::PolyLocal;
    std::string vars = m[1];
    std::regex sep(R"(\s*,\s*)");
    for (std::sregex_token_iterator it(vars.begin(), vars.end(), sep, -1), end; it != end; ++it)
      s.variables.push_back(*it);
    if (!m[2].matched) return make_domain(s);
    Environment base(make_domain(s));
    Expr e = parse_expression("[" + m[2].str() + "]");
    Value gens = base.eval(e);
    std::vector<Poly> polys;
    for (const auto& g : gens.list) {
      const auto* r = std::get_if<RatFunc>(&g.elem);
      if (g.kind != Value::Kind::Element || !r || !r->den.is_constant())
        throw ParseError("localization generators must be polynomials", 0);
      polys.push_back(r->num * (1 / r->den.constant_term()));
    }
    bool origin = polys.size() == s.variables.size();
    for (std::size_t i = 0; origin && i < polys.size(); ++i)
      origin = polys[i] == Poly::variable(s.variables.size(), i);
    if (origin) {
      s.center = CenterKind::Origin;
    } else if (polys.size() == 1) {
      s.center = CenterKind::Principal;
      s.center_generator = polys.front();
    } else {
      throw std::invalid_argument("unsupported localization " + m[2].str());
    }
    return make_domain(s);
  }
  throw std::invalid_argument("unrecognized domain '" + text + "'");
}

}  // namespace semistar
