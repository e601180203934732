#include "semistar/scenario.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace semistar {

using nlohmann::json;

namespace {

/// Scenario-level context shared by every assertion.
struct Context {
  Environment env;
  std::uint64_t seed;
  const DomainPtr& dom() const { return env.domain(); }
};

struct Outcome {
  bool pass = false;
  std::string witness;
};

const json& field(const json& a, const char* key) {
  if (!a.contains(key)) throw ScenarioError("assertion '" + a.value("id", std::string("?")) + "' lacks '" + key + "'");
  return a.at(key);
}

std::string text_field(const json& a, const char* key) {
  const json& v = field(a, key);
  if (!v.is_string()) throw ScenarioError(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

int int_field(const json& a, const char* key, int fallback) {
  if (!a.contains(key)) return fallback;
  if (!a.at(key).is_number_integer()) throw ScenarioError(std::string("'") + key + "' must be an integer");
  return a.at(key).get<int>();
}

std::vector<std::string> text_list(const json& a, const char* key) {
  const json& v = field(a, key);
  if (!v.is_array()) throw ScenarioError(std::string("'") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw ScenarioError(std::string("'") + key + "' entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<FractionalIdeal> ideals_of(const Context& c, const json& a, const char* key) {
  std::vector<FractionalIdeal> out;
  if (a.contains(key))
    for (const auto& s : text_list(a, key)) out.push_back(c.env.ideal(s));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string prime_names(const Domain& dom, const std::vector<PrimeIdeal>& ps) {
  std::vector<std::string> parts;
  for (const auto& p : ps) parts.push_back(p.name.empty() ? dom.format(p.ideal) : p.name);
  return "{" + join(parts, ", ") + "}";
}

bool same_prime_sets(const Domain& dom, const std::vector<PrimeIdeal>& a, const std::vector<PrimeIdeal>& b) {
  auto covered = [&](const std::vector<PrimeIdeal>& x, const std::vector<PrimeIdeal>& y) {
    for (const auto& p : x) {
      bool found = false;
      for (const auto& q : y) found = found || dom.equal(p.ideal, q.ideal);
      if (!found) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

KrBudget kr_budget(const Context& c, const json& a) {
  KrBudget b;
  if (!a.contains("budget")) return b;
  const json& j = a.at("budget");
  if (!j.is_object()) throw ScenarioError("'budget' must be an object");
  b.max_factors = int_field(j, "max_factors", b.max_factors);
  b.aux = ideals_of(c, j, "aux");
  b.samples = ideals_of(c, j, "samples");
  if (j.contains("valuations"))
    for (const auto& s : text_list(j, "valuations")) b.valuations.push_back(c.env.valuation(s));
  if (j.contains("upper")) b.upper = c.env.op(text_field(j, "upper"));
  if (j.contains("nagata_route")) b.nagata_route = j.at("nagata_route").get<bool>();
  return b;
}

bool expect_bool(const json& a) {
  const json& e = field(a, "expect");
  if (!e.is_boolean()) throw ScenarioError("'expect' must be true or false");
  return e.get<bool>();
}

std::string certificate_text(const MembershipCertificate& m) {
  std::string s = to_string(m.verdict) + " via " + m.route;
  if (!m.witness.empty()) s += ": " + m.witness;
  return s;
}

/// Membership of probes in an oracle against a finite expectation.
std::optional<std::string> oracle_mismatch(const Context& c, const IdealOracle& o, const FractionalIdeal& expect,
                                           const FractionalIdeal& input) {
  const Domain& dom = *c.dom();
  Sampler s(c.dom(), c.seed);
  std::vector<Elem> probes = probe_elements(dom, expect, s.stock());
  for (const auto& z : probe_elements(dom, input, s.stock())) probes.push_back(z);
  for (const auto& z : probes) {
    bool got = o.member(z), want = dom.contains(expect, z);
    if (got != want)
      return dom.format(z) + (got ? " lies in the closure but not in " : " lies in " ) + dom.format(expect) +
             (got ? "" : " but not in the closure");
  }
  return std::nullopt;
}

Outcome closure_equals(const Context& c, const json& a) {
  const Domain& dom = *c.dom();
  StarPtr op = c.env.op(text_field(a, "op"));
  std::string route = a.value("route", std::string("closure"));

  if (a.contains("other")) {
    StarPtr other = c.env.op(text_field(a, "other"));
    Sampler s(c.dom(), c.seed);
    std::vector<FractionalIdeal> samples = ideals_of(c, a, "ideals");
    int n = int_field(a, "samples", 20);
    for (int i = 0; i < n; ++i) samples.push_back(s.ideal(i % 2 == 0));
    Ordering ord = compare_ops(op, other, samples);
    Outcome out{ord.verdict == "=", ""};
    out.witness = op->name() + " vs " + other->name() + " on " + std::to_string(samples.size()) + " ideals: " +
                  ord.verdict + (ord.exact ? " (exact comparisons)" : " (probe comparisons)");
    if (!ord.witnesses.empty()) out.witness += "; " + ord.witnesses.front();
    return out;
  }

  FractionalIdeal e = c.env.ideal(text_field(a, "ideal"));
  FractionalIdeal expect = c.env.ideal(text_field(a, "expect"));
  IdealOracle o;
  std::vector<Witness> witnesses;
  if (route == "closure") {
    ClosureResult r = op->apply(e);
    o = r.oracle;
    witnesses = r.witnesses;
  } else if (route == "na") {
    o = extend_contract_na(op, e);
  } else if (route == "kr") {
    o = extend_contract_kr(op, e, kr_budget(c, a));
  } else {
    throw ScenarioError("unknown route '" + route + "'");
  }

  Outcome out;
  std::string lhs = dom.format(e) + "^" + op->name();
  if (route != "closure") lhs = dom.format(e) + "·" + (route == "na" ? "Na" : "Kr") + "(D," + op->name() + ") ∩ K";
  if (o.whole_field) {
    out.witness = lhs + " = K";
    return out;
  }
  if (o.presentation) {
    out.pass = dom.equal(*o.presentation, expect);
    out.witness = lhs + " = " + dom.format(*o.presentation);
  } else {
    auto bad = oracle_mismatch(c, o, expect, e);
    out.pass = !bad;
    out.witness = bad ? *bad : lhs + " agrees with " + dom.format(expect) + " on generators and probes";
  }
  out.witness += " [" + to_string(o.grade) + "]";
  if (o.grade == Grade::LowerBound && !o.presentation) {
    // A lower bound cannot certify the reverse inclusion on its own.
    out.pass = false;
    out.witness += "; only a lower bound";
  }
  if (a.contains("witness_h")) {
    FractionalIdeal h = c.env.ideal(text_field(a, "witness_h"));
    bool found = false;
    for (const auto& w : witnesses)
      if (w.role == "H" && w.piece && dom.equal(w.h, h)) {
        found = true;
        out.witness += "; witness H = " + dom.format(w.h) + " gives " + dom.format(*w.piece);
      }
    if (!found) {
      out.pass = false;
      out.witness += "; no witness H = " + dom.format(h);
    }
  }
  return out;
}

Outcome membership(const Context& c, const json& a) {
  const Domain& dom = *c.dom();
  StarPtr op = c.env.op(text_field(a, "op"));
  std::string ring = a.value("ring", std::string("ideal"));
  bool want = expect_bool(a);
  Outcome out;
  if (ring == "ideal") {
    FractionalIdeal e = c.env.ideal(text_field(a, "ideal"));
    Elem z = c.env.element(text_field(a, "element"));
    ClosureResult r = op->apply(e);
    bool got = r.oracle.whole_field || r.oracle.member(z);
    out.pass = got == want;
    if (!got && want && r.oracle.grade == Grade::LowerBound) out.witness = "not found within the witness budget; ";
    out.witness += dom.format(z) + (got ? " ∈ " : " ∉ ") + dom.format(e) + "^" + op->name();
    for (const auto& w : r.witnesses)
      if (got && w.role == "H" && w.piece && dom.contains(*w.piece, z))
        out.witness += "; witness H = " + dom.format(w.h);
    return out;
  }
  RationalFunctionElem z = c.env.rational_function(text_field(a, "element"));
  MembershipCertificate m;
  if (ring == "na")
    m = na_member(op, z);
  else if (ring == "kr")
    m = kr_member(op, z, kr_budget(c, a));
  else
    throw ScenarioError("unknown ring '" + ring + "'");
  out.pass = m.verdict == (want ? Verdict::Yes : Verdict::No);
  out.witness = z.to_string(dom) + (ring == "na" ? " in Na: " : " in Kr: ") + certificate_text(m);
  if (m.h) out.witness += "; h = " + m.h->to_string(dom);
  return out;
}

Outcome m_set_equals(const Context& c, const json& a) {
  const Domain& dom = *c.dom();
  StarPtr op = c.env.op(text_field(a, "op"));
  if (a.value("finite", true)) op = finite_type_closure(op);
  std::vector<PrimeIdeal> cands = c.env.primes(text_field(a, "candidates"));
  std::vector<PrimeIdeal> expect = c.env.primes(text_field(a, "expect"));
  Spectrum sp = quasi_star_spectrum(op, cands);
  Outcome out{same_prime_sets(dom, sp.maximal, expect), ""};
  out.witness = "M(" + op->name() + ") = " + prime_names(dom, sp.maximal) + " among " + prime_names(dom, cands) +
                "; quasi " + prime_names(dom, sp.quasi) + " via " + join(sp.routes, ", ") + " (" + sp.note + ")";
  return out;
}

Outcome op_order(const Context& c, const json& a) {
  StarPtr l = c.env.op(text_field(a, "left")), r = c.env.op(text_field(a, "right"));
  std::string want = text_field(a, "expect");
  Sampler s(c.dom(), c.seed);
  std::vector<FractionalIdeal> samples = ideals_of(c, a, "ideals");
  int n = int_field(a, "samples", 20);
  for (int i = 0; i < n; ++i) samples.push_back(s.ideal(i % 2 == 0));
  Ordering ord = compare_ops(l, r, samples);
  Outcome out{ord.verdict == want, l->name() + " " + ord.verdict + " " + r->name() + " on " +
                                       std::to_string(samples.size()) + " ideals"};
  if (!ord.witnesses.empty()) out.witness += "; " + join(ord.witnesses, "; ");
  return out;
}

std::string check_lines(const std::vector<CheckLine>& lines, bool* any_failed) {
  std::vector<std::string> parts;
  *any_failed = false;
  for (const auto& l : lines) {
    std::string s = l.name + ": ";
    if (l.skipped)
      s += "skipped";
    else if (l.passed)
      s += "ok on " + std::to_string(l.checked);
    else
      s += "FAILS, " + l.counterexample;
    if (!l.note.empty()) s += " (" + l.note + ")";
    if (!l.skipped && !l.passed) *any_failed = true;
    parts.push_back(s);
  }
  return join(parts, "; ");
}

Outcome axioms(const Context& c, const json& a) {
  StarPtr op = c.env.op(text_field(a, "op"));
  AxiomPlan plan{c.seed, int_field(a, "samples", 100)};
  bool want = a.contains("expect") ? expect_bool(a) : true;
  bool failed = false;
  std::string w = check_lines(check_axioms(op, plan), &failed);
  return {failed != want, op->name() + ": " + w};
}

Outcome eab(const Context& c, const json& a) {
  StarPtr op = c.env.op(text_field(a, "op"));
  bool want = expect_bool(a);
  std::vector<Triple> triples;
  if (a.contains("triples"))
    for (const auto& t : field(a, "triples")) {
      if (!t.is_array() || t.size() != 3) throw ScenarioError("each triple needs three ideals");
      triples.push_back({c.env.ideal(t[0].get<std::string>()), c.env.ideal(t[1].get<std::string>()),
                         c.env.ideal(t[2].get<std::string>())});
    }
  Sampler s(c.dom(), c.seed);
  int n = int_field(a, "samples", 0);
  for (int i = 0; i < n; ++i) triples.push_back({s.ideal(true), s.ideal(true), s.ideal(true)});
  if (triples.empty()) throw ScenarioError("eab needs triples or samples");
  bool failed = false;
  std::string w = check_lines(check_eab(op, triples), &failed);
  return {failed != want, op->name() + (failed ? " is not e.a.b.: " : " cancels on all triples: ") + w};
}

Outcome na_kr_chain(const Context& c, const json& a) {
  const Domain& dom = *c.dom();
  StarPtr op = c.env.op(text_field(a, "op"));
  StarPtr tilde = tilde_of(op, c.env.primes(text_field(a, "mset")));
  KrBudget budget = kr_budget(c, a);
  budget.nagata_route = false;
  Sampler s(c.dom(), c.seed);
  int n = int_field(a, "samples", 50);
  int na_yes = 0, kr_yes = 0, unknown = 0;
  for (int i = 0; i < n; ++i) {
    RationalFunctionElem z = sample_rational_function(s, dom);
    MembershipCertificate n1 = na_member(op, z), n2 = na_member(tilde, z);
    if (n1.verdict == Verdict::Unknown || n2.verdict == Verdict::Unknown) {
      ++unknown;
      continue;
    }
    if (n1.verdict != n2.verdict)
      return {false, z.to_string(dom) + ": Na(" + op->name() + ") says " + to_string(n1.verdict) + ", Na(" +
                         tilde->name() + ") says " + to_string(n2.verdict)};
    if (n1.verdict != Verdict::Yes) continue;
    ++na_yes;
    MembershipCertificate k = kr_member(op, z, budget);
    if (k.verdict == Verdict::No)
      return {false, z.to_string(dom) + " lies in Na but Kr says no: " + certificate_text(k)};
    if (k.verdict == Verdict::Yes) ++kr_yes;
    if (k.verdict == Verdict::Unknown) ++unknown;
  }
  std::ostringstream w;
  w << n << " samples, " << na_yes << " in Na(" << op->name() << ") = Na(" << tilde->name() << "), " << kr_yes
    << " of them certified in Kr, " << unknown << " undecided";
  return {true, w.str()};
}

Outcome valuation_overring(const Context& c, const json& a) {
  const Domain& dom = *c.dom();
  StarPtr op = c.env.op(text_field(a, "op"));
  ValuationSpec v = c.env.valuation(text_field(a, "valuation"));
  bool want = expect_bool(a);
  std::vector<FractionalIdeal> samples = ideals_of(c, a, "ideals");
  Sampler s(c.dom(), c.seed);
  int n = int_field(a, "samples", 0);
  for (int i = 0; i < n; ++i) samples.push_back(s.ideal(true));
  ValuationVerdict vv = is_star_valuation_overring(v, op, samples);
  std::string w = v.describe(dom.names()) + (vv.holds ? " is" : " is not") + " a " + op->name() +
                  "-valuation overring";
  if (!vv.witness.empty()) w += ": " + vv.witness;
  if (vv.relative_to_samples) w += " (relative to " + std::to_string(samples.size()) + " ideals)";
  return {vv.holds == want, w};
}

TPoly polynomial_of(const Context& c, const std::string& text) {
  RationalFunctionElem z = c.env.rational_function(text);
  if (z.g.degree() != 0) throw ScenarioError("'" + text + "' is not a polynomial in X†");
  return z.f.scaled(c.dom()->constant(1) / z.g.coeffs().front());
}

Outcome bezout_combine(const Context& c, const json& a) {
  const Domain& dom = *c.dom();
  StarPtr op = c.env.op(text_field(a, "op"));
  TPoly f = polynomial_of(c, text_field(a, "f")), g = polynomial_of(c, text_field(a, "g"));
  BezoutCombination b = kr_bezout_combine(f, g, op, kr_budget(c, a));
  bool ok = b.f_over_h.verdict == Verdict::Yes && b.g_over_h.verdict == Verdict::Yes;
  std::string w = "h = " + b.h.to_string(dom) + "; f/h " + certificate_text(b.f_over_h) + "; g/h " +
                  certificate_text(b.g_over_h);
  if (!b.combination.empty()) w += "; " + b.combination;
  return {ok, w};
}

Outcome na_equality(const Context& c, const json& a) {
  const Domain& dom = *c.dom();
  StarPtr l = c.env.op(text_field(a, "left")), r = c.env.op(text_field(a, "right"));
  std::vector<PrimeIdeal> cands = c.env.primes(text_field(a, "candidates"));
  std::string want = text_field(a, "expect");
  if (want != "equal" && want != "separated") throw ScenarioError("na-equality expects 'equal' or 'separated'");
  Sampler s(c.dom(), c.seed);
  std::vector<RationalFunctionElem> samples;
  int n = int_field(a, "samples", 30);
  for (int i = 0; i < n; ++i) samples.push_back(sample_rational_function(s, dom));
  NaComparison cmp = na_equal_iff_M(l, r, cands, samples);
  Outcome out;
  out.witness = "M(" + l->name() + ") = " + prime_names(dom, cmp.m1) + ", M(" + r->name() + ") = " +
                prime_names(dom, cmp.m2);
  if (want == "equal") {
    out.pass = cmp.m_equal && cmp.samples_agree;
    out.witness += cmp.samples_agree ? "; Na agrees on " + std::to_string(n) + " samples" : "; samples disagree";
  } else {
    out.pass = !cmp.m_equal && cmp.separator.has_value();
    if (cmp.separator) out.witness += "; separator " + cmp.separator->to_string(dom);
    if (a.contains("separator") && cmp.separator) {
      RationalFunctionElem sep = c.env.rational_function(text_field(a, "separator"));
      MembershipCertificate m1 = na_member(l, sep), m2 = na_member(r, sep);
      bool separates = m1.verdict != Verdict::Unknown && m2.verdict != Verdict::Unknown && m1.verdict != m2.verdict;
      out.pass = out.pass && separates;
      out.witness += "; " + sep.to_string(dom) + ": " + to_string(m1.verdict) + " in Na(" + l->name() + "), " +
                     to_string(m2.verdict) + " in Na(" + r->name() + ")";
    }
  }
  if (!cmp.note.empty()) out.witness += " (" + cmp.note + ")";
  return out;
}

Outcome tilde_routes(const Context& c, const json& a) {
  const Domain& dom = *c.dom();
  StarPtr op = c.env.op(text_field(a, "op"));
  StarPtr tilde = tilde_of(op, c.env.primes(text_field(a, "mset")));
  StarPtr w = star_w_of(op);
  Sampler s(c.dom(), c.seed);
  int n = int_field(a, "samples", 50);
  int pairs = 0;
  for (int i = 0; pairs < n; ++i) {
    FractionalIdeal e = s.ideal(i % 3 != 0);
    IdealOracle na = extend_contract_na(op, e);
    std::vector<Elem> zs = probe_elements(dom, e, s.stock());
    zs.push_back(s.element());
    for (const auto& z : zs) {
      bool t1 = tilde->member(e, z), t2 = w->member(e, z), t3 = na.member(z);
      ++pairs;
      if (t1 != t2 || t2 != t3)
        return {false, dom.format(z) + " vs " + dom.format(e) + ": tilde " + (t1 ? "yes" : "no") + ", w " +
                           (t2 ? "yes" : "no") + ", Na contraction " + (t3 ? "yes" : "no")};
      if (pairs >= n) break;
    }
  }
  return {true, "tilde, w and Na contraction agree on " + std::to_string(pairs) + " (E, z) pairs"};
}

Outcome maximal_trace(const Context& c, const json& a) {
  const Domain& dom = *c.dom();
  StarPtr op = c.env.op(text_field(a, "op"));
  std::vector<PrimeIdeal> cands = c.env.primes(text_field(a, "candidates"));
  MaximalTrace tr = na_maximal_trace(op, cands);
  Outcome out{tr.verified, "traces " + prime_names(dom, tr.maximal)};
  if (a.contains("expect")) {
    std::vector<PrimeIdeal> expect = c.env.primes(text_field(a, "expect"));
    out.pass = out.pass && same_prime_sets(dom, tr.maximal, expect);
  }
  if (!tr.checks.empty()) out.witness += "; " + join(tr.checks, "; ");
  return out;
}

const std::map<std::string, std::function<Outcome(const Context&, const json&)>>& handlers() {
  static const std::map<std::string, std::function<Outcome(const Context&, const json&)>> h{
      {"closure-equals", closure_equals},   {"membership", membership},
      {"m-set-equals", m_set_equals},       {"op-order", op_order},
      {"axioms", axioms},                   {"eab", eab},
      {"na-kr-chain", na_kr_chain},         {"valuation-overring", valuation_overring},
      {"bezout-combine", bezout_combine},   {"na-equality", na_equality},
      {"tilde-routes", tilde_routes},       {"maximal-trace", maximal_trace},
  };
  return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : id) h = (h ^ ch) * 1099511628211ULL;
  std::uint64_t z = seed + h + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Report::passed() const {
  int n = 0;
  for (const auto& a : assertions) n += a.verdict == "pass";
  return n;
}

Report run_scenario(const json& doc, std::optional<std::uint64_t> seed) {
  if (!doc.is_object()) throw ScenarioError("scenario must be a JSON object");
  if (doc.value("schema", 0) != kScenarioSchema)
    throw ScenarioError("unsupported schema version (expected " + std::to_string(kScenarioSchema) + ")");
  Report rep;
  try {
    rep.scenario = text_field(doc, "name");
    if (!doc.contains("seed") || !doc.at("seed").is_number_unsigned()) throw ScenarioError("'seed' must be explicit");
    rep.seed = seed ? *seed : doc.at("seed").get<std::uint64_t>();
    rep.domain = text_field(doc, "domain");
    Environment env(parse_domain(rep.domain));

    for (const auto& c : doc.value("candidates", json::array())) {
      std::string name = text_field(c, "name");
      Value list;
      list.kind = Value::Kind::List;
      for (const auto& p : text_list(c, "primes")) list.list.push_back(env.eval(p));
      env.bind(name, list);
      rep.candidates.emplace_back(name, c.value("provenance", std::string()));
    }
    for (const auto& n : doc.value("names", json::array())) {
      std::string name = text_field(n, "name");
      if (env.bound(name)) throw ScenarioError("name '" + name + "' declared twice");
      env.bind(name, env.eval(text_field(n, "expr")));
    }

    std::set<std::string> ids;
    for (const auto& a : doc.value("assertions", json::array())) {
      AssertionResult r;
      r.id = text_field(a, "id");
      r.kind = text_field(a, "kind");
      r.provenance = a.value("provenance", std::string());
      if (!ids.insert(r.id).second) throw ScenarioError("duplicate assertion id '" + r.id + "'");
      auto h = handlers().find(r.kind);
      if (h == handlers().end()) throw ScenarioError("unknown assertion kind '" + r.kind + "'");
      Context ctx{env, derive_seed(rep.seed, r.id)};
      auto t0 = std::chrono::steady_clock::now();
      try {
        Outcome o = h->second(ctx, a);
        r.verdict = o.pass ? "pass" : "fail";
        r.witness = o.witness;
      } catch (const ScenarioError&) {
        throw;
      } catch (const ParseError&) {
        throw;
      } catch (const nlohmann::json::exception& e) {
        throw ScenarioError(std::string("assertion '") + r.id + "': " + e.what());
      } catch (const std::exception& e) {
        r.verdict = "fail";
        r.witness = std::string("error: ") + e.what();
      }
      r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      rep.assertions.push_back(std::move(r));
    }
  } catch (const ParseError& e) {
    throw ScenarioError(std::string("parse error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError(e.what());
  }
  return rep;
}

Report run_scenario_file(const std::string& path, std::optional<std::uint64_t> seed) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ScenarioError(path + ": " + e.what());
  }
  return run_scenario(doc, seed);
}

json to_json(const Report& r) {
  json j;
  j["scenario"] = r.scenario;
  j["seed"] = std::to_string(r.seed);
  j["tool_version"] = r.tool_version;
  j["domain"] = r.domain;
  j["candidates"] = json::array();
  for (const auto& [name, prov] : r.candidates) j["candidates"].push_back({{"name", name}, {"provenance", prov}});
  j["assertions"] = json::array();
  for (const auto& a : r.assertions)
    j["assertions"].push_back({{"id", a.id},
                               {"kind", a.kind},
                               {"verdict", a.verdict},
                               {"witness", a.witness},
                               {"provenance", a.provenance},
                               {"millis", a.millis}});
  j["summary"] = {{"passed", std::to_string(r.passed())}, {"total", std::to_string(r.total())},
                  {"text", std::to_string(r.passed()) + "/" + std::to_string(r.total())}};
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  try {
    r.scenario = j.at("scenario").get<std::string>();
    r.seed = std::stoull(j.at("seed").get<std::string>());
    r.tool_version = j.value("tool_version", std::string());
    r.domain = j.value("domain", std::string());
    for (const auto& c : j.value("candidates", json::array()))
      r.candidates.emplace_back(c.at("name").get<std::string>(), c.value("provenance", std::string()));
    for (const auto& a : j.at("assertions"))
      r.assertions.push_back({a.at("id").get<std::string>(), a.at("kind").get<std::string>(),
                              a.at("verdict").get<std::string>(), a.value("witness", std::string()),
                              a.value("provenance", std::string()), a.value("millis", 0LL)});
  } catch (const std::exception& e) {
    throw ScenarioError(std::string("not a report: ") + e.what());
  }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "scenario " << r.scenario << " on " << r.domain << " (seed " << r.seed << ", semistar " << r.tool_version
      << ")\n";
  for (const auto& [name, prov] : r.candidates) out << "  candidates " << name << ": " << prov << "\n";
  for (const auto& a : r.assertions) {
    out << (a.verdict == "pass" ? "  PASS " : "  FAIL ") << a.id << " [" << a.kind << "] " << a.millis << " ms\n";
    if (!a.witness.empty()) out << "       " << a.witness << "\n";
  }
  out << "summary: " << r.passed() << "/" << r.total() << " passed\n";
  return out.str();
}

}  // namespace semistar
