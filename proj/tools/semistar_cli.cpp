#include "semistar/scenario.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

using namespace semistar;

namespace {

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("SEMISTAR_SEED");
  if (!s || !*s) return std::nullopt;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ScenarioError(std::string("SEMISTAR_SEED is not an integer: ") + s);
  }
}

void emit(const Report& r, const std::string& format, const std::string& out_path) {
  std::string body = format == "json" ? to_json(r).dump(2) + "\n" : render_text(r);
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ScenarioError("cannot write " + out_path);
  out << (format == "json" ? body : to_json(r).dump(2) + "\n");
  if (format != "json") std::cout << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semistar-operation workbench"};
  app.require_subcommand(1);

  std::string domain = "Q[X,Y]_(X,Y)", expr, op_text, ideal_text, ring = "ideal", format = "text", out_path;
  std::vector<std::string> paths;
  std::optional<std::uint64_t> seed;
  int samples = 100;

  auto* eval = app.add_subcommand("eval", "Evaluate one expression");
  eval->add_option("--domain", domain, "Z, Z_(p), Z[sqrt(d)], Q[X,Y], Q[X,Y]_(X,Y), Q[X,Y]_(X)");
  eval->add_option("expression", expr)->required();
  eval->add_option("--apply", ideal_text, "Ideal to close under the operation");

  auto* member = app.add_subcommand("member", "Element of an ideal closure, Na(D,★) or Kr(D,★)");
  member->add_option("--domain", domain);
  member->add_option("--op", op_text, "Operation")->required();
  member->add_option("--ring", ring, "ideal, na or kr")->check(CLI::IsMember({"ideal", "na", "kr"}));
  member->add_option("--ideal", ideal_text);
  member->add_option("element", expr)->required();

  auto* check = app.add_subcommand("check", "Run scenario files");
  check->add_option("scenarios", paths)->required();
  check->add_option("--seed", seed);
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", out_path, "Write the JSON report here");

  auto* axioms = app.add_subcommand("axioms", "Property run for one operation");
  axioms->add_option("--domain", domain);
  axioms->add_option("op", op_text)->required();
  axioms->add_option("--samples", samples);
  axioms->add_option("--seed", seed);

  auto* report = app.add_subcommand("report", "Re-render a JSON report");
  report->add_option("report", paths)->required()->expected(1);
  report->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (!seed) seed = env_seed();
    if (*eval) {
      Environment env(parse_domain(domain));
      Value v = env.eval(expr);
      std::cout << env.format(v) << "\n";
      if (!ideal_text.empty()) {
        if (v.kind != Value::Kind::Op) throw ScenarioError("--apply needs an operation");
        ClosureResult r = v.op->apply(env.ideal(ideal_text));
        const Domain& dom = *env.domain();
        if (r.oracle.whole_field)
          std::cout << "K\n";
        else if (r.oracle.presentation)
          std::cout << dom.format(*r.oracle.presentation) << " [" << to_string(r.oracle.grade) << "]\n";
        else
          std::cout << "oracle: " << r.oracle.description << " [" << to_string(r.oracle.grade) << "]\n";
        for (const auto& w : r.witnesses)
          std::cout << "  " << w.role << " = " << dom.format(w.h)
                    << (w.piece ? " gives " + dom.format(*w.piece) : std::string()) << (w.note.empty() ? "" : " (" + w.note + ")")
                    << "\n";
      }
      return 0;
    }
    if (*member) {
      Environment env(parse_domain(domain));
      StarPtr op = env.op(op_text);
      const Domain& dom = *env.domain();
      if (ring == "ideal") {
        if (ideal_text.empty()) throw ScenarioError("--ideal is required for ring 'ideal'");
        FractionalIdeal e = env.ideal(ideal_text);
        Elem z = env.element(expr);
        bool in = op->member(e, z);
        std::cout << dom.format(z) << (in ? " ∈ " : " ∉ ") << dom.format(e) << "^" << op->name() << "\n";
        return 0;
      }
      RationalFunctionElem z = env.rational_function(expr);
      MembershipCertificate m = ring == "na" ? na_member(op, z) : kr_member(op, z);
      std::cout << to_string(m.verdict) << " via " << m.route;
      if (!m.witness.empty()) std::cout << ": " << m.witness;
      std::cout << "\n";
      if (m.h) std::cout << "h = " << m.h->to_string(dom) << "\n";
      return 0;
    }
    if (*check) {
      int code = 0;
      for (const auto& p : paths) {
        Report r = run_scenario_file(p, seed);
        emit(r, format, paths.size() == 1 ? out_path : std::string());
        code = std::max(code, r.exit_code());
      }
      return code;
    }
    if (*axioms) {
      Environment env(parse_domain(domain));
      StarPtr op = env.op(op_text);
      AxiomPlan plan{seed.value_or(1), samples};
      bool ok = true;
      for (const auto& l : check_axioms(op, plan)) {
        std::cout << (l.skipped ? "SKIP " : l.passed ? "ok   " : "FAIL ") << l.name << " (" << l.checked << ")";
        if (!l.counterexample.empty()) std::cout << ": " << l.counterexample;
        if (!l.note.empty()) std::cout << " [" << l.note << "]";
        std::cout << "\n";
        ok = ok && (l.passed || l.skipped);
      }
      return ok ? 0 : 1;
    }
    if (*report) {
      std::ifstream in(paths.front());
      if (!in) throw ScenarioError("cannot read " + paths.front());
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw ScenarioError(e.what());
      }
      Report r = report_from_json(j);
      std::cout << (format == "json" ? to_json(r).dump(2) + "\n" : render_text(r));
      return r.exit_code();
    }
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
