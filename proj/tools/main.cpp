// Command-line front end: verify theorem instances, print monomial-basis
// expansions and phi tables, reproduce the worked examples, and run the
// randomized self-test suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cycloschur/report.hpp"
#include "cycloschur/selfcheck.hpp"

namespace {

using namespace cycloschur;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitUsage = 64;

std::vector<Rational> parse_x_list(const std::string& spec, int r) {
  std::vector<Rational> xs;
  if (spec == "ones") {
    xs.assign(r, Rational(1));
    return xs;
  }
  std::string item;
  std::istringstream is(spec);
  while (std::getline(is, item, ',')) xs.push_back(Rational::parse(item));
  if (static_cast<int>(xs.size()) != r)
    throw std::invalid_argument("--x needs exactly r values");
  return xs;
}

struct CommonOpts {
  int n = 1;
  int r = 1;
  std::string x_spec;
  std::string xi_spec = "1";
  std::string backend = "exact";
  std::string output = "text";
  uint64_t seed = 20260810;
  bool strict_printed_form = false;
  int p = 0;
};

int cmd_verify(const CommonOpts& o) {
  TheoremInstance inst;
  inst.n = o.n;
  inst.r = o.r;
  inst.x_values = parse_x_list(o.x_spec, o.r);
  inst.xi = Rational::parse(o.xi_spec);
  inst.backend =
      o.backend == "float" ? BackendKind::floating : BackendKind::exact;
  const VerificationReport rep = verify_theorem(inst, o.strict_printed_form);
  if (o.output == "json")
    std::cout << report_to_json(rep) << "\n";
  else
    print_report_text(std::cout, rep);
  return rep.equal ? kExitOk : kExitMismatch;
}

int cmd_expand(const CommonOpts& o) {
  const MonomialCombo combo = schur_box_spec_combo(o.p, o.n, o.r);
  if (o.output == "json") {
    nlohmann::ordered_json j;
    j["n"] = o.n;
    j["r"] = o.r;
    j["p"] = o.p;
    j["expansion"] = combo.render();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << combo.render() << "\n";
  }
  return kExitOk;
}

int cmd_phi_table(const CommonOpts& o) {
  std::vector<Rational> xs;
  const bool evaluate = !o.x_spec.empty();
  if (evaluate) xs = parse_x_list(o.x_spec, o.r);
  const int kmax = (o.n - 1) * o.r;
  std::vector<std::string> rows;
  for (int k = 0; k <= kmax; ++k) {
    const MonomialCombo combo = phi_combo(k, o.n, o.r);
    if (evaluate)
      rows.push_back(combo
                         .eval(xs, Rational(1), Rational(0), Rational(1),
                               [](const Rational& q) { return q; })
                         .str());
    else
      rows.push_back(combo.render());
  }
  if (o.output == "json") {
    nlohmann::ordered_json j;
    j["n"] = o.n;
    j["r"] = o.r;
    if (evaluate) {
      auto xj = nlohmann::ordered_json::array();
      for (const auto& q : xs) xj.push_back(q.str());
      j["x"] = std::move(xj);
    }
    j["phi"] = rows;
    std::cout << j.dump() << "\n";
  } else {
    for (int k = 0; k <= kmax; ++k)
      std::cout << "phi_" << k << " = " << rows[k] << "\n";
  }
  return kExitOk;
}

int results_to_output(const std::vector<selfcheck::CheckResult>& results,
                      const std::string& output) {
  if (output == "json") {
    nlohmann::ordered_json j;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json c;
      c["name"] = r.name;
      c["pass"] = r.pass;
      c["detail"] = r.detail;
      arr.push_back(std::move(c));
    }
    j["checks"] = std::move(arr);
    j["all_pass"] = selfcheck::all_pass(results);
    std::cout << j.dump() << "\n";
  } else {
    selfcheck::print_results(std::cout, results, /*with_timing=*/false);
  }
  return selfcheck::all_pass(results) ? kExitOk : kExitMismatch;
}

int cmd_examples(const CommonOpts& o) {
  return results_to_output(selfcheck::worked_example_checks(), o.output);
}

int cmd_selftest(const CommonOpts& o) {
  selfcheck::Options opt;
  opt.seed = o.seed;
  opt.float_variants = (o.backend == "float");
  return results_to_output(selfcheck::run_acceptance(opt), o.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification of the generalized Scott determinant/permanent "
      "identity over cyclotomic fields"};
  app.require_subcommand(1);

  CommonOpts o;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", o.output, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_backend = [&](CLI::App* cmd) {
    cmd->add_option("--backend", o.backend, "exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
  };

  CLI::App* verify =
      app.add_subcommand("verify", "Check the identity at a rational point");
  verify->add_option("--n", o.n, "matrix order / root-of-unity conductor")
      ->required();
  verify->add_option("--r", o.r, "cardinality of x")->required();
  verify
      ->add_option("--x", o.x_spec, "comma-separated rationals (p/q) or 'ones'")
      ->required();
  verify->add_option("--xi", o.xi_spec, "rational xi (p/q)")->required();
  verify->add_flag("--strict-printed-form", o.strict_printed_form,
                   "also evaluate the literal det*Vandermonde reading");
  add_backend(verify);
  add_output(verify);

  CLI::App* expand = app.add_subcommand(
      "expand", "Monomial-basis expansion of the specialized Schur function");
  expand->add_option("--n", o.n)->required();
  expand->add_option("--r", o.r)->required();
  expand->add_option("--p", o.p, "last index, 0 <= p <= n-1")->required();
  add_output(expand);

  CLI::App* phi_table = app.add_subcommand(
      "phi-table", "Table of the phi_k sums, optionally evaluated at x");
  phi_table->add_option("--n", o.n)->required();
  phi_table->add_option("--r", o.r)->required();
  phi_table->add_option("--x", o.x_spec,
                        "evaluate at these values ('ones' accepted)");
  add_output(phi_table);

  CLI::App* examples = app.add_subcommand(
      "examples", "Re-derive the worked displays against embedded goldens");
  add_output(examples);

  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the seeded acceptance/property suites");
  selftest->add_option("--seed", o.seed, "RNG seed");
  add_backend(selftest);
  add_output(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o);
    if (expand->parsed()) return cmd_expand(o);
    if (phi_table->parsed()) return cmd_phi_table(o);
    if (examples->parsed()) return cmd_examples(o);
    if (selftest->parsed()) return cmd_selftest(o);
  } catch (const cycloschur::DegenerateInstance& e) {
    std::cerr << "degenerate instance: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
