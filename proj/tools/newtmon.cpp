#include "newtmon/driver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace newtmon;

namespace {

struct CommonOpts {
  int n = 0;
  std::string P, Q = "1";
  std::string mode = "local";
  std::vector<std::string> lambdas;
  bool all_lambdas = false;
  std::string format = "text";
  std::string input_path;
  bool assume_nondegenerate = false;
  bool assume_isolated = false;
  bool assume_transversal = false;
  std::string lefschetz_m = "1";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_lambda, bool with_assumes) {
  cmd->add_option("-n", o.n, "number of variables");
  cmd->add_option("-P", o.P, "numerator polynomial");
  cmd->add_option("-Q", o.Q, "denominator polynomial (default 1)");
  cmd->add_option("--mode", o.mode, "local | infinity")->check(CLI::IsMember({"local", "infinity"}));
  cmd->add_option("--format", o.format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
  cmd->add_option("--input", o.input_path, "JSON file with an inputs block");
  if (with_lambda) {
    cmd->add_option("--lambda", o.lambdas, "eigenvalue class k/d in lowest terms");
    cmd->add_flag("--all-lambdas", o.all_lambdas, "every class of order dividing lcm of the lattice distances");
  }
  if (with_assumes) {
    cmd->add_flag("--assume-nondegenerate", o.assume_nondegenerate,
                  "assert Newton non-degeneracy (not verified)");
    cmd->add_flag("--assume-isolated", o.assume_isolated,
                  "assert isolated singularities of P and Q at 0");
    cmd->add_flag("--assume-transversal", o.assume_transversal,
                  "assert transversality away from the origin");
  }
}

JobSpec build_job(Command command, const CommonOpts& o) {
  JobSpec job;
  job.command = command;
  job.n = o.n;
  job.P_text = o.P;
  job.Q_text = o.Q;
  job.mode = o.mode == "infinity" ? Mode::infinity : Mode::local;
  job.machine = o.format == "machine";
  job.all_lambdas = o.all_lambdas;
  job.assume_nondegenerate = o.assume_nondegenerate;
  job.assume_isolated = o.assume_isolated;
  job.assume_transversal = o.assume_transversal;
  job.lefschetz_m = Int(o.lefschetz_m);
  for (const auto& l : o.lambdas) job.lambdas.push_back(parse_lambda(l));
  if (!o.input_path.empty()) {
    std::ifstream in(o.input_path);
    if (!in) throw std::invalid_argument("cannot open input file " + o.input_path);
    nlohmann::json doc = nlohmann::json::parse(in);
    const nlohmann::json& inputs = doc.contains("inputs") ? doc["inputs"] : doc;
    if (job.n == 0 && inputs.contains("n")) job.n = inputs["n"].get<int>();
    if (job.P_text.empty() && inputs.contains("P")) job.P_text = inputs["P"].get<std::string>();
    if (inputs.contains("Q") && o.Q == "1") job.Q_text = inputs["Q"].get<std::string>();
    if (inputs.contains("mode") && o.mode == "local")
      job.mode = inputs["mode"].get<std::string>() == "infinity" ? Mode::infinity : Mode::local;
    if (job.lambdas.empty() && inputs.contains("lambda"))
      for (const auto& l : inputs["lambda"]) job.lambdas.push_back(parse_lambda(l.get<std::string>()));
  }
  if (job.n <= 0) throw std::invalid_argument("the number of variables -n is required");
  if (job.P_text.empty()) throw std::invalid_argument("the numerator -P is required");
  return job;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton-polyhedron invariants of the Milnor monodromy of rational functions"};
  app.require_subcommand(1);

  struct Sub {
    Command command;
    CLI::App* cli;
    CommonOpts opts;
  };
  std::vector<Sub> subs;
  auto add = [&](Command c, const char* name, const char* help, bool lam, bool assumes) {
    subs.push_back({c, app.add_subcommand(name, help), {}});
    add_common(subs.back().cli, subs.back().opts, lam, assumes);
  };
  add(Command::zeta_local_cmd, "zeta-local", "monodromy zeta function at the origin", false, false);
  add(Command::zeta_infinity_cmd, "zeta-infinity", "monodromy zeta function at infinity", false, false);
  add(Command::multiplicity_cmd, "multiplicity", "eigenvalue multiplicities (lambda != 1)", true, false);
  add(Command::lefschetz_cmd, "lefschetz", "Lefschetz number Lambda(m)", false, false);
  add(Command::e_lambda_cmd, "e-lambda", "equivariant Hodge-Deligne polynomial", true, true);
  add(Command::jordan_cmd, "jordan", "Jordan block counts (lambda != 1)", true, true);
  add(Command::jordan_extremes_cmd, "jordan-extremes", "largest and second-largest Jordan blocks",
      true, true);
  add(Command::spectrum_cmd, "spectrum", "reduced Hodge spectrum", false, true);
  add(Command::ehrhart_cmd, "ehrhart", "weighted Ehrhart data of the Cayley boxes", false, true);
  add(Command::check_cmd, "check", "brute-force oracle comparisons", false, true);

  CLI::App* lef = nullptr;
  for (auto& s : subs)
    if (s.command == Command::lefschetz_cmd) lef = s.cli;
  std::string lef_m = "1";
  lef->add_option("-m", lef_m, "iterate of the monodromy (default 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto& s : subs) {
      if (!s.cli->parsed()) continue;
      s.opts.lefschetz_m = lef_m;
      JobSpec job = build_job(s.command, s.opts);
      RunReport rep = run(job);
      if (job.machine)
        std::cout << rep.doc.dump(2) << "\n";
      else
        std::cout << rep.text;
      return rep.ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
