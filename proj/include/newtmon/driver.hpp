#pragma once

#include "newtmon/oracles.hpp"
#include "newtmon/parse.hpp"
#include "newtmon/spectrum.hpp"
#include "newtmon/spectrum_oracle.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace newtmon {

enum class Command {
  zeta_local_cmd,
  zeta_infinity_cmd,
  multiplicity_cmd,
  lefschetz_cmd,
  e_lambda_cmd,
  jordan_cmd,
  jordan_extremes_cmd,
  spectrum_cmd,
  ehrhart_cmd,
  check_cmd,
};

inline const char* command_name(Command c) {
  switch (c) {
    case Command::zeta_local_cmd: return "zeta-local";
    case Command::zeta_infinity_cmd: return "zeta-infinity";
    case Command::multiplicity_cmd: return "multiplicity";
    case Command::lefschetz_cmd: return "lefschetz";
    case Command::e_lambda_cmd: return "e-lambda";
    case Command::jordan_cmd: return "jordan";
    case Command::jordan_extremes_cmd: return "jordan-extremes";
    case Command::spectrum_cmd: return "spectrum";
    case Command::ehrhart_cmd: return "ehrhart";
    case Command::check_cmd: return "check";
  }
  return "?";
}

struct JobSpec {
  Command command = Command::zeta_local_cmd;
  int n = 0;
  std::string P_text, Q_text;
  Mode mode = Mode::local;
  std::vector<RootOfUnity> lambdas;
  bool all_lambdas = false;
  Int lefschetz_m = 1;
  bool machine = false;  // --format machine
  bool assume_nondegenerate = false;
  bool assume_isolated = false;
  bool assume_transversal = false;
};

struct RunReport {
  bool ok = true;
  nlohmann::json doc;
  std::string text;
};

inline RootOfUnity parse_lambda(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("lambda must be a fraction k/d");
  Int k(s.substr(0, slash));
  Int d(s.substr(slash + 1));
  RootOfUnity r(k, d);
  if (r.k != k || r.d != d)
    throw std::invalid_argument("lambda must be given in lowest terms with 0 <= k < d");
  return r;
}

namespace detail {

inline nlohmann::json cyclotomic_json(const CyclotomicProduct& z) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [d, e] : z.factors) arr.push_back({{"d", d.str()}, {"exp", e.str()}});
  return arr;
}

inline nlohmann::json puiseux_json(const PuiseuxPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, v] : p.terms)
    arr.push_back({{"exponent", rat_str(e)}, {"coeff", v.str()}});
  return arr;
}

inline nlohmann::json jordan_json(const RootOfUnity& lambda, const JordanCounts& jc) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, j] : jc.blocks)
    arr.push_back({{"lambda", lambda.str()}, {"size", k}, {"count", j.str()}});
  return arr;
}

}  // namespace detail

// Executes one job: parses the polynomials, computes the hypothesis
// checklist, dispatches, and collects results plus the internal cross-checks
// that passed.  Hypothesis failures surface as ok = false with diagnostics.
inline RunReport run(const JobSpec& job) {
  RunReport rep;
  nlohmann::json& doc = rep.doc;
  std::ostringstream text;
  std::vector<std::string> checks;

  SparsePolynomial P = parse_polynomial(job.P_text, job.n);
  SparsePolynomial Q = parse_polynomial(job.Q_text, job.n);
  MeroPair pair = make_pair(P, Q, job.mode);

  doc["inputs"] = {{"command", command_name(job.command)},
                   {"n", job.n},
                   {"P", P.str()},
                   {"Q", Q.str()},
                   {"mode", job.mode == Mode::local ? "local" : "infinity"}};
  if (!job.lambdas.empty()) {
    nlohmann::json ls = nlohmann::json::array();
    for (const auto& l : job.lambdas) ls.push_back(l.str());
    doc["inputs"]["lambda"] = ls;
  }

  nlohmann::json hyp;
  hyp["convenient_P"] = is_convenient(P, job.mode);
  hyp["convenient_Q"] = is_convenient(Q, job.mode);
  bool needs_region = job.command == Command::e_lambda_cmd || job.command == Command::jordan_cmd ||
                      job.command == Command::jordan_extremes_cmd ||
                      job.command == Command::spectrum_cmd || job.command == Command::ehrhart_cmd;
  if (job.mode == Mode::local) {
    auto pc = is_properly_contained(pair);
    hyp["properly_contained"] = pc.ok;
    if (!pc.ok) hyp["violating_direction"] = vec_str(pc.witness);
  }
  hyp["nondegenerate_assumed"] = job.assume_nondegenerate;
  hyp["isolated_assumed"] = job.assume_isolated;
  hyp["transversal_assumed"] = job.assume_transversal;
  doc["hypotheses"] = hyp;

  text << "f = (" << P.str() << ") / (" << Q.str() << ")  on C^" << job.n
       << (job.mode == Mode::local ? "  (local)" : "  (at infinity)") << "\n";
  text << "hypotheses: convenient(P)=" << (hyp["convenient_P"].get<bool>() ? "yes" : "no")
       << " convenient(Q)=" << (hyp["convenient_Q"].get<bool>() ? "yes" : "no");
  if (hyp.contains("properly_contained"))
    text << " properly-contained=" << (hyp["properly_contained"].get<bool>() ? "yes" : "no");
  text << "\n";
  text << "note: non-degeneracy is a user-asserted hypothesis; this tool does not verify it\n";

  if (needs_region &&
      (!job.assume_nondegenerate || !job.assume_isolated || !job.assume_transversal)) {
    rep.ok = false;
    doc["error"] =
        "spectrum/Jordan commands require --assume-nondegenerate --assume-isolated "
        "--assume-transversal";
    rep.text = text.str() + "error: " + doc["error"].get<std::string>() + "\n";
    return rep;
  }

  try {
    nlohmann::json results;
    switch (job.command) {
      case Command::zeta_local_cmd: {
        CyclotomicProduct z = zeta_local(pair);
        results["zeta"] = detail::cyclotomic_json(z);
        text << "zeta_{f,0}(t) = " << z.str() << "\n";
        break;
      }
      case Command::zeta_infinity_cmd: {
        CyclotomicProduct z = zeta_infinity(pair);
        results["zeta"] = detail::cyclotomic_json(z);
        results["chi_complement"] = chi_complement(pair).str();
        text << "zeta_f^infinity(t) = " << z.str() << "\n";
        break;
      }
      case Command::multiplicity_cmd: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& l : job.lambdas) {
          Int m = multiplicity(pair, l);
          arr.push_back({{"lambda", l.str()}, {"multiplicity", m.str()}});
          text << "multiplicity(lambda = " << l.str() << ") = " << m << "\n";
        }
        checks.push_back("multiplicity:sign_bookkeeping");
        results["multiplicities"] = arr;
        break;
      }
      case Command::lefschetz_cmd: {
        Int lm = lefschetz(pair, job.lefschetz_m);
        results["m"] = job.lefschetz_m.str();
        results["lefschetz"] = lm.str();
        text << "Lambda(" << job.lefschetz_m << ") = " << lm << "\n";
        break;
      }
      case Command::e_lambda_cmd: {
        SpectrumEngine eng(pair);
        auto lambdas = job.all_lambdas ? eng.all_lambdas() : job.lambdas;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& l : lambdas) {
          EHDPolynomial e = eng.e_lambda(l);
          nlohmann::json hodge = nlohmann::json::array();
          for (const auto& [k, v] : e.E.c)
            hodge.push_back({{"p", k.first}, {"q", k.second}, {"h", e.h(k.first, k.second).str()}});
          arr.push_back({{"lambda", l.str()}, {"E", e.E.str()}, {"hodge", hodge}});
          text << "E_{" << l.str() << "}(F_0; u,v) = " << e.E.str() << "\n";
        }
        results["e_lambda"] = arr;
        for (const auto& c : eng.checks()) checks.push_back(c);
        break;
      }
      case Command::jordan_cmd: {
        SpectrumEngine eng(pair);
        auto lambdas = job.all_lambdas ? eng.all_lambdas() : job.lambdas;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& l : lambdas) {
          JordanCounts jc = eng.jordan_counts(l);
          for (const auto& j : detail::jordan_json(l, jc)) arr.push_back(j);
          text << "lambda = " << l.str() << ":";
          if (jc.blocks.empty()) text << " no Jordan blocks";
          for (const auto& [k, j] : jc.blocks) text << "  J_" << k << " = " << j;
          text << "\n";
        }
        results["jordan"] = arr;
        for (const auto& c : eng.checks()) checks.push_back(c);
        break;
      }
      case Command::jordan_extremes_cmd: {
        SpectrumEngine eng(pair);
        auto lambdas = job.all_lambdas ? eng.all_lambdas() : job.lambdas;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& l : lambdas) {
          auto [jn, jn1] = eng.jordan_extremes(l);
          arr.push_back({{"lambda", l.str()},
                         {"J_n", jn.str()},
                         {"J_n_minus_1", jn1.str()}});
          text << "lambda = " << l.str() << ": J_" << job.n << " = " << jn;
          if (job.n >= 2) text << ", J_" << job.n - 1 << " = " << jn1;
          text << "\n";
        }
        results["jordan_extremes"] = arr;
        for (const auto& c : eng.checks()) checks.push_back(c);
        break;
      }
      case Command::spectrum_cmd: {
        SpectrumEngine eng(pair);
        PuiseuxPolynomial sp = eng.reduced_spectrum();
        results["spectrum"] = detail::puiseux_json(sp);
        text << "reduced Hodge spectrum = " << sp.str() << "\n";
        for (const auto& c : eng.checks()) checks.push_back(c);
        break;
      }
      case Command::ehrhart_cmd: {
        SpectrumEngine eng(pair);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& cell : eng.cells()) {
          nlohmann::json entry;
          entry["gamma_dim"] = cell.gamma.dim();
          nlohmann::json vs = nlohmann::json::array();
          for (const auto& v : cell.box.vertices()) vs.push_back(vec_str(v));
          entry["box_vertices"] = vs;
          entry["lattice_distance"] = cell.d.str();
          entry["s"] = cell.s;
          entry["m"] = cell.m;
          nlohmann::json hs = nlohmann::json::array();
          for (const auto& [cls, h] : hstar_all(cell.box, eng.region().nu))
            hs.push_back({{"lambda", cls.str()}, {"hstar", h.str("u")}});
          entry["hstar"] = hs;
          arr.push_back(entry);
          text << "box of a dim-" << cell.gamma.dim() << " face: d = " << cell.d
               << ", s = " << cell.s << ", m = " << cell.m << "\n";
          for (const auto& [cls, h] : hstar_all(cell.box, eng.region().nu))
            text << "  h*_{" << cls.str() << "} = " << h.str("u") << "\n";
        }
        results["cells"] = arr;
        checks.push_back("hstar:polynomiality_verified");
        break;
      }
      case Command::check_cmd: {
        nlohmann::json arr = nlohmann::json::array();
        auto record = [&](const std::string& name, const std::string& oracle_v,
                          const std::string& engine_v) {
          bool agree = oracle_v == engine_v;
          arr.push_back({{"quantity", name},
                         {"oracle", oracle_v},
                         {"engine", engine_v},
                         {"agree", agree}});
          text << name << ": oracle = " << oracle_v << ", engine = " << engine_v
               << (agree ? "  [ok]" : "  [MISMATCH]") << "\n";
          if (!agree) rep.ok = false;
        };
        if (job.mode == Mode::local && job.n == 2) {
          record("zeta_local", oracle::zeta_staircase_2d(P, Q).str(), zeta_local(pair).str());
        }
        if (job.mode == Mode::local && hyp["convenient_P"].get<bool>() &&
            hyp["convenient_Q"].get<bool>() && hyp["properly_contained"].get<bool>()) {
          for (const auto& cell : cayley_cells(pair)) {
            record("volume(box dim " + std::to_string(cell.box.dim()) + ")",
                   oracle::volume_by_dilation(cell.box.vertices()).str(),
                   normalized_volume(cell.box).str());
          }
          record("reduced_spectrum",
                 oracle::spectrum_by_definition(pair, pair.n + 2).str(),
                 SpectrumEngine(pair).reduced_spectrum().str());
        }
        results["reports"] = arr;
        break;
      }
    }
    doc["results"] = results;
  } catch (const hypothesis_error& e) {
    rep.ok = false;
    doc["error"] = e.what();
    rep.text = text.str() + "hypothesis violation: " + e.what() + "\n";
    return rep;
  }

  nlohmann::json cj = nlohmann::json::array();
  for (const auto& c : checks) cj.push_back(c);
  doc["checks"] = cj;
  if (!checks.empty()) {
    text << "cross-checks passed:";
    for (const auto& c : checks) text << " " << c;
    text << "\n";
  }
  rep.text = text.str();
  return rep;
}

}  // namespace newtmon
