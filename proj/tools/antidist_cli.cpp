// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "antidist/analytic.hpp"
#include "antidist/builtins.hpp"
#include "antidist/exclusion.hpp"
#include "antidist/io.hpp"
#include "antidist/locc.hpp"
#include "antidist/repro.hpp"

using namespace antidist;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumerics = 2;
constexpr int kExitReproFail = 3;

SolverOptions solver_options() {
  SolverOptions opt;
  if (const char* cap = std::getenv("ANTIDIST_MAX_ITERS")) {
    const int v = std::atoi(cap);
    if (v > 0) opt.max_iterations = v;
  }
  return opt;
}

Ensemble resolve_ensemble(const std::string& file, const std::string& builtin) {
  if (!builtin.empty()) return make_builtin_ensemble(builtin);
  if (file.empty()) throw std::invalid_argument("provide an ensemble file or --builtin");
  return load_ensemble(file);
}

int parse_starter(const std::string& s) {
  if (s == "A" || s == "a") return 0;
  if (s == "B" || s == "b") return 1;
  const int v = std::atoi(s.c_str());
  if (v >= 1) return v - 1;
  throw std::invalid_argument("starter must be A, B, or a 1-based party index");
}

std::string index_set(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s + "}";
}

void print_search(const SearchResult& res, bool strong) {
  std::printf("search:    %s\n", res.success ? "success" : "failure");
  if (strong) std::printf("strong:    %s\n", res.strong_success ? "yes" : "no");
  std::printf("candidate: %s\n", res.candidate.c_str());
  if (res.certified_impossible) std::printf("certified: LOCC exclusion impossible (marginal criterion)\n");
  if (!res.detail.empty()) std::printf("detail:    %s\n", res.detail.c_str());
  for (const auto& br : res.branches) {
    std::printf("  %s: %s", br.description.c_str(),
                br.pruned ? "pruned" : (br.ok ? "ok" : "FAILS"));
    if (!br.starter_claims.empty()) std::printf(" claims %s", index_set(br.starter_claims).c_str());
    if (br.responder_ran)
      std::printf(" responder on %s value %.6f", index_set(br.surviving).c_str(), br.responder_value);
    if (!br.note.empty()) std::printf(" (%s)", br.note.c_str());
    std::printf("\n");
  }
  if (!res.unreachable_subsets.empty()) {
    std::printf("unreachable subsets:");
    for (const auto& s : res.unreachable_subsets) std::printf(" %s", index_set(s).c_str());
    std::printf("\n");
  }
  if (res.success) {
    std::printf("protocol:\n%s\n", protocol_to_json(res.protocol).dump(2).c_str());
  }
}

json search_to_json(const SearchResult& res) {
  json j;
  j["success"] = res.success;
  j["strong_success"] = res.strong_success;
  j["certified_impossible"] = res.certified_impossible;
  j["candidate"] = res.candidate;
  j["detail"] = res.detail;
  json branches = json::array();
  for (const auto& br : res.branches) {
    json b;
    b["description"] = br.description;
    b["ok"] = br.ok;
    b["pruned"] = br.pruned;
    json claims = json::array();
    for (int k : br.starter_claims) claims.push_back(k + 1);
    b["starter_claims"] = std::move(claims);
    if (br.responder_ran) {
      json surv = json::array();
      for (int k : br.surviving) surv.push_back(k + 1);
      b["surviving"] = std::move(surv);
      b["responder_value"] = br.responder_value;
    }
    if (!br.note.empty()) b["note"] = br.note;
    branches.push_back(std::move(b));
  }
  j["branches"] = std::move(branches);
  json unreachable = json::array();
  for (const auto& s : res.unreachable_subsets) {
    json one = json::array();
    for (int k : s) one.push_back(k + 1);
    unreachable.push_back(std::move(one));
  }
  j["unreachable_subsets"] = std::move(unreachable);
  if (res.success) j["protocol"] = protocol_to_json(res.protocol);
  return j;
}

int cmd_antidist(const std::string& file, const std::string& builtin, int x, bool strong,
                 const std::string& normalization, bool as_json, bool show_povm) {
  const Ensemble e = resolve_ensemble(file, builtin);
  const Normalization norm =
      normalization == "unnormalized" ? Normalization::unnormalized : Normalization::normalized;
  const ExclusionTask task{e, x, strong, norm};
  const SolverOptions opt = solver_options();
  const ExclusionReport rep = exclusion_value(task, opt);

  std::optional<StrongCheckResult> sc;
  if (strong) sc = strong_exclusion_check(task, tol::kNullOutcome, opt);

  if (as_json) {
    json j = report_to_json(rep);
    if (sc) {
      j["strong"] = sc->strong;
      j["strong_min_trace"] = sc->min_trace;
      if (!sc->witness.operators.empty()) j["strong_witness"] = povm_to_json(sc->witness);
    }
    if (!show_povm) j.erase("povm");
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("states: %d   x: %d   dim: %d\n", e.size(), x, e.global_dim());
    std::printf("value:               %.6f\n", rep.value);
    std::printf("value (unnormalized): %.6f\n", rep.value_unnormalized);
    std::printf("perfect:             %s\n", rep.perfect ? "yes" : "no");
    if (sc) std::printf("strong:              %s (min outcome trace %.6g)\n",
                        sc->strong ? "yes" : "no", sc->min_trace);
    const std::string cert_text =
        rep.certificate.certified ? "ok" : "FAILED: " + rep.certificate.failure;
    std::printf("certificate:         %s (dual min eig %.3g, duality slack %.3g)\n",
                cert_text.c_str(), rep.certificate.dual_min_eigenvalue,
                rep.certificate.weak_duality_slack);
    std::printf("outcome traces:     ");
    for (double t : rep.outcome_traces) std::printf(" %.4f", t);
    std::printf("\n");
    if (show_povm) std::printf("povm:\n%s\n", povm_to_json(rep.povm).dump(2).c_str());
  }
  return rep.status == SdpStatus::optimal ? kExitOk : kExitNumerics;
}

int cmd_locc(const std::string& file, const std::string& builtin, const std::string& starter,
             int x, bool strong, bool bipartitions, bool as_json) {
  const Ensemble e = resolve_ensemble(file, builtin);
  if (!e.all_product())
    throw std::invalid_argument(
        "the LOCC decision applies to product ensembles; the marginal criterion does not cover "
        "entangled members");
  const SolverOptions opt = solver_options();

  if (bipartitions) {
    const BipartitionScan scan = bipartition_scan(e, opt);
    if (as_json) {
      json j;
      j["global_value"] = scan.global_value;
      j["global_perfect"] = scan.global_perfect;
      j["genuine"] = scan.genuine;
      json parts = json::array();
      for (const auto& bp : scan.bipartitions) {
        json b;
        json block = json::array();
        for (int p : bp.block) block.push_back(p + 1);
        b["block"] = std::move(block);
        b["locc_antidistinguishable"] = bp.locc_antidistinguishable;
        b["side_values"] = bp.side_values;
        parts.push_back(std::move(b));
      }
      j["bipartitions"] = std::move(parts);
      std::printf("%s\n", j.dump(2).c_str());
    } else {
      std::printf("global value: %.6f (%s)\n", scan.global_value,
                  scan.global_perfect ? "perfect" : "imperfect");
      for (const auto& bp : scan.bipartitions) {
        std::printf("bipartition %s vs rest: LOCC %s  (side values", index_set(bp.block).c_str(),
                    bp.locc_antidistinguishable ? "yes" : "no");
        for (double v : bp.side_values) std::printf(" %.6f", v);
        std::printf(")\n");
      }
      std::printf("genuine nonlocality: %s\n", scan.genuine ? "yes" : "no");
    }
    return kExitOk;
  }

  if (starter.empty()) {
    if (x != 1)
      throw std::invalid_argument("x > 1 needs --starter; the starter-free decision covers x = 1");
    const LoccDecision dec = product_locc_antidist_decision(e, opt);
    if (as_json) {
      json j;
      j["antidistinguishable"] = dec.antidistinguishable;
      j["witness_party"] = dec.witness_party + 1;
      j["marginal_values"] = dec.marginal_values;
      std::printf("%s\n", j.dump(2).c_str());
    } else {
      std::printf("LOCC antidistinguishable: %s\n", dec.antidistinguishable ? "yes" : "no");
      for (size_t p = 0; p < dec.marginal_values.size(); ++p)
        std::printf("  party %zu marginal value: %.6f%s\n", p + 1, dec.marginal_values[p],
                    static_cast<int>(p) == dec.witness_party ? "  (witness)" : "");
    }
    return kExitOk;
  }

  const int st = parse_starter(starter);
  const SearchResult res = two_step_search(e, st, x, strong, opt);
  if (as_json)
    std::printf("%s\n", search_to_json(res).dump(2).c_str());
  else
    print_search(res, strong);
  return kExitOk;
}

int cmd_three_state(const std::vector<double>& xs, const std::string& file,
                    const std::string& builtin, double tolerance, bool as_json) {
  ThreeStateVerdict v;
  if (!xs.empty()) {
    if (xs.size() != 3) throw std::invalid_argument("three-state-check needs exactly three values");
    v = three_state_check(xs[0], xs[1], xs[2], tolerance);
  } else {
    v = three_state_check(resolve_ensemble(file, builtin), tolerance);
  }
  if (as_json) {
    json j;
    j["condition_a"] = v.condition_a;
    j["condition_b"] = v.condition_b;
    j["antidistinguishable"] = v.antidistinguishable;
    j["boundary"] = v.boundary;
    j["sum"] = v.sum;
    j["margin"] = v.margin;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("sum x_i:            %.9g  (condition a: %s)\n", v.sum,
                v.condition_a ? "holds" : "fails");
    std::printf("(sum-1)^2 - 4 prod: %.9g  (condition b: %s%s)\n", v.margin,
                v.condition_b ? "holds" : "fails", v.boundary ? ", boundary" : "");
    std::printf("antidistinguishable: %s\n", v.antidistinguishable ? "yes" : "no");
  }
  return kExitOk;
}

int cmd_verify_povm(std::string file, const std::string& builtin, std::string povm_file, int x,
                    const std::string& normalization, double tolerance, bool as_json) {
  if (povm_file.empty() && !builtin.empty() && !file.empty()) std::swap(file, povm_file);
  if (povm_file.empty()) throw std::invalid_argument("provide a POVM JSON file");
  const Ensemble e = resolve_ensemble(file, builtin);
  const Normalization norm =
      normalization == "unnormalized" ? Normalization::unnormalized : Normalization::normalized;
  const ExclusionTask task{e, x, false, norm};
  const Povm cand = load_povm(povm_file);
  const FeasiblePointReport rep = verify_povm(task, cand, tolerance);
  const double achieved = achieved_value(task, cand);
  const ExclusionReport solver = exclusion_value(task, solver_options());
  const double solver_value =
      norm == Normalization::unnormalized ? solver.value_unnormalized : solver.value;

  if (as_json) {
    json j;
    j["valid"] = rep.valid;
    j["min_eigenvalue"] = rep.min_eigenvalue;
    j["completeness_residual"] = rep.constraint_residual;
    j["achieved_value"] = achieved;
    j["solver_value"] = solver_value;
    j["block_min_eigenvalues"] = rep.block_min_eigenvalues;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("valid at tol %.1e:      %s\n", tolerance, rep.valid ? "yes" : "no");
    std::printf("min eigenvalue:         %.3g\n", rep.min_eigenvalue);
    std::printf("completeness residual:  %.3g\n", rep.constraint_residual);
    std::printf("achieved value:         %.6f\n", achieved);
    std::printf("solver optimum:         %.6f\n", solver_value);
  }
  return kExitOk;
}

int cmd_verify_protocol(std::string file, const std::string& builtin, std::string protocol_file,
                        int x, bool strong, bool as_json) {
  if (protocol_file.empty() && !builtin.empty() && !file.empty()) std::swap(file, protocol_file);
  if (protocol_file.empty()) throw std::invalid_argument("provide a protocol JSON file");
  const Ensemble e = resolve_ensemble(file, builtin);
  const ProtocolNode tree = load_protocol(protocol_file);
  const ProtocolReport rep = verify_protocol(tree, e, x, strong);
  if (as_json) {
    json j;
    j["success"] = rep.success;
    j["strong_success"] = rep.strong_success;
    j["leaves"] = rep.leaves;
    j["pruned_branches"] = rep.pruned_branches;
    j["failures"] = rep.failures;
    json covered = json::array();
    for (const auto& s : rep.covered_subsets) {
      json one = json::array();
      for (int k : s) one.push_back(k + 1);
      covered.push_back(std::move(one));
    }
    j["covered_subsets"] = std::move(covered);
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("success:        %s\n", rep.success ? "yes" : "no");
    std::printf("strong success: %s\n", rep.strong_success ? "yes" : "no");
    std::printf("leaves: %d   pruned branches: %d\n", rep.leaves, rep.pruned_branches);
    for (const auto& f : rep.failures) std::printf("  failure: %s\n", f.c_str());
  }
  return kExitOk;
}

int cmd_repro(const std::string& id, bool as_json) {
  const SolverOptions opt = solver_options();
  std::vector<ClaimReport> reports;
  if (id == "all")
    reports = run_all_claims(opt);
  else
    reports.push_back(run_claim(id, opt));

  bool all_pass = true;
  if (as_json) {
    json j = json::array();
    for (const auto& rep : reports) {
      json r;
      r["id"] = rep.id;
      r["reference"] = rep.reference;
      r["pass"] = rep.pass;
      json checks = json::array();
      for (const auto& c : rep.checks) {
        json jc;
        jc["what"] = c.what;
        jc["measured"] = c.measured;
        jc["expected"] = c.expected;
        jc["pass"] = c.pass;
        checks.push_back(std::move(jc));
      }
      r["checks"] = std::move(checks);
      j.push_back(std::move(r));
      all_pass = all_pass && rep.pass;
    }
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    for (const auto& rep : reports) {
      std::printf("[%s] %s (%s)\n", rep.pass ? "PASS" : "FAIL", rep.id.c_str(),
                  rep.reference.c_str());
      for (const auto& c : rep.checks)
        std::printf("    %-55s %s  expected %s%s\n", c.what.c_str(), c.measured.c_str(),
                    c.expected.c_str(), c.pass ? "" : "  <-- FAIL");
      all_pass = all_pass && rep.pass;
    }
    std::printf("%s\n", all_pass ? "ALL PASS" : "FAILURES PRESENT");
  }
  return all_pass ? kExitOk : kExitReproFail;
}

int cmd_sweep(const std::string& builtin, const std::string& param, double from, double to,
              int steps, int x, bool strong) {
  if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
  const SolverOptions opt = solver_options();
  std::printf(strong ? "%s,value,value_unnormalized,strong\n" : "%s,value,value_unnormalized\n",
              param.c_str());
  for (int i = 0; i < steps; ++i) {
    const double v = from + (to - from) * i / (steps - 1);
    char spec[128];
    std::snprintf(spec, sizeof(spec), "%s:%s=%.17g", builtin.c_str(), param.c_str(), v);
    const Ensemble e = make_builtin_ensemble(spec);
    const ExclusionTask task{e, x, strong, Normalization::normalized};
    if (strong) {
      const StrongCheckResult sc = strong_exclusion_check(task, tol::kNullOutcome, opt);
      std::printf("%.10g,%.10g,%.10g,%d\n", v, sc.value, 1.0 - (1.0 - sc.value) * e.size(),
                  sc.strong ? 1 : 0);
    } else {
      const ExclusionReport rep = exclusion_value(task, opt);
      std::printf("%.10g,%.10g,%.10g\n", v, rep.value, rep.value_unnormalized);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"antidistinguishability and state-exclusion toolkit"};
  app.require_subcommand(1);

  std::string file, builtin, starter, normalization = "normalized", povm_file, protocol_file;
  std::string claim = "all", sweep_param = "eps";
  std::vector<double> xs;
  int x = 1, steps = 20;
  double tolerance = tol::kBoundary, verify_tol = 5e-3, from = 0.2, to = 0.5;
  bool strong = false, as_json = false, show_povm = false, bipartitions = false;

  auto add_ensemble_opts = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "ensemble JSON file");
    cmd->add_option("--builtin", builtin, "builtin ensemble name, e.g. eq-x1 or eq-xanti:eps=0.4");
  };

  CLI::App* c_anti = app.add_subcommand("antidist", "exclusion value of an ensemble");
  add_ensemble_opts(c_anti);
  c_anti->add_option("--x", x, "states excluded per outcome")->capture_default_str();
  c_anti->add_flag("--strong", strong, "also decide strong exclusion");
  c_anti->add_option("--normalization", normalization, "normalized|unnormalized")
      ->check(CLI::IsMember({"normalized", "unnormalized"}));
  c_anti->add_flag("--json", as_json, "machine-readable report");
  c_anti->add_flag("--povm", show_povm, "include the optimal POVM");

  CLI::App* c_locc = app.add_subcommand("locc", "LOCC decision, protocol search, bipartition scan");
  add_ensemble_opts(c_locc);
  c_locc->add_option("--starter", starter, "starting party (A, B, or 1-based index)");
  c_locc->add_option("--x", x, "states excluded per outcome")->capture_default_str();
  c_locc->add_flag("--strong", strong, "require exhaustive subset coverage");
  c_locc->add_flag("--bipartitions", bipartitions, "scan all bipartitions (>= 3 parties)");
  c_locc->add_flag("--json", as_json, "machine-readable report");

  CLI::App* c_three = app.add_subcommand("three-state-check", "closed-form three-state conditions");
  c_three->add_option("x", xs, "squared overlaps x1 x2 x3")->expected(0, 3);
  add_ensemble_opts(c_three);
  c_three->add_option("--tol", tolerance, "boundary tolerance")->capture_default_str();
  c_three->add_flag("--json", as_json, "machine-readable report");

  CLI::App* c_vpovm = app.add_subcommand("verify-povm", "check a candidate measurement file");
  add_ensemble_opts(c_vpovm);
  c_vpovm->add_option("povm", povm_file, "POVM JSON file (outcome label -> matrix)");
  c_vpovm->add_option("--x", x, "states excluded per outcome")->capture_default_str();
  c_vpovm->add_option("--normalization", normalization, "normalized|unnormalized")
      ->check(CLI::IsMember({"normalized", "unnormalized"}));
  c_vpovm->add_option("--tol", verify_tol, "feasibility tolerance")->capture_default_str();
  c_vpovm->add_flag("--json", as_json, "machine-readable report");

  CLI::App* c_vproto = app.add_subcommand("verify-protocol", "check a protocol tree file");
  add_ensemble_opts(c_vproto);
  c_vproto->add_option("protocol", protocol_file, "protocol JSON file");
  c_vproto->add_option("--x", x, "exclusions required per branch")->capture_default_str();
  c_vproto->add_flag("--strong", strong, "require exhaustive subset coverage");
  c_vproto->add_flag("--json", as_json, "machine-readable report");

  CLI::App* c_repro = app.add_subcommand("repro", "run registered reproduction claims");
  c_repro->add_option("claim", claim, "claim id or \"all\"")->capture_default_str();
  c_repro->add_flag("--json", as_json, "machine-readable report");

  CLI::App* c_sweep = app.add_subcommand("sweep", "CSV parameter sweep of the exclusion value");
  c_sweep->add_option("--builtin", builtin, "parametrized builtin (eq-xanti, xanti-bob, eq-pbr)")
      ->required();
  c_sweep->add_option("--param", sweep_param, "parameter key (eps, theta, cos2theta)")
      ->capture_default_str();
  c_sweep->add_option("--from", from, "first value")->required();
  c_sweep->add_option("--to", to, "last value")->required();
  c_sweep->add_option("--steps", steps, "number of points")->capture_default_str();
  c_sweep->add_option("--x", x, "states excluded per outcome")->capture_default_str();
  c_sweep->add_flag("--strong", strong, "add a strong-exclusion column");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(c_anti))
      return cmd_antidist(file, builtin, x, strong, normalization, as_json, show_povm);
    if (app.got_subcommand(c_locc))
      return cmd_locc(file, builtin, starter, x, strong, bipartitions, as_json);
    if (app.got_subcommand(c_three))
      return cmd_three_state(xs, file, builtin, tolerance, as_json);
    if (app.got_subcommand(c_vpovm))
      return cmd_verify_povm(file, builtin, povm_file, x, normalization, verify_tol, as_json);
    if (app.got_subcommand(c_vproto))
      return cmd_verify_protocol(file, builtin, protocol_file, x, strong, as_json);
    if (app.got_subcommand(c_repro)) return cmd_repro(claim, as_json);
    if (app.got_subcommand(c_sweep))
      return cmd_sweep(builtin, sweep_param, from, to, steps, x, strong);
  } catch (const std::invalid_argument& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitInput;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitNumerics;
  }
  return kExitInput;
}
