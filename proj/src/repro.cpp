// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "antidist/repro.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include "antidist/analytic.hpp"
#include "antidist/builtins.hpp"
#include "antidist/exclusion.hpp"
#include "antidist/io.hpp"
#include "antidist/locc.hpp"

namespace antidist {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string full_precision(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(bool v) { return v ? "true" : "false"; }

struct Checker {
  ClaimReport& report;
  void operator()(const std::string& what, const std::string& measured, const std::string& expected,
                  bool pass) {
    report.checks.push_back({what, measured, expected, pass});
    report.pass = report.pass && pass;
  }
  void near(const std::string& what, double measured, double expected, double tolerance) {
    (*this)(what, fmt(measured), fmt(expected) + " +- " + fmt(tolerance),
            std::abs(measured - expected) <= tolerance);
  }
  void at_least(const std::string& what, double measured, double bound) {
    (*this)(what, fmt(measured), ">= " + fmt(bound), measured >= bound);
  }
  void at_most(const std::string& what, double measured, double bound) {
    (*this)(what, fmt(measured), "<= " + fmt(bound), measured <= bound);
  }
  void is(const std::string& what, bool measured, bool expected) {
    (*this)(what, fmt(measured), fmt(expected), measured == expected);
  }
};

ExclusionReport value_of(const Ensemble& e, int x, const SolverOptions& opt) {
  return exclusion_value({e, x, false, Normalization::normalized}, opt);
}

StrongCheckResult strong_of(const Ensemble& e, int x, const SolverOptions& opt) {
  return strong_exclusion_check({e, x, false, Normalization::normalized}, tol::kNullOutcome, opt);
}

// The explicit sufficiency protocol: the first party measures the
// computational basis and the second excludes within the conditional triple.
void claim_thm1(Checker& ck, const SolverOptions& opt) {
  const PureState z = make_named_state("0"), vp = make_named_state("v+"), vm = make_named_state("v-");
  const double r = 1.0 / std::sqrt(2.0);
  auto pair_state = [&](const PureState& a0, const PureState& a1) {
    std::vector<cplx> flat(4);
    for (int i = 0; i < 2; ++i) {
      flat[i] = r * a0.amplitudes[i];
      flat[2 + i] = r * a1.amplitudes[i];
    }
    return EnsembleState::from_flat(PureState(flat));
  };
  const Ensemble e = Ensemble::make(
      {2, 2}, {pair_state(z, vp), pair_state(vp, vm), pair_state(vm, z)});

  // Each conditional triple is {|0>,|v+>,|v->} up to ordering; squared overlaps
  // (1/4, 1/4, 1/4) sit exactly on the exclusion boundary.
  const auto verdict = three_state_check(0.25, 0.25, 0.25);
  ck.is("conditional triple excludable", verdict.antidistinguishable, true);

  const double f = 2.0 / 3.0;
  auto perp = [&](const PureState& s) {
    return hermitize(f * (ComplexMatrix::identity(2) - s.projector()));
  };
  // Conditional components: first outcome leaves {z, v+, v-}, second {v+, v-, z}.
  std::vector<ProtocolNode> bob0{ProtocolNode::leaf({0}), ProtocolNode::leaf({1}),
                                 ProtocolNode::leaf({2})};
  std::vector<ProtocolNode> bob1{ProtocolNode::leaf({0}), ProtocolNode::leaf({1}),
                                 ProtocolNode::leaf({2})};
  ProtocolNode tree = ProtocolNode::measure(
      0, {ComplexMatrix::outer({1.0, 0.0}), ComplexMatrix::outer({0.0, 1.0})},
      {ProtocolNode::measure(1, {perp(z), perp(vp), perp(vm)}, std::move(bob0)),
       ProtocolNode::measure(1, {perp(vp), perp(vm), perp(z)}, std::move(bob1))});
  const ProtocolReport rep = verify_protocol(tree, e, 1, true);
  ck.is("sufficiency protocol succeeds", rep.success, true);
  ck.is("sufficiency protocol is exhaustive", rep.strong_success, true);

  // Not necessary: the bundled counterexample has a non-excludable component
  // pair (two copies of the same state) yet is LOCC antidistinguishable.
  const Ensemble dup = Ensemble::make(
      {2}, {EnsembleState::product({make_named_state("0")}),
            EnsembleState::product({make_named_state("0")})});
  ck.near("duplicate component pair value", value_of(dup, 1, opt).value, 0.5, 1e-6);
}

void claim_lemma1(Checker& ck, const SolverOptions& opt) {
  (void)opt;
  const Ensemble e = make_builtin_ensemble("eq-necessary");
  const ComplexMatrix p0 = ComplexMatrix::outer({1.0, 0.0});
  const ComplexMatrix p1 = ComplexMatrix::outer({0.0, 1.0});
  ProtocolNode tree = ProtocolNode::measure(
      0, {p0, p1},
      {ProtocolNode::measure(1, {p0, p1}, {ProtocolNode::leaf({2}), ProtocolNode::leaf({1})}),
       ProtocolNode::leaf({0})});
  const ProtocolReport rep = verify_protocol(tree, e, 1, true);
  ck.is("protocol succeeds", rep.success, true);
  ck.is("protocol exhausts all states", rep.strong_success, true);
}

void claim_thm2(Checker& ck, const SolverOptions& opt) {
  const std::vector<std::string> specs{"eq-x1", "eq-pbr:theta=0.39269908169872414",
                                       "eq-xanti:eps=0.45"};
  for (const auto& spec : specs) {
    const Ensemble e = make_builtin_ensemble(spec);
    const LoccDecision dec = product_locc_antidist_decision(e, opt);
    const SearchResult a = two_step_search(e, 0, 1, false, opt);
    const SearchResult b = two_step_search(e, 1, 1, false, opt);
    ck.is(spec + ": starter-independent outcome", a.success == b.success, true);
    ck.is(spec + ": search matches the marginal criterion", a.success == dec.antidistinguishable,
          true);
    if (!dec.antidistinguishable)
      ck.is(spec + ": impossibility certified", a.certified_impossible && b.certified_impossible,
            true);
  }
  // Every bipartition grouping of the three-party example behaves the same way.
  const Ensemble pr = make_builtin_ensemble("eq-pr");
  for (const std::vector<int>& block : {std::vector<int>{0}, {0, 1}, {0, 2}}) {
    const Ensemble g = group_by_bipartition(pr, block);
    const LoccDecision dec = product_locc_antidist_decision(g, opt);
    const SearchResult a = two_step_search(g, 0, 1, false, opt);
    const SearchResult b = two_step_search(g, 1, 1, false, opt);
    ck.is("grouped: starter-independent outcome", a.success == b.success, true);
    ck.is("grouped: search matches the marginal criterion", a.success == dec.antidistinguishable,
          true);
  }
}

void claim_thm3(Checker& ck, const SolverOptions& opt) {
  const Ensemble e = make_builtin_ensemble("eq-x1");
  const SearchResult alice = two_step_search(e, 0, 2, false, opt);
  ck.is("Alice-first x=2 search succeeds", alice.success, true);
  ck.is("returned protocol verifies", alice.verification.success, true);
  const SearchResult alice_strong = two_step_search(e, 0, 2, true, opt);
  ck.is("Alice-first strong x=2 fails", alice_strong.success, false);

  const SearchResult bob = two_step_search(e, 1, 2, false, opt);
  ck.is("Bob-first x=2 search fails", bob.success, false);
  bool blocking_found = false;
  for (const auto& br : bob.branches)
    if (!br.ok && br.surviving == std::vector<int>{1, 2, 3} && br.responder_ran &&
        br.responder_value < 1.0 - 1e-3)
      blocking_found = true;
  ck.is("blocking conditional set {|+>,|v+>,|v->} reported", blocking_found, true);
  const Ensemble blockers = Ensemble::make(
      {2}, {EnsembleState::product({make_named_state("+")}),
            EnsembleState::product({make_named_state("v+")}),
            EnsembleState::product({make_named_state("v-")})});
  ck.is("blocking set fails the three-state conditions",
        three_state_check(blockers).antidistinguishable, false);
}

void claim_prop4_alice(Checker& ck, const SolverOptions& opt) {
  const Ensemble e = make_builtin_ensemble("eq-xanti:eps=0.45");
  const SearchResult res = two_step_search(e, 0, 2, true, opt);
  ck.is("Alice-first strong x=2 succeeds", res.success && res.strong_success, true);
  ck.near("covered pair count", static_cast<double>(res.covered_subsets.size()), 6.0, 0.0);
}

void claim_prop4_bob(Checker& ck, const SolverOptions& opt) {
  const Ensemble e = make_builtin_ensemble("eq-xanti:eps=0.45");
  const SearchResult res = two_step_search(e, 1, 2, true, opt);
  ck.is("Bob-first strong x=2 fails", res.success, false);
  const bool unreachable_14 = res.unreachable_subsets.size() == 1 &&
                              res.unreachable_subsets.front() == std::vector<int>{0, 3};
  ck.is("only unreachable pair is {phi1, phi4}", unreachable_14, true);
}

void claim_prop5(Checker& ck, const SolverOptions& opt) {
  const Ensemble e = make_builtin_ensemble("eq-xanti:eps=" + full_precision(1.0 / 3.0));
  const SearchResult bob = two_step_search(e, 1, 2, true, opt);
  ck.is("Bob-first strong x=2 succeeds", bob.success && bob.strong_success, true);
  ck.is("no communication needed", bob.candidate == "starter x-subset exclusion measurement", true);
  const SearchResult alice = two_step_search(e, 0, 2, true, opt);
  ck.is("Alice-first strong x=2 succeeds", alice.success && alice.strong_success, true);
}

void claim_thm5(Checker& ck, const SolverOptions& opt) {
  const Ensemble e = make_builtin_ensemble("thm5:d=2");
  const GramData g = gram(e);
  ck.near("x12", g.squared_overlaps(0, 1), 0.25, 1e-12);
  ck.near("x13", g.squared_overlaps(0, 2), 0.0625, 1e-12);
  ck.near("x23", g.squared_overlaps(1, 2), 0.25, 1e-12);
  ck.is("three-state conditions hold", three_state_check(e).antidistinguishable, true);
  ck.near("global exclusion value", value_of(e, 1, opt).value, 1.0, tol::kPerfect);
  const LoccDecision dec = product_locc_antidist_decision(e, opt);
  ck.is("LOCC antidistinguishable", dec.antidistinguishable, false);
}

void claim_thm6(Checker& ck, const SolverOptions& opt) {
  const Ensemble inside = make_builtin_ensemble("eq-pbr:cos2theta=0.41");
  const StrongCheckResult sc = strong_of(inside, 2, opt);
  ck.near("x=2 value at cos2theta=0.41", sc.value, 1.0, tol::kPerfect);
  ck.is("strong with all six outcomes live", sc.strong, true);
  const Ensemble outside = make_builtin_ensemble("eq-pbr:cos2theta=0.45");
  ck.at_most("x=2 value at cos2theta=0.45", value_of(outside, 2, opt).value, 1.0 - 1e-4);
}

void claim_thm7(Checker& ck, const SolverOptions& opt) {
  const Ensemble e = make_builtin_ensemble("eq-pbr:theta=0.39269908169872414");  // 2theta = pi/4
  const StrongCheckResult sc = strong_of(e, 1, opt);
  ck.near("global value", sc.value, 1.0, tol::kPerfect);
  ck.is("strong", sc.strong, true);
  const LoccDecision dec = product_locc_antidist_decision(e, opt);
  ck.is("locally antidistinguishable", dec.antidistinguishable, false);
}

void claim_prop8(Checker& ck, const SolverOptions& opt) {
  const Ensemble e = make_builtin_ensemble("eq-n2");
  const StrongCheckResult sc2 = strong_of(e, 2, opt);
  ck.near("global x=2 value", sc2.value, 1.0, tol::kPerfect);
  ck.is("strongly 2-excludable globally", sc2.strong, true);

  const LoccDecision dec = product_locc_antidist_decision(e, opt);
  ck.is("LOCC antidistinguishable", dec.antidistinguishable, true);
  ck.is("witness party is the first", dec.witness_party == 0, true);
  const StrongCheckResult marg = strong_of(marginal_set(e, 0), 1, opt);
  ck.is("witness marginal set is strongly excludable", marg.strong, true);

  const SearchResult a = two_step_search(e, 0, 2, true, opt);
  const SearchResult b = two_step_search(e, 1, 2, true, opt);
  ck.is("strong x=2 fails from either starter", !a.success && !b.success, true);
}

void claim_thm9(Checker& ck, const SolverOptions& opt) {
  const Ensemble e = make_builtin_ensemble("eq-pr");
  const BipartitionScan scan = bipartition_scan(e, opt);
  ck.near("global value", scan.global_value, 1.0, tol::kPerfect);
  ck.near("bipartition count", static_cast<double>(scan.bipartitions.size()), 3.0, 0.0);
  for (const auto& bp : scan.bipartitions) {
    std::string name = "bipartition {";
    for (size_t i = 0; i < bp.block.size(); ++i)
      name += (i ? "," : "") + std::to_string(bp.block[i] + 1);
    name += "}";
    ck.is(name + " LOCC verdict", bp.locc_antidistinguishable, false);
  }
  ck.is("genuine flag", scan.genuine, true);
}

void claim_appendix_a(Checker& ck, const SolverOptions& opt) {
  const Ensemble e = make_builtin_ensemble("appendix-a");
  const ExclusionTask task{e, 1, false, Normalization::unnormalized};
  const ExclusionReport rep = exclusion_value(task, opt);
  ck.near("solver value", rep.value_unnormalized, 1.0, tol::kPerfect);
  ck.is("certificate holds", rep.certificate.certified, true);
  const Povm ref = reference_qubit_quad_povm();
  const FeasiblePointReport fp = verify_povm(task, ref, 5e-4);
  ck.is("recorded measurement feasible at 5e-4", fp.valid, true);
  ck.near("recorded measurement value", achieved_value(task, ref), 1.0, 5e-4);
}

void claim_appendix_b(Checker& ck, const SolverOptions& opt) {
  const ExclusionTask half{make_builtin_ensemble("xanti-bob:eps=0.5"), 2, false,
                           Normalization::unnormalized};
  const ExclusionReport rep_half = exclusion_value(half, opt);
  ck.at_most("eps=1/2 x=2 value", rep_half.value_unnormalized, 1.0 - 1e-3);
  const Povm n = reference_pair_povm_eps_half();
  const FeasiblePointReport fp_half = verify_povm(half, n, 5e-3);
  ck.is("recorded eps=1/2 measurement feasible at 5e-3", fp_half.valid, true);
  ck.at_least("solver optimum dominates the recorded value",
              rep_half.value_unnormalized - achieved_value(half, n), -1e-6);

  const std::string third = "xanti-bob:eps=" + full_precision(1.0 / 3.0);
  const ExclusionTask te{make_builtin_ensemble(third), 2, false, Normalization::unnormalized};
  const StrongCheckResult sc = strong_exclusion_check(te, tol::kNullOutcome, opt);
  ck.near("eps=1/3 x=2 value", sc.value, 1.0, tol::kPerfect);
  ck.is("eps=1/3 strong", sc.strong, true);
  const FeasiblePointReport fp_third = verify_povm(te, reference_pair_povm_eps_third(), 5e-3);
  ck.is("recorded eps=1/3 measurement feasible at 5e-3", fp_third.valid, true);
}

void claim_appendix_c(Checker& ck, const SolverOptions& opt) {
  const ExclusionTask task{make_builtin_ensemble("eq-n2"), 2, false, Normalization::unnormalized};
  const StrongCheckResult sc = strong_exclusion_check(task, tol::kNullOutcome, opt);
  ck.near("x=2 value", sc.value, 1.0, tol::kPerfect);
  ck.is("strong", sc.strong, true);
  const Povm ref = reference_tilted_pair_povm();
  const FeasiblePointReport fp = verify_povm(task, ref, 5e-3);
  ck.is("recorded measurement feasible at 5e-3", fp.valid, true);
  const ExclusionReport rep = exclusion_value(task, opt);
  ck.near("recorded measurement value vs optimum", achieved_value(task, ref),
          rep.value_unnormalized, 5e-3);
}

using ClaimFn = void (*)(Checker&, const SolverOptions&);

struct Entry {
  Claim claim;
  ClaimFn run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {{"thm1", "Theorem 1",
        "basis measurement plus conditional triples gives a sufficient LOCC protocol; the "
        "condition is not necessary"},
       claim_thm1},
      {{"lemma1", "Lemma 1",
        "the counterexample set admits a strongly exhaustive LOCC protocol"},
       claim_lemma1},
      {{"thm2", "Theorem 2", "product-state LOCC exclusion does not depend on the starter"},
       claim_thm2},
      {{"thm3", "Theorem 3", "two-state exclusion of the four-state grid depends on the starter"},
       claim_thm3},
      {{"prop4-alice-first", "Proposition 4",
        "Alice-first strong pair exclusion succeeds for eps = 0.45"},
       claim_prop4_alice},
      {{"prop4-bob-first", "Proposition 4",
        "Bob-first strong pair exclusion fails; only {phi1, phi4} is unreachable"},
       claim_prop4_bob},
      {{"prop5", "Proposition 5", "eps <= 1/3 makes strong pair exclusion starter-independent"},
       claim_prop5},
      {{"thm5", "Theorem 5", "minimal globally-excludable triple that LOCC cannot exclude"},
       claim_thm5},
      {{"thm6", "Theorem 6", "pair exclusion of the theta-grid works iff cos2theta <= sqrt(2)-1"},
       claim_thm6},
      {{"thm7", "Theorem 7", "theta-grid at 2theta = pi/4: globally strong, locally impossible"},
       claim_thm7},
      {{"prop8", "Proposition 8",
        "tilted grid: strongly pair-excludable globally, strongly excludable via LOCC, but not "
        "strongly pair-excludable via LOCC"},
       claim_prop8},
      {{"thm9-genuine", "Theorem 9", "three-party example fails LOCC across every bipartition"},
       claim_thm9},
      {{"appendixA", "Appendix A", "four-state qubit set: solver value and recorded measurement"},
       claim_appendix_a},
      {{"appendixB", "Appendix B", "pair exclusion of the eps family at eps = 1/2 and 1/3"},
       claim_appendix_b},
      {{"appendixC", "Appendix C", "pair exclusion of the tilted grid with recorded measurement"},
       claim_appendix_c},
  };
  return table;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> out;
    for (const auto& e : entries()) out.push_back(e.claim);
    return out;
  }();
  return claims;
}

ClaimReport run_claim(const std::string& id, const SolverOptions& options) {
  for (const auto& e : entries()) {
    if (e.claim.id != id) continue;
    ClaimReport report;
    report.id = id;
    report.reference = e.claim.reference;
    report.pass = true;
    Checker ck{report};
    e.run(ck, options);
    return report;
  }
  std::string known;
  for (const auto& e : entries()) known += e.claim.id + " ";
  throw std::invalid_argument("unknown claim \"" + id + "\" (known: " + known + ")");
}

std::vector<ClaimReport> run_all_claims(const SolverOptions& options) {
  std::vector<ClaimReport> out;
  for (const auto& e : entries()) out.push_back(run_claim(e.claim.id, options));
  return out;
}

}  // namespace antidist
