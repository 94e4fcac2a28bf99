// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "antidist/locc.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace antidist {

ProtocolNode ProtocolNode::leaf(std::vector<int> claims) {
  ProtocolNode n;
  std::sort(claims.begin(), claims.end());
  n.exclude = std::move(claims);
  return n;
}

ProtocolNode ProtocolNode::measure(int party, std::vector<ComplexMatrix> povm,
                                   std::vector<ProtocolNode> children) {
  ProtocolNode n;
  n.party = party;
  n.povm = std::move(povm);
  n.children = std::move(children);
  return n;
}

namespace {

double local_probability(const PureState& s, const ComplexMatrix& op) {
  return std::real(inner(s.projector(), op));
}

// Tensor product of the per-party branch operators, identity on unvisited parties.
ComplexMatrix branch_operator(const Ensemble& e, const std::vector<const ComplexMatrix*>& ops) {
  ComplexMatrix out = ops[0] ? *ops[0] : ComplexMatrix::identity(e.dims[0]);
  for (int p = 1; p < e.parties(); ++p)
    out = kron(out, ops[p] ? *ops[p] : ComplexMatrix::identity(e.dims[p]));
  return out;
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& claims, int x) {
  if (static_cast<int>(claims.size()) < x) return {};
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (static_cast<int>(cur.size()) == x) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < claims.size(); ++i) {
      cur.push_back(claims[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

struct Walker {
  const Ensemble& e;
  int x;
  ProtocolReport& report;
  std::set<std::vector<int>> covered;

  void visit(const ProtocolNode& node, std::vector<const ComplexMatrix*>& ops,
             std::vector<bool>& visited, const std::string& path) {
    if (node.is_leaf()) {
      const ComplexMatrix op = branch_operator(e, ops);
      std::vector<double> probs(e.size());
      double pmax = 0.0;
      for (int k = 0; k < e.size(); ++k) {
        probs[k] = std::real(inner(e.states[k].flat.projector(), op));
        pmax = std::max(pmax, probs[k]);
      }
      if (pmax <= tol::kBranchPrune) {
        ++report.pruned_branches;
        return;
      }
      ++report.leaves;
      bool valid = true;
      std::vector<int> claims = node.exclude;
      std::sort(claims.begin(), claims.end());
      if (std::adjacent_find(claims.begin(), claims.end()) != claims.end()) {
        report.failures.push_back("branch [" + path + "]: duplicate claim");
        valid = false;
      }
      for (int k : claims) {
        if (k < 0 || k >= e.size()) {
          report.failures.push_back("branch [" + path + "]: claim index out of range");
          valid = false;
          continue;
        }
        if (probs[k] > tol::kAnnihilation) {
          std::ostringstream msg;
          msg << "branch [" << path << "]: claims state " << k + 1
              << " but its branch probability is " << probs[k];
          report.failures.push_back(msg.str());
          valid = false;
        }
      }
      if (valid && static_cast<int>(claims.size()) < x) {
        std::ostringstream msg;
        msg << "branch [" << path << "]: only " << claims.size() << " exclusions, need " << x;
        report.failures.push_back(msg.str());
        valid = false;
      }
      if (valid)
        for (auto& s : subsets_of(claims, x)) covered.insert(std::move(s));
      return;
    }

    if (node.party < 0 || node.party >= e.parties()) {
      report.failures.push_back("branch [" + path + "]: party index out of range");
      return;
    }
    if (visited[node.party]) {
      report.failures.push_back("branch [" + path + "]: party measures twice on one branch");
      return;
    }
    if (node.povm.empty() || node.children.size() != node.povm.size()) {
      report.failures.push_back("branch [" + path + "]: outcome/child count mismatch");
      return;
    }
    ComplexMatrix sum(e.dims[node.party], e.dims[node.party]);
    for (const auto& op : node.povm) {
      if (op.rows() != e.dims[node.party] || op.cols() != e.dims[node.party]) {
        report.failures.push_back("branch [" + path + "]: POVM element shape mismatch");
        return;
      }
      if (!op.is_hermitian(1e-9) || !is_psd(hermitize(op), -1e-7).psd) {
        report.failures.push_back("branch [" + path + "]: POVM element not PSD Hermitian");
        return;
      }
      sum += op;
    }
    if ((sum - ComplexMatrix::identity(e.dims[node.party])).max_abs() > tol::kConstraint) {
      report.failures.push_back("branch [" + path + "]: POVM does not sum to identity");
      return;
    }

    visited[node.party] = true;
    for (size_t o = 0; o < node.povm.size(); ++o) {
      ops[node.party] = &node.povm[o];
      std::string child_path = path.empty() ? "" : path + " ";
      child_path += "P" + std::to_string(node.party + 1) + ":" + std::to_string(o + 1);
      visit(node.children[o], ops, visited, child_path);
    }
    ops[node.party] = nullptr;
    visited[node.party] = false;
  }
};

}  // namespace

ProtocolReport verify_protocol(const ProtocolNode& root, const Ensemble& e, int x, bool strong) {
  if (x < 1 || x >= e.size()) throw std::invalid_argument("verify_protocol: x out of range");
  ProtocolReport report;
  Walker walker{e, x, report, {}};
  std::vector<const ComplexMatrix*> ops(e.parties(), nullptr);
  std::vector<bool> visited(e.parties(), false);
  walker.visit(root, ops, visited, "");

  report.covered_subsets.assign(walker.covered.begin(), walker.covered.end());
  for (auto& s : x_subsets(e.size(), x))
    if (!walker.covered.count(s)) report.missing_subsets.push_back(s);
  report.success = report.failures.empty() && report.leaves > 0;
  report.strong_success = report.success && report.missing_subsets.empty();
  if (strong && !report.strong_success && report.success) {
    std::ostringstream msg;
    msg << report.missing_subsets.size() << " x-subset(s) never excluded";
    report.failures.push_back(msg.str());
  }
  return report;
}

LoccDecision product_locc_antidist_decision(const Ensemble& e, const SolverOptions& options) {
  if (!e.all_product())
    throw std::invalid_argument(
        "product_locc_antidist_decision: the marginal criterion applies to product ensembles only");
  LoccDecision d;
  for (int party = 0; party < e.parties(); ++party) {
    ExclusionTask task{marginal_set(e, party), 1, false, Normalization::normalized};
    const ExclusionReport rep = exclusion_value(task, options);
    d.marginal_values.push_back(rep.value);
    if (rep.perfect && d.witness_party < 0) {
      d.antidistinguishable = true;
      d.witness_party = party;
    }
  }
  return d;
}

ExclusionPovmFamily exclusion_povm_family(const Ensemble& single_party) {
  if (single_party.parties() != 1)
    throw std::invalid_argument("exclusion_povm_family: expects a single-party ensemble");
  ExclusionPovmFamily fam;
  const int d = single_party.global_dim();

  for (int k = 0; k < single_party.size(); ++k) {
    const PureState& s = single_party.states[k].flat;
    bool grouped = false;
    for (size_t g = 0; g < fam.distinct_states.size(); ++g) {
      if (std::abs(overlap(fam.distinct_states[g], s)) >= 1.0 - 1e-9) {
        fam.groups[g].push_back(k);
        grouped = true;
        break;
      }
    }
    if (!grouped) {
      fam.distinct_states.push_back(s);
      fam.groups.push_back({k});
    }
  }

  ComplexMatrix sum(d, d);
  std::vector<ComplexMatrix> perps;
  for (const auto& s : fam.distinct_states) {
    ComplexMatrix perp = ComplexMatrix::identity(d) - s.projector();
    sum += perp;
    perps.push_back(std::move(perp));
  }
  const auto eig = eig_hermitian(sum);
  const double lmax = eig.eigenvalues.back();
  fam.coefficient = lmax > 0.0 ? 1.0 / lmax : 0.0;
  for (auto& perp : perps) fam.operators.push_back(fam.coefficient * perp);
  ComplexMatrix rem = ComplexMatrix::identity(d);
  for (const auto& op : fam.operators) rem -= op;
  fam.has_remainder = rem.max_abs() > 1e-9;
  fam.remainder = hermitize(rem);
  return fam;
}

namespace {

struct PerfectLocalPovm {
  bool ok = false;
  double value = 0.0;
  double min_trace = 0.0;
  Povm povm;
  std::string note;
};

// Perfect local exclusion measurement with exact per-outcome annihilation,
// obtained from the face-reduced max-min-trace program. Outcomes with the
// largest attainable traces maximize downstream subset coverage.
PerfectLocalPovm perfect_local_povm(const Ensemble& e, int x, const SolverOptions& options) {
  PerfectLocalPovm out;
  ExclusionTask task{e, x, false, Normalization::normalized};
  const StrongCheckResult chk = strong_exclusion_check(task, tol::kNullOutcome, options);
  out.value = chk.value;
  out.min_trace = chk.min_trace;
  if (!chk.perfect) {
    out.note = "conditional set is not perfectly excludable";
    return out;
  }
  if (chk.witness.operators.empty()) {
    out.note = "no witness measurement certified: " + chk.detail;
    return out;
  }
  const Povm& w = chk.witness;
  ComplexMatrix defect = w.completeness_defect();
  if (defect.max_abs() > tol::kConstraint || w.min_eigenvalue() < tol::kPsdFloor) {
    out.note = "witness measurement failed validity checks";
    return out;
  }
  out.povm = w;
  out.ok = true;
  return out;
}

struct CandidateEval {
  bool all_ok = false;
  std::vector<BranchReport> branches;
  std::set<std::vector<int>> covered;
  std::vector<ProtocolNode> children;
  std::vector<ComplexMatrix> kept_ops;
  int ok_branches = 0;
};

std::string index_list(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i] + 1);
  }
  return s + "}";
}

}  // namespace

SearchResult two_step_search(const Ensemble& e, int starter, int x, bool strong,
                             const SolverOptions& options) {
  if (e.parties() != 2) throw std::invalid_argument("two_step_search: bipartite ensembles only");
  if (!e.all_product()) throw std::invalid_argument("two_step_search: product ensembles only");
  if (starter != 0 && starter != 1) throw std::invalid_argument("two_step_search: starter must be 0 or 1");
  if (x < 1 || x > 2) throw std::invalid_argument("two_step_search: x must be 1 or 2");

  const int responder = 1 - starter;
  const Ensemble marg_start = marginal_set(e, starter);
  const auto all_subsets = x_subsets(e.size(), x);

  struct Candidate {
    std::string name;
    std::vector<ComplexMatrix> ops;
  };
  std::vector<Candidate> candidates;

  double starter_x1_value = 0.0;
  if (x >= 2) {
    const PerfectLocalPovm p2 = perfect_local_povm(marg_start, x, options);
    if (p2.ok) candidates.push_back({"starter x-subset exclusion measurement", p2.povm.operators});
  }
  {
    const PerfectLocalPovm p1 = perfect_local_povm(marg_start, 1, options);
    starter_x1_value = p1.value;
    if (p1.ok) candidates.push_back({"starter single-exclusion measurement", p1.povm.operators});
  }
  {
    const ExclusionPovmFamily fam = exclusion_povm_family(marg_start);
    std::vector<ComplexMatrix> ops = fam.operators;
    if (fam.has_remainder) ops.push_back(fam.remainder);
    candidates.push_back({"starter perp-projector family", std::move(ops)});
  }

  auto evaluate = [&](const Candidate& cand) {
    CandidateEval ev;
    ev.all_ok = true;
    for (size_t oi = 0; oi < cand.ops.size(); ++oi) {
      const ComplexMatrix& op = cand.ops[oi];
      if (op.max_abs() <= 1e-12) continue;  // null outcome
      ev.kept_ops.push_back(op);

      BranchReport br;
      br.description = "starter outcome " + std::to_string(ev.kept_ops.size());
      double pmax = 0.0;
      std::vector<double> probs(e.size());
      for (int k = 0; k < e.size(); ++k) {
        probs[k] = local_probability(e.states[k].parts[starter], op);
        pmax = std::max(pmax, probs[k]);
      }
      if (pmax <= tol::kBranchPrune) {
        br.pruned = true;
        br.ok = true;
        ev.branches.push_back(std::move(br));
        ev.children.push_back(ProtocolNode::leaf({}));
        continue;
      }
      std::vector<int> claims, surviving;
      for (int k = 0; k < e.size(); ++k)
        (probs[k] <= tol::kAnnihilation ? claims : surviving).push_back(k);
      br.starter_claims = claims;
      br.surviving = surviving;

      if (static_cast<int>(claims.size()) >= x) {
        br.ok = true;
        ++ev.ok_branches;
        for (auto& s : subsets_of(claims, x)) ev.covered.insert(std::move(s));
        ev.children.push_back(ProtocolNode::leaf(claims));
        ev.branches.push_back(std::move(br));
        continue;
      }

      const int need = x - static_cast<int>(claims.size());
      if (static_cast<int>(surviving.size()) < need + 1) {
        br.ok = false;
        br.note = "responder cannot exclude " + std::to_string(need) + " of " +
                  std::to_string(surviving.size()) + " surviving states";
        ev.all_ok = false;
        ev.children.push_back(ProtocolNode::leaf(claims));
        ev.branches.push_back(std::move(br));
        continue;
      }

      std::vector<EnsembleState> cond_states;
      for (int k : surviving) cond_states.push_back(EnsembleState::product({e.states[k].parts[responder]}));
      const Ensemble cond = Ensemble::make({e.dims[responder]}, std::move(cond_states));
      const PerfectLocalPovm resp = perfect_local_povm(cond, need, options);
      br.responder_ran = true;
      br.responder_value = resp.value;
      if (!resp.ok) {
        br.ok = false;
        br.note = "conditional set " + index_list(surviving) + " blocks: " + resp.note;
        ev.all_ok = false;
        ev.children.push_back(ProtocolNode::leaf(claims));
        ev.branches.push_back(std::move(br));
        continue;
      }

      std::vector<ComplexMatrix> resp_ops;
      std::vector<ProtocolNode> resp_children;
      for (size_t ri = 0; ri < resp.povm.operators.size(); ++ri) {
        const ComplexMatrix& rop = resp.povm.operators[ri];
        if (rop.max_abs() <= 1e-12) continue;
        resp_ops.push_back(rop);
        std::vector<int> leaf_claims = claims;
        for (size_t ci = 0; ci < surviving.size(); ++ci)
          if (local_probability(cond.states[ci].flat, rop) <= tol::kAnnihilation)
            leaf_claims.push_back(surviving[ci]);
        std::sort(leaf_claims.begin(), leaf_claims.end());
        double rmax = 0.0;
        for (size_t ci = 0; ci < surviving.size(); ++ci)
          rmax = std::max(rmax, local_probability(cond.states[ci].flat, rop));
        if (rmax > tol::kBranchPrune)
          for (auto& s : subsets_of(leaf_claims, x)) ev.covered.insert(std::move(s));
        resp_children.push_back(ProtocolNode::leaf(leaf_claims));
      }
      br.ok = true;
      ++ev.ok_branches;
      ev.children.push_back(ProtocolNode::measure(responder, std::move(resp_ops), std::move(resp_children)));
      ev.branches.push_back(std::move(br));
    }
    return ev;
  };

  SearchResult result;
  std::optional<CandidateEval> best;
  std::string best_name;
  auto better = [](const CandidateEval& a, const CandidateEval& b) {
    if (a.all_ok != b.all_ok) return a.all_ok;
    if (a.covered.size() != b.covered.size()) return a.covered.size() > b.covered.size();
    return a.ok_branches > b.ok_branches;
  };

  for (const Candidate& cand : candidates) {
    CandidateEval ev = evaluate(cand);
    const bool covered_all = ev.covered.size() == all_subsets.size();
    if (ev.all_ok && (!strong || covered_all)) {
      result.success = true;
      result.strong_success = covered_all;
      result.candidate = cand.name;
      result.branches = ev.branches;
      result.covered_subsets.assign(ev.covered.begin(), ev.covered.end());
      for (const auto& s : all_subsets)
        if (!ev.covered.count(s)) result.unreachable_subsets.push_back(s);
      result.protocol = ProtocolNode::measure(starter, ev.kept_ops, ev.children);
      result.verification = verify_protocol(result.protocol, e, x, strong);
      if (!result.verification.success) {
        result.success = false;
        result.strong_success = false;
        result.detail = "constructed protocol failed verification";
      }
      return result;
    }
    if (!best || better(ev, *best)) {
      best = std::move(ev);
      best_name = cand.name;
    }
  }

  result.success = false;
  if (best) {
    result.candidate = best_name;
    result.branches = best->branches;
    result.covered_subsets.assign(best->covered.begin(), best->covered.end());
    for (const auto& s : all_subsets)
      if (!best->covered.count(s)) result.unreachable_subsets.push_back(s);
  } else {
    result.unreachable_subsets = all_subsets;
  }

  if (x == 1) {
    ExclusionTask resp_task{marginal_set(e, responder), 1, false, Normalization::normalized};
    const double resp_value = exclusion_value(resp_task, options).value;
    if (starter_x1_value < 1.0 - tol::kPerfect && resp_value < 1.0 - tol::kPerfect) {
      result.certified_impossible = true;
      result.detail = "no party holds an antidistinguishable marginal set; LOCC exclusion impossible";
      return result;
    }
  }
  result.detail = strong ? "no strong protocol in the structured family"
                         : "no protocol in the structured family";
  return result;
}

BipartitionScan bipartition_scan(const Ensemble& e, const SolverOptions& options) {
  if (e.parties() < 3) throw std::invalid_argument("bipartition_scan: need at least three parties");
  if (!e.all_product()) throw std::invalid_argument("bipartition_scan: product ensembles only");

  BipartitionScan scan;
  ExclusionTask global{e, 1, false, Normalization::normalized};
  const ExclusionReport grep = exclusion_value(global, options);
  scan.global_value = grep.value;
  scan.global_perfect = grep.perfect;

  const int m = e.parties();
  // Every proper bipartition once: blocks containing party 0.
  std::vector<std::vector<int>> blocks;
  for (int mask = 1; mask < (1 << m) - 1; ++mask) {
    if (!(mask & 1)) continue;
    std::vector<int> block;
    for (int p = 0; p < m; ++p)
      if (mask & (1 << p)) block.push_back(p);
    blocks.push_back(std::move(block));
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  bool any_locc = false;
  for (const auto& block : blocks) {
    const Ensemble grouped = group_by_bipartition(e, block);
    BipartitionReport rep;
    rep.block = block;
    const LoccDecision dec = product_locc_antidist_decision(grouped, options);
    rep.locc_antidistinguishable = dec.antidistinguishable;
    rep.side_values = dec.marginal_values;
    if (e.size() == 3) {
      rep.block_side_check = three_state_check(marginal_set(grouped, 0));
      rep.complement_side_check = three_state_check(marginal_set(grouped, 1));
    }
    any_locc = any_locc || dec.antidistinguishable;
    scan.bipartitions.push_back(std::move(rep));
  }
  scan.genuine = scan.global_perfect && !any_locc;
  return scan;
}

}  // namespace antidist
