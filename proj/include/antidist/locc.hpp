// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antidist/analytic.hpp"
#include "antidist/exclusion.hpp"

namespace antidist {

/// One-way LOCC protocol tree. A measurement node names the measuring party
/// and carries one child per POVM outcome; a leaf claims the set of global
/// state indices excluded on its branch. Each party measures at most once per
/// branch, in the order the nodes appear.
struct ProtocolNode {
  int party = -1;  // -1 marks a leaf
  std::vector<ComplexMatrix> povm;
  std::vector<ProtocolNode> children;
  std::vector<int> exclude;  // leaf claims, 0-based state indices

  bool is_leaf() const { return party < 0; }

  static ProtocolNode leaf(std::vector<int> claims);
  static ProtocolNode measure(int party, std::vector<ComplexMatrix> povm,
                              std::vector<ProtocolNode> children);
};

struct ProtocolReport {
  bool success = false;         // every unpruned leaf claims >= x valid exclusions
  bool strong_success = false;  // additionally the leaves cover every x-subset
  int leaves = 0;
  int pruned_branches = 0;
  std::vector<std::string> failures;
  std::vector<std::vector<int>> covered_subsets;
  std::vector<std::vector<int>> missing_subsets;
};

/// Validates claims by branch probabilities: an excluded state must have
/// conditional probability <= 1e-9 for the visited outcome sequence. Works for
/// entangled ensemble members as well; for product states the probability
/// factorizes into the per-party form.
ProtocolReport verify_protocol(const ProtocolNode& root, const Ensemble& e, int x, bool strong);

/// Starter-independent LOCC antidistinguishability (x = 1) for product
/// ensembles: true iff some party's marginal set is antidistinguishable.
struct LoccDecision {
  bool antidistinguishable = false;
  int witness_party = -1;
  std::vector<double> marginal_values;
};

LoccDecision product_locc_antidist_decision(const Ensemble& e, const SolverOptions& options = {});

/// The structured local measurement family: one operator f_i (I - |chi_i><chi_i|)
/// per distinct marginal state (rank-one |chi^perp><chi^perp| on qubits) plus
/// the PSD remainder. Uniform f = 1 / lambda_max keeps the remainder PSD and
/// on the boundary.
struct ExclusionPovmFamily {
  std::vector<PureState> distinct_states;
  std::vector<std::vector<int>> groups;  // ensemble indices per distinct state
  double coefficient = 0.0;
  std::vector<ComplexMatrix> operators;  // one per distinct state
  ComplexMatrix remainder;
  bool has_remainder = false;
};

ExclusionPovmFamily exclusion_povm_family(const Ensemble& single_party);

struct BranchReport {
  std::string description;
  std::vector<int> starter_claims;
  std::vector<int> surviving;
  bool pruned = false;
  bool ok = false;
  bool responder_ran = false;
  double responder_value = 0.0;  // conditional exclusion value when run
  std::string note;
};

struct SearchResult {
  bool success = false;
  bool strong_success = false;
  bool certified_impossible = false;  // x = 1 only: both marginal sets imperfect
  std::string candidate;              // starter measurement family that was used
  ProtocolNode protocol;              // valid when success
  ProtocolReport verification;        // verify_protocol output for the returned tree
  std::vector<BranchReport> branches;
  std::vector<std::vector<int>> covered_subsets;
  std::vector<std::vector<int>> unreachable_subsets;
  std::string detail;
};

/// Search over the paper's one-way two-round structured family: the starter
/// plays a perfect local exclusion POVM (x-subset, single-state, or the
/// ExclusionPovmFamily), the responder finishes each surviving branch with a
/// conditional exclusion measurement. A failure means no protocol exists in
/// this family; for x = 1 on product states failure is a certified LOCC
/// impossibility (the marginal criterion is exact there).
SearchResult two_step_search(const Ensemble& e, int starter, int x, bool strong,
                             const SolverOptions& options = {});

struct BipartitionReport {
  std::vector<int> block;  // parties on the first side
  bool locc_antidistinguishable = false;
  std::vector<double> side_values;  // marginal exclusion value per side
  std::optional<ThreeStateVerdict> block_side_check;       // three-state ensembles only
  std::optional<ThreeStateVerdict> complement_side_check;  // three-state ensembles only
};

struct BipartitionScan {
  double global_value = 0.0;
  bool global_perfect = false;
  std::vector<BipartitionReport> bipartitions;
  bool genuine = false;  // globally perfect while every bipartition fails
};

/// Runs the product LOCC decision across every proper bipartition of a
/// multipartite product ensemble, plus the global exclusion value.
BipartitionScan bipartition_scan(const Ensemble& e, const SolverOptions& options = {});

}  // namespace antidist
