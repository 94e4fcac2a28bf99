// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "antidist/sdp.hpp"
#include "antidist/states.hpp"

namespace antidist {

enum class Normalization { normalized, unnormalized };

/// An x-state exclusion task on an ensemble. The normalized convention weighs
/// state k by its prior; the unnormalized convention weighs every state by 1.
struct ExclusionTask {
  Ensemble ensemble;
  int x = 1;
  bool strong = false;
  Normalization normalization = Normalization::normalized;
};

/// All size-x subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> x_subsets(int n, int x);

/// 1-based compact label for an outcome subset, e.g. {0,1} -> "12".
std::string subset_label(const std::vector<int>& subset);

/// Outcome-labeled POVM. Outcome S claims exclusion of every state in S.
struct Povm {
  std::vector<std::vector<int>> subsets;  // lexicographic, 0-based indices
  std::vector<ComplexMatrix> operators;

  int dim() const { return operators.empty() ? 0 : operators.front().rows(); }
  ComplexMatrix completeness_defect() const;  // sum - I
  double min_eigenvalue() const;
  std::vector<double> traces() const;
};

// Both report values are evaluated at the measurement that is optimal for the
// task's own normalization; under uniform priors the two conventions share
// their optimizer, so both numbers are optimal values.
struct ExclusionReport {
  SdpStatus status = SdpStatus::max_iterations;
  double value = 0.0;                // 1 - sum_k prior_k sum_{S: k in S} Tr(rho_k M_S)
  double value_unnormalized = 0.0;   // unit weights
  bool perfect = false;              // value >= 1 - tol::kPerfect
  Povm povm;
  std::vector<double> state_errors;  // per state: sum_{S: k in S} Tr(rho_k M_S)
  std::vector<double> outcome_traces;
  CertificateReport certificate;
  int iterations = 0;
};

struct StrongCheckResult {
  bool strong = false;
  bool perfect = false;        // prerequisite exclusion value reached 1
  double min_trace = 0.0;      // optimum of the max-min-trace program
  double value = 0.0;          // exclusion value of the prerequisite solve
  Povm witness;                // valid when strong
  SdpStatus status = SdpStatus::max_iterations;
  std::string detail;
};

/// One PSD block per x-subset; the cost of block S is sum_{k in S} w_k rho_k;
/// completeness over all blocks.
SdpProblem build_exclusion_sdp(const ExclusionTask& t);

/// Solver-certified exclusion value with the optimal POVM and dual certificate.
ExclusionReport exclusion_value(const ExclusionTask& t, const SolverOptions& options = {});

/// Decides strong (x-)antidistinguishability: requires a perfect value, then
/// maximizes the minimum outcome trace over perfect-exclusion POVMs. The
/// perfect-exclusion equalities Tr(rho_k M_S) = 0 are eliminated exactly by
/// restricting each block to the orthogonal complement of its excluded states,
/// so the secondary program is
///   max t  s.t.  sum_S P_S Y_S P_S^dag = I, Y_S >= 0, Tr(Y_S) >= t.
StrongCheckResult strong_exclusion_check(const ExclusionTask& t, double delta = tol::kNullOutcome,
                                         const SolverOptions& options = {});

/// Three bipartite product states built from a unit vector (1/2, r) and
/// orthonormal directions zeta_i orthogonal to |0>; their squared Gram data is
/// (1/4, 1/16, 1/4) independent of the parameters.
Ensemble theorem5_family(int d, const std::vector<double>& r, const std::vector<PureState>& zeta);

/// Separation certificate for zero-error exclusion feasibility:
///   gamma = max Tr(Z)  s.t.  Pi_S Z Pi_S <= 0 for every x-subset S,
///                            -I <= Z <= I,
/// with Pi_S the projector onto the orthogonal complement of the states in S.
/// Any gamma > 0 witnesses that no zero-error x-exclusion measurement exists;
/// gamma vanishes on the feasible side and grows linearly in the distance
/// from the feasibility boundary, so it separates the two classes far more
/// sharply than the exclusion value (whose deficit is quadratic near the
/// boundary).
struct InfeasibilityCertificate {
  double gamma = 0.0;
  SdpStatus status = SdpStatus::max_iterations;
  bool infeasible(double threshold = 3e-8) const { return gamma > threshold; }
};

InfeasibilityCertificate exact_exclusion_infeasibility(const Ensemble& e, int x,
                                                       const SolverOptions& options = {});

/// Feasibility report of a candidate POVM for a task (wraps
/// verify_feasible_point on the task's SDP).
FeasiblePointReport verify_povm(const ExclusionTask& t, const Povm& candidate, double tolerance);

/// Value achieved by a POVM under the task's convention: 1 - weighted error.
double achieved_value(const ExclusionTask& t, const Povm& candidate);

}  // namespace antidist
