// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <string>
#include <vector>

#include "antidist/linalg.hpp"

namespace antidist {

enum class SdpStatus { optimal, max_iterations, infeasible };

std::string to_string(SdpStatus s);

struct SolverOptions {
  double gap_tolerance = tol::kGap;
  double feasibility_tolerance = 1e-9;
  int max_iterations = tol::kMaxIterations;
  double step_fraction = 0.98;
};

/// Block-structured semidefinite program over complex Hermitian PSD variables:
///
///   minimize    sum_b Tr(C_b X_b)
///   subject to  sum_b Tr(A_{c,b} X_b) = r_c   for each constraint c
///               X_b >= 0
///
/// All cost and constraint matrices must be Hermitian. Problems built from an
/// exclusion task carry the distinguished completeness family encoding
/// sum_b X_b = I, generated by add_completeness_family.
struct SdpProblem {
  struct Block {
    std::string label;
    int dim = 0;
  };
  struct Term {
    int block = 0;
    ComplexMatrix matrix;
  };
  struct Constraint {
    std::vector<Term> terms;
    double rhs = 0.0;
  };

  std::vector<Block> blocks;
  std::vector<ComplexMatrix> costs;  // one Hermitian matrix per block
  std::vector<Constraint> constraints;

  // Metadata for the completeness family, when present: indices of the
  // constraints that encode sum_b M_b = I on completeness_dim. Used to
  // reconstruct the dual operator Y and to pick the canonical interior start
  // X_b = I / (#participating blocks).
  int completeness_dim = 0;
  std::vector<int> completeness_constraints;
  std::vector<int> completeness_blocks;

  int add_block(const std::string& label, int dim, const ComplexMatrix& cost);

  /// Appends the dim^2 real constraints of sum_b P_b X_b P_b^dag = I over the
  /// given blocks. map_b defaults to the identity; a non-trivial isometry P_b
  /// (dim x dim_b, orthonormal columns) embeds a reduced block into the common
  /// space.
  void add_completeness_family(int dim, const std::vector<int>& participating,
                               const std::vector<ComplexMatrix>& maps = {});
};

struct SdpSolution {
  SdpStatus status = SdpStatus::max_iterations;
  std::vector<ComplexMatrix> primal;  // X_b
  std::vector<ComplexMatrix> dual_slacks;  // S_b = C_b - sum_c y_c A_{c,b}
  std::vector<double> dual;           // y_c per constraint
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;                // |primal - dual| at exit
  double complementarity = 0.0;    // sum_b <X_b, S_b>
  double primal_residual = 0.0;    // max constraint violation
  double dual_residual = 0.0;      // max dual slack mismatch
  int iterations = 0;

  /// Dual operator Y = sum_c y_c B_c over the completeness family (zero matrix
  /// if the problem has no completeness family).
  ComplexMatrix completeness_dual(const SdpProblem& p) const;
};

/// Interior-point solve. Deterministic for identical input. Throws
/// std::invalid_argument on malformed problems (non-Hermitian data,
/// structurally inconsistent equalities).
SdpSolution solve(const SdpProblem& p, const SolverOptions& options = {});
SdpSolution solve(const SdpProblem& p, double gap_tolerance);

/// Independent certificate checks on a solution: dual slack PSD-ness, weak
/// duality, complementarity, and (via completeness_dual) the exclusion-dual
/// condition Y <= C_b for every block.
struct CertificateReport {
  bool certified = false;
  double dual_min_eigenvalue = 0.0;   // min over blocks of min eig (C_b - sum y A)
  double weak_duality_slack = 0.0;    // primal - dual (>= -tol when certified)
  double complementarity = 0.0;
  double primal_residual = 0.0;
  std::vector<double> block_min_eigenvalues;
  std::string failure;
};

CertificateReport dual_certificate(const SdpProblem& p, const SdpSolution& s,
                                   double tolerance = 1e-7);

/// Feasibility report for an externally supplied candidate point.
struct FeasiblePointReport {
  bool valid = false;
  double objective = 0.0;
  double min_eigenvalue = 0.0;      // min over blocks
  double constraint_residual = 0.0; // max |<A_c, X> - r_c|
  std::vector<double> block_min_eigenvalues;
};

FeasiblePointReport verify_feasible_point(const SdpProblem& p, const std::vector<ComplexMatrix>& candidate,
                                          double tolerance);

}  // namespace antidist
