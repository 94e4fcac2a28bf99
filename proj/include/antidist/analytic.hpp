// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <optional>
#include <utility>

#include "antidist/states.hpp"

namespace antidist {

/// Outcome of the closed-form three-state exclusion test on squared overlaps.
/// The test decides perfect exclusion for pairwise non-orthogonal pure triples:
///   (a) x1 + x2 + x3 < 1            (strict)
///   (b) (x1 + x2 + x3 - 1)^2 >= 4 x1 x2 x3
struct ThreeStateVerdict {
  bool condition_a = false;
  bool condition_b = false;
  bool antidistinguishable = false;  // condition_a && condition_b
  bool boundary = false;             // |(sum-1)^2 - 4 x1 x2 x3| <= tolerance
  double sum = 0.0;                  // x1 + x2 + x3
  double margin = 0.0;               // (sum-1)^2 - 4 x1 x2 x3
};

/// Condition (a) is strict with no tolerance; the boundary flag applies to (b) only.
ThreeStateVerdict three_state_check(double x1, double x2, double x3, double tolerance = tol::kBoundary);

/// Same test fed from an ensemble's Gram data (must have exactly three states).
ThreeStateVerdict three_state_check(const Ensemble& e, double tolerance = tol::kBoundary);

/// Exclusion feasibility for the equal-overlap triple |<i|j>| = eps: true iff
/// eps <= 1/2. Agrees with three_state_check(eps^2, eps^2, eps^2) on [0, 1/sqrt(3)).
bool equal_overlap_triple(double eps);

/// First index pair (lexicographic, 0-based) with |<psi_i|psi_j>| <= tolerance.
/// Presence implies the ensemble is antidistinguishable: the orthogonal pair is
/// distinguishable, and a distinguishable subset suffices.
std::optional<std::pair<int, int>> orthogonal_pair_exists(const Ensemble& e, double tolerance = 1e-10);

}  // namespace antidist
