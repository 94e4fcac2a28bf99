// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

namespace antidist::tol {

// Shared tolerance ledger. Declared once, reused everywhere.
inline constexpr double kHermitian = 1e-12;       // max |A - A^dag| accepted as Hermitian
inline constexpr double kPsdFloor = -1e-9;        // default eigenvalue floor for PSD checks
inline constexpr double kReconstruction = 1e-10;  // eigendecomposition reconstruction, relative
inline constexpr double kGap = 1e-8;              // SDP duality-gap tolerance
inline constexpr double kConstraint = 1e-8;       // linear constraint residual on solutions
inline constexpr double kPerfect = 1e-6;          // "value == 1" classification margin
inline constexpr double kNullOutcome = 1e-6;      // POVM outcome trace below this is null
inline constexpr double kBranchPrune = 1e-9;      // zero-probability LOCC branch threshold
inline constexpr double kAnnihilation = 1e-9;     // exclusion claim <psi|M|psi> threshold
inline constexpr double kBoundary = 1e-9;         // three-state condition (b) boundary flag
inline constexpr double kNormAuto = 1e-6;         // auto-normalization window for state input
inline constexpr int kMaxIterations = 500;        // interior-point iteration cap

}  // namespace antidist::tol
