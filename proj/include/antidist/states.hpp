// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antidist/linalg.hpp"

namespace antidist {

/// Normalized complex amplitude vector. Constructor inputs within 1e-6 of unit
/// norm are renormalized; anything further off is rejected.
struct PureState {
  std::vector<cplx> amplitudes;

  PureState() = default;
  explicit PureState(std::vector<cplx> amps);
  PureState(std::initializer_list<cplx> amps) : PureState(std::vector<cplx>(amps)) {}

  int dim() const { return static_cast<int>(amplitudes.size()); }
  ComplexMatrix projector() const { return ComplexMatrix::outer(amplitudes); }
};

/// <a|b>, conjugation on the first argument.
cplx overlap(const PureState& a, const PureState& b);

/// One member of an ensemble: either a product state over the declared parties
/// (parts non-empty) or a flat vector on the global space. The flat form is
/// always materialized.
struct EnsembleState {
  std::vector<PureState> parts;
  PureState flat;

  bool is_product() const { return !parts.empty(); }
  static EnsembleState product(std::vector<PureState> parts);
  static EnsembleState from_flat(PureState global);
};

/// Ordered list of states with prior weights (default uniform 1/n) on a fixed
/// party structure.
struct Ensemble {
  std::vector<int> dims;  // party dimensions, party 0 most significant in the flat index
  std::vector<EnsembleState> states;
  std::vector<double> priors;
  std::vector<std::string> labels;  // optional, same length as states when present

  int parties() const { return static_cast<int>(dims.size()); }
  int size() const { return static_cast<int>(states.size()); }
  int global_dim() const;
  bool all_product() const;
  bool uniform_priors(double tolerance = 1e-12) const;

  /// Validates invariants: n >= 2, dimensions consistent, priors nonnegative
  /// summing to 1 within 1e-12, product parts matching the party structure.
  static Ensemble make(std::vector<int> dims, std::vector<EnsembleState> states,
                       std::vector<double> priors = {}, std::vector<std::string> labels = {});
};

struct GramData {
  ComplexMatrix overlaps;       // <psi_i|psi_j>
  RealMatrix squared_overlaps;  // x_ij = |<psi_i|psi_j>|^2
};

/// Full pairwise overlap matrix of the (flattened) ensemble states.
GramData gram(const Ensemble& e);

/// Named state registry covering the built-in families. Parameters:
///   "0","1","2","3"           computational basis (optional param: dimension)
///   "+","-"                   Hadamard basis
///   "v+","v-"                 (1/2, +-sqrt(3)/2)
///   "plus_theta","minus_theta" param theta in (0, pi/2)
///   "eta1","eta2"             fixed tilted qubit states
///   "phi1_bob".."phi4_bob"    param eps in (0,1), dimension-4 family with all
///                             pairwise overlaps equal to eps
PureState make_named_state(const std::string& name, const std::vector<double>& params = {});

/// Ordered list of one party's local states (duplicates and order preserved).
Ensemble marginal_set(const Ensemble& e, int party);

/// Refactors an m-party product ensemble (m >= 3) as a bipartite product
/// ensemble: (kron of block parts) x (kron of complement parts).
Ensemble group_by_bipartition(const Ensemble& e, const std::vector<int>& block);

}  // namespace antidist
