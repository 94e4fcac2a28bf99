// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <string>
#include <vector>

#include "antidist/exclusion.hpp"
#include "antidist/states.hpp"

namespace antidist {

/// Builds one of the named ensembles. Accepted specs (parameters after ':'):
///   eq-x1                      {|0>|0>, |+>|1>, |v+>|+>, |v->|->}
///   eq-xanti[:eps=E]           C2 x C4 family, default eps = 0.5
///   eq-pbr[:theta=T|cos2theta=C]  {|+t>,|-t>}^x2 grid, default 2theta = pi/4
///   eq-n2                      {|0>|0>, |1>|1>, |+>|eta1>, |->|eta2>}
///   eq-pr                      {|000>, |0++>, |++0>}
///   eq-necessary               {|0>|+>, |+>|0>, (|01>+|10>)/sqrt(2)}
///   thm5[:d=D]                 d x d minimal-nonlocality triple
///   appendix-a                 single-party {|0>, |+>, |v+>, |v->}
///   xanti-bob[:eps=E]          single-party marginal of eq-xanti on side B
Ensemble make_builtin_ensemble(const std::string& spec);

std::vector<std::string> builtin_ensemble_names();

/// Reference optimal measurements recorded to four decimals; regression
/// fixtures for the bundled ensembles.
Povm reference_qubit_quad_povm();     // appendix-a set, x = 1
Povm reference_pair_povm_eps_half();  // xanti-bob eps = 1/2, x = 2
Povm reference_pair_povm_eps_third(); // xanti-bob eps = 1/3, x = 2
Povm reference_tilted_pair_povm();    // eq-n2 set, x = 2

}  // namespace antidist
