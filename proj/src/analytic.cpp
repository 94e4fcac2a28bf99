// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "antidist/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace antidist {

ThreeStateVerdict three_state_check(double x1, double x2, double x3, double tolerance) {
  auto clamp01 = [](double& x) {
    if (!(x >= -1e-9 && x <= 1.0 + 1e-9)) {
      std::ostringstream msg;
      msg << "three_state_check: squared overlap " << x << " outside [0, 1]";
      throw std::invalid_argument(msg.str());
    }
    x = std::min(1.0, std::max(0.0, x));
  };
  clamp01(x1);
  clamp01(x2);
  clamp01(x3);
  ThreeStateVerdict v;
  v.sum = x1 + x2 + x3;
  v.margin = (v.sum - 1.0) * (v.sum - 1.0) - 4.0 * x1 * x2 * x3;
  v.condition_a = v.sum < 1.0;
  v.condition_b = v.margin >= 0.0;
  v.boundary = std::abs(v.margin) <= tolerance;
  v.antidistinguishable = v.condition_a && v.condition_b;
  return v;
}

ThreeStateVerdict three_state_check(const Ensemble& e, double tolerance) {
  if (e.size() != 3) throw std::invalid_argument("three_state_check: ensemble must have three states");
  const GramData g = gram(e);
  return three_state_check(g.squared_overlaps(0, 1), g.squared_overlaps(0, 2), g.squared_overlaps(1, 2),
                           tolerance);
}

bool equal_overlap_triple(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw std::invalid_argument("equal_overlap_triple: eps outside [0, 1]");
  return eps <= 0.5;
}

std::optional<std::pair<int, int>> orthogonal_pair_exists(const Ensemble& e, double tolerance) {
  for (int i = 0; i < e.size(); ++i)
    for (int j = i + 1; j < e.size(); ++j)
      if (std::abs(overlap(e.states[i].flat, e.states[j].flat)) <= tolerance) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace antidist
