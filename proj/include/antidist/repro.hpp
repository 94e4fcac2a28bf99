// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <string>
#include <vector>

#include "antidist/sdp.hpp"

namespace antidist {

/// One registered reproduction claim: a named statement about a bundled
/// ensemble with a runnable check.
struct Claim {
  std::string id;
  std::string reference;  // statement the claim reproduces, e.g. "Theorem 3"
  std::string description;
};

struct ClaimCheck {
  std::string what;
  std::string measured;
  std::string expected;
  bool pass = false;
};

struct ClaimReport {
  std::string id;
  std::string reference;
  bool pass = false;
  std::vector<ClaimCheck> checks;
};

const std::vector<Claim>& claim_registry();

/// Runs one claim by id; throws std::invalid_argument for unknown ids.
ClaimReport run_claim(const std::string& id, const SolverOptions& options = {});

/// Runs every registered claim in registry order.
std::vector<ClaimReport> run_all_claims(const SolverOptions& options = {});

}  // namespace antidist
