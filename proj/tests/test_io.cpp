// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include <doctest.h>

#include <set>

#include "antidist/builtins.hpp"
#include "antidist/io.hpp"
#include "antidist/repro.hpp"

using namespace antidist;
using nlohmann::json;

TEST_SUITE_BEGIN("io");

TEST_CASE("ensemble json round trip") {
  for (const char* spec : {"eq-x1", "eq-necessary", "eq-pr", "xanti-bob:eps=0.37"}) {
    const Ensemble e = make_builtin_ensemble(spec);
    const Ensemble back = ensemble_from_json(ensemble_to_json(e));
    REQUIRE(back.size() == e.size());
    CHECK(back.dims == e.dims);
    for (int k = 0; k < e.size(); ++k) {
      CHECK(back.states[k].is_product() == e.states[k].is_product());
      CHECK(std::abs(std::abs(overlap(back.states[k].flat, e.states[k].flat)) - 1.0) <= 1e-12);
    }
    CHECK(back.labels == e.labels);
  }
}

TEST_CASE("ensemble json with explicit priors") {
  json j;
  j["dims"] = {2};
  j["states"] = json::array();
  j["states"].push_back({{"kind", "flat"}, {"amplitudes", {{1.0, 0.0}, {0.0, 0.0}}}});
  j["states"].push_back({{"kind", "flat"}, {"amplitudes", {{0.0, 0.0}, {1.0, 0.0}}}});
  j["priors"] = {0.25, 0.75};
  const Ensemble e = ensemble_from_json(j);
  CHECK(e.priors[1] == doctest::Approx(0.75));
  CHECK_FALSE(e.uniform_priors());
  const Ensemble back = ensemble_from_json(ensemble_to_json(e));
  CHECK(back.priors[0] == doctest::Approx(0.25));
}

TEST_CASE("ensemble schema errors carry the state index") {
  json j;
  j["dims"] = {2};
  j["states"] = json::array();
  j["states"].push_back({{"kind", "flat"}, {"amplitudes", {{1.0, 0.0}, {0.0, 0.0}}}});
  j["states"].push_back({{"kind", "flat"}, {"amplitudes", "oops"}});
  CHECK_THROWS_WITH_AS(ensemble_from_json(j), doctest::Contains("state 2"), std::invalid_argument);

  json missing;
  missing["dims"] = {2};
  CHECK_THROWS_WITH_AS(ensemble_from_json(missing), doctest::Contains("states"),
                       std::invalid_argument);
}

TEST_CASE("povm json round trip keeps lexicographic outcome order") {
  const Povm ref = reference_pair_povm_eps_third();
  const Povm back = povm_from_json(povm_to_json(ref));
  REQUIRE(back.subsets == ref.subsets);
  for (size_t i = 0; i < ref.operators.size(); ++i)
    CHECK((back.operators[i] - ref.operators[i]).max_abs() <= 1e-15);
}

TEST_CASE("protocol json round trip") {
  const ComplexMatrix p0 = ComplexMatrix::outer({1.0, 0.0});
  const ComplexMatrix p1 = ComplexMatrix::outer({0.0, 1.0});
  const ProtocolNode tree = ProtocolNode::measure(
      0, {p0, p1},
      {ProtocolNode::measure(1, {p0, p1}, {ProtocolNode::leaf({2}), ProtocolNode::leaf({1})}),
       ProtocolNode::leaf({0})});
  const ProtocolNode back = protocol_from_json(protocol_to_json(tree));
  CHECK(back.party == 0);
  REQUIRE(back.children.size() == 2);
  CHECK(back.children[0].party == 1);
  CHECK(back.children[0].children[0].exclude == std::vector<int>{2});
  CHECK(back.children[1].exclude == std::vector<int>{0});
  CHECK((back.povm[0] - p0).max_abs() <= 1e-15);
}

TEST_CASE("exclusion report json round trips") {
  const ExclusionTask task{make_builtin_ensemble("appendix-a"), 1, false,
                           Normalization::normalized};
  const ExclusionReport rep = exclusion_value(task);
  const json j = report_to_json(rep);
  const ParsedReport back = report_from_json(j);
  CHECK(back.value == rep.value);  // bitwise: json stores doubles losslessly
  CHECK(back.value_unnormalized == rep.value_unnormalized);
  CHECK(back.perfect == rep.perfect);
  REQUIRE(back.povm.subsets == rep.povm.subsets);
  for (size_t i = 0; i < rep.povm.operators.size(); ++i)
    CHECK((back.povm.operators[i] - rep.povm.operators[i]).max_abs() == 0.0);
}

TEST_CASE("claim registry is complete and runs deterministically") {
  const auto& claims = claim_registry();
  CHECK(claims.size() == 15);
  std::set<std::string> ids;
  for (const auto& c : claims) {
    CHECK(!c.reference.empty());
    ids.insert(c.id);
  }
  CHECK(ids.size() == claims.size());
  CHECK_THROWS_AS(run_claim("not-a-claim"), std::invalid_argument);

  // Determinism of the machine-readable output for a representative claim.
  const ClaimReport a = run_claim("thm5");
  const ClaimReport b = run_claim("thm5");
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].measured == b.checks[i].measured);
    CHECK(a.checks[i].pass == b.checks[i].pass);
  }
}

TEST_SUITE_END();
