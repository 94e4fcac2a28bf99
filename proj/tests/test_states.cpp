// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include <doctest.h>

#include <cmath>
#include <random>

#include "antidist/builtins.hpp"
#include "antidist/states.hpp"

using namespace antidist;

TEST_SUITE_BEGIN("states");

TEST_CASE("named states") {
  const PureState vp = make_named_state("v+");
  CHECK(std::real(vp.amplitudes[0]) == doctest::Approx(0.5));
  CHECK(std::real(vp.amplitudes[1]) == doctest::Approx(std::sqrt(3.0) / 2.0));

  const PureState phi3 = make_named_state("phi3_bob", {0.5});
  CHECK(std::real(phi3.amplitudes[0]) == doctest::Approx(0.5));
  CHECK(std::real(phi3.amplitudes[1]) == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))));
  CHECK(std::real(phi3.amplitudes[2]) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(std::abs(phi3.amplitudes[3]) == doctest::Approx(0.0));

  const PureState plus = make_named_state("plus_theta", {M_PI / 4.0});
  CHECK(std::real(plus.amplitudes[0]) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::real(plus.amplitudes[1]) == doctest::Approx(1.0 / std::sqrt(2.0)));

  CHECK_THROWS_AS(make_named_state("nope"), std::invalid_argument);
  CHECK_THROWS_AS(make_named_state("phi2_bob", {1.5}), std::invalid_argument);
  CHECK_THROWS_AS(make_named_state("plus_theta", {2.0}), std::invalid_argument);
}

TEST_CASE("normalization window") {
  CHECK_NOTHROW(PureState({1.0 + 5e-7, 0.0}));
  CHECK_THROWS_AS(PureState({0.5, 0.0}), std::invalid_argument);
  const PureState s({1.0 + 5e-7, 0.0});
  double n = 0.0;
  for (const auto& a : s.amplitudes) n += std::norm(a);
  CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("overlap") {
  CHECK(std::real(overlap(make_named_state("0"), make_named_state("0"))) == doctest::Approx(1.0));
  CHECK(std::real(overlap(make_named_state("v+"), make_named_state("v-"))) ==
        doctest::Approx(-0.5));
  CHECK_THROWS_AS(overlap(make_named_state("0"), make_named_state("phi1_bob", {0.3})),
                  std::invalid_argument);
}

TEST_CASE("equal-overlap family: all six pairwise overlaps equal eps") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> dist(0.02, 0.98);
  for (int rep = 0; rep < 25; ++rep) {
    const double eps = dist(rng);
    std::vector<PureState> phis;
    for (int i = 1; i <= 4; ++i)
      phis.push_back(make_named_state("phi" + std::to_string(i) + "_bob", {eps}));
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        CHECK(std::abs(overlap(phis[i], phis[j]) - cplx(eps)) <= 1e-10);
  }
}

TEST_CASE("gram") {
  SUBCASE("orthonormal triple") {
    std::vector<cplx> e2(3, 0.0);
    const Ensemble e = Ensemble::make(
        {3}, {EnsembleState::from_flat(PureState({1.0, 0.0, 0.0})),
              EnsembleState::from_flat(PureState({0.0, 1.0, 0.0})),
              EnsembleState::from_flat(PureState({0.0, 0.0, 1.0}))});
    const GramData g = gram(e);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(g.squared_overlaps(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));
  }
  SUBCASE("three-party example and the theta grid") {
    const GramData g = gram(make_builtin_ensemble("eq-pr"));
    CHECK(g.squared_overlaps(0, 1) == doctest::Approx(0.25));
    CHECK(g.squared_overlaps(0, 2) == doctest::Approx(0.25));
    CHECK(g.squared_overlaps(1, 2) == doctest::Approx(0.25));

    const GramData h = gram(make_builtin_ensemble("eq-pbr:theta=" + std::to_string(M_PI / 8.0)));
    // |<+t|-t>|^2 = cos^2(pi/4) = 1/2 per factor.
    CHECK(h.squared_overlaps(0, 1) == doctest::Approx(0.5));
    CHECK(h.overlaps.is_hermitian());
  }
  SUBCASE("gram is Hermitian with unit diagonal") {
    const GramData g = gram(make_builtin_ensemble("eq-xanti:eps=0.37"));
    CHECK(g.overlaps.is_hermitian());
    for (int i = 0; i < 4; ++i) CHECK(g.squared_overlaps(i, i) == doctest::Approx(1.0));
  }
}

TEST_CASE("product flattening matches kron") {
  const Ensemble e = make_builtin_ensemble("eq-x1");
  for (const auto& s : e.states) {
    const auto flat = kron(s.parts[0].amplitudes, s.parts[1].amplitudes);
    for (size_t i = 0; i < flat.size(); ++i)
      CHECK(std::abs(flat[i] - s.flat.amplitudes[i]) <= 1e-12);
  }
}

TEST_CASE("marginal_set") {
  const Ensemble e = make_builtin_ensemble("eq-x1");
  const Ensemble a = marginal_set(e, 0);
  CHECK(a.size() == 4);
  CHECK(std::abs(overlap(a.states[0].flat, make_named_state("0"))) == doctest::Approx(1.0));
  CHECK(std::abs(overlap(a.states[1].flat, make_named_state("+"))) == doctest::Approx(1.0));
  CHECK(std::abs(overlap(a.states[2].flat, make_named_state("v+"))) == doctest::Approx(1.0));
  CHECK(std::abs(overlap(a.states[3].flat, make_named_state("v-"))) == doctest::Approx(1.0));

  const Ensemble pbr = make_builtin_ensemble("eq-pbr:theta=0.3");
  const Ensemble b = marginal_set(pbr, 1);
  CHECK(std::abs(overlap(b.states[0].flat, b.states[2].flat)) == doctest::Approx(1.0));
  CHECK(std::abs(overlap(b.states[1].flat, b.states[3].flat)) == doctest::Approx(1.0));

  const Ensemble pr = make_builtin_ensemble("eq-pr");
  const Ensemble p3 = marginal_set(pr, 2);
  CHECK(std::abs(overlap(p3.states[0].flat, make_named_state("0"))) == doctest::Approx(1.0));
  CHECK(std::abs(overlap(p3.states[1].flat, make_named_state("+"))) == doctest::Approx(1.0));
  CHECK(std::abs(overlap(p3.states[2].flat, make_named_state("0"))) == doctest::Approx(1.0));

  CHECK_THROWS_AS(marginal_set(e, 5), std::invalid_argument);
  CHECK_THROWS_AS(marginal_set(make_builtin_ensemble("eq-necessary"), 0), std::invalid_argument);
}

TEST_CASE("marginals re-tensor to the original ensemble") {
  const Ensemble e = make_builtin_ensemble("eq-pr");
  std::vector<Ensemble> margs;
  for (int p = 0; p < 3; ++p) margs.push_back(marginal_set(e, p));
  for (int k = 0; k < e.size(); ++k) {
    auto flat = kron(kron(margs[0].states[k].flat.amplitudes, margs[1].states[k].flat.amplitudes),
                     margs[2].states[k].flat.amplitudes);
    for (size_t i = 0; i < flat.size(); ++i)
      CHECK(std::abs(flat[i] - e.states[k].flat.amplitudes[i]) <= 1e-12);
  }
}

TEST_CASE("group_by_bipartition") {
  const Ensemble pr = make_builtin_ensemble("eq-pr");
  SUBCASE("block {1,2}") {
    const Ensemble g = group_by_bipartition(pr, {0, 1});
    CHECK(g.parties() == 2);
    CHECK(g.dims[0] == 4);
    CHECK(g.dims[1] == 2);
    // {|00>x|0>, |0+>x|+>, |++>x|0>}
    const auto zz = kron(make_named_state("0").amplitudes, make_named_state("0").amplitudes);
    const auto zp = kron(make_named_state("0").amplitudes, make_named_state("+").amplitudes);
    const auto pp = kron(make_named_state("+").amplitudes, make_named_state("+").amplitudes);
    CHECK(std::abs(overlap(g.states[0].parts[0], PureState(zz))) == doctest::Approx(1.0));
    CHECK(std::abs(overlap(g.states[1].parts[0], PureState(zp))) == doctest::Approx(1.0));
    CHECK(std::abs(overlap(g.states[2].parts[0], PureState(pp))) == doctest::Approx(1.0));
    CHECK(std::abs(overlap(g.states[2].parts[1], make_named_state("0"))) == doctest::Approx(1.0));
  }
  SUBCASE("block {2,3} regroups the factors") {
    const Ensemble g = group_by_bipartition(pr, {1, 2});
    CHECK(g.dims[0] == 4);
    const auto pz = kron(make_named_state("+").amplitudes, make_named_state("0").amplitudes);
    CHECK(std::abs(overlap(g.states[2].parts[0], PureState(pz))) == doctest::Approx(1.0));
    CHECK(std::abs(overlap(g.states[2].parts[1], make_named_state("+"))) == doctest::Approx(1.0));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(group_by_bipartition(pr, {}), std::invalid_argument);
    CHECK_THROWS_AS(group_by_bipartition(pr, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(group_by_bipartition(make_builtin_ensemble("eq-x1"), {0}),
                    std::invalid_argument);
  }
}

TEST_CASE("ensemble invariants") {
  CHECK_THROWS_AS(Ensemble::make({2}, {EnsembleState::product({make_named_state("0")})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Ensemble::make({2},
                                 {EnsembleState::product({make_named_state("0")}),
                                  EnsembleState::product({make_named_state("1")})},
                                 {0.7, 0.7}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Ensemble::make({2},
                                 {EnsembleState::product({make_named_state("0")}),
                                  EnsembleState::from_flat(PureState({0.0, 0.0, 1.0, 0.0}))}),
                  std::invalid_argument);
  const Ensemble ok = Ensemble::make({2}, {EnsembleState::product({make_named_state("0")}),
                                           EnsembleState::product({make_named_state("+")})});
  CHECK(ok.priors[0] == doctest::Approx(0.5));
  CHECK(ok.uniform_priors());
}

TEST_SUITE_END();
