// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include <doctest.h>

#include <cmath>
#include <random>

#include "antidist/sdp.hpp"

using namespace antidist;

namespace {

ComplexMatrix random_hermitian(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(gauss(rng), gauss(rng));
  return hermitize(a);
}

// min Tr(C X) s.t. Tr(X) = 1, X >= 0; optimum is the smallest eigenvalue of C.
SdpProblem min_eigenvalue_problem(const ComplexMatrix& c) {
  SdpProblem p;
  p.add_block("x", c.rows(), c);
  SdpProblem::Constraint con;
  con.rhs = 1.0;
  con.terms.push_back({0, ComplexMatrix::identity(c.rows())});
  p.constraints.push_back(std::move(con));
  return p;
}

// Two-state exclusion: one block per state, cost rho_k / 2, completeness.
SdpProblem pair_exclusion_problem(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  SdpProblem p;
  p.add_block("1", 2, 0.5 * ComplexMatrix::outer(a));
  p.add_block("2", 2, 0.5 * ComplexMatrix::outer(b));
  p.add_completeness_family(2, {0, 1});
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("sdp");

TEST_CASE("minimum-eigenvalue program on random Hermitian data") {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix c = random_hermitian(4, rng);
    const SdpSolution sol = solve(min_eigenvalue_problem(c));
    REQUIRE(sol.status == SdpStatus::optimal);
    const double expected = eig_hermitian(c).eigenvalues.front();
    CHECK(sol.primal_value == doctest::Approx(expected).epsilon(1e-7));
    CHECK(sol.dual_value <= sol.primal_value + 1e-9 * (1.0 + std::abs(sol.primal_value)));
  }
}

TEST_CASE("orthogonal pair excludes perfectly") {
  const SdpSolution sol = solve(pair_exclusion_problem({1.0, 0.0}, {0.0, 1.0}));
  REQUIRE(sol.status == SdpStatus::optimal);
  CHECK(sol.primal_value == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(sol.primal_residual <= tol::kConstraint);
}

TEST_CASE("two-state exclusion matches the minimum-error closed form") {
  // Independent oracle: the best projective measurement. For the pair
  // {|0>,|+>} sweep rank-1 projectors P(phi) and take the best assignment;
  // the optimum over POVMs coincides with the best projective pair here.
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<cplx> zero{1.0, 0.0};
  const std::vector<cplx> plus{r, r};
  double best = 1.0;
  for (int deg = 0; deg < 180; ++deg) {
    const double phi = deg * M_PI / 180.0;
    const std::vector<cplx> v{std::cos(phi), std::sin(phi)};
    const ComplexMatrix p1 = ComplexMatrix::outer(v);
    const ComplexMatrix p2 = ComplexMatrix::identity(2) - p1;
    const ComplexMatrix rho0 = ComplexMatrix::outer(zero);
    const ComplexMatrix rho1 = ComplexMatrix::outer(plus);
    const double errA = 0.5 * (inner(rho0, p1) + inner(rho1, p2));
    const double errB = 0.5 * (inner(rho0, p2) + inner(rho1, p1));
    best = std::min({best, errA, errB});
  }
  const double closed_form = 0.5 * (1.0 - 1.0 / std::sqrt(2.0));  // 0.1464466...
  CHECK(best == doctest::Approx(closed_form).epsilon(2e-3));

  const SdpSolution sol = solve(pair_exclusion_problem(zero, plus));
  REQUIRE(sol.status == SdpStatus::optimal);
  CHECK(sol.primal_value == doctest::Approx(closed_form).epsilon(1e-7));
  CHECK(std::abs(sol.primal_value - best) <= 2e-3);
  CHECK(sol.dual_value == doctest::Approx(closed_form).epsilon(1e-6));
}

TEST_CASE("dual certificate validates and rejects tampering") {
  const double r = 1.0 / std::sqrt(2.0);
  const SdpProblem p = pair_exclusion_problem({1.0, 0.0}, {r, r});
  SdpSolution sol = solve(p);
  REQUIRE(sol.status == SdpStatus::optimal);
  const CertificateReport good = dual_certificate(p, sol);
  CHECK(good.certified);
  CHECK(good.weak_duality_slack >= -1e-9);

  SdpSolution bad = sol;
  bad.dual[0] += 0.3;  // breaks S = C - A^T y
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    ComplexMatrix s = p.costs[b];
    for (size_t c = 0; c < p.constraints.size(); ++c)
      for (const auto& t : p.constraints[c].terms)
        if (t.block == static_cast<int>(b)) s -= bad.dual[c] * t.matrix;
    bad.dual_slacks[b] = s;
  }
  bad.dual_value = 0.0;
  for (size_t c = 0; c < p.constraints.size(); ++c)
    bad.dual_value += bad.dual[c] * p.constraints[c].rhs;
  const CertificateReport report = dual_certificate(p, bad);
  CHECK_FALSE(report.certified);
  CHECK_FALSE(report.failure.empty());
}

TEST_CASE("linear program with scalar blocks: max t below two bounds") {
  // max t s.t. t + s1 = 0.3, t + s2 = 0.7, all >= 0 -> t = 0.3.
  SdpProblem p;
  ComplexMatrix minus_one(1, 1);
  minus_one(0, 0) = -1.0;
  ComplexMatrix one(1, 1);
  one(0, 0) = 1.0;
  const int t = p.add_block("t", 1, minus_one);
  const int s1 = p.add_block("s1", 1, ComplexMatrix(1, 1));
  const int s2 = p.add_block("s2", 1, ComplexMatrix(1, 1));
  SdpProblem::Constraint c1;
  c1.rhs = 0.3;
  c1.terms.push_back({t, one});
  c1.terms.push_back({s1, one});
  SdpProblem::Constraint c2;
  c2.rhs = 0.7;
  c2.terms.push_back({t, one});
  c2.terms.push_back({s2, one});
  p.constraints.push_back(c1);
  p.constraints.push_back(c2);
  const SdpSolution sol = solve(p);
  REQUIRE(sol.status == SdpStatus::optimal);
  CHECK(sol.primal_value == doctest::Approx(-0.3).epsilon(1e-7));
  CHECK(std::real(sol.primal[t](0, 0)) == doctest::Approx(0.3).epsilon(1e-6));
}

TEST_CASE("structurally inconsistent equalities report infeasible") {
  SdpProblem p;
  p.add_block("x", 2, ComplexMatrix(2, 2));
  SdpProblem::Constraint c1;
  c1.rhs = 1.0;
  c1.terms.push_back({0, ComplexMatrix::identity(2)});
  SdpProblem::Constraint c2;
  c2.rhs = 2.0;
  c2.terms.push_back({0, ComplexMatrix::identity(2)});
  p.constraints.push_back(c1);
  p.constraints.push_back(c2);
  CHECK(solve(p).status == SdpStatus::infeasible);
}

TEST_CASE("complex data and its real embedding give the same value") {
  std::mt19937 rng(31);
  for (int rep = 0; rep < 5; ++rep) {
    const ComplexMatrix c = random_hermitian(3, rng);
    const SdpProblem complex_problem = min_eigenvalue_problem(c);

    // The same program posed on the embedded (real symmetric) data with the
    // half rescaling that undoes the trace doubling.
    const RealMatrix ce = real_embedding(c);
    ComplexMatrix ce_complex(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) ce_complex(i, j) = 0.5 * ce(i, j);
    SdpProblem embedded;
    embedded.add_block("x", 6, ce_complex);
    SdpProblem::Constraint con;
    con.rhs = 2.0;
    con.terms.push_back({0, ComplexMatrix::identity(6)});
    embedded.constraints.push_back(std::move(con));

    const SdpSolution a = solve(complex_problem);
    const SdpSolution b = solve(embedded);
    REQUIRE(a.status == SdpStatus::optimal);
    REQUIRE(b.status == SdpStatus::optimal);
    CHECK(a.primal_value == doctest::Approx(b.primal_value).epsilon(1e-7));
  }
}

TEST_CASE("solver output is deterministic") {
  std::mt19937 rng(41);
  const ComplexMatrix c = random_hermitian(4, rng);
  const SdpProblem p = min_eigenvalue_problem(c);
  const SdpSolution a = solve(p);
  const SdpSolution b = solve(p);
  CHECK(a.primal_value == b.primal_value);
  CHECK(a.dual_value == b.dual_value);
  CHECK(a.iterations == b.iterations);
  CHECK((a.primal[0] - b.primal[0]).max_abs() == 0.0);
}

TEST_CASE("verify_feasible_point") {
  const SdpProblem p = pair_exclusion_problem({1.0, 0.0}, {0.0, 1.0});
  // Swap projectors: the perfect exclusion measurement.
  const std::vector<ComplexMatrix> candidate{ComplexMatrix::outer({0.0, 1.0}),
                                             ComplexMatrix::outer({1.0, 0.0})};
  const FeasiblePointReport rep = verify_feasible_point(p, candidate, 1e-9);
  CHECK(rep.valid);
  CHECK(rep.objective == doctest::Approx(0.0));
  CHECK(rep.constraint_residual <= 1e-12);
  CHECK_THROWS_AS(verify_feasible_point(p, {ComplexMatrix::identity(3), ComplexMatrix::identity(3)}, 1e-9),
                  std::invalid_argument);
}

TEST_CASE("malformed problems are rejected") {
  SdpProblem p;
  ComplexMatrix c(2, 2);
  c(0, 1) = cplx(0.0, 1.0);
  c(1, 0) = cplx(0.0, 1.0);  // not Hermitian
  p.add_block("x", 2, c);
  CHECK_THROWS_AS(solve(p), std::invalid_argument);

  SdpProblem big;
  big.add_block("x", 65, ComplexMatrix(65, 65));
  CHECK_THROWS_AS(solve(big), std::invalid_argument);
}

TEST_SUITE_END();
