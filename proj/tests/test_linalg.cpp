// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include <doctest.h>

#include <cmath>
#include <random>

#include "antidist/linalg.hpp"

using namespace antidist;

namespace {

ComplexMatrix random_hermitian(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(gauss(rng), gauss(rng));
  return hermitize(a);
}

ComplexMatrix reconstruct(const SpectralDecomposition& d) {
  const int n = d.eigenvectors.rows();
  ComplexMatrix a(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a(i, j) += d.eigenvalues[k] * d.eigenvectors(i, k) * std::conj(d.eigenvectors(j, k));
  return a;
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("eig_hermitian handles the textbook cases") {
  SUBCASE("diagonal") {
    ComplexMatrix a(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 1.0;
    const auto d = eig_hermitian(a);
    CHECK(d.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(d.eigenvalues[1] == doctest::Approx(2.0));
  }
  SUBCASE("pauli x") {
    ComplexMatrix a(2, 2);
    a(0, 1) = 1.0;
    a(1, 0) = 1.0;
    const auto d = eig_hermitian(a);
    CHECK(d.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(d.eigenvalues[1] == doctest::Approx(1.0));
  }
  SUBCASE("rank-1 projector") {
    const double r = 1.0 / std::sqrt(2.0);
    const auto a = ComplexMatrix::outer({r, r});
    const auto d = eig_hermitian(a);
    CHECK(d.eigenvalues[0] == doctest::Approx(0.0));
    CHECK(d.eigenvalues[1] == doctest::Approx(1.0));
  }
}

TEST_CASE("eig_hermitian rejects non-Hermitian input with the asymmetry size") {
  ComplexMatrix a(2, 2);
  a(0, 1) = cplx(0.0, 1.0);
  a(1, 0) = cplx(0.0, 1.0);  // should be -i
  CHECK_THROWS_WITH_AS(eig_hermitian(a), doctest::Contains("not Hermitian"), std::invalid_argument);
}

TEST_CASE("eig reconstruction and orthonormality on random Hermitian matrices") {
  std::mt19937 rng(7);
  for (int n : {1, 2, 3, 5, 8, 12, 16}) {
    for (int rep = 0; rep < 8; ++rep) {
      const ComplexMatrix a = random_hermitian(n, rng);
      const auto d = eig_hermitian(a);
      const double scale = std::max(1e-300, a.max_abs());
      CHECK((reconstruct(d) - a).max_abs() <= tol::kReconstruction * scale);
      const ComplexMatrix vtv = d.eigenvectors.adjoint() * d.eigenvectors;
      CHECK((vtv - ComplexMatrix::identity(n)).max_abs() <= 1e-10);
      for (int k = 0; k + 1 < n; ++k) CHECK(d.eigenvalues[k] <= d.eigenvalues[k + 1]);
    }
  }
}

TEST_CASE("eig_hermitian output is deterministic") {
  std::mt19937 rng(21);
  const ComplexMatrix a = random_hermitian(6, rng);
  const auto d1 = eig_hermitian(a);
  const auto d2 = eig_hermitian(a);
  CHECK((d1.eigenvectors - d2.eigenvectors).max_abs() == 0.0);
  for (int k = 0; k < 6; ++k) CHECK(d1.eigenvalues[k] == d2.eigenvalues[k]);
}

TEST_CASE("is_psd") {
  CHECK(is_psd(ComplexMatrix::identity(3)).psd);
  ComplexMatrix a(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = -1e-3;
  const auto bad = is_psd(a);
  CHECK_FALSE(bad.psd);
  CHECK(bad.min_eigenvalue == doctest::Approx(-1e-3));
  // First element of the reference four-outcome qubit measurement.
  const auto m = 0.5506 * ComplexMatrix::outer({0.0, 1.0});
  CHECK(is_psd(m).psd);
  CHECK_THROWS_AS(is_psd(ComplexMatrix::identity(2), 0.5), std::invalid_argument);
}

TEST_CASE("kron basics") {
  CHECK((kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) - ComplexMatrix::identity(4))
            .max_abs() == 0.0);
  const std::vector<cplx> zero{1.0, 0.0};
  const auto v = kron(zero, zero);
  CHECK(v[0] == cplx(1.0));
  CHECK(std::abs(v[1]) + std::abs(v[2]) + std::abs(v[3]) == 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  const auto w = kron(std::vector<cplx>{r, r}, std::vector<cplx>{0.0, 1.0});
  CHECK(std::abs(w[0]) == doctest::Approx(0.0));
  CHECK(std::real(w[1]) == doctest::Approx(r));
  CHECK(std::abs(w[2]) == doctest::Approx(0.0));
  CHECK(std::real(w[3]) == doctest::Approx(r));
}

TEST_CASE("kron associativity") {
  std::mt19937 rng(3);
  const ComplexMatrix a = random_hermitian(2, rng);
  const ComplexMatrix b = random_hermitian(3, rng);
  const ComplexMatrix c = random_hermitian(2, rng);
  CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).max_abs() <= 1e-12);
}

TEST_CASE("real_embedding") {
  SUBCASE("real symmetric input gives two diagonal copies") {
    ComplexMatrix h(2, 2);
    h(0, 0) = 1.0;
    h(0, 1) = 0.5;
    h(1, 0) = 0.5;
    h(1, 1) = -2.0;
    const RealMatrix e = real_embedding(h);
    CHECK(e(0, 1) == doctest::Approx(0.5));
    CHECK(e(2, 3) == doctest::Approx(0.5));
    CHECK(e(0, 2) == doctest::Approx(0.0));
    CHECK(e(1, 3) == doctest::Approx(0.0));
    CHECK(e(3, 3) == doctest::Approx(-2.0));
  }
  SUBCASE("pauli y") {
    ComplexMatrix y(2, 2);
    y(0, 1) = cplx(0.0, -1.0);
    y(1, 0) = cplx(0.0, 1.0);
    const RealMatrix e = real_embedding(y);
    const double expected[4][4] = {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(e(i, j) == doctest::Approx(expected[i][j]));
    const auto d = eig_symmetric(e);
    CHECK(d.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(d.eigenvalues[1] == doctest::Approx(-1.0));
    CHECK(d.eigenvalues[2] == doctest::Approx(1.0));
    CHECK(d.eigenvalues[3] == doctest::Approx(1.0));
  }
  SUBCASE("trace doubles and PSD-ness transfers") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
      const ComplexMatrix h = random_hermitian(4, rng);
      const RealMatrix e = real_embedding(h);
      CHECK(e.trace() == doctest::Approx(2.0 * std::real(h.trace())));
      CHECK(is_psd_real(e).psd == is_psd(h).psd);
      CHECK((from_real_embedding(e) - h).max_abs() <= 1e-13);
    }
  }
}

TEST_CASE("cholesky round trip") {
  std::mt19937 rng(5);
  const ComplexMatrix h = random_hermitian(5, rng);
  // h^2 + I is positive definite.
  RealMatrix a = real_embedding(hermitize(h * h));
  for (int i = 0; i < a.rows(); ++i) a(i, i) += 1.0;
  const auto l = cholesky(a);
  REQUIRE(l.has_value());
  CHECK(((*l) * l->transpose() - a).max_abs() <= 1e-10 * a.max_abs());
  std::vector<double> rhs(a.rows());
  for (int i = 0; i < a.rows(); ++i) rhs[i] = std::sin(i + 1.0);
  std::vector<double> x = rhs;
  cholesky_solve(*l, x);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.rows(); ++j) s += a(i, j) * x[j];
    CHECK(s == doctest::Approx(rhs[i]).epsilon(1e-9));
  }
  RealMatrix indef(2, 2);
  indef(0, 0) = 1.0;
  indef(1, 1) = -1.0;
  CHECK_FALSE(cholesky(indef).has_value());
}

TEST_SUITE_END();
