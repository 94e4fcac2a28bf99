// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "antidist/tolerances.hpp"

namespace antidist {

using cplx = std::complex<double>;

/// Dense real matrix, row-major.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

  static RealMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  RealMatrix transpose() const;
  double trace() const;
  double max_abs() const;
  double frobenius() const;

  RealMatrix& operator+=(const RealMatrix& o);
  RealMatrix& operator-=(const RealMatrix& o);
  RealMatrix& operator*=(double s);

  friend RealMatrix operator+(RealMatrix a, const RealMatrix& b) { return a += b; }
  friend RealMatrix operator-(RealMatrix a, const RealMatrix& b) { return a -= b; }
  friend RealMatrix operator*(RealMatrix a, double s) { return a *= s; }
  friend RealMatrix operator*(double s, RealMatrix a) { return a *= s; }
  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

/// <A, B> = Tr(A^T B).
double inner(const RealMatrix& a, const RealMatrix& b);

/// Forces exact symmetry: (A + A^T) / 2.
RealMatrix symmetrize(const RealMatrix& a);

/// Dense complex matrix, row-major. Holds every operator in the library.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static ComplexMatrix identity(int n);
  /// |v><v|
  static ComplexMatrix outer(const std::vector<cplx>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  cplx operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  double max_abs() const;
  /// max_ij |A - A^dag|_ij
  double hermiticity_error() const;
  bool is_hermitian(double tolerance = tol::kHermitian) const;

  std::vector<cplx> apply(const std::vector<cplx>& v) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= cplx(s, 0.0); }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

/// Re Tr(A^dag B); equals Tr(AB) for Hermitian pairs.
double inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// (A + A^dag) / 2.
ComplexMatrix hermitize(const ComplexMatrix& a);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, eigenvectors[:,k] <-> eigenvalues[k]
};

struct RealSpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  RealMatrix eigenvectors;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Rejects inputs with
/// hermiticity error above tol::kHermitian (scaled), reporting the max asymmetry.
SpectralDecomposition eig_hermitian(const ComplexMatrix& a);

/// Cyclic Jacobi for real symmetric matrices.
RealSpectralDecomposition eig_symmetric(const RealMatrix& a);

struct PsdCheck {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

/// True iff the smallest eigenvalue is >= floor. floor must be <= 0.
PsdCheck is_psd(const ComplexMatrix& a, double floor = tol::kPsdFloor);
PsdCheck is_psd_real(const RealMatrix& a, double floor = tol::kPsdFloor);

/// Kronecker product, row-major convention (i_a * d_b + i_b).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b);

/// [[Re H, -Im H], [Im H, Re H]]; PSD iff H is PSD; doubles the trace.
RealMatrix real_embedding(const ComplexMatrix& h);

/// Inverse of real_embedding for matrices of (approximately) embedded form;
/// averages over the complex-structure symmetry first, so any symmetric input
/// maps to a Hermitian result.
ComplexMatrix from_real_embedding(const RealMatrix& s);

/// Lower-triangular L with A = L L^T, or nullopt if a pivot is not positive.
std::optional<RealMatrix> cholesky(const RealMatrix& a);

/// Solves L L^T x = rhs in place given the Cholesky factor.
void cholesky_solve(const RealMatrix& l, std::vector<double>& rhs);

}  // namespace antidist
