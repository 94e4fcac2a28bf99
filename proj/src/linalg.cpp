// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "antidist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace antidist {

RealMatrix RealMatrix::identity(int n) {
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double RealMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double RealMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double RealMatrix::frobenius() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

RealMatrix& RealMatrix::operator+=(const RealMatrix& o) {
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RealMatrix& RealMatrix::operator-=(const RealMatrix& o) {
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RealMatrix& RealMatrix::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double inner(const RealMatrix& a, const RealMatrix& b) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * b(i, j);
  return s;
}

RealMatrix symmetrize(const RealMatrix& a) {
  RealMatrix s(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
  return s;
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<cplx>& v) {
  const int n = static_cast<int>(v.size());
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::hermiticity_error() const {
  if (rows_ != cols_) return max_abs() + 1.0;
  double m = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
  return rows_ == cols_ && hermiticity_error() <= tolerance * std::max(1.0, max_abs());
}

std::vector<cplx> ComplexMatrix::apply(const std::vector<cplx>& v) const {
  std::vector<cplx> out(rows_, cplx(0.0));
  for (int i = 0; i < rows_; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += std::real(std::conj(a(i, j)) * b(i, j));
  return s;
}

ComplexMatrix hermitize(const ComplexMatrix& a) {
  ComplexMatrix h(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

namespace {

void require_hermitian(const ComplexMatrix& a, const char* where) {
  if (a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << where << ": matrix is " << a.rows() << "x" << a.cols() << ", not square";
    throw std::invalid_argument(msg.str());
  }
  const double err = a.hermiticity_error();
  if (err > tol::kHermitian * std::max(1.0, a.max_abs())) {
    std::ostringstream msg;
    msg << where << ": matrix is not Hermitian, max |A - A^dag| entry = " << err;
    throw std::invalid_argument(msg.str());
  }
}

// One cyclic Jacobi pass framework shared by the real and complex solvers.
// Rotations zero the (p,q) entry of the working copy; V accumulates them.
template <typename Matrix, typename Scalar>
struct JacobiTraits;

}  // namespace

SpectralDecomposition eig_hermitian(const ComplexMatrix& a) {
  require_hermitian(a, "eig_hermitian");
  const int n = a.rows();
  ComplexMatrix d = hermitize(a);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1e-300, d.max_abs());
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(d(p, q));
    if (std::sqrt(off) <= 1e-15 * scale * n) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx beta = d(p, q);
        const double ab = std::abs(beta);
        if (ab <= 1e-18 * scale) {
          d(p, q) = 0.0;
          d(q, p) = 0.0;
          continue;
        }
        const cplx phi = beta / ab;
        const double tau = (std::real(d(q, q)) - std::real(d(p, p))) / (2.0 * ab);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Unitary rotation R: R[p][p]=c, R[p][q]=s*phi, R[q][p]=-s*conj(phi), R[q][q]=c.
        // Row update with R^dag, then column update with R.
        for (int j = 0; j < n; ++j) {
          const cplx rp = d(p, j), rq = d(q, j);
          d(p, j) = c * rp - s * phi * rq;
          d(q, j) = s * std::conj(phi) * rp + c * rq;
        }
        for (int i = 0; i < n; ++i) {
          const cplx cp = d(i, p), cq = d(i, q);
          d(i, p) = c * cp - s * std::conj(phi) * cq;
          d(i, q) = s * phi * cp + c * cq;
          const cplx vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - s * std::conj(phi) * vq;
          v(i, q) = s * phi * vp + c * vq;
        }
        d(p, q) = 0.0;
        d(q, p) = 0.0;
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return std::real(d(i, i)) < std::real(d(j, j)); });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = std::real(d(order[k], order[k]));
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

RealSpectralDecomposition eig_symmetric(const RealMatrix& a) {
  const int n = a.rows();
  RealMatrix d = symmetrize(a);
  RealMatrix v = RealMatrix::identity(n);

  const double scale = std::max(1e-300, d.max_abs());
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += d(p, q) * d(p, q);
    if (std::sqrt(off) <= 1e-15 * scale * n) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double beta = d(p, q);
        const double ab = std::abs(beta);
        if (ab <= 1e-18 * scale) {
          d(p, q) = 0.0;
          d(q, p) = 0.0;
          continue;
        }
        const double sign = beta >= 0.0 ? 1.0 : -1.0;
        const double tau = (d(q, q) - d(p, p)) / (2.0 * ab);
        const double t = sign * (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int j = 0; j < n; ++j) {
          const double rp = d(p, j), rq = d(q, j);
          d(p, j) = c * rp - s * rq;
          d(q, j) = s * rp + c * rq;
        }
        for (int i = 0; i < n; ++i) {
          const double cp = d(i, p), cq = d(i, q);
          d(i, p) = c * cp - s * cq;
          d(i, q) = s * cp + c * cq;
          const double vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
        d(p, q) = 0.0;
        d(q, p) = 0.0;
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return d(i, i) < d(j, j); });

  RealSpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = RealMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = d(order[k], order[k]);
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

PsdCheck is_psd(const ComplexMatrix& a, double floor) {
  if (floor > 0.0) throw std::invalid_argument("is_psd: floor must be <= 0");
  const auto eig = eig_hermitian(a);
  const double lo = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
  return {lo >= floor, lo};
}

PsdCheck is_psd_real(const RealMatrix& a, double floor) {
  if (floor > 0.0) throw std::invalid_argument("is_psd_real: floor must be <= 0");
  const auto eig = eig_symmetric(a);
  const double lo = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
  return {lo >= floor, lo};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      const cplx f = a(ia, ja);
      if (f == cplx(0.0)) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          c(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
    }
  return c;
}

std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> c(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i * b.size() + j] = a[i] * b[j];
  return c;
}

RealMatrix real_embedding(const ComplexMatrix& h) {
  require_hermitian(h, "real_embedding");
  const int n = h.rows();
  RealMatrix e(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = std::real(h(i, j)), im = std::imag(h(i, j));
      e(i, j) = re;
      e(i, j + n) = -im;
      e(i + n, j) = im;
      e(i + n, j + n) = re;
    }
  return e;
}

ComplexMatrix from_real_embedding(const RealMatrix& s) {
  const int n = s.rows() / 2;
  ComplexMatrix h(n, n);
  // Average the two diagonal/off-diagonal copies; kills any deviation from the
  // embedded form (i.e. projects onto the commutant of J = embedding of iI).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = 0.5 * (s(i, j) + s(i + n, j + n));
      const double im = 0.5 * (s(i + n, j) - s(i, j + n));
      h(i, j) = cplx(re, im);
    }
  return hermitize(h);
}

std::optional<RealMatrix> cholesky(const RealMatrix& a) {
  const int n = a.rows();
  RealMatrix l(n, n);
  for (int j = 0; j < n; ++j) {
    double diag = a(j, j);
    for (int k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (diag <= 0.0) return std::nullopt;
    l(j, j) = std::sqrt(diag);
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

void cholesky_solve(const RealMatrix& l, std::vector<double>& rhs) {
  const int n = l.rows();
  for (int i = 0; i < n; ++i) {
    double s = rhs[i];
    for (int k = 0; k < i; ++k) s -= l(i, k) * rhs[k];
    rhs[i] = s / l(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = rhs[i];
    for (int k = i + 1; k < n; ++k) s -= l(k, i) * rhs[k];
    rhs[i] = s / l(i, i);
  }
}

}  // namespace antidist
