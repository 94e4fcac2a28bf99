// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "antidist/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace antidist {

std::string to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::optimal:
      return "optimal";
    case SdpStatus::max_iterations:
      return "max-iterations";
    case SdpStatus::infeasible:
      return "infeasible";
  }
  return "unknown";
}

int SdpProblem::add_block(const std::string& label, int dim, const ComplexMatrix& cost) {
  blocks.push_back({label, dim});
  costs.push_back(cost);
  return static_cast<int>(blocks.size()) - 1;
}

namespace {

// Canonical Hermitian basis of the completeness family, in the order the
// constraints are appended: diagonal elements first, then (re, im) pairs for
// p < q. Tr(B M) reads off M_pp, Re M_pq, Im M_pq respectively.
std::vector<std::pair<ComplexMatrix, double>> completeness_basis(int dim) {
  std::vector<std::pair<ComplexMatrix, double>> basis;
  for (int p = 0; p < dim; ++p) {
    ComplexMatrix b(dim, dim);
    b(p, p) = 1.0;
    basis.emplace_back(std::move(b), 1.0);
  }
  for (int p = 0; p < dim; ++p)
    for (int q = p + 1; q < dim; ++q) {
      ComplexMatrix re(dim, dim);
      re(p, q) = 0.5;
      re(q, p) = 0.5;
      basis.emplace_back(std::move(re), 0.0);
      ComplexMatrix im(dim, dim);
      im(p, q) = cplx(0.0, 0.5);
      im(q, p) = cplx(0.0, -0.5);
      basis.emplace_back(std::move(im), 0.0);
    }
  return basis;
}

}  // namespace

void SdpProblem::add_completeness_family(int dim, const std::vector<int>& participating,
                                         const std::vector<ComplexMatrix>& maps) {
  completeness_dim = dim;
  completeness_blocks = participating;
  completeness_constraints.clear();
  const auto basis = completeness_basis(dim);
  for (const auto& [b, rhs] : basis) {
    Constraint c;
    c.rhs = rhs;
    for (size_t i = 0; i < participating.size(); ++i) {
      const int blk = participating[i];
      if (maps.empty()) {
        c.terms.push_back({blk, b});
      } else {
        const ComplexMatrix& p = maps[i];  // dim x dim_blk isometry
        c.terms.push_back({blk, hermitize(p.adjoint() * b * p)});
      }
    }
    completeness_constraints.push_back(static_cast<int>(constraints.size()));
    constraints.push_back(std::move(c));
  }
}

ComplexMatrix SdpSolution::completeness_dual(const SdpProblem& p) const {
  ComplexMatrix y(p.completeness_dim, p.completeness_dim);
  if (p.completeness_dim == 0) return y;
  const auto basis = completeness_basis(p.completeness_dim);
  for (size_t i = 0; i < basis.size(); ++i) y += dual[p.completeness_constraints[i]] * basis[i].first;
  return y;
}

namespace {

struct RealBlockProblem {
  std::vector<int> dims;
  std::vector<RealMatrix> cost;
  struct Term {
    int block;
    RealMatrix matrix;
  };
  struct Con {
    std::vector<Term> terms;
    double rhs;
  };
  std::vector<Con> cons;
  std::vector<double> init_scale;
};

struct RealIterate {
  std::vector<RealMatrix> x, s;
  std::vector<double> y;
};

// Structural consistency of the equality system: Gaussian elimination on the
// augmented [A | b]; a vanishing row with non-vanishing rhs is infeasible.
bool equalities_consistent(const RealBlockProblem& p) {
  size_t width = 0;
  std::vector<size_t> offset(p.dims.size());
  for (size_t b = 0; b < p.dims.size(); ++b) {
    offset[b] = width;
    width += static_cast<size_t>(p.dims[b]) * p.dims[b];
  }
  const size_t m = p.cons.size();
  std::vector<std::vector<double>> rows(m, std::vector<double>(width + 1, 0.0));
  for (size_t c = 0; c < m; ++c) {
    for (const auto& t : p.cons[c].terms) {
      const int n = p.dims[t.block];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[c][offset[t.block] + i * n + j] += t.matrix(i, j);
    }
    rows[c][width] = p.cons[c].rhs;
  }

  size_t rank_col = 0;
  for (size_t r = 0; r < m && rank_col < width; ++rank_col) {
    size_t pivot = r;
    for (size_t i = r + 1; i < m; ++i)
      if (std::abs(rows[i][rank_col]) > std::abs(rows[pivot][rank_col])) pivot = i;
    if (std::abs(rows[pivot][rank_col]) < 1e-12) continue;
    std::swap(rows[r], rows[pivot]);
    for (size_t i = r + 1; i < m; ++i) {
      const double f = rows[i][rank_col] / rows[r][rank_col];
      if (f == 0.0) continue;
      for (size_t j = rank_col; j <= width; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  for (size_t i = 0; i < m; ++i) {
    double coef = 0.0;
    for (size_t j = 0; j < width; ++j) coef = std::max(coef, std::abs(rows[i][j]));
    if (coef < 1e-10 && std::abs(rows[i][width]) > 1e-8) return false;
  }
  return true;
}

RealMatrix spectral_power(const RealMatrix& a, double exponent, double floor) {
  const auto eig = eig_symmetric(a);
  const int n = a.rows();
  RealMatrix out(n, n);
  for (int k = 0; k < n; ++k) {
    const double lam = std::max(eig.eigenvalues[k], floor);
    const double f = std::pow(lam, exponent);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) += f * eig.eigenvectors(i, k) * eig.eigenvectors(j, k);
  }
  return out;
}

// Largest step alpha with X + alpha*D staying PSD; X must be positive definite.
double boundary_step(const RealMatrix& x, const RealMatrix& d) {
  auto l = cholesky(x);
  if (!l) {
    // Tiny diagonal lift; X drifts onto the boundary only at convergence.
    RealMatrix xj = x;
    const double ridge = 1e-14 * std::max(1.0, x.max_abs());
    for (int i = 0; i < x.rows(); ++i) xj(i, i) += ridge;
    l = cholesky(xj);
    if (!l) return 0.0;
  }
  const int n = x.rows();
  // Linv via forward substitution on the identity.
  RealMatrix linv(n, n);
  for (int col = 0; col < n; ++col) {
    std::vector<double> e(n, 0.0);
    e[col] = 1.0;
    for (int i = 0; i < n; ++i) {
      double s = e[i];
      for (int k = 0; k < i; ++k) s -= (*l)(i, k) * linv(k, col);
      linv(i, col) = s / (*l)(i, i);
    }
  }
  const RealMatrix b = symmetrize(linv * d * linv.transpose());
  const auto eig = eig_symmetric(b);
  const double lo = eig.eigenvalues.front();
  if (lo >= 0.0) return std::numeric_limits<double>::infinity();
  return -1.0 / lo;
}

struct RealSolveResult {
  SdpStatus status = SdpStatus::max_iterations;
  RealIterate it;
  int iterations = 0;
  double mu = 0.0;
};

RealSolveResult solve_real(const RealBlockProblem& p, const SolverOptions& opt) {
  const size_t nb = p.dims.size();
  const size_t m = p.cons.size();
  int total_dim = 0;
  for (int d : p.dims) total_dim += d;

  double cost_scale = 1.0, rhs_scale = 1.0;
  for (const auto& c : p.cost) cost_scale = std::max(cost_scale, c.max_abs());
  for (const auto& c : p.cons) rhs_scale = std::max(rhs_scale, std::abs(c.rhs));

  RealIterate it;
  it.x.reserve(nb);
  it.s.reserve(nb);
  for (size_t b = 0; b < nb; ++b) {
    it.x.push_back(p.init_scale[b] * RealMatrix::identity(p.dims[b]));
    it.s.push_back(cost_scale * RealMatrix::identity(p.dims[b]));
  }
  it.y.assign(m, 0.0);

  RealSolveResult result;
  RealIterate best = it;
  double best_score = std::numeric_limits<double>::infinity();
  int stalled = 0;

  auto apply_A = [&](const std::vector<RealMatrix>& x) {
    std::vector<double> out(m, 0.0);
    for (size_t c = 0; c < m; ++c)
      for (const auto& t : p.cons[c].terms) out[c] += inner(t.matrix, x[t.block]);
    return out;
  };
  auto apply_AT = [&](const std::vector<double>& y) {
    std::vector<RealMatrix> out;
    out.reserve(nb);
    for (size_t b = 0; b < nb; ++b) out.push_back(RealMatrix(p.dims[b], p.dims[b]));
    for (size_t c = 0; c < m; ++c) {
      if (y[c] == 0.0) continue;
      for (const auto& t : p.cons[c].terms) out[t.block] += y[c] * t.matrix;
    }
    return out;
  };

  for (int iter = 0; iter <= opt.max_iterations; ++iter) {
    // Residuals and objective values.
    const std::vector<double> ax = apply_A(it.x);
    std::vector<double> rp(m);
    double pres = 0.0;
    for (size_t c = 0; c < m; ++c) {
      rp[c] = p.cons[c].rhs - ax[c];
      pres = std::max(pres, std::abs(rp[c]));
    }
    pres /= (1.0 + rhs_scale);

    const std::vector<RealMatrix> aty = apply_AT(it.y);
    std::vector<RealMatrix> rd;
    rd.reserve(nb);
    double dres = 0.0;
    for (size_t b = 0; b < nb; ++b) {
      RealMatrix r = p.cost[b] - it.s[b] - aty[b];
      dres = std::max(dres, r.max_abs());
      rd.push_back(std::move(r));
    }
    dres /= (1.0 + cost_scale);

    double pobj = 0.0, dobj = 0.0, cgap = 0.0;
    for (size_t b = 0; b < nb; ++b) {
      pobj += inner(p.cost[b], it.x[b]);
      cgap += inner(it.x[b], it.s[b]);
    }
    for (size_t c = 0; c < m; ++c) dobj += it.y[c] * p.cons[c].rhs;
    const double rel = 1.0 + std::abs(pobj) + std::abs(dobj);
    const double mu = cgap / total_dim;
    result.mu = mu;
    result.iterations = iter;

    const double score = pres + dres + cgap / rel;
    if (score < best_score) {
      best_score = score;
      best = it;
    }

    if (pres <= opt.feasibility_tolerance && dres <= opt.feasibility_tolerance &&
        cgap / rel <= opt.gap_tolerance && std::abs(pobj - dobj) / rel <= opt.gap_tolerance &&
        pobj - dobj >= -2e-10 * rel) {  // keep weak duality intact on exit
      result.status = SdpStatus::optimal;
      result.it = it;
      return result;
    }
    // Dual objective running away with small dual residual certifies that no
    // primal feasible point exists.
    if (std::abs(dobj) > 1e9 * (1.0 + rhs_scale) && dres <= 1e-7) {
      result.status = SdpStatus::infeasible;
      result.it = it;
      return result;
    }
    if (iter == opt.max_iterations || stalled >= 3) break;

    // Nesterov-Todd scaling per block: W = S^-1/2 (S^1/2 X S^1/2)^1/2 S^-1/2,
    // factored as W = G G^T.
    std::vector<RealMatrix> w(nb), g(nb), sinv(nb);
    bool scaling_ok = true;
    for (size_t b = 0; b < nb; ++b) {
      const RealMatrix sh = spectral_power(it.s[b], 0.5, 1e-300);
      const RealMatrix shi = spectral_power(it.s[b], -0.5, 1e-300);
      sinv[b] = spectral_power(it.s[b], -1.0, 1e-300);
      const RealMatrix t = symmetrize(sh * it.x[b] * sh);
      const auto te = eig_symmetric(t);
      if (te.eigenvalues.front() <= 0.0) scaling_ok = false;
      const int n = p.dims[b];
      RealMatrix qscaled(n, n);
      for (int k = 0; k < n; ++k) {
        const double f = std::pow(std::max(te.eigenvalues[k], 1e-300), 0.25);
        for (int i = 0; i < n; ++i) qscaled(i, k) = f * te.eigenvectors(i, k);
      }
      g[b] = shi * qscaled;
      w[b] = symmetrize(g[b] * g[b].transpose());
    }
    if (!scaling_ok) break;

    // Schur complement M_ij = sum_b <G^T A_i G, G^T A_j G>.
    std::vector<std::vector<RealBlockProblem::Term>> atil(m);
    for (size_t c = 0; c < m; ++c)
      for (const auto& t : p.cons[c].terms)
        atil[c].push_back({t.block, symmetrize(g[t.block].transpose() * t.matrix * g[t.block])});
    RealMatrix schur(static_cast<int>(m), static_cast<int>(m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i; j < m; ++j) {
        double v = 0.0;
        for (const auto& ti : atil[i])
          for (const auto& tj : atil[j])
            if (ti.block == tj.block) v += inner(ti.matrix, tj.matrix);
        schur(static_cast<int>(i), static_cast<int>(j)) = v;
        schur(static_cast<int>(j), static_cast<int>(i)) = v;
      }
    std::optional<RealMatrix> lschur;
    double ridge = 0.0;
    for (int attempt = 0; attempt < 6 && !lschur; ++attempt) {
      RealMatrix sj = schur;
      if (attempt > 0) {
        ridge = (ridge == 0.0 ? 1e-13 * (1.0 + schur.max_abs()) : ridge * 100.0);
        for (size_t i = 0; i < m; ++i) sj(static_cast<int>(i), static_cast<int>(i)) += ridge;
      }
      lschur = cholesky(sj);
    }
    if (!lschur) break;

    // One Newton direction for a given complementarity target Rc:
    //   dX = Rc - W dS W, dS = Rd - AT(dy), A(dX) = rp.
    auto direction = [&](const std::vector<RealMatrix>& rc, std::vector<RealMatrix>& dx,
                         std::vector<double>& dy, std::vector<RealMatrix>& ds) {
      std::vector<double> rhs(m, 0.0);
      std::vector<RealMatrix> wrdw(nb);
      for (size_t b = 0; b < nb; ++b) wrdw[b] = symmetrize(w[b] * rd[b] * w[b]);
      for (size_t c = 0; c < m; ++c) {
        double v = rp[c];
        for (const auto& t : p.cons[c].terms)
          v += inner(t.matrix, wrdw[t.block]) - inner(t.matrix, rc[t.block]);
        rhs[c] = v;
      }
      dy = rhs;
      cholesky_solve(*lschur, dy);
      const std::vector<RealMatrix> atdy = apply_AT(dy);
      dx.clear();
      ds.clear();
      for (size_t b = 0; b < nb; ++b) {
        RealMatrix dsb = rd[b] - atdy[b];
        dx.push_back(symmetrize(rc[b] - w[b] * symmetrize(dsb) * w[b]));
        ds.push_back(symmetrize(std::move(dsb)));
      }
    };

    // Predictor.
    std::vector<RealMatrix> rc(nb);
    for (size_t b = 0; b < nb; ++b) rc[b] = -1.0 * it.x[b];
    std::vector<RealMatrix> dxa, dsa;
    std::vector<double> dya;
    direction(rc, dxa, dya, dsa);

    double apa = 1.0, ada = 1.0;
    for (size_t b = 0; b < nb; ++b) {
      apa = std::min(apa, boundary_step(it.x[b], dxa[b]));
      ada = std::min(ada, boundary_step(it.s[b], dsa[b]));
    }
    double mu_aff = 0.0;
    for (size_t b = 0; b < nb; ++b) {
      RealMatrix xa = it.x[b] + std::min(1.0, apa) * dxa[b];
      RealMatrix sa = it.s[b] + std::min(1.0, ada) * dsa[b];
      mu_aff += inner(xa, sa);
    }
    mu_aff /= total_dim;
    double sigma = std::pow(std::clamp(mu_aff / std::max(mu, 1e-300), 0.0, 1.0), 3);
    sigma = std::clamp(sigma, 1e-6, 0.9999);

    // Combined centering direction.
    for (size_t b = 0; b < nb; ++b) rc[b] = sigma * mu * sinv[b] - it.x[b];
    std::vector<RealMatrix> dx, ds;
    std::vector<double> dy;
    direction(rc, dx, dy, ds);

    double ap = std::numeric_limits<double>::infinity(), ad = ap;
    for (size_t b = 0; b < nb; ++b) {
      ap = std::min(ap, boundary_step(it.x[b], dx[b]));
      ad = std::min(ad, boundary_step(it.s[b], ds[b]));
    }
    ap = std::min(1.0, opt.step_fraction * ap);
    ad = std::min(1.0, opt.step_fraction * ad);
    if (ap < 1e-8 && ad < 1e-8)
      ++stalled;
    else
      stalled = 0;

    for (size_t b = 0; b < nb; ++b) {
      it.x[b] = symmetrize(it.x[b] + ap * dx[b]);
      it.s[b] = symmetrize(it.s[b] + ad * ds[b]);
    }
    for (size_t c = 0; c < m; ++c) it.y[c] += ad * dy[c];
  }

  result.status = SdpStatus::max_iterations;
  result.it = best;
  return result;
}

}  // namespace

SdpSolution solve(const SdpProblem& p, double gap_tolerance) {
  SolverOptions opt;
  opt.gap_tolerance = gap_tolerance;
  return solve(p, opt);
}

SdpSolution solve(const SdpProblem& p, const SolverOptions& opt) {
  if (p.blocks.empty()) throw std::invalid_argument("solve: problem has no blocks");
  if (p.costs.size() != p.blocks.size())
    throw std::invalid_argument("solve: cost count does not match block count");
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.costs[b].rows() != p.blocks[b].dim || p.costs[b].cols() != p.blocks[b].dim)
      throw std::invalid_argument("solve: cost matrix shape mismatch for block " + p.blocks[b].label);
    if (!p.costs[b].is_hermitian())
      throw std::invalid_argument("solve: cost matrix for block " + p.blocks[b].label +
                                  " is not Hermitian");
  }
  int var_dim = 0;
  for (const auto& b : p.blocks) var_dim += b.dim;
  if (var_dim > 64) throw std::invalid_argument("solve: total variable dimension exceeds 64");
  for (const auto& c : p.constraints)
    for (const auto& t : c.terms) {
      if (t.block < 0 || t.block >= static_cast<int>(p.blocks.size()))
        throw std::invalid_argument("solve: constraint references unknown block");
      if (t.matrix.rows() != p.blocks[t.block].dim || !t.matrix.is_hermitian())
        throw std::invalid_argument("solve: constraint matrix is not Hermitian of block shape");
    }

  // Real symmetric embedding; cost and constraint matrices are halved so that
  // inner products against embedded variables reproduce the complex values.
  RealBlockProblem rp;
  rp.dims.reserve(p.blocks.size());
  for (const auto& b : p.blocks) rp.dims.push_back(2 * b.dim);
  for (const auto& c : p.costs) rp.cost.push_back(0.5 * real_embedding(c));
  for (const auto& c : p.constraints) {
    RealBlockProblem::Con rc;
    rc.rhs = c.rhs;
    for (const auto& t : c.terms) rc.terms.push_back({t.block, 0.5 * real_embedding(t.matrix)});
    rp.cons.push_back(std::move(rc));
  }
  rp.init_scale.assign(p.blocks.size(), 1.0);
  if (!p.completeness_blocks.empty()) {
    const double f = 1.0 / static_cast<double>(p.completeness_blocks.size());
    for (int b : p.completeness_blocks) rp.init_scale[b] = f;
  }

  SdpSolution out;
  if (!equalities_consistent(rp)) {
    out.status = SdpStatus::infeasible;
    out.primal.assign(p.blocks.size(), ComplexMatrix());
    out.dual_slacks.assign(p.blocks.size(), ComplexMatrix());
    out.dual.assign(p.constraints.size(), 0.0);
    return out;
  }

  const RealSolveResult res = solve_real(rp, opt);
  out.status = res.status;
  out.iterations = res.iterations;
  out.dual = res.it.y;

  out.primal.reserve(p.blocks.size());
  for (size_t b = 0; b < p.blocks.size(); ++b) out.primal.push_back(from_real_embedding(res.it.x[b]));

  // Dual slacks recomputed exactly from the multipliers.
  std::vector<ComplexMatrix> aty(p.blocks.size());
  for (size_t b = 0; b < p.blocks.size(); ++b) aty[b] = ComplexMatrix(p.blocks[b].dim, p.blocks[b].dim);
  for (size_t c = 0; c < p.constraints.size(); ++c)
    for (const auto& t : p.constraints[c].terms) aty[t.block] += out.dual[c] * t.matrix;
  double dual_res = 0.0;
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    ComplexMatrix s = p.costs[b] - aty[b];
    dual_res = std::max(dual_res, (s - from_real_embedding(res.it.s[b])).max_abs());
    out.dual_slacks.push_back(std::move(s));
  }
  out.dual_residual = dual_res;

  out.primal_value = 0.0;
  out.complementarity = 0.0;
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    out.primal_value += inner(p.costs[b], out.primal[b]);
    out.complementarity += inner(out.primal[b], out.dual_slacks[b]);
  }
  out.dual_value = 0.0;
  double prim_res = 0.0;
  for (size_t c = 0; c < p.constraints.size(); ++c) {
    out.dual_value += out.dual[c] * p.constraints[c].rhs;
    double v = -p.constraints[c].rhs;
    for (const auto& t : p.constraints[c].terms) v += inner(t.matrix, out.primal[t.block]);
    prim_res = std::max(prim_res, std::abs(v));
  }
  out.primal_residual = prim_res;
  out.gap = std::abs(out.primal_value - out.dual_value);

  if (out.status == SdpStatus::optimal) {
    // Honest downgrade if the unembedded solution does not meet the contract.
    bool ok = prim_res <= tol::kConstraint;
    for (const auto& x : out.primal)
      if (!is_psd(x, tol::kPsdFloor).psd) ok = false;
    if (!ok) out.status = SdpStatus::max_iterations;
  }
  return out;
}

CertificateReport dual_certificate(const SdpProblem& p, const SdpSolution& s, double tolerance) {
  CertificateReport rep;
  rep.weak_duality_slack = s.primal_value - s.dual_value;
  rep.complementarity = s.complementarity;
  rep.primal_residual = s.primal_residual;
  rep.dual_min_eigenvalue = std::numeric_limits<double>::infinity();
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    const auto check = is_psd(hermitize(s.dual_slacks[b]), -1.0);
    rep.block_min_eigenvalues.push_back(check.min_eigenvalue);
    rep.dual_min_eigenvalue = std::min(rep.dual_min_eigenvalue, check.min_eigenvalue);
  }
  if (rep.dual_min_eigenvalue < -tolerance) {
    rep.failure = "dual slack not PSD";
    return rep;
  }
  if (rep.weak_duality_slack < -tolerance) {
    rep.failure = "weak duality violated";
    return rep;
  }
  if (rep.primal_residual > tol::kConstraint) {
    rep.failure = "primal constraints violated";
    return rep;
  }
  if (std::abs(rep.complementarity) > std::max(tolerance, 10.0 * tol::kGap) *
                                          (1.0 + std::abs(s.primal_value) + std::abs(s.dual_value))) {
    rep.failure = "complementarity gap too large";
    return rep;
  }
  rep.certified = true;
  return rep;
}

FeasiblePointReport verify_feasible_point(const SdpProblem& p, const std::vector<ComplexMatrix>& candidate,
                                          double tolerance) {
  if (candidate.size() != p.blocks.size())
    throw std::invalid_argument("verify_feasible_point: candidate block count mismatch");
  FeasiblePointReport rep;
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (candidate[b].rows() != p.blocks[b].dim || candidate[b].cols() != p.blocks[b].dim)
      throw std::invalid_argument("verify_feasible_point: candidate shape mismatch for block " +
                                  p.blocks[b].label);
    const auto check = is_psd(hermitize(candidate[b]), -1.0);
    rep.block_min_eigenvalues.push_back(check.min_eigenvalue);
    rep.min_eigenvalue = std::min(rep.min_eigenvalue, check.min_eigenvalue);
    rep.objective += inner(p.costs[b], candidate[b]);
  }
  for (const auto& c : p.constraints) {
    double v = -c.rhs;
    for (const auto& t : c.terms) v += inner(t.matrix, candidate[t.block]);
    rep.constraint_residual = std::max(rep.constraint_residual, std::abs(v));
  }
  rep.valid = rep.min_eigenvalue >= -tolerance && rep.constraint_residual <= tolerance;
  return rep;
}

}  // namespace antidist
