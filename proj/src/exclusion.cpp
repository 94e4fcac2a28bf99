// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "antidist/exclusion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace antidist {

std::vector<std::vector<int>> x_subsets(int n, int x) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Lexicographic enumeration; outcome labels read 12, 13, ..., 34.
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == x) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string subset_label(const std::vector<int>& subset) {
  std::string s;
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i && subset[i] >= 9) s += ',';  // stay unambiguous past one digit
    s += std::to_string(subset[i] + 1);
  }
  return s;
}

ComplexMatrix Povm::completeness_defect() const {
  ComplexMatrix sum(dim(), dim());
  for (const auto& op : operators) sum += op;
  return sum - ComplexMatrix::identity(dim());
}

double Povm::min_eigenvalue() const {
  double lo = 0.0;
  for (const auto& op : operators) lo = std::min(lo, is_psd(hermitize(op), -1.0).min_eigenvalue);
  return lo;
}

std::vector<double> Povm::traces() const {
  std::vector<double> t;
  t.reserve(operators.size());
  for (const auto& op : operators) t.push_back(std::real(op.trace()));
  return t;
}

namespace {

void validate_task(const ExclusionTask& t) {
  const int n = t.ensemble.size();
  if (t.x < 1 || t.x > n - 1) {
    std::ostringstream msg;
    msg << "exclusion task: x = " << t.x << " outside [1, " << n - 1 << "]";
    throw std::invalid_argument(msg.str());
  }
}

std::vector<double> task_weights(const ExclusionTask& t) {
  if (t.normalization == Normalization::normalized) return t.ensemble.priors;
  return std::vector<double>(t.ensemble.size(), 1.0);
}

}  // namespace

SdpProblem build_exclusion_sdp(const ExclusionTask& t) {
  validate_task(t);
  const int d = t.ensemble.global_dim();
  const auto subsets = x_subsets(t.ensemble.size(), t.x);
  const auto weights = task_weights(t);

  SdpProblem p;
  std::vector<int> participating;
  for (const auto& s : subsets) {
    ComplexMatrix cost(d, d);
    for (int k : s) cost += weights[k] * t.ensemble.states[k].flat.projector();
    participating.push_back(p.add_block(subset_label(s), d, hermitize(cost)));
  }
  p.add_completeness_family(d, participating);
  return p;
}

ExclusionReport exclusion_value(const ExclusionTask& t, const SolverOptions& options) {
  validate_task(t);
  const SdpProblem p = build_exclusion_sdp(t);
  const SdpSolution sol = solve(p, options);
  const auto subsets = x_subsets(t.ensemble.size(), t.x);

  ExclusionReport rep;
  rep.status = sol.status;
  rep.iterations = sol.iterations;
  rep.povm.subsets = subsets;
  rep.povm.operators = sol.primal;
  rep.outcome_traces = rep.povm.traces();

  const int n = t.ensemble.size();
  rep.state_errors.assign(n, 0.0);
  for (size_t si = 0; si < subsets.size(); ++si)
    for (int k : subsets[si])
      rep.state_errors[k] += inner(t.ensemble.states[k].flat.projector(), sol.primal[si]);

  double err_norm = 0.0, err_unnorm = 0.0;
  for (int k = 0; k < n; ++k) {
    err_norm += t.ensemble.priors[k] * rep.state_errors[k];
    err_unnorm += rep.state_errors[k];
  }
  rep.value = 1.0 - err_norm;
  rep.value_unnormalized = 1.0 - err_unnorm;
  rep.perfect = rep.value >= 1.0 - tol::kPerfect && rep.status == SdpStatus::optimal;
  rep.certificate = dual_certificate(p, sol);
  return rep;
}

namespace {

// Orthonormal basis (columns) of the orthogonal complement of the given
// vectors, via complex Gram-Schmidt against the computational basis.
ComplexMatrix orthogonal_complement(const std::vector<std::vector<cplx>>& span, int dim) {
  std::vector<std::vector<cplx>> basis;
  auto add = [&](std::vector<cplx> v) {
    for (const auto& b : basis) {
      cplx proj = 0.0;
      for (int i = 0; i < dim; ++i) proj += std::conj(b[i]) * v[i];
      for (int i = 0; i < dim; ++i) v[i] -= proj * b[i];
    }
    double norm = 0.0;
    for (const auto& a : v) norm += std::norm(a);
    norm = std::sqrt(norm);
    if (norm < 1e-9) return false;
    for (auto& a : v) a /= norm;
    basis.push_back(std::move(v));
    return true;
  };

  size_t span_rank = 0;
  for (const auto& v : span)
    if (add(v)) ++span_rank;
  std::vector<size_t> complement_cols;
  for (int i = 0; i < dim; ++i) {
    std::vector<cplx> e(dim, cplx(0.0));
    e[i] = 1.0;
    if (add(e)) complement_cols.push_back(basis.size() - 1);
  }
  ComplexMatrix p(dim, static_cast<int>(complement_cols.size()));
  for (size_t c = 0; c < complement_cols.size(); ++c)
    for (int i = 0; i < dim; ++i) p(i, static_cast<int>(c)) = basis[complement_cols[c]][i];
  return p;
}

}  // namespace

StrongCheckResult strong_exclusion_check(const ExclusionTask& t, double delta,
                                         const SolverOptions& options) {
  validate_task(t);
  StrongCheckResult res;

  const ExclusionReport base = exclusion_value(t, options);
  res.value = base.value;
  res.perfect = base.perfect;
  res.status = base.status;
  if (!base.perfect) {
    res.detail = "exclusion value below 1; strongness requires perfect exclusion";
    return res;
  }

  const int d = t.ensemble.global_dim();
  const auto subsets = x_subsets(t.ensemble.size(), t.x);

  // Face reduction: M_S = P_S Y_S P_S^dag with P_S spanning the complement of
  // the excluded states. If some subset spans the whole space its outcome is
  // forced null and strongness fails outright.
  std::vector<ComplexMatrix> maps;
  for (const auto& s : subsets) {
    std::vector<std::vector<cplx>> span;
    for (int k : s) span.push_back(t.ensemble.states[k].flat.amplitudes);
    ComplexMatrix p = orthogonal_complement(span, d);
    if (p.cols() == 0) {
      res.detail = "outcome " + subset_label(s) + " is forced null: its states span the space";
      return res;
    }
    maps.push_back(std::move(p));
  }

  SdpProblem p;
  std::vector<int> reduced_blocks;
  for (size_t si = 0; si < subsets.size(); ++si) {
    const int rd = maps[si].cols();
    reduced_blocks.push_back(p.add_block(subset_label(subsets[si]), rd, ComplexMatrix(rd, rd)));
  }
  ComplexMatrix minus_one(1, 1);
  minus_one(0, 0) = -1.0;
  const int t_block = p.add_block("t", 1, minus_one);  // maximize t
  std::vector<int> slack_blocks;
  for (const auto& s : subsets)
    slack_blocks.push_back(p.add_block("slack_" + subset_label(s), 1, ComplexMatrix(1, 1)));

  p.add_completeness_family(d, reduced_blocks, maps);
  ComplexMatrix one(1, 1);
  one(0, 0) = 1.0;
  for (size_t si = 0; si < subsets.size(); ++si) {
    SdpProblem::Constraint c;  // Tr(Y_S) - t - slack_S = 0
    c.rhs = 0.0;
    c.terms.push_back({reduced_blocks[si], ComplexMatrix::identity(maps[si].cols())});
    c.terms.push_back({t_block, minus_one});
    c.terms.push_back({slack_blocks[si], minus_one});
    p.constraints.push_back(std::move(c));
  }

  const SdpSolution sol = solve(p, options);
  res.status = sol.status;
  if (sol.status == SdpStatus::infeasible) {
    res.detail = "perfect-exclusion equalities are infeasible";
    return res;
  }
  res.min_trace = std::real(sol.primal[t_block](0, 0));
  res.strong = sol.status == SdpStatus::optimal && res.min_trace >= delta;
  if (res.strong || sol.status == SdpStatus::optimal) {
    res.witness.subsets = subsets;
    for (size_t si = 0; si < subsets.size(); ++si)
      res.witness.operators.push_back(
          hermitize(maps[si] * sol.primal[reduced_blocks[si]] * maps[si].adjoint()));
  }
  if (!res.strong && sol.status == SdpStatus::optimal) {
    res.detail = "max-min outcome trace " + std::to_string(res.min_trace) + " below delta";
  }
  return res;
}

InfeasibilityCertificate exact_exclusion_infeasibility(const Ensemble& e, int x,
                                                       const SolverOptions& options) {
  validate_task({e, x, false, Normalization::normalized});
  const int d = e.global_dim();
  const auto subsets = x_subsets(e.size(), x);

  std::vector<ComplexMatrix> killers;  // Pi_S = P_S P_S^dag
  for (const auto& s : subsets) {
    std::vector<std::vector<cplx>> span;
    for (int k : s) span.push_back(e.states[k].flat.amplitudes);
    const ComplexMatrix p = orthogonal_complement(span, d);
    killers.push_back(hermitize(p * p.adjoint()));
  }

  // Z = U - I with 0 <= U <= 2I keeps every variable in the cone.
  SdpProblem p;
  ComplexMatrix neg_id(d, d);
  for (int i = 0; i < d; ++i) neg_id(i, i) = -1.0;
  const int u_blk = p.add_block("u", d, neg_id);  // minimize -Tr U
  const int v_blk = p.add_block("v", d, ComplexMatrix(d, d));
  std::vector<int> slack_blks;
  for (const auto& s : subsets)
    slack_blks.push_back(p.add_block("s" + subset_label(s), d, ComplexMatrix(d, d)));

  auto hermitian_basis = [d]() {
    std::vector<ComplexMatrix> basis;
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        if (i == j) {
          ComplexMatrix b(d, d);
          b(i, i) = 1.0;
          basis.push_back(std::move(b));
        } else {
          ComplexMatrix re(d, d), im(d, d);
          re(i, j) = 0.5;
          re(j, i) = 0.5;
          im(i, j) = cplx(0.0, 0.5);
          im(j, i) = cplx(0.0, -0.5);
          basis.push_back(std::move(re));
          basis.push_back(std::move(im));
        }
      }
    return basis;
  }();

  for (const ComplexMatrix& b : hermitian_basis) {
    SdpProblem::Constraint c;  // U + V = 2I
    c.rhs = 2.0 * std::real(b.trace());
    c.terms.push_back({u_blk, b});
    c.terms.push_back({v_blk, b});
    p.constraints.push_back(std::move(c));
  }
  for (size_t si = 0; si < subsets.size(); ++si) {
    for (const ComplexMatrix& b : hermitian_basis) {
      SdpProblem::Constraint c;  // Pi U Pi + S = Pi (i.e. Pi (U - I) Pi <= 0)
      c.rhs = inner(b, killers[si]);
      c.terms.push_back({u_blk, hermitize(killers[si] * b * killers[si])});
      c.terms.push_back({slack_blks[si], b});
      p.constraints.push_back(std::move(c));
    }
  }

  // The certificate separates classes by sign, so it is solved tighter than
  // the default value tolerance.
  SolverOptions tight = options;
  tight.gap_tolerance = std::min(tight.gap_tolerance, 1e-10);
  tight.feasibility_tolerance = std::min(tight.feasibility_tolerance, 1e-10);
  const SdpSolution sol = solve(p, tight);
  InfeasibilityCertificate cert;
  cert.status = sol.status;
  cert.gamma = -sol.primal_value - d;
  return cert;
}

Ensemble theorem5_family(int d, const std::vector<double>& r, const std::vector<PureState>& zeta) {
  if (d < 2) throw std::invalid_argument("theorem5_family: d must be >= 2");
  if (r.size() != zeta.size() || r.size() != static_cast<size_t>(d - 1))
    throw std::invalid_argument("theorem5_family: need d-1 coefficients and directions");
  double norm2 = 0.25;
  for (double ri : r) norm2 += ri * ri;
  if (std::abs(norm2 - 1.0) > tol::kNormAuto)
    throw std::invalid_argument("theorem5_family: (1/2, r) is not a unit vector");

  std::vector<cplx> w(d, cplx(0.0));
  w[0] = 0.5;
  for (size_t i = 0; i < zeta.size(); ++i) {
    if (zeta[i].dim() != d) throw std::invalid_argument("theorem5_family: zeta dimension mismatch");
    if (std::abs(zeta[i].amplitudes[0]) > 1e-9)
      throw std::invalid_argument("theorem5_family: zeta_i must be orthogonal to |0>");
    for (size_t j = i + 1; j < zeta.size(); ++j)
      if (std::abs(overlap(zeta[i], zeta[j])) > 1e-9)
        throw std::invalid_argument("theorem5_family: zeta directions must be orthonormal");
    for (int k = 0; k < d; ++k) w[k] += r[i] * zeta[i].amplitudes[k];
  }
  PureState wv(w);

  std::vector<cplx> zero(d, cplx(0.0));
  zero[0] = 1.0;
  PureState zs(zero);
  return Ensemble::make({d, d}, {EnsembleState::product({zs, zs}), EnsembleState::product({zs, wv}),
                                 EnsembleState::product({wv, wv})});
}

FeasiblePointReport verify_povm(const ExclusionTask& t, const Povm& candidate, double tolerance) {
  const SdpProblem p = build_exclusion_sdp(t);
  if (candidate.subsets != x_subsets(t.ensemble.size(), t.x))
    throw std::invalid_argument("verify_povm: candidate outcomes do not match the task's subsets");
  return verify_feasible_point(p, candidate.operators, tolerance);
}

double achieved_value(const ExclusionTask& t, const Povm& candidate) {
  const auto weights = task_weights(t);
  double err = 0.0;
  for (size_t si = 0; si < candidate.subsets.size(); ++si)
    for (int k : candidate.subsets[si])
      err += weights[k] * inner(t.ensemble.states[k].flat.projector(), candidate.operators[si]);
  return 1.0 - err;
}

}  // namespace antidist
