// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "antidist/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace antidist {

namespace {

double norm2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& a : v) s += std::norm(a);
  return std::sqrt(s);
}

}  // namespace

PureState::PureState(std::vector<cplx> amps) : amplitudes(std::move(amps)) {
  if (amplitudes.empty()) throw std::invalid_argument("PureState: empty amplitude vector");
  const double n = norm2(amplitudes);
  if (std::abs(n - 1.0) > tol::kNormAuto) {
    std::ostringstream msg;
    msg << "PureState: norm " << n << " is further than " << tol::kNormAuto << " from 1";
    throw std::invalid_argument(msg.str());
  }
  for (cplx& a : amplitudes) a /= n;
}

cplx overlap(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("overlap: dimension mismatch");
  cplx s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return s;
}

EnsembleState EnsembleState::product(std::vector<PureState> parts) {
  if (parts.empty()) throw std::invalid_argument("EnsembleState::product: no parts");
  EnsembleState s;
  std::vector<cplx> flat = parts.front().amplitudes;
  for (size_t i = 1; i < parts.size(); ++i) flat = kron(flat, parts[i].amplitudes);
  s.parts = std::move(parts);
  s.flat = PureState(std::move(flat));
  return s;
}

EnsembleState EnsembleState::from_flat(PureState global) {
  EnsembleState s;
  s.flat = std::move(global);
  return s;
}

int Ensemble::global_dim() const {
  int d = 1;
  for (int x : dims) d *= x;
  return d;
}

bool Ensemble::all_product() const {
  return std::all_of(states.begin(), states.end(), [](const EnsembleState& s) { return s.is_product(); });
}

bool Ensemble::uniform_priors(double tolerance) const {
  const double u = 1.0 / size();
  return std::all_of(priors.begin(), priors.end(), [&](double p) { return std::abs(p - u) <= tolerance; });
}

Ensemble Ensemble::make(std::vector<int> dims, std::vector<EnsembleState> states,
                        std::vector<double> priors, std::vector<std::string> labels) {
  if (states.size() < 2) throw std::invalid_argument("Ensemble: need at least two states");
  if (dims.empty()) throw std::invalid_argument("Ensemble: empty party structure");
  for (int d : dims)
    if (d < 2) throw std::invalid_argument("Ensemble: party dimensions must be >= 2");

  Ensemble e;
  e.dims = std::move(dims);
  const int gd = e.global_dim();
  for (size_t k = 0; k < states.size(); ++k) {
    const EnsembleState& s = states[k];
    if (s.flat.dim() != gd) {
      std::ostringstream msg;
      msg << "Ensemble: state " << k + 1 << " has dimension " << s.flat.dim() << ", expected " << gd;
      throw std::invalid_argument(msg.str());
    }
    if (s.is_product()) {
      if (s.parts.size() != e.dims.size())
        throw std::invalid_argument("Ensemble: product state party count mismatch");
      for (size_t p = 0; p < s.parts.size(); ++p)
        if (s.parts[p].dim() != e.dims[p])
          throw std::invalid_argument("Ensemble: product part dimension mismatch");
    }
  }
  e.states = std::move(states);

  if (priors.empty()) {
    e.priors.assign(e.states.size(), 1.0 / e.states.size());
  } else {
    if (priors.size() != e.states.size())
      throw std::invalid_argument("Ensemble: priors length mismatch");
    double sum = 0.0;
    for (double p : priors) {
      if (p < 0.0) throw std::invalid_argument("Ensemble: negative prior");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("Ensemble: priors must sum to 1");
    e.priors = std::move(priors);
  }

  if (!labels.empty() && labels.size() != e.states.size())
    throw std::invalid_argument("Ensemble: labels length mismatch");
  e.labels = std::move(labels);
  return e;
}

GramData gram(const Ensemble& e) {
  const int n = e.size();
  GramData g;
  g.overlaps = ComplexMatrix(n, n);
  g.squared_overlaps = RealMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx v = overlap(e.states[i].flat, e.states[j].flat);
      g.overlaps(i, j) = v;
      g.squared_overlaps(i, j) = std::norm(v);
    }
  return g;
}

namespace {

double get_param(const std::vector<double>& params, const std::string& name, double lo, double hi) {
  if (params.empty()) {
    throw std::invalid_argument("make_named_state: \"" + name + "\" needs a parameter");
  }
  const double p = params.front();
  if (!(p > lo && p < hi)) {
    std::ostringstream msg;
    msg << "make_named_state: \"" << name << "\" parameter " << p << " outside (" << lo << ", " << hi << ")";
    throw std::invalid_argument(msg.str());
  }
  return p;
}

// Dimension-4 family with every pairwise overlap equal to eps.
PureState bob_state(int index, double eps) {
  const double e = eps;
  const double c2 = (e - e * e) / std::sqrt(1.0 - e * e);
  switch (index) {
    case 1:
      return PureState({1.0, 0.0, 0.0, 0.0});
    case 2:
      return PureState({e, std::sqrt(1.0 - e * e), 0.0, 0.0});
    case 3:
      return PureState({e, c2, std::sqrt((1.0 - e) * (1.0 + 2.0 * e) / (1.0 + e)), 0.0});
    case 4:
      return PureState({e, c2, e * std::sqrt((1.0 - e) / ((1.0 + e) * (1.0 + 2.0 * e))),
                        std::sqrt((1.0 - e) * (1.0 + 3.0 * e) / (1.0 + 2.0 * e))});
    default:
      throw std::invalid_argument("bob_state: index out of range");
  }
}

}  // namespace

PureState make_named_state(const std::string& name, const std::vector<double>& params) {
  const double s3 = std::sqrt(3.0) / 2.0;
  const double r2 = 1.0 / std::sqrt(2.0);
  if (name == "0") return PureState({1.0, 0.0});
  if (name == "1") return PureState({0.0, 1.0});
  if (name == "+") return PureState({r2, r2});
  if (name == "-") return PureState({r2, -r2});
  if (name == "v+") return PureState({0.5, s3});
  if (name == "v-") return PureState({0.5, -s3});
  if (name == "eta1") return PureState({std::cos(M_PI / 6.0), std::sin(M_PI / 6.0)});
  if (name == "eta2") return PureState({std::cos(M_PI / 12.0), std::sin(M_PI / 12.0)});
  if (name == "plus_theta") {
    const double t = get_param(params, name, 0.0, M_PI / 2.0);
    return PureState({std::cos(t), std::sin(t)});
  }
  if (name == "minus_theta") {
    const double t = get_param(params, name, 0.0, M_PI / 2.0);
    return PureState({std::cos(t), -std::sin(t)});
  }
  if (name.size() == 8 && name.rfind("_bob") == 4 && name.rfind("phi", 0) == 0) {
    const int idx = name[3] - '0';
    if (idx >= 1 && idx <= 4) return bob_state(idx, get_param(params, name, 0.0, 1.0));
  }
  throw std::invalid_argument("make_named_state: unknown state \"" + name + "\"");
}

Ensemble marginal_set(const Ensemble& e, int party) {
  if (party < 0 || party >= e.parties())
    throw std::invalid_argument("marginal_set: party index out of range");
  std::vector<EnsembleState> locals;
  locals.reserve(e.size());
  for (int k = 0; k < e.size(); ++k) {
    if (!e.states[k].is_product()) {
      std::ostringstream msg;
      msg << "marginal_set: state " << k + 1 << " is not a product state";
      throw std::invalid_argument(msg.str());
    }
    locals.push_back(EnsembleState::product({e.states[k].parts[party]}));
  }
  return Ensemble::make({e.dims[party]}, std::move(locals), e.priors, e.labels);
}

Ensemble group_by_bipartition(const Ensemble& e, const std::vector<int>& block) {
  if (e.parties() < 3)
    throw std::invalid_argument("group_by_bipartition: need at least three parties");
  if (!e.all_product())
    throw std::invalid_argument("group_by_bipartition: all states must be product");

  std::vector<bool> in_block(e.parties(), false);
  for (int p : block) {
    if (p < 0 || p >= e.parties())
      throw std::invalid_argument("group_by_bipartition: party index out of range");
    if (in_block[p]) throw std::invalid_argument("group_by_bipartition: duplicate party in block");
    in_block[p] = true;
  }
  const int bsize = static_cast<int>(block.size());
  if (bsize == 0 || bsize == e.parties())
    throw std::invalid_argument("group_by_bipartition: block must be a proper nonempty subset");

  std::vector<int> complement;
  for (int p = 0; p < e.parties(); ++p)
    if (!in_block[p]) complement.push_back(p);

  auto fuse = [&](const EnsembleState& s, const std::vector<int>& group) {
    std::vector<cplx> flat = s.parts[group.front()].amplitudes;
    for (size_t i = 1; i < group.size(); ++i) flat = kron(flat, s.parts[group[i]].amplitudes);
    return PureState(std::move(flat));
  };

  int bdim = 1, cdim = 1;
  for (int p : block) bdim *= e.dims[p];
  for (int p : complement) cdim *= e.dims[p];

  std::vector<EnsembleState> grouped;
  grouped.reserve(e.size());
  for (const EnsembleState& s : e.states)
    grouped.push_back(EnsembleState::product({fuse(s, block), fuse(s, complement)}));
  return Ensemble::make({bdim, cdim}, std::move(grouped), e.priors, e.labels);
}

}  // namespace antidist
