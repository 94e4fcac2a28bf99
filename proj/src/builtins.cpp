// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "antidist/builtins.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace antidist {

namespace {

std::map<std::string, double> parse_params(const std::string& spec, std::string& name) {
  std::map<std::string, double> params;
  const size_t colon = spec.find(':');
  name = spec.substr(0, colon);
  if (colon == std::string::npos) return params;
  std::stringstream rest(spec.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("builtin ensemble: malformed parameter \"" + item + "\"");
    try {
      params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("builtin ensemble: bad numeric value in \"" + item + "\"");
    }
  }
  return params;
}

Ensemble single_party(std::vector<PureState> states, std::vector<std::string> labels) {
  std::vector<EnsembleState> es;
  for (auto& s : states) es.push_back(EnsembleState::product({std::move(s)}));
  const int dim = es.front().flat.dim();
  return Ensemble::make({dim}, std::move(es), {}, std::move(labels));
}

Ensemble make_xanti(double eps) {
  const PureState a1 = make_named_state("0");
  const PureState a2 = make_named_state("+");
  const PureState a3 = make_named_state("v+");
  const PureState a4 = make_named_state("v-");
  std::vector<EnsembleState> states{
      EnsembleState::product({a1, make_named_state("phi1_bob", {eps})}),
      EnsembleState::product({a2, make_named_state("phi2_bob", {eps})}),
      EnsembleState::product({a3, make_named_state("phi3_bob", {eps})}),
      EnsembleState::product({a4, make_named_state("phi4_bob", {eps})}),
  };
  return Ensemble::make({2, 4}, std::move(states), {}, {"phi1", "phi2", "phi3", "phi4"});
}

Ensemble make_pbr(double theta) {
  const PureState p = make_named_state("plus_theta", {theta});
  const PureState m = make_named_state("minus_theta", {theta});
  std::vector<EnsembleState> states{
      EnsembleState::product({p, p}), EnsembleState::product({p, m}),
      EnsembleState::product({m, p}), EnsembleState::product({m, m})};
  return Ensemble::make({2, 2}, std::move(states), {},
                        {"|+t>|+t>", "|+t>|-t>", "|-t>|+t>", "|-t>|-t>"});
}

}  // namespace

Ensemble make_builtin_ensemble(const std::string& spec) {
  std::string name;
  const auto params = parse_params(spec, name);
  auto param = [&](const std::string& key, double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };

  if (name == "eq-x1") {
    std::vector<EnsembleState> states{
        EnsembleState::product({make_named_state("0"), make_named_state("0")}),
        EnsembleState::product({make_named_state("+"), make_named_state("1")}),
        EnsembleState::product({make_named_state("v+"), make_named_state("+")}),
        EnsembleState::product({make_named_state("v-"), make_named_state("-")})};
    return Ensemble::make({2, 2}, std::move(states), {},
                          {"|0>|0>", "|+>|1>", "|v+>|+>", "|v->|->"});
  }
  if (name == "eq-xanti") return make_xanti(param("eps", 0.5));
  if (name == "eq-pbr") {
    if (params.count("cos2theta")) {
      const double c = params.at("cos2theta");
      if (!(c > -1.0 && c < 1.0))
        throw std::invalid_argument("builtin ensemble: cos2theta outside (-1, 1)");
      return make_pbr(0.5 * std::acos(c));
    }
    return make_pbr(param("theta", M_PI / 8.0));
  }
  if (name == "eq-n2") {
    std::vector<EnsembleState> states{
        EnsembleState::product({make_named_state("0"), make_named_state("0")}),
        EnsembleState::product({make_named_state("1"), make_named_state("1")}),
        EnsembleState::product({make_named_state("+"), make_named_state("eta1")}),
        EnsembleState::product({make_named_state("-"), make_named_state("eta2")})};
    return Ensemble::make({2, 2}, std::move(states), {},
                          {"|0>|0>", "|1>|1>", "|+>|eta1>", "|->|eta2>"});
  }
  if (name == "eq-pr") {
    const PureState z = make_named_state("0");
    const PureState p = make_named_state("+");
    std::vector<EnsembleState> states{EnsembleState::product({z, z, z}),
                                      EnsembleState::product({z, p, p}),
                                      EnsembleState::product({p, p, z})};
    return Ensemble::make({2, 2, 2}, std::move(states), {}, {"|000>", "|0++>", "|++0>"});
  }
  if (name == "eq-necessary") {
    std::vector<EnsembleState> states{
        EnsembleState::product({make_named_state("0"), make_named_state("+")}),
        EnsembleState::product({make_named_state("+"), make_named_state("0")})};
    const double r = 1.0 / std::sqrt(2.0);
    states.push_back(EnsembleState::from_flat(PureState({0.0, r, r, 0.0})));
    return Ensemble::make({2, 2}, std::move(states), {}, {"psi1", "psi2", "psi3"});
  }
  if (name == "thm5") {
    const int d = static_cast<int>(param("d", 2.0));
    if (d < 2 || d > 8) throw std::invalid_argument("builtin ensemble: thm5 needs 2 <= d <= 8");
    std::vector<double> r(d - 1, std::sqrt(0.75 / (d - 1)));
    std::vector<PureState> zeta;
    for (int i = 1; i < d; ++i) {
      std::vector<cplx> v(d, cplx(0.0));
      v[i] = 1.0;
      zeta.emplace_back(v);
    }
    return theorem5_family(d, r, zeta);
  }
  if (name == "appendix-a") {
    return single_party({make_named_state("0"), make_named_state("+"), make_named_state("v+"),
                         make_named_state("v-")},
                        {"|0>", "|+>", "|v+>", "|v->"});
  }
  if (name == "xanti-bob") {
    const double eps = param("eps", 0.5);
    return single_party({make_named_state("phi1_bob", {eps}), make_named_state("phi2_bob", {eps}),
                         make_named_state("phi3_bob", {eps}), make_named_state("phi4_bob", {eps})},
                        {"phi1B", "phi2B", "phi3B", "phi4B"});
  }
  throw std::invalid_argument("builtin ensemble: unknown name \"" + name + "\" (known: " +
                              [] {
                                std::string s;
                                for (const auto& n : builtin_ensemble_names()) s += n + " ";
                                return s;
                              }() +
                              ")");
}

std::vector<std::string> builtin_ensemble_names() {
  return {"eq-x1", "eq-xanti", "eq-pbr", "eq-n2", "eq-pr", "eq-necessary", "thm5",
          "appendix-a", "xanti-bob"};
}

namespace {

ComplexMatrix real4(const double (&m)[4][4]) {
  ComplexMatrix out(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = m[i][j];
  return out;
}

}  // namespace

Povm reference_qubit_quad_povm() {
  const double s3 = std::sqrt(3.0) / 2.0;
  const double r2 = 1.0 / std::sqrt(2.0);
  Povm p;
  p.subsets = x_subsets(4, 1);
  p.operators = {0.5506 * ComplexMatrix::outer({0.0, 1.0}),
                 0.3483 * ComplexMatrix::outer({r2, -r2}),
                 0.3495 * ComplexMatrix::outer({s3, -0.5}),
                 0.7517 * ComplexMatrix::outer({s3, 0.5})};
  return p;
}

Povm reference_pair_povm_eps_half() {
  const double n12[4][4] = {{0.0053, 0.0031, 0.0467, 0.0362},
                            {0.0031, 0.0018, 0.0270, 0.0209},
                            {0.0467, 0.0270, 0.4123, 0.3193},
                            {0.0362, 0.0209, 0.3193, 0.2474}};
  const double n13[4][4] = {{0.0053, 0.0451, -0.0127, 0.0362},
                            {0.0451, 0.3836, -0.108, 0.308},
                            {-0.0127, -0.108, 0.0304, -0.0867},
                            {0.0362, 0.308, -0.0867, 0.2474}};
  const double n14[4][4] = {{0.0053, 0.0451, 0.0319, -0.0213},
                            {0.0451, 0.3836, 0.2712, -0.1816},
                            {0.0319, 0.2712, 0.1918, -0.1284},
                            {-0.0213, -0.1816, -0.1284, 0.086}};
  const double n23[4][4] = {{0.328, -0.1413, -0.0999, 0.2849},
                            {-0.1413, 0.0608, 0.043, -0.1227},
                            {-0.0999, 0.043, 0.0304, -0.0867},
                            {0.2849, -0.1227, -0.0867, 0.2474}};
  const double n24[4][4] = {{0.328, -0.1413, 0.2508, -0.1679},
                            {-0.1413, 0.0608, -0.108, 0.0723},
                            {0.2508, -0.108, 0.1918, -0.1284},
                            {-0.1679, 0.0723, -0.1284, 0.086}};
  const double n34[4][4] = {{0.328, 0.1894, -0.2168, -0.1679},
                            {0.1894, 0.1093, -0.1252, -0.097},
                            {-0.2168, -0.1252, 0.1433, 0.111},
                            {-0.1679, -0.097, 0.111, 0.086}};
  Povm p;
  p.subsets = x_subsets(4, 2);
  p.operators = {real4(n12), real4(n13), real4(n14), real4(n23), real4(n24), real4(n34)};
  return p;
}

Povm reference_pair_povm_eps_third() {
  const double f12[4][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0.4, 0.3265}, {0, 0, 0.3265, 0.2667}};
  const double f13[4][4] = {{0, 0, 0, 0},
                            {0, 0.375, -0.0968, 0.3162},
                            {0, -0.0968, 0.0250, -0.0816},
                            {0, 0.3162, -0.0816, 0.2667}};
  const double f14[4][4] = {{0, 0, 0, 0},
                            {0, 0.3750, 0.2904, -0.1581},
                            {0, 0.2904, 0.2250, -0.1225},
                            {0, -0.1581, -0.1225, 0.0667}};
  const double f23[4][4] = {{0.3333, -0.1178, -0.0913, 0.2981},
                            {-0.1178, 0.0417, 0.0323, -0.1054},
                            {-0.0913, 0.0323, 0.025, -0.0816},
                            {0.2981, -0.1054, -0.0816, 0.2667}};
  const double f24[4][4] = {{0.3333, -0.1178, 0.2738, -0.1491},
                            {-0.1178, 0.0417, -0.0968, 0.0527},
                            {0.2738, -0.0968, 0.2250, -0.1225},
                            {-0.1491, 0.0527, -0.1225, 0.0667}};
  const double f34[4][4] = {{0.3333, 0.2357, -0.1826, -0.1491},
                            {0.2357, 0.1667, -0.1291, -0.1054},
                            {-0.1826, -0.1291, 0.1000, 0.0816},
                            {-0.1491, -0.1054, 0.0816, 0.0667}};
  Povm p;
  p.subsets = x_subsets(4, 2);
  p.operators = {real4(f12), real4(f13), real4(f14), real4(f23), real4(f24), real4(f34)};
  return p;
}

Povm reference_tilted_pair_povm() {
  // Recorded under the pair of states each operator annihilates. The source
  // table indexes these operators by the complementary (surviving) pair; the
  // zero rows and columns identify the excluded states unambiguously.
  const double kills_34[4][4] = {{0.0025, -0.0059, 0.0009, 0},
                                 {-0.0059, 0.0158, -0.0003, -0.0051},
                                 {0.0009, -0.0003, 0.0022, -0.0051},
                                 {0, -0.0051, -0.0051, 0.0140}};
  const double kills_24[4][4] = {{0.4722, 0.0657, 0.4898, 0},
                                 {0.0657, 0.0250, 0.0724, 0},
                                 {0.4898, 0.0724, 0.5092, 0},
                                 {0, 0, 0, 0}};
  const double kills_23[4][4] = {{0.5253, -0.0598, -0.4907, 0},
                                 {-0.0598, 0.0197, 0.0485, 0},
                                 {-0.4907, 0.0485, 0.4628, 0},
                                 {0, 0, 0, 0}};
  const double kills_14[4][4] = {{0, 0, 0, 0},
                                 {0, 0.3232, -0.0329, 0.4460},
                                 {0, -0.0329, 0.0057, -0.0540},
                                 {0, 0.4460, -0.0540, 0.6476}};
  const double kills_13[4][4] = {{0, 0, 0, 0},
                                 {0, 0.5873, -0.0845, -0.4408},
                                 {0, -0.0845, 0.0147, 0.0592},
                                 {0, -0.4408, 0.0592, 0.3384}};
  const double kills_12[4][4] = {
      {0, 0, 0, 0}, {0, 0.0290, -0.0032, 0}, {0, -0.0032, 0.0055, 0}, {0, 0, 0, 0}};
  Povm p;
  p.subsets = x_subsets(4, 2);  // {12, 13, 14, 23, 24, 34}
  p.operators = {real4(kills_12), real4(kills_13), real4(kills_14),
                 real4(kills_23), real4(kills_24), real4(kills_34)};
  return p;
}

}  // namespace antidist
