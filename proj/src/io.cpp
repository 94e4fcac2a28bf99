// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "antidist/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace antidist {

using nlohmann::json;

namespace {

json complex_to_json(const cplx& c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument(where + ": complex numbers must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const std::vector<cplx>& v) {
  json out = json::array();
  for (const cplx& c : v) out.push_back(complex_to_json(c));
  return out;
}

std::vector<cplx> vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected an amplitude array");
  std::vector<cplx> v;
  for (const auto& c : j) v.push_back(complex_from_json(c, where));
  return v;
}

json matrix_to_json(const ComplexMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(complex_to_json(m(i, j2)));
    out.push_back(std::move(row));
  }
  return out;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument(where + ": expected a matrix");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw std::invalid_argument(where + ": ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(i, c) = complex_from_json(j[i][c], where);
  }
  return m;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(path + ": " + err.what());
  }
  return j;
}

std::vector<int> subset_from_label(const std::string& label) {
  std::vector<int> subset;
  if (label.find(',') != std::string::npos) {
    std::stringstream ss(label);
    std::string item;
    while (std::getline(ss, item, ',')) subset.push_back(std::stoi(item) - 1);
  } else {
    for (char c : label) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("povm: bad outcome label \"" + label + "\"");
      subset.push_back(c - '1');
    }
  }
  return subset;
}

}  // namespace

json ensemble_to_json(const Ensemble& e) {
  json j;
  j["dims"] = e.dims;
  json states = json::array();
  for (const auto& s : e.states) {
    json js;
    if (s.is_product()) {
      js["kind"] = "product";
      json parts = json::array();
      for (const auto& p : s.parts) parts.push_back(vector_to_json(p.amplitudes));
      js["parts"] = std::move(parts);
    } else {
      js["kind"] = "flat";
      js["amplitudes"] = vector_to_json(s.flat.amplitudes);
    }
    states.push_back(std::move(js));
  }
  j["states"] = std::move(states);
  if (!e.uniform_priors()) j["priors"] = e.priors;
  if (!e.labels.empty()) j["labels"] = e.labels;
  return j;
}

Ensemble ensemble_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("ensemble: top level must be an object");
  if (!j.contains("dims") || !j["dims"].is_array())
    throw std::invalid_argument("ensemble: missing \"dims\" array");
  if (!j.contains("states") || !j["states"].is_array())
    throw std::invalid_argument("ensemble: missing \"states\" array");

  std::vector<int> dims = j["dims"].get<std::vector<int>>();
  std::vector<EnsembleState> states;
  int index = 0;
  for (const auto& js : j["states"]) {
    ++index;
    std::ostringstream where;
    where << "ensemble state " << index;
    if (!js.is_object() || !js.contains("kind"))
      throw std::invalid_argument(where.str() + ": missing \"kind\"");
    const std::string kind = js["kind"].get<std::string>();
    try {
      if (kind == "product") {
        if (!js.contains("parts")) throw std::invalid_argument("missing \"parts\"");
        std::vector<PureState> parts;
        for (const auto& p : js["parts"]) parts.emplace_back(vector_from_json(p, where.str()));
        states.push_back(EnsembleState::product(std::move(parts)));
      } else if (kind == "flat") {
        if (!js.contains("amplitudes")) throw std::invalid_argument("missing \"amplitudes\"");
        states.push_back(EnsembleState::from_flat(PureState(vector_from_json(js["amplitudes"], where.str()))));
      } else {
        throw std::invalid_argument("unknown kind \"" + kind + "\"");
      }
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument(where.str() + ": " + err.what());
    }
  }

  std::vector<double> priors;
  if (j.contains("priors")) priors = j["priors"].get<std::vector<double>>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return Ensemble::make(std::move(dims), std::move(states), std::move(priors), std::move(labels));
}

Ensemble load_ensemble(const std::string& path) { return ensemble_from_json(load_file(path)); }

json povm_to_json(const Povm& p) {
  json j = json::object();
  for (size_t i = 0; i < p.subsets.size(); ++i)
    j[subset_label(p.subsets[i])] = matrix_to_json(p.operators[i]);
  return j;
}

Povm povm_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("povm: expected an object keyed by outcome label");
  std::vector<std::pair<std::vector<int>, ComplexMatrix>> entries;
  for (const auto& [key, value] : j.items())
    entries.emplace_back(subset_from_label(key), matrix_from_json(value, "povm outcome " + key));
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Povm p;
  for (auto& [subset, matrix] : entries) {
    p.subsets.push_back(std::move(subset));
    p.operators.push_back(std::move(matrix));
  }
  return p;
}

Povm load_povm(const std::string& path) { return povm_from_json(load_file(path)); }

json protocol_to_json(const ProtocolNode& root) {
  json j;
  if (root.is_leaf()) {
    json ex = json::array();
    for (int k : root.exclude) ex.push_back(k + 1);
    j["exclude"] = std::move(ex);
    return j;
  }
  j["party"] = root.party + 1;
  json povm = json::array();
  for (const auto& op : root.povm) povm.push_back(matrix_to_json(op));
  j["povm"] = std::move(povm);
  json children = json::object();
  for (size_t o = 0; o < root.children.size(); ++o)
    children[std::to_string(o + 1)] = protocol_to_json(root.children[o]);
  j["children"] = std::move(children);
  return j;
}

ProtocolNode protocol_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("protocol: node must be an object");
  if (!j.contains("party")) {
    std::vector<int> claims;
    if (j.contains("exclude"))
      for (const auto& k : j["exclude"]) claims.push_back(k.get<int>() - 1);
    return ProtocolNode::leaf(std::move(claims));
  }
  const int party = j["party"].get<int>() - 1;
  if (!j.contains("povm") || !j["povm"].is_array() || j["povm"].empty())
    throw std::invalid_argument("protocol: measurement node needs a \"povm\" array");
  std::vector<ComplexMatrix> povm;
  for (const auto& op : j["povm"]) povm.push_back(matrix_from_json(op, "protocol povm"));
  std::vector<ProtocolNode> children(povm.size(), ProtocolNode::leaf({}));
  if (j.contains("children")) {
    for (const auto& [key, value] : j["children"].items()) {
      const int outcome = std::stoi(key) - 1;
      if (outcome < 0 || outcome >= static_cast<int>(povm.size()))
        throw std::invalid_argument("protocol: child outcome \"" + key + "\" out of range");
      children[outcome] = protocol_from_json(value);
    }
  }
  return ProtocolNode::measure(party, std::move(povm), std::move(children));
}

ProtocolNode load_protocol(const std::string& path) { return protocol_from_json(load_file(path)); }

json certificate_to_json(const CertificateReport& rep) {
  json j;
  j["certified"] = rep.certified;
  j["dual_min_eigenvalue"] = rep.dual_min_eigenvalue;
  j["weak_duality_slack"] = rep.weak_duality_slack;
  j["complementarity"] = rep.complementarity;
  j["primal_residual"] = rep.primal_residual;
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  return j;
}

json report_to_json(const ExclusionReport& rep) {
  json j;
  j["status"] = to_string(rep.status);
  j["value"] = rep.value;
  j["value_unnormalized"] = rep.value_unnormalized;
  j["perfect"] = rep.perfect;
  j["state_errors"] = rep.state_errors;
  j["outcome_traces"] = rep.outcome_traces;
  j["povm"] = povm_to_json(rep.povm);
  j["certificate"] = certificate_to_json(rep.certificate);
  return j;
}

ParsedReport report_from_json(const json& j) {
  ParsedReport rep;
  rep.value = j.at("value").get<double>();
  rep.value_unnormalized = j.at("value_unnormalized").get<double>();
  rep.perfect = j.at("perfect").get<bool>();
  rep.povm = povm_from_json(j.at("povm"));
  return rep;
}

}  // namespace antidist
