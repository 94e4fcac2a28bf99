// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <string>

#include <json.hpp>

#include "antidist/exclusion.hpp"
#include "antidist/locc.hpp"

namespace antidist {

// File formats. Complex numbers are [re, im] pairs, matrices row-major.
// State and party indices in files are 1-based, matching printed reports;
// the in-memory API is 0-based throughout.

nlohmann::json ensemble_to_json(const Ensemble& e);
Ensemble ensemble_from_json(const nlohmann::json& j);
Ensemble load_ensemble(const std::string& path);

nlohmann::json povm_to_json(const Povm& p);
Povm povm_from_json(const nlohmann::json& j);
Povm load_povm(const std::string& path);

nlohmann::json protocol_to_json(const ProtocolNode& root);
ProtocolNode protocol_from_json(const nlohmann::json& j);
ProtocolNode load_protocol(const std::string& path);

nlohmann::json report_to_json(const ExclusionReport& rep);
nlohmann::json certificate_to_json(const CertificateReport& rep);

/// Round-trip support for machine-readable reports: extracts the fields that
/// define the report schema (value, value_unnormalized, strong, povm,
/// certificate residuals).
struct ParsedReport {
  double value = 0.0;
  double value_unnormalized = 0.0;
  bool perfect = false;
  Povm povm;
};
ParsedReport report_from_json(const nlohmann::json& j);

}  // namespace antidist
