// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "antidist/analytic.hpp"
#include "antidist/builtins.hpp"
#include "antidist/exclusion.hpp"
#include "antidist/io.hpp"
#include "antidist/locc.hpp"
#include "antidist/repro.hpp"

namespace py = pybind11;
using namespace antidist;

namespace {

using PyMatrix = std::vector<std::vector<cplx>>;

PyMatrix matrix_out(const ComplexMatrix& m) {
  PyMatrix out(m.rows(), std::vector<cplx>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

ComplexMatrix matrix_in(const PyMatrix& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  ComplexMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(m[i].size()) != cols)
      throw std::invalid_argument("matrix rows must have equal length");
    for (int j = 0; j < cols; ++j) out(i, j) = m[i][j];
  }
  return out;
}

Normalization norm_of(const std::string& s) {
  if (s == "normalized") return Normalization::normalized;
  if (s == "unnormalized") return Normalization::unnormalized;
  throw std::invalid_argument("normalization must be \"normalized\" or \"unnormalized\"");
}

py::dict povm_out(const Povm& p) {
  py::dict d;
  for (size_t i = 0; i < p.subsets.size(); ++i)
    d[py::cast(subset_label(p.subsets[i]))] = matrix_out(p.operators[i]);
  return d;
}

}  // namespace

PYBIND11_MODULE(_antidist, m) {
  m.doc() = "antidistinguishability and quantum state exclusion toolkit";

  py::class_<Ensemble>(m, "Ensemble")
      .def_property_readonly("dims", [](const Ensemble& e) { return e.dims; })
      .def_property_readonly("size", &Ensemble::size)
      .def_property_readonly("parties", &Ensemble::parties)
      .def_property_readonly("global_dim", &Ensemble::global_dim)
      .def_property_readonly("priors", [](const Ensemble& e) { return e.priors; })
      .def_property_readonly("labels", [](const Ensemble& e) { return e.labels; })
      .def("all_product", &Ensemble::all_product)
      .def("to_json", [](const Ensemble& e) { return ensemble_to_json(e).dump(); })
      .def("__repr__", [](const Ensemble& e) {
        return "<Ensemble n=" + std::to_string(e.size()) + " dim=" + std::to_string(e.global_dim()) +
               ">";
      });

  m.def("builtin_ensemble", &make_builtin_ensemble, py::arg("spec"),
        "named ensemble, e.g. \"eq-x1\" or \"eq-xanti:eps=0.4\"");
  m.def("builtin_ensemble_names", &builtin_ensemble_names);
  m.def("ensemble_from_json", [](const std::string& s) {
    return ensemble_from_json(nlohmann::json::parse(s));
  });
  m.def("load_ensemble", &load_ensemble, py::arg("path"));
  m.def("marginal_set", &marginal_set, py::arg("ensemble"), py::arg("party"));
  m.def("group_by_bipartition", &group_by_bipartition, py::arg("ensemble"), py::arg("block"));

  m.def("gram", [](const Ensemble& e) {
    const GramData g = gram(e);
    py::dict d;
    d["overlaps"] = matrix_out(g.overlaps);
    PyMatrix sq(g.squared_overlaps.rows(), std::vector<cplx>(g.squared_overlaps.cols()));
    std::vector<std::vector<double>> sqr(g.squared_overlaps.rows(),
                                         std::vector<double>(g.squared_overlaps.cols()));
    for (int i = 0; i < g.squared_overlaps.rows(); ++i)
      for (int j = 0; j < g.squared_overlaps.cols(); ++j) sqr[i][j] = g.squared_overlaps(i, j);
    d["squared_overlaps"] = sqr;
    return d;
  });

  py::class_<ThreeStateVerdict>(m, "ThreeStateVerdict")
      .def_readonly("condition_a", &ThreeStateVerdict::condition_a)
      .def_readonly("condition_b", &ThreeStateVerdict::condition_b)
      .def_readonly("antidistinguishable", &ThreeStateVerdict::antidistinguishable)
      .def_readonly("boundary", &ThreeStateVerdict::boundary)
      .def_readonly("sum", &ThreeStateVerdict::sum)
      .def_readonly("margin", &ThreeStateVerdict::margin);

  m.def("three_state_check",
        py::overload_cast<double, double, double, double>(&three_state_check), py::arg("x1"),
        py::arg("x2"), py::arg("x3"), py::arg("tolerance") = tol::kBoundary);
  m.def("three_state_check_ensemble",
        py::overload_cast<const Ensemble&, double>(&three_state_check), py::arg("ensemble"),
        py::arg("tolerance") = tol::kBoundary);
  m.def("equal_overlap_triple", &equal_overlap_triple, py::arg("eps"));

  py::class_<ExclusionReport>(m, "ExclusionReport")
      .def_readonly("value", &ExclusionReport::value)
      .def_readonly("value_unnormalized", &ExclusionReport::value_unnormalized)
      .def_readonly("perfect", &ExclusionReport::perfect)
      .def_readonly("state_errors", &ExclusionReport::state_errors)
      .def_readonly("outcome_traces", &ExclusionReport::outcome_traces)
      .def_property_readonly("status", [](const ExclusionReport& r) { return to_string(r.status); })
      .def_property_readonly("certified",
                             [](const ExclusionReport& r) { return r.certificate.certified; })
      .def_property_readonly("povm", [](const ExclusionReport& r) { return povm_out(r.povm); })
      .def("to_json", [](const ExclusionReport& r) { return report_to_json(r).dump(); });

  m.def(
      "exclusion_value",
      [](const Ensemble& e, int x, const std::string& normalization) {
        return exclusion_value({e, x, false, norm_of(normalization)});
      },
      py::arg("ensemble"), py::arg("x") = 1, py::arg("normalization") = "normalized");

  py::class_<StrongCheckResult>(m, "StrongCheckResult")
      .def_readonly("strong", &StrongCheckResult::strong)
      .def_readonly("perfect", &StrongCheckResult::perfect)
      .def_readonly("min_trace", &StrongCheckResult::min_trace)
      .def_readonly("value", &StrongCheckResult::value)
      .def_readonly("detail", &StrongCheckResult::detail)
      .def_property_readonly("witness",
                             [](const StrongCheckResult& r) { return povm_out(r.witness); });

  m.def(
      "strong_exclusion_check",
      [](const Ensemble& e, int x, double delta, const std::string& normalization) {
        return strong_exclusion_check({e, x, true, norm_of(normalization)}, delta);
      },
      py::arg("ensemble"), py::arg("x") = 1, py::arg("delta") = tol::kNullOutcome,
      py::arg("normalization") = "normalized");

  py::class_<InfeasibilityCertificate>(m, "InfeasibilityCertificate")
      .def_readonly("gamma", &InfeasibilityCertificate::gamma)
      .def_property_readonly("status",
                             [](const InfeasibilityCertificate& c) { return to_string(c.status); })
      .def("infeasible", &InfeasibilityCertificate::infeasible, py::arg("threshold") = 3e-8);

  m.def(
      "exact_exclusion_infeasibility",
      [](const Ensemble& e, int x) { return exact_exclusion_infeasibility(e, x); },
      py::arg("ensemble"), py::arg("x") = 1,
      "separation certificate: positive gamma witnesses that no zero-error "
      "x-exclusion measurement exists");

  m.def(
      "verify_povm",
      [](const Ensemble& e, int x, const py::dict& povm, double tolerance,
         const std::string& normalization) {
        std::vector<std::pair<std::string, ComplexMatrix>> entries;
        for (const auto& item : povm)
          entries.emplace_back(item.first.cast<std::string>(),
                               matrix_in(item.second.cast<PyMatrix>()));
        // Reuse the io parser for outcome-label handling.
        nlohmann::json jp = nlohmann::json::object();
        for (auto& [k, v] : entries) {
          nlohmann::json rows = nlohmann::json::array();
          for (int i = 0; i < v.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < v.cols(); ++c)
              row.push_back({v(i, c).real(), v(i, c).imag()});
            rows.push_back(std::move(row));
          }
          jp[k] = std::move(rows);
        }
        const Povm cand = povm_from_json(jp);
        const ExclusionTask task{e, x, false, norm_of(normalization)};
        const FeasiblePointReport rep = verify_povm(task, cand, tolerance);
        py::dict out;
        out["valid"] = rep.valid;
        out["objective"] = rep.objective;
        out["min_eigenvalue"] = rep.min_eigenvalue;
        out["constraint_residual"] = rep.constraint_residual;
        out["achieved_value"] = achieved_value(task, cand);
        return out;
      },
      py::arg("ensemble"), py::arg("x"), py::arg("povm"), py::arg("tolerance") = 5e-3,
      py::arg("normalization") = "normalized");

  py::class_<LoccDecision>(m, "LoccDecision")
      .def_readonly("antidistinguishable", &LoccDecision::antidistinguishable)
      .def_readonly("witness_party", &LoccDecision::witness_party)
      .def_readonly("marginal_values", &LoccDecision::marginal_values);

  m.def("product_locc_antidist_decision",
        [](const Ensemble& e) { return product_locc_antidist_decision(e); });

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("success", &SearchResult::success)
      .def_readonly("strong_success", &SearchResult::strong_success)
      .def_readonly("certified_impossible", &SearchResult::certified_impossible)
      .def_readonly("candidate", &SearchResult::candidate)
      .def_readonly("detail", &SearchResult::detail)
      .def_readonly("covered_subsets", &SearchResult::covered_subsets)
      .def_readonly("unreachable_subsets", &SearchResult::unreachable_subsets)
      .def("protocol_json",
           [](const SearchResult& r) { return protocol_to_json(r.protocol).dump(); });

  m.def(
      "two_step_search",
      [](const Ensemble& e, int starter, int x, bool strong) {
        return two_step_search(e, starter, x, strong);
      },
      py::arg("ensemble"), py::arg("starter"), py::arg("x") = 1, py::arg("strong") = false);

  py::class_<BipartitionScan>(m, "BipartitionScan")
      .def_readonly("global_value", &BipartitionScan::global_value)
      .def_readonly("global_perfect", &BipartitionScan::global_perfect)
      .def_readonly("genuine", &BipartitionScan::genuine)
      .def_property_readonly("bipartitions", [](const BipartitionScan& s) {
        py::list out;
        for (const auto& bp : s.bipartitions) {
          py::dict d;
          d["block"] = bp.block;
          d["locc_antidistinguishable"] = bp.locc_antidistinguishable;
          d["side_values"] = bp.side_values;
          out.append(std::move(d));
        }
        return out;
      });

  m.def("bipartition_scan", [](const Ensemble& e) { return bipartition_scan(e); });

  py::class_<ClaimReport>(m, "ClaimReport")
      .def_readonly("id", &ClaimReport::id)
      .def_readonly("reference", &ClaimReport::reference)
      .def_property_readonly("passed", [](const ClaimReport& r) { return r.pass; })
      .def_property_readonly("checks", [](const ClaimReport& r) {
        py::list out;
        for (const auto& c : r.checks) {
          py::dict d;
          d["what"] = c.what;
          d["measured"] = c.measured;
          d["expected"] = c.expected;
          d["pass"] = c.pass;
          out.append(std::move(d));
        }
        return out;
      });

  m.def("claim_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : claim_registry()) ids.push_back(c.id);
    return ids;
  });
  m.def("run_claim", [](const std::string& id) { return run_claim(id); }, py::arg("id"));
}
