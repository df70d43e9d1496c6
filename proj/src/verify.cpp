// Copyright 2026 The blockmzv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blockmzv/verify.hpp"

#include <sstream>

#include "blockmzv/errors.hpp"
#include "blockmzv/rational.hpp"

namespace blockmzv {

std::vector<RelationReport> full_report(const VerifyConfig& config) {
  std::vector<std::string> names = config.suites.empty() ? suite_names() : config.suites;
  for (const auto& n : names) {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == n;
    if (!known) throw InvalidInput("unknown suite '" + n + "'");
  }
  std::vector<RelationReport> out;
  for (const auto& s : suite_names()) {
    for (const auto& n : names) {
      if (n == s) {
        out.push_back(run_suite(s, config.max_weight, config.max_block_degree, config.options));
        break;
      }
    }
  }
  return out;
}

nlohmann::json to_json(const RelationReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) failures.push_back({{"input", f.input}, {"polynomial", f.polynomial}});
  return {{"relation_name", report.relation_name},
          {"parameters", report.parameters},
          {"instances_checked", report.instances_checked},
          {"status", report.passed() ? "pass" : "fail"},
          {"failure_count", report.failure_count},
          {"failures", failures},
          {"engine_notes", report.engine_notes}};
}

nlohmann::json report_document(const VerifyConfig& config, const std::vector<RelationReport>& reports) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& r : reports) suites.push_back(r.relation_name);
  nlohmann::json cfg = {{"max_weight", config.max_weight},
                        {"max_block_degree", config.max_block_degree},
                        {"suites", suites}};
  if (config.options.generators.is_mutated()) {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [k, c] : config.options.generators.overrides()) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& v : c) coeffs.push_back(to_string(v));
      m[std::to_string(k)] = coeffs;
    }
    cfg["q_coefficient_overrides"] = m;
  }
  nlohmann::json list = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    all = all && r.passed();
  }
  return {{"version", kVersion}, {"config", cfg}, {"reports", list}, {"status", all ? "pass" : "fail"}};
}

std::string report_text(const std::vector<RelationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.passed() ? "PASS " : "FAIL ") << r.relation_name << ": " << r.instances_checked
       << " instances, " << r.failure_count << " failures\n";
    for (const auto& n : r.engine_notes) os << "    note: " << n << "\n";
    for (const auto& f : r.failures) {
      os << "    counterexample: " << f.input;
      if (!f.polynomial.is_null()) os << " -> " << f.polynomial.dump();
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace blockmzv
