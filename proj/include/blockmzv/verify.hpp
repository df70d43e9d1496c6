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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "blockmzv/generators.hpp"

namespace blockmzv {

struct SuiteOptions {
  GeneratorSet generators = GeneratorSet::closed_form();
  std::size_t weight_limit = 17;
  std::size_t block_degree_limit = 4;
};

struct Failure {
  std::string input;
  nlohmann::json polynomial;  // serialized CPoly, or null
};

struct RelationReport {
  std::string relation_name;
  nlohmann::json parameters;
  std::size_t instances_checked = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // at most 5 are kept
  std::vector<std::string> engine_notes;

  bool passed() const noexcept { return failure_count == 0; }
};

// The fourteen suite identifiers in report order.
const std::vector<std::string>& suite_names();

// Runs one suite over all instances within the bounds. Throws InvalidInput
// for an unknown name and ResourceLimit when a bound exceeds the limits.
RelationReport run_suite(std::string_view name, std::size_t max_weight, std::size_t max_block_degree,
                         const SuiteOptions& options = {});

struct VerifyConfig {
  std::size_t max_weight = 13;
  std::size_t max_block_degree = 3;
  std::vector<std::string> suites;  // empty means all, in suite_names() order
  SuiteOptions options;
};

std::vector<RelationReport> full_report(const VerifyConfig& config);

nlohmann::json to_json(const RelationReport& report);

// {"version", "config", "reports", "status"}; no timestamps.
nlohmann::json report_document(const VerifyConfig& config, const std::vector<RelationReport>& reports);

// Human-oriented summary, one line per suite plus failures.
std::string report_text(const std::vector<RelationReport>& reports);

inline constexpr const char* kVersion = "1.0.0";

}  // namespace blockmzv
