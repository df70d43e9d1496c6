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

#include <doctest.h>

#include <set>

#include "blockmzv/errors.hpp"
#include "blockmzv/serialize.hpp"
#include "blockmzv/verify.hpp"

using namespace blockmzv;

TEST_CASE("suite names") {
  const auto& names = suite_names();
  CHECK(names.size() == 14);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == 14);
  CHECK(names.front() == "duality");
}

TEST_CASE("every suite passes at small bounds") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    RelationReport r = run_suite(name, 11, 3);
    CHECK(r.relation_name == name);
    CHECK(r.passed());
    CHECK(r.failures.empty());
    CHECK(r.instances_checked > 0);
    CHECK(r.parameters["max_weight"] == 11);
  }
}

TEST_CASE("reports are deterministic") {
  VerifyConfig config;
  config.max_weight = 11;
  config.max_block_degree = 2;
  config.suites = {"block_shuffle", "reflection", "ihara_consistency"};
  auto a = report_document(config, full_report(config));
  auto b = report_document(config, full_report(config));
  CHECK(a.dump() == b.dump());
  CHECK(a["status"] == "pass");
  CHECK(a["version"] == kVersion);
  CHECK(a["reports"].size() == 3);
  CHECK(a["reports"][1]["relation_name"] == "reflection");
}

TEST_CASE("a mutated generator is caught with a payload") {
  SuiteOptions options;
  options.generators = GeneratorSet::closed_form().with_flipped_q_coefficient(2, 1);
  RelationReport r = run_suite("differential", 13, 3, options);
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures.size() <= 5);
  CHECK(r.failure_count >= r.failures.size());
  bool any_payload = false;
  for (const auto& f : r.failures) {
    if (f.polynomial.is_null()) continue;
    any_payload = true;
    CHECK_FALSE(cpoly_from_json(f.polynomial).is_zero());
  }
  CHECK(any_payload);
  CHECK(r.parameters.contains("q_coefficient_overrides"));
  CHECK(to_json(r)["failure_count"] == r.failure_count);
  CHECK(report_text({r}).find("FAIL") != std::string::npos);
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(run_suite("no_such_suite", 9, 2), InvalidInput);
  CHECK_THROWS_AS(run_suite("duality", 19, 2), ResourceLimit);
  CHECK_THROWS_AS(run_suite("duality", 9, 5), ResourceLimit);
  CHECK_THROWS_AS(run_suite("duality", 2, 2), InvalidInput);
  CHECK_THROWS_AS(run_suite("duality", 9, 0), InvalidInput);
  SuiteOptions tight;
  tight.weight_limit = 9;
  CHECK_THROWS_AS(run_suite("duality", 11, 2, tight), ResourceLimit);
}

TEST_CASE("full report over all suites") {
  VerifyConfig config;
  config.max_weight = 3;
  config.max_block_degree = 1;
  auto reports = full_report(config);
  REQUIRE(reports.size() == 14);
  for (const auto& r : reports) {
    CAPTURE(r.relation_name);
    CHECK(r.passed());
  }
  auto doc = report_document(config, reports);
  CHECK(doc["config"]["max_weight"] == 3);
  CHECK(doc["status"] == "pass");
  CHECK(report_text(reports).find("PASS duality") != std::string::npos);
}
