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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BLOCKMZV_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("decompose") {
  Run r = run("decompose 0110100");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("(0; 2,4,1), block degree 2\n", 0) == 0);
  CHECK(r.out.find("framed block degree 3, weight 7, depth 3") != std::string::npos);
}

TEST_CASE("malformed word") {
  Run r = run("decompose 01x1");
  CHECK(r.status == 2);
  CHECK(r.out.find("position 3") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("generator").status == 2);
  CHECK(run("--format yaml generator 3").status == 2);
  CHECK(run("verify --suite nope").status == 2);
  CHECK(run("verify --max-weight 40").status == 2);
}

TEST_CASE("generator") {
  Run r = run("generator 3 --reduced");
  CHECK(r.status == 0);
  CHECK(r.out == "-2*x1^2 - 3*x1*x2 - 2*x2^2\n");
  Run q = run("generator 3 --as-q");
  CHECK(q.status == 0);
  CHECK(q.out == "-1/2*x1^3*x2^2 + x1*x2^4\n");
  Run s = run("--format structured generator 3");
  CHECK(s.status == 0);
  auto doc = nlohmann::json::parse(s.out);
  CHECK(doc.dump().find("\"vars\":2") != std::string::npos);
}

TEST_CASE("pibl round trip") {
  Run fwd = run("pibl 0110100");
  CHECK(fwd.status == 0);
  CHECK(fwd.out == "x1*x2^2*x3^4*x4^2\n");
  Run back = run("pibl --invert 'x1*x2^2*x3^4*x4^2'");
  CHECK(back.status == 0);
  CHECK(back.out == "0110100\n");
}

TEST_CASE("coaction") {
  Run r = run("coaction 0101 --r 1");
  CHECK(r.status == 0);
  CHECK(r.out == "I(0;0,1,0;1) (x) I(0;1;1)\nI(0;1,0,1;1) (x) I(0;0;1)\n");
}

TEST_CASE("verify") {
  Run r = run("verify --suite cyclic_insertion --max-weight 13");
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["status"] == "pass");
  CHECK(doc["reports"].size() == 1);
  CHECK(doc["reports"][0]["relation_name"] == "cyclic_insertion");

  Run bad = run("verify --suite differential --flip-q-coefficient 2:1");
  CHECK(bad.status == 1);
  auto bad_doc = nlohmann::json::parse(bad.out);
  CHECK(bad_doc["status"] == "fail");
}

TEST_CASE("report from a config file") {
  const auto path = std::filesystem::temp_directory_path() / "blockmzv_cli_test.conf";
  {
    std::ofstream f(path);
    f << "# small run\nmax_weight = 9\nmax_block_degree = 2\nsuites = reflection, duality\n";
  }
  Run r = run("report --config " + path.string());
  std::filesystem::remove(path);
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["config"]["max_weight"] == 9);
  CHECK(doc["reports"].size() == 2);
  CHECK(doc["status"] == "pass");
  CHECK(run("report --config /nonexistent/blockmzv.conf").status == 2);
}
