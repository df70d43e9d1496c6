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

#include "cli_config.hpp"

#include <fstream>
#include <sstream>

#include "blockmzv/errors.hpp"

namespace blockmzv::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_natural(const std::string& v, std::size_t line) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 6) {
    throw InvalidInput("config line " + std::to_string(line) + ": expected a natural number, got '" + v + "'");
  }
  return std::stoul(v);
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "text") return OutputFormat::text;
  if (text == "structured") return OutputFormat::structured;
  throw InvalidInput("unknown output format '" + text + "' (expected text or structured)");
}

CliConfig parse_config_text(const std::string& text) {
  CliConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw InvalidInput("config line " + std::to_string(line) + ": expected key = value");
    }
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key == "max_weight") {
      cfg.max_weight = parse_natural(value, line);
    } else if (key == "max_block_degree") {
      cfg.max_block_degree = parse_natural(value, line);
    } else if (key == "output_format") {
      cfg.output_format = parse_format(value);
    } else if (key == "suites") {
      cfg.suites.clear();
      std::istringstream parts(value);
      std::string part;
      while (std::getline(parts, part, ',')) {
        part = trim(part);
        if (!part.empty()) cfg.suites.push_back(part);
      }
    } else {
      throw InvalidInput("config line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

CliConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace blockmzv::cli
