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
#include <optional>
#include <string>
#include <vector>

namespace blockmzv::cli {

enum class OutputFormat { text, structured };

// Settings for `verify` and `report`.
struct CliConfig {
  std::size_t max_weight = 13;
  std::size_t max_block_degree = 3;
  std::optional<OutputFormat> output_format;
  std::vector<std::string> suites;
};

OutputFormat parse_format(const std::string& text);

// Flat "key = value" lines; '#' starts a comment. Known keys: max_weight,
// max_block_degree, output_format, suites (comma separated). Throws
// InvalidInput with the offending line number.
CliConfig parse_config_text(const std::string& text);
CliConfig load_config_file(const std::string& path);

}  // namespace blockmzv::cli
