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

#include <json.hpp>

#include "blockmzv/cpoly.hpp"

namespace blockmzv {

// {"vars": n, "terms": [{"coeff": "p/q", "exps": [...]}, ...]} with terms in
// ascending lex order of exponent vectors.
nlohmann::json to_json(const CPoly& p);

// Inverse of to_json. Throws InvalidInput on schema violations.
CPoly cpoly_from_json(const nlohmann::json& j);

}  // namespace blockmzv
