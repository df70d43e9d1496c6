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

#include "blockmzv/serialize.hpp"

#include "blockmzv/errors.hpp"

namespace blockmzv {

nlohmann::json to_json(const CPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"coeff", to_string(c)}, {"exps", e}});
  }
  return {{"vars", p.var_count()}, {"terms", std::move(terms)}};
}

CPoly cpoly_from_json(const nlohmann::json& j) {
  try {
    std::size_t vars = j.at("vars").get<std::size_t>();
    CPoly p(vars);
    for (const auto& t : j.at("terms")) {
      auto exps = t.at("exps").get<Exponents>();
      if (exps.size() != vars) throw InvalidInput("exponent vector length differs from vars");
      p.add_term(exps, parse_rational(t.at("coeff").get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed polynomial record: ") + e.what());
  }
}

}  // namespace blockmzv
