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

#include <CLI11.hpp>

#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "blockmzv/blocks.hpp"
#include "blockmzv/errors.hpp"
#include "blockmzv/freeness.hpp"
#include "blockmzv/generators.hpp"
#include "blockmzv/ihara_poly.hpp"
#include "blockmzv/relations.hpp"
#include "blockmzv/serialize.hpp"
#include "blockmzv/verify.hpp"
#include "blockmzv/wordops.hpp"
#include "cli_config.hpp"

namespace {

using namespace blockmzv;
using cli::OutputFormat;

constexpr int kExitOk = 0;
constexpr int kExitRelationFailure = 1;
constexpr int kExitUsage = 2;

std::size_t generator_index(const std::string& weight_text) {
  std::size_t pos = 0;
  unsigned long w = 0;
  try {
    w = std::stoul(weight_text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != weight_text.size() || w < 3 || w % 2 == 0 || w > 99) {
    throw InvalidInput("generator weight must be an odd number >= 3, got '" + weight_text + "'");
  }
  return (w - 1) / 2;
}

void print_poly(const CPoly& p, OutputFormat fmt) {
  if (fmt == OutputFormat::structured) {
    std::cout << to_json(p).dump() << "\n";
  } else {
    std::cout << to_string(p) << "\n";
  }
}

int print_reports(const VerifyConfig& config, const std::vector<RelationReport>& reports, OutputFormat fmt) {
  if (fmt == OutputFormat::structured) {
    std::cout << report_document(config, reports).dump(2) << "\n";
  } else {
    std::cout << report_text(reports);
  }
  for (const auto& r : reports) {
    if (!r.passed()) return kExitRelationFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block decomposition and block-graded Lie algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_text;
  app.add_option("--format", format_text, "Output format: text or structured");

  std::string word_text;
  auto* decompose = app.add_subcommand("decompose", "Block decomposition of a word");
  decompose->add_option("word", word_text, "Word over 0/1")->required();

  std::string pibl_arg;
  bool invert = false;
  auto* pibl = app.add_subcommand("pibl", "Monomial encoding of a word (or its inverse)");
  pibl->add_option("input", pibl_arg, "Word, or monomial such as x1^3*x2^2 with --invert")->required();
  pibl->add_flag("--invert", invert, "Decode a monomial into a word");

  std::string gen_weight;
  bool gen_reduced = false, gen_as_q = false;
  auto* generator = app.add_subcommand("generator", "Canonical generator of the given odd weight");
  generator->add_option("weight", gen_weight, "Odd weight 2k+1 >= 3")->required();
  generator->add_flag("--reduced", gen_reduced, "Print the reduced polynomial");
  generator->add_flag("--as-q", gen_as_q, "Print q instead of p");

  std::vector<std::string> bracket_weights;
  bool bracket_reduced = false;
  auto* bracket = app.add_subcommand("bracket", "Left-nested bracket of generators");
  bracket->add_option("weights", bracket_weights, "Odd weights")->required()->expected(2, -1);
  bracket->add_flag("--reduced", bracket_reduced, "Print the reduced polynomial");

  std::string coaction_word;
  std::size_t coaction_r = 1;
  auto* coaction = app.add_subcommand("coaction", "Terms of D_{2r+1} on I(0; w; 1)");
  coaction->add_option("word", coaction_word, "Word over 0/1")->required();
  coaction->add_option("--r", coaction_r, "r >= 1")->required();

  std::size_t dims_weight = 13, dims_block = 3;
  auto* dims = app.add_subcommand("dims", "Expected dimensions and Hoffman counts");
  dims->add_option("--max-weight", dims_weight, "Largest weight")->required();
  dims->add_option("--max-block-degree", dims_block, "Largest block degree");

  cli::CliConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "Run relation suites");
  verify->add_option("--suite", verify_cfg.suites, "Suite name (repeatable)");
  verify->add_option("--max-weight", verify_cfg.max_weight, "Largest weight");
  verify->add_option("--max-block-degree", verify_cfg.max_block_degree, "Largest block degree");
  std::vector<std::string> flips;
  verify->add_option("--flip-q-coefficient", flips,
                     "Tamper with the generators: K:I flips the sign of c_I in q_{2K+1} (repeatable)");

  std::string config_path;
  auto* report = app.add_subcommand("report", "Run the suites described by a config file");
  report->add_option("--config", config_path, "Flat key = value config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::optional<OutputFormat> fmt;
    if (!format_text.empty()) fmt = cli::parse_format(format_text);
    const OutputFormat plain = fmt.value_or(OutputFormat::text);

    if (*decompose) {
      Word w = Word::parse_nonempty(word_text);
      auto pieces = block_decompose(w);
      if (plain == OutputFormat::structured) {
        nlohmann::json blocks = nlohmann::json::array();
        for (const auto& p : pieces) blocks.push_back(p.str());
        nlohmann::json out = {{"word", w.str()},
                              {"blocks", blocks},
                              {"bl", to_string(bl(w))},
                              {"block_degree", block_degree(w)},
                              {"framed_block_degree", framed_block_degree(w)},
                              {"weight", w.weight()},
                              {"depth", w.depth()}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << to_string(bl(w)) << ", block degree " << block_degree(w) << "\n";
        std::cout << "blocks:";
        for (const auto& p : pieces) std::cout << " " << p.str();
        std::cout << "\nframed block degree " << framed_block_degree(w) << ", weight " << w.weight()
                  << ", depth " << w.depth() << "\n";
      }
      return kExitOk;
    }

    if (*pibl) {
      if (invert) {
        Word w = pi_bl_inverse(parse_monomial(pibl_arg));
        if (plain == OutputFormat::structured) {
          std::cout << nlohmann::json{{"word", w.str()}}.dump() << "\n";
        } else {
          std::cout << w.str() << "\n";
        }
      } else {
        print_poly(pi_bl(Word::parse_nonempty(pibl_arg)), plain);
      }
      return kExitOk;
    }

    if (*generator) {
      const std::size_t k = generator_index(gen_weight);
      CPoly p = gen_as_q ? q_gen(k) : p_gen(k).poly;
      print_poly(gen_reduced ? reduce(p) : p, plain);
      return kExitOk;
    }

    if (*bracket) {
      std::vector<std::size_t> tuple;
      for (const auto& w : bracket_weights) tuple.push_back(generator_index(w));
      CPoly b = nested_bracket(GeneratorSet::closed_form(), tuple);
      print_poly(bracket_reduced ? reduce(b) : b, plain);
      return kExitOk;
    }

    if (*coaction) {
      Word w = Word::parse_nonempty(coaction_word);
      auto terms = infinitesimal_coaction(coaction_r, FormalII{'0', w, '1'});
      if (plain == OutputFormat::structured) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& t : terms) {
          out.push_back({{"left", to_string(t.left)},
                         {"right", to_string(t.right)},
                         {"coeff", to_string(t.coefficient)}});
        }
        std::cout << out.dump() << "\n";
      } else {
        for (const auto& t : terms) std::cout << to_string(t.left) << " (x) " << to_string(t.right) << "\n";
        if (terms.empty()) std::cout << "0\n";
      }
      return kExitOk;
    }

    if (*dims) {
      nlohmann::json lyndon = nlohmann::json::array();
      nlohmann::json hoffman = nlohmann::json::array();
      for (std::size_t n = 1; n <= dims_weight; ++n) {
        for (std::size_t b = 1; b <= dims_block; ++b) {
          lyndon.push_back({{"weight", n}, {"block_degree", b}, {"dim", lyndon_dim(n, b).get_str()}});
        }
        for (std::size_t m = 0; 3 * m <= n; ++m) {
          hoffman.push_back({{"n", n}, {"m", m}, {"count", hoffman_count(n, m).get_str()}});
        }
      }
      if (plain == OutputFormat::structured) {
        std::cout << nlohmann::json{{"lyndon_dim", lyndon}, {"hoffman_count", hoffman}}.dump() << "\n";
      } else {
        std::cout << "lyndon_dim (weight, block degree):\n";
        for (const auto& r : lyndon) {
          std::cout << "  (" << r["weight"] << "," << r["block_degree"] << ") "
                    << r["dim"].get<std::string>() << "\n";
        }
        std::cout << "hoffman_count (n, m):\n";
        for (const auto& r : hoffman) {
          std::cout << "  (" << r["n"] << "," << r["m"] << ") " << r["count"].get<std::string>() << "\n";
        }
      }
      return kExitOk;
    }

    cli::CliConfig cfg = verify_cfg;
    if (*report) cfg = cli::load_config_file(config_path);
    VerifyConfig vc;
    vc.max_weight = cfg.max_weight;
    vc.max_block_degree = cfg.max_block_degree;
    vc.suites = cfg.suites;
    for (const auto& f : flips) {
      auto colon = f.find(':');
      std::size_t k = 0, i = 0;
      try {
        if (colon == std::string::npos) throw std::invalid_argument("missing colon");
        k = std::stoul(f.substr(0, colon));
        i = std::stoul(f.substr(colon + 1));
      } catch (const std::exception&) {
        throw InvalidInput("--flip-q-coefficient expects K:I, got '" + f + "'");
      }
      vc.options.generators = vc.options.generators.with_flipped_q_coefficient(k, i);
    }
    OutputFormat out_fmt = fmt.value_or(cfg.output_format.value_or(OutputFormat::structured));
    return print_reports(vc, full_report(vc), out_fmt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
