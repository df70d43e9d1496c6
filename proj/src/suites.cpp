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

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "blockmzv/blocks.hpp"
#include "blockmzv/errors.hpp"
#include "blockmzv/freeness.hpp"
#include "blockmzv/ihara_poly.hpp"
#include "blockmzv/lie_basis.hpp"
#include "blockmzv/linalg.hpp"
#include "blockmzv/relations.hpp"
#include "blockmzv/serialize.hpp"
#include "blockmzv/verify.hpp"
#include "blockmzv/wordops.hpp"
#include "blockmzv/zalphabet.hpp"

namespace blockmzv {

namespace {

constexpr std::size_t kMaxKeptFailures = 5;
constexpr std::size_t kKernelWeightCap = 11;
constexpr std::size_t kRegularisationGeneratorCap = 5;
constexpr std::size_t kCoactionLengthCap = 13;

class Recorder {
 public:
  explicit Recorder(RelationReport& report) : report_(report) {}

  bool check(bool ok, const std::string& input, const std::optional<CPoly>& payload = std::nullopt) {
    ++report_.instances_checked;
    if (!ok) fail(input, payload);
    return ok;
  }

  bool zero(const CPoly& residual, const std::string& input) {
    return check(residual.is_zero(), input, residual);
  }

  void fail(const std::string& input, const std::optional<CPoly>& payload) {
    ++report_.failure_count;
    if (report_.failures.size() < kMaxKeptFailures) {
      report_.failures.push_back({input, payload ? to_json(*payload) : nlohmann::json()});
    }
  }

  void note(std::string n) { report_.engine_notes.push_back(std::move(n)); }

 private:
  RelationReport& report_;
};

struct Context {
  std::size_t max_weight;
  std::size_t max_block_degree;
  const SuiteOptions& options;
  const GeneratorSet& gens() const { return options.generators; }
};

int parity_sign(std::size_t e) { return e % 2 ? -1 : 1; }

CPoly signed_copy(const CPoly& p, int s) { return s > 0 ? p : -p; }

CPoly zpoly_to_cpoly(const ZPoly& z, std::size_t vars) {
  CPoly out(vars);
  for (const auto& [w, c] : z) out.add_term(Exponents(w.begin(), w.end()), c);
  return out;
}

std::vector<FamilyMember> family(const Context& ctx) {
  return bracket_family(ctx.max_weight, ctx.max_block_degree, ctx.gens());
}

// Runs `body` per family member, turning engine errors into failures.
void for_each_member(const Context& ctx, Recorder& rec,
                     const std::function<void(const FamilyMember&)>& body) {
  std::vector<FamilyMember> fam;
  try {
    fam = family(ctx);
  } catch (const Error& e) {
    rec.check(false, std::string("constructing bracket family: ") + e.what());
    return;
  }
  for (const auto& m : fam) {
    try {
      body(m);
    } catch (const Error& e) {
      rec.check(false, tuple_label(m.tuple) + ": " + e.what(), m.poly);
    }
  }
}

std::vector<std::size_t> generator_indices(const Context& ctx, std::size_t cap = 0) {
  std::vector<std::size_t> ks;
  for (std::size_t k = 1; 2 * k + 1 <= ctx.max_weight; ++k) {
    if (cap && k > cap) break;
    ks.push_back(k);
  }
  return ks;
}

void duality_suite(const Context& ctx, Recorder& rec) {
  for_each_member(ctx, rec, [&](const FamilyMember& m) {
    const std::string label = tuple_label(m.tuple);
    const std::size_t n = m.poly.var_count();
    rec.zero(m.poly - signed_copy(reverse_variables(m.poly), parity_sign(n + 1)), label + " duality");
    ZPoly z = to_zword(m.poly);
    rec.check(is_z_primitive(z), label + " z-primitive", m.poly);
    ZPoly s = z_antipode(z);
    for (const auto& [w, c] : z) {
      auto it = s.find(w);
      Rational v = it == s.end() ? Rational(0) : it->second;
      s[w] = v + c;
      if (s[w] == 0) s.erase(w);
    }
    rec.zero(zpoly_to_cpoly(s, n), label + " antipode = -id");
  });
  rec.note("z-antipode checked as S(Z) + Z = 0 for Z = to_zword(f)");
}

void block_shuffle_suite(const Context& ctx, Recorder& rec) {
  for_each_member(ctx, rec, [&](const FamilyMember& m) {
    for (std::size_t r = 1; r < m.poly.var_count(); ++r) {
      rec.zero(block_shuffle_sum(m.poly, r), tuple_label(m.tuple) + " r=" + std::to_string(r));
    }
  });
}

void cyclic_insertion_suite(const Context& ctx, Recorder& rec) {
  for_each_member(ctx, rec, [&](const FamilyMember& m) {
    const std::string label = tuple_label(m.tuple);
    rec.zero(cyclic_sum(m.poly), label + " cyclic sum");
    rec.zero(zpoly_to_cpoly(z_cyclic(to_zword(m.poly)), m.poly.var_count()), label + " z-cyclic operator");
  });
}

void reflection_suite(const Context& ctx, Recorder& rec) {
  for_each_member(ctx, rec, [&](const FamilyMember& m) {
    CPoly r = reduce(m.poly);
    const std::size_t n = r.var_count();
    rec.zero(reverse_variables(r) - signed_copy(r, parity_sign(n)), tuple_label(m.tuple) + " reflection");
  });
}

void cyclic_invariance_suite(const Context& ctx, Recorder& rec) {
  for_each_member(ctx, rec, [&](const FamilyMember& m) {
    CPoly r = reduce(m.poly);
    rec.zero(rotate(r, 1) - r, tuple_label(m.tuple) + " rotation");
  });
}

void differential_suite(const Context& ctx, Recorder& rec) {
  for_each_member(ctx, rec, [&](const FamilyMember& m) {
    rec.zero(block_differential(reduce(m.poly)), tuple_label(m.tuple) + " D_n r");
  });
}

void kernel_membership_suite(const Context& ctx, Recorder& rec) {
  const std::size_t cap = std::min(ctx.max_weight, kKernelWeightCap);
  rec.note("membership in the sum of kernels is decided for weights <= " + std::to_string(cap));
  for_each_member(ctx, rec, [&](const FamilyMember& m) {
    if (m.weight > cap) return;
    CPoly r = reduce(m.poly);
    rec.check(kernel_sum_membership(r), tuple_label(m.tuple) + " kernel sum", r);
  });
}

void regularisation_suite(const Context& ctx, Recorder& rec) {
  for (std::size_t k : generator_indices(ctx, kRegularisationGeneratorCap)) {
    const std::string label = "p" + std::to_string(2 * k + 1);
    try {
      CPoly f = ctx.gens().p(k);
      const Slot at_zero[] = {zero_slot(), keep(0)};
      const Slot anti[] = {keep(0), negate(0)};
      CPoly lhs = CPoly::variable(1, 0) * f.derivative(0).substitute(at_zero, 1);
      CPoly rhs = f.substitute(anti, 1);
      rec.zero(lhs - rhs, label + " x*d1 f(0,x) = f(x,-x)");
    } catch (const Error& e) {
      rec.check(false, label + ": " + e.what());
    }
  }
  for_each_member(ctx, rec, [&](const FamilyMember& m) {
    const std::string label = tuple_label(m.tuple);
    if (m.tuple.size() == 2) {
      const CPoly& g = m.poly;
      const CPoly y = CPoly::variable(2, 0);
      const CPoly z = CPoly::variable(2, 1);
      auto at = [](const CPoly& p, Slot a, Slot b, Slot c) {
        const Slot s[] = {a, b, c};
        return p.substitute(s, 2);
      };
      const CPoly d1 = g.derivative(0);
      const CPoly d2 = g.derivative(1);
      const Slot Y = keep(0), mY = negate(0), Z = keep(1), mZ = negate(1), O = zero_slot();
      CPoly e1 = y * z * (at(d1, O, Y, Z) - at(d1, O, Y, mZ)) -
                 (y * (at(g, Y, Z, mZ) + at(g, mY, Z, mZ)) + z * (at(g, mY, Y, mZ) - at(g, mY, Y, Z)));
      CPoly e2 = y * z * (at(d1, O, Y, Z) + at(d1, O, Y, mZ) + at(d2, Y, O, Z) + at(d2, Y, O, mZ)) -
                 (y * (at(g, Y, Z, mZ) - at(g, mY, Z, mZ)) - z * (at(g, mY, Y, mZ) + at(g, mY, Y, Z)));
      rec.zero(e1, label + " first three-variable identity");
      rec.zero(e2, label + " second three-variable identity");
    }
    auto residual = graded_delta1(from_block_poly(m.poly));
    std::string detail;
    if (!residual.empty()) {
      const auto& [t, c] = *residual.begin();
      detail = " (e.g. " + std::string(1, t.letter) + " (x) " + t.rest.str() + " with coefficient " +
               to_string(c) + ")";
    }
    rec.check(residual.empty(), label + " graded Delta_1" + detail, m.poly);
  });
}

void generator_characterisation_suite(const Context& ctx, Recorder& rec) {
  for (std::size_t k : generator_indices(ctx)) {
    const std::string label = "p" + std::to_string(2 * k + 1);
    try {
      CPoly p = ctx.gens().p(k);
      const Slot x_axis[] = {keep(0), zero_slot()};
      const Slot y_axis[] = {zero_slot(), keep(0)};
      rec.zero(p.substitute(x_axis, 1), label + " p(x1,0)");
      rec.zero(p.substitute(y_axis, 1), label + " p(0,x2)");
      rec.zero(p + swap_variables(p), label + " p + p(x2,x1)");
      CPoly r = reduce(p);
      const Slot anti[] = {keep(0), negate(0)};
      rec.zero(r.substitute(y_axis, 1) - r.substitute(anti, 1).scale(2), label + " r(0,x) - 2r(x,-x)");
      rec.zero(r.derivative(0).derivative(0) - r.derivative(1).derivative(1), label + " d1^2 r - d2^2 r");
      auto ch = characterize_generator(k);
      bool unique = ch.dimension == 1 && proportionality(p, ch.basis.front()).has_value();
      rec.check(unique, label + " solution space dimension " + std::to_string(ch.dimension), p);
      if (auto lambda = generator_normalization(k)) {
        rec.note(label + " = " + to_string(*lambda) + " * (q(x1,x2) - q(x2,x1))");
      } else {
        rec.note(label + " is not proportional to the antisymmetrised q");
      }
    } catch (const Error& e) {
      rec.check(false, label + ": " + e.what());
    }
  }
}

void depth_support_suite(const Context& ctx, Recorder& rec) {
  for (std::size_t k : generator_indices(ctx)) {
    const std::string label = "p" + std::to_string(2 * k + 1);
    try {
      CPoly p = ctx.gens().p(k);
      CPoly outside(2);
      for (const auto& [e, c] : p.terms()) {
        std::size_t d = depth_of_monomial(e);
        if (d != k && d != k + 1) outside.add_term(e, c);
      }
      rec.zero(outside, label + " depths in {k, k+1}");
    } catch (const Error& e) {
      rec.check(false, label + ": " + e.what());
    }
  }
  for_each_member(ctx, rec, [&](const FamilyMember& m) {
    const std::string label = tuple_label(m.tuple);
    CPoly parity_bad(m.poly.var_count());
    CPoly by_depth(m.poly.var_count());
    for (const auto& [e, c] : m.poly.terms()) {
      std::size_t d = depth_of_monomial(e);
      std::size_t predicted = (m.weight + 1) / 2;
      for (std::size_t i = 0; i < e.size(); i += 2) predicted += e[i];
      if ((d - predicted) % 2) parity_bad.add_term(e, c);
      by_depth.add_term(e, d % 2 ? Rational(-c) : c);
    }
    rec.zero(parity_bad, label + " depth parity");
    rec.zero(depth_sign_transform(m.poly, m.weight) - by_depth, label + " depth sign transform");
  });
}

void coaction_grading_suite(const Context& ctx, Recorder& rec) {
  const std::size_t max_len = std::min(ctx.max_weight, kCoactionLengthCap);
  rec.note("words of length <= " + std::to_string(max_len));
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const Word& w : all_words(len)) {
      const std::size_t total = framed_block_degree(w);
      for (std::size_t r = 1; 2 * r + 1 <= len; ++r) {
        bool ok = true;
        for (const auto& t : infinitesimal_coaction(r, FormalII{'0', w, '1'})) {
          ok = ok && block_degree(t.left.as_word()) + block_degree(t.right.as_word()) == total;
        }
        rec.check(ok, "D_" + std::to_string(2 * r + 1) + " on " + w.str(), pi_bl(w));
      }
      bool drop_ok = true;
      for (const auto& t : delta1(w)) {
        drop_ok = drop_ok && framed_block_degree(t.rest) + 1 >= total;
      }
      rec.check(drop_ok, "Delta_1 drop on " + w.str(), pi_bl(w));
    }
  }
}

int match_sign(const CPoly& got, const CPoly& expected) {
  if (got == expected) return 1;
  if (got == -expected) return -1;
  return 0;
}

void ihara_consistency_suite(const Context& ctx, Recorder& rec) {
  std::map<std::size_t, std::optional<NCPoly>> lifts;
  std::optional<int> word_sign, conj_sign;
  std::size_t pairs = 0;
  auto lift = [&](std::size_t k) -> const std::optional<NCPoly>& {
    auto it = lifts.find(k);
    if (it != lifts.end()) return it->second;
    CPoly target = depth_sign_transform(ctx.gens().p(k), 2 * k + 1);
    std::optional<NCPoly> s = lift_to_lie(target);
    const std::string label = "lift of p" + std::to_string(2 * k + 1);
    if (rec.check(s.has_value(), label + " exists", target)) {
      auto comps = to_block_polys(*s);
      CPoly got = comps.count(2) ? comps.at(2) : CPoly(2);
      rec.zero(got - target, label + " has the requested block-degree-1 part");
      rec.note(label + ": Lie element with " + std::to_string(s->term_count()) + " words");
    }
    return lifts.emplace(k, std::move(s)).first->second;
  };

  if (ctx.max_block_degree >= 2) {
    for (std::size_t w = 6; w <= ctx.max_weight; ++w) {
      for (const auto& t : generator_tuples(w, 2)) {
        const std::size_t a = t[0], b = t[1];
        const std::string label = tuple_label(t);
        try {
          const CPoly pa = ctx.gens().p(a), pb = ctx.gens().p(b);
          const CPoly fa = depth_sign_transform(pa, 2 * a + 1);
          const CPoly fb = depth_sign_transform(pb, 2 * b + 1);
          const CPoly unsigned_action = ihara_poly_unsigned(fa, fb);

          if (const auto& s = lift(a)) {
            auto comps = to_block_polys(ihara_word(*s, from_block_poly(fb)));
            CPoly got = comps.count(3) ? comps.at(3) : CPoly(3);
            int sign = match_sign(got, unsigned_action);
            bool ok = sign != 0 && (!word_sign || *word_sign == sign);
            if (!word_sign && sign != 0) word_sign = sign;
            rec.check(ok, label + " word recursion vs unsigned formula", got - unsigned_action);
          }

          const CPoly conj = depth_sign_transform(unsigned_action, w);
          const CPoly signed_action = ihara_poly_signed(pa, pb);
          int sign = match_sign(signed_action, conj);
          bool ok = sign != 0 && (!conj_sign || *conj_sign == sign);
          if (!conj_sign && sign != 0) conj_sign = sign;
          rec.check(ok, label + " depth-sign conjugate vs signed formula", signed_action - conj);

          const CPoly ra = reduce(pa), rb = reduce(pb);
          const CPoly direct = reduce(ihara_bracket_poly(pa, pb));
          rec.zero(direct - reduced_bracket(ReducedElement{ra, 2 * a + 1, 1}, ReducedElement{rb, 2 * b + 1, 1}).poly,
                   label + " reduce(bracket) vs adjacent reduced bracket");
          rec.zero(reduced_bracket(ra, rb) - reduced_bracket_adjacent(ra, rb),
                   label + " adjacent vs cyclic reduced bracket");
          ++pairs;
        } catch (const Error& e) {
          rec.check(false, label + ": " + e.what());
        }
      }
    }
  }
  if (ctx.max_block_degree >= 3) {
    for (std::size_t w = 9; w <= ctx.max_weight; ++w) {
      for (const auto& t : generator_tuples(w, 3)) {
        const std::string label = tuple_label(t);
        try {
          const CPoly inner = ihara_bracket_poly(ctx.gens().p(t[0]), ctx.gens().p(t[1]));
          const CPoly outer = ihara_bracket_poly(inner, ctx.gens().p(t[2]));
          const CPoly rb = reduced_bracket(reduce(inner), reduce(ctx.gens().p(t[2])));
          rec.zero(reduce(outer) - rb, label + " reduce(bracket) vs cyclic reduced bracket");
        } catch (const Error& e) {
          rec.check(false, label + ": " + e.what());
        }
      }
    }
  }
  auto sign_text = [](const std::optional<int>& s) {
    return s ? (*s > 0 ? std::string("+1") : std::string("-1")) : std::string("undetermined");
  };
  rec.note("generator pairs checked: " + std::to_string(pairs));
  rec.note("global sign, graded word recursion vs unsigned polynomial formula: " + sign_text(word_sign));
  rec.note("global sign, depth-sign conjugate of unsigned formula vs signed formula: " + sign_text(conj_sign));
}

void freeness_suite(const Context& ctx, Recorder& rec) {
  for (std::size_t b = 1; b <= ctx.max_block_degree; ++b) {
    for (std::size_t n = 1; n <= ctx.max_weight; ++n) {
      const std::string label = "(" + std::to_string(n) + "," + std::to_string(b) + ")";
      try {
        auto span = bracket_span(n, b, ctx.gens());
        std::size_t rk = rank_over_q(span);
        Integer dim = lyndon_dim(n, b);
        std::optional<CPoly> payload;
        if (!span.empty()) payload = span.front();
        rec.check(Integer(rk) == dim,
                  label + " rank " + std::to_string(rk) + " vs dimension " + dim.get_str(), payload);
        if (dim != 0 || rk != 0) {
          rec.note("cell " + label + ": rank " + std::to_string(rk) + ", lyndon_dim " + dim.get_str());
        }
      } catch (const Error& e) {
        rec.check(false, label + ": " + e.what());
      }
    }
  }
}

void parity_endpoint_suite(const Context& ctx, Recorder& rec) {
  const std::size_t max_len = std::min(ctx.max_weight, kCoactionLengthCap);
  rec.note("words of length <= " + std::to_string(max_len));
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const Word& w : all_words(len)) {
      const bool even = (block_degree(w) + w.size()) % 2 == 0;
      rec.check(even == (w.front() != w.back()), "endpoint parity of " + w.str(), pi_bl(w));
      const Word d = duality(w);
      rec.check(block_degree(d) == block_degree(w), "block degree under duality of " + w.str(), pi_bl(w));
      rec.check(d.depth() == w.size() - w.depth(), "depth under duality of " + w.str(), pi_bl(w));
    }
  }
}

using SuiteFn = void (*)(const Context&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"duality", duality_suite},
      {"block_shuffle", block_shuffle_suite},
      {"cyclic_insertion", cyclic_insertion_suite},
      {"reflection", reflection_suite},
      {"cyclic_invariance", cyclic_invariance_suite},
      {"differential", differential_suite},
      {"kernel_membership", kernel_membership_suite},
      {"regularisation", regularisation_suite},
      {"generator_characterisation", generator_characterisation_suite},
      {"depth_support", depth_support_suite},
      {"coaction_grading", coaction_grading_suite},
      {"ihara_consistency", ihara_consistency_suite},
      {"freeness", freeness_suite},
      {"parity_endpoint", parity_endpoint_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

RelationReport run_suite(std::string_view name, std::size_t max_weight, std::size_t max_block_degree,
                         const SuiteOptions& options) {
  SuiteFn fn = nullptr;
  for (const auto& [n, f] : registry()) {
    if (n == name) fn = f;
  }
  if (!fn) throw InvalidInput("unknown suite '" + std::string(name) + "'");
  if (max_weight < 3) throw InvalidInput("max_weight must be at least 3");
  if (max_block_degree < 1) throw InvalidInput("max_block_degree must be at least 1");
  if (max_weight > options.weight_limit) {
    throw ResourceLimit("max_weight " + std::to_string(max_weight) + " exceeds the configured limit " +
                        std::to_string(options.weight_limit));
  }
  if (max_block_degree > options.block_degree_limit) {
    throw ResourceLimit("max_block_degree " + std::to_string(max_block_degree) +
                        " exceeds the configured limit " + std::to_string(options.block_degree_limit));
  }
  RelationReport report;
  report.relation_name = std::string(name);
  report.parameters = {{"max_weight", max_weight}, {"max_block_degree", max_block_degree}};
  if (options.generators.is_mutated()) {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [k, c] : options.generators.overrides()) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& v : c) coeffs.push_back(to_string(v));
      m["q" + std::to_string(2 * k + 1)] = coeffs;
    }
    report.parameters["q_coefficient_overrides"] = m;
  }
  Recorder rec(report);
  Context ctx{max_weight, max_block_degree, options};
  fn(ctx, rec);
  return report;
}

}  // namespace blockmzv
