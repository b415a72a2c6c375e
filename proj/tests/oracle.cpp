// Copyright 2026 The Caudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracle.hpp"

#include <stdexcept>

namespace caudit::oracle {

namespace {

struct MaxRatio {
  Ratio best = Ratio::vacuous();

  void include(const Rational& p, const Rational& q) {
    const Ratio r = Ratio::bound(p, q);
    if (r.is_vacuous()) return;
    if (best.is_vacuous() || !(r <= best)) best = r;
  }

  Ratio get() const { return best.is_vacuous() ? Ratio::one() : best; }
};

}  // namespace

ValueIndex value_of(const CausalModel& m, VarIndex v, const Assignment& background,
                    const Forced& forced) {
  if (const auto it = forced.find(v); it != forced.end()) return it->second;
  if (!m.is_endogenous(v)) return background[v];
  const StructuralEquation& eq = m.equation(v);
  int64_t row = 0;
  for (VarIndex p : eq.parents) {
    row = row * m.variable(p).domain->size() + value_of(m, p, background, forced);
  }
  return eq.table[row];
}

std::vector<std::pair<Assignment, Rational>> worlds(const ProbCausalModel& pm,
                                                    const Forced& forced) {
  std::vector<std::pair<Assignment, Rational>> out;
  for (const auto& [background, mass] : pm.dist.support()) {
    Assignment world(pm.model.variable_count());
    for (int v = 0; v < pm.model.variable_count(); ++v) {
      world[v] = value_of(pm.model, v, background, forced);
    }
    out.emplace_back(std::move(world), mass);
  }
  return out;
}

bool eval_prop(const Proposition& p, const CausalModel& m, const Assignment& world) {
  switch (p.kind()) {
    case Proposition::Kind::kTrue:
      return true;
    case Proposition::Kind::kFalse:
      return false;
    case Proposition::Kind::kEq:
    case Proposition::Kind::kNe: {
      const auto v = m.find(p.var());
      if (!v) throw std::runtime_error("oracle: unknown variable " + p.var());
      const auto value = m.variable(*v).domain->index_of(p.value());
      if (!value) throw std::runtime_error("oracle: unknown value " + p.value());
      const bool eq = world[*v] == *value;
      return p.kind() == Proposition::Kind::kEq ? eq : !eq;
    }
    case Proposition::Kind::kNot:
      return !eval_prop(p.child(0), m, world);
    case Proposition::Kind::kAnd:
      return eval_prop(p.child(0), m, world) && eval_prop(p.child(1), m, world);
    case Proposition::Kind::kOr:
      return eval_prop(p.child(0), m, world) || eval_prop(p.child(1), m, world);
  }
  return false;
}

std::optional<Rational> probability(const ProbCausalModel& pm, const Forced& forced,
                                    const Proposition& given, const Proposition& phi) {
  Rational denom(0);
  Rational numer(0);
  for (const auto& [world, mass] : worlds(pm, forced)) {
    if (!eval_prop(given, pm.model, world)) continue;
    denom += mass;
    if (eval_prop(phi, pm.model, world)) numer += mass;
  }
  if (denom.is_zero()) return std::nullopt;
  return numer / denom;
}

namespace {

// Output distribution with a set of inputs forced, by brute enumeration.
std::vector<Rational> forced_output_dist(const ProbCausalModel& pm, VarIndex output,
                                         const Forced& forced) {
  std::vector<Rational> dist(pm.model.variable(output).domain->size(), Rational(0));
  for (const auto& [world, mass] : worlds(pm, forced)) dist[world[output]] += mass;
  return dist;
}

// Every assignment of `vars` over their domains (or over the domains minus
// BOT when skip_bot is set).
std::vector<Forced> all_contexts(const CausalModel& m, const std::vector<VarIndex>& vars,
                                 bool skip_bot) {
  std::vector<Forced> contexts{{}};
  for (VarIndex v : vars) {
    const Domain& dom = *m.variable(v).domain;
    std::vector<Forced> next;
    for (const Forced& ctx : contexts) {
      for (ValueIndex value = 0; value < dom.size(); ++value) {
        if (skip_bot && dom.bot_index() && value == *dom.bot_index()) continue;
        Forced extended = ctx;
        extended[v] = value;
        next.push_back(std::move(extended));
      }
    }
    contexts = std::move(next);
  }
  return contexts;
}

}  // namespace

Ratio noninterference_ratio(const AnalysisFrame& f) {
  const CausalModel& m = f.pm.model;
  const Domain& xdom = *m.variable(f.sensitive_input).domain;
  MaxRatio fold;
  for (const Forced& ctx : all_contexts(m, f.other_inputs, false)) {
    for (ValueIndex x1 = 0; x1 < xdom.size(); ++x1) {
      for (ValueIndex x2 = 0; x2 < xdom.size(); ++x2) {
        if (x1 == x2) continue;
        Forced f1 = ctx;
        Forced f2 = ctx;
        f1[f.sensitive_input] = x1;
        f2[f.sensitive_input] = x2;
        const auto d1 = forced_output_dist(f.pm, f.output, f1);
        const auto d2 = forced_output_dist(f.pm, f.output, f2);
        for (size_t o = 0; o < d1.size(); ++o) fold.include(d1[o], d2[o]);
      }
    }
  }
  return fold.get();
}

Ratio causal_ratio(const AnalysisFrame& f) {
  const Domain& xdom = *f.pm.model.variable(f.sensitive_input).domain;
  std::vector<std::vector<Rational>> dists;
  for (ValueIndex x = 0; x < xdom.size(); ++x) {
    dists.push_back(forced_output_dist(f.pm, f.output, {{f.sensitive_input, x}}));
  }
  MaxRatio fold;
  for (ValueIndex x1 = 0; x1 < xdom.size(); ++x1) {
    for (ValueIndex x2 = 0; x2 < xdom.size(); ++x2) {
      if (x1 == x2) continue;
      for (size_t o = 0; o < dists[x1].size(); ++o) {
        fold.include(dists[x1][o], dists[x2][o]);
      }
    }
  }
  return fold.get();
}

Ratio assoc_ratio(const AnalysisFrame& f) {
  const CausalModel& m = f.pm.model;
  const Domain& xdom = *m.variable(f.sensitive_attr).domain;
  const std::string& xname = m.variable(f.sensitive_attr).id;
  const std::string& oname = m.variable(f.output).id;
  const Domain& odom = f.output_domain();
  MaxRatio fold;
  for (ValueIndex x1 = 0; x1 < xdom.size(); ++x1) {
    for (ValueIndex x2 = 0; x2 < xdom.size(); ++x2) {
      if (x1 == x2) continue;
      for (ValueIndex o = 0; o < odom.size(); ++o) {
        const Proposition event = Proposition::eq(oname, odom.value(o));
        const auto p1 =
            probability(f.pm, {}, Proposition::eq(xname, xdom.value(x1)), event);
        const auto p2 =
            probability(f.pm, {}, Proposition::eq(xname, xdom.value(x2)), event);
        if (!p1 || !p2) continue;  // zero-mass group: outside the quantifier
        fold.include(*p1, *p2);
      }
    }
  }
  return fold.get();
}

Ratio assoc_on_x_ratio(const AnalysisFrame& f) {
  const CausalModel& m = f.pm.model;
  const Domain& xdom = *m.variable(f.sensitive_attr).domain;
  const std::string& xname = m.variable(f.sensitive_attr).id;
  const std::string& oname = m.variable(f.output).id;
  const Domain& odom = f.output_domain();
  MaxRatio fold;
  for (ValueIndex o = 0; o < odom.size(); ++o) {
    for (ValueIndex x = 0; x < xdom.size(); ++x) {
      const Proposition xatom = Proposition::eq(xname, xdom.value(x));
      const auto posterior =
          probability(f.pm, {}, Proposition::eq(oname, odom.value(o)), xatom);
      if (!posterior) continue;  // zero-mass output: outside the quantifier
      const auto prior = probability(f.pm, {}, Proposition::truth(), xatom);
      fold.include(*posterior, *prior);
      fold.include(*prior, *posterior);
    }
  }
  return fold.get();
}

Ratio dp_ratio(const DatabaseFrame& f) {
  const CausalModel& m = f.pm.model;
  MaxRatio fold;
  for (size_t i = 0; i < f.row_inputs.size(); ++i) {
    std::vector<VarIndex> others;
    for (size_t j = 0; j < f.row_inputs.size(); ++j) {
      if (j != i) others.push_back(f.row_inputs[j]);
    }
    const Domain& rdom = *m.variable(f.row_inputs[i]).domain;
    const bool skip_bot_context = f.bot_mode == BotMode::kRemoved;
    for (const Forced& ctx : all_contexts(m, others, skip_bot_context)) {
      for (ValueIndex x1 = 0; x1 < rdom.size(); ++x1) {
        for (ValueIndex x2 = 0; x2 < rdom.size(); ++x2) {
          if (x1 == x2) continue;
          Forced f1 = ctx;
          Forced f2 = ctx;
          f1[f.row_inputs[i]] = x1;
          f2[f.row_inputs[i]] = x2;
          const auto d1 = forced_output_dist(f.pm, f.output, f1);
          const auto d2 = forced_output_dist(f.pm, f.output, f2);
          for (size_t o = 0; o < d1.size(); ++o) fold.include(d1[o], d2[o]);
        }
      }
    }
  }
  return fold.get();
}

Ratio rule80_ratio(const AnalysisFrame& f, const std::string& positive_value) {
  const CausalModel& m = f.pm.model;
  const Domain& xdom = *m.variable(f.sensitive_attr).domain;
  const std::string& xname = m.variable(f.sensitive_attr).id;
  const Proposition event =
      Proposition::eq(m.variable(f.output).id, positive_value);
  std::vector<Rational> rates;
  for (ValueIndex x = 0; x < xdom.size(); ++x) {
    const auto rate =
        probability(f.pm, {}, Proposition::eq(xname, xdom.value(x)), event);
    if (rate) rates.push_back(*rate);
  }
  MaxRatio fold;
  for (const Rational& a : rates) {
    for (const Rational& b : rates) fold.include(a, b);
  }
  return fold.get();
}

OpennessResult openness(const ProbCausalModel& pm, const Proposition& context,
                        const Proposition& phi) {
  OpennessResult result;
  const auto mass = probability(pm, {}, context, phi);
  if (!mass) return result;
  result.consistent = true;
  result.mass = *mass;
  result.open = mass->sign() > 0 && *mass < Rational(1);
  return result;
}

bool fresh_by_quantification(const ProbCausalModel& pm, VarIndex r) {
  const CausalModel& m = pm.model;
  std::vector<VarIndex> others;
  for (int v = 0; v < m.background_count(); ++v) {
    if (v != r) others.push_back(v);
  }
  const Domain& rdom = *m.variable(r).domain;
  std::vector<Rational> unconditional(rdom.size(), Rational(0));
  for (const auto& [background, mass] : pm.dist.support()) {
    unconditional[background[r]] += mass;
  }

  // Every event over the other background variables is a subset of their
  // joint value space; enumerate them all.
  const auto cells = all_contexts(m, others, false);
  if (cells.size() > 20) {
    throw std::runtime_error("oracle freshness check: model too large");
  }
  for (uint64_t subset = 1; subset < (1ULL << cells.size()); ++subset) {
    Rational total(0);
    std::vector<Rational> conditional(rdom.size(), Rational(0));
    for (const auto& [background, mass] : pm.dist.support()) {
      bool in_event = false;
      for (size_t c = 0; c < cells.size(); ++c) {
        if (!((subset >> c) & 1)) continue;
        bool matches = true;
        for (const auto& [var, value] : cells[c]) {
          matches = matches && background[var] == value;
        }
        in_event = in_event || matches;
      }
      if (!in_event) continue;
      total += mass;
      conditional[background[r]] += mass;
    }
    if (total.is_zero()) continue;
    for (int value = 0; value < rdom.size(); ++value) {
      if (conditional[value] / total != unconditional[value]) return false;
    }
  }
  return true;
}

}  // namespace caudit::oracle
