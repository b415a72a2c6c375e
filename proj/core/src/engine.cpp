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

#include "caudit/engine.hpp"

#include <map>

#include "caudit/error.hpp"

namespace caudit {

WorldTable::WorldTable(const ProbCausalModel& pm, const Intervention& iv) {
  model_ = iv.empty() ? pm.model : intervene(pm.model, iv);
  if (!model_.validated()) {
    fail(Errc::kInvalidParameter, "world table needs a validated model");
  }
  worlds_.reserve(pm.dist.support().size());
  for (const auto& [background, mass] : pm.dist.support()) {
    worlds_.emplace_back(evaluate_world(model_, background), mass);
  }
}

Rational WorldTable::mass_where(const CompiledProp& p) const {
  Rational total(0);
  for (const auto& [world, mass] : worlds_) {
    if (p.eval(world)) total += mass;
  }
  return total;
}

Rational WorldTable::mass_where(const CompiledProp& p, const CompiledProp& q) const {
  Rational total(0);
  for (const auto& [world, mass] : worlds_) {
    if (p.eval(world) && q.eval(world)) total += mass;
  }
  return total;
}

Rational probability(const ProbCausalModel& pm, const QueryContext& ctx,
                     const Proposition& phi) {
  const WorldTable table(pm, ctx.interventions);
  const CompiledProp cond(ctx.condition, table.model());
  const CompiledProp event(phi, table.model());
  const Rational denom = table.mass_where(cond);
  if (denom.is_zero()) {
    fail(Errc::kInconsistentContext,
         "conditioning event '" + ctx.condition.str() + "' has zero probability");
  }
  return table.mass_where(cond, event) / denom;
}

std::vector<std::pair<ValueIndex, Rational>> distribution(const ProbCausalModel& pm,
                                                          const QueryContext& ctx,
                                                          VarIndex var) {
  const WorldTable table(pm, ctx.interventions);
  const CausalModel& m = table.model();
  if (var < 0 || var >= m.variable_count()) {
    fail(Errc::kUnknownVariable, "variable index out of range");
  }
  const CompiledProp cond(ctx.condition, m);
  Rational denom(0);
  std::vector<Rational> mass(m.variable(var).domain->size(), Rational(0));
  for (const auto& [world, w] : table.worlds()) {
    if (!cond.eval(world)) continue;
    denom += w;
    mass[world[var]] += w;
  }
  if (denom.is_zero()) {
    fail(Errc::kInconsistentContext,
         "conditioning event '" + ctx.condition.str() + "' has zero probability");
  }
  std::vector<std::pair<ValueIndex, Rational>> out;
  out.reserve(mass.size());
  for (size_t i = 0; i < mass.size(); ++i) {
    out.emplace_back(static_cast<ValueIndex>(i), mass[i] / denom);
  }
  return out;
}

namespace {

std::vector<ValueIndex> project(const Assignment& world,
                                std::span<const VarIndex> vars) {
  std::vector<ValueIndex> key;
  key.reserve(vars.size());
  for (VarIndex v : vars) key.push_back(world[v]);
  return key;
}

}  // namespace

bool independent(const ProbCausalModel& pm, std::span<const VarIndex> lhs,
                 std::span<const VarIndex> rhs) {
  const WorldTable table(pm);
  for (VarIndex v : lhs) {
    if (v < 0 || v >= table.model().variable_count()) {
      fail(Errc::kUnknownVariable, "variable index out of range");
    }
  }
  for (VarIndex v : rhs) {
    if (v < 0 || v >= table.model().variable_count()) {
      fail(Errc::kUnknownVariable, "variable index out of range");
    }
  }
  std::map<std::vector<ValueIndex>, Rational> left, right;
  std::map<std::pair<std::vector<ValueIndex>, std::vector<ValueIndex>>, Rational> joint;
  for (const auto& [world, mass] : table.worlds()) {
    auto l = project(world, lhs);
    auto r = project(world, rhs);
    left[l] += mass;
    right[r] += mass;
    joint[{std::move(l), std::move(r)}] += mass;
  }
  for (const auto& [l, lmass] : left) {
    for (const auto& [r, rmass] : right) {
      Rational j(0);
      if (auto it = joint.find({l, r}); it != joint.end()) j = it->second;
      if (j != lmass * rmass) return false;
    }
  }
  return true;
}

std::vector<std::pair<ValueIndex, Rational>> marginal(const ProbCausalModel& pm,
                                                      VarIndex var) {
  return distribution(pm, QueryContext(), var);
}

bool is_fresh(const ProbCausalModel& pm, VarIndex r,
              std::span<const std::pair<ValueIndex, Rational>> declared_marginal) {
  if (!is_fresh_auto(pm, r)) return false;
  const auto actual = marginal(pm, r);
  std::vector<Rational> declared(actual.size(), Rational(0));
  for (const auto& [value, mass] : declared_marginal) {
    if (value < 0 || value >= static_cast<ValueIndex>(declared.size())) {
      fail(Errc::kDomainMismatch, "declared marginal value out of domain");
    }
    declared[value] = mass;
  }
  for (const auto& [value, mass] : actual) {
    if (declared[value] != mass) return false;
  }
  return true;
}

bool is_fresh_auto(const ProbCausalModel& pm, VarIndex r) {
  const CausalModel& m = pm.model;
  if (r < 0 || r >= m.variable_count()) {
    fail(Errc::kUnknownVariable, "variable index out of range");
  }
  if (m.is_endogenous(r)) {
    fail(Errc::kInvalidParameter,
         "freshness is a property of background variables; '" +
             m.variable(r).id + "' is endogenous");
  }
  std::vector<VarIndex> others;
  for (int v = 0; v < m.background_count(); ++v) {
    if (v != r) others.push_back(v);
  }
  if (others.empty()) return true;  // nothing to correlate with
  const VarIndex self[] = {r};
  return independent(pm, self, others);
}

}  // namespace caudit
