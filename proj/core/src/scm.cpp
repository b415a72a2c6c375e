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

#include "caudit/scm.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "caudit/error.hpp"

namespace caudit {

Domain::Domain(std::string name, std::vector<std::string> values)
    : name_(std::move(name)), values_(std::move(values)) {
  if (values_.empty()) fail(Errc::kInvalidParameter, "domain '" + name_ + "' is empty");
  std::set<std::string> seen;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!seen.insert(values_[i]).second) {
      fail(Errc::kInvalidParameter,
           "domain '" + name_ + "' repeats value '" + values_[i] + "'");
    }
    if (values_[i] == kBotToken) bot_index_ = static_cast<ValueIndex>(i);
  }
}

std::optional<ValueIndex> Domain::index_of(std::string_view token) const {
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == token) return static_cast<ValueIndex>(i);
  }
  return std::nullopt;
}

ModelLimits ModelLimits::from_env() {
  ModelLimits limits;
  if (const char* cap = std::getenv("CAUDIT_MAX_WORLDS")) {
    char* end = nullptr;
    const long long v = std::strtoll(cap, &end, 10);
    if (end == cap || *end != '\0' || v <= 0) {
      fail(Errc::kInvalidParameter,
           std::string("CAUDIT_MAX_WORLDS must be a positive integer, got '") +
               cap + "'");
    }
    limits.max_worlds = v;
    limits.max_table_rows = v;
  }
  return limits;
}

CausalModel::CausalModel(std::vector<Variable> background,
                         std::vector<Variable> endogenous,
                         std::vector<StructuralEquation> equations)
    : equations_(std::move(equations)),
      background_count_(static_cast<int>(background.size())) {
  vars_ = std::move(background);
  for (auto& v : endogenous) vars_.push_back(std::move(v));
}

std::optional<VarIndex> CausalModel::find(std::string_view id) const {
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].id == id) return static_cast<VarIndex>(i);
  }
  return std::nullopt;
}

VarIndex CausalModel::require(std::string_view id) const {
  if (auto v = find(id)) return *v;
  fail(Errc::kUnknownVariable, "no variable named '" + std::string(id) + "'");
}

const StructuralEquation& CausalModel::equation(VarIndex endogenous_var) const {
  for (const auto& eq : equations_) {
    if (eq.target == endogenous_var) return eq;
  }
  fail(Errc::kMissingEquation,
       "no equation for '" + vars_[endogenous_var].id + "'");
}

bool CausalModel::is_identity(VarIndex v, VarIndex src) const {
  if (!is_endogenous(v)) return false;
  const StructuralEquation& eq = equation(v);
  if (eq.parents.size() != 1 || eq.parents[0] != src) return false;
  if (!(*vars_[v].domain == *vars_[src].domain)) return false;
  for (size_t i = 0; i < eq.table.size(); ++i) {
    if (eq.table[i] != static_cast<ValueIndex>(i)) return false;
  }
  return true;
}

bool CausalModel::operator==(const CausalModel& o) const {
  return vars_ == o.vars_ && background_count_ == o.background_count_ &&
         equations_ == o.equations_;
}

namespace {

int64_t table_rows_for(const CausalModel& m, const StructuralEquation& eq,
                       const ModelLimits& limits) {
  int64_t rows = 1;
  for (VarIndex p : eq.parents) {
    rows *= m.variable(p).domain->size();
    if (rows > limits.max_table_rows) {
      fail(Errc::kLimitExceeded,
           "equation table for '" + m.variable(eq.target).id + "' exceeds " +
               std::to_string(limits.max_table_rows) + " rows");
    }
  }
  return rows;
}

}  // namespace

CausalModel validate_model(CausalModel model, const ModelLimits& limits) {
  if (model.variable_count() > limits.max_variables) {
    fail(Errc::kLimitExceeded,
         "model has " + std::to_string(model.variable_count()) +
             " variables; the exhaustive engine is capped at " +
             std::to_string(limits.max_variables));
  }
  std::set<std::string> ids;
  for (const Variable& v : model.vars_) {
    if (!ids.insert(v.id).second) {
      fail(Errc::kInvalidParameter, "duplicate variable id '" + v.id + "'");
    }
    if (v.domain->size() > limits.max_domain_values) {
      fail(Errc::kLimitExceeded,
           "domain '" + v.domain->name() + "' has " +
               std::to_string(v.domain->size()) + " values; cap is " +
               std::to_string(limits.max_domain_values));
    }
  }
  for (int i = 0; i < model.background_count_; ++i) {
    if (model.vars_[i].role != Role::kBackground) {
      fail(Errc::kInvalidParameter,
           "variable '" + model.vars_[i].id + "' listed as background but not tagged so");
    }
  }
  for (int i = model.background_count_; i < model.variable_count(); ++i) {
    if (model.vars_[i].role != Role::kEndogenous) {
      fail(Errc::kInvalidParameter,
           "variable '" + model.vars_[i].id + "' listed as endogenous but not tagged so");
    }
  }

  // Exactly one equation per endogenous variable.
  std::vector<int> eq_of(model.variable_count(), -1);
  for (size_t e = 0; e < model.equations_.size(); ++e) {
    const StructuralEquation& eq = model.equations_[e];
    if (eq.target < 0 || eq.target >= model.variable_count() ||
        !model.is_endogenous(eq.target)) {
      fail(Errc::kInvalidParameter, "equation targets a non-endogenous variable");
    }
    if (eq_of[eq.target] != -1) {
      fail(Errc::kInvalidParameter,
           "two equations for '" + model.vars_[eq.target].id + "'");
    }
    eq_of[eq.target] = static_cast<int>(e);
  }
  for (int v = model.background_count_; v < model.variable_count(); ++v) {
    if (eq_of[v] == -1) {
      fail(Errc::kMissingEquation, "no equation for '" + model.vars_[v].id + "'");
    }
  }

  // Table totality and codomain checks.
  for (const StructuralEquation& eq : model.equations_) {
    for (VarIndex p : eq.parents) {
      if (p < 0 || p >= model.variable_count()) {
        fail(Errc::kUnknownVariable, "equation parent index out of range");
      }
    }
    const int64_t rows = table_rows_for(model, eq, limits);
    if (static_cast<int64_t>(eq.table.size()) != rows) {
      fail(Errc::kNonTotalTable,
           "table for '" + model.vars_[eq.target].id + "' has " +
               std::to_string(eq.table.size()) + " rows, needs " +
               std::to_string(rows));
    }
    const int out_size = model.vars_[eq.target].domain->size();
    for (ValueIndex out : eq.table) {
      if (out < 0 || out >= out_size) {
        fail(Errc::kDomainMismatch,
             "table for '" + model.vars_[eq.target].id +
                 "' writes a value outside its domain");
      }
    }
  }

  // Topological order over endogenous variables (Kahn's algorithm).
  // Background variables are sources by construction.
  std::vector<int> missing_parents(model.variable_count(), 0);
  std::vector<std::vector<VarIndex>> dependents(model.variable_count());
  for (const StructuralEquation& eq : model.equations_) {
    for (VarIndex p : eq.parents) {
      if (model.is_endogenous(p)) {
        ++missing_parents[eq.target];
        dependents[p].push_back(eq.target);
      }
    }
  }
  std::vector<VarIndex> order;
  std::vector<VarIndex> ready;
  for (int v = model.background_count_; v < model.variable_count(); ++v) {
    if (missing_parents[v] == 0) ready.push_back(v);
  }
  // Keep the order deterministic: smallest index first.
  std::sort(ready.begin(), ready.end());
  while (!ready.empty()) {
    const VarIndex v = ready.front();
    ready.erase(ready.begin());
    order.push_back(v);
    for (VarIndex d : dependents[v]) {
      if (--missing_parents[d] == 0) {
        ready.insert(std::upper_bound(ready.begin(), ready.end(), d), d);
      }
    }
  }
  if (static_cast<int>(order.size()) != model.endogenous_count()) {
    std::string cycle;
    for (int v = model.background_count_; v < model.variable_count(); ++v) {
      if (missing_parents[v] > 0) {
        if (!cycle.empty()) cycle += ", ";
        cycle += model.vars_[v].id;
      }
    }
    fail(Errc::kCycleDetected, "equations are not recursive; cycle among: " + cycle);
  }

  model.topo_ = std::move(order);
  model.validated_ = true;
  return model;
}

Intervention Intervention::of(
    const CausalModel& m,
    std::span<const std::pair<std::string, std::string>> pairs) {
  if (pairs.empty()) fail(Errc::kInvalidParameter, "empty intervention");
  Intervention iv;
  for (const auto& [id, token] : pairs) {
    const VarIndex v = m.require(id);
    if (!m.is_endogenous(v)) {
      fail(Errc::kInterventionOnBackground,
           "cannot intervene on background variable '" + id + "'");
    }
    const auto val = m.variable(v).domain->index_of(token);
    if (!val) {
      fail(Errc::kDomainMismatch,
           "'" + token + "' is not in the domain of '" + id + "'");
    }
    iv.assignments_.emplace_back(v, *val);
  }
  std::sort(iv.assignments_.begin(), iv.assignments_.end());
  for (size_t i = 1; i < iv.assignments_.size(); ++i) {
    if (iv.assignments_[i].first == iv.assignments_[i - 1].first) {
      fail(Errc::kInvalidParameter, "intervention assigns a variable twice");
    }
  }
  return iv;
}

Intervention Intervention::single(const CausalModel& m, std::string_view var,
                                  std::string_view value) {
  const std::pair<std::string, std::string> one[] = {
      {std::string(var), std::string(value)}};
  return of(m, one);
}

CausalModel intervene(const CausalModel& m, const Intervention& iv) {
  if (!m.validated()) fail(Errc::kInvalidParameter, "intervene needs a validated model");
  CausalModel out = m;
  for (const auto& [var, value] : iv.assignments()) {
    for (StructuralEquation& eq : out.equations_) {
      if (eq.target == var) {
        eq.parents.clear();
        eq.table.assign(1, value);
        break;
      }
    }
  }
  // Replacing equations with constants cannot introduce a cycle, but the
  // cached order must be recomputed since dependencies shrank.
  return validate_model(std::move(out));
}

Assignment evaluate_world(const CausalModel& m,
                          std::span<const ValueIndex> background) {
  if (!m.validated()) {
    fail(Errc::kInvalidParameter, "evaluate_world needs a validated model");
  }
  if (static_cast<int>(background.size()) != m.background_count()) {
    fail(Errc::kIncompleteBackground,
         "background assignment covers " + std::to_string(background.size()) +
             " of " + std::to_string(m.background_count()) + " variables");
  }
  Assignment world(m.variable_count(), -1);
  for (int i = 0; i < m.background_count(); ++i) {
    const int size = m.variable(i).domain->size();
    if (background[i] < 0 || background[i] >= size) {
      fail(Errc::kDomainMismatch,
           "background value for '" + m.variable(i).id + "' out of domain");
    }
    world[i] = background[i];
  }
  for (VarIndex v : m.topological_order()) {
    const StructuralEquation& eq = m.equation(v);
    int64_t row = 0;
    for (VarIndex p : eq.parents) {
      row = row * m.variable(p).domain->size() + world[p];
    }
    world[v] = eq.table[row];
  }
  return world;
}

BackgroundDist::BackgroundDist(const CausalModel& m,
                               std::vector<std::pair<Assignment, Rational>> entries,
                               DistKind kind)
    : kind_(kind) {
  Rational total(0);
  for (auto& [assignment, mass] : entries) {
    if (mass.sign() < 0) {
      fail(Errc::kInvalidPrior, "negative probability in background distribution");
    }
    if (static_cast<int>(assignment.size()) != m.background_count()) {
      fail(Errc::kInvalidPrior,
           "distribution entry covers " + std::to_string(assignment.size()) +
               " of " + std::to_string(m.background_count()) +
               " background variables");
    }
    for (int i = 0; i < m.background_count(); ++i) {
      if (assignment[i] < 0 || assignment[i] >= m.variable(i).domain->size()) {
        fail(Errc::kInvalidPrior, "distribution entry value out of domain");
      }
    }
    total += mass;
    if (mass.is_zero()) continue;
    support_.emplace_back(std::move(assignment), std::move(mass));
  }
  if (!total.is_one()) {
    fail(Errc::kInvalidPrior,
         "background distribution sums to " + total.str() + ", not 1");
  }
  std::sort(support_.begin(), support_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < support_.size(); ++i) {
    if (support_[i].first == support_[i - 1].first) {
      fail(Errc::kInvalidPrior, "duplicate assignment in background distribution");
    }
  }
  if (support_.empty()) {
    fail(Errc::kInvalidPrior, "background distribution has empty support");
  }
}

Assignment make_background(
    const CausalModel& m,
    std::span<const std::pair<std::string, std::string>> pairs) {
  Assignment bg(m.background_count(), -1);
  for (const auto& [id, token] : pairs) {
    const VarIndex v = m.require(id);
    if (m.is_endogenous(v)) {
      fail(Errc::kInvalidParameter, "'" + id + "' is not a background variable");
    }
    const auto val = m.variable(v).domain->index_of(token);
    if (!val) {
      fail(Errc::kDomainMismatch,
           "'" + token + "' is not in the domain of '" + id + "'");
    }
    bg[v] = *val;
  }
  for (int i = 0; i < m.background_count(); ++i) {
    if (bg[i] < 0) {
      fail(Errc::kIncompleteBackground,
           "no value given for background variable '" + m.variable(i).id + "'");
    }
  }
  return bg;
}

}  // namespace caudit
