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

#ifndef CAUDIT_SCM_HPP_
#define CAUDIT_SCM_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "caudit/rational.hpp"

namespace caudit {

// Index of a value within its domain's declared order.
using ValueIndex = int;
// Index of a variable within its model's declaration order (background
// variables first, then endogenous).
using VarIndex = int;

// Reserved spelling for the "absent database row" sentinel. It is an
// ordinary domain value; all special semantics live in how equation tables
// treat it.
inline constexpr std::string_view kBotToken = "bot";

// A named, ordered, finite set of value tokens. The declaration order is
// fixed and drives every deterministic iteration and tie-break in the
// library. Immutable; shared between variables.
class Domain {
 public:
  Domain(std::string name, std::vector<std::string> values);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(values_.size()); }
  const std::string& value(ValueIndex i) const { return values_[i]; }
  const std::vector<std::string>& values() const { return values_; }
  std::optional<ValueIndex> index_of(std::string_view token) const;
  bool has_bot() const { return bot_index_.has_value(); }
  std::optional<ValueIndex> bot_index() const { return bot_index_; }

  bool operator==(const Domain& o) const {
    return name_ == o.name_ && values_ == o.values_;
  }

 private:
  std::string name_;
  std::vector<std::string> values_;
  std::optional<ValueIndex> bot_index_;
};

using DomainPtr = std::shared_ptr<const Domain>;

enum class Role { kBackground, kEndogenous };

struct Variable {
  std::string id;
  Role role;
  DomainPtr domain;

  bool operator==(const Variable& o) const {
    return id == o.id && role == o.role && *domain == *o.domain;
  }
};

// One structural equation: a total lookup table from parent assignments to a
// value in the target's domain. Rows are indexed mixed-radix, first parent
// most significant, in domain declaration order.
struct StructuralEquation {
  VarIndex target = -1;
  std::vector<VarIndex> parents;
  std::vector<ValueIndex> table;

  int64_t row_count() const { return static_cast<int64_t>(table.size()); }

  bool operator==(const StructuralEquation& o) const {
    return target == o.target && parents == o.parents && table == o.table;
  }
};

// Hard limits for the exhaustive engine. Exceeding one is an error with a
// clear message, not a silent slowdown.
struct ModelLimits {
  int max_domain_values = 64;
  int max_variables = 16;
  int64_t max_table_rows = 1 << 20;
  int64_t max_worlds = 1 << 20;

  // Reads CAUDIT_MAX_WORLDS when set.
  static ModelLimits from_env();
};

// A total assignment of value indices to a model's variables, in model
// variable order. Background-only assignments use the first
// background_count() slots.
using Assignment = std::vector<ValueIndex>;

class Intervention;

// A finite recursive structural causal model. Construct with the variable
// lists and one equation per endogenous variable, then call validate_model
// before using it anywhere; every engine entry point requires a validated
// model.
class CausalModel {
 public:
  CausalModel() = default;
  CausalModel(std::vector<Variable> background, std::vector<Variable> endogenous,
              std::vector<StructuralEquation> equations);

  int variable_count() const { return static_cast<int>(vars_.size()); }
  int background_count() const { return background_count_; }
  int endogenous_count() const { return variable_count() - background_count_; }
  bool is_endogenous(VarIndex v) const { return v >= background_count_; }

  const Variable& variable(VarIndex v) const { return vars_[v]; }
  const std::vector<Variable>& variables() const { return vars_; }
  std::optional<VarIndex> find(std::string_view id) const;
  // find() or an UnknownVariable error.
  VarIndex require(std::string_view id) const;

  // Equation defining an endogenous variable.
  const StructuralEquation& equation(VarIndex endogenous_var) const;
  const std::vector<StructuralEquation>& equations() const { return equations_; }

  bool validated() const { return validated_; }
  // Endogenous variables in evaluation order; filled in by validate_model.
  const std::vector<VarIndex>& topological_order() const { return topo_; }

  // True when the equation for `v` copies exactly the single variable `src`
  // over an identical domain.
  bool is_identity(VarIndex v, VarIndex src) const;

  bool operator==(const CausalModel& o) const;

 private:
  friend CausalModel validate_model(CausalModel model, const ModelLimits& limits);
  friend CausalModel intervene(const CausalModel& m, const Intervention& iv);

  std::vector<Variable> vars_;
  std::vector<StructuralEquation> equations_;  // aligned with endogenous vars
  int background_count_ = 0;
  std::vector<VarIndex> topo_;
  bool validated_ = false;
};

// Checks recursivity, equation totality, and the engine limits; returns the
// model with a cached topological order. Throws CycleDetected,
// MissingEquation, NonTotalTable, DomainMismatch, or LimitExceeded.
CausalModel validate_model(CausalModel model, const ModelLimits& limits = ModelLimits());

// A set of simultaneous do() assignments to endogenous variables.
class Intervention {
 public:
  Intervention() = default;

  // Builds from (variable id, value token) pairs, validated against `m`.
  // Throws InterventionOnBackground, UnknownVariable, or DomainMismatch.
  static Intervention of(const CausalModel& m,
                         std::span<const std::pair<std::string, std::string>> pairs);
  static Intervention single(const CausalModel& m, std::string_view var,
                             std::string_view value);

  bool empty() const { return assignments_.empty(); }
  const std::vector<std::pair<VarIndex, ValueIndex>>& assignments() const {
    return assignments_;
  }

 private:
  std::vector<std::pair<VarIndex, ValueIndex>> assignments_;  // sorted by var
};

// Returns a new model where each intervened variable's equation is the
// constant equation; the input model is untouched. Replacement is
// idempotent per target.
CausalModel intervene(const CausalModel& m, const Intervention& iv);

// Computes the unique world determined by a total background assignment,
// following the cached topological order. Pure. Throws IncompleteBackground
// if `background` does not cover all background variables.
Assignment evaluate_world(const CausalModel& m, std::span<const ValueIndex> background);

enum class DistKind { kPopulation, kKnowledge };

// Exact distribution over full background assignments. Zero-mass entries are
// dropped at construction; the rest must be positive and sum to exactly 1.
class BackgroundDist {
 public:
  BackgroundDist() = default;

  // `entries` maps background assignments (background_count values, model
  // order) to probabilities. Validated against `m`. Throws InvalidPrior on
  // negative mass, duplicate assignments, bad arity/values, or sum != 1.
  BackgroundDist(const CausalModel& m,
                 std::vector<std::pair<Assignment, Rational>> entries,
                 DistKind kind = DistKind::kPopulation);

  const std::vector<std::pair<Assignment, Rational>>& support() const {
    return support_;
  }
  DistKind kind() const { return kind_; }

  bool operator==(const BackgroundDist& o) const {
    return kind_ == o.kind_ && support_ == o.support_;
  }

 private:
  std::vector<std::pair<Assignment, Rational>> support_;  // sorted by assignment
  DistKind kind_ = DistKind::kPopulation;
};

// A validated causal model paired with its exact background distribution.
struct ProbCausalModel {
  CausalModel model;
  BackgroundDist dist;

  ProbCausalModel() = default;
  ProbCausalModel(CausalModel m, BackgroundDist d)
      : model(std::move(m)), dist(std::move(d)) {}

  bool operator==(const ProbCausalModel& o) const {
    return model == o.model && dist == o.dist;
  }
};

// Convenience used across tests and fixtures: background assignment from
// (id, token) pairs. Throws on unknown names or out-of-domain values.
Assignment make_background(const CausalModel& m,
                           std::span<const std::pair<std::string, std::string>> pairs);

}  // namespace caudit

#endif  // CAUDIT_SCM_HPP_
