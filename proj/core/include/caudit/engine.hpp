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

#ifndef CAUDIT_ENGINE_HPP_
#define CAUDIT_ENGINE_HPP_

#include <span>
#include <utility>
#include <vector>

#include "caudit/proposition.hpp"
#include "caudit/rational.hpp"
#include "caudit/scm.hpp"

namespace caudit {

// do-then-see: interventions are applied to the model first, conditioning
// restricts the resulting worlds.
struct QueryContext {
  Intervention interventions;
  Proposition condition = Proposition::truth();

  QueryContext() = default;
  explicit QueryContext(Intervention iv) : interventions(std::move(iv)) {}
  explicit QueryContext(Proposition cond) : condition(std::move(cond)) {}
  QueryContext(Intervention iv, Proposition cond)
      : interventions(std::move(iv)), condition(std::move(cond)) {}
};

// Every world the (possibly intervened) model can produce, with its exact
// mass. The workhorse behind all queries; build it once per intervention and
// reuse it when running many propositions against the same model.
class WorldTable {
 public:
  WorldTable(const ProbCausalModel& pm, const Intervention& iv = Intervention());

  const CausalModel& model() const { return model_; }
  const std::vector<std::pair<Assignment, Rational>>& worlds() const {
    return worlds_;
  }

  Rational mass_where(const CompiledProp& p) const;
  // Joint mass of p AND q.
  Rational mass_where(const CompiledProp& p, const CompiledProp& q) const;

 private:
  CausalModel model_;  // the intervened model worlds refer to
  std::vector<std::pair<Assignment, Rational>> worlds_;
};

// Pr[phi | context] as an exact rational. Throws InconsistentContext when the
// conditioning event has zero mass under the intervened model.
Rational probability(const ProbCausalModel& pm, const QueryContext& ctx,
                     const Proposition& phi);

// The full distribution of `var` given the context, in domain order. Sums to
// exactly 1; zero-mass values are kept in the result.
std::vector<std::pair<ValueIndex, Rational>> distribution(const ProbCausalModel& pm,
                                                          const QueryContext& ctx,
                                                          VarIndex var);

// Exact independence of two variable sets: the joint over lhs x rhs
// factorizes into the marginals, as rational equalities.
bool independent(const ProbCausalModel& pm, std::span<const VarIndex> lhs,
                 std::span<const VarIndex> rhs);

// The marginal of one variable with no context.
std::vector<std::pair<ValueIndex, Rational>> marginal(const ProbCausalModel& pm,
                                                      VarIndex var);

// Fresh randomness: r is jointly independent of every other background
// variable and matches the declared marginal (value index -> probability over
// r's full domain). For finite discrete spaces this is equivalent to the
// quantified form over all conditioning events.
bool is_fresh(const ProbCausalModel& pm, VarIndex r,
              std::span<const std::pair<ValueIndex, Rational>> declared_marginal);

// The independence half alone, with the marginal taken as-is.
bool is_fresh_auto(const ProbCausalModel& pm, VarIndex r);

}  // namespace caudit

#endif  // CAUDIT_ENGINE_HPP_
