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

#ifndef CAUDIT_FRAMES_HPP_
#define CAUDIT_FRAMES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "caudit/engine.hpp"
#include "caudit/scm.hpp"

namespace caudit {

// A probabilistic causal model annotated with analysis roles, in the
// canonical shape: the sensitive input copies the sensitive attribute, each
// other input copies its attribute, and the output is a function of the
// inputs plus optional fresh randomness.
struct AnalysisFrame {
  ProbCausalModel pm;
  VarIndex sensitive_attr = -1;           // background
  std::vector<VarIndex> other_attrs;      // background
  std::optional<VarIndex> randomness;     // background, parent only of output
  VarIndex sensitive_input = -1;          // endogenous, identity on sensitive_attr
  std::vector<VarIndex> other_inputs;     // endogenous, identity per attribute
  VarIndex output = -1;                   // endogenous

  const Domain& output_domain() const { return *pm.model.variable(output).domain; }
  const Domain& sensitive_domain() const {
    return *pm.model.variable(sensitive_attr).domain;
  }
};

// Resolves role names against the model's variables, derives the input
// variables (the unique identity copies of the named attributes), and checks
// the canonical shape. Throws on any violation.
AnalysisFrame make_analysis_frame(ProbCausalModel pm, const std::string& sensitive,
                                  const std::vector<std::string>& others,
                                  const std::optional<std::string>& randomness,
                                  const std::string& output);

// Re-checks an already-assembled frame (used after deserialization).
void validate_frame(const AnalysisFrame& f);

// How the BOT row value is read when measuring differential privacy.
//  kValue:   BOT is one more row value; comparisons range over the full
//            domain including BOT on both sides.
//  kRemoved: BOT encodes an absent row; comparisons are value-to-value plus
//            value-to-absent in both directions, where the absent side
//            evaluates the table's BOT column (the shorter-database path).
// For total tables the two coincide except for the degenerate BOT-to-BOT
// comparison; both are kept because the add/remove reading is conventional.
enum class BotMode { kValue, kRemoved };

// A model annotated as a database release: one endogenous copy per row
// attribute, and an output reading only the rows plus optional randomness.
struct DatabaseFrame {
  ProbCausalModel pm;
  std::vector<VarIndex> row_attrs;    // background D_i
  std::vector<VarIndex> row_inputs;   // endogenous, identity per row
  std::optional<VarIndex> randomness; // background
  VarIndex output = -1;
  BotMode bot_mode = BotMode::kValue;

  const Domain& output_domain() const { return *pm.model.variable(output).domain; }
};

DatabaseFrame make_database_frame(ProbCausalModel pm,
                                  const std::vector<std::string>& rows,
                                  const std::optional<std::string>& randomness,
                                  const std::string& output, BotMode bot_mode);

void validate_frame(const DatabaseFrame& f);

}  // namespace caudit

#endif  // CAUDIT_FRAMES_HPP_
