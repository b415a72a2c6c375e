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

#include "caudit/frames.hpp"

#include <algorithm>
#include <set>

#include "caudit/error.hpp"

namespace caudit {

namespace {

// The unique endogenous variable whose equation is the identity copy of
// `attr`. Zero or several candidates is a shape violation.
VarIndex identity_copy_of(const CausalModel& m, VarIndex attr) {
  VarIndex found = -1;
  for (int v = m.background_count(); v < m.variable_count(); ++v) {
    if (m.is_identity(v, attr)) {
      if (found != -1) {
        fail(Errc::kInvalidParameter,
             "two endogenous copies of '" + m.variable(attr).id + "'");
      }
      found = v;
    }
  }
  if (found == -1) {
    fail(Errc::kInvalidParameter,
         "no endogenous identity copy of '" + m.variable(attr).id + "'");
  }
  return found;
}

VarIndex require_background(const CausalModel& m, const std::string& id) {
  const VarIndex v = m.require(id);
  if (m.is_endogenous(v)) {
    fail(Errc::kInvalidParameter, "'" + id + "' must be a background variable");
  }
  return v;
}

void check_randomness_feeds_only(const CausalModel& m, VarIndex r, VarIndex output) {
  for (const StructuralEquation& eq : m.equations()) {
    const bool uses_r =
        std::find(eq.parents.begin(), eq.parents.end(), r) != eq.parents.end();
    if (uses_r && eq.target != output) {
      fail(Errc::kInvalidParameter,
           "randomness '" + m.variable(r).id +
               "' may only feed the output, but feeds '" +
               m.variable(eq.target).id + "'");
    }
  }
}

}  // namespace

AnalysisFrame make_analysis_frame(ProbCausalModel pm, const std::string& sensitive,
                                  const std::vector<std::string>& others,
                                  const std::optional<std::string>& randomness,
                                  const std::string& output) {
  const CausalModel& m = pm.model;
  if (!m.validated()) fail(Errc::kInvalidParameter, "frame needs a validated model");
  AnalysisFrame f;
  f.sensitive_attr = require_background(m, sensitive);
  for (const std::string& id : others) {
    f.other_attrs.push_back(require_background(m, id));
  }
  if (randomness) f.randomness = require_background(m, *randomness);
  f.output = m.require(output);
  if (!m.is_endogenous(f.output)) {
    fail(Errc::kInvalidParameter, "output '" + output + "' must be endogenous");
  }
  f.sensitive_input = identity_copy_of(m, f.sensitive_attr);
  for (VarIndex a : f.other_attrs) {
    f.other_inputs.push_back(identity_copy_of(m, a));
  }
  f.pm = std::move(pm);
  validate_frame(f);
  return f;
}

void validate_frame(const AnalysisFrame& f) {
  const CausalModel& m = f.pm.model;
  if (!m.validated()) fail(Errc::kInvalidParameter, "frame needs a validated model");

  // Role labels must cover the background exactly.
  std::set<VarIndex> roles{f.sensitive_attr};
  for (VarIndex a : f.other_attrs) {
    if (!roles.insert(a).second) {
      fail(Errc::kInvalidParameter, "a background variable holds two roles");
    }
  }
  if (f.randomness && !roles.insert(*f.randomness).second) {
    fail(Errc::kInvalidParameter, "a background variable holds two roles");
  }
  if (static_cast<int>(roles.size()) != m.background_count()) {
    fail(Errc::kInvalidParameter,
         "every background variable needs a role (sensitive, other, or randomness)");
  }
  for (VarIndex v : roles) {
    if (m.is_endogenous(v)) {
      fail(Errc::kInvalidParameter, "attribute roles must be background variables");
    }
  }

  if (!m.is_endogenous(f.output)) {
    fail(Errc::kInvalidParameter, "output must be endogenous");
  }
  if (!m.is_identity(f.sensitive_input, f.sensitive_attr)) {
    fail(Errc::kInvalidParameter, "sensitive input must copy the sensitive attribute");
  }
  if (f.other_inputs.size() != f.other_attrs.size()) {
    fail(Errc::kInvalidParameter, "one input per other attribute");
  }
  for (size_t i = 0; i < f.other_attrs.size(); ++i) {
    if (!m.is_identity(f.other_inputs[i], f.other_attrs[i])) {
      fail(Errc::kInvalidParameter, "other inputs must copy their attributes");
    }
  }

  // Output parents stay within the declared inputs plus randomness.
  std::set<VarIndex> allowed{f.sensitive_input};
  for (VarIndex v : f.other_inputs) allowed.insert(v);
  if (f.randomness) allowed.insert(*f.randomness);
  for (VarIndex p : m.equation(f.output).parents) {
    if (!allowed.count(p)) {
      fail(Errc::kInvalidParameter,
           "output reads '" + m.variable(p).id +
               "', which is not an input or the randomness");
    }
  }
  if (f.randomness) check_randomness_feeds_only(m, *f.randomness, f.output);

  // Endogenous variables are exactly the inputs plus the output.
  if (m.endogenous_count() !=
      static_cast<int>(2 + f.other_inputs.size())) {
    fail(Errc::kInvalidParameter,
         "endogenous variables must be exactly the inputs and the output");
  }
}

DatabaseFrame make_database_frame(ProbCausalModel pm,
                                  const std::vector<std::string>& rows,
                                  const std::optional<std::string>& randomness,
                                  const std::string& output, BotMode bot_mode) {
  const CausalModel& m = pm.model;
  if (!m.validated()) fail(Errc::kInvalidParameter, "frame needs a validated model");
  DatabaseFrame f;
  f.bot_mode = bot_mode;
  if (rows.empty()) fail(Errc::kInvalidParameter, "a database frame needs rows");
  for (const std::string& id : rows) {
    f.row_attrs.push_back(require_background(m, id));
  }
  if (randomness) f.randomness = require_background(m, *randomness);
  f.output = m.require(output);
  for (VarIndex r : f.row_attrs) {
    f.row_inputs.push_back(identity_copy_of(m, r));
  }
  f.pm = std::move(pm);
  validate_frame(f);
  return f;
}

void validate_frame(const DatabaseFrame& f) {
  const CausalModel& m = f.pm.model;
  if (!m.validated()) fail(Errc::kInvalidParameter, "frame needs a validated model");
  if (f.row_attrs.empty()) fail(Errc::kInvalidParameter, "a database frame needs rows");

  std::set<VarIndex> roles;
  for (VarIndex r : f.row_attrs) {
    if (!roles.insert(r).second) {
      fail(Errc::kInvalidParameter, "a row variable is listed twice");
    }
    if (m.is_endogenous(r)) {
      fail(Errc::kInvalidParameter, "row attributes must be background variables");
    }
    if (!m.variable(r).domain->has_bot()) {
      fail(Errc::kInvalidParameter,
           "row domain '" + m.variable(r).domain->name() + "' must contain '" +
               std::string(kBotToken) + "'");
    }
  }
  if (f.randomness && !roles.insert(*f.randomness).second) {
    fail(Errc::kInvalidParameter, "a background variable holds two roles");
  }
  if (static_cast<int>(roles.size()) != m.background_count()) {
    fail(Errc::kInvalidParameter, "every background variable needs a role");
  }

  if (!m.is_endogenous(f.output)) {
    fail(Errc::kInvalidParameter, "output must be endogenous");
  }
  if (f.row_inputs.size() != f.row_attrs.size()) {
    fail(Errc::kInvalidParameter, "one input per row");
  }
  for (size_t i = 0; i < f.row_attrs.size(); ++i) {
    if (!m.is_identity(f.row_inputs[i], f.row_attrs[i])) {
      fail(Errc::kInvalidParameter, "row inputs must copy their rows");
    }
  }
  std::set<VarIndex> allowed(f.row_inputs.begin(), f.row_inputs.end());
  if (f.randomness) allowed.insert(*f.randomness);
  for (VarIndex p : m.equation(f.output).parents) {
    if (!allowed.count(p)) {
      fail(Errc::kInvalidParameter,
           "output reads '" + m.variable(p).id +
               "', which is not a row input or the randomness");
    }
  }
  if (f.randomness) check_randomness_feeds_only(m, *f.randomness, f.output);
  if (m.endogenous_count() != static_cast<int>(1 + f.row_inputs.size())) {
    fail(Errc::kInvalidParameter,
         "endogenous variables must be exactly the row inputs and the output");
  }
}

}  // namespace caudit
