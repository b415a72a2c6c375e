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

#ifndef CAUDIT_DSL_HPP_
#define CAUDIT_DSL_HPP_

#include <string>
#include <string_view>
#include <variant>

#include "caudit/frames.hpp"
#include "caudit/proposition.hpp"

namespace caudit {

// The model file format, line oriented:
//
//   # comment
//   domain NAME { v1 v2 ... }
//   background VAR : DOMAIN
//   endog VAR : DOMAIN = id(V)
//   endog VAR : DOMAIN = const(v)
//   endog VAR : DOMAIN = table(P1, P2) {
//     v1 v2 -> out
//     ...
//   }
//   dist [knowledge] {
//     VAR=v VAR=v ... : p/q
//     ...
//   }
//   frame { sensitive: X  others: A1 A2  randomness: R  output: O }
//   dbframe { rows: D1 D2  randomness: R  output: O  bot: value }
//
// Rationals are written p/q or as bare integers. Parsing then printing then
// parsing again yields an identical in-memory model.

using ParsedModel = std::variant<AnalysisFrame, DatabaseFrame>;

// Throws ParseError with line/column on grammar violations, and the usual
// validation errors for semantic ones. `limits` caps the accepted model.
ParsedModel parse_model(std::string_view text,
                        const ModelLimits& limits = ModelLimits());

std::string print_model(const AnalysisFrame& f);
std::string print_model(const DatabaseFrame& f);
std::string print_model(const ParsedModel& m);

// Grammar: atoms VAR=v and VAR!=v, operators ! & | with that binding order,
// parentheses, and the constants true / false.
Proposition parse_proposition(std::string_view text);

// Access to the shared probability model of either frame type.
const ProbCausalModel& parsed_pm(const ParsedModel& m);

}  // namespace caudit

#endif  // CAUDIT_DSL_HPP_
