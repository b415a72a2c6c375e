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

#ifndef CAUDIT_PROPOSITION_HPP_
#define CAUDIT_PROPOSITION_HPP_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "caudit/scm.hpp"

namespace caudit {

// Boolean formula over variable=value atoms. Holds variable ids and value
// tokens, not indices, so one proposition can be checked against any model
// that declares those names; compile() resolves it for evaluation.
class Proposition {
 public:
  enum class Kind { kTrue, kFalse, kEq, kNe, kNot, kAnd, kOr };

  Proposition() : kind_(Kind::kTrue) {}

  static Proposition truth() { return Proposition(Kind::kTrue); }
  static Proposition falsity() { return Proposition(Kind::kFalse); }
  static Proposition eq(std::string var, std::string value);
  static Proposition ne(std::string var, std::string value);
  static Proposition negate(Proposition p);
  static Proposition conj(Proposition a, Proposition b);
  static Proposition disj(Proposition a, Proposition b);
  // Fold of disj over a list; TRUE/FALSE for trivially empty inputs.
  static Proposition any_of(std::vector<Proposition> terms);

  Kind kind() const { return kind_; }
  const std::string& var() const { return var_; }
  const std::string& value() const { return value_; }
  const Proposition& child(int i) const { return children_[i]; }
  int child_count() const { return static_cast<int>(children_.size()); }

  // Grammar text: atoms VAR=v / VAR!=v, operators ! & |, parentheses.
  // Shape-preserving: parsing the result rebuilds an equal tree.
  std::string str() const;

  bool operator==(const Proposition& o) const;

 private:
  explicit Proposition(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::string var_;
  std::string value_;
  std::vector<Proposition> children_;
};

// A proposition resolved against one model: atoms as (variable index, value
// index), evaluable on a world in O(tree).
class CompiledProp {
 public:
  // Throws UnknownVariable / DomainMismatch when the proposition references
  // names the model does not declare.
  CompiledProp(const Proposition& p, const CausalModel& m);

  bool eval(std::span<const ValueIndex> world) const { return eval_node(0, world); }

 private:
  struct Node {
    Proposition::Kind kind;
    VarIndex var = -1;
    ValueIndex value = -1;
    int left = -1;
    int right = -1;
  };

  int build(const Proposition& p, const CausalModel& m);
  bool eval_node(int idx, std::span<const ValueIndex> world) const;

  std::vector<Node> nodes_;
};

}  // namespace caudit

#endif  // CAUDIT_PROPOSITION_HPP_
