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

#include "caudit/proposition.hpp"

#include "caudit/error.hpp"

namespace caudit {

Proposition Proposition::eq(std::string var, std::string value) {
  Proposition p(Kind::kEq);
  p.var_ = std::move(var);
  p.value_ = std::move(value);
  return p;
}

Proposition Proposition::ne(std::string var, std::string value) {
  Proposition p(Kind::kNe);
  p.var_ = std::move(var);
  p.value_ = std::move(value);
  return p;
}

Proposition Proposition::negate(Proposition a) {
  Proposition p(Kind::kNot);
  p.children_.push_back(std::move(a));
  return p;
}

Proposition Proposition::conj(Proposition a, Proposition b) {
  Proposition p(Kind::kAnd);
  p.children_.push_back(std::move(a));
  p.children_.push_back(std::move(b));
  return p;
}

Proposition Proposition::disj(Proposition a, Proposition b) {
  Proposition p(Kind::kOr);
  p.children_.push_back(std::move(a));
  p.children_.push_back(std::move(b));
  return p;
}

Proposition Proposition::any_of(std::vector<Proposition> terms) {
  if (terms.empty()) return falsity();
  Proposition acc = std::move(terms[0]);
  for (size_t i = 1; i < terms.size(); ++i) {
    acc = disj(std::move(acc), std::move(terms[i]));
  }
  return acc;
}

bool Proposition::operator==(const Proposition& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::kTrue:
    case Kind::kFalse:
      return true;
    case Kind::kEq:
    case Kind::kNe:
      return var_ == o.var_ && value_ == o.value_;
    case Kind::kNot:
      return children_[0] == o.children_[0];
    case Kind::kAnd:
    case Kind::kOr:
      return children_[0] == o.children_[0] && children_[1] == o.children_[1];
  }
  return false;
}

namespace {

int precedence(Proposition::Kind k) {
  switch (k) {
    case Proposition::Kind::kOr: return 1;
    case Proposition::Kind::kAnd: return 2;
    case Proposition::Kind::kNot: return 3;
    default: return 4;  // atoms and constants never need parentheses
  }
}

void print_into(const Proposition& p, int parent_prec, bool right_side,
                std::string* out) {
  const int prec = precedence(p.kind());
  // Parenthesize when binding looser than the parent, and on the right-hand
  // side of an equal-precedence operator so the printed tree reparses with
  // the same shape (parsing is left-associative).
  const bool parens = prec < parent_prec || (right_side && prec == parent_prec);
  if (parens) out->push_back('(');
  switch (p.kind()) {
    case Proposition::Kind::kTrue:
      *out += "true";
      break;
    case Proposition::Kind::kFalse:
      *out += "false";
      break;
    case Proposition::Kind::kEq:
      *out += p.var() + "=" + p.value();
      break;
    case Proposition::Kind::kNe:
      *out += p.var() + "!=" + p.value();
      break;
    case Proposition::Kind::kNot:
      *out += "!";
      print_into(p.child(0), precedence(Proposition::Kind::kNot), false, out);
      break;
    case Proposition::Kind::kAnd:
      print_into(p.child(0), prec, false, out);
      *out += " & ";
      print_into(p.child(1), prec, true, out);
      break;
    case Proposition::Kind::kOr:
      print_into(p.child(0), prec, false, out);
      *out += " | ";
      print_into(p.child(1), prec, true, out);
      break;
  }
  if (parens) out->push_back(')');
}

}  // namespace

std::string Proposition::str() const {
  std::string out;
  print_into(*this, 0, false, &out);
  return out;
}

CompiledProp::CompiledProp(const Proposition& p, const CausalModel& m) {
  build(p, m);
}

int CompiledProp::build(const Proposition& p, const CausalModel& m) {
  const int idx = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{p.kind()});
  switch (p.kind()) {
    case Proposition::Kind::kTrue:
    case Proposition::Kind::kFalse:
      break;
    case Proposition::Kind::kEq:
    case Proposition::Kind::kNe: {
      const VarIndex v = m.require(p.var());
      const auto val = m.variable(v).domain->index_of(p.value());
      if (!val) {
        fail(Errc::kDomainMismatch, "'" + p.value() +
                                        "' is not in the domain of '" +
                                        p.var() + "'");
      }
      nodes_[idx].var = v;
      nodes_[idx].value = *val;
      break;
    }
    case Proposition::Kind::kNot: {
      const int c = build(p.child(0), m);
      nodes_[idx].left = c;
      break;
    }
    case Proposition::Kind::kAnd:
    case Proposition::Kind::kOr: {
      const int l = build(p.child(0), m);
      const int r = build(p.child(1), m);
      nodes_[idx].left = l;
      nodes_[idx].right = r;
      break;
    }
  }
  return idx;
}

bool CompiledProp::eval_node(int idx, std::span<const ValueIndex> world) const {
  const Node& n = nodes_[idx];
  switch (n.kind) {
    case Proposition::Kind::kTrue: return true;
    case Proposition::Kind::kFalse: return false;
    case Proposition::Kind::kEq: return world[n.var] == n.value;
    case Proposition::Kind::kNe: return world[n.var] != n.value;
    case Proposition::Kind::kNot: return !eval_node(n.left, world);
    case Proposition::Kind::kAnd:
      return eval_node(n.left, world) && eval_node(n.right, world);
    case Proposition::Kind::kOr:
      return eval_node(n.left, world) || eval_node(n.right, world);
  }
  return false;
}

}  // namespace caudit
