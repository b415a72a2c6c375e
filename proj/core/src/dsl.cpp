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

#include "caudit/dsl.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "caudit/error.hpp"

namespace caudit {

namespace {

// ---------------------------------------------------------------------------
// Tokenizer shared by the model format; newlines are tokens because dist and
// table entries end at end of line.

enum class Tok { kWord, kLBrace, kRBrace, kLParen, kRParen, kColon, kComma,
                 kEquals, kArrow, kNewline, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '/';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
        continue;
      }
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      const int line = line_;
      const int col = col_;
      if (c == '\n') {
        advance();
        ++line_;
        col_ = 1;
        tokens.push_back({Tok::kNewline, "\\n", line, col});
        continue;
      }
      if (c == '{') { advance(); tokens.push_back({Tok::kLBrace, "{", line, col}); continue; }
      if (c == '}') { advance(); tokens.push_back({Tok::kRBrace, "}", line, col}); continue; }
      if (c == '(') { advance(); tokens.push_back({Tok::kLParen, "(", line, col}); continue; }
      if (c == ')') { advance(); tokens.push_back({Tok::kRParen, ")", line, col}); continue; }
      if (c == ':') { advance(); tokens.push_back({Tok::kColon, ":", line, col}); continue; }
      if (c == ',') { advance(); tokens.push_back({Tok::kComma, ",", line, col}); continue; }
      if (c == '=') { advance(); tokens.push_back({Tok::kEquals, "=", line, col}); continue; }
      if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        advance();
        advance();
        tokens.push_back({Tok::kArrow, "->", line, col});
        continue;
      }
      if (word_char(c)) {
        std::string word;
        while (pos_ < text_.size() && word_char(text_[pos_])) {
          word.push_back(text_[pos_]);
          advance();
        }
        tokens.push_back({Tok::kWord, std::move(word), line, col});
        continue;
      }
      fail(Errc::kParseError, "line " + std::to_string(line_) + ", col " +
                                  std::to_string(col_) + ": unexpected character '" +
                                  std::string(1, c) + "'");
    }
    tokens.push_back({Tok::kEnd, "", line_, col_});
    return tokens;
  }

 private:
  void advance() {
    ++pos_;
    ++col_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

[[noreturn]] void parse_fail(const Token& at, const std::string& message) {
  fail(Errc::kParseError, "line " + std::to_string(at.line) + ", col " +
                              std::to_string(at.col) + ": " + message);
}

// ---------------------------------------------------------------------------
// Model parser.

struct PendingEquation {
  std::string target;
  std::string domain;
  enum class Kind { kId, kConst, kTable } kind;
  std::string source;                               // id() / const() argument
  std::vector<std::string> parents;                 // table
  std::vector<std::vector<std::string>> rows;       // table: parent values + output
};

struct FrameDecl {
  bool database = false;
  std::string sensitive;
  std::vector<std::string> others;
  std::vector<std::string> rows;
  std::optional<std::string> randomness;
  std::string output;
  BotMode bot_mode = BotMode::kValue;
};

class ModelParser {
 public:
  ModelParser(std::vector<Token> tokens, const ModelLimits& limits)
      : tokens_(std::move(tokens)), limits_(limits) {}

  ParsedModel run() {
    while (!at(Tok::kEnd)) {
      if (at(Tok::kNewline)) {
        next();
        continue;
      }
      const Token t = expect(Tok::kWord, "statement");
      if (t.text == "domain") {
        parse_domain();
      } else if (t.text == "background") {
        parse_background();
      } else if (t.text == "endog") {
        parse_endog();
      } else if (t.text == "dist") {
        parse_dist();
      } else if (t.text == "frame" || t.text == "dbframe") {
        parse_frame(t.text == "dbframe");
      } else {
        parse_fail(t, "unknown statement '" + t.text + "'");
      }
    }
    return assemble();
  }

 private:
  bool at(Tok k) const { return tokens_[pos_].kind == k; }
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

  Token expect(Tok k, const std::string& what) {
    if (!at(k)) parse_fail(peek(), "expected " + what);
    return next();
  }

  void skip_newlines() {
    while (at(Tok::kNewline)) next();
  }

  void end_of_line(const std::string& what) {
    if (at(Tok::kEnd) || at(Tok::kRBrace)) return;
    if (!at(Tok::kNewline)) parse_fail(peek(), "expected end of line after " + what);
    next();
  }

  void parse_domain() {
    const Token name = expect(Tok::kWord, "domain name");
    if (domains_.count(name.text)) parse_fail(name, "domain declared twice");
    expect(Tok::kLBrace, "'{'");
    std::vector<std::string> values;
    while (!at(Tok::kRBrace)) {
      if (at(Tok::kNewline)) {
        next();
        continue;
      }
      values.push_back(expect(Tok::kWord, "domain value").text);
    }
    expect(Tok::kRBrace, "'}'");
    end_of_line("domain");
    domains_[name.text] = std::make_shared<Domain>(name.text, std::move(values));
  }

  DomainPtr require_domain(const Token& name) {
    const auto it = domains_.find(name.text);
    if (it == domains_.end()) parse_fail(name, "unknown domain '" + name.text + "'");
    return it->second;
  }

  void parse_background() {
    const Token var = expect(Tok::kWord, "variable name");
    expect(Tok::kColon, "':'");
    const Token dom = expect(Tok::kWord, "domain name");
    end_of_line("background declaration");
    background_.push_back(Variable{var.text, Role::kBackground, require_domain(dom)});
  }

  void parse_endog() {
    const Token var = expect(Tok::kWord, "variable name");
    expect(Tok::kColon, "':'");
    const Token dom = expect(Tok::kWord, "domain name");
    expect(Tok::kEquals, "'='");
    const Token kind = expect(Tok::kWord, "equation (id, const, or table)");
    PendingEquation eq;
    eq.target = var.text;
    eq.domain = dom.text;
    endogenous_.push_back(Variable{var.text, Role::kEndogenous, require_domain(dom)});
    if (kind.text == "id" || kind.text == "const") {
      eq.kind = kind.text == "id" ? PendingEquation::Kind::kId
                                  : PendingEquation::Kind::kConst;
      expect(Tok::kLParen, "'('");
      eq.source = expect(Tok::kWord, "argument").text;
      expect(Tok::kRParen, "')'");
      end_of_line("equation");
    } else if (kind.text == "table") {
      eq.kind = PendingEquation::Kind::kTable;
      expect(Tok::kLParen, "'('");
      while (!at(Tok::kRParen)) {
        eq.parents.push_back(expect(Tok::kWord, "parent name").text);
        if (at(Tok::kComma)) next();
      }
      expect(Tok::kRParen, "')'");
      expect(Tok::kLBrace, "'{'");
      skip_newlines();
      while (!at(Tok::kRBrace)) {
        std::vector<std::string> row;
        while (!at(Tok::kArrow)) row.push_back(expect(Tok::kWord, "parent value").text);
        expect(Tok::kArrow, "'->'");
        row.push_back(expect(Tok::kWord, "output value").text);
        eq.rows.push_back(std::move(row));
        skip_newlines();
      }
      expect(Tok::kRBrace, "'}'");
      end_of_line("table");
    } else {
      parse_fail(kind, "expected id, const, or table");
    }
    equations_.push_back(std::move(eq));
  }

  void parse_dist() {
    if (dist_seen_) parse_fail(peek(), "dist declared twice");
    dist_seen_ = true;
    if (at(Tok::kWord)) {
      const Token kind = next();
      if (kind.text == "knowledge") {
        dist_kind_ = DistKind::kKnowledge;
      } else if (kind.text == "population") {
        dist_kind_ = DistKind::kPopulation;
      } else {
        parse_fail(kind, "expected knowledge, population, or '{'");
      }
    }
    expect(Tok::kLBrace, "'{'");
    skip_newlines();
    while (!at(Tok::kRBrace)) {
      std::vector<std::pair<std::string, std::string>> bindings;
      while (!at(Tok::kColon)) {
        const Token var = expect(Tok::kWord, "variable name");
        expect(Tok::kEquals, "'='");
        const Token value = expect(Tok::kWord, "value");
        bindings.emplace_back(var.text, value.text);
      }
      expect(Tok::kColon, "':'");
      const Token prob = expect(Tok::kWord, "probability");
      dist_entries_.push_back({std::move(bindings), Rational::parse(prob.text)});
      skip_newlines();
    }
    expect(Tok::kRBrace, "'}'");
    end_of_line("dist");
  }

  bool at_key() const {
    if (!at(Tok::kWord)) return false;
    const std::string& w = peek().text;
    if (w != "sensitive" && w != "others" && w != "randomness" && w != "output" &&
        w != "rows" && w != "bot") {
      return false;
    }
    return tokens_[pos_ + 1].kind == Tok::kColon;
  }

  void parse_frame(bool database) {
    if (frame_) parse_fail(peek(), "frame declared twice");
    FrameDecl decl;
    decl.database = database;
    expect(Tok::kLBrace, "'{'");
    skip_newlines();
    while (!at(Tok::kRBrace)) {
      if (at(Tok::kNewline)) {
        next();
        continue;
      }
      if (!at_key()) parse_fail(peek(), "expected a frame key");
      const Token key = next();
      expect(Tok::kColon, "':'");
      if (key.text == "sensitive") {
        decl.sensitive = expect(Tok::kWord, "variable").text;
      } else if (key.text == "output") {
        decl.output = expect(Tok::kWord, "variable").text;
      } else if (key.text == "randomness") {
        decl.randomness = expect(Tok::kWord, "variable").text;
      } else if (key.text == "bot") {
        const Token mode = expect(Tok::kWord, "bot mode");
        if (mode.text == "value") {
          decl.bot_mode = BotMode::kValue;
        } else if (mode.text == "removed") {
          decl.bot_mode = BotMode::kRemoved;
        } else {
          parse_fail(mode, "bot mode must be value or removed");
        }
      } else {  // others / rows
        std::vector<std::string>& list = key.text == "others" ? decl.others : decl.rows;
        while (at(Tok::kWord) && !at_key()) {
          list.push_back(next().text);
        }
      }
      skip_newlines();
    }
    expect(Tok::kRBrace, "'}'");
    end_of_line("frame");
    frame_ = std::move(decl);
  }

  ParsedModel assemble() {
    if (!frame_) {
      fail(Errc::kParseError, "model file must declare a frame or dbframe");
    }
    if (!dist_seen_) fail(Errc::kParseError, "model file must declare a dist");

    CausalModel skeleton(background_, endogenous_, {});
    std::vector<StructuralEquation> equations;
    for (const PendingEquation& p : equations_) {
      StructuralEquation eq;
      eq.target = skeleton.require(p.target);
      const DomainPtr dom = skeleton.variable(eq.target).domain;
      switch (p.kind) {
        case PendingEquation::Kind::kId: {
          const VarIndex src = skeleton.require(p.source);
          eq.parents = {src};
          const Domain& sdom = *skeleton.variable(src).domain;
          if (!(sdom == *dom)) {
            fail(Errc::kDomainMismatch, "id(" + p.source + ") needs domain '" +
                                            dom->name() + "', found '" +
                                            sdom.name() + "'");
          }
          eq.table.resize(dom->size());
          for (int i = 0; i < dom->size(); ++i) eq.table[i] = i;
          break;
        }
        case PendingEquation::Kind::kConst: {
          const auto value = dom->index_of(p.source);
          if (!value) {
            fail(Errc::kDomainMismatch,
                 "const value '" + p.source + "' outside domain '" + dom->name() + "'");
          }
          eq.table = {*value};
          break;
        }
        case PendingEquation::Kind::kTable: {
          std::vector<int> sizes;
          for (const std::string& parent : p.parents) {
            eq.parents.push_back(skeleton.require(parent));
            sizes.push_back(skeleton.variable(eq.parents.back()).domain->size());
          }
          int64_t rows = 1;
          for (int s : sizes) rows *= s;
          eq.table.assign(rows, -1);
          for (const auto& row : p.rows) {
            if (row.size() != p.parents.size() + 1) {
              fail(Errc::kParseError, "table row for '" + p.target + "' has " +
                                          std::to_string(row.size() - 1) +
                                          " parent values, needs " +
                                          std::to_string(p.parents.size()));
            }
            int64_t index = 0;
            for (size_t i = 0; i < p.parents.size(); ++i) {
              const Domain& pd = *skeleton.variable(eq.parents[i]).domain;
              const auto v = pd.index_of(row[i]);
              if (!v) {
                fail(Errc::kDomainMismatch, "'" + row[i] + "' outside domain '" +
                                                pd.name() + "' in table for '" +
                                                p.target + "'");
              }
              index = index * pd.size() + *v;
            }
            const auto out = dom->index_of(row.back());
            if (!out) {
              fail(Errc::kDomainMismatch, "'" + row.back() + "' outside domain '" +
                                              dom->name() + "' in table for '" +
                                              p.target + "'");
            }
            if (eq.table[index] != -1) {
              fail(Errc::kParseError,
                   "table for '" + p.target + "' repeats a parent combination");
            }
            eq.table[index] = *out;
          }
          for (int64_t i = 0; i < rows; ++i) {
            if (eq.table[i] == -1) {
              fail(Errc::kNonTotalTable, "table for '" + p.target +
                                             "' is missing parent combinations");
            }
          }
          break;
        }
      }
      equations.push_back(std::move(eq));
    }

    CausalModel model = validate_model(
        CausalModel(background_, endogenous_, std::move(equations)), limits_);

    std::vector<std::pair<Assignment, Rational>> entries;
    for (const auto& [bindings, mass] : dist_entries_) {
      entries.push_back({make_background(model, bindings), mass});
    }
    if (static_cast<int64_t>(entries.size()) > limits_.max_worlds) {
      fail(Errc::kLimitExceeded,
           "distribution support has " + std::to_string(entries.size()) +
               " entries; the enumeration cap is " +
               std::to_string(limits_.max_worlds) +
               " (override with CAUDIT_MAX_WORLDS)");
    }
    BackgroundDist dist(model, std::move(entries), dist_kind_);
    ProbCausalModel pm(std::move(model), std::move(dist));

    if (frame_->database) {
      return make_database_frame(std::move(pm), frame_->rows, frame_->randomness,
                                 frame_->output, frame_->bot_mode);
    }
    return make_analysis_frame(std::move(pm), frame_->sensitive, frame_->others,
                               frame_->randomness, frame_->output);
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  ModelLimits limits_;

  std::map<std::string, DomainPtr> domains_;
  std::vector<Variable> background_;
  std::vector<Variable> endogenous_;
  std::vector<PendingEquation> equations_;
  bool dist_seen_ = false;
  DistKind dist_kind_ = DistKind::kPopulation;
  std::vector<std::pair<std::vector<std::pair<std::string, std::string>>, Rational>>
      dist_entries_;
  std::optional<FrameDecl> frame_;
};

// ---------------------------------------------------------------------------
// Printer. Canonical layout: domains (first use order), background, endog,
// dist, frame line.

void print_common(const ProbCausalModel& pm, std::ostringstream& out) {
  const CausalModel& m = pm.model;

  std::vector<const Domain*> domains;
  for (const Variable& v : m.variables()) {
    bool seen = false;
    for (const Domain* d : domains) {
      if (d->name() == v.domain->name()) {
        if (!(*d == *v.domain)) {
          fail(Errc::kInvalidParameter,
               "two distinct domains share the name '" + d->name() + "'");
        }
        seen = true;
      }
    }
    if (!seen) domains.push_back(v.domain.get());
  }
  for (const Domain* d : domains) {
    out << "domain " << d->name() << " {";
    for (const std::string& v : d->values()) out << " " << v;
    out << " }\n";
  }
  out << "\n";
  for (int v = 0; v < m.background_count(); ++v) {
    out << "background " << m.variable(v).id << " : " << m.variable(v).domain->name()
        << "\n";
  }
  for (int v = m.background_count(); v < m.variable_count(); ++v) {
    const Variable& var = m.variable(v);
    const StructuralEquation& eq = m.equation(v);
    out << "endog " << var.id << " : " << var.domain->name() << " = ";
    if (eq.parents.empty()) {
      out << "const(" << var.domain->value(eq.table[0]) << ")\n";
      continue;
    }
    if (eq.parents.size() == 1 && m.is_identity(v, eq.parents[0])) {
      out << "id(" << m.variable(eq.parents[0]).id << ")\n";
      continue;
    }
    out << "table(";
    for (size_t i = 0; i < eq.parents.size(); ++i) {
      if (i) out << ", ";
      out << m.variable(eq.parents[i]).id;
    }
    out << ") {\n";
    std::vector<int> sizes;
    for (VarIndex p : eq.parents) sizes.push_back(m.variable(p).domain->size());
    std::vector<int> digits(sizes.size(), 0);
    for (int64_t row = 0; row < eq.row_count(); ++row) {
      out << " ";
      for (size_t i = 0; i < digits.size(); ++i) {
        out << " " << m.variable(eq.parents[i]).domain->value(digits[i]);
      }
      out << " -> " << var.domain->value(eq.table[row]) << "\n";
      for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
        if (++digits[i] < sizes[i]) break;
        digits[i] = 0;
      }
    }
    out << "}\n";
  }
  out << "\ndist";
  if (pm.dist.kind() == DistKind::kKnowledge) out << " knowledge";
  out << " {\n";
  for (const auto& [assignment, mass] : pm.dist.support()) {
    out << " ";
    for (int v = 0; v < m.background_count(); ++v) {
      out << " " << m.variable(v).id << "=" << m.variable(v).domain->value(assignment[v]);
    }
    out << " : " << mass.str() << "\n";
  }
  out << "}\n\n";
}

}  // namespace

ParsedModel parse_model(std::string_view text, const ModelLimits& limits) {
  Lexer lexer(text);
  ModelParser parser(lexer.run(), limits);
  return parser.run();
}

std::string print_model(const AnalysisFrame& f) {
  std::ostringstream out;
  print_common(f.pm, out);
  const CausalModel& m = f.pm.model;
  out << "frame { sensitive: " << m.variable(f.sensitive_attr).id;
  if (!f.other_attrs.empty()) {
    out << "  others:";
    for (VarIndex a : f.other_attrs) out << " " << m.variable(a).id;
  }
  if (f.randomness) out << "  randomness: " << m.variable(*f.randomness).id;
  out << "  output: " << m.variable(f.output).id << " }\n";
  return out.str();
}

std::string print_model(const DatabaseFrame& f) {
  std::ostringstream out;
  print_common(f.pm, out);
  const CausalModel& m = f.pm.model;
  out << "dbframe { rows:";
  for (VarIndex r : f.row_attrs) out << " " << m.variable(r).id;
  if (f.randomness) out << "  randomness: " << m.variable(*f.randomness).id;
  out << "  output: " << m.variable(f.output).id;
  out << "  bot: " << (f.bot_mode == BotMode::kValue ? "value" : "removed") << " }\n";
  return out.str();
}

std::string print_model(const ParsedModel& m) {
  if (const auto* f = std::get_if<AnalysisFrame>(&m)) return print_model(*f);
  return print_model(std::get<DatabaseFrame>(m));
}

const ProbCausalModel& parsed_pm(const ParsedModel& m) {
  if (const auto* f = std::get_if<AnalysisFrame>(&m)) return f->pm;
  return std::get<DatabaseFrame>(m).pm;
}

// ---------------------------------------------------------------------------
// Proposition parser.

namespace {

struct PropToken {
  enum class Kind { kIdent, kEq, kNe, kNot, kAnd, kOr, kLParen, kRParen, kEnd };
  Kind kind;
  std::string text;
  int col;
};

std::vector<PropToken> lex_prop(std::string_view text) {
  std::vector<PropToken> tokens;
  size_t i = 0;
  auto word_char = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.';
  };
  while (i < text.size()) {
    const char c = text[i];
    const int col = static_cast<int>(i) + 1;
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '(') { tokens.push_back({PropToken::Kind::kLParen, "(", col}); ++i; continue; }
    if (c == ')') { tokens.push_back({PropToken::Kind::kRParen, ")", col}); ++i; continue; }
    if (c == '&') { tokens.push_back({PropToken::Kind::kAnd, "&", col}); ++i; continue; }
    if (c == '|') { tokens.push_back({PropToken::Kind::kOr, "|", col}); ++i; continue; }
    if (c == '=') { tokens.push_back({PropToken::Kind::kEq, "=", col}); ++i; continue; }
    if (c == '!') {
      if (i + 1 < text.size() && text[i + 1] == '=') {
        tokens.push_back({PropToken::Kind::kNe, "!=", col});
        i += 2;
      } else {
        tokens.push_back({PropToken::Kind::kNot, "!", col});
        ++i;
      }
      continue;
    }
    if (word_char(c)) {
      std::string word;
      while (i < text.size() && word_char(text[i])) word.push_back(text[i++]);
      tokens.push_back({PropToken::Kind::kIdent, std::move(word), col});
      continue;
    }
    fail(Errc::kParseError,
         "col " + std::to_string(col) + ": unexpected character '" +
             std::string(1, c) + "' in proposition");
  }
  tokens.push_back({PropToken::Kind::kEnd, "", static_cast<int>(text.size()) + 1});
  return tokens;
}

class PropParser {
 public:
  explicit PropParser(std::vector<PropToken> tokens) : tokens_(std::move(tokens)) {}

  Proposition run() {
    Proposition p = parse_or();
    if (tokens_[pos_].kind != PropToken::Kind::kEnd) {
      fail(Errc::kParseError, "col " + std::to_string(tokens_[pos_].col) +
                                  ": trailing input in proposition");
    }
    return p;
  }

 private:
  const PropToken& peek() const { return tokens_[pos_]; }
  PropToken next() { return tokens_[pos_++]; }

  Proposition parse_or() {
    Proposition p = parse_and();
    while (peek().kind == PropToken::Kind::kOr) {
      next();
      p = Proposition::disj(std::move(p), parse_and());
    }
    return p;
  }

  Proposition parse_and() {
    Proposition p = parse_unary();
    while (peek().kind == PropToken::Kind::kAnd) {
      next();
      p = Proposition::conj(std::move(p), parse_unary());
    }
    return p;
  }

  Proposition parse_unary() {
    if (peek().kind == PropToken::Kind::kNot) {
      next();
      return Proposition::negate(parse_unary());
    }
    if (peek().kind == PropToken::Kind::kLParen) {
      next();
      Proposition p = parse_or();
      if (peek().kind != PropToken::Kind::kRParen) {
        fail(Errc::kParseError,
             "col " + std::to_string(peek().col) + ": expected ')'");
      }
      next();
      return p;
    }
    if (peek().kind != PropToken::Kind::kIdent) {
      fail(Errc::kParseError,
           "col " + std::to_string(peek().col) + ": expected an atom");
    }
    const PropToken ident = next();
    if (ident.text == "true") return Proposition::truth();
    if (ident.text == "false") return Proposition::falsity();
    if (peek().kind == PropToken::Kind::kEq || peek().kind == PropToken::Kind::kNe) {
      const bool eq = next().kind == PropToken::Kind::kEq;
      if (peek().kind != PropToken::Kind::kIdent) {
        fail(Errc::kParseError,
             "col " + std::to_string(peek().col) + ": expected a value after '" +
                 (eq ? "=" : "!=") + "'");
      }
      const PropToken value = next();
      return eq ? Proposition::eq(ident.text, value.text)
                : Proposition::ne(ident.text, value.text);
    }
    fail(Errc::kParseError, "col " + std::to_string(peek().col) +
                                ": expected '=' or '!=' after '" + ident.text + "'");
  }

  std::vector<PropToken> tokens_;
  size_t pos_ = 0;
};

}  // namespace

Proposition parse_proposition(std::string_view text) {
  return PropParser(lex_prop(text)).run();
}

}  // namespace caudit
