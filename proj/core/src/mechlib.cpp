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

#include "caudit/mechlib.hpp"

#include <algorithm>
#include <numeric>

#include "caudit/error.hpp"

namespace caudit {

namespace {

// Small assembly helper; every fixture is a handful of variables.
struct Builder {
  std::vector<Variable> background;
  std::vector<Variable> endogenous;
  std::vector<StructuralEquation> equations;

  VarIndex add_background(const std::string& id, DomainPtr dom) {
    background.push_back(Variable{id, Role::kBackground, std::move(dom)});
    return static_cast<VarIndex>(background.size()) - 1;
  }

  // Endogenous indices are only known once the model is assembled, so
  // equations are patched by name at build time.
  struct PendingEq {
    std::string target;
    std::vector<std::string> parents;
    std::vector<ValueIndex> table;
  };
  std::vector<PendingEq> pending;

  void add_endogenous(const std::string& id, DomainPtr dom) {
    endogenous.push_back(Variable{id, Role::kEndogenous, std::move(dom)});
  }

  void identity(const std::string& id, DomainPtr dom, const std::string& src) {
    add_endogenous(id, dom);
    PendingEq eq{id, {src}, {}};
    eq.table.resize(dom->size());
    for (int i = 0; i < dom->size(); ++i) eq.table[i] = i;
    pending.push_back(std::move(eq));
  }

  void table(const std::string& id, DomainPtr dom, std::vector<std::string> parents,
             std::vector<ValueIndex> rows) {
    add_endogenous(id, dom);
    pending.push_back(PendingEq{id, std::move(parents), std::move(rows)});
  }

  CausalModel build(const ModelLimits& limits = ModelLimits()) {
    CausalModel m(background, endogenous, {});
    std::vector<StructuralEquation> eqs;
    for (const PendingEq& p : pending) {
      StructuralEquation eq;
      eq.target = m.require(p.target);
      for (const std::string& parent : p.parents) eq.parents.push_back(m.require(parent));
      eq.table = p.table;
      eqs.push_back(std::move(eq));
    }
    return validate_model(CausalModel(background, endogenous, std::move(eqs)), limits);
  }
};

DomainPtr make_domain(std::string name, std::vector<std::string> values) {
  return std::make_shared<Domain>(std::move(name), std::move(values));
}

DomainPtr bit_domain() { return make_domain("bit", {"0", "1"}); }

long lcm_den(const std::vector<std::pair<std::string, Rational>>& rates) {
  long l = 1;
  for (const auto& [group, rate] : rates) {
    const long den = rate.raw().get_den().get_si();
    l = std::lcm(l, den);
  }
  return l;
}

}  // namespace

AnalysisFrame appendix_model(const std::map<std::string, Rational>& prior) {
  auto xdom = make_domain("xval", {"0", "1", "2"});
  auto odom = make_domain("outcome", {"nonpositive", "positive"});
  auto unit = make_domain("unit", {"u"});

  Builder b;
  b.add_background("X", xdom);
  b.add_background("A", unit);
  b.identity("Xh", xdom, "X");
  b.identity("Ah", unit, "A");
  // pos(x): only 0 is nonpositive in {0, 1, 2}.
  b.table("O", odom, {"Xh"}, {0, 1, 1});
  CausalModel m = b.build();

  Rational total(0);
  std::vector<std::pair<Assignment, Rational>> entries;
  for (const auto& [token, mass] : prior) {
    const auto x = xdom->index_of(token);
    if (!x) fail(Errc::kInvalidPrior, "prior names '" + token + "' outside {0,1,2}");
    if (mass.sign() < 0) fail(Errc::kInvalidPrior, "negative prior mass");
    total += mass;
    entries.push_back({{*x, 0}, mass});
  }
  if (!total.is_one()) {
    fail(Errc::kInvalidPrior, "prior sums to " + total.str() + ", not 1");
  }
  BackgroundDist dist(m, std::move(entries));
  ProbCausalModel pm(std::move(m), std::move(dist));
  return make_analysis_frame(std::move(pm), "X", {"A"}, std::nullopt, "O");
}

AnalysisFrame randomized_response(const Rational& flip) {
  if (!(flip > Rational(0) && flip < Rational(1, 2))) {
    fail(Errc::kInvalidParameter,
         "randomized response needs 0 < flip < 1/2, got " + flip.str());
  }
  auto bits = bit_domain();
  auto coin = make_domain("coin", {"keep", "flip"});

  Builder b;
  b.add_background("X", bits);
  b.add_background("R", coin);
  b.identity("Xh", bits, "X");
  // keep -> x, flip -> 1-x; rows ordered (Xh, R).
  b.table("O", bits, {"Xh", "R"}, {0, 1, 1, 0});
  CausalModel m = b.build();

  const Rational half(1, 2);
  const Rational keep = Rational(1) - flip;
  std::vector<std::pair<Assignment, Rational>> entries;
  for (ValueIndex x = 0; x < 2; ++x) {
    entries.push_back({{x, 0}, half * keep});
    entries.push_back({{x, 1}, half * flip});
  }
  BackgroundDist dist(m, std::move(entries));
  ProbCausalModel pm(std::move(m), std::move(dist));
  return make_analysis_frame(std::move(pm), "X", {}, "R", "O");
}

AnalysisFrame hiring_model(
    const std::vector<std::pair<std::string, Rational>>& rates,
    const std::vector<std::pair<std::string, Rational>>& weights) {
  if (rates.empty() || rates.size() != weights.size()) {
    fail(Errc::kInvalidParameter, "need matching rates and weights per group");
  }
  std::vector<std::string> groups;
  for (const auto& [group, rate] : rates) {
    if (rate < Rational(0) || rate > Rational(1)) {
      fail(Errc::kInvalidParameter, "hire rate for '" + group + "' outside [0,1]");
    }
    groups.push_back(group);
  }
  const long lot_size = lcm_den(rates);
  std::vector<std::string> lots;
  lots.reserve(lot_size);
  for (long i = 0; i < lot_size; ++i) lots.push_back("r" + std::to_string(i));

  auto gdom = make_domain("group", groups);
  auto ldom = make_domain("lot", std::move(lots));
  auto odom = make_domain("decision", {"hire", "reject"});

  Builder b;
  b.add_background("X", gdom);
  b.add_background("R", ldom);
  b.identity("Xh", gdom, "X");
  std::vector<ValueIndex> table;
  table.reserve(static_cast<size_t>(gdom->size()) * lot_size);
  for (int g = 0; g < gdom->size(); ++g) {
    // hire exactly when the lottery index falls below rate * lot_size.
    const Rational threshold = rates[g].second * Rational(lot_size);
    for (long r = 0; r < lot_size; ++r) {
      table.push_back(Rational(r) < threshold ? 0 : 1);
    }
  }
  b.table("O", odom, {"Xh", "R"}, std::move(table));
  // Exact rates can need a lottery finer than the default domain cap.
  ModelLimits limits;
  if (lot_size > limits.max_domain_values) limits.max_domain_values = lot_size;
  CausalModel m = b.build(limits);

  Rational weight_total(0);
  std::vector<std::pair<Assignment, Rational>> entries;
  const Rational lot_mass(1, lot_size);
  for (int g = 0; g < gdom->size(); ++g) {
    if (weights[g].first != groups[g]) {
      fail(Errc::kInvalidParameter, "weights must list groups in the same order");
    }
    const Rational& w = weights[g].second;
    if (w.sign() <= 0) fail(Errc::kInvalidParameter, "group weights must be positive");
    weight_total += w;
    for (long r = 0; r < lot_size; ++r) {
      entries.push_back({{g, static_cast<ValueIndex>(r)}, w * lot_mass});
    }
  }
  if (!weight_total.is_one()) {
    fail(Errc::kInvalidParameter,
         "group weights sum to " + weight_total.str() + ", not 1");
  }
  BackgroundDist dist(m, std::move(entries));
  ProbCausalModel pm(std::move(m), std::move(dist));
  return make_analysis_frame(std::move(pm), "X", {}, "R", "O");
}

DatabaseFrame database_release(int rows, std::optional<Rational> per_row_flip,
                               Aggregate aggregate) {
  if (rows < 1 || rows > 4) {
    fail(Errc::kInvalidParameter, "database_release supports 1 to 4 rows");
  }
  if (per_row_flip &&
      !(*per_row_flip > Rational(0) && *per_row_flip <= Rational(1, 2))) {
    fail(Errc::kInvalidParameter, "per-row flip must lie in (0, 1/2]");
  }
  auto cell = make_domain("cell", {"0", "1", std::string(kBotToken)});
  const bool noisy = per_row_flip.has_value();

  // One fresh variable holding all per-row coins: tokens are strings of
  // k / f per row, probability the product of the per-coin masses.
  DomainPtr coins;
  if (noisy) {
    std::vector<std::string> tokens;
    for (int mask = 0; mask < (1 << rows); ++mask) {
      std::string t;
      for (int i = 0; i < rows; ++i) t += ((mask >> i) & 1) ? 'f' : 'k';
      tokens.push_back(t);
    }
    coins = make_domain("coins", std::move(tokens));
  }

  Builder b;
  std::vector<std::string> row_names, input_names;
  for (int i = 0; i < rows; ++i) {
    row_names.push_back("D" + std::to_string(i + 1));
    input_names.push_back("Dh" + std::to_string(i + 1));
    b.add_background(row_names.back(), cell);
  }
  if (noisy) b.add_background("R", coins);
  for (int i = 0; i < rows; ++i) b.identity(input_names[i], cell, row_names[i]);

  // Output domain and value per tuple of released bits.
  DomainPtr odom;
  std::vector<std::string> parents = input_names;
  if (noisy) parents.push_back("R");
  auto released_token = [&](const std::vector<int>& bits) -> std::string {
    switch (aggregate) {
      case Aggregate::kIdentity: {
        std::string t;
        for (int v : bits) t += (v == 2 ? 'b' : static_cast<char>('0' + v));
        return t;
      }
      case Aggregate::kSum: {
        int sum = 0;
        for (int v : bits) sum += (v == 1) ? 1 : 0;
        return std::to_string(sum);
      }
      case Aggregate::kParity: {
        int parity = 0;
        for (int v : bits) parity ^= (v == 1) ? 1 : 0;
        return std::to_string(parity);
      }
    }
    return "";
  };

  // Enumerate every parent combination in mixed-radix order and aggregate.
  std::vector<std::string> out_values;
  std::vector<std::string> out_tokens;  // per row of the table
  const int coin_count = noisy ? (1 << rows) : 1;
  std::vector<int> cells(rows, 0);
  bool more = true;
  while (more) {
    for (int mask = 0; mask < coin_count; ++mask) {
      std::vector<int> bits(rows);
      for (int i = 0; i < rows; ++i) {
        int v = cells[i];  // 0, 1, or 2 (bot)
        if (noisy) {
          int bit = (v == 2) ? 0 : v;  // an absent row contributes 0
          if ((mask >> i) & 1) bit ^= 1;
          v = bit;
        }
        bits[i] = v;
      }
      out_tokens.push_back(released_token(bits));
    }
    more = false;
    for (int i = rows - 1; i >= 0; --i) {
      if (++cells[i] < 3) {
        more = true;
        break;
      }
      cells[i] = 0;
    }
  }
  for (const std::string& t : out_tokens) {
    bool seen = false;
    for (const std::string& v : out_values) seen = seen || v == t;
    if (!seen) out_values.push_back(t);
  }
  std::sort(out_values.begin(), out_values.end());
  odom = make_domain("released", out_values);
  std::vector<ValueIndex> table;
  table.reserve(out_tokens.size());
  for (const std::string& t : out_tokens) table.push_back(*odom->index_of(t));
  b.table("O", odom, parents, std::move(table));
  CausalModel m = b.build();

  // Rows: independent uniform bits (no mass on bot). Coins: product of the
  // per-row flip probabilities.
  std::vector<std::pair<Assignment, Rational>> entries;
  const Rational row_mass(1, 1L << rows);
  for (int rows_mask = 0; rows_mask < (1 << rows); ++rows_mask) {
    Assignment base(rows + (noisy ? 1 : 0), 0);
    for (int i = 0; i < rows; ++i) base[i] = (rows_mask >> i) & 1;
    if (!noisy) {
      entries.push_back({base, row_mass});
      continue;
    }
    for (int mask = 0; mask < coin_count; ++mask) {
      Rational coin_mass(1);
      for (int i = 0; i < rows; ++i) {
        coin_mass = coin_mass * (((mask >> i) & 1) ? *per_row_flip
                                                   : Rational(1) - *per_row_flip);
      }
      Assignment a = base;
      a[rows] = mask;
      entries.push_back({std::move(a), row_mass * coin_mass});
    }
  }
  BackgroundDist dist(m, std::move(entries));
  ProbCausalModel pm(std::move(m), std::move(dist));
  return make_database_frame(std::move(pm), row_names,
                             noisy ? std::optional<std::string>("R") : std::nullopt,
                             "O", BotMode::kValue);
}

AnalysisFrame xor_release_model() {
  auto bits = bit_domain();
  Builder b;
  b.add_background("X", bits);
  b.add_background("Y", bits);
  b.identity("Xh", bits, "X");
  b.identity("Yh", bits, "Y");
  b.table("O", bits, {"Xh", "Yh"}, {0, 1, 1, 0});
  CausalModel m = b.build();

  std::vector<std::pair<Assignment, Rational>> entries;
  for (ValueIndex x = 0; x < 2; ++x) {
    for (ValueIndex y = 0; y < 2; ++y) entries.push_back({{x, y}, Rational(1, 4)});
  }
  BackgroundDist dist(m, std::move(entries));
  ProbCausalModel pm(std::move(m), std::move(dist));
  return make_analysis_frame(std::move(pm), "X", {"Y"}, std::nullopt, "O");
}

AverageDisclosureFixture average_disclosure_model() {
  auto tdom = make_domain("target_height", {"62", "63", "64"});
  auto hdom = make_domain("member_height", {"64", "66"});
  auto adom = make_domain("avg", {"64", "65", "66"});

  Builder b;
  b.add_background("T", tdom);
  b.add_background("H1", hdom);
  b.add_background("H2", hdom);
  b.identity("Th", tdom, "T");
  b.identity("H1h", hdom, "H1");
  b.identity("H2h", hdom, "H2");
  // Exact average of the two measured members: (64,64)->64, mixed->65,
  // (66,66)->66.
  b.table("O", adom, {"H1h", "H2h"}, {0, 1, 1, 2});
  CausalModel m = b.build();

  std::vector<std::pair<Assignment, Rational>> entries;
  const Rational mass(1, 12);
  for (ValueIndex t = 0; t < 3; ++t) {
    for (ValueIndex h1 = 0; h1 < 2; ++h1) {
      for (ValueIndex h2 = 0; h2 < 2; ++h2) entries.push_back({{t, h1, h2}, mass});
    }
  }
  BackgroundDist dist(m, std::move(entries));
  ProbCausalModel pm(std::move(m), std::move(dist));

  AverageDisclosureFixture fixture;
  fixture.frame =
      make_analysis_frame(std::move(pm), "T", {"H1", "H2"}, std::nullopt, "O");
  fixture.phi = Proposition::eq("T", "62");
  // "The target is two inches below the released average."
  fixture.aux_background = Proposition::any_of(
      {Proposition::conj(Proposition::eq("O", "64"), Proposition::eq("T", "62")),
       Proposition::conj(Proposition::eq("O", "65"), Proposition::eq("T", "63")),
       Proposition::conj(Proposition::eq("O", "66"), Proposition::eq("T", "64"))});
  fixture.closing_output = "64";
  return fixture;
}

std::vector<MechanismSpec> mechanism_catalog() {
  std::vector<MechanismSpec> catalog;
  catalog.push_back({"appendix",
                     {},
                     std::nullopt,
                     "",
                     [] { return appendix_model(); }});
  catalog.push_back({"rr_quarter",
                     {{"flip", Rational(1, 4)}},
                     Rational(3),
                     "noninterference",
                     [] { return randomized_response(Rational(1, 4)); }});
  catalog.push_back({"rr_third",
                     {{"flip", Rational(1, 3)}},
                     Rational(2),
                     "noninterference",
                     [] { return randomized_response(Rational(1, 3)); }});
  catalog.push_back(
      {"hiring_boundary",
       {{"rate_g1", Rational(1, 2)}, {"rate_g2", Rational(2, 5)}},
       Rational(5, 4),
       "80-rule",
       [] {
         return hiring_model({{"g1", Rational(1, 2)}, {"g2", Rational(2, 5)}},
                             {{"g1", Rational(1, 2)}, {"g2", Rational(1, 2)}});
       }});
  catalog.push_back(
      {"hiring_skewed",
       {{"rate_g1", Rational(1, 2)}, {"rate_g2", Rational(1, 3)}},
       Rational(3, 2),
       "80-rule",
       [] {
         return hiring_model({{"g1", Rational(1, 2)}, {"g2", Rational(1, 3)}},
                             {{"g1", Rational(1, 2)}, {"g2", Rational(1, 2)}});
       }});
  catalog.push_back({"db_identity_1row",
                     {{"rows", Rational(1)}, {"flip", Rational(1, 4)}},
                     Rational(3),
                     "differential-privacy",
                     [] {
                       return database_release(1, Rational(1, 4),
                                               Aggregate::kIdentity);
                     }});
  catalog.push_back({"db_parity_2row",
                     {{"rows", Rational(2)}, {"flip", Rational(1, 4)}},
                     Rational(5, 3),
                     "differential-privacy",
                     [] {
                       return database_release(2, Rational(1, 4),
                                               Aggregate::kParity);
                     }});
  catalog.push_back({"xor_release", {}, std::nullopt, "",
                     [] { return xor_release_model(); }});
  catalog.push_back({"average_disclosure", {}, std::nullopt, "",
                     [] { return average_disclosure_model().frame; }});
  return catalog;
}

}  // namespace caudit
