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

#include "caudit/generator.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "caudit/error.hpp"

namespace caudit {

namespace {

void check_range(std::pair<int, int> r, int lo, int hi, const char* what) {
  if (r.first < lo || r.second > hi || r.first > r.second) {
    fail(Errc::kInvalidConfig, std::string(what) + " range [" +
                                   std::to_string(r.first) + ", " +
                                   std::to_string(r.second) + "] outside [" +
                                   std::to_string(lo) + ", " + std::to_string(hi) +
                                   "]");
  }
}

DomainPtr fresh_domain(const std::string& name, const std::string& prefix, int size) {
  std::vector<std::string> values;
  values.reserve(size);
  for (int i = 0; i < size; ++i) values.push_back(prefix + std::to_string(i));
  return std::make_shared<Domain>(name, std::move(values));
}

// n slots dropped uniformly over `cells` values: exact probabilities i/n.
std::vector<int> draw_counts(SplitMix64& rng, int cells, int n) {
  std::vector<int> counts(cells, 0);
  for (int i = 0; i < n; ++i) ++counts[rng.below(cells)];
  return counts;
}

int positive_cells(const std::vector<int>& counts) {
  int k = 0;
  for (int c : counts) k += (c > 0);
  return k;
}

// A marginal over `cells` values with at least `min_support` positive cells
// when attainable (redraws come from the same stream, so still
// deterministic).
std::vector<int> draw_marginal(SplitMix64& rng, int cells, int max_den,
                               int min_support) {
  const int lo = std::min(max_den, std::max(2, 2 * cells));
  std::vector<int> counts;
  int n = 0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    n = rng.in_range(lo, std::max(lo, max_den));
    counts = draw_counts(rng, cells, n);
    if (positive_cells(counts) >= std::min(min_support, cells)) break;
  }
  counts.push_back(n);  // total rides in the last slot
  return counts;
}

}  // namespace

AnalysisFrame generate_frame(const GenConfig& cfg) {
  check_range(cfg.domain_size_range, 2, 6, "domain size");
  check_range(cfg.num_other_inputs, 0, 3, "other inputs");
  if (cfg.max_denominator < 2 || cfg.max_denominator > 64) {
    fail(Errc::kInvalidConfig, "max_denominator must lie in [2, 64]");
  }

  SplitMix64 rng(cfg.seed);
  const auto [dlo, dhi] = cfg.domain_size_range;
  const int x_size = rng.in_range(dlo, dhi);
  const int out_size = rng.in_range(dlo, dhi);
  const int num_others = rng.in_range(cfg.num_other_inputs.first,
                                      cfg.num_other_inputs.second);
  const int r_size = cfg.randomized ? rng.in_range(2, 3) : 0;
  // A quarter of frames get an output table that ignores the sensitive
  // input, so exact noninterference occurs at a usable rate.
  const bool force_ni = rng.below(4) == 0;

  std::vector<Variable> background;
  std::vector<Variable> endogenous;
  std::vector<StructuralEquation> equations;

  const DomainPtr xdom = fresh_domain("xd", "x", x_size);
  background.push_back(Variable{"X", Role::kBackground, xdom});
  std::vector<DomainPtr> adoms;
  for (int j = 0; j < num_others; ++j) {
    adoms.push_back(fresh_domain("ad" + std::to_string(j + 1), "a", rng.in_range(dlo, dhi)));
    background.push_back(Variable{"A" + std::to_string(j + 1), Role::kBackground,
                                  adoms.back()});
  }
  if (cfg.randomized) {
    background.push_back(
        Variable{"R", Role::kBackground, fresh_domain("rd", "r", r_size)});
  }
  const int bg_count = static_cast<int>(background.size());
  const VarIndex r_var = cfg.randomized ? bg_count - 1 : -1;

  const DomainPtr odom = fresh_domain("od", "o", out_size);
  // Endogenous: identity copies then the output. Indices continue after the
  // background block.
  auto identity_eq = [&](VarIndex target, VarIndex src, const DomainPtr& dom) {
    StructuralEquation eq;
    eq.target = target;
    eq.parents = {src};
    eq.table.resize(dom->size());
    for (int i = 0; i < dom->size(); ++i) eq.table[i] = i;
    return eq;
  };
  endogenous.push_back(Variable{"Xh", Role::kEndogenous, xdom});
  equations.push_back(identity_eq(bg_count, 0, xdom));
  for (int j = 0; j < num_others; ++j) {
    endogenous.push_back(
        Variable{"Ah" + std::to_string(j + 1), Role::kEndogenous, adoms[j]});
    equations.push_back(identity_eq(bg_count + 1 + j, 1 + j, adoms[j]));
  }
  endogenous.push_back(Variable{"O", Role::kEndogenous, odom});

  // Output table over (Xh, Ah..., R?).
  StructuralEquation out_eq;
  out_eq.target = bg_count + 1 + num_others;
  out_eq.parents.push_back(bg_count);  // Xh
  for (int j = 0; j < num_others; ++j) out_eq.parents.push_back(bg_count + 1 + j);
  if (cfg.randomized) out_eq.parents.push_back(r_var);
  int64_t ctx_rows = 1;  // rows per fixed sensitive value
  for (int j = 0; j < num_others; ++j) ctx_rows *= adoms[j]->size();
  if (cfg.randomized) ctx_rows *= r_size;
  if (force_ni) {
    std::vector<ValueIndex> slice;
    slice.reserve(ctx_rows);
    for (int64_t i = 0; i < ctx_rows; ++i) {
      slice.push_back(static_cast<ValueIndex>(rng.below(out_size)));
    }
    for (int x = 0; x < x_size; ++x) {
      out_eq.table.insert(out_eq.table.end(), slice.begin(), slice.end());
    }
  } else {
    for (int64_t i = 0; i < ctx_rows * x_size; ++i) {
      out_eq.table.push_back(static_cast<ValueIndex>(rng.below(out_size)));
    }
  }
  equations.push_back(std::move(out_eq));

  CausalModel model = validate_model(
      CausalModel(std::move(background), std::move(endogenous), std::move(equations)));

  // Background distribution. Blocks of jointly-drawn variables multiply
  // together, which keeps the declared independences exact by construction.
  struct Block {
    std::vector<VarIndex> vars;
    std::vector<int> counts;  // per joint cell, plus the total in the back
  };
  std::vector<Block> blocks;
  auto joint_cells = [&](const std::vector<VarIndex>& vars) {
    int64_t cells = 1;
    for (VarIndex v : vars) cells *= model.variable(v).domain->size();
    return static_cast<int>(cells);
  };
  auto add_block = [&](std::vector<VarIndex> vars, int min_support) {
    Block b;
    b.vars = std::move(vars);
    b.counts = draw_marginal(rng, joint_cells(b.vars), cfg.max_denominator,
                             min_support);
    blocks.push_back(std::move(b));
  };

  std::vector<VarIndex> a_vars;
  for (int j = 0; j < num_others; ++j) a_vars.push_back(1 + j);

  if (cfg.correlate_x_a && num_others > 0) {
    std::vector<VarIndex> xa{0};
    xa.insert(xa.end(), a_vars.begin(), a_vars.end());
    if (cfg.randomized && !cfg.fresh_r) {
      xa.push_back(r_var);
      add_block(std::move(xa), 2 * x_size);
    } else {
      add_block(std::move(xa), 2 * x_size);
      if (cfg.randomized) add_block({r_var}, 2);
    }
  } else {
    add_block({0}, 2);  // the sensitive attribute alone, independent
    if (cfg.randomized && !cfg.fresh_r && num_others > 0) {
      std::vector<VarIndex> ar = a_vars;
      ar.push_back(r_var);
      add_block(std::move(ar), 3);
    } else {
      for (VarIndex a : a_vars) add_block({a}, 1);
      if (cfg.randomized) add_block({r_var}, 2);
    }
  }

  // Multiply the blocks into full background entries.
  std::vector<std::pair<Assignment, Rational>> entries;
  Assignment current(model.background_count(), 0);
  std::function<void(size_t, Rational)> expand = [&](size_t bi, Rational mass) {
    if (bi == blocks.size()) {
      entries.push_back({current, mass});
      return;
    }
    const Block& b = blocks[bi];
    const int total = b.counts.back();
    std::vector<int> sizes;
    for (VarIndex v : b.vars) sizes.push_back(model.variable(v).domain->size());
    const int cells = joint_cells(b.vars);
    for (int cell = 0; cell < cells; ++cell) {
      if (b.counts[cell] == 0) continue;
      int rest = cell;
      for (int k = static_cast<int>(b.vars.size()) - 1; k >= 0; --k) {
        current[b.vars[k]] = rest % sizes[k];
        rest /= sizes[k];
      }
      expand(bi + 1, mass * Rational(b.counts[cell], total));
    }
  };
  expand(0, Rational(1));

  BackgroundDist dist(model, std::move(entries));
  ProbCausalModel pm(std::move(model), std::move(dist));
  std::vector<std::string> others;
  for (int j = 0; j < num_others; ++j) others.push_back("A" + std::to_string(j + 1));
  return make_analysis_frame(std::move(pm), "X", others,
                             cfg.randomized ? std::optional<std::string>("R")
                                            : std::nullopt,
                             "O");
}

}  // namespace caudit
