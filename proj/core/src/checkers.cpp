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

#include "caudit/checkers.hpp"

#include <algorithm>
#include <functional>

#include "caudit/error.hpp"

namespace caudit {

std::string ProbeQuery::str() const {
  std::string out = "Pr[" + event.str();
  std::string ctx;
  if (!do_assignments.empty()) {
    ctx += "do(";
    for (size_t i = 0; i < do_assignments.size(); ++i) {
      if (i) ctx += ", ";
      ctx += do_assignments[i].first + "=" + do_assignments[i].second;
    }
    ctx += ")";
  }
  if (!(given == Proposition::truth())) {
    if (!ctx.empty()) ctx += ", ";
    ctx += given.str();
  }
  if (!ctx.empty()) out += " | " + ctx;
  out += "] = " + prob.frac_str();
  return out;
}

std::string RatioWitness::str() const {
  std::string out = lhs.str() + "  vs  " + rhs.str();
  if (bound) out += "  (bound " + bound->frac_str() + ")";
  return out;
}

namespace {

std::string dist_kind_note(const ProbCausalModel& pm) {
  return pm.dist.kind() == DistKind::kKnowledge ? "background read: knowledge"
                                                : "background read: population";
}

void append_note(std::string* notes, const std::string& text) {
  if (!notes->empty()) *notes += "; ";
  *notes += text;
}

// Folds directional ratio comparisons in scan order, keeping the first
// violation of the bound and the first attainment of the maximum ratio.
// Vacuous (0/0) comparisons are skipped: the quantifiers range over
// realizable outputs only.
class RatioScan {
 public:
  explicit RatioScan(std::optional<Rational> bound) : bound_(std::move(bound)) {}

  using WitnessFn = std::function<RatioWitness()>;

  void include(const Rational& p, const Rational& q, const WitnessFn& make) {
    const Ratio r = Ratio::bound(p, q);
    if (r.is_vacuous()) return;
    if (best_.is_vacuous() || !(r <= best_)) {
      best_ = r;
      best_witness_ = make();
    }
    if (bound_ && !violation_ && !r.within(*bound_)) {
      violation_ = make();
    }
  }

  bool holds() const { return !violation_.has_value(); }

  // One when every comparison was vacuous (or none happened).
  Ratio tightest() const { return best_.is_vacuous() ? Ratio::one() : best_; }

  std::optional<RatioWitness> witness() const {
    if (violation_) return violation_;
    if (!best_.is_vacuous() && !best_.is_one()) return best_witness_;
    return std::nullopt;
  }

 private:
  std::optional<Rational> bound_;
  Ratio best_ = Ratio::vacuous();
  std::optional<RatioWitness> best_witness_;
  std::optional<RatioWitness> violation_;
};

void require_bound_sane(const std::optional<Rational>& bound) {
  if (bound && *bound < Rational(1)) {
    fail(Errc::kInvalidParameter,
         "ratio bounds are multiplicative; need bound >= 1, got " + bound->str());
  }
}

// The output equation seen as a function of the input variables plus the
// randomness, with output distributions taken over the randomness marginal.
// Evaluates tables directly; interventions never enter here.
class FunctionView {
 public:
  FunctionView(const ProbCausalModel& pm, std::vector<VarIndex> inputs,
               std::optional<VarIndex> randomness, VarIndex output)
      : model_(&pm.model),
        inputs_(std::move(inputs)),
        randomness_(randomness),
        output_(output) {
    if (randomness_) {
      for (const auto& [value, mass] : marginal(pm, *randomness_)) {
        if (!mass.is_zero()) r_support_.emplace_back(value, mass);
      }
    } else {
      r_support_.emplace_back(-1, Rational(1));
    }
  }

  int input_count() const { return static_cast<int>(inputs_.size()); }
  const Domain& input_domain(int i) const {
    return *model_->variable(inputs_[i]).domain;
  }
  const std::string& input_name(int i) const { return model_->variable(inputs_[i]).id; }
  int output_size() const { return model_->variable(output_).domain->size(); }

  // Distribution of the output for one full input setting, indexed by output
  // value, over the randomness marginal.
  std::vector<Rational> output_dist(std::span<const ValueIndex> input_values) const {
    std::vector<Rational> dist(output_size(), Rational(0));
    std::vector<ValueIndex> world(model_->variable_count(), -1);
    for (int i = 0; i < input_count(); ++i) world[inputs_[i]] = input_values[i];
    const StructuralEquation& eq = model_->equation(output_);
    for (const auto& [r, mass] : r_support_) {
      if (randomness_) world[*randomness_] = r;
      int64_t row = 0;
      for (VarIndex p : eq.parents) {
        row = row * model_->variable(p).domain->size() + world[p];
      }
      dist[eq.table[row]] += mass;
    }
    return dist;
  }

 private:
  const CausalModel* model_;
  std::vector<VarIndex> inputs_;
  std::optional<VarIndex> randomness_;
  VarIndex output_;
  std::vector<std::pair<ValueIndex, Rational>> r_support_;
};

// Mixed-radix counter over a list of domain sizes, in declaration order.
bool advance(std::vector<ValueIndex>* digits, const std::vector<int>& sizes) {
  for (int i = static_cast<int>(digits->size()) - 1; i >= 0; --i) {
    if (++(*digits)[i] < sizes[i]) return true;
    (*digits)[i] = 0;
  }
  return false;
}

struct NiScanSpec {
  // Index into `inputs` of the variable whose change is under comparison.
  int compared_input;
  // Allowed values for the two compared slots; pairs with equal values are
  // skipped inside the scan.
  std::vector<ValueIndex> compared_values;
  // Allowed values for every other input slot.
  std::vector<std::vector<ValueIndex>> context_values;
};

// Shared core of noninterference and differential privacy: compare output
// distributions while one input changes and the rest stay fixed.
void scan_function_ni(const FunctionView& s, const NiScanSpec& spec,
                      RatioScan* scan, const std::string& output_name,
                      const Domain& output_domain) {
  const int n = s.input_count();
  // Precompute output distributions per full assignment of the scan lattice.
  // The lattice is small by construction (desk scale), so a dense map over
  // mixed-radix context indices is fine.
  std::vector<int> ctx_sizes;
  for (int i = 0; i < n; ++i) {
    if (i == spec.compared_input) continue;
    ctx_sizes.push_back(static_cast<int>(spec.context_values[i].size()));
  }
  auto input_values_for = [&](ValueIndex compared, const std::vector<ValueIndex>& ctx) {
    std::vector<ValueIndex> vals(n, -1);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i == spec.compared_input) {
        vals[i] = compared;
      } else {
        vals[i] = spec.context_values[i][ctx[c++]];
      }
    }
    return vals;
  };
  auto probe = [&](const std::vector<ValueIndex>& vals, ValueIndex o,
                   const Rational& p) {
    ProbeQuery q;
    for (int i = 0; i < n; ++i) {
      q.do_assignments.emplace_back(s.input_name(i),
                                    s.input_domain(i).value(vals[i]));
    }
    q.event = Proposition::eq(output_name, output_domain.value(o));
    q.prob = p;
    return q;
  };

  for (ValueIndex x1 : spec.compared_values) {
    for (ValueIndex x2 : spec.compared_values) {
      if (x1 == x2) continue;
      std::vector<ValueIndex> ctx(ctx_sizes.size(), 0);
      bool more;
      do {
        const auto vals1 = input_values_for(x1, ctx);
        const auto vals2 = input_values_for(x2, ctx);
        const auto d1 = s.output_dist(vals1);
        const auto d2 = s.output_dist(vals2);
        for (ValueIndex o = 0; o < static_cast<ValueIndex>(d1.size()); ++o) {
          scan->include(d1[o], d2[o], [&] {
            RatioWitness w;
            w.lhs = probe(vals1, o, d1[o]);
            w.rhs = probe(vals2, o, d2[o]);
            return w;
          });
        }
        more = advance(&ctx, ctx_sizes);
      } while (more);
    }
  }
}

PropertyReport ni_report(const AnalysisFrame& f, std::optional<Rational> bound,
                         const std::string& property) {
  const CausalModel& m = f.pm.model;
  std::vector<VarIndex> inputs{f.sensitive_input};
  for (VarIndex v : f.other_inputs) inputs.push_back(v);
  FunctionView s(f.pm, inputs, f.randomness, f.output);

  NiScanSpec spec;
  spec.compared_input = 0;
  const Domain& xdom = *m.variable(f.sensitive_input).domain;
  for (ValueIndex x = 0; x < xdom.size(); ++x) spec.compared_values.push_back(x);
  spec.context_values.resize(inputs.size());
  for (size_t i = 1; i < inputs.size(); ++i) {
    const Domain& d = *m.variable(inputs[i]).domain;
    for (ValueIndex v = 0; v < d.size(); ++v) spec.context_values[i].push_back(v);
  }

  RatioScan scan(bound);
  scan_function_ni(s, spec, &scan, m.variable(f.output).id, f.output_domain());

  PropertyReport report;
  report.property = property;
  report.bound = bound;
  report.tightest = scan.tightest();
  report.holds = bound ? scan.holds() : true;
  report.witness = scan.witness();
  report.notes = dist_kind_note(f.pm);
  if (!f.randomness) {
    append_note(&report.notes, "deterministic frame (trivial randomness)");
  }
  return report;
}

void fix_witness_bound(PropertyReport* report) {
  if (report->witness && report->bound) report->witness->bound = report->bound;
}

}  // namespace

PropertyReport check_noninterference(const AnalysisFrame& f) {
  PropertyReport report = ni_report(f, Rational(1), "noninterference");
  fix_witness_bound(&report);
  return report;
}

PropertyReport measure_noninterference(const AnalysisFrame& f) {
  if (f.randomness && !is_fresh_auto(f.pm, *f.randomness)) {
    fail(Errc::kRandomnessNotFresh,
         "'" + f.pm.model.variable(*f.randomness).id +
             "' is correlated with other background variables");
  }
  return ni_report(f, std::nullopt, "noninterference");
}

PropertyReport check_noninterference_at(const AnalysisFrame& f, const Rational& bound) {
  require_bound_sane(bound);
  if (f.randomness && !is_fresh_auto(f.pm, *f.randomness)) {
    fail(Errc::kRandomnessNotFresh,
         "'" + f.pm.model.variable(*f.randomness).id +
             "' is correlated with other background variables");
  }
  PropertyReport report = ni_report(f, bound, "noninterference");
  fix_witness_bound(&report);
  return report;
}

namespace {

PropertyReport causal_report(const AnalysisFrame& f, std::optional<Rational> bound,
                             const MetricBounds* metric) {
  require_bound_sane(bound);
  const CausalModel& m = f.pm.model;
  const Domain& xdom = *m.variable(f.sensitive_input).domain;
  const std::string& xname = m.variable(f.sensitive_input).id;
  const std::string& oname = m.variable(f.output).id;
  const Domain& odom = f.output_domain();

  std::vector<std::vector<Rational>> dist_for(xdom.size());
  for (ValueIndex x = 0; x < xdom.size(); ++x) {
    const Intervention iv = Intervention::single(m, xname, xdom.value(x));
    std::vector<Rational> dist(odom.size(), Rational(0));
    for (const auto& [value, mass] : distribution(f.pm, QueryContext(iv), f.output)) {
      dist[value] = mass;
    }
    dist_for[x] = std::move(dist);
  }

  std::vector<std::vector<Rational>> k;
  if (metric) k = metric->resolve(xdom);

  auto probe = [&](ValueIndex x, ValueIndex o, const Rational& p) {
    ProbeQuery q;
    q.do_assignments.emplace_back(xname, xdom.value(x));
    q.event = Proposition::eq(oname, odom.value(o));
    q.prob = p;
    return q;
  };

  RatioScan scan(metric ? std::optional<Rational>(Rational(1)) : bound);
  for (ValueIndex x1 = 0; x1 < xdom.size(); ++x1) {
    for (ValueIndex x2 = 0; x2 < xdom.size(); ++x2) {
      if (x1 == x2) continue;
      for (ValueIndex o = 0; o < odom.size(); ++o) {
        const Rational& p = dist_for[x1][o];
        const Rational& q = dist_for[x2][o];
        const Rational scaled = metric ? k[x1][x2] * q : q;
        scan.include(p, scaled, [&] {
          RatioWitness w;
          w.lhs = probe(x1, o, p);
          w.rhs = probe(x2, o, q);
          if (metric) w.bound = k[x1][x2];
          return w;
        });
      }
    }
  }

  PropertyReport report;
  report.property = metric ? "lipschitz" : "causal-irrelevance";
  report.bound = metric ? std::nullopt : bound;
  report.tightest = scan.tightest();
  report.holds = (bound || metric) ? scan.holds() : true;
  report.witness = scan.witness();
  report.notes = dist_kind_note(f.pm);
  if (metric) {
    append_note(&report.notes,
                "tightest is the uniform scale on the supplied bounds; holds iff <= 1");
  }
  if (!metric && report.witness && bound) report.witness->bound = bound;
  return report;
}

}  // namespace

PropertyReport check_causal_irrelevance(const AnalysisFrame& f,
                                        std::optional<Rational> bound) {
  return causal_report(f, std::move(bound), nullptr);
}

PropertyReport measure_causal_irrelevance(const AnalysisFrame& f) {
  return causal_report(f, std::nullopt, nullptr);
}

PropertyReport check_lipschitz(const AnalysisFrame& f, const MetricBounds& metric) {
  return causal_report(f, std::nullopt, &metric);
}

namespace {

struct ConditionalOutput {
  std::vector<Rational> prior;                 // Pr[X=x], by value index
  std::vector<std::vector<Rational>> joint;    // Pr[X=x, O=o]
  std::vector<Rational> output_marginal;       // Pr[O=o]
  std::vector<ValueIndex> positive_x;          // domain order
};

ConditionalOutput conditionals(const AnalysisFrame& f) {
  const CausalModel& m = f.pm.model;
  const int nx = m.variable(f.sensitive_attr).domain->size();
  const int no = f.output_domain().size();
  ConditionalOutput c;
  c.prior.assign(nx, Rational(0));
  c.joint.assign(nx, std::vector<Rational>(no, Rational(0)));
  c.output_marginal.assign(no, Rational(0));
  const WorldTable table(f.pm);
  for (const auto& [world, mass] : table.worlds()) {
    c.prior[world[f.sensitive_attr]] += mass;
    c.joint[world[f.sensitive_attr]][world[f.output]] += mass;
    c.output_marginal[world[f.output]] += mass;
  }
  for (ValueIndex x = 0; x < nx; ++x) {
    if (!c.prior[x].is_zero()) c.positive_x.push_back(x);
  }
  return c;
}

PropertyReport assoc_report(const AnalysisFrame& f, std::optional<Rational> bound,
                            std::optional<ValueIndex> only_output,
                            const std::string& property) {
  require_bound_sane(bound);
  const CausalModel& m = f.pm.model;
  const Domain& xdom = *m.variable(f.sensitive_attr).domain;
  const std::string& xname = m.variable(f.sensitive_attr).id;
  const std::string& oname = m.variable(f.output).id;
  const Domain& odom = f.output_domain();
  const ConditionalOutput c = conditionals(f);

  PropertyReport report;
  report.property = property;
  report.bound = bound;
  report.notes = dist_kind_note(f.pm);

  if (c.positive_x.size() < 2) {
    report.holds = true;
    report.tightest = Ratio::one();
    append_note(&report.notes,
                "degenerate sensitive attribute (single-point support); "
                "property holds vacuously");
    return report;
  }

  auto probe = [&](ValueIndex x, ValueIndex o) {
    ProbeQuery q;
    q.given = Proposition::eq(xname, xdom.value(x));
    q.event = Proposition::eq(oname, odom.value(o));
    q.prob = c.joint[x][o] / c.prior[x];
    return q;
  };

  RatioScan scan(bound);
  for (ValueIndex x1 : c.positive_x) {
    for (ValueIndex x2 : c.positive_x) {
      if (x1 == x2) continue;
      for (ValueIndex o = 0; o < odom.size(); ++o) {
        if (only_output && o != *only_output) continue;
        const Rational p = c.joint[x1][o] / c.prior[x1];
        const Rational q = c.joint[x2][o] / c.prior[x2];
        scan.include(p, q, [&] {
          RatioWitness w;
          w.lhs = probe(x1, o);
          w.rhs = probe(x2, o);
          w.bound = bound;
          return w;
        });
      }
    }
  }
  report.tightest = scan.tightest();
  report.holds = bound ? scan.holds() : true;
  report.witness = scan.witness();
  return report;
}

}  // namespace

PropertyReport check_assoc_independence(const AnalysisFrame& f,
                                        std::optional<Rational> bound) {
  return assoc_report(f, std::move(bound), std::nullopt, "assoc-independence");
}

PropertyReport measure_assoc_independence(const AnalysisFrame& f) {
  return assoc_report(f, std::nullopt, std::nullopt, "assoc-independence");
}

PropertyReport check_assoc_independence_on_x(const AnalysisFrame& f,
                                             std::optional<Rational> bound) {
  require_bound_sane(bound);
  const CausalModel& m = f.pm.model;
  const Domain& xdom = *m.variable(f.sensitive_attr).domain;
  const std::string& xname = m.variable(f.sensitive_attr).id;
  const std::string& oname = m.variable(f.output).id;
  const Domain& odom = f.output_domain();
  const ConditionalOutput c = conditionals(f);

  auto prior_probe = [&](ValueIndex x) {
    ProbeQuery q;
    q.event = Proposition::eq(xname, xdom.value(x));
    q.prob = c.prior[x];
    return q;
  };
  auto posterior_probe = [&](ValueIndex x, ValueIndex o, const Rational& p) {
    ProbeQuery q;
    q.given = Proposition::eq(oname, odom.value(o));
    q.event = Proposition::eq(xname, xdom.value(x));
    q.prob = p;
    return q;
  };

  RatioScan scan(bound);
  for (ValueIndex o = 0; o < odom.size(); ++o) {
    if (c.output_marginal[o].is_zero()) continue;
    for (ValueIndex x = 0; x < xdom.size(); ++x) {
      const Rational posterior = c.joint[x][o] / c.output_marginal[o];
      const Rational& prior = c.prior[x];
      scan.include(posterior, prior, [&] {
        RatioWitness w;
        w.lhs = posterior_probe(x, o, posterior);
        w.rhs = prior_probe(x);
        w.bound = bound;
        return w;
      });
      scan.include(prior, posterior, [&] {
        RatioWitness w;
        w.lhs = prior_probe(x);
        w.rhs = posterior_probe(x, o, posterior);
        w.bound = bound;
        return w;
      });
    }
  }

  PropertyReport report;
  report.property = "assoc-independence-on-x";
  report.bound = bound;
  report.tightest = scan.tightest();
  report.holds = bound ? scan.holds() : true;
  report.witness = scan.witness();
  report.notes = dist_kind_note(f.pm);
  return report;
}

PropertyReport measure_assoc_independence_on_x(const AnalysisFrame& f) {
  return check_assoc_independence_on_x(f, std::nullopt);
}

namespace {

PropertyReport dp_report(const DatabaseFrame& f, std::optional<Rational> bound) {
  require_bound_sane(bound);
  if (f.randomness && !is_fresh_auto(f.pm, *f.randomness)) {
    fail(Errc::kRandomnessNotFresh,
         "'" + f.pm.model.variable(*f.randomness).id +
             "' is correlated with the rows");
  }
  const CausalModel& m = f.pm.model;
  FunctionView s(f.pm, f.row_inputs, f.randomness, f.output);

  RatioScan scan(bound);
  for (size_t i = 0; i < f.row_inputs.size(); ++i) {
    NiScanSpec spec;
    spec.compared_input = static_cast<int>(i);
    const Domain& rdom = *m.variable(f.row_inputs[i]).domain;
    for (ValueIndex v = 0; v < rdom.size(); ++v) spec.compared_values.push_back(v);
    spec.context_values.resize(f.row_inputs.size());
    for (size_t j = 0; j < f.row_inputs.size(); ++j) {
      if (j == i) continue;
      const Domain& d = *m.variable(f.row_inputs[j]).domain;
      const auto bot = d.bot_index();
      for (ValueIndex v = 0; v < d.size(); ++v) {
        // In the removed reading, BOT is not a database state for the
        // context rows; it only appears as the shorter-database side of the
        // comparison itself.
        if (f.bot_mode == BotMode::kRemoved && bot && v == *bot) continue;
        spec.context_values[j].push_back(v);
      }
    }
    scan_function_ni(s, spec, &scan, m.variable(f.output).id, f.output_domain());
  }

  PropertyReport report;
  report.property = "differential-privacy";
  report.bound = bound;
  report.tightest = scan.tightest();
  report.holds = bound ? scan.holds() : true;
  report.witness = scan.witness();
  report.notes = dist_kind_note(f.pm);
  append_note(&report.notes, f.bot_mode == BotMode::kValue
                                 ? "bot mode: value (bot is an ordinary row value)"
                                 : "bot mode: removed (bot only as the absent side)");
  fix_witness_bound(&report);
  return report;
}

}  // namespace

PropertyReport check_differential_privacy(const DatabaseFrame& f,
                                          std::optional<Rational> bound) {
  return dp_report(f, std::move(bound));
}

PropertyReport measure_differential_privacy(const DatabaseFrame& f) {
  return dp_report(f, std::nullopt);
}

PropertyReport check_80_rule(const AnalysisFrame& f, const std::string& positive_value) {
  const Domain& odom = f.output_domain();
  const auto positive = odom.index_of(positive_value);
  if (!positive) {
    fail(Errc::kInvalidParameter,
         "'" + positive_value + "' is not an output value");
  }
  const ConditionalOutput c = conditionals(f);
  const int nx = f.sensitive_domain().size();
  if (static_cast<int>(c.positive_x.size()) != nx || nx < 2) {
    fail(Errc::kDegenerateSensitive,
         "the four-fifths rule needs at least two groups, all with positive mass");
  }

  PropertyReport report =
      assoc_report(f, Rational(5, 4), *positive, "80-rule");
  report.property = "80-rule";
  report.bound = Rational(5, 4);

  // The all-outcomes associative check the rule is sometimes equated with;
  // for binary outputs away from symmetric rates the two genuinely differ.
  const PropertyReport full = check_assoc_independence(f, Rational(5, 4));
  append_note(&report.notes,
              std::string("all-outcomes associative check at 5/4 ") +
                  (full.holds ? "also holds" : "does not hold") +
                  (full.holds == report.holds ? " (agrees)" : " (disagrees)"));
  return report;
}

void MetricBounds::set(const std::string& x, const std::string& y, Rational k) {
  entries_[{x, y}] = std::move(k);
}

std::vector<std::vector<Rational>> MetricBounds::resolve(const Domain& domain) const {
  const int n = domain.size();
  std::vector<std::vector<Rational>> k(n, std::vector<Rational>(n, Rational(0)));
  std::vector<std::vector<bool>> have(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    k[i][i] = Rational(1);
    have[i][i] = true;
  }
  for (const auto& [pair, value] : entries_) {
    const auto x = domain.index_of(pair.first);
    const auto y = domain.index_of(pair.second);
    if (!x || !y) {
      fail(Errc::kInvalidMetric, "metric names value '" +
                                     (x ? pair.second : pair.first) +
                                     "' outside the sensitive domain");
    }
    if (*x == *y) {
      if (!value.is_one()) {
        fail(Errc::kInvalidMetric, "metric must be 1 on the diagonal");
      }
      continue;
    }
    if (value < Rational(1)) {
      fail(Errc::kInvalidMetric, "metric bounds must be at least 1");
    }
    if (have[*x][*y] && k[*x][*y] != value) {
      fail(Errc::kInvalidMetric, "metric is not symmetric at (" + pair.first +
                                     ", " + pair.second + ")");
    }
    k[*x][*y] = value;
    k[*y][*x] = value;
    have[*x][*y] = have[*y][*x] = true;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!have[i][j]) {
        fail(Errc::kInvalidMetric, "metric missing a bound for (" +
                                       domain.value(i) + ", " + domain.value(j) +
                                       ")");
      }
    }
  }
  return k;
}

}  // namespace caudit
