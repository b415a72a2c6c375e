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

#include "caudit/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "caudit/checkers.hpp"
#include "caudit/engine.hpp"
#include "caudit/error.hpp"
#include "caudit/impossibility.hpp"

namespace caudit {

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::kNiImpliesCi: return "NI_IMPLIES_CI";
    case TheoremId::kIndepAssocEqCi: return "INDEP_ASSOC_EQ_CI";
    case TheoremId::kEpsNiImpliesEpsCi: return "EPS_NI_IMPLIES_EPS_CI";
    case TheoremId::kOneSidedCor: return "ONE_SIDED_COR";
    case TheoremId::kEpsIndepAssocEqCi: return "EPS_INDEP_ASSOC_EQ_CI";
    case TheoremId::kAssocToAssocX: return "ASSOC_TO_ASSOCX";
    case TheoremId::kAssocXToAssoc2Eps: return "ASSOCX_TO_ASSOC_2EPS";
    case TheoremId::kImpossClassify: return "IMPOSS_CLASSIFY";
    case TheoremId::kLemmaOpenDisj: return "LEMMA_OPEN_DISJ";
    case TheoremId::kLemmaOpenNeq: return "LEMMA_OPEN_NEQ";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  for (TheoremId id : kAllTheorems) {
    if (name == theorem_name(id)) return id;
  }
  return std::nullopt;
}

namespace {

// ---------------------------------------------------------------------------
// Frame facts the theorem hypotheses are stated over. Everything is computed
// exactly on the frame; generation flags are never trusted.

bool frame_fresh(const AnalysisFrame& f) {
  return !f.randomness || is_fresh_auto(f.pm, *f.randomness);
}

bool frame_xa_independent(const AnalysisFrame& f) {
  if (f.other_attrs.empty()) return true;
  const VarIndex x[] = {f.sensitive_attr};
  return independent(f.pm, x, f.other_attrs);
}

bool all_sensitive_values_possible(const AnalysisFrame& f) {
  for (const auto& [value, mass] : marginal(f.pm, f.sensitive_attr)) {
    if (mass.is_zero()) return false;
  }
  return true;
}

// Noninterference of the output table itself: constant along the sensitive
// input for every fixed setting of the remaining parents (randomness
// included). This is the hypothesis that makes causal irrelevance follow for
// every background distribution, fresh or not.
bool functionally_noninterfering(const AnalysisFrame& f) {
  const CausalModel& m = f.pm.model;
  const StructuralEquation& eq = m.equation(f.output);
  int pos = -1;
  for (size_t i = 0; i < eq.parents.size(); ++i) {
    if (eq.parents[i] == f.sensitive_input) pos = static_cast<int>(i);
  }
  if (pos < 0) return true;
  std::vector<int> sizes;
  for (VarIndex p : eq.parents) sizes.push_back(m.variable(p).domain->size());
  // Stride of the sensitive digit in the mixed-radix row index.
  int64_t stride = 1;
  for (size_t i = pos + 1; i < sizes.size(); ++i) stride *= sizes[i];
  for (int64_t row = 0; row < eq.row_count(); ++row) {
    const int digit = static_cast<int>((row / stride) % sizes[pos]);
    if (digit == 0) continue;
    if (eq.table[row] != eq.table[row - digit * stride]) return false;
  }
  return true;
}

std::vector<Rational> interventional_dist(const AnalysisFrame& f, ValueIndex x) {
  const CausalModel& m = f.pm.model;
  const Intervention iv = Intervention::single(
      m, m.variable(f.sensitive_input).id, m.variable(f.sensitive_input).domain->value(x));
  std::vector<Rational> dist(f.output_domain().size(), Rational(0));
  for (const auto& [value, mass] : distribution(f.pm, QueryContext(iv), f.output)) {
    dist[value] = mass;
  }
  return dist;
}

std::vector<Rational> conditional_dist(const AnalysisFrame& f, ValueIndex x) {
  const CausalModel& m = f.pm.model;
  const QueryContext ctx(Proposition::eq(m.variable(f.sensitive_attr).id,
                                         m.variable(f.sensitive_attr).domain->value(x)));
  std::vector<Rational> dist(f.output_domain().size(), Rational(0));
  for (const auto& [value, mass] : distribution(f.pm, ctx, f.output)) {
    dist[value] = mass;
  }
  return dist;
}

Ratio ni_ratio(const AnalysisFrame& f) { return check_noninterference(f).tightest; }
Ratio causal_ratio(const AnalysisFrame& f) {
  return measure_causal_irrelevance(f).tightest;
}
Ratio assoc_ratio(const AnalysisFrame& f) {
  return measure_assoc_independence(f).tightest;
}
Ratio assocx_ratio(const AnalysisFrame& f) {
  return measure_assoc_independence_on_x(f).tightest;
}

// ---------------------------------------------------------------------------
// Sampled proposition battery for the impossibility and lemma checks: every
// atom over the background variables, plus 50 seeded random formulas of
// depth at most two.

std::vector<Proposition> background_atoms(const AnalysisFrame& f) {
  const CausalModel& m = f.pm.model;
  std::vector<Proposition> atoms;
  for (int v = 0; v < m.background_count(); ++v) {
    for (const std::string& value : m.variable(v).domain->values()) {
      atoms.push_back(Proposition::eq(m.variable(v).id, value));
    }
  }
  return atoms;
}

Proposition random_atom(SplitMix64& rng, const CausalModel& m) {
  const VarIndex v = static_cast<VarIndex>(rng.below(m.background_count()));
  const Domain& dom = *m.variable(v).domain;
  const std::string& value = dom.value(static_cast<ValueIndex>(rng.below(dom.size())));
  return rng.below(2) ? Proposition::eq(m.variable(v).id, value)
                      : Proposition::ne(m.variable(v).id, value);
}

Proposition random_formula(SplitMix64& rng, const CausalModel& m, int depth) {
  if (depth == 0 || rng.below(3) == 0) return random_atom(rng, m);
  switch (rng.below(3)) {
    case 0:
      return Proposition::conj(random_formula(rng, m, depth - 1),
                               random_formula(rng, m, depth - 1));
    case 1:
      return Proposition::disj(random_formula(rng, m, depth - 1),
                               random_formula(rng, m, depth - 1));
    default:
      return Proposition::negate(random_formula(rng, m, depth - 1));
  }
}

struct PhiBattery {
  std::vector<Proposition> phis;                 // atoms first, then sampled
  size_t atom_count = 0;
  std::vector<std::pair<size_t, size_t>> pairs;  // for the disjunction lemma
};

PhiBattery sample_phis(const AnalysisFrame& f, uint64_t phi_seed) {
  PhiBattery battery;
  battery.phis = background_atoms(f);
  battery.atom_count = battery.phis.size();
  SplitMix64 rng(phi_seed ^ 0xC0FFEE5EEDULL);
  for (int i = 0; i < 50; ++i) {
    battery.phis.push_back(random_formula(rng, f.pm.model, 2));
  }
  for (int i = 0; i < 50; ++i) {
    battery.pairs.emplace_back(rng.below(battery.phis.size()),
                               rng.below(battery.phis.size()));
  }
  return battery;
}

// Masses split by (phi truth, output value), computed in one world pass.
// Every context the impossibility battery needs is derivable from these.
struct PhiMassTable {
  Rational total;
  Rational phi_mass;
  std::vector<Rational> with_phi;     // phi holds, by output value
  std::vector<Rational> without_phi;  // phi fails, by output value

  Rational output_mass(ValueIndex o) const { return with_phi[o] + without_phi[o]; }
};

PhiMassTable phi_masses(const WorldTable& table, const CompiledProp& phi,
                        VarIndex output) {
  const int n = table.model().variable(output).domain->size();
  PhiMassTable t;
  t.total = Rational(0);
  t.phi_mass = Rational(0);
  t.with_phi.assign(n, Rational(0));
  t.without_phi.assign(n, Rational(0));
  for (const auto& [world, mass] : table.worlds()) {
    t.total += mass;
    if (phi.eval(world)) {
      t.phi_mass += mass;
      t.with_phi[world[output]] += mass;
    } else {
      t.without_phi[world[output]] += mass;
    }
  }
  return t;
}

bool open_fraction(const Rational& numer, const Rational& denom) {
  return numer.sign() > 0 && numer < denom;
}

// ---------------------------------------------------------------------------
// Individual theorem checks.

TheoremVerdict holds() {
  return TheoremVerdict{TheoremVerdict::Status::kHolds, ""};
}
TheoremVerdict skipped(std::string why) {
  return TheoremVerdict{TheoremVerdict::Status::kSkipped, std::move(why)};
}
TheoremVerdict violated(std::string witness) {
  return TheoremVerdict{TheoremVerdict::Status::kViolated, std::move(witness)};
}

TheoremVerdict check_ni_implies_ci(const AnalysisFrame& f) {
  if (!functionally_noninterfering(f)) {
    return skipped("output depends on the sensitive input");
  }
  const Ratio ci = causal_ratio(f);
  if (ci.is_one()) return holds();
  return violated("noninterfering system has causal ratio " + ci.str());
}

TheoremVerdict check_indep_assoc_eq_ci(const AnalysisFrame& f) {
  if (f.randomness) return skipped("randomized frame");
  if (!frame_xa_independent(f)) return skipped("sensitive attribute correlated");
  if (!all_sensitive_values_possible(f)) return skipped("zero-mass sensitive value");
  const Domain& xdom = f.sensitive_domain();
  for (ValueIndex x = 0; x < xdom.size(); ++x) {
    const auto cond = conditional_dist(f, x);
    const auto done = interventional_dist(f, x);
    for (size_t o = 0; o < cond.size(); ++o) {
      if (cond[o] != done[o]) {
        return violated("conditioning and intervening disagree at x=" +
                        xdom.value(x) + ", o=" + f.output_domain().value(o) +
                        ": " + cond[o].frac_str() + " vs " + done[o].frac_str());
      }
    }
  }
  const Ratio assoc = assoc_ratio(f);
  const Ratio causal = causal_ratio(f);
  if (!(assoc == causal)) {
    return violated("assoc ratio " + assoc.str() + " != causal ratio " +
                    causal.str());
  }
  return holds();
}

TheoremVerdict check_eps_ni_implies_eps_ci(const AnalysisFrame& f) {
  if (!frame_fresh(f)) return skipped("randomness not fresh");
  const Ratio ni = ni_ratio(f);
  const Ratio ci = causal_ratio(f);
  if (ci <= ni) return holds();
  return violated("causal ratio " + ci.str() + " exceeds NI ratio " + ni.str());
}

TheoremVerdict check_one_sided_cor(const AnalysisFrame& f) {
  if (!frame_fresh(f)) return skipped("randomness not fresh");
  const Ratio ni = ni_ratio(f);
  std::vector<Rational> se(f.output_domain().size(), Rational(0));
  for (const auto& [value, mass] : distribution(f.pm, QueryContext(), f.output)) {
    se[value] = mass;
  }
  const Domain& xdom = f.sensitive_domain();
  for (ValueIndex x = 0; x < xdom.size(); ++x) {
    const auto done = interventional_dist(f, x);
    for (size_t o = 0; o < se.size(); ++o) {
      const Ratio fwd = Ratio::bound(se[o], done[o]);
      const Ratio bwd = Ratio::bound(done[o], se[o]);
      if (!(fwd <= ni) || !(bwd <= ni)) {
        return violated("observational vs do(x=" + xdom.value(x) + ") at o=" +
                        f.output_domain().value(o) + " breaks the NI bound " +
                        ni.str());
      }
    }
  }
  return holds();
}

TheoremVerdict check_eps_indep_assoc_eq_ci(const AnalysisFrame& f) {
  if (!f.randomness) return skipped("deterministic frame");
  if (!frame_fresh(f)) return skipped("randomness not fresh");
  if (!frame_xa_independent(f)) return skipped("sensitive attribute correlated");
  if (!all_sensitive_values_possible(f)) return skipped("zero-mass sensitive value");
  const Ratio assoc = assoc_ratio(f);
  const Ratio causal = causal_ratio(f);
  if (assoc == causal) return holds();
  return violated("assoc ratio " + assoc.str() + " != causal ratio " + causal.str());
}

TheoremVerdict check_assoc_to_assocx(const AnalysisFrame& f) {
  const Ratio assoc = assoc_ratio(f);
  const Ratio ax = assocx_ratio(f);
  if (ax <= assoc) return holds();
  return violated("assoc-X ratio " + ax.str() + " exceeds assoc ratio " +
                  assoc.str());
}

TheoremVerdict check_assocx_to_assoc(const AnalysisFrame& f) {
  const Ratio assoc = assoc_ratio(f);
  const Ratio ax = assocx_ratio(f);
  if (assoc <= ax.squared()) return holds();
  return violated("assoc ratio " + assoc.str() + " exceeds squared assoc-X ratio " +
                  ax.squared().str());
}

// The four-case classification, re-derived from one mass table per phi, with
// the public classifier cross-checked on the atoms.
TheoremVerdict check_imposs_classify(const AnalysisFrame& f, uint64_t phi_seed) {
  const PhiBattery battery = sample_phis(f, phi_seed);
  const OpennessOracle oracle(f.pm);
  const auto realizable = oracle.realizable_outputs(f.output);
  const bool informative = !oracle.forced_output(f.output).has_value();

  for (size_t i = 0; i < battery.phis.size(); ++i) {
    const Proposition& phi = battery.phis[i];
    const CompiledProp compiled(phi, oracle.table().model());
    const PhiMassTable t = phi_masses(oracle.table(), compiled, f.output);

    int expected_case;
    if (!open_fraction(t.phi_mass, t.total)) {
      expected_case = 0;  // closed for the plain model
    } else if (!informative) {
      expected_case = 1;
    } else {
      bool some_output_closes = false;
      for (ValueIndex o : realizable) {
        if (t.with_phi[o].is_zero() || t.without_phi[o].is_zero()) {
          some_output_closes = true;
          break;
        }
      }
      if (some_output_closes) {
        expected_case = 2;
      } else {
        expected_case = 3;
        for (ValueIndex o : realizable) {
          // phi given (output != o OR phi): numerator phi, denominator
          // everything except the (output = o, not phi) block.
          const Rational denom = t.total - t.without_phi[o];
          if (!open_fraction(t.phi_mass, denom)) {
            return violated("phi '" + phi.str() +
                            "' not open under the witness guard for o=" +
                            f.output_domain().value(o));
          }
          // phi given (output = o AND the guard) == (output = o AND phi):
          // consistent and trivially closed.
          if (t.with_phi[o].is_zero()) {
            return violated("witness context inconsistent for phi '" + phi.str() +
                            "' at o=" + f.output_domain().value(o));
          }
        }
      }
    }

    if (i < battery.atom_count) {
      const auto classified = classify_impossibility(f, phi);
      const int got = static_cast<int>(classified.outcome);
      if (got != expected_case) {
        return violated("classifier returned case " +
                        std::string(case_name(classified.outcome)) +
                        " for phi '" + phi.str() + "', mass table says case " +
                        std::to_string(expected_case));
      }
    }
  }
  return holds();
}

TheoremVerdict check_lemma_open_disj(const AnalysisFrame& f, uint64_t phi_seed) {
  const PhiBattery battery = sample_phis(f, phi_seed);
  const OpennessOracle oracle(f.pm);
  long applicable = 0;
  for (const auto& [i, j] : battery.pairs) {
    const Proposition& phi = battery.phis[i];
    const Proposition& psi = battery.phis[j];
    const OpennessVerdict before = oracle.classify(psi, phi);
    if (!before.open()) continue;
    ++applicable;
    const OpennessVerdict after = oracle.classify(Proposition::disj(phi, psi), phi);
    if (!after.open()) {
      return violated("phi '" + phi.str() + "' open under '" + psi.str() +
                      "' but not under the disjunction");
    }
  }
  if (applicable == 0) return skipped("no sampled pair met the hypothesis");
  return holds();
}

TheoremVerdict check_lemma_open_neq(const AnalysisFrame& f, uint64_t phi_seed) {
  const OpennessOracle oracle(f.pm);
  if (oracle.forced_output(f.output)) return skipped("uninformative system");
  const auto realizable = oracle.realizable_outputs(f.output);
  const PhiBattery battery = sample_phis(f, phi_seed);
  long applicable = 0;
  for (const Proposition& phi : battery.phis) {
    const CompiledProp compiled(phi, oracle.table().model());
    const PhiMassTable t = phi_masses(oracle.table(), compiled, f.output);
    bool open_for_all_outputs = true;
    for (ValueIndex o : realizable) {
      if (!open_fraction(t.with_phi[o], t.output_mass(o))) {
        open_for_all_outputs = false;
        break;
      }
    }
    if (!open_for_all_outputs) continue;
    ++applicable;
    for (ValueIndex o : realizable) {
      const Rational numer = t.phi_mass - t.with_phi[o];
      const Rational denom = t.total - t.output_mass(o);
      if (!open_fraction(numer, denom)) {
        return violated("phi '" + phi.str() + "' open for every output but not for output != " +
                        f.output_domain().value(o));
      }
    }
  }
  if (applicable == 0) return skipped("no sampled phi met the hypothesis");
  return holds();
}

}  // namespace

TheoremVerdict check_theorem(TheoremId id, const AnalysisFrame& f, uint64_t phi_seed) {
  switch (id) {
    case TheoremId::kNiImpliesCi: return check_ni_implies_ci(f);
    case TheoremId::kIndepAssocEqCi: return check_indep_assoc_eq_ci(f);
    case TheoremId::kEpsNiImpliesEpsCi: return check_eps_ni_implies_eps_ci(f);
    case TheoremId::kOneSidedCor: return check_one_sided_cor(f);
    case TheoremId::kEpsIndepAssocEqCi: return check_eps_indep_assoc_eq_ci(f);
    case TheoremId::kAssocToAssocX: return check_assoc_to_assocx(f);
    case TheoremId::kAssocXToAssoc2Eps: return check_assocx_to_assoc(f);
    case TheoremId::kImpossClassify: return check_imposs_classify(f, phi_seed);
    case TheoremId::kLemmaOpenDisj: return check_lemma_open_disj(f, phi_seed);
    case TheoremId::kLemmaOpenNeq: return check_lemma_open_neq(f, phi_seed);
  }
  fail(Errc::kInvalidParameter, "unknown theorem id");
}

namespace {

void run_one_trial(const GenConfig& base, uint64_t trial_seed, CampaignReport* report) {
  GenConfig cfg = base;
  cfg.seed = trial_seed;
  const AnalysisFrame f = generate_frame(cfg);
  ++report->frames;

  for (TheoremId id : kAllTheorems) {
    const TheoremVerdict v = check_theorem(id, f, trial_seed);
    TheoremCounts& c = report->counts[id];
    switch (v.status) {
      case TheoremVerdict::Status::kHolds:
        ++c.checked;
        ++c.holds;
        break;
      case TheoremVerdict::Status::kSkipped:
        ++c.skipped;
        break;
      case TheoremVerdict::Status::kViolated:
        ++c.checked;
        ++c.violated;
        report->violations.push_back({trial_seed, id, v.detail});
        break;
    }
  }

  // Precondition-necessity hunts and the freshness side data.
  const Ratio assoc = assoc_ratio(f);
  const Ratio causal = causal_ratio(f);
  const bool xa_indep = frame_xa_independent(f);
  const bool fresh = frame_fresh(f);
  if (!report->correlated_gap && !xa_indep && !(assoc == causal)) {
    report->correlated_gap = CampaignFinding{
        trial_seed, "correlated frame with assoc ratio " + assoc.str() +
                        " vs causal ratio " + causal.str()};
  }
  if (!report->strict_dilution) {
    const Ratio ax = assocx_ratio(f);
    if (ax <= assoc && !(ax == assoc)) {
      report->strict_dilution = CampaignFinding{
          trial_seed, "assoc-X ratio " + ax.str() + " strictly below assoc ratio " +
                          assoc.str()};
    }
  }
  if (!fresh) {
    const Ratio ni = ni_ratio(f);
    if (!report->nonfresh_gap && !(causal <= ni)) {
      report->nonfresh_gap = CampaignFinding{
          trial_seed, "non-fresh frame with causal ratio " + causal.str() +
                          " above NI ratio " + ni.str()};
    }
    if (f.randomness && xa_indep && all_sensitive_values_possible(f)) {
      if (assoc == causal) {
        ++report->nonfresh_indep_survived;
      } else {
        ++report->nonfresh_indep_failed;
      }
    }
  }
}

}  // namespace

std::vector<GenConfig> default_grid(uint64_t seed) {
  SplitMix64 rng(seed);
  auto cfg = [&](bool randomized, bool correlated, bool fresh) {
    GenConfig c;
    c.seed = rng.next();
    c.randomized = randomized;
    c.correlate_x_a = correlated;
    c.fresh_r = fresh;
    return c;
  };
  return {
      cfg(false, false, true), cfg(false, true, true), cfg(true, false, true),
      cfg(true, false, false), cfg(true, true, true),  cfg(true, true, false),
  };
}

std::vector<GenConfig> full_grid(uint64_t seed) {
  std::vector<GenConfig> grid = default_grid(seed);
  SplitMix64 rng(seed ^ 0xF0F0F0F0ULL);
  for (GenConfig base : default_grid(rng.next())) {
    base.domain_size_range = {2, 3};
    base.num_other_inputs = {1, 2};
    base.max_denominator = 8;
    grid.push_back(base);
  }
  return grid;
}

CampaignReport run_campaign(const std::vector<GenConfig>& grid, long trials_per_cfg) {
  if (trials_per_cfg < 1) {
    fail(Errc::kInvalidConfig, "need at least one trial per config");
  }
  CampaignReport report;
  for (TheoremId id : kAllTheorems) report.counts[id];
  for (const GenConfig& cfg : grid) {
    SplitMix64 stream(cfg.seed);
    for (long t = 0; t < trials_per_cfg; ++t) {
      run_one_trial(cfg, stream.next(), &report);
    }
  }
  return report;
}

CampaignReport run_default_campaign(uint64_t seed, long per_theorem_target,
                                    long max_frames) {
  if (per_theorem_target < 1) {
    fail(Errc::kInvalidConfig, "need a positive per-theorem trial target");
  }
  const std::vector<GenConfig> grid = default_grid(seed);
  std::vector<SplitMix64> streams;
  for (const GenConfig& cfg : grid) streams.emplace_back(cfg.seed);

  CampaignReport report;
  for (TheoremId id : kAllTheorems) report.counts[id];
  const long round = 200;
  while (report.frames < max_frames) {
    for (size_t i = 0; i < grid.size(); ++i) {
      for (long t = 0; t < round; ++t) {
        run_one_trial(grid[i], streams[i].next(), &report);
      }
    }
    bool met = report.all_expected_findings();
    for (TheoremId id : kAllTheorems) {
      met = met && report.counts.at(id).checked >= per_theorem_target;
    }
    if (met) break;
  }
  return report;
}

std::string campaign_summary(const CampaignReport& report) {
  std::ostringstream out;
  out << "campaign: " << report.frames << " frames, generator " << report.generator
      << "\n";
  for (TheoremId id : kAllTheorems) {
    const TheoremCounts& c = report.counts.at(id);
    out << "  " << theorem_name(id) << ": checked " << c.checked << ", holds "
        << c.holds << ", skipped " << c.skipped << ", violated " << c.violated
        << "\n";
  }
  if (report.violations.empty()) {
    out << "violations: none\n";
  } else {
    out << "violations:\n";
    for (const CampaignViolation& v : report.violations) {
      out << "  seed " << v.seed << " " << theorem_name(v.id) << ": " << v.witness
          << "\n";
    }
  }
  auto finding = [&](const char* name, const std::optional<CampaignFinding>& f) {
    out << name << ": ";
    if (f) {
      out << "seed " << f->seed << ", " << f->description << "\n";
    } else {
      out << "not found\n";
    }
  };
  finding("correlated assoc/causal gap", report.correlated_gap);
  finding("non-fresh NI/causal gap", report.nonfresh_gap);
  finding("strict assoc-X dilution", report.strict_dilution);
  out << "non-fresh independent frames: conclusion survived "
      << report.nonfresh_indep_survived << ", failed " << report.nonfresh_indep_failed
      << "\n";
  return out.str();
}

}  // namespace caudit
