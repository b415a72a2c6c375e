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

#ifndef CAUDIT_THEOREMS_HPP_
#define CAUDIT_THEOREMS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "caudit/generator.hpp"

namespace caudit {

// The checked results. Deterministic keys the campaign report is organized
// around; names match the report and CLI output.
enum class TheoremId {
  kNiImpliesCi,          // exact noninterference forces causal ratio 1
  kIndepAssocEqCi,       // deterministic: independence makes assoc == causal
  kEpsNiImpliesEpsCi,    // fresh randomness: causal ratio <= NI ratio
  kOneSidedCor,          // fresh randomness: observational vs interventional
  kEpsIndepAssocEqCi,    // randomized: independence + freshness, assoc == causal
  kAssocToAssocX,        // posterior/prior ratio <= output-conditional ratio
  kAssocXToAssoc2Eps,    // output-conditional ratio <= (posterior ratio)^2
  kImpossClassify,       // the four-case classification is total and verified
  kLemmaOpenDisj,        // open under psi stays open under (phi or psi)
  kLemmaOpenNeq,         // open given every output stays open given negations
};

inline constexpr std::array<TheoremId, 10> kAllTheorems = {
    TheoremId::kNiImpliesCi,        TheoremId::kIndepAssocEqCi,
    TheoremId::kEpsNiImpliesEpsCi,  TheoremId::kOneSidedCor,
    TheoremId::kEpsIndepAssocEqCi,  TheoremId::kAssocToAssocX,
    TheoremId::kAssocXToAssoc2Eps,  TheoremId::kImpossClassify,
    TheoremId::kLemmaOpenDisj,      TheoremId::kLemmaOpenNeq,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

struct TheoremVerdict {
  enum class Status { kHolds, kSkipped, kViolated };
  Status status = Status::kSkipped;
  std::string detail;  // skip reason or violation witness

  bool holds() const { return status == Status::kHolds; }
  bool violated() const { return status == Status::kViolated; }
};

// Checks one theorem against one frame. Hypotheses are evaluated exactly on
// the frame itself, never assumed from generation flags; frames outside a
// theorem's hypotheses come back Skipped. `phi_seed` drives the sampled
// proposition battery of the impossibility and lemma checks.
TheoremVerdict check_theorem(TheoremId id, const AnalysisFrame& f,
                             uint64_t phi_seed = 0);

struct TheoremCounts {
  long checked = 0;  // hypotheses held and the conclusion was evaluated
  long holds = 0;
  long skipped = 0;
  long violated = 0;
};

struct CampaignFinding {
  uint64_t seed = 0;
  std::string description;
};

struct CampaignViolation {
  uint64_t seed = 0;
  TheoremId id = TheoremId::kNiImpliesCi;
  std::string witness;
};

struct CampaignReport {
  long frames = 0;
  std::map<TheoremId, TheoremCounts> counts;
  std::vector<CampaignViolation> violations;

  // Precondition-necessity exhibits the campaign is expected to find.
  std::optional<CampaignFinding> correlated_gap;   // assoc != causal under correlation
  std::optional<CampaignFinding> nonfresh_gap;     // causal > NI without freshness
  std::optional<CampaignFinding> strict_dilution;  // assoc-X strictly below assoc

  // Data only: among non-fresh randomized frames meeting the other
  // hypotheses, how often the assoc == causal conclusion still held.
  long nonfresh_indep_survived = 0;
  long nonfresh_indep_failed = 0;

  std::string generator = "splitmix64";

  bool all_expected_findings() const {
    return correlated_gap && nonfresh_gap && strict_dilution;
  }
};

// Fixed-size campaign: `trials_per_cfg` frames from each config, every
// theorem checked on every frame. Deterministic in its inputs; trial seeds
// come from a splitmix64 stream per config.
CampaignReport run_campaign(const std::vector<GenConfig>& grid, long trials_per_cfg);

// The documented default grid: deterministic/randomized x correlated/
// independent x fresh/non-fresh, with per-config seeds derived from `seed`.
std::vector<GenConfig> default_grid(uint64_t seed);
std::vector<GenConfig> full_grid(uint64_t seed);

// Runs the default grid in rounds until every theorem has at least
// `per_theorem_target` checked (non-skipped) trials and the expected
// precondition counterexamples appeared, or the frame budget runs out.
CampaignReport run_default_campaign(uint64_t seed, long per_theorem_target,
                                    long max_frames = 200000);

std::string campaign_summary(const CampaignReport& report);

}  // namespace caudit

#endif  // CAUDIT_THEOREMS_HPP_
