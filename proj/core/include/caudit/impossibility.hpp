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

#ifndef CAUDIT_IMPOSSIBILITY_HPP_
#define CAUDIT_IMPOSSIBILITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "caudit/checkers.hpp"
#include "caudit/frames.hpp"
#include "caudit/proposition.hpp"

namespace caudit {

enum class Openness { kOpen, kClosed, kInconsistent };

// Whether a proposition is settled (Closed: mass 0 or 1) or genuinely
// uncertain (Open: strictly between) under a conditioning context.
// Inconsistent contexts settle nothing.
struct OpennessVerdict {
  Openness status = Openness::kInconsistent;
  Rational mass;  // Pr[phi | context]; meaningful when consistent

  bool open() const { return status == Openness::kOpen; }
  bool closed() const { return status == Openness::kClosed; }
};

OpennessVerdict classify_openness(const ProbCausalModel& pm,
                                  const Proposition& context,
                                  const Proposition& phi);

// Answers many openness queries against one model without rebuilding the
// world table each time. The single-shot classify_openness above is a thin
// wrapper.
class OpennessOracle {
 public:
  explicit OpennessOracle(const ProbCausalModel& pm) : table_(pm) {}

  OpennessVerdict classify(const Proposition& context, const Proposition& phi) const;
  // Output values with positive prior mass, domain order.
  std::vector<ValueIndex> realizable_outputs(VarIndex output) const;
  // The output value holding all the mass, when one exists.
  std::optional<ValueIndex> forced_output(VarIndex output) const;

  const WorldTable& table() const { return table_; }

 private:
  WorldTable table_;
};

// A system is informative when no output value is certain a priori.
bool is_informative(const AnalysisFrame& f);

// The first output (domain order, positive mass) that alone settles an
// otherwise-open phi; absent when no output does, or when phi was never open.
std::optional<std::string> trivially_closes(const AnalysisFrame& f,
                                            const Proposition& phi);

struct OutputOpennessPair {
  std::string output;
  OpennessVerdict before;  // phi given (output != o OR phi)
  OpennessVerdict after;   // phi given (output = o AND (output != o OR phi))
};

// The four mutually exclusive cases: either phi was settled from the start,
// or the system reveals nothing, or one output settles phi by itself, or a
// background condition can be exhibited for every output under which seeing
// that output settles phi.
struct ImpossibilityClassification {
  enum class Case {
    kPhiClosedForSe,
    kUninformative,
    kTriviallyCloses,
    kWitnessForEveryOutput,
  };

  Case outcome = Case::kPhiClosedForSe;
  OpennessVerdict phi_for_se;
  std::optional<std::string> forcing_output;   // Uninformative / TriviallyCloses
  std::vector<OutputOpennessPair> per_output;  // WitnessForEveryOutput
  std::string notes;
};

const char* case_name(ImpossibilityClassification::Case c);

ImpossibilityClassification classify_impossibility(const AnalysisFrame& f,
                                                   const Proposition& phi);

// An adversary exhibit: a background condition under which phi is still open,
// plus an output whose observation closes it. Both verdicts are re-derived
// before returning. Empty when phi is already settled or the system is
// uninformative (then no disclosure is forced).
struct DisclosureWitness {
  Proposition background;
  std::string output;
  OpennessVerdict before;  // phi given background
  OpennessVerdict after;   // phi given background AND output
};

std::optional<DisclosureWitness> disclosure_witness(const AnalysisFrame& f,
                                                    const Proposition& phi);

// The nondiscrimination reading: a subpopulation that contains both phi and
// not-phi members, whose output=o members are all on one side.
struct DiversityLossRecord {
  Proposition subpopulation;          // output != o OR phi
  std::string output;
  Rational subpopulation_mass;        // Pr[subpopulation]
  OpennessVerdict diversity_before;   // phi within the subpopulation: open
  OpennessVerdict diversity_after;    // phi within its output=o part: closed
};

// Throws PreconditionViolated when the frame is uninformative, phi lacks all
// diversity, the system trivially removes diversity for phi, or the output
// value has zero mass.
DiversityLossRecord diversity_report(const AnalysisFrame& f, const Proposition& phi,
                                     const std::string& output_value);

}  // namespace caudit

#endif  // CAUDIT_IMPOSSIBILITY_HPP_
