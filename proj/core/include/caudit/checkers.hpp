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

#ifndef CAUDIT_CHECKERS_HPP_
#define CAUDIT_CHECKERS_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caudit/frames.hpp"
#include "caudit/proposition.hpp"
#include "caudit/rational.hpp"

namespace caudit {

// One probability a report cites, in replayable form: apply the do()
// assignments, condition on `given`, ask for `event`. Feeding the same three
// pieces back through the probability engine (or the CLI `prob` command)
// must reproduce `prob` exactly.
struct ProbeQuery {
  std::vector<std::pair<std::string, std::string>> do_assignments;
  Proposition given = Proposition::truth();
  Proposition event = Proposition::truth();
  Rational prob;

  std::string str() const;
};

// A counterexample: two cited probabilities and the bound their ratio was
// held to. A violation means lhs.prob > bound * rhs.prob.
struct RatioWitness {
  ProbeQuery lhs;
  ProbeQuery rhs;
  std::optional<Rational> bound;

  std::string str() const;
};

struct PropertyReport {
  std::string property;
  bool holds = true;
  Ratio tightest = Ratio::one();
  std::optional<Rational> bound;          // the requested bound, if any
  std::optional<RatioWitness> witness;    // first violation, or the max pair
  std::string notes;
};

// Symmetric per-pair ratio bounds standing in for an exponentiated metric:
// bounds[{x,y}] = k(x,y) >= 1 with k(x,x) = 1 implied. Values are tokens of
// the sensitive input's domain.
class MetricBounds {
 public:
  void set(const std::string& x, const std::string& y, Rational k);
  // Validates totality over the domain, symmetry, k >= 1, and unit diagonal;
  // throws InvalidMetric. Returns bounds indexed by value pairs.
  std::vector<std::vector<Rational>> resolve(const Domain& domain) const;

  const std::map<std::pair<std::string, std::string>, Rational>& entries() const {
    return entries_;
  }

 private:
  std::map<std::pair<std::string, std::string>, Rational> entries_;
};

// Noninterference: the output distribution (over the randomness marginal; a
// point mass for deterministic frames) is the same for every sensitive value,
// at every fixed setting of the other inputs.
PropertyReport check_noninterference(const AnalysisFrame& f);

// The tightest multiplicative bound the same comparison satisfies. Requires
// fresh randomness; throws RandomnessNotFresh otherwise.
PropertyReport measure_noninterference(const AnalysisFrame& f);

// The approximate form at an explicit bound; same freshness requirement.
PropertyReport check_noninterference_at(const AnalysisFrame& f, const Rational& bound);

// Causal irrelevance: interventional output distributions across sensitive
// values stay within `bound` (exact irrelevance at the default bound 1).
PropertyReport check_causal_irrelevance(const AnalysisFrame& f,
                                        std::optional<Rational> bound = Rational(1));
PropertyReport measure_causal_irrelevance(const AnalysisFrame& f);

// Associative independence on the output: conditional output distributions
// across positive-mass sensitive values stay within `bound`.
PropertyReport check_assoc_independence(const AnalysisFrame& f,
                                        std::optional<Rational> bound = Rational(1));
PropertyReport measure_assoc_independence(const AnalysisFrame& f);

// Associative independence on the sensitive attribute: posterior vs prior for
// every positive-mass output, both directions.
PropertyReport check_assoc_independence_on_x(const AnalysisFrame& f,
                                             std::optional<Rational> bound);
PropertyReport measure_assoc_independence_on_x(const AnalysisFrame& f);

// Differential privacy of a database release: per-row noninterference at
// `bound` over every assignment of the other rows, under the frame's BOT
// mode. Requires fresh randomness when present.
PropertyReport check_differential_privacy(const DatabaseFrame& f,
                                          std::optional<Rational> bound);
PropertyReport measure_differential_privacy(const DatabaseFrame& f);

// The four-fifths rule for the named positive outcome: the smallest group
// selection rate must be at least 4/5 of the largest. Notes record whether
// the all-outcomes associative check at 5/4 agrees.
PropertyReport check_80_rule(const AnalysisFrame& f, const std::string& positive_value);

// Per-pair Lipschitz bounds on interventional output distributions:
// Pr[output=o | do(x)] <= k(x,y) * Pr[output=o | do(y)] for all x, y, o.
// The tightest ratio reported is the uniform factor by which the supplied
// bounds would have to be scaled; the check holds iff it is at most 1.
PropertyReport check_lipschitz(const AnalysisFrame& f, const MetricBounds& metric);

}  // namespace caudit

#endif  // CAUDIT_CHECKERS_HPP_
