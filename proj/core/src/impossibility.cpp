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

#include "caudit/impossibility.hpp"

#include "caudit/engine.hpp"
#include "caudit/error.hpp"

namespace caudit {

namespace {

OpennessVerdict classify_in_table(const WorldTable& table, const Proposition& context,
                                  const Proposition& phi) {
  const CompiledProp ctx(context, table.model());
  const CompiledProp event(phi, table.model());
  const Rational denom = table.mass_where(ctx);
  OpennessVerdict v;
  if (denom.is_zero()) {
    v.status = Openness::kInconsistent;
    return v;
  }
  v.mass = table.mass_where(ctx, event) / denom;
  v.status = (v.mass.is_zero() || v.mass.is_one()) ? Openness::kClosed
                                                   : Openness::kOpen;
  return v;
}

// Output values with positive prior mass, domain order. The openness
// quantifiers range over these: a zero-mass output conditions on nothing.
std::vector<ValueIndex> realizable_outputs_in(const WorldTable& table,
                                              VarIndex output) {
  const int n = table.model().variable(output).domain->size();
  std::vector<Rational> mass(n, Rational(0));
  for (const auto& [world, w] : table.worlds()) mass[world[output]] += w;
  std::vector<ValueIndex> out;
  for (int o = 0; o < n; ++o) {
    if (!mass[o].is_zero()) out.push_back(o);
  }
  return out;
}

std::optional<ValueIndex> forced_output_in(const WorldTable& table,
                                           VarIndex output) {
  const int n = table.model().variable(output).domain->size();
  std::vector<Rational> mass(n, Rational(0));
  Rational total(0);
  for (const auto& [world, w] : table.worlds()) {
    mass[world[output]] += w;
    total += w;
  }
  for (int o = 0; o < n; ++o) {
    if (mass[o] == total) return o;
  }
  return std::nullopt;
}

Proposition output_eq(const AnalysisFrame& f, ValueIndex o) {
  return Proposition::eq(f.pm.model.variable(f.output).id, f.output_domain().value(o));
}

Proposition output_ne(const AnalysisFrame& f, ValueIndex o) {
  return Proposition::ne(f.pm.model.variable(f.output).id, f.output_domain().value(o));
}

std::optional<ValueIndex> trivially_closing_output(const WorldTable& table,
                                                   const AnalysisFrame& f,
                                                   const Proposition& phi) {
  const OpennessVerdict before = classify_in_table(table, Proposition::truth(), phi);
  if (!before.open()) return std::nullopt;
  for (ValueIndex o : realizable_outputs_in(table, f.output)) {
    const OpennessVerdict given_o = classify_in_table(table, output_eq(f, o), phi);
    if (given_o.closed()) return o;
  }
  return std::nullopt;
}

}  // namespace

OpennessVerdict OpennessOracle::classify(const Proposition& context,
                                         const Proposition& phi) const {
  return classify_in_table(table_, context, phi);
}

std::vector<ValueIndex> OpennessOracle::realizable_outputs(VarIndex output) const {
  return realizable_outputs_in(table_, output);
}

std::optional<ValueIndex> OpennessOracle::forced_output(VarIndex output) const {
  return forced_output_in(table_, output);
}

OpennessVerdict classify_openness(const ProbCausalModel& pm,
                                  const Proposition& context,
                                  const Proposition& phi) {
  const WorldTable table(pm);
  return classify_in_table(table, context, phi);
}

bool is_informative(const AnalysisFrame& f) {
  const WorldTable table(f.pm);
  return !forced_output_in(table, f.output).has_value();
}

std::optional<std::string> trivially_closes(const AnalysisFrame& f,
                                            const Proposition& phi) {
  const WorldTable table(f.pm);
  if (auto o = trivially_closing_output(table, f, phi)) {
    return f.output_domain().value(*o);
  }
  return std::nullopt;
}

const char* case_name(ImpossibilityClassification::Case c) {
  switch (c) {
    case ImpossibilityClassification::Case::kPhiClosedForSe:
      return "PhiClosedForSE";
    case ImpossibilityClassification::Case::kUninformative:
      return "Uninformative";
    case ImpossibilityClassification::Case::kTriviallyCloses:
      return "TriviallyCloses";
    case ImpossibilityClassification::Case::kWitnessForEveryOutput:
      return "WitnessForEveryOutput";
  }
  return "?";
}

ImpossibilityClassification classify_impossibility(const AnalysisFrame& f,
                                                   const Proposition& phi) {
  const WorldTable table(f.pm);
  ImpossibilityClassification result;
  result.phi_for_se = classify_in_table(table, Proposition::truth(), phi);

  // The cases apply in the statement's order; the first hit wins even when a
  // later one would also hold.
  if (!result.phi_for_se.open()) {
    result.outcome = ImpossibilityClassification::Case::kPhiClosedForSe;
    if (auto forced = forced_output_in(table, f.output)) {
      result.notes = "system is also uninformative (output '" +
                     f.output_domain().value(*forced) + "' is certain)";
    }
    return result;
  }
  if (auto forced = forced_output_in(table, f.output)) {
    result.outcome = ImpossibilityClassification::Case::kUninformative;
    result.forcing_output = f.output_domain().value(*forced);
    return result;
  }
  if (auto o = trivially_closing_output(table, f, phi)) {
    result.outcome = ImpossibilityClassification::Case::kTriviallyCloses;
    result.forcing_output = f.output_domain().value(*o);
    return result;
  }

  result.outcome = ImpossibilityClassification::Case::kWitnessForEveryOutput;
  for (ValueIndex o : realizable_outputs_in(table, f.output)) {
    OutputOpennessPair pair;
    pair.output = f.output_domain().value(o);
    const Proposition guard = Proposition::disj(output_ne(f, o), phi);
    pair.before = classify_in_table(table, guard, phi);
    pair.after =
        classify_in_table(table, Proposition::conj(output_eq(f, o), guard), phi);
    // The witness case carries its own proof obligations; a failure here
    // would mean the classification itself is wrong.
    if (!pair.before.open() || !pair.after.closed()) {
      fail(Errc::kPreconditionViolated,
           "witness evidence failed verification at output '" + pair.output + "'");
    }
    result.per_output.push_back(std::move(pair));
  }
  return result;
}

std::optional<DisclosureWitness> disclosure_witness(const AnalysisFrame& f,
                                                    const Proposition& phi) {
  const auto classified = classify_impossibility(f, phi);
  using Case = ImpossibilityClassification::Case;
  if (classified.outcome == Case::kPhiClosedForSe ||
      classified.outcome == Case::kUninformative) {
    return std::nullopt;  // no disclosure forced
  }

  DisclosureWitness w;
  if (classified.outcome == Case::kTriviallyCloses) {
    // The adversary needs no auxiliary knowledge: one output settles phi.
    w.background = Proposition::truth();
    w.output = *classified.forcing_output;
  } else {
    const OutputOpennessPair& pair = classified.per_output.front();
    w.background = Proposition::disj(
        Proposition::ne(f.pm.model.variable(f.output).id, pair.output), phi);
    w.output = pair.output;
  }

  // Re-derive both verdicts; a witness never leaves unverified.
  w.before = classify_openness(f.pm, w.background, phi);
  const Proposition seen = Proposition::conj(
      w.background, Proposition::eq(f.pm.model.variable(f.output).id, w.output));
  w.after = classify_openness(f.pm, seen, phi);
  if (!w.before.open() || !w.after.closed()) {
    fail(Errc::kPreconditionViolated,
         "disclosure witness failed re-verification");
  }
  return w;
}

DiversityLossRecord diversity_report(const AnalysisFrame& f, const Proposition& phi,
                                     const std::string& output_value) {
  const auto o = f.output_domain().index_of(output_value);
  if (!o) {
    fail(Errc::kInvalidParameter,
         "'" + output_value + "' is not an output value");
  }
  const WorldTable table(f.pm);
  if (forced_output_in(table, f.output)) {
    fail(Errc::kPreconditionViolated, "system is uninformative");
  }
  const OpennessVerdict overall =
      classify_in_table(table, Proposition::truth(), phi);
  if (!overall.open()) {
    fail(Errc::kPreconditionViolated,
         "the population lacks all diversity for the attribute");
  }
  if (auto closing = trivially_closing_output(table, f, phi)) {
    fail(Errc::kPreconditionViolated,
         "the system trivially removes diversity (output '" +
             f.output_domain().value(*closing) + "')");
  }

  DiversityLossRecord record;
  record.output = output_value;
  record.subpopulation = Proposition::disj(output_ne(f, *o), phi);

  const CompiledProp sub(record.subpopulation, table.model());
  record.subpopulation_mass = table.mass_where(sub);
  record.diversity_before = classify_in_table(table, record.subpopulation, phi);
  record.diversity_after = classify_in_table(
      table, Proposition::conj(output_eq(f, *o), record.subpopulation), phi);
  if (!record.diversity_before.open() || !record.diversity_after.closed()) {
    fail(Errc::kPreconditionViolated,
         "diversity-loss record failed re-verification (is the output realizable?)");
  }
  return record;
}

}  // namespace caudit
