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

#include "caudit/report.hpp"

#include <sstream>

namespace caudit {

namespace {

std::string openness_name(Openness s) {
  switch (s) {
    case Openness::kOpen: return "open";
    case Openness::kClosed: return "closed";
    case Openness::kInconsistent: return "inconsistent";
  }
  return "?";
}

}  // namespace

nlohmann::json to_json(const ProbeQuery& q) {
  nlohmann::json doc;
  nlohmann::json does = nlohmann::json::object();
  for (const auto& [var, value] : q.do_assignments) does[var] = value;
  doc["do"] = does;
  doc["given"] = q.given.str();
  doc["event"] = q.event.str();
  doc["prob"] = q.prob.frac_str();
  return doc;
}

nlohmann::json to_json(const RatioWitness& w) {
  nlohmann::json doc;
  doc["lhs"] = to_json(w.lhs);
  doc["rhs"] = to_json(w.rhs);
  doc["bound"] = w.bound ? nlohmann::json(w.bound->frac_str()) : nlohmann::json();
  return doc;
}

nlohmann::json to_json(const PropertyReport& r) {
  nlohmann::json doc;
  doc["name"] = r.property;
  doc["verdict"] = r.holds ? "holds" : "fails";
  doc["tightest_ratio"] = r.tightest.str();
  doc["epsilon_display"] = r.tightest.epsilon_str();
  doc["bound"] = r.bound ? nlohmann::json(r.bound->frac_str()) : nlohmann::json();
  doc["witness"] = r.witness ? to_json(*r.witness) : nlohmann::json();
  doc["notes"] = r.notes;
  return doc;
}

nlohmann::json to_json(const OpennessVerdict& v) {
  nlohmann::json doc;
  doc["status"] = openness_name(v.status);
  if (v.status != Openness::kInconsistent) doc["mass"] = v.mass.frac_str();
  return doc;
}

nlohmann::json to_json(const ImpossibilityClassification& c) {
  nlohmann::json doc;
  doc["case"] = case_name(c.outcome);
  doc["phi_for_se"] = to_json(c.phi_for_se);
  if (c.forcing_output) doc["output"] = *c.forcing_output;
  if (!c.per_output.empty()) {
    nlohmann::json outputs = nlohmann::json::array();
    for (const OutputOpennessPair& pair : c.per_output) {
      nlohmann::json entry;
      entry["output"] = pair.output;
      entry["before"] = to_json(pair.before);
      entry["after"] = to_json(pair.after);
      outputs.push_back(std::move(entry));
    }
    doc["per_output"] = std::move(outputs);
  }
  if (!c.notes.empty()) doc["notes"] = c.notes;
  return doc;
}

nlohmann::json to_json(const DisclosureWitness& w) {
  nlohmann::json doc;
  doc["background"] = w.background.str();
  doc["output"] = w.output;
  doc["before"] = to_json(w.before);
  doc["after"] = to_json(w.after);
  return doc;
}

nlohmann::json to_json(const DiversityLossRecord& r) {
  nlohmann::json doc;
  doc["subpopulation"] = r.subpopulation.str();
  doc["output"] = r.output;
  doc["subpopulation_mass"] = r.subpopulation_mass.frac_str();
  doc["diversity_before"] = to_json(r.diversity_before);
  doc["diversity_after"] = to_json(r.diversity_after);
  return doc;
}

nlohmann::json to_json(const CampaignReport& r) {
  nlohmann::json doc;
  doc["frames"] = r.frames;
  doc["generator"] = r.generator;
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [id, c] : r.counts) {
    nlohmann::json entry;
    entry["checked"] = c.checked;
    entry["holds"] = c.holds;
    entry["skipped"] = c.skipped;
    entry["violated"] = c.violated;
    counts[theorem_name(id)] = std::move(entry);
  }
  doc["counts"] = std::move(counts);
  nlohmann::json violations = nlohmann::json::array();
  for (const CampaignViolation& v : r.violations) {
    nlohmann::json entry;
    entry["seed"] = v.seed;
    entry["theorem"] = theorem_name(v.id);
    entry["witness"] = v.witness;
    violations.push_back(std::move(entry));
  }
  doc["violations"] = std::move(violations);
  auto finding = [](const std::optional<CampaignFinding>& f) {
    if (!f) return nlohmann::json();
    nlohmann::json entry;
    entry["seed"] = f->seed;
    entry["description"] = f->description;
    return entry;
  };
  doc["correlated_gap"] = finding(r.correlated_gap);
  doc["nonfresh_gap"] = finding(r.nonfresh_gap);
  doc["strict_dilution"] = finding(r.strict_dilution);
  doc["nonfresh_indep_survived"] = r.nonfresh_indep_survived;
  doc["nonfresh_indep_failed"] = r.nonfresh_indep_failed;
  return doc;
}

std::string report_text(const PropertyReport& r) {
  std::ostringstream out;
  out << r.property << ": " << (r.holds ? "holds" : "FAILS");
  if (r.bound) out << " at bound " << r.bound->frac_str();
  out << "\n  tightest ratio: " << r.tightest.str();
  if (r.tightest.is_infinite()) {
    out << " (no finite bound)";
  } else {
    out << " (eps = " << r.tightest.epsilon_str() << ")";
  }
  out << "\n";
  if (r.witness) {
    out << "  witness: " << r.witness->str() << "\n";
  }
  if (!r.notes.empty()) out << "  notes: " << r.notes << "\n";
  return out.str();
}

std::string classification_text(const ImpossibilityClassification& c) {
  std::ostringstream out;
  out << "classification: " << case_name(c.outcome) << "\n";
  out << "  phi for the plain model: " << openness_name(c.phi_for_se.status);
  if (c.phi_for_se.status != Openness::kInconsistent) {
    out << " (mass " << c.phi_for_se.mass.frac_str() << ")";
  }
  out << "\n";
  if (c.forcing_output) out << "  output: " << *c.forcing_output << "\n";
  for (const OutputOpennessPair& pair : c.per_output) {
    out << "  output " << pair.output << ": before "
        << openness_name(pair.before.status) << " (mass "
        << pair.before.mass.frac_str() << "), after "
        << openness_name(pair.after.status) << " (mass " << pair.after.mass.frac_str()
        << ")\n";
  }
  if (!c.notes.empty()) out << "  notes: " << c.notes << "\n";
  return out.str();
}

}  // namespace caudit
