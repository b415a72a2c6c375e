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

#ifndef CAUDIT_REPORT_HPP_
#define CAUDIT_REPORT_HPP_

#include <string>

#include <json.hpp>

#include "caudit/checkers.hpp"
#include "caudit/impossibility.hpp"
#include "caudit/theorems.hpp"

namespace caudit {

// Structured report documents. Ratios always travel as exact "p/q" strings;
// the epsilon field is derived display only and never drives a verdict.

nlohmann::json to_json(const ProbeQuery& q);
nlohmann::json to_json(const RatioWitness& w);
nlohmann::json to_json(const PropertyReport& r);
nlohmann::json to_json(const OpennessVerdict& v);
nlohmann::json to_json(const ImpossibilityClassification& c);
nlohmann::json to_json(const DisclosureWitness& w);
nlohmann::json to_json(const DiversityLossRecord& r);
nlohmann::json to_json(const CampaignReport& r);

std::string report_text(const PropertyReport& r);
std::string classification_text(const ImpossibilityClassification& c);

}  // namespace caudit

#endif  // CAUDIT_REPORT_HPP_
