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

#ifndef CAUDIT_ERROR_HPP_
#define CAUDIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace caudit {

// Every failure mode the library reports. Checks that merely *fail* (a
// property does not hold) are not errors; they come back as reports.
enum class Errc {
  kCycleDetected,
  kMissingEquation,
  kNonTotalTable,
  kDomainMismatch,
  kInterventionOnBackground,
  kIncompleteBackground,
  kInconsistentContext,
  kUnknownVariable,
  kRandomnessNotFresh,
  kDegenerateSensitive,
  kInvalidMetric,
  kInvalidParameter,
  kInvalidPrior,
  kInvalidConfig,
  kPreconditionViolated,
  kParseError,
  kLimitExceeded,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace caudit

#endif  // CAUDIT_ERROR_HPP_
