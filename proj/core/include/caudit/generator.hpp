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

#ifndef CAUDIT_GENERATOR_HPP_
#define CAUDIT_GENERATOR_HPP_

#include <cstdint>
#include <utility>

#include "caudit/frames.hpp"

namespace caudit {

// splitmix64 with the published constants; fixed here so campaigns replay
// bit-identically anywhere. Bounded draws use plain modulo, which is part of
// the documented algorithm (the bias is irrelevant for test generation).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t n) { return next() % n; }

  int in_range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  uint64_t state_;
};

// Knobs for random frame generation. The same config and seed always
// regenerate the identical frame.
struct GenConfig {
  uint64_t seed = 0;
  std::pair<int, int> domain_size_range{2, 4};  // sensitive/other/output sizes
  std::pair<int, int> num_other_inputs{0, 2};
  bool correlate_x_a = false;  // false: the sensitive attribute is drawn
                               // independently of the others, exactly
  bool randomized = false;     // add a randomness variable feeding the output
  bool fresh_r = true;         // draw the randomness independently
  int max_denominator = 12;    // every drawn probability is i/n with n <= this
};

// Builds a random valid frame per the config. About a quarter of generated
// output tables ignore the sensitive input outright so noninterference
// hypotheses fire regularly. Throws InvalidConfig on bad ranges.
AnalysisFrame generate_frame(const GenConfig& cfg);

}  // namespace caudit

#endif  // CAUDIT_GENERATOR_HPP_
