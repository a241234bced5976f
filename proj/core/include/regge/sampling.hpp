// Copyright 2026 The regge-scissors Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REGGE_SAMPLING_HPP_
#define REGGE_SAMPLING_HPP_

#include <cstdint>
#include <random>

#include "regge/tetrahedron.hpp"

namespace regge {

// Uniform double in [0, 1) from the top 53 bits; identical on every
// platform, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng);
double uniform(std::mt19937_64& rng, double lo, double hi);

struct SamplerConfig {
  double lo = 1.0;  // box for each of the six angles, radians
  double hi = 1.45;
  std::uint64_t seed = 7;
  bool require_finite_images = false;  // R_a, R_b, R_c images Finite too
  long max_draws = 1000000;
};

/// Rejection sampler for Finite tetrahedra: six angles drawn independently
/// from the box, kept when classify() says Finite.
class FiniteSampler {
 public:
  explicit FiniteSampler(const SamplerConfig& config);

  // Throws NumericalError after max_draws draws without acceptance.
  TetAngles next();

  long draws() const { return draws_; }
  long accepted() const { return accepted_; }
  double acceptance_rate() const;

 private:
  SamplerConfig config_;
  std::mt19937_64 rng_;
  long draws_ = 0;
  long accepted_ = 0;
};

}  // namespace regge

#endif  // REGGE_SAMPLING_HPP_
