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

#include "regge/sampling.hpp"

#include "regge/error.hpp"
#include "regge/scissors.hpp"

namespace regge {
namespace {

bool IsFinite(const TetAngles& t) {
  return classify(t).kind == TetraClass::Kind::kFinite;
}

}  // namespace

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

FiniteSampler::FiniteSampler(const SamplerConfig& config)
    : config_(config), rng_(config.seed) {
  if (!(config.lo > 0.0 && config.lo < config.hi)) {
    throw DomainError("FiniteSampler: invalid angle box");
  }
}

TetAngles FiniteSampler::next() {
  for (long tries = 0; tries < config_.max_draws; ++tries) {
    std::array<double, 6> a{};
    for (double& x : a) x = uniform(rng_, config_.lo, config_.hi);
    ++draws_;
    const TetAngles t = TetAngles::from_array(a);
    if (!IsFinite(t)) continue;
    if (config_.require_finite_images &&
        !(IsFinite(regge(t, ReggeAxis::kA)) &&
          IsFinite(regge(t, ReggeAxis::kB)) &&
          IsFinite(regge(t, ReggeAxis::kC)))) {
      continue;
    }
    ++accepted_;
    return t;
  }
  throw NumericalError("FiniteSampler: no Finite tetrahedron accepted",
                       acceptance_rate());
}

double FiniteSampler::acceptance_rate() const {
  return draws_ == 0 ? 0.0 : static_cast<double>(accepted_) / draws_;
}

}  // namespace regge
