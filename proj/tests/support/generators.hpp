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

#ifndef REGGE_TESTS_GENERATORS_HPP_
#define REGGE_TESTS_GENERATORS_HPP_

#include <cstdint>
#include <functional>
#include <string>

#include <gtest/gtest.h>

#include "regge/tetrahedron.hpp"

namespace regge::testing {

// xorshift64*; deliberately not the library's mt19937_64 sampler.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed * 2654435761u + 1) {}

  std::uint64_t bits() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }
  double unit() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }
  double real(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int integer(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(bits() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  TetAngles angles(double lo, double hi) {
    return {real(lo, hi), real(lo, hi), real(lo, hi),
            real(lo, hi), real(lo, hi), real(lo, hi)};
  }

  TetAngles finite() {
    for (;;) {
      const TetAngles t = angles(1.0, 1.45);
      if (classify(t).kind == TetraClass::Kind::kFinite) return t;
    }
  }

 private:
  std::uint64_t state_;
};

std::string Describe(const TetAngles& t);

// Runs `property` on `cases` generated inputs; a failing case is reported
// with its index and input.
void ForAllFinite(int cases, std::uint64_t seed,
                  const std::function<void(const TetAngles&)>& property,
                  bool finite_images = false);

}  // namespace regge::testing

#endif  // REGGE_TESTS_GENERATORS_HPP_
