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

#include "regge/octahedra.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "regge/error.hpp"
#include "regge/klein_oracle.hpp"
#include "regge/lobachevsky.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace regge {
namespace {

constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;

double ModPi(double x) { return std::abs(std::remainder(x, kPi)); }
double Mod2Pi(double x) { return std::abs(std::remainder(x, 2.0 * kPi)); }

TEST(BaseAngles, Equiangular) {
  const double th = 1.2;
  const BaseAngles b = base_angles(TetAngles::equiangular(th));
  EXPECT_NEAR(b.a, (kPi + th) / 2, 1e-15);
  EXPECT_NEAR(b.b, (kPi + th) / 2, 1e-15);
  EXPECT_NEAR(b.c, (kPi - 3 * th) / 2, 1e-15);
  EXPECT_NEAR(b.d, (kPi + th) / 2, 1e-15);
  EXPECT_NEAR(b.e, (kPi - 3 * th) / 2, 1e-15);
  EXPECT_NEAR(b.f, (kPi + th) / 2, 1e-15);
  EXPECT_NEAR(b.g, (kPi + th) / 2, 1e-15);
  EXPECT_NEAR(b.h, (kPi + th) / 2, 1e-15);
}

TEST(BaseAngles, MixedExample) {
  const BaseAngles b =
      base_angles({kPi / 2, kPi / 3, kPi / 4, kPi / 2, kPi / 3, kPi / 4});
  EXPECT_NEAR(b.a, (kPi - kPi / 4 + kPi / 2 + kPi / 3) / 2, 1e-15);
}

TEST(BarSolution, Examples) {
  const double th = 1.1;
  const BarSolution e = bar_solution(TetAngles::equiangular(th));
  EXPECT_NEAR(e[Slot::kAB], th, 1e-15);
  EXPECT_NEAR(e[Slot::kBC], 0.0, 1e-15);
  EXPECT_NEAR(e[Slot::kCD], -th, 1e-15);
  EXPECT_NEAR(e[Slot::kDA], 0.0, 1e-15);
  EXPECT_NEAR(bar_solution({0.9, 0.8, 0.7, 1.0, 1.1, 1.2})[Slot::kAB], 1.025, 1e-15);
}

TEST(BarSolution, GroupSums) {
  testing::Gen gen(9);
  for (int i = 0; i < 100; ++i) {
    const BarSolution s = bar_solution(gen.angles(0.1, 3.0));
    const double even = s.slots[0] + s.slots[2] + s.slots[4] + s.slots[6];
    const double odd = s.slots[1] + s.slots[3] + s.slots[5] + s.slots[7];
    EXPECT_NEAR(even, 0.0, 1e-12);
    EXPECT_NEAR(odd, 2 * kPi, 1e-12);
  }
}

TEST(BarSolution, SatisfiesLinearConstraints) {
  testing::ForAllFinite(50, 1, [](const TetAngles& t) {
    for (double r : linear_constraint_residuals(bar_solution(t).slots, base_angles(t))) {
      EXPECT_NEAR(r, 0.0, 1e-12);
    }
  });
}

// The expanded polynomial as printed, coefficient by coefficient.
std::array<cd, 5> PrintedCoefficients(const SlotAngles& seed) {
  std::array<cd, 4> al, be;
  for (int k = 0; k < 4; ++k) {
    al[k] = std::polar(1.0, seed[2 * k]);
    be[k] = std::polar(1.0, seed[2 * k + 1]);
  }
  const cd pa = al[0] * al[1] * al[2] * al[3];
  const cd pb = be[0] * be[1] * be[2] * be[3];
  std::array<cd, 5> c{};
  c[0] = 1.0 / pa - pb;
  for (int k = 0; k < 4; ++k) {
    c[1] += -al[k] * al[k] / pa + pb / (be[k] * be[k]);
    c[3] += be[k] * be[k] / pb - pa / (al[k] * al[k]);
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      c[2] += al[i] * al[i] * al[j] * al[j] / pa - be[i] * be[i] * be[j] * be[j] / pb;
    }
  }
  c[4] = pa - 1.0 / pb;
  return c;
}

TEST(Holonomy, ExpansionMatchesPrintedCoefficients) {
  testing::ForAllFinite(40, 2, [](const TetAngles& t) {
    const SlotAngles seed = bar_solution(t).slots;
    const HolonomyQuadratic q = holonomy_quadratic(seed);
    const auto printed = PrintedCoefficients(seed);
    for (int k = 0; k < 5; ++k) {
      EXPECT_NEAR(std::abs(q.coeffs[k] - printed[k]), 0.0, 1e-12) << "z^" << 2 * k;
    }
    EXPECT_LT(std::abs(q.coeffs[0]), 1e-12);
    EXPECT_LT(std::abs(q.coeffs[4]), 1e-12);
  });
}

TEST(Holonomy, RootsOnUnitCircleAndProductIsOne) {
  testing::ForAllFinite(100, 3, [](const TetAngles& t) {
    const OctahedralSolution s = solve_octahedra(t);
    EXPECT_LT(s.roots.projection_distance, 1e-9);
    EXPECT_NEAR(std::abs(s.roots.z_minus), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(s.roots.z_plus), 1.0, 1e-12);
    EXPECT_NEAR(holonomy_product(s.o.angles), 1.0, 1e-10);
    for (double r : linear_constraint_residuals(s.o.angles, s.base)) {
      EXPECT_NEAR(r, 0.0, 1e-10);
    }
  });
}

TEST(Holonomy, ShiftedSeedGivesSameOctahedron) {
  testing::Gen gen(77);
  testing::ForAllFinite(40, 4, [&](const TetAngles& t) {
    const OctahedralSolution s = solve_octahedra(t);
    BarSolution shifted = s.bars;
    const double delta = gen.real(-3.0, 3.0);
    for (int k = 0; k < 8; ++k) shifted.slots[k] += (k % 2 == 0) ? delta : -delta;
    const HolonomyRoots r = solve_holonomy(t, shifted.slots);
    const OctAngles o = octahedron_angles(shifted, r, Octahedron::kO);
    for (int k = 0; k < 8; ++k) EXPECT_LT(ModPi(o.angles[k] - s.o.angles[k]), 1e-10);
    EXPECT_NEAR(r.volume_minus, s.volume, 1e-10);
  });
}

TEST(Holonomy, InvalidInputThrowsHyperidealIsFlagged) {
  EXPECT_THROW(solve_holonomy(TetAngles::equiangular(1.25)), DomainError);
  EXPECT_TRUE(solve_holonomy(TetAngles::equiangular(1.0)).hyperideal_input);
  EXPECT_FALSE(solve_holonomy(TetAngles::equiangular(1.2)).hyperideal_input);
}

TEST(Octahedra, DualIsSupplementary) {
  testing::ForAllFinite(50, 5, [](const TetAngles& t) {
    const OctahedralSolution s = solve_octahedra(t);
    const auto o = octahedron_dihedral_angles(s.o, s.base);
    const auto d = octahedron_dihedral_angles(s.o_dual, dual_base_angles(s.base));
    for (int k = 0; k < 12; ++k) EXPECT_LT(Mod2Pi(o[k] + d[k] - kPi), 1e-9) << k;
  });
}

TEST(Octahedra, VolumeIsFourIdealTetrahedra) {
  testing::ForAllFinite(30, 6, [](const TetAngles& t) {
    const OctahedralSolution s = solve_octahedra(t);
    const auto& a = s.o.angles;
    const double four = ideal_volume({a[0], a[1], s.base.e}) +
                        ideal_volume({a[2], a[3], s.base.f}) +
                        ideal_volume({a[4], a[5], s.base.g}) +
                        ideal_volume({a[6], a[7], s.base.h});
    EXPECT_NEAR(octahedron_volume(s.o, s.base), four, 1e-12);
  });
}

TEST(Octahedra, HalfSumIsTetrahedron) {
  testing::ForAllFinite(50, 7, [](const TetAngles& t) {
    const OctahedralSolution s = solve_octahedra(t);
    const double vo = octahedron_volume(s.o, s.base);
    const double vd = octahedron_volume(s.o_dual, dual_base_angles(s.base));
    EXPECT_NEAR((vo + vd) / 2, s.volume, 1e-9);
    EXPECT_NEAR(octahedron_volume_at(s.bars, s.base, s.roots.Z_minus), vo, 1e-12);
    EXPECT_NEAR(octahedron_volume_at(s.bars, s.base, s.roots.Z_plus), -vd, 1e-9);
  });
}

TEST(Volume, RoutesAgree) {
  testing::ForAllFinite(100, 8, [](const TetAngles& t) {
    const double v = tet_volume(t);
    EXPECT_GT(v, 0.0);
    EXPECT_NEAR(doubled_volume_sum(t), 2 * v, 1e-10);
    EXPECT_NEAR(tet_volume_via_octahedra(t), v, 1e-9);
    EXPECT_NEAR(tet_volume_via_u(t), v, 1e-9);
    EXPECT_NEAR(tet_volume(t, Root::kPlus), -v, 1e-9);
  });
}

TEST(Volume, EquiangularOrdering) {
  const TetAngles t = TetAngles::equiangular(1.2);
  EXPECT_GT(u_volume(t), tet_volume(t));
  EXPECT_GT(tet_volume(t), 0.0);
}

TEST(Volume, GrowsTowardRegularIdeal) {
  double previous = 0.0;
  for (double th = 1.23; th > kPi / 3 + 1e-4; th -= 0.01) {
    const double v = tet_volume(TetAngles::equiangular(th));
    EXPECT_GT(v, previous) << th;
    previous = v;
  }
  EXPECT_NEAR(tet_volume(TetAngles::equiangular(kPi / 3 + 1e-7)), 1.0149416, 1e-5);
  EXPECT_LT(previous, 1.0149417);
}

TEST(Volume, MatchesTensorQuadratureOracle) {
  const TetAngles t = TetAngles::equiangular(1.2);
  EXPECT_NEAR(tet_volume(t), testing::KleinVolumeTensor(klein_vertices(t).vertices),
              1e-5);
  testing::ForAllFinite(10, 9, [](const TetAngles& x) {
    EXPECT_NEAR(tet_volume(x),
                testing::KleinVolumeTensor(klein_vertices(x).vertices, 30), 1e-7);
  });
}

TEST(Volume, NormalizeAngle) {
  EXPECT_NEAR(normalize_angle(3 * kPi), kPi, 1e-15);
  EXPECT_NEAR(normalize_angle(-kPi), kPi, 1e-15);
  EXPECT_NEAR(normalize_angle(0.5 - 4 * kPi), 0.5, 1e-14);
}

}  // namespace
}  // namespace regge
