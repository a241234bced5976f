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

#include "regge/klein_oracle.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "regge/error.hpp"
#include "regge/octahedra.hpp"
#include "regge/scissors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace regge {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Klein, RoundTripAndGauge) {
  testing::ForAllFinite(40, 1, [](const TetAngles& t) {
    const KleinTetra kt = klein_vertices(t);
    EXPECT_LT(max_angle_difference(dihedral_angles(kt), t), 1e-8);
    EXPECT_LT(max_angle_difference(testing::DihedralsFromKlein(kt.vertices), t), 1e-8);
    for (const auto& v : kt.vertices) EXPECT_LT(v.norm(), 1.0);
    EXPECT_EQ(kt.vertices[0].norm(), 0.0);
    EXPECT_GT(kt.vertices[1].x(), 0.0);
    EXPECT_EQ(kt.vertices[1].y(), 0.0);
    EXPECT_GT(kt.vertices[2].y(), 0.0);
    EXPECT_EQ(kt.vertices[2].z(), 0.0);
    EXPECT_GT(kt.vertices[3].z(), 0.0);
  });
}

TEST(Klein, RegularWhenCentered) {
  const KleinTetra c = centered(klein_vertices(TetAngles::equiangular(1.2)));
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(c.vertices[i].norm(), c.vertices[0].norm(), 1e-12);
    for (int j = i + 1; j < 4; ++j) {
      EXPECT_NEAR(hyperbolic_distance(c.vertices[i], c.vertices[j]),
                  hyperbolic_distance(c.vertices[0], c.vertices[1]), 1e-12);
    }
  }
  const Eigen::Vector3d sum =
      c.vertices[0] + c.vertices[1] + c.vertices[2] + c.vertices[3];
  EXPECT_LT(sum.norm(), 1e-12);
}

TEST(Klein, NonFiniteRejected) {
  EXPECT_THROW(klein_vertices(TetAngles::equiangular(kPi / 3)), DomainError);
  EXPECT_THROW(klein_vertices(TetAngles::equiangular(1.0)), DomainError);
}

TEST(Klein, DistanceMatchesOracle) {
  const Eigen::Vector3d p(0.1, -0.3, 0.2), q(-0.5, 0.1, 0.4);
  EXPECT_NEAR(hyperbolic_distance(p, q), testing::KleinDistance(p, q), 1e-14);
  EXPECT_EQ(hyperbolic_distance(p, p), 0.0);
}

TEST(Klein, IsometryPreservesAngles) {
  const KleinTetra kt = klein_vertices({1.1, 1.2, 1.3, 1.15, 1.25, 1.05});
  const KleinTetra moved =
      apply_isometry(kt, lorentz_boost(Eigen::Vector3d(0.3, -1.0, 0.5), 0.8));
  EXPECT_LT(max_angle_difference(dihedral_angles(moved), kt.source), 1e-9);
}

TEST(VolumeNumeric, EquiangularMatchesFormula) {
  const TetAngles t = TetAngles::equiangular(1.2);
  EXPECT_NEAR(volume_numeric(klein_vertices(t), 1e-6), tet_volume(t), 1e-5);
}

TEST(VolumeNumeric, RandomMatchesFormula) {
  testing::ForAllFinite(25, 2, [](const TetAngles& t) {
    EXPECT_NEAR(volume_numeric(klein_vertices(t), 1e-6), tet_volume(t), 1e-5);
  });
}

TEST(VolumeNumeric, InvariantUnderIsometry) {
  const KleinTetra kt = klein_vertices({1.1, 1.2, 1.3, 1.15, 1.25, 1.05});
  const double v = volume_numeric(kt, 1e-7);
  for (double rapidity : {0.3, 1.0, 1.7}) {
    const KleinTetra moved =
        apply_isometry(kt, lorentz_boost(Eigen::Vector3d(1.0, 2.0, -0.5), rapidity));
    EXPECT_NEAR(volume_numeric(moved, 1e-7), v, 1e-6) << rapidity;
  }
  EXPECT_NEAR(volume_numeric(centered(kt), 1e-7), v, 1e-6);
}

TEST(VolumeNumeric, TinyTetrahedronIsEuclidean) {
  KleinTetra kt;
  const double s = 1e-3;
  kt.vertices = {Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(s, 0, 0),
                 Eigen::Vector3d(0, s, 0), Eigen::Vector3d(0, 0, s)};
  const double euclid = s * s * s / 6;
  EXPECT_NEAR(volume_numeric(kt, 1e-16) / euclid, 1.0, 1e-5);
}

TEST(VolumeNumeric, ReggeInvarianceFromQuadratureAlone) {
  testing::ForAllFinite(10, 3, [](const TetAngles& t) {
    const double v = volume_numeric(klein_vertices(t), 1e-6);
    const double w = volume_numeric(klein_vertices(regge::regge(t, ReggeAxis::kB)), 1e-6);
    EXPECT_LT(std::abs(v - w), 2e-5);
  }, true);
}

TEST(VolumeNumeric, Errors) {
  const KleinTetra kt = klein_vertices(TetAngles::equiangular(1.2));
  EXPECT_THROW(volume_numeric(kt, 0.0), DomainError);
  try {
    volume_numeric_detail(kt, 1e-14, 3);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_GT(e.achieved_error(), 1e-14);
  }
  KleinTetra outside = kt;
  outside.vertices[3] = Eigen::Vector3d(0.0, 0.0, 1.5);
  EXPECT_THROW(volume_numeric(outside, 1e-6), DomainError);
}

TEST(Cubature, ExactForDegreeSeven) {
  const Simplex3 unit = {Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(1, 0, 0),
                         Eigen::Vector3d(0, 1, 0), Eigen::Vector3d(0, 0, 1)};
  for (int a = 0; a <= 7; ++a) {
    for (int b = 0; a + b <= 7; ++b) {
      for (int c = 0; a + b + c <= 7; ++c) {
        const auto f = [&](const Eigen::Vector3d& x) {
          return std::pow(x(0), a) * std::pow(x(1), b) * std::pow(x(2), c);
        };
        const CubatureResult r = integrate_simplex(f, unit, {1.0, 10});
        EXPECT_NEAR(r.value, testing::SimplexMonomial(a, b, c), 1e-15)
            << a << b << c;
        EXPECT_EQ(r.regions, 1);
      }
    }
  }
  EXPECT_NEAR(simplex_volume(unit), 1.0 / 6, 1e-16);
}

TEST(Cubature, AdaptsToSmoothNonPolynomial) {
  const Simplex3 s = {Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(2, 0, 0),
                      Eigen::Vector3d(0, 1, 0), Eigen::Vector3d(0, 0, 3)};
  const auto f = [](const Eigen::Vector3d& x) { return std::exp(x(0) + x(1) + x(2)); };
  const CubatureResult r = integrate_simplex(f, s, {1e-10, 100000});
  EXPECT_NEAR(r.value, [&] {
    // Tensor Gauss on the collapsed cube, independent of the rule above.
    const auto rule = testing::GaussLegendre01(30);
    double sum = 0.0;
    for (const auto& [u, wu] : rule)
      for (const auto& [v, wv] : rule)
        for (const auto& [w, ww] : rule) {
          const Eigen::Vector3d x = s[0] + u * (s[1] - s[0]) + u * v * (s[2] - s[1]) +
                                    u * v * w * (s[3] - s[2]);
          sum += wu * wv * ww * u * u * v * f(x);
        }
    return 6.0 * simplex_volume(s) * sum;
  }(), 1e-9);
  EXPECT_LE(r.error, 1e-10);
  EXPECT_GT(r.regions, 1);
}

TEST(Schlafli, EquiangularResidualsEqual) {
  const SchlafliResult r = schlafli_residual(TetAngles::equiangular(1.2), 1e-5);
  for (int k = 0; k < 6; ++k) {
    EXPECT_NEAR(r.residual[k], r.residual[0], 1e-9);
    EXPECT_NEAR(r.derivative[k], -r.half_length[k], 1e-6);
  }
}

TEST(Schlafli, RandomBelowThreshold) {
  testing::ForAllFinite(25, 4, [](const TetAngles& t) {
    EXPECT_LT(schlafli_residual(t, 1e-5).max_relative(), 1e-3);
  });
}

TEST(Schlafli, ResidualScalesWithStepSquared) {
  // Near-ideal vertex: truncation error dominates rounding at these steps.
  const TetAngles t{1.0314381146821907, 1.089188940440255, 1.0212816924660846,
                    1.1860917604554433, 1.4015504354735737, 1.1837426288804063};
  const double coarse = schlafli_residual(t, 1e-3).max_relative();
  const double fine = schlafli_residual(t, 5e-4).max_relative();
  EXPECT_NEAR(coarse / fine, 4.0, 0.2);
}

TEST(Schlafli, Errors) {
  EXPECT_THROW(schlafli_residual(TetAngles::equiangular(1.2), 1e-2), DomainError);
  EXPECT_THROW(schlafli_residual(TetAngles::equiangular(1.2), 1e-8), DomainError);
  EXPECT_THROW(schlafli_residual(TetAngles::equiangular(1.0), 1e-5), DomainError);
  // 1e-3 leaves the Finite class this close to the ideal boundary; 1e-4 does not.
  const double edge = kPi / 3.0;
  const SchlafliResult r = schlafli_residual(TetAngles::equiangular(edge + 2e-4), 1e-3);
  EXPECT_NEAR(r.h, 1e-4, 1e-18);
  EXPECT_THROW(schlafli_residual(TetAngles::equiangular(edge + 2e-5), 1e-3),
               DomainError);
}

}  // namespace
}  // namespace regge
