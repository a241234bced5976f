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

#ifndef REGGE_TESTS_ORACLES_HPP_
#define REGGE_TESTS_ORACLES_HPP_

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "regge/tetrahedron.hpp"

// Reference computations that share no code with the library.
namespace regge::testing {

// 1/2 sum_{n<=terms} sin(2 n theta) / n^2.
double FourierLobachevsky(double theta, int terms = 2000000);

// Gauss-Legendre rule on [0, 1].
std::vector<std::pair<double, double>> GaussLegendre01(int n);

// Dihedral angles of the Klein-model tetrahedron, from face normals built
// with the 4D cross product.
TetAngles DihedralsFromKlein(const std::array<Eigen::Vector3d, 4>& v);

double KleinDistance(const Eigen::Vector3d& p, const Eigen::Vector3d& q);

// Hyperbolic volume of the Klein tetrahedron by a collapsed tensor
// Gauss-Legendre rule with n points per direction.
double KleinVolumeTensor(const std::array<Eigen::Vector3d, 4>& v, int n = 24);

// Volume of the tetrahedron with one finite vertex (link angles A, B, C) and
// three ideal vertices, by integrating over the ideal face.
double ThreeQuarterIdealVolumeOracle(double A, double B, double C);

// Integral of x^a y^b z^c over the unit simplex.
double SimplexMonomial(int a, int b, int c);

}  // namespace regge::testing

#endif  // REGGE_TESTS_ORACLES_HPP_
