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

#ifndef REGGE_KLEIN_ORACLE_HPP_
#define REGGE_KLEIN_ORACLE_HPP_

#include <array>

#include <Eigen/Core>

#include "regge/simplex_cubature.hpp"
#include "regge/tetrahedron.hpp"

namespace regge {

// A Finite tetrahedron realized in the Klein ball.
struct KleinTetra {
  std::array<Eigen::Vector3d, 4> vertices;  // vertex k opposite face k
  TetAngles source;
};

/// Coordinates from the Gram matrix. G = Q diag(lambda) Q^T is split into
/// three spacelike and one timelike direction to give face normals in
/// R^{3,1}; vertex k is the future unit timelike vector orthogonal to the
/// three faces through it.
///
/// Gauge: vertex 0 at the origin, vertex 1 on +x, vertex 2 in the upper
/// xy-half-plane, vertex 3 above the xy-plane.
///
/// Throws DomainError unless classify(t) is Finite, NumericalError if the
/// realized angles miss t by more than 1e-8.
KleinTetra klein_vertices(const TetAngles& t);

// Unit timelike lift of a Klein point, time coordinate last.
Eigen::Vector4d hyperboloid_point(const Eigen::Vector3d& x);

// Dihedral angles recomputed from the vertices.
TetAngles dihedral_angles(const KleinTetra& kt);

double hyperbolic_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& q);

// Lorentz boost of the given rapidity along a unit spatial direction.
Eigen::Matrix4d lorentz_boost(const Eigen::Vector3d& direction,
                              double rapidity);

// Image of kt under an orthochronous Lorentz transformation.
KleinTetra apply_isometry(const KleinTetra& kt, const Eigen::Matrix4d& L);

// Moves the hyperbolic barycenter of the vertices to the origin.
KleinTetra centered(const KleinTetra& kt);

/// Integral of dx dy dz / (1 - |x|^2)^2 over the Euclidean tetrahedron
/// spanned by the vertices. Throws DomainError for tol <= 0 or a vertex
/// outside the ball, NumericalError when the cubature runs out of regions.
CubatureResult volume_numeric_detail(const KleinTetra& kt, double tol,
                                     int max_regions = 200000);
double volume_numeric(const KleinTetra& kt, double tol);

struct SchlafliResult {
  double h = 0.0;                          // step actually used
  std::array<double, 6> derivative{};      // central difference dV/dtheta
  std::array<double, 6> half_length{};     // l/2
  std::array<double, 6> residual{};        // |dV/dtheta + l/2|
  std::array<double, 6> relative{};        // residual / (l/2)
  double max_relative() const;
};

/// Schlafli check dV = -1/2 sum l_i dtheta_i by central differences of
/// tet_volume. h must lie in [1e-7, 1e-3]. If a perturbed point leaves the
/// Finite class the step is divided by 10 once; a second failure throws
/// DomainError.
SchlafliResult schlafli_residual(const TetAngles& t, double h);

}  // namespace regge

#endif  // REGGE_KLEIN_ORACLE_HPP_
