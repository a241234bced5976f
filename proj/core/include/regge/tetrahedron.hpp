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

#ifndef REGGE_TETRAHEDRON_HPP_
#define REGGE_TETRAHEDRON_HPP_

#include <array>
#include <string_view>

#include <Eigen/Core>

namespace regge {

// Dihedral angles of a tetrahedron T(A, B, C, A', B', C'), radians.
//
// Opposite edges carry (A, A'), (B, B'), (C, C'). A, B, C meet at one
// vertex; each of the other vertices sees exactly one angle from every
// opposite pair:
//
//   vertex 0 : A , B', C'        vertex 2 : A', B , C'
//   vertex 1 : A', B', C         vertex 3 : A , B , C
//
// Edge endpoints (vertex pairs): A (0,3), B (2,3), C (1,3),
// A' (1,2), B' (0,1), C' (0,2). Face k is the face opposite vertex k, so an
// edge with endpoints {i, j} is the intersection of the two other faces.
struct TetAngles {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double Ap = 0.0;
  double Bp = 0.0;
  double Cp = 0.0;

  static TetAngles equiangular(double theta) {
    return {theta, theta, theta, theta, theta, theta};
  }
  static TetAngles from_array(const std::array<double, 6>& a) {
    return {a[0], a[1], a[2], a[3], a[4], a[5]};
  }
  std::array<double, 6> as_array() const { return {A, B, C, Ap, Bp, Cp}; }

  friend bool operator==(const TetAngles&, const TetAngles&) = default;
};

// Index of an edge in TetAngles::as_array() order.
enum class Edge : int { kA = 0, kB, kC, kAp, kBp, kCp };

inline constexpr std::array<std::string_view, 6> kEdgeNames = {
    "A", "B", "C", "A'", "B'", "C'"};

// Endpoints of each edge, in as_array() order.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices = {{
    {0, 3}, {2, 3}, {1, 3}, {1, 2}, {0, 1}, {0, 2}}};

// Edge index joining vertices i != j.
int edge_between(int i, int j);

// max |a_k - b_k| over the six angles.
double max_angle_difference(const TetAngles& a, const TetAngles& b);

// Angles of an ideal tetrahedron; opposite edges share an angle.
struct IdealTetAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

// Angles at the three ideal vertices of the prism over a vertex link.
struct PrimeAngles {
  double Aprime = 0.0;
  double Bprime = 0.0;
  double Cprime = 0.0;
};

// A' = (pi + A - B - C)/2 and cyclically.
PrimeAngles prime_angles(double A, double B, double C);

// L(alpha) + L(beta) + L(gamma). Throws DomainError when the angle sum is
// off pi by more than 1e-9.
double ideal_volume(const IdealTetAngles& t);

// The three ideal tetrahedra triangulating the ideal prism determined by
// (A, B, C): T(A', B', C), T(A, B', C') and T(C' - C, B, pi - B').
std::array<IdealTetAngles, 3> prism_triangulation(double A, double B,
                                                  double C);

/// Volume of the ideal prism over the vertex (A, B, C):
///   L(A) + L(A') + L(B) + L(B') + L(C) + L(C') - L((pi + A + B + C)/2).
/// Holds for the convex prism (A + B + C < pi) and, by continuation, for
/// the non-convex one (A + B + C > pi). Equal to the summed volumes of
/// prism_triangulation().
double prism_volume(double A, double B, double C);

/// Volume of the 3/4-ideal tetrahedron with angles A, B, C at its finite
/// vertex: half of prism_volume(). Throws DomainError if A + B + C <= pi.
double three_quarter_volume(double A, double B, double C);

// Gram matrix of the face normals: unit diagonal, entry (i, j) equal to
// -cos of the dihedral angle on the edge shared by faces i and j.
struct GramMatrix {
  Eigen::Matrix4d m;
};

GramMatrix gram_matrix(const TetAngles& t);

// Cofactor matrix (adjugate transpose) of a Gram matrix.
Eigen::Matrix4d gram_cofactors(const GramMatrix& g);

struct TetraClass {
  enum class Kind { kFinite, kIdeal, kHyperideal, kInvalid };

  Kind kind = Kind::kInvalid;
  double determinant = 0.0;
  std::array<double, 4> eigenvalues{};      // ascending
  std::array<double, 4> vertex_cofactors{};  // c_ii, vertex i
};

std::string_view to_string(TetraClass::Kind kind);

/// Classify by the Gram matrix.
///
/// The angles describe a (possibly truncated) hyperbolic tetrahedron only if
/// G has signature (3, 1): three eigenvalues > 1e-10, one < -1e-10.
/// Vertex i is then governed by the cofactor c_ii, which is the determinant
/// of the 3x3 principal minor obtained by deleting row/column i, i.e. the
/// Gram matrix of the three faces through vertex i. That minor is the Gram
/// matrix of the spherical link triangle when c_ii > 0 (finite vertex), is
/// singular when the link is Euclidean (ideal vertex), and is indefinite when
/// the vertex lies beyond the sphere at infinity (hyperideal vertex).
///
///   Finite     : signature ok, every c_ii >= 1e-8
///   Ideal      : signature ok, some |c_ii| < 1e-8, none <= -1e-8
///   Hyperideal : signature ok, some c_ii <= -1e-8
///   Invalid    : anything else (including angles outside (0, pi))
TetraClass classify(const TetAngles& t);

/// Hyperbolic edge lengths in as_array() order, from
///   cosh l_ij = c_ij / sqrt(c_ii c_jj)
/// for the edge joining vertices i and j. Throws DomainError unless the
/// tetrahedron is Finite (ideal vertices have infinite incident edges).
std::array<double, 6> edge_lengths(const TetAngles& t);

}  // namespace regge

#endif  // REGGE_TETRAHEDRON_HPP_
