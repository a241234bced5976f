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

#ifndef REGGE_OCTAHEDRA_HPP_
#define REGGE_OCTAHEDRA_HPP_

#include <array>
#include <complex>
#include <string_view>

#include "regge/tetrahedron.hpp"

namespace regge {

// The eight unknown angles of the firepole triangulation of the central
// octahedron. In the half-space picture with the firepole vertical, the four
// ideal tetrahedra {v_x, v_y, v_0, inf} have triangle angles XY at v_x and YX
// at v_y. Even slots (AB, BC, CD, DA) move by +Z along the one-parameter
// solution family, odd slots by -Z.
enum class Slot : int { kAB = 0, kBA, kBC, kCB, kCD, kDC, kDA, kAD };

inline constexpr std::array<std::string_view, 8> kSlotNames = {
    "AB", "BA", "BC", "CB", "CD", "DC", "DA", "AD"};

using SlotAngles = std::array<double, 8>;

// Quadrilateral angles a..d at v_a..v_d and the known edge angles e..h
// opposite the edges v_a v_b, v_b v_c, v_c v_d, v_d v_a.
struct BaseAngles {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  double e = 0.0, f = 0.0, g = 0.0, h = 0.0;
};

BaseAngles base_angles(const TetAngles& t);

// Particular solution of the linear constraints (the barred angles).
struct BarSolution {
  SlotAngles slots{};

  double operator[](Slot s) const { return slots[static_cast<int>(s)]; }
};

BarSolution bar_solution(const TetAngles& t);

// Residuals, in this order, of
//   AB+AD-a, BC+BA-b, CD+CB-c, DA+DC-d,
//   AB+BA+e-pi, BC+CB+f-pi, CD+DC+g-pi, DA+AD+h-pi.
std::array<double, 8> linear_constraint_residuals(const SlotAngles& angles,
                                                  const BaseAngles& base);

// sin(AB)/sin(BA) * sin(BC)/sin(CB) * sin(CD)/sin(DC) * sin(DA)/sin(AD).
double holonomy_product(const SlotAngles& angles);

// Holonomy condition, written for the seed + (Z, -Z, ...) family as a
// polynomial in w = z^2 = exp(2iZ):
//   prod_k (alpha_k w - 1/alpha_k) - prod_k (beta_k - w/beta_k) = 0
// with alpha_k = exp(i seed_even_k), beta_k = exp(i seed_odd_k).
struct HolonomyQuadratic {
  std::array<std::complex<double>, 4> alphas{};
  std::array<std::complex<double>, 4> betas{};
  // Coefficients of z^0, z^2, ..., z^8; the outer two vanish whenever the
  // seed sums to 2 pi, leaving a quadratic in w.
  std::array<std::complex<double>, 5> coeffs{};
  std::array<std::complex<double>, 2> roots{};  // in w, as returned
};

HolonomyQuadratic holonomy_quadratic(const SlotAngles& seed);

struct HolonomyRoots {
  std::complex<double> z_minus;  // exp(i Z_minus)
  std::complex<double> z_plus;
  double Z_minus = 0.0;  // radians, in (-pi/2, pi/2]
  double Z_plus = 0.0;
  std::array<std::complex<double>, 4> alphas{};
  std::array<std::complex<double>, 4> betas{};
  // z^2, z^4, z^6 coefficients: the quadratic in w.
  std::array<std::complex<double>, 3> quad_coeffs{};
  // z^0 and z^8 coefficients; zero up to rounding.
  std::complex<double> z0_coeff;
  std::complex<double> z8_coeff;
  double projection_distance = 0.0;  // max ||w| - 1| before projection
  double volume_minus = 0.0;         // tet_volume with each root
  double volume_plus = 0.0;
  bool hyperideal_input = false;
};

/// Solves the holonomy condition on top of bar_solution(t).
///
/// The raw +/- square-root branch of a complex quadratic is not a stable
/// label, so the roots are named by what they do: z_minus is the root whose
/// volume formula is positive (it realizes the octahedron O), z_plus is the
/// other one (it yields -V and encodes the dual octahedron).
///
/// Throws DomainError for Invalid input, HolonomyError when the roots
/// coincide, leave the unit circle by more than 1e-6, or neither gives a
/// positive volume. Hyperideal input is accepted and flagged.
HolonomyRoots solve_holonomy(const TetAngles& t);

// Same, starting from any particular solution `seed` of the linear
// constraints for t. Different seeds must give the same octahedron.
HolonomyRoots solve_holonomy(const TetAngles& t, const SlotAngles& seed);

enum class Octahedron { kO, kODual };

struct OctAngles {
  SlotAngles angles{};
  Octahedron which = Octahedron::kO;

  double operator[](Slot s) const { return angles[static_cast<int>(s)]; }
};

// O: bars + (Z_minus, -Z_minus, ...).
// O': seed (-AB, pi-BA, -BC, pi-CB, -CD, pi-DC, -DA, pi-AD) in barred
// angles, shifted by the dual system's root Z' = -Z_plus.
OctAngles octahedron_angles(const TetAngles& t, Octahedron which);
OctAngles octahedron_angles(const BarSolution& bars,
                            const HolonomyRoots& roots, Octahedron which);

// Base angles of the dual octahedron: a..h replaced by pi - a..h.
BaseAngles dual_base_angles(const BaseAngles& base);

// The twelve dihedral angles of the octahedron:
//   vertical edges   inf-v_a..inf-v_d : AB+AD, BC+BA, CD+CB, DA+DC
//   horizon edges    v_a v_b .. v_d v_a : e, f, g, h
//   spokes           v_0-v_a..v_0-v_d : BA+DA, AB+CB, BC+DC, CD+AD
// `base` is the base of the octahedron in question (use dual_base_angles
// for O').
std::array<double, 12> octahedron_dihedral_angles(const OctAngles& oct,
                                                  const BaseAngles& base);

// Sum of the twelve L-terms: eight slots plus L(e..h) of `base`.
double octahedron_volume(const OctAngles& oct, const BaseAngles& base);

// Octahedron volume evaluated along the O family at an arbitrary Z.
// At Z_minus this is V(O); at Z_plus it is -V(O').
double octahedron_volume_at(const BarSolution& bars, const BaseAngles& base,
                            double Z);

// The half-bracket of sixteen L-terms in the closed volume formula; depends
// only on the dihedral angles of T.
double volume_constant_terms(const TetAngles& t);

// Volume of the polyhedron U (all edges of T extended to infinity).
double u_volume(const TetAngles& t);

enum class Root { kMinus, kPlus };

/// Closed-form volume: the eight slot terms at the chosen root plus
/// volume_constant_terms(). Root::kMinus gives V(T) > 0; Root::kPlus gives
/// -V(T).
double tet_volume(const TetAngles& t, Root root = Root::kMinus);

// Independent routes to the same number, for cross-checks.
double tet_volume_via_octahedra(const TetAngles& t);  // (V(O) + V(O'))/2
double tet_volume_via_u(const TetAngles& t);  // V(U) - sum of half prisms
double doubled_volume_sum(const TetAngles& t);  // 16 slot terms = 2 V(T)

// Everything above for one tetrahedron, solved once.
struct OctahedralSolution {
  TetAngles source;
  BaseAngles base;
  BarSolution bars;
  HolonomyRoots roots;
  OctAngles o;
  OctAngles o_dual;
  double volume = 0.0;
};

OctahedralSolution solve_octahedra(const TetAngles& t);

// Reduce an angle into (-pi, pi].
double normalize_angle(double x);

}  // namespace regge

#endif  // REGGE_OCTAHEDRA_HPP_
