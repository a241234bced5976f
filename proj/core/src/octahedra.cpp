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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "regge/error.hpp"
#include "regge/lobachevsky.hpp"
#include "regge/tolerances.hpp"

namespace regge {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Sign of Z in each slot of the solution family.
constexpr std::array<double, 8> kSlotSign = {1, -1, 1, -1, 1, -1, 1, -1};

double SlotTerms(const SlotAngles& seed, double Z) {
  double sum = 0.0;
  for (int k = 0; k < 8; ++k) sum += lobachevsky(seed[k] + kSlotSign[k] * Z);
  return sum;
}

SlotAngles Shift(const SlotAngles& seed, double Z) {
  SlotAngles out{};
  for (int k = 0; k < 8; ++k) out[k] = seed[k] + kSlotSign[k] * Z;
  return out;
}

// Ascending coefficients of prod_k (c1_k w + c0_k).
std::array<cd, 5> ExpandLinearProduct(const std::array<cd, 4>& c1,
                                      const std::array<cd, 4>& c0) {
  std::array<cd, 5> p{};
  p[0] = 1.0;
  int degree = 0;
  for (int k = 0; k < 4; ++k) {
    std::array<cd, 5> next{};
    for (int i = 0; i <= degree; ++i) {
      next[i] += p[i] * c0[k];
      next[i + 1] += p[i] * c1[k];
    }
    p = next;
    ++degree;
  }
  return p;
}

// Angle Z with exp(2iZ) = w / |w|, in (-pi/2, pi/2].
double HalfArgument(cd w) { return 0.5 * std::arg(w); }

}  // namespace

double normalize_angle(double x) {
  double r = std::remainder(x, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

BaseAngles base_angles(const TetAngles& t) {
  const auto& [A, B, C, Ap, Bp, Cp] = t;
  BaseAngles out;
  out.a = (kPi - Cp + A + Bp) / 2.0;
  out.b = (kPi - Bp + A + Cp) / 2.0;
  out.c = (kPi - A - B - C) / 2.0;
  out.d = (kPi - A + B + C) / 2.0;
  out.e = (kPi - A - Bp - Cp) / 2.0;
  out.f = (kPi - Ap + Bp + C) / 2.0;
  out.g = (kPi - C + A + B) / 2.0;
  out.h = (kPi - B + Ap + Cp) / 2.0;
  return out;
}

BarSolution bar_solution(const TetAngles& t) {
  const auto& [A, B, C, Ap, Bp, Cp] = t;
  BarSolution out;
  out.slots = {
      (A + Ap + 2.0 * Bp) / 4.0,                 // AB
      (2.0 * kPi + A - Ap + 2.0 * Cp) / 4.0,     // BA
      (A + Ap - 2.0 * Bp) / 4.0,                 // BC
      (2.0 * kPi - A + Ap - 2.0 * C) / 4.0,      // CB
      (-A - Ap - 2.0 * B) / 4.0,                 // CD
      (2.0 * kPi - A + Ap + 2.0 * C) / 4.0,      // DC
      (-A - Ap + 2.0 * B) / 4.0,                 // DA
      (2.0 * kPi + A - Ap - 2.0 * Cp) / 4.0,     // AD
  };
  return out;
}

std::array<double, 8> linear_constraint_residuals(const SlotAngles& x,
                                                  const BaseAngles& base) {
  const auto at = [&](Slot s) { return x[static_cast<int>(s)]; };
  return {
      at(Slot::kAB) + at(Slot::kAD) - base.a,
      at(Slot::kBC) + at(Slot::kBA) - base.b,
      at(Slot::kCD) + at(Slot::kCB) - base.c,
      at(Slot::kDA) + at(Slot::kDC) - base.d,
      at(Slot::kAB) + at(Slot::kBA) + base.e - kPi,
      at(Slot::kBC) + at(Slot::kCB) + base.f - kPi,
      at(Slot::kCD) + at(Slot::kDC) + base.g - kPi,
      at(Slot::kDA) + at(Slot::kAD) + base.h - kPi,
  };
}

double holonomy_product(const SlotAngles& x) {
  double p = 1.0;
  for (int k = 0; k < 8; k += 2) p *= std::sin(x[k]) / std::sin(x[k + 1]);
  return p;
}

HolonomyQuadratic holonomy_quadratic(const SlotAngles& seed) {
  HolonomyQuadratic q;
  for (int k = 0; k < 4; ++k) {
    q.alphas[k] = std::polar(1.0, seed[2 * k]);
    q.betas[k] = std::polar(1.0, seed[2 * k + 1]);
  }
  std::array<cd, 4> a1{}, a0{}, b1{}, b0{};
  for (int k = 0; k < 4; ++k) {
    a1[k] = q.alphas[k];
    a0[k] = -1.0 / q.alphas[k];
    b1[k] = -1.0 / q.betas[k];
    b0[k] = q.betas[k];
  }
  const auto p = ExpandLinearProduct(a1, a0);
  const auto r = ExpandLinearProduct(b1, b0);
  for (int i = 0; i < 5; ++i) q.coeffs[i] = p[i] - r[i];

  // coeffs[3] w^2 + coeffs[2] w + coeffs[1] = 0, cancellation-free form.
  const cd a = q.coeffs[3];
  const cd b = q.coeffs[2];
  const cd c = q.coeffs[1];
  const cd root = std::sqrt(b * b - 4.0 * a * c);
  const cd s = (std::real(std::conj(b) * root) >= 0.0) ? b + root : b - root;
  const cd qq = -0.5 * s;
  q.roots = {qq / a, c / qq};
  return q;
}

HolonomyRoots solve_holonomy(const TetAngles& t) {
  return solve_holonomy(t, bar_solution(t).slots);
}

HolonomyRoots solve_holonomy(const TetAngles& t, const SlotAngles& seed) {
  const TetraClass cls = classify(t);
  if (cls.kind == TetraClass::Kind::kInvalid) {
    throw DomainError("solve_holonomy: dihedral angles do not describe a "
                      "hyperbolic tetrahedron (Invalid)");
  }
  const HolonomyQuadratic q = holonomy_quadratic(seed);

  HolonomyRoots out;
  out.hyperideal_input = cls.kind == TetraClass::Kind::kHyperideal;
  out.alphas = q.alphas;
  out.betas = q.betas;
  out.quad_coeffs = {q.coeffs[1], q.coeffs[2], q.coeffs[3]};
  out.z0_coeff = q.coeffs[0];
  out.z8_coeff = q.coeffs[4];

  const double separation = std::abs(q.roots[0] - q.roots[1]);
  if (!(separation >= tol::kDegenerateRoots)) {
    std::ostringstream msg;
    msg << "solve_holonomy: roots coincide (|w+ - w-| = " << separation
        << "); degenerate tetrahedron";
    throw HolonomyError(HolonomyError::Kind::kDegenerateDiscriminant,
                        msg.str(), separation);
  }
  for (const cd& w : q.roots) {
    const double off = std::abs(std::abs(w) - 1.0);
    out.projection_distance = std::max(out.projection_distance, off);
  }
  if (!(out.projection_distance <= tol::kUnitProjection)) {
    std::ostringstream msg;
    msg << "solve_holonomy: root off the unit circle by "
        << out.projection_distance << "; Z is not real";
    throw HolonomyError(HolonomyError::Kind::kNonUnitRoot, msg.str(),
                        out.projection_distance);
  }

  const double constant = volume_constant_terms(t);
  std::array<double, 2> Z = {HalfArgument(q.roots[0]),
                             HalfArgument(q.roots[1])};
  std::array<double, 2> V = {SlotTerms(seed, Z[0]) + constant,
                             SlotTerms(seed, Z[1]) + constant};
  if (V[1] > V[0]) {
    std::swap(Z[0], Z[1]);
    std::swap(V[0], V[1]);
  }
  if (!(V[0] > 0.0)) {
    std::ostringstream msg;
    msg << "solve_holonomy: no root gives a positive volume (" << V[0]
        << ", " << V[1] << ")";
    throw HolonomyError(HolonomyError::Kind::kNoPositiveRoot, msg.str(),
                        V[0]);
  }
  out.Z_minus = Z[0];
  out.Z_plus = Z[1];
  out.z_minus = std::polar(1.0, Z[0]);
  out.z_plus = std::polar(1.0, Z[1]);
  out.volume_minus = V[0];
  out.volume_plus = V[1];
  return out;
}

OctAngles octahedron_angles(const BarSolution& bars,
                            const HolonomyRoots& roots, Octahedron which) {
  OctAngles out;
  out.which = which;
  if (which == Octahedron::kO) {
    out.angles = Shift(bars.slots, roots.Z_minus);
    return out;
  }
  SlotAngles seed{};
  for (int k = 0; k < 8; ++k) {
    seed[k] = (k % 2 == 0) ? -bars.slots[k] : kPi - bars.slots[k];
  }
  // The dual seed's holonomy polynomial is the original one under
  // w -> 1/w, so its relevant root is conj(w_plus).
  out.angles = Shift(seed, -roots.Z_plus);
  return out;
}

OctAngles octahedron_angles(const TetAngles& t, Octahedron which) {
  return octahedron_angles(bar_solution(t), solve_holonomy(t), which);
}

BaseAngles dual_base_angles(const BaseAngles& b) {
  return {kPi - b.a, kPi - b.b, kPi - b.c, kPi - b.d,
          kPi - b.e, kPi - b.f, kPi - b.g, kPi - b.h};
}

std::array<double, 12> octahedron_dihedral_angles(const OctAngles& o,
                                                  const BaseAngles& base) {
  using S = Slot;
  return {
      o[S::kAB] + o[S::kAD], o[S::kBC] + o[S::kBA],
      o[S::kCD] + o[S::kCB], o[S::kDA] + o[S::kDC],
      base.e, base.f, base.g, base.h,
      o[S::kBA] + o[S::kDA], o[S::kAB] + o[S::kCB],
      o[S::kBC] + o[S::kDC], o[S::kCD] + o[S::kAD],
  };
}

double octahedron_volume(const OctAngles& oct, const BaseAngles& base) {
  double sum = 0.0;
  for (double x : oct.angles) sum += lobachevsky(x);
  return sum + lobachevsky(base.e) + lobachevsky(base.f) +
         lobachevsky(base.g) + lobachevsky(base.h);
}

double octahedron_volume_at(const BarSolution& bars, const BaseAngles& base,
                            double Z) {
  return SlotTerms(bars.slots, Z) + lobachevsky(base.e) +
         lobachevsky(base.f) + lobachevsky(base.g) + lobachevsky(base.h);
}

double volume_constant_terms(const TetAngles& t) {
  const auto& [A, B, C, Ap, Bp, Cp] = t;
  const auto L = [](double numerator) {
    return lobachevsky((kPi + numerator) / 2.0);
  };
  const double bracket =
      L(A - B - C) - L(B - A - C) - L(C - A - B) + L(Bp - Ap - C) +
      L(A + B + C) + L(C - Ap - Bp) + L(-Ap + Bp + C) - L(Ap + Bp + C) +
      L(Ap - B - Cp) - L(A + Bp + Cp) - L(A - Bp - Cp) + L(Bp - A - Cp) -
      L(-Ap - B + Cp) + L(Ap - B + Cp) + L(Ap + B + Cp) + L(-A - Bp + Cp);
  return 0.5 * bracket;
}

double u_volume(const TetAngles& t) {
  const auto& [A, B, C, Ap, Bp, Cp] = t;
  const HolonomyRoots roots = solve_holonomy(t);
  const auto L = [](double numerator) {
    return lobachevsky((kPi + numerator) / 2.0);
  };
  double sum = SlotTerms(bar_solution(t).slots, roots.Z_minus);
  for (double x : t.as_array()) sum += lobachevsky(x);
  sum += L(-A - Bp - Cp) + L(Ap - B - Cp) + L(Bp - A - Cp) + L(Cp - A - Bp) +
         L(A - B - C) + L(C - Ap - Bp) + L(Bp - Ap - C) - L(Ap + Bp + C);
  return sum;
}

double tet_volume(const TetAngles& t, Root root) {
  const HolonomyRoots roots = solve_holonomy(t);
  return root == Root::kMinus ? roots.volume_minus : roots.volume_plus;
}

double tet_volume_via_octahedra(const TetAngles& t) {
  const OctahedralSolution s = solve_octahedra(t);
  return 0.5 * (octahedron_volume(s.o, s.base) +
                octahedron_volume(s.o_dual, dual_base_angles(s.base)));
}

double tet_volume_via_u(const TetAngles& t) {
  const auto& [A, B, C, Ap, Bp, Cp] = t;
  // One half prism per vertex of T, over that vertex's three angles.
  const double prisms = prism_volume(A, Bp, Cp) + prism_volume(Ap, Bp, C) +
                        prism_volume(Ap, B, Cp) + prism_volume(A, B, C);
  return u_volume(t) - 0.5 * prisms;
}

double doubled_volume_sum(const TetAngles& t) {
  const OctahedralSolution s = solve_octahedra(t);
  double sum = 0.0;
  for (double x : s.o.angles) sum += lobachevsky(x);
  for (double x : s.o_dual.angles) sum += lobachevsky(x);
  return sum;
}

OctahedralSolution solve_octahedra(const TetAngles& t) {
  OctahedralSolution s;
  s.source = t;
  s.base = base_angles(t);
  s.bars = bar_solution(t);
  s.roots = solve_holonomy(t, s.bars.slots);
  s.o = octahedron_angles(s.bars, s.roots, Octahedron::kO);
  s.o_dual = octahedron_angles(s.bars, s.roots, Octahedron::kODual);
  s.volume = s.roots.volume_minus;
  return s;
}

}  // namespace regge
