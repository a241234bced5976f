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

#include "regge/scissors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <numeric>

#include "regge/error.hpp"
#include "regge/lobachevsky.hpp"
#include "regge/tolerances.hpp"

namespace regge {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kBA = static_cast<int>(Slot::kBA);
constexpr int kDC = static_cast<int>(Slot::kDC);

// Distance between two canonical angles, modulo pi.
double CircularGap(double x, double y) {
  return std::abs(std::remainder(x - y, kPi));
}

Relabeling FirepoleRelabeling(Firepole f) {
  switch (f) {
    case Firepole::kAA: return Relabeling();
    case Firepole::kBB: return Relabeling::swap_ab();
    case Firepole::kCC: return Relabeling::swap_ac();
  }
  return Relabeling();
}

}  // namespace

char to_char(ReggeAxis axis) {
  switch (axis) {
    case ReggeAxis::kA: return 'a';
    case ReggeAxis::kB: return 'b';
    case ReggeAxis::kC: return 'c';
  }
  return '?';
}

double ReggeTransform::s_value(const TetAngles& t) const {
  switch (which) {
    case ReggeAxis::kA: return (t.B + t.C + t.Bp + t.Cp) / 2.0;
    case ReggeAxis::kB: return (t.A + t.C + t.Ap + t.Cp) / 2.0;
    case ReggeAxis::kC: return (t.A + t.B + t.Ap + t.Bp) / 2.0;
  }
  return 0.0;
}

TetAngles ReggeTransform::apply(const TetAngles& t) const {
  const double s = s_value(t);
  switch (which) {
    case ReggeAxis::kA:
      return {t.A, s - t.B, s - t.C, t.Ap, s - t.Bp, s - t.Cp};
    case ReggeAxis::kB:
      return {s - t.A, t.B, s - t.C, s - t.Ap, t.Bp, s - t.Cp};
    case ReggeAxis::kC:
      return {s - t.A, s - t.B, t.C, s - t.Ap, s - t.Bp, t.Cp};
  }
  return t;
}

TetAngles regge(const TetAngles& t, ReggeAxis which) {
  return ReggeTransform{which}.apply(t);
}

Relabeling regge_conjugation(ReggeAxis which) {
  switch (which) {
    case ReggeAxis::kA: return Relabeling::swap_ab();
    case ReggeAxis::kB: return Relabeling();
    case ReggeAxis::kC: return Relabeling::swap_bc();
  }
  return Relabeling();
}

std::size_t piece_index(const PieceSlot& s) {
  return static_cast<std::size_t>(s.slot) +
         (s.octahedron == Octahedron::kODual ? 8u : 0u);
}

std::string piece_name(const PieceSlot& s) {
  std::string name(kSlotNames[static_cast<int>(s.slot)]);
  return s.octahedron == Octahedron::kO ? name + "/O" : name + "/O'";
}

double canonical_angle(double raw) {
  double r = std::remainder(raw, kPi);  // [-pi/2, pi/2]
  if (r <= -kPi / 2.0) r += kPi;
  if (std::abs(r) < tol::kNullPiece) r = 0.0;
  return r;
}

double LPiece::signed_volume() const { return lobachevsky(canonical_angle); }

double Decomposition::total_volume() const {
  double sum = 0.0;
  for (const LPiece& p : pieces) sum += p.signed_volume();
  return sum;
}

std::array<double, 16> Decomposition::canonical_angles() const {
  std::array<double, 16> out{};
  for (int i = 0; i < 16; ++i) out[i] = pieces[i].canonical_angle;
  return out;
}

Decomposition decompose(const TetAngles& t, Firepole firepole) {
  const OctahedralSolution s = solve_octahedra(relabel(t, FirepoleRelabeling(firepole)));
  Decomposition d;
  d.source = t;
  d.firepole = firepole;
  for (int k = 0; k < 8; ++k) {
    LPiece& o = d.pieces[k];
    o.slot = {static_cast<Slot>(k), Octahedron::kO};
    o.raw_angle = s.o.angles[k];

    // O' terms enter as L(-XY + Z') and -L(YX + Z'): the odd slots are the
    // dual angle pi - YX - Z' shifted down by pi.
    LPiece& od = d.pieces[k + 8];
    od.slot = {static_cast<Slot>(k), Octahedron::kODual};
    od.raw_angle = (k % 2 == 0) ? s.o_dual.angles[k] : s.o_dual.angles[k] - kPi;
  }
  for (LPiece& p : d.pieces) {
    p.canonical_angle = canonical_angle(p.raw_angle);
    p.null_piece = p.canonical_angle == 0.0;
  }
  return d;
}

std::array<int, 16> regge_b_slot_permutation() {
  std::array<int, 16> perm{};
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[kBA], perm[kDC]);
  std::swap(perm[kBA + 8], perm[kDC + 8]);
  return perm;
}

Decomposition permute_for_regge_b(const Decomposition& d) {
  if (d.firepole != Firepole::kAA) {
    throw DomainError(
        "permute_for_regge_b: the interchange is defined for the AA' "
        "firepole");
  }
  Decomposition out = d;
  const auto perm = regge_b_slot_permutation();
  for (int i = 0; i < 16; ++i) {
    LPiece moved = d.pieces[i];
    moved.slot = d.pieces[perm[i]].slot;
    out.pieces[perm[i]] = moved;
  }
  out.regge_b_permuted = true;
  out.mirrored = true;
  return out;
}

double HalfDecomposition::copy_volume(int half) const {
  double sum = 0.0;
  for (const HalfPiece& p : pieces) {
    if (p.half == half) sum += p.signed_volume;
  }
  return sum;
}

double HalfDecomposition::total_volume() const { return copy_volume(0); }

double HalfDecomposition::doubled_volume() const {
  return copy_volume(0) + copy_volume(1);
}

HalfDecomposition halve(const Decomposition& d) {
  HalfDecomposition out;
  out.source = d.source;
  for (int i = 0; i < 16; ++i) {
    const double v = 0.5 * d.pieces[i].signed_volume();
    for (int h = 0; h < 2; ++h) {
      HalfPiece& p = out.pieces[2 * i + h];
      p.slot = d.pieces[i].slot;
      p.half = h;
      p.canonical_angle = d.pieces[i].canonical_angle;
      p.signed_volume = v;
    }
  }
  return out;
}

MultisetMatch match_multisets(const std::array<double, 16>& lhs,
                              const std::array<double, 16>& rhs) {
  std::array<int, 16> li{}, ri{};
  std::iota(li.begin(), li.end(), 0);
  std::iota(ri.begin(), ri.end(), 0);
  std::stable_sort(li.begin(), li.end(),
                   [&](int a, int b) { return lhs[a] < lhs[b]; });
  std::stable_sort(ri.begin(), ri.end(),
                   [&](int a, int b) { return rhs[a] < rhs[b]; });
  MultisetMatch m;
  for (int k = 0; k < 16; ++k) {
    m.pairing[li[k]] = ri[k];
    m.max_gap = std::max(m.max_gap, CircularGap(lhs[li[k]], rhs[ri[k]]));
  }
  return m;
}

ScissorsReport verify_scissors(const TetAngles& t, ReggeAxis which,
                               double volume_tolerance,
                               double match_tolerance) {
  ScissorsReport r;
  r.which = which;
  r.source = t;
  r.image = regge(t, which);
  r.conjugation = regge_conjugation(which);
  r.volume_tolerance = volume_tolerance;
  r.match_tolerance = match_tolerance;
  const TetraClass source_class = classify(t);
  const TetraClass image_class = classify(r.image);
  r.source_class = std::string(to_string(source_class.kind));
  r.image_class = std::string(to_string(image_class.kind));
  if (source_class.kind != TetraClass::Kind::kFinite ||
      image_class.kind != TetraClass::Kind::kFinite) {
    r.failure = "source is " + r.source_class + ", image is " + r.image_class +
                "; both must be Finite";
    return r;
  }

  const TetAngles conj_source = relabel(t, r.conjugation);
  const TetAngles conj_image = regge(conj_source, ReggeAxis::kB);
  r.conjugation_error = max_angle_difference(
      relabel(conj_image, r.conjugation.inverse()), r.image);

  try {
    r.volume_source = tet_volume(t);
    r.volume_image = tet_volume(r.image);
    r.volume_gap = std::abs(r.volume_source - r.volume_image);

    const Decomposition d = decompose(conj_source);
    const Decomposition moved = permute_for_regge_b(d);
    const Decomposition target =
        decompose(relabel(conj_image, Relabeling::mirror_b()));

    const MultisetMatch m =
        match_multisets(d.canonical_angles(), target.canonical_angles());
    r.multiset_distance = m.max_gap;
    r.permutation = m.pairing;
    for (int k = 0; k < 16; ++k) {
      r.slot_distance =
          std::max(r.slot_distance, CircularGap(moved.pieces[k].canonical_angle,
                                                target.pieces[k].canonical_angle));
    }
    r.permutation_is_theorem_swap = r.slot_distance <= match_tolerance;
  } catch (const std::exception& e) {
    r.failure = e.what();
    return r;
  }

  if (r.volume_gap > volume_tolerance) {
    r.failure = "volume gap exceeds tolerance";
  } else if (r.multiset_distance > match_tolerance) {
    r.failure = "piece multisets differ";
  } else if (!r.permutation_is_theorem_swap) {
    r.failure = "BA <-> DC interchange does not align the pieces slot by slot";
  } else if (r.conjugation_error > 1e-12) {
    r.failure = "conjugation identity violated";
  }
  r.pass = r.failure.empty();
  return r;
}

bool congruent_labels(const TetAngles& a, const TetAngles& b,
                      double tolerance) {
  for (const Relabeling& sigma : Relabeling::all()) {
    if (max_angle_difference(relabel(a, sigma), b) <= tolerance) return true;
  }
  return false;
}

OrbitResult regge_orbit(const TetAngles& t, int max_size) {
  if (max_size < 1) throw DomainError("regge_orbit: max_size must be >= 1");
  OrbitResult out;
  std::deque<std::size_t> frontier;
  out.members.push_back(t);
  frontier.push_back(0);
  while (!frontier.empty()) {
    const TetAngles current = out.members[frontier.front()];
    frontier.pop_front();
    for (ReggeAxis axis : {ReggeAxis::kA, ReggeAxis::kB, ReggeAxis::kC}) {
      const TetAngles next = regge(current, axis);
      const bool known = std::any_of(
          out.members.begin(), out.members.end(), [&](const TetAngles& m) {
            return congruent_labels(next, m, tol::kOrbitDedup);
          });
      if (known) continue;
      if (static_cast<int>(out.members.size()) >= max_size) {
        out.truncated = true;
        continue;
      }
      out.members.push_back(next);
      frontier.push_back(out.members.size() - 1);
    }
  }
  for (const TetAngles& m : out.members) {
    double v = std::numeric_limits<double>::quiet_NaN();
    if (classify(m).kind != TetraClass::Kind::kInvalid) {
      try {
        v = tet_volume(m);
      } catch (const NumericalError&) {
      }
    }
    out.volumes.push_back(v);
  }
  return out;
}

}  // namespace regge
