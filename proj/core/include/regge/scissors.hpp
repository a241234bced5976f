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

#ifndef REGGE_SCISSORS_HPP_
#define REGGE_SCISSORS_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "regge/octahedra.hpp"
#include "regge/relabel.hpp"
#include "regge/tetrahedron.hpp"

namespace regge {

enum class ReggeAxis { kA, kB, kC };

char to_char(ReggeAxis axis);

// One of the three generating Regge symmetries. R_x keeps the (X, X') pair
// and sends every other angle Y to s_x - Y, where s_x is half the sum of
// the four moved angles.
struct ReggeTransform {
  ReggeAxis which = ReggeAxis::kB;

  double s_value(const TetAngles& t) const;
  TetAngles apply(const TetAngles& t) const;
};

TetAngles regge(const TetAngles& t, ReggeAxis which);

// Relabeling sigma with sigma * R_b * sigma = R_x (identity for x = b).
Relabeling regge_conjugation(ReggeAxis which);

enum class Firepole { kAA, kBB, kCC };

struct PieceSlot {
  Slot slot = Slot::kAB;
  Octahedron octahedron = Octahedron::kO;
};

// Index 0..15: the O slots in Slot order, then the O' slots.
std::size_t piece_index(const PieceSlot& s);
std::string piece_name(const PieceSlot& s);

// Reduce into (-pi/2, pi/2]; values within 1e-12 of zero become 0.
double canonical_angle(double raw);

// Half of a bilaterally symmetric ideal tetrahedron with apex angle 2 theta.
// Signed volume L(theta).
struct LPiece {
  PieceSlot slot;
  double raw_angle = 0.0;        // argument as it enters the volume sum
  double canonical_angle = 0.0;  // raw mod pi, in (-pi/2, pi/2]
  bool null_piece = false;

  double signed_volume() const;
};

// 2T as sixteen pieces: eight from O, eight from the dual O'. The pieces
// L(e), L(f), L(g), L(h) of the two octahedra cancel and are not carried.
struct Decomposition {
  std::array<LPiece, 16> pieces{};
  TetAngles source;
  Firepole firepole = Firepole::kAA;
  bool regge_b_permuted = false;
  bool mirrored = false;  // volume- and multiset-neutral

  double total_volume() const;
  std::array<double, 16> canonical_angles() const;
};

// Firepole AA' uses T as labelled; BB' and CC' decompose the relabelled
// tetrahedron whose A pair is T's B (resp. C) pair.
Decomposition decompose(const TetAngles& t, Firepole firepole = Firepole::kAA);

// The scissors move realizing 2 R_b(T): interchange the BA and DC pieces of
// O and of O', then take the mirror image (recorded only). Throws
// DomainError unless d.firepole is AA'.
Decomposition permute_for_regge_b(const Decomposition& d);

// Slot permutation applied by permute_for_regge_b, as perm[i] = destination.
std::array<int, 16> regge_b_slot_permutation();

struct HalfPiece {
  PieceSlot slot;
  int half = 0;  // 0 or 1: the two mirror halves of the parent piece
  double canonical_angle = 0.0;
  double signed_volume = 0.0;  // L(canonical_angle) / 2
};

struct HalfDecomposition {
  std::array<HalfPiece, 32> pieces{};
  TetAngles source;

  // The halves with half == k form one copy of T; the 32 pieces are 2T.
  double copy_volume(int half) const;
  double total_volume() const;  // copy_volume(0)
  double doubled_volume() const;
};

HalfDecomposition halve(const Decomposition& d);

struct MultisetMatch {
  double max_gap = 0.0;            // after sorting both sides
  std::array<int, 16> pairing{};   // pairing[i] = j: piece i of lhs to j of rhs
};

// Sort-and-pair on canonical angles; ties broken by slot order.
MultisetMatch match_multisets(const std::array<double, 16>& lhs,
                              const std::array<double, 16>& rhs);

struct ScissorsReport {
  ReggeAxis which = ReggeAxis::kB;
  TetAngles source;
  TetAngles image;                 // R_x(T)
  Relabeling conjugation;          // sigma: route runs the b-move on sigma(T)
  std::string source_class;
  std::string image_class;
  double volume_source = 0.0;
  double volume_image = 0.0;
  double volume_gap = 0.0;
  double multiset_distance = 0.0;  // sorted canonical angles, max gap
  double slot_distance = 0.0;      // permuted pieces vs target, slot by slot
  double conjugation_error = 0.0;  // |sigma R_b sigma (T) - R_x(T)|
  std::array<int, 16> permutation{};  // discovered by multiset matching
  bool permutation_is_theorem_swap = false;
  double volume_tolerance = 0.0;
  double match_tolerance = 0.0;
  bool pass = false;
  std::string failure;  // empty when pass
};

/// Checks numerically that 2T and 2R_x(T) are cut into the same sixteen
/// pieces. x = b runs the BA <-> DC interchange directly; a and c are
/// conjugated through a relabeling first. Never throws for bad geometry:
/// invalid inputs come back as a failed report.
ScissorsReport verify_scissors(const TetAngles& t, ReggeAxis which,
                               double volume_tolerance = 1e-9,
                               double match_tolerance = 1e-9);

struct OrbitResult {
  std::vector<TetAngles> members;  // breadth-first from the seed
  std::vector<double> volumes;     // NaN where the volume is undefined
  bool truncated = false;
};

// Closure of {t} under R_a, R_b, R_c, identifying tetrahedra that differ by
// one of the 24 relabelings (angles within 1e-10).
OrbitResult regge_orbit(const TetAngles& t, int max_size);

// True if a and b agree within `tolerance` under some relabeling.
bool congruent_labels(const TetAngles& a, const TetAngles& b,
                      double tolerance);

}  // namespace regge

#endif  // REGGE_SCISSORS_HPP_
