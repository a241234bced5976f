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

#ifndef REGGE_RELABEL_HPP_
#define REGGE_RELABEL_HPP_

#include <array>
#include <span>

#include "regge/tetrahedron.hpp"

namespace regge {

// A symmetry of the labelled tetrahedron, acting on the six angle slots.
//
// Built from a permutation p of the four vertices: the relabelled
// tetrahedron carries, on the edge {p(i), p(j)}, the angle the original had
// on {i, j}. All 24 vertex permutations (rotations and reflections) are
// allowed; they induce 24 distinct permutations of the angle slots.
class Relabeling {
 public:
  Relabeling();  // identity

  // Throws DomainError unless `p` is a permutation of {0, 1, 2, 3}.
  static Relabeling from_vertices(const std::array<int, 4>& p);

  // out[k] = t[source[k]]. Throws DomainError unless the slot map is one of
  // the 24 induced by a tetrahedral symmetry.
  static Relabeling from_slot_map(const std::array<int, 6>& source);

  // Pair-role swaps: (A,A') <-> (B,B'), (B,B') <-> (C,C'), (A,A') <-> (C,C').
  static Relabeling swap_ab();
  static Relabeling swap_bc();
  static Relabeling swap_ac();

  // Reflection exchanging vertices 2 and 3:
  //   (A, B, C, A', B', C') -> (C', B, A', C, B', A).
  // Realizes the mirror step after the BA <-> DC interchange.
  static Relabeling mirror_b();

  // All 24 symmetries; index 0 is the identity.
  static std::span<const Relabeling> all();

  Relabeling inverse() const;
  // (this * other)(t) = this(other(t)).
  Relabeling operator*(const Relabeling& other) const;

  const std::array<int, 4>& vertex_map() const { return vertices_; }
  const std::array<int, 6>& slot_source() const { return source_; }
  bool is_identity() const;

  friend bool operator==(const Relabeling& a, const Relabeling& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  explicit Relabeling(const std::array<int, 4>& p);

  std::array<int, 4> vertices_;
  std::array<int, 6> source_;
};

TetAngles relabel(const TetAngles& t, const Relabeling& sigma);

}  // namespace regge

#endif  // REGGE_RELABEL_HPP_
