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

#include "regge/relabel.hpp"

#include <algorithm>
#include <vector>

#include "regge/error.hpp"

namespace regge {
namespace {

std::array<int, 6> SlotSource(const std::array<int, 4>& p) {
  // out[edge(p(i), p(j))] = t[edge(i, j)]
  std::array<int, 6> source{};
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kEdgeVertices[k];
    source[edge_between(p[i], p[j])] = k;
  }
  return source;
}

std::vector<Relabeling> MakeAll() {
  std::vector<Relabeling> all;
  std::array<int, 4> p = {0, 1, 2, 3};
  do {
    all.push_back(Relabeling::from_vertices(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

}  // namespace

Relabeling::Relabeling() : Relabeling(std::array<int, 4>{0, 1, 2, 3}) {}

Relabeling::Relabeling(const std::array<int, 4>& p)
    : vertices_(p), source_(SlotSource(p)) {}

Relabeling Relabeling::from_vertices(const std::array<int, 4>& p) {
  std::array<int, 4> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{0, 1, 2, 3}) {
    throw DomainError("Relabeling: not a permutation of the four vertices");
  }
  return Relabeling(p);
}

Relabeling Relabeling::from_slot_map(const std::array<int, 6>& source) {
  for (const Relabeling& r : all()) {
    if (r.source_ == source) return r;
  }
  throw DomainError(
      "Relabeling: angle permutation is not induced by a tetrahedral "
      "symmetry");
}

Relabeling Relabeling::swap_ab() { return from_vertices({2, 1, 0, 3}); }
Relabeling Relabeling::swap_bc() { return from_vertices({0, 2, 1, 3}); }
Relabeling Relabeling::swap_ac() { return from_vertices({1, 0, 2, 3}); }
Relabeling Relabeling::mirror_b() { return from_vertices({0, 1, 3, 2}); }

std::span<const Relabeling> Relabeling::all() {
  static const std::vector<Relabeling> table = MakeAll();
  return table;
}

Relabeling Relabeling::inverse() const {
  std::array<int, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[vertices_[i]] = i;
  return Relabeling(inv);
}

Relabeling Relabeling::operator*(const Relabeling& other) const {
  // Applying `other` moves edge {i,j} to {q(i),q(j)}; then this moves it on
  // to {p(q(i)), p(q(j))}.
  std::array<int, 4> composed{};
  for (int i = 0; i < 4; ++i) composed[i] = vertices_[other.vertices_[i]];
  return Relabeling(composed);
}

bool Relabeling::is_identity() const {
  return vertices_ == std::array<int, 4>{0, 1, 2, 3};
}

TetAngles relabel(const TetAngles& t, const Relabeling& sigma) {
  const auto in = t.as_array();
  std::array<double, 6> out{};
  for (int k = 0; k < 6; ++k) out[k] = in[sigma.slot_source()[k]];
  return TetAngles::from_array(out);
}

}  // namespace regge
