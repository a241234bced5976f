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

#ifndef REGGE_SIMPLEX_CUBATURE_HPP_
#define REGGE_SIMPLEX_CUBATURE_HPP_

#include <array>
#include <functional>

#include <Eigen/Core>

namespace regge {

using Simplex3 = std::array<Eigen::Vector3d, 4>;

struct CubatureOptions {
  double abs_tol = 1e-6;
  int max_regions = 200000;
};

struct CubatureResult {
  double value = 0.0;
  double error = 0.0;  // sum of |degree 7 - degree 5| over the final regions
  int regions = 0;
  int evaluations = 0;
};

double simplex_volume(const Simplex3& s);

/// Adaptive integration of f over a Euclidean tetrahedron.
///
/// Each region is integrated by the degree-7 Grundmann-Moller rule (35
/// points); the embedded degree-5 rule reuses 15 of them for the local error.
/// The region with the largest error is bisected across its longest edge
/// until the summed error is <= abs_tol. Deterministic: ties are broken by
/// creation order. Throws NumericalError (carrying the achieved error) when
/// max_regions is reached first.
CubatureResult integrate_simplex(
    const std::function<double(const Eigen::Vector3d&)>& f, const Simplex3& s,
    const CubatureOptions& options = {});

}  // namespace regge

#endif  // REGGE_SIMPLEX_CUBATURE_HPP_
