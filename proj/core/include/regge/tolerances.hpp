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

#ifndef REGGE_TOLERANCES_HPP_
#define REGGE_TOLERANCES_HPP_

// Library-wide numeric thresholds. Downstream checks derive from the
// Lobachevsky accuracy; everything that compares against a threshold
// should take it from here.
namespace regge::tol {

inline constexpr double kLobachevsky = 1e-12;      // absolute, series route
inline constexpr double kIdealAngleSum = 1e-9;     // alpha + beta + gamma = pi
inline constexpr double kEigenSignature = 1e-10;   // Gram eigenvalue sign test
inline constexpr double kIdealCofactor = 1e-8;     // |c_ii| below this: ideal
inline constexpr double kUnitProjection = 1e-6;    // |w| - 1 before projecting
inline constexpr double kDegenerateRoots = 1e-9;   // |w+ - w-| below: degenerate
inline constexpr double kNullPiece = 1e-12;        // canonical angle ~ 0
inline constexpr double kOrbitDedup = 1e-10;       // angle match inside orbits
inline constexpr double kScissorsMatch = 1e-9;     // 16-angle multiset match
inline constexpr double kVolumeMatch = 1e-9;       // V(T) vs V(R(T))
inline constexpr double kKleinQuadrature = 1e-6;   // oracle volume target

}  // namespace regge::tol

#endif  // REGGE_TOLERANCES_HPP_
