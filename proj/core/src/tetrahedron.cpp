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

#include "regge/tetrahedron.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "regge/error.hpp"
#include "regge/lobachevsky.hpp"
#include "regge/tolerances.hpp"

namespace regge {
namespace {

constexpr double kPi = std::numbers::pi;

// Faces containing each edge: the complement of its endpoint pair.
constexpr std::array<std::array<int, 2>, 6> kEdgeFaces = {{
    {1, 2}, {0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 3}}};

double Minor3(const Eigen::Matrix4d& m, int row, int col) {
  Eigen::Matrix3d sub;
  for (int i = 0, si = 0; i < 4; ++i) {
    if (i == row) continue;
    for (int j = 0, sj = 0; j < 4; ++j) {
      if (j == col) continue;
      sub(si, sj++) = m(i, j);
    }
    ++si;
  }
  return sub.determinant();
}

bool AnglesInRange(const TetAngles& t) {
  for (double x : t.as_array()) {
    if (!std::isfinite(x) || x <= 0.0 || x >= kPi) return false;
  }
  return true;
}

}  // namespace

int edge_between(int i, int j) {
  for (int k = 0; k < 6; ++k) {
    const auto& e = kEdgeVertices[k];
    if ((e[0] == i && e[1] == j) || (e[0] == j && e[1] == i)) return k;
  }
  throw DomainError("edge_between: vertices must be distinct and in 0..3");
}

double max_angle_difference(const TetAngles& a, const TetAngles& b) {
  const auto x = a.as_array();
  const auto y = b.as_array();
  double worst = 0.0;
  for (int k = 0; k < 6; ++k) worst = std::max(worst, std::abs(x[k] - y[k]));
  return worst;
}

PrimeAngles prime_angles(double A, double B, double C) {
  return {(kPi + A - B - C) / 2.0, (kPi + B - A - C) / 2.0,
          (kPi + C - A - B) / 2.0};
}

double ideal_volume(const IdealTetAngles& t) {
  const double sum = t.alpha + t.beta + t.gamma;
  if (!(std::abs(sum - kPi) <= tol::kIdealAngleSum)) {
    std::ostringstream msg;
    msg << "ideal_volume: angle sum " << sum << " differs from pi";
    throw DomainError(msg.str());
  }
  return lobachevsky(t.alpha) + lobachevsky(t.beta) + lobachevsky(t.gamma);
}

std::array<IdealTetAngles, 3> prism_triangulation(double A, double B,
                                                  double C) {
  const PrimeAngles p = prime_angles(A, B, C);
  return {{{p.Aprime, p.Bprime, C},
           {A, p.Bprime, p.Cprime},
           {p.Cprime - C, B, kPi - p.Bprime}}};
}

double prism_volume(double A, double B, double C) {
  const PrimeAngles p = prime_angles(A, B, C);
  return lobachevsky(A) + lobachevsky(p.Aprime) + lobachevsky(B) +
         lobachevsky(p.Bprime) + lobachevsky(C) + lobachevsky(p.Cprime) -
         lobachevsky((kPi + A + B + C) / 2.0);
}

double three_quarter_volume(double A, double B, double C) {
  if (!(A + B + C > kPi)) {
    throw DomainError(
        "three_quarter_volume: A + B + C must exceed pi for a finite apex");
  }
  return 0.5 * prism_volume(A, B, C);
}

GramMatrix gram_matrix(const TetAngles& t) {
  GramMatrix g{Eigen::Matrix4d::Identity()};
  const auto angles = t.as_array();
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kEdgeFaces[k];
    g.m(i, j) = g.m(j, i) = -std::cos(angles[k]);
  }
  return g;
}

Eigen::Matrix4d gram_cofactors(const GramMatrix& g) {
  Eigen::Matrix4d c;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      c(i, j) = sign * Minor3(g.m, i, j);
    }
  }
  return c;
}

std::string_view to_string(TetraClass::Kind kind) {
  switch (kind) {
    case TetraClass::Kind::kFinite: return "Finite";
    case TetraClass::Kind::kIdeal: return "Ideal";
    case TetraClass::Kind::kHyperideal: return "Hyperideal";
    case TetraClass::Kind::kInvalid: return "Invalid";
  }
  return "Invalid";
}

TetraClass classify(const TetAngles& t) {
  TetraClass out;
  const GramMatrix g = gram_matrix(t);
  out.determinant = g.m.determinant();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(
      g.m, Eigen::EigenvaluesOnly);
  for (int i = 0; i < 4; ++i) out.eigenvalues[i] = solver.eigenvalues()(i);
  const Eigen::Matrix4d c = gram_cofactors(g);
  for (int i = 0; i < 4; ++i) out.vertex_cofactors[i] = c(i, i);

  if (!AnglesInRange(t) || solver.info() != Eigen::Success) {
    out.kind = TetraClass::Kind::kInvalid;
    return out;
  }
  const int negative = static_cast<int>(std::count_if(
      out.eigenvalues.begin(), out.eigenvalues.end(),
      [](double x) { return x < -tol::kEigenSignature; }));
  const int positive = static_cast<int>(std::count_if(
      out.eigenvalues.begin(), out.eigenvalues.end(),
      [](double x) { return x > tol::kEigenSignature; }));
  if (negative != 1 || positive != 3) {
    out.kind = TetraClass::Kind::kInvalid;
    return out;
  }

  bool any_ideal = false;
  bool any_hyperideal = false;
  for (double cii : out.vertex_cofactors) {
    if (cii <= -tol::kIdealCofactor) {
      any_hyperideal = true;
    } else if (cii < tol::kIdealCofactor) {
      any_ideal = true;
    }
  }
  if (any_hyperideal) {
    out.kind = TetraClass::Kind::kHyperideal;
  } else if (any_ideal) {
    out.kind = TetraClass::Kind::kIdeal;
  } else {
    out.kind = TetraClass::Kind::kFinite;
  }
  return out;
}

std::array<double, 6> edge_lengths(const TetAngles& t) {
  const TetraClass cls = classify(t);
  if (cls.kind != TetraClass::Kind::kFinite) {
    throw DomainError(std::string("edge_lengths: tetrahedron is ") +
                      std::string(to_string(cls.kind)) +
                      ", edge lengths need a Finite one");
  }
  const Eigen::Matrix4d c = gram_cofactors(gram_matrix(t));
  std::array<double, 6> out{};
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kEdgeVertices[k];
    const double ratio = c(i, j) / std::sqrt(c(i, i) * c(j, j));
    out[k] = std::acosh(std::max(1.0, ratio));
  }
  return out;
}

}  // namespace regge
