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

#include "regge/klein_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>

#include "regge/error.hpp"
#include "regge/octahedra.hpp"

namespace regge {
namespace {

const Eigen::Matrix4d kJ = Eigen::Vector4d(1, 1, 1, -1).asDiagonal();

double Minkowski(const Eigen::Vector4d& x, const Eigen::Vector4d& y) {
  return x.head<3>().dot(y.head<3>()) - x(3) * y(3);
}

Eigen::Vector3d ToKlein(const Eigen::Vector4d& v) { return v.head<3>() / v(3); }

// Boost taking the future unit timelike vector p to (0, 0, 0, 1).
Eigen::Matrix4d BoostToOrigin(const Eigen::Vector4d& p) {
  const Eigen::Vector3d ps = p.head<3>();
  Eigen::Matrix4d b = Eigen::Matrix4d::Identity();
  b.topLeftCorner<3, 3>() += ps * ps.transpose() / (1.0 + p(3));
  b.topRightCorner<3, 1>() = -ps;
  b.bottomLeftCorner<1, 3>() = -ps.transpose();
  b(3, 3) = p(3);
  return b;
}

KleinTetra Gauge(const std::array<Eigen::Vector4d, 4>& hv,
                 const TetAngles& source) {
  const Eigen::Matrix4d boost = BoostToOrigin(hv[0]);
  std::array<Eigen::Vector3d, 4> u;
  for (int k = 0; k < 4; ++k) u[k] = (boost * hv[k]).head<3>();

  const Eigen::Vector3d e1 = u[1].normalized();
  const Eigen::Vector3d e2 = (u[2] - u[2].dot(e1) * e1).normalized();
  Eigen::Vector3d e3 = e1.cross(e2);
  if (u[3].dot(e3) < 0.0) e3 = -e3;  // a reflection keeps every angle
  Eigen::Matrix3d r;
  r.row(0) = e1.transpose();
  r.row(1) = e2.transpose();
  r.row(2) = e3.transpose();

  KleinTetra kt;
  kt.source = source;
  for (int k = 0; k < 4; ++k) {
    Eigen::Vector4d v;
    v.head<3>() = r * u[k];
    v(3) = (boost * hv[k])(3);
    kt.vertices[k] = ToKlein(v);
  }
  kt.vertices[0].setZero();
  kt.vertices[1].tail<2>().setZero();
  kt.vertices[2](2) = 0.0;
  return kt;
}

std::array<Eigen::Vector4d, 4> Lift(const KleinTetra& kt) {
  std::array<Eigen::Vector4d, 4> hv;
  for (int k = 0; k < 4; ++k) hv[k] = hyperboloid_point(kt.vertices[k]);
  return hv;
}

}  // namespace

Eigen::Vector4d hyperboloid_point(const Eigen::Vector3d& x) {
  const double q = 1.0 - x.squaredNorm();
  if (!(q > 0.0)) throw DomainError("point outside the Klein ball");
  Eigen::Vector4d v;
  v.head<3>() = x;
  v(3) = 1.0;
  return v / std::sqrt(q);
}

KleinTetra klein_vertices(const TetAngles& t) {
  const TetraClass cls = classify(t);
  if (cls.kind != TetraClass::Kind::kFinite) {
    throw DomainError("klein_vertices: tetrahedron is " +
                      std::string(to_string(cls.kind)) + ", not Finite");
  }
  const Eigen::Matrix4d g = gram_matrix(t).m;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(g);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("klein_vertices: eigen-decomposition failed", 0.0);
  }
  const Eigen::Vector4d lambda = eig.eigenvalues();  // ascending
  const Eigen::Matrix4d q = eig.eigenvectors();

  // Rows of n are the face normals: n J n^T = G.
  Eigen::Matrix4d n;
  for (int k = 0; k < 3; ++k) n.col(k) = q.col(k + 1) * std::sqrt(lambda(k + 1));
  n.col(3) = q.col(0) * std::sqrt(-lambda(0));

  // (n J) V = I: column k of V is orthogonal to every face but face k.
  const Eigen::Matrix4d v = (n * kJ).inverse();
  std::array<Eigen::Vector4d, 4> hv;
  for (int k = 0; k < 4; ++k) {
    Eigen::Vector4d x = v.col(k);
    const double norm2 = -Minkowski(x, x);
    if (!(norm2 > 0.0)) {
      throw NumericalError("klein_vertices: vertex is not timelike", norm2);
    }
    x /= std::sqrt(norm2);
    if (x(3) < 0.0) x = -x;
    hv[k] = x;
  }

  KleinTetra kt = Gauge(hv, t);
  const double err = max_angle_difference(dihedral_angles(kt), t);
  if (!(err < 1e-8)) {
    throw NumericalError("klein_vertices: round-trip angle error too large",
                         err);
  }
  return kt;
}

TetAngles dihedral_angles(const KleinTetra& kt) {
  const auto hv = Lift(kt);
  Eigen::Matrix4d v;
  for (int k = 0; k < 4; ++k) v.col(k) = hv[k];
  // Row k of -(V^{-1} J) is the outward normal of face k: <m_k, v_k> = -1.
  const Eigen::Matrix4d m = -(v.inverse() * kJ);
  std::array<double, 6> out{};
  for (int e = 0; e < 6; ++e) {
    int faces[2], f = 0;
    for (int k = 0; k < 4; ++k) {
      if (k != kEdgeVertices[e][0] && k != kEdgeVertices[e][1]) faces[f++] = k;
    }
    const Eigen::Vector4d a = m.row(faces[0]).transpose();
    const Eigen::Vector4d b = m.row(faces[1]).transpose();
    const double c =
        -Minkowski(a, b) / std::sqrt(Minkowski(a, a) * Minkowski(b, b));
    out[e] = std::acos(std::clamp(c, -1.0, 1.0));
  }
  return TetAngles::from_array(out);
}

double hyperbolic_distance(const Eigen::Vector3d& p,
                           const Eigen::Vector3d& q) {
  const double c = (1.0 - p.dot(q)) /
                   std::sqrt((1.0 - p.squaredNorm()) * (1.0 - q.squaredNorm()));
  return std::acosh(std::max(1.0, c));
}

Eigen::Matrix4d lorentz_boost(const Eigen::Vector3d& direction,
                              double rapidity) {
  const Eigen::Vector3d d = direction.normalized();
  Eigen::Matrix4d b = Eigen::Matrix4d::Identity();
  b.topLeftCorner<3, 3>() += (std::cosh(rapidity) - 1.0) * d * d.transpose();
  b.topRightCorner<3, 1>() = std::sinh(rapidity) * d;
  b.bottomLeftCorner<1, 3>() = std::sinh(rapidity) * d.transpose();
  b(3, 3) = std::cosh(rapidity);
  return b;
}

KleinTetra apply_isometry(const KleinTetra& kt, const Eigen::Matrix4d& L) {
  const auto hv = Lift(kt);
  KleinTetra out;
  out.source = kt.source;
  for (int k = 0; k < 4; ++k) out.vertices[k] = ToKlein(L * hv[k]);
  return out;
}

KleinTetra centered(const KleinTetra& kt) {
  const auto hv = Lift(kt);
  Eigen::Vector4d c = hv[0] + hv[1] + hv[2] + hv[3];
  c /= std::sqrt(-Minkowski(c, c));
  return apply_isometry(kt, BoostToOrigin(c));
}

CubatureResult volume_numeric_detail(const KleinTetra& kt, double tol,
                                     int max_regions) {
  if (!(tol > 0.0)) throw DomainError("volume_numeric: tol must be positive");
  for (const Eigen::Vector3d& x : kt.vertices) {
    if (!(x.squaredNorm() < 1.0)) {
      throw DomainError("volume_numeric: vertex outside the Klein ball");
    }
  }
  const auto density = [](const Eigen::Vector3d& x) {
    const double q = 1.0 - x.squaredNorm();
    return 1.0 / (q * q);
  };
  return integrate_simplex(density, kt.vertices, {tol, max_regions});
}

double volume_numeric(const KleinTetra& kt, double tol) {
  return volume_numeric_detail(kt, tol).value;
}

double SchlafliResult::max_relative() const {
  return *std::max_element(relative.begin(), relative.end());
}

SchlafliResult schlafli_residual(const TetAngles& t, double h) {
  if (!(h >= 1e-7 && h <= 1e-3)) {
    throw DomainError("schlafli_residual: h must lie in [1e-7, 1e-3]");
  }
  if (classify(t).kind != TetraClass::Kind::kFinite) {
    throw DomainError("schlafli_residual: tetrahedron is not Finite");
  }
  const auto perturbed_finite = [&](double step) {
    for (int i = 0; i < 6; ++i) {
      for (double sgn : {-1.0, 1.0}) {
        auto a = t.as_array();
        a[i] += sgn * step;
        if (classify(TetAngles::from_array(a)).kind !=
            TetraClass::Kind::kFinite) {
          return false;
        }
      }
    }
    return true;
  };
  SchlafliResult r;
  r.h = h;
  if (!perturbed_finite(r.h)) {
    r.h = h / 10.0;
    if (!perturbed_finite(r.h)) {
      throw DomainError("schlafli_residual: perturbation leaves Finite class");
    }
  }
  const auto lengths = edge_lengths(t);
  for (int i = 0; i < 6; ++i) {
    auto plus = t.as_array(), minus = t.as_array();
    plus[i] += r.h;
    minus[i] -= r.h;
    r.derivative[i] = (tet_volume(TetAngles::from_array(plus)) -
                       tet_volume(TetAngles::from_array(minus))) /
                      (2.0 * r.h);
    r.half_length[i] = 0.5 * lengths[i];
    r.residual[i] = std::abs(r.derivative[i] + r.half_length[i]);
    r.relative[i] = r.residual[i] / r.half_length[i];
  }
  return r;
}

}  // namespace regge
