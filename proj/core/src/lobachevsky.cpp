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

#include "regge/lobachevsky.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "regge/error.hpp"

namespace regge {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSeriesTerms = 40;

// zeta(2k) for k = 1..kSeriesTerms. The first five are closed forms; the
// rest converge after a handful of terms of the defining sum.
std::array<double, kSeriesTerms + 1> MakeEvenZeta() {
  std::array<double, kSeriesTerms + 1> z{};
  const double p2 = kPi * kPi;
  z[1] = p2 / 6.0;
  z[2] = p2 * p2 / 90.0;
  z[3] = p2 * p2 * p2 / 945.0;
  z[4] = p2 * p2 * p2 * p2 / 9450.0;
  z[5] = p2 * p2 * p2 * p2 * p2 / 93555.0;
  for (int k = 6; k <= kSeriesTerms; ++k) {
    double sum = 1.0;
    for (int n = 2; n <= 64; ++n) {
      const double term = std::pow(static_cast<double>(n), -2.0 * k);
      sum += term;
      if (term < 1e-18) break;
    }
    z[k] = sum;
  }
  return z;
}

const std::array<double, kSeriesTerms + 1>& EvenZeta() {
  static const auto table = MakeEvenZeta();
  return table;
}

// Clausen function Cl2(x) for |x| <= pi:
//   Cl2(x) = x - x log|x| + x * sum_k zeta(2k) / (k (2k+1)) (x / 2 pi)^{2k}
// The ratio (x / 2 pi)^2 <= 1/4, so 40 terms are far past double precision.
double ClausenReduced(double x) {
  if (x == 0.0) return 0.0;
  const auto& zeta = EvenZeta();
  const double r2 = (x / (2.0 * kPi)) * (x / (2.0 * kPi));
  double power = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= kSeriesTerms; ++k) {
    power *= r2;
    const double term = zeta[k] * power / (k * (2.0 * k + 1.0));
    sum += term;
    if (term < 1e-19 * std::abs(sum)) break;
  }
  return x - x * std::log(std::abs(x)) + x * sum;
}

// int_lo^hi log|2 sin u| du for 0 <= lo < hi <= pi/2, where the only
// singularity is the integrable log at u = 0.
double IntegrateLogTwoSin(double lo, double hi, double tol, double* error) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  double l1 = 0.0;
  const double value = integrator.integrate(
      [](double u) { return std::log(2.0 * std::sin(u)); }, lo, hi, tol,
      error, &l1);
  *error *= std::max(1.0, l1);
  return value;
}

}  // namespace

double lobachevsky(double theta) {
  if (!std::isfinite(theta)) {
    throw DomainError("lobachevsky: argument must be finite");
  }
  // L has period pi, so Cl2(2 theta) has period 2 pi in x = 2 theta.
  double x = std::remainder(2.0 * theta, 2.0 * kPi);  // in [-pi, pi]
  return 0.5 * ClausenReduced(x);
}

double lobachevsky_quadrature(double theta, double tol) {
  if (!std::isfinite(theta)) {
    throw DomainError("lobachevsky_quadrature: argument must be finite");
  }
  if (!(tol > 0.0)) {
    throw DomainError("lobachevsky_quadrature: tolerance must be positive");
  }
  const double sign = theta < 0.0 ? -1.0 : 1.0;
  const double span = std::abs(theta);  // integrand is even in u
  const double periods = std::floor(span / kPi);
  const double rest = span - periods * kPi;
  const double half_pi = 0.5 * kPi;
  // Every integral is mapped onto [0, pi/2] through the reflection
  // u -> pi - u, under which |sin u| is invariant.
  const double inner_tol = std::min(0.05 * tol, 1e-3);

  double achieved = 0.0;
  double integral = 0.0;
  double err = 0.0;
  if (periods > 0.0) {
    const double period = 2.0 * IntegrateLogTwoSin(0.0, half_pi, inner_tol, &err);
    integral += periods * period;
    achieved += 2.0 * periods * err;
  }
  if (rest > 0.0) {
    if (rest <= half_pi) {
      integral += IntegrateLogTwoSin(0.0, rest, inner_tol, &err);
      achieved += err;
    } else {
      integral += IntegrateLogTwoSin(0.0, half_pi, inner_tol, &err);
      achieved += err;
      integral += IntegrateLogTwoSin(kPi - rest, half_pi, inner_tol, &err);
      achieved += err;
    }
  }

  if (!(achieved <= tol) || !std::isfinite(integral)) {
    std::ostringstream msg;
    msg << "lobachevsky_quadrature: achieved error " << achieved
        << " exceeds tolerance " << tol;
    throw NumericalError(msg.str(), achieved);
  }
  return -sign * integral;
}

LobachevskyEval evaluate_lobachevsky(double theta, LobachevskyMethod method,
                                     double tol) {
  LobachevskyEval out;
  out.theta = theta;
  out.method = method;
  out.value = method == LobachevskyMethod::kSeries
                  ? lobachevsky(theta)
                  : lobachevsky_quadrature(theta, tol);
  return out;
}

}  // namespace regge
