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

#ifndef REGGE_LOBACHEVSKY_HPP_
#define REGGE_LOBACHEVSKY_HPP_

namespace regge {

enum class LobachevskyMethod { kSeries, kQuadrature };

struct LobachevskyEval {
  double theta = 0.0;
  double value = 0.0;  // cubic hyperbolic length units
  LobachevskyMethod method = LobachevskyMethod::kSeries;
};

/// Lobachevsky function  L(theta) = -int_0^theta log|2 sin u| du.
///
/// Odd, pi-periodic, maximal at pi/6. Evaluated as L(theta) = Cl2(2 theta)/2
/// after reducing 2 theta into [-pi, pi], using the Bernoulli-accelerated
/// Clausen series; absolute error below 1e-12 for every finite argument.
/// Throws DomainError on non-finite input.
double lobachevsky(double theta);

/// Independent quadrature of the defining integral, split at the log
/// singularities u = k pi and integrated with a tanh-sinh rule.
/// Throws DomainError if theta is not finite or tol <= 0, NumericalError
/// (carrying the achieved error) if tol cannot be met.
double lobachevsky_quadrature(double theta, double tol);

LobachevskyEval evaluate_lobachevsky(double theta, LobachevskyMethod method,
                                     double tol = 1e-12);

}  // namespace regge

#endif  // REGGE_LOBACHEVSKY_HPP_
