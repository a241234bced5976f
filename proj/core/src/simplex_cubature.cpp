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

#include "regge/simplex_cubature.hpp"

#include <cmath>
#include <algorithm>
#include <queue>
#include <vector>

#include <Eigen/Geometry>

#include "regge/error.hpp"

namespace regge {
namespace {

struct RulePoint {
  std::array<double, 4> bary;
  double w7 = 0.0;
  double w5 = 0.0;
};

void Compositions(int total, int parts, std::array<int, 4>& cur, int at,
                  std::vector<std::array<int, 4>>& out) {
  if (at == parts - 1) {
    cur[at] = total;
    out.push_back(cur);
    return;
  }
  for (int a = 0; a <= total; ++a) {
    cur[at] = a;
    Compositions(total - a, parts, cur, at + 1, out);
  }
}

double Factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Grundmann-Moller rules for s = 3 (degree 7) and s = 2 (degree 5) in
// dimension 3. Points of the smaller rule coincide with points of the
// larger one, so they share one point list.
std::vector<RulePoint> BuildRule() {
  constexpr int n = 3;
  std::vector<RulePoint> pts;
  for (int s : {3, 2}) {
    const int d = 2 * s + 1;
    for (int i = 0; i <= s; ++i) {
      const double w = ((i % 2) ? -1.0 : 1.0) * std::pow(2.0, -2 * s) *
                       std::pow(d + n - 2 * i, d) /
                       (Factorial(i) * Factorial(d + n - i));
      std::vector<std::array<int, 4>> betas;
      std::array<int, 4> cur{};
      Compositions(s - i, 4, cur, 0, betas);
      for (const auto& b : betas) {
        std::array<double, 4> bary{};
        for (int j = 0; j < 4; ++j) {
          bary[j] = (2.0 * b[j] + 1.0) / (d + n - 2 * i);
        }
        if (s == 3) {
          pts.push_back({bary, w, 0.0});
          continue;
        }
        bool found = false;
        for (RulePoint& p : pts) {
          double gap = 0.0;
          for (int j = 0; j < 4; ++j) gap += std::abs(p.bary[j] - bary[j]);
          if (gap < 1e-14) {
            p.w5 += w;
            found = true;
            break;
          }
        }
        if (!found) throw NumericalError("cubature rule construction", 0.0);
      }
    }
  }
  return pts;
}

const std::vector<RulePoint>& Rule() {
  static const std::vector<RulePoint> rule = BuildRule();
  return rule;
}

struct Region {
  Simplex3 s;
  double value = 0.0;
  double error = 0.0;
  long id = 0;
};

struct ByError {
  bool operator()(const Region& a, const Region& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.id > b.id;
  }
};

Region Evaluate(const std::function<double(const Eigen::Vector3d&)>& f,
                const Simplex3& s, long id, int& evaluations) {
  const double scale = 6.0 * simplex_volume(s);
  double q7 = 0.0, q5 = 0.0;
  for (const RulePoint& p : Rule()) {
    const Eigen::Vector3d x = p.bary[0] * s[0] + p.bary[1] * s[1] +
                              p.bary[2] * s[2] + p.bary[3] * s[3];
    const double fx = f(x);
    q7 += p.w7 * fx;
    q5 += p.w5 * fx;
  }
  evaluations += static_cast<int>(Rule().size());
  return {s, scale * q7, scale * std::abs(q7 - q5), id};
}

}  // namespace

double simplex_volume(const Simplex3& s) {
  return std::abs((s[1] - s[0]).dot((s[2] - s[0]).cross(s[3] - s[0]))) / 6.0;
}

CubatureResult integrate_simplex(
    const std::function<double(const Eigen::Vector3d&)>& f, const Simplex3& s,
    const CubatureOptions& options) {
  if (!(options.abs_tol > 0.0)) {
    throw DomainError("integrate_simplex: tolerance must be positive");
  }
  CubatureResult out;
  long next_id = 0;
  std::priority_queue<Region, std::vector<Region>, ByError> heap;
  heap.push(Evaluate(f, s, next_id++, out.evaluations));
  double total_error = heap.top().error;

  while (total_error > options.abs_tol) {
    if (static_cast<int>(heap.size()) >= options.max_regions) {
      throw NumericalError("integrate_simplex: region limit reached",
                           total_error);
    }
    const Region worst = heap.top();
    heap.pop();
    int a = 0, b = 1;
    double longest = -1.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const double len = (worst.s[i] - worst.s[j]).squaredNorm();
        if (len > longest) {
          longest = len;
          a = i;
          b = j;
        }
      }
    }
    const Eigen::Vector3d mid = 0.5 * (worst.s[a] + worst.s[b]);
    Simplex3 left = worst.s, right = worst.s;
    left[b] = mid;
    right[a] = mid;
    const Region l = Evaluate(f, left, next_id++, out.evaluations);
    const Region r = Evaluate(f, right, next_id++, out.evaluations);
    total_error += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
  }

  // Re-sum in creation order so the result does not depend on heap layout.
  std::vector<Region> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Region& x, const Region& y) { return x.id < y.id; });
  for (const Region& r : all) {
    out.value += r.value;
    out.error += r.error;
  }
  out.regions = static_cast<int>(all.size());
  return out;
}

}  // namespace regge
