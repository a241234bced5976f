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

#include "regge_cli/suite.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "regge/error.hpp"
#include "regge/klein_oracle.hpp"
#include "regge/octahedra.hpp"
#include "regge/lobachevsky.hpp"
#include "regge/relabel.hpp"
#include "regge/sampling.hpp"
#include "regge/scissors.hpp"
#include "regge/tetrahedron.hpp"

namespace regge::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per criterion so criteria can run in any order.
std::uint64_t StreamSeed(std::uint64_t seed, int id) {
  return SplitMix(seed ^ SplitMix(static_cast<std::uint64_t>(id)));
}

// Running maximum that remembers NaN.
class Worst {
 public:
  void add(double x) {
    if (std::isnan(x)) {
      nan_ = true;
    } else if (x > value_) {
      value_ = x;
    }
  }
  double value() const {
    return nan_ ? std::numeric_limits<double>::quiet_NaN() : value_;
  }

 private:
  double value_ = 0.0;
  bool nan_ = false;
};

class CriterionBuilder {
 public:
  CriterionBuilder(int id) {
    r_.id = id;
    r_.title = criterion_title(id);
  }

  Worst& worst(const std::string& name, double tolerance) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return worsts_[i];
    }
    names_.push_back(name);
    tolerances_.push_back(tolerance);
    worsts_.emplace_back();
    return worsts_.back();
  }

  // Runs one sample; an exception fails every check of the criterion.
  void sample(const std::function<void()>& body) {
    ++r_.samples;
    try {
      body();
    } catch (const std::exception& e) {
      r_.failures.push_back("sample " + std::to_string(r_.samples) + ": " +
                            e.what());
    }
  }

  void set_acceptance(double rate) { r_.acceptance_rate = rate; }

  CriterionResult finish() {
    r_.pass = r_.failures.empty();
    for (std::size_t i = 0; i < names_.size(); ++i) {
      Check c;
      c.name = names_[i];
      c.value = worsts_[i].value();
      c.tolerance = tolerances_[i];
      c.pass = c.value <= c.tolerance;
      r_.pass = r_.pass && c.pass;
      r_.checks.push_back(c);
    }
    return r_;
  }

 private:
  CriterionResult r_;
  std::vector<std::string> names_;
  std::vector<double> tolerances_;
  std::deque<Worst> worsts_;
};

FiniteSampler MakeSampler(const SuiteConfig& c, int id, bool images) {
  SamplerConfig s;
  s.lo = c.box_lo;
  s.hi = c.box_hi;
  s.seed = StreamSeed(c.seed, id);
  s.require_finite_images = images;
  return FiniteSampler(s);
}

CriterionResult Lobachevsky(const SuiteConfig&) {
  CriterionBuilder b(1);
  constexpr int kGrid = 1000;
  const double step = 4.0 * kPi / (kGrid - 1);
  auto& cross = b.worst("series_vs_quadrature", 1e-10);
  auto& odd = b.worst("oddness", 1e-10);
  auto& period = b.worst("pi_periodicity", 1e-10);
  auto& dup = b.worst("duplication", 1e-10);
  double best_x = 0.0, best_v = -kInf;
  for (int i = 0; i < kGrid; ++i) {
    const double x = -2.0 * kPi + step * i;
    b.sample([&] {
      const double v = lobachevsky(x);
      cross.add(std::abs(v - lobachevsky_quadrature(x, 1e-12)));
      odd.add(std::abs(v + lobachevsky(-x)));
      period.add(std::abs(lobachevsky(x + kPi) - v));
      dup.add(std::abs(lobachevsky(2.0 * x) -
                       2.0 * (v + lobachevsky(x + kPi / 2.0))));
      if (v > best_v) {
        best_v = v;
        best_x = x;
      }
    });
  }
  b.worst("argmax_offset_from_pi_over_6", step)
      .add(std::abs(std::remainder(best_x - kPi / 6.0, kPi)));
  return b.finish();
}

CriterionResult Prism(const SuiteConfig& c) {
  CriterionBuilder b(2);
  std::mt19937_64 rng(StreamSeed(c.seed, 2));
  auto& gap = b.worst("prism_vs_triangulation", 1e-10);
  for (int i = 0; i < c.count; ++i) {
    double A, B, C;
    do {
      A = uniform(rng, 0.0, kPi);
      B = uniform(rng, 0.0, kPi);
      C = uniform(rng, 0.0, kPi);
    } while (!(A > 0.0 && B > 0.0 && C > 0.0 && A + B + C < kPi));
    b.sample([&] {
      double pieces = 0.0;
      for (const IdealTetAngles& t : prism_triangulation(A, B, C)) {
        pieces += ideal_volume(t);
      }
      gap.add(std::abs(prism_volume(A, B, C) - pieces));
    });
  }
  return b.finish();
}

CriterionResult Holonomy(const SuiteConfig& c) {
  CriterionBuilder b(3);
  FiniteSampler sampler = MakeSampler(c, 3, false);
  auto& linear = b.worst("linear_constraint_residual", 1e-10);
  auto& product = b.worst("holonomy_product_minus_one", 1e-10);
  auto& unit = b.worst("root_modulus_minus_one", 1e-9);
  auto& outer = b.worst("z0_z8_coefficients", 1e-12);
  for (int i = 0; i < c.count; ++i) {
    const TetAngles t = sampler.next();
    b.sample([&] {
      const OctahedralSolution s = solve_octahedra(t);
      for (double r : linear_constraint_residuals(s.o.angles, s.base)) {
        linear.add(std::abs(r));
      }
      for (double r : linear_constraint_residuals(s.o_dual.angles,
                                                  dual_base_angles(s.base))) {
        linear.add(std::abs(r));
      }
      product.add(std::abs(holonomy_product(s.o.angles) - 1.0));
      product.add(std::abs(holonomy_product(s.o_dual.angles) - 1.0));
      unit.add(s.roots.projection_distance);
      outer.add(std::abs(s.roots.z0_coeff));
      outer.add(std::abs(s.roots.z8_coeff));
    });
  }
  b.set_acceptance(sampler.acceptance_rate());
  return b.finish();
}

CriterionResult Coherence(const SuiteConfig& c) {
  CriterionBuilder b(4);
  FiniteSampler sampler = MakeSampler(c, 3, false);  // same set as 3
  auto& pairwise = b.worst("volume_routes_pairwise", 1e-9);
  auto& lemma_tet = b.worst("plus_root_gives_minus_volume", 1e-9);
  auto& lemma_oct = b.worst("plus_root_gives_minus_dual_octahedron", 1e-9);
  for (int i = 0; i < c.count; ++i) {
    const TetAngles t = sampler.next();
    b.sample([&] {
      const OctahedralSolution s = solve_octahedra(t);
      const std::array<double, 4> routes = {
          tet_volume(t), doubled_volume_sum(t) / 2.0,
          tet_volume_via_octahedra(t), tet_volume_via_u(t)};
      for (std::size_t p = 0; p < routes.size(); ++p) {
        for (std::size_t q = p + 1; q < routes.size(); ++q) {
          pairwise.add(std::abs(routes[p] - routes[q]));
        }
      }
      lemma_tet.add(std::abs(tet_volume(t, Root::kPlus) + routes[0]));
      lemma_oct.add(std::abs(
          octahedron_volume_at(s.bars, s.base, s.roots.Z_plus) +
          octahedron_volume(s.o_dual, dual_base_angles(s.base))));
    });
  }
  b.set_acceptance(sampler.acceptance_rate());
  return b.finish();
}

CriterionResult Oracle(const SuiteConfig& c) {
  CriterionBuilder b(5);
  FiniteSampler sampler = MakeSampler(c, 5, true);
  auto& quad = b.worst("formula_vs_klein_quadrature", 1e-5);
  auto& schlafli = b.worst("schlafli_relative_residual", 1e-3);
  auto& roundtrip = b.worst("klein_roundtrip_angle_error", 1e-8);
  auto& regge_b = b.worst("quadrature_regge_b_invariance", 2e-5);
  for (int i = 0; i < c.oracle_count; ++i) {
    const TetAngles t = sampler.next();
    b.sample([&] {
      const KleinTetra kt = klein_vertices(t);
      roundtrip.add(max_angle_difference(dihedral_angles(kt), t));
      const double vn = volume_numeric(kt, c.quadrature_tol);
      quad.add(std::abs(tet_volume(t) - vn));
      schlafli.add(schlafli_residual(t, c.schlafli_h).max_relative());
      const double vn_image = volume_numeric(
          klein_vertices(regge::regge(t, ReggeAxis::kB)), c.quadrature_tol);
      regge_b.add(std::abs(vn - vn_image));
    });
  }
  b.set_acceptance(sampler.acceptance_rate());
  return b.finish();
}

CriterionResult Invariance(const SuiteConfig& c) {
  CriterionBuilder b(6);
  FiniteSampler sampler = MakeSampler(c, 6, true);
  auto& volume = b.worst("volume_gap", 1e-9);
  auto& involution = b.worst("involution_error", 1e-12);
  auto& conjugation = b.worst("conjugation_error", 0.0);
  for (int i = 0; i < c.count; ++i) {
    const TetAngles t = sampler.next();
    b.sample([&] {
      const double v = tet_volume(t);
      for (ReggeAxis x : {ReggeAxis::kA, ReggeAxis::kB, ReggeAxis::kC}) {
        const TetAngles image = regge::regge(t, x);
        volume.add(std::abs(v - tet_volume(image)));
        involution.add(max_angle_difference(regge::regge(image, x), t));
        const Relabeling sigma = regge_conjugation(x);
        const TetAngles via_b = relabel(
            regge::regge(relabel(t, sigma), ReggeAxis::kB), sigma.inverse());
        conjugation.add(max_angle_difference(via_b, image));
      }
    });
  }
  b.set_acceptance(sampler.acceptance_rate());
  return b.finish();
}

CriterionResult Scissors(const SuiteConfig& c) {
  CriterionBuilder b(7);
  FiniteSampler sampler = MakeSampler(c, 7, true);
  auto& multiset = b.worst("sorted_multiset_distance", 1e-9);
  auto& slot = b.worst("ba_dc_swap_slot_distance", 1e-9);
  auto& volume = b.worst("volume_gap", 1e-9);
  auto& halves = b.worst("half_copy_sum_minus_volume", 1e-10);
  auto& failed = b.worst("failed_reports", 0.0);
  for (int i = 0; i < c.count; ++i) {
    const TetAngles t = sampler.next();
    b.sample([&] {
      const ScissorsReport r = verify_scissors(t, ReggeAxis::kB);
      if (!r.pass) failed.add(1.0);
      multiset.add(r.multiset_distance);
      slot.add(r.slot_distance);
      volume.add(r.volume_gap);
      for (const TetAngles& x : {t, r.image}) {
        const HalfDecomposition h = halve(decompose(x));
        const double v = tet_volume(x);
        halves.add(std::abs(h.copy_volume(0) - v));
        halves.add(std::abs(h.copy_volume(1) - v));
      }
    });
  }
  b.set_acceptance(sampler.acceptance_rate());
  return b.finish();
}

CriterionResult SpotChecks(const SuiteConfig&) {
  CriterionBuilder b(8);
  const double third = kPi / 3.0;
  b.sample([&] {
    const double v = ideal_volume({third, third, third});
    b.worst("regular_ideal_vs_quadrature", 1e-9)
        .add(std::abs(v - 3.0 * lobachevsky_quadrature(third, 1e-12)));
    // Seven printed decimals: half a unit in the last place.
    b.worst("regular_ideal_vs_1.0149416", 5e-8).add(std::abs(v - 1.0149416));
  });
  constexpr int kGrid = 200;
  auto& half = b.worst("half_isosceles_volume_vs_L", 1e-10);
  for (int i = 1; i < kGrid; ++i) {
    const double theta = (kPi / 2.0) * i / kGrid;
    b.sample([&] {
      const double whole =
          ideal_volume({2.0 * theta, kPi / 2.0 - theta, kPi / 2.0 - theta});
      half.add(std::abs(whole / 2.0 - lobachevsky_quadrature(theta, 1e-12)));
    });
  }
  return b.finish();
}

}  // namespace

std::string criterion_title(int id) {
  switch (id) {
    case 1: return "Lobachevsky cross-check";
    case 2: return "prism consistency";
    case 3: return "holonomy system";
    case 4: return "volume formula coherence";
    case 5: return "oracle agreement";
    case 6: return "Regge invariance";
    case 7: return "central scissors test";
    case 8: return "known-value spot checks";
    case 9: return "determinism";
  }
  return "unknown";
}

CriterionResult run_criterion(int id, const SuiteConfig& config) {
  switch (id) {
    case 1: return Lobachevsky(config);
    case 2: return Prism(config);
    case 3: return Holonomy(config);
    case 4: return Coherence(config);
    case 5: return Oracle(config);
    case 6: return Invariance(config);
    case 7: return Scissors(config);
    case 8: return SpotChecks(config);
  }
  throw DomainError("run_criterion: criterion id must be in 1..8");
}

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport report;
  report.config = config;
  nlohmann::json first = nlohmann::json::array();
  for (int id = 1; id <= 8; ++id) {
    report.criteria.push_back(run_criterion(id, config));
    first.push_back(to_json(report.criteria.back()));
  }
  if (config.check_determinism) {
    CriterionBuilder b(9);
    nlohmann::json second = nlohmann::json::array();
    for (int id = 1; id <= 8; ++id) second.push_back(to_json(run_criterion(id, config)));
    b.sample([&] {});
    b.worst("differing_report_bytes", 0.0)
        .add(first.dump() == second.dump() ? 0.0 : 1.0);
    report.criteria.push_back(b.finish());
  }
  report.pass = true;
  for (const CriterionResult& r : report.criteria) {
    report.pass = report.pass && r.pass;
  }
  return report;
}

nlohmann::json to_json(const CriterionResult& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"value", c.value},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  return {{"id", r.id},
          {"title", r.title},
          {"samples", r.samples},
          {"acceptance_rate", r.acceptance_rate},
          {"checks", checks},
          {"failures", r.failures},
          {"pass", r.pass}};
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json criteria = nlohmann::json::array();
  for (const CriterionResult& c : r.criteria) criteria.push_back(to_json(c));
  return {{"command", "suite"},
          {"config",
           {{"count", r.config.count},
            {"oracle_count", r.config.oracle_count},
            {"seed", r.config.seed},
            {"box", {r.config.box_lo, r.config.box_hi}},
            {"quadrature_tol", r.config.quadrature_tol},
            {"schlafli_h", r.config.schlafli_h}}},
          {"criteria", criteria},
          {"pass", r.pass}};
}

std::string summary_line(const CriterionResult& r) {
  std::string line = "criterion " + std::to_string(r.id) + " " +
                     (r.pass ? "PASS" : "FAIL") + " " + r.title;
  for (const Check& c : r.checks) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "; %s %.3e <= %.1e", c.name.c_str(),
                  c.value, c.tolerance);
    line += buf;
  }
  if (!r.failures.empty()) line += "; first failure: " + r.failures.front();
  return line;
}

}  // namespace regge::cli
