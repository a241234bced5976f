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

#include "regge_cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "regge/error.hpp"
#include "regge/klein_oracle.hpp"
#include "regge/octahedra.hpp"
#include "regge/scissors.hpp"
#include "regge/tolerances.hpp"
#include "regge_cli/suite.hpp"

namespace regge::cli {
namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

struct Options {
  std::string angles;
  std::optional<double> equiangular;
  bool degrees = false;
  std::string format = "json";
  std::string out_file;
  std::string which = "b";
  std::string firepole = "aa";
  int max_size = 64;
  double volume_tol = tol::kVolumeMatch;
  double match_tol = tol::kScissorsMatch;
  double quadrature_tol = 1e-6;
  double h = 1e-5;
  int count = 100;
  int oracle_count = 25;
  std::optional<std::uint64_t> seed;
  bool no_determinism = false;
};

// Thrown by commands whose verification failed after printing a report.
struct VerificationFailed {
  json report;
};

json AnglesJson(const TetAngles& t, double tolerance = 0.0) {
  const auto a = t.as_array();
  json out = json::object();
  for (int k = 0; k < 6; ++k) {
    out[std::string(kEdgeNames[k])] = measured(a[k], tolerance);
  }
  return out;
}

json ClassJson(const TetraClass& c) {
  json eig = json::array(), cof = json::array();
  for (double e : c.eigenvalues) eig.push_back(measured(e, tol::kEigenSignature));
  for (double v : c.vertex_cofactors) {
    cof.push_back(measured(v, tol::kIdealCofactor));
  }
  return {{"kind", std::string(to_string(c.kind))},
          {"determinant", measured(c.determinant, tol::kEigenSignature)},
          {"eigenvalues", eig},
          {"vertex_cofactors", cof}};
}

TetAngles InputAngles(const Options& o) {
  if (o.equiangular) {
    if (!o.angles.empty()) {
      throw InputError("--angles", "give either --angles or --equiangular");
    }
    const double theta = o.degrees ? *o.equiangular * kPi / 180.0
                                   : *o.equiangular;
    if (!(theta > 0.0 && theta < kPi)) {
      throw InputError("--equiangular", "angle is outside (0, pi)");
    }
    return TetAngles::equiangular(theta);
  }
  if (o.angles.empty()) {
    throw InputError("--angles", "missing --angles or --equiangular");
  }
  return parse_angles(o.angles, o.degrees);
}

json InputJson(const Options& o, const TetAngles& t) {
  return {{"unit", "radians"},
          {"converted_from_degrees", o.degrees},
          {"angles", AnglesJson(t)}};
}

// Finite-only commands reject other classes as input errors.
TetraClass RequireFinite(const TetAngles& t, const std::string& command) {
  const TetraClass c = classify(t);
  if (c.kind != TetraClass::Kind::kFinite) {
    throw InputError("angles", command + " needs a Finite tetrahedron; input is " +
                                   std::string(to_string(c.kind)));
  }
  return c;
}

ReggeAxis ParseAxis(const std::string& s) {
  if (s == "a") return ReggeAxis::kA;
  if (s == "b") return ReggeAxis::kB;
  if (s == "c") return ReggeAxis::kC;
  throw InputError("--which", "--which must be a, b or c");
}

Firepole ParseFirepole(const std::string& s) {
  if (s == "aa") return Firepole::kAA;
  if (s == "bb") return Firepole::kBB;
  if (s == "cc") return Firepole::kCC;
  throw InputError("--firepole", "--firepole must be aa, bb or cc");
}

json CmdVolume(const Options& o) {
  const TetAngles t = InputAngles(o);
  const TetraClass c = RequireFinite(t, "volume");
  const OctahedralSolution s = solve_octahedra(t);
  const HolonomyRoots& h = s.roots;
  return {
      {"command", "volume"},
      {"input", InputJson(o, t)},
      {"classification", ClassJson(c)},
      {"volume", measured(s.volume, tol::kVolumeMatch)},
      {"routes",
       {{"half_slot_sum", measured(doubled_volume_sum(t) / 2.0, tol::kVolumeMatch)},
        {"octahedra", measured(tet_volume_via_octahedra(t), tol::kVolumeMatch)},
        {"u_minus_prisms", measured(tet_volume_via_u(t), tol::kVolumeMatch)}}},
      {"holonomy",
       {{"Z_minus", measured(h.Z_minus, tol::kDegenerateRoots)},
        {"Z_plus", measured(h.Z_plus, tol::kDegenerateRoots)},
        {"unit_circle_distance", measured(h.projection_distance, tol::kUnitProjection)},
        {"z0_coefficient_abs", measured(std::abs(h.z0_coeff), 1e-12)},
        {"z8_coefficient_abs", measured(std::abs(h.z8_coeff), 1e-12)},
        {"volume_plus_root", measured(h.volume_plus, tol::kVolumeMatch)}}}};
}

json CmdDecompose(const Options& o) {
  const TetAngles t = InputAngles(o);
  RequireFinite(t, "decompose");
  const Decomposition d = decompose(t, ParseFirepole(o.firepole));
  json pieces = json::array();
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const LPiece& p = d.pieces[i];
    pieces.push_back({{"index", i},
                      {"slot", piece_name(p.slot)},
                      {"raw_angle", measured(p.raw_angle, tol::kNullPiece)},
                      {"canonical_angle", measured(p.canonical_angle, tol::kNullPiece)},
                      {"signed_volume", measured(p.signed_volume(), tol::kLobachevsky)},
                      {"null_piece", p.null_piece}});
  }
  return {{"command", "decompose"},
          {"input", InputJson(o, t)},
          {"firepole", o.firepole},
          {"pieces", pieces},
          {"sum", measured(d.total_volume(), tol::kVolumeMatch)},
          {"twice_volume", measured(2.0 * tet_volume(t), tol::kVolumeMatch)}};
}

json VolumeOrNull(const TetAngles& t) {
  if (classify(t).kind != TetraClass::Kind::kFinite) return nullptr;
  return measured(tet_volume(t), tol::kVolumeMatch);
}

json CmdRegge(const Options& o) {
  const TetAngles t = InputAngles(o);
  const ReggeTransform r{ParseAxis(o.which)};
  const TetAngles image = r.apply(t);
  return {{"command", "regge"},
          {"which", o.which},
          {"input", InputJson(o, t)},
          {"s", measured(r.s_value(t), 0.0)},
          {"image", AnglesJson(image, 1e-15)},
          {"input_class", std::string(to_string(classify(t).kind))},
          {"image_class", std::string(to_string(classify(image).kind))},
          {"input_volume", VolumeOrNull(t)},
          {"image_volume", VolumeOrNull(image)}};
}

json CmdOrbit(const Options& o) {
  const TetAngles t = InputAngles(o);
  if (o.max_size < 1) throw InputError("--max-size", "--max-size must be >= 1");
  const OrbitResult orbit = regge_orbit(t, o.max_size);
  json members = json::array();
  for (std::size_t i = 0; i < orbit.members.size(); ++i) {
    const TetAngles& m = orbit.members[i];
    members.push_back(
        {{"angles", AnglesJson(m, 1e-15)},
         {"class", std::string(to_string(classify(m).kind))},
         {"volume", std::isnan(orbit.volumes[i])
                        ? json(nullptr)
                        : measured(orbit.volumes[i], tol::kVolumeMatch)}});
  }
  return {{"command", "orbit"},
          {"input", InputJson(o, t)},
          {"dedup_tolerance", tol::kOrbitDedup},
          {"size", orbit.members.size()},
          {"truncated", orbit.truncated},
          {"members", members}};
}

json CmdVerify(const Options& o) {
  const TetAngles t = InputAngles(o);
  const ReggeAxis axis = ParseAxis(o.which);
  RequireFinite(t, "verify");
  const TetAngles image = regge::regge(t, axis);
  if (classify(image).kind != TetraClass::Kind::kFinite) {
    throw InputError("angles", "verify needs a Finite image; R_" + o.which +
                                   "(T) is " +
                                   std::string(to_string(classify(image).kind)));
  }
  const ScissorsReport r = verify_scissors(t, axis, o.volume_tol, o.match_tol);
  json perm = json::array();
  for (int p : r.permutation) perm.push_back(p);
  json report = {
      {"command", "verify"},
      {"which", o.which},
      {"input", InputJson(o, t)},
      {"image", AnglesJson(r.image, 1e-15)},
      {"source_class", r.source_class},
      {"image_class", r.image_class},
      {"volume_source", measured(r.volume_source, o.volume_tol)},
      {"volume_image", measured(r.volume_image, o.volume_tol)},
      {"volume_gap", measured(r.volume_gap, o.volume_tol)},
      {"multiset_distance", measured(r.multiset_distance, o.match_tol)},
      {"slot_distance", measured(r.slot_distance, o.match_tol)},
      {"conjugation_error", measured(r.conjugation_error, 1e-12)},
      {"matching_permutation", perm},
      {"ba_dc_swap_realizes_matching", r.permutation_is_theorem_swap},
      {"pass", r.pass},
      {"failure", r.failure}};
  if (!r.pass) throw VerificationFailed{report};
  return report;
}

json CmdOracle(const Options& o) {
  const TetAngles t = InputAngles(o);
  RequireFinite(t, "oracle");
  const KleinTetra kt = klein_vertices(t);
  const CubatureResult q = volume_numeric_detail(kt, o.quadrature_tol);
  const double v = tet_volume(t);
  const SchlafliResult s = schlafli_residual(t, o.h);
  json verts = json::array();
  for (const auto& x : kt.vertices) {
    verts.push_back({measured(x(0), 1e-8), measured(x(1), 1e-8), measured(x(2), 1e-8)});
  }
  json residuals = json::object();
  for (int k = 0; k < 6; ++k) {
    residuals[std::string(kEdgeNames[k])] = {
        {"derivative", measured(s.derivative[k], 1e-3 * s.half_length[k])},
        {"half_length", measured(s.half_length[k], 1e-12)},
        {"relative_residual", measured(s.relative[k], 1e-3)}};
  }
  const double gap = std::abs(v - q.value);
  const bool pass = gap < 1e-5 && s.max_relative() < 1e-3;
  json report = {
      {"command", "oracle"},
      {"input", InputJson(o, t)},
      {"klein_vertices", verts},
      {"roundtrip_angle_error",
       measured(max_angle_difference(dihedral_angles(kt), t), 1e-8)},
      {"quadrature_volume", measured(q.value, o.quadrature_tol)},
      {"quadrature_error_estimate", measured(q.error, o.quadrature_tol)},
      {"quadrature_regions", q.regions},
      {"formula_volume", measured(v, tol::kVolumeMatch)},
      {"volume_gap", measured(gap, 1e-5)},
      {"schlafli_h", s.h},
      {"schlafli", residuals},
      {"pass", pass}};
  if (!pass) throw VerificationFailed{report};
  return report;
}

json CmdSuite(const Options& o, std::ostream& err) {
  SuiteConfig c;
  c.count = o.count;
  c.oracle_count = o.oracle_count;
  if (c.count < 1) throw InputError("--count", "--count must be >= 1");
  if (c.oracle_count < 1) {
    throw InputError("--oracle-count", "--oracle-count must be >= 1");
  }
  c.check_determinism = !o.no_determinism;
  if (o.seed) {
    c.seed = *o.seed;
  } else if (const char* env = std::getenv("REGGE_SUITE_SEED")) {
    try {
      std::size_t used = 0;
      c.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw InputError("REGGE_SUITE_SEED", "REGGE_SUITE_SEED is not an integer");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport r = run_suite(c);
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  for (const CriterionResult& cr : r.criteria) err << summary_line(cr) << "\n";
  err << "suite: " << (r.pass ? "PASS" : "FAIL") << " in " << secs << " s\n";
  json report = to_json(r);
  if (!r.pass) throw VerificationFailed{report};
  return report;
}

void Emit(const json& report, const Options& o, std::ostream& out) {
  if (o.format == "table") {
    out << render_table(report);
  } else {
    out << report.dump(2) << "\n";
  }
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file);
    if (!f) throw InputError("--out", "cannot open " + o.out_file);
    f << report.dump(2) << "\n";
  }
}

void Flatten(const json& j, const std::string& path, std::ostream& out) {
  if (j.is_object() && j.contains("value") && j.contains("tolerance") &&
      j.size() == 2) {
    out << path << "  " << j["value"].dump() << "  (tol "
        << j["tolerance"].dump() << ")\n";
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      Flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      Flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << path << "  " << (j.is_string() ? j.get<std::string>() : j.dump())
        << "\n";
  }
}

}  // namespace

TetAngles parse_angles(const std::string& text, bool degrees) {
  std::array<double, 6> a{};
  std::stringstream ss(text);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 6) {
      throw InputError("angles", "more than six angles given");
    }
    const std::string field(kEdgeNames[k]);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) {
      ++used;
    }
    if (item.empty() || used != item.size()) {
      throw InputError(field, "angle " + field + ": cannot parse '" + item + "'");
    }
    if (degrees) v *= kPi / 180.0;
    if (!(v > 0.0 && v < kPi)) {
      throw InputError(field, "angle " + field + " = " + item +
                                  " is outside (0, pi)");
    }
    a[k++] = v;
  }
  if (k < 6) {
    const std::string field(kEdgeNames[k]);
    throw InputError(field, "angle " + field + " is missing; expected six "
                            "comma-separated angles A,B,C,A',B',C'");
  }
  return TetAngles::from_array(a);
}

json measured(double value, double tolerance) {
  return {{"value", value}, {"tolerance", tolerance}};
}

std::string render_table(const json& report) {
  std::ostringstream out;
  Flatten(report, "", out);
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Regge symmetry and scissors congruence of hyperbolic tetrahedra"};
  app.require_subcommand(1);

  const auto add_angles = [&](CLI::App* cmd) {
    cmd->add_option("--angles", o.angles,
                    "six comma-separated dihedral angles A,B,C,A',B',C'");
    cmd->add_option("--equiangular", o.equiangular, "all six angles equal");
    cmd->add_flag("--degrees", o.degrees, "angles are in degrees");
    cmd->add_option("--format", o.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--out", o.out_file, "also write the JSON report here");
  };

  CLI::App* volume = app.add_subcommand("volume", "volume and holonomy data");
  add_angles(volume);
  CLI::App* decomp = app.add_subcommand("decompose", "the sixteen pieces of 2T");
  add_angles(decomp);
  decomp->add_option("--firepole", o.firepole, "aa, bb or cc");
  CLI::App* regge_cmd = app.add_subcommand("regge", "apply R_a, R_b or R_c");
  add_angles(regge_cmd);
  regge_cmd->add_option("--which", o.which, "a, b or c");
  CLI::App* orbit = app.add_subcommand("orbit", "Regge orbit up to relabeling");
  add_angles(orbit);
  orbit->add_option("--max-size", o.max_size, "stop after this many members");
  CLI::App* verify = app.add_subcommand("verify", "scissors congruence check");
  add_angles(verify);
  verify->add_option("--which", o.which, "a, b or c");
  verify->add_option("--volume-tol", o.volume_tol, "allowed |V(T) - V(image)|");
  verify->add_option("--match-tol", o.match_tol, "allowed angle mismatch per piece");
  CLI::App* oracle = app.add_subcommand("oracle", "Klein quadrature and Schlafli");
  add_angles(oracle);
  oracle->add_option("--tol", o.quadrature_tol, "quadrature tolerance");
  oracle->add_option("--step", o.h, "Schlafli finite-difference step");
  CLI::App* suite = app.add_subcommand("suite", "acceptance battery");
  suite->add_option("--count", o.count, "tetrahedra per sampled criterion");
  suite->add_option("--oracle-count", o.oracle_count);
  suite->add_option("--seed", o.seed, "defaults to $REGGE_SUITE_SEED, then 7");
  suite->add_flag("--no-determinism", o.no_determinism,
                  "skip the in-process rerun");
  suite->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
  suite->add_option("--out", o.out_file);

  std::vector<std::string> argv_store = {"regge"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  }

  json report;
  int code = kExitPass;
  try {
    if (*volume) report = CmdVolume(o);
    else if (*decomp) report = CmdDecompose(o);
    else if (*regge_cmd) report = CmdRegge(o);
    else if (*orbit) report = CmdOrbit(o);
    else if (*verify) report = CmdVerify(o);
    else if (*oracle) report = CmdOracle(o);
    else report = CmdSuite(o, err);
  } catch (const InputError& e) {
    err << "input error [" << e.field() << "]: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what()
        << " (achieved " << e.achieved_error() << ")\n";
    return kExitNumerical;
  } catch (const VerificationFailed& f) {
    report = f.report;
    code = kExitVerification;
    err << "verification failed\n";
  }
  try {
    Emit(report, o, out);
  } catch (const InputError& e) {
    err << "input error [" << e.field() << "]: " << e.what() << "\n";
    return kExitInput;
  }
  return code;
}

}  // namespace regge::cli
