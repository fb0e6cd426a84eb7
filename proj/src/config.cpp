// Copyright 2026 The cddgate Authors
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

#include "cddgate/config.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "cddgate/error.hpp"

namespace cddgate {

using nlohmann::json;

namespace {

constexpr double kGHz = kTwoPi * 1.0e9;
constexpr double kMHz = kTwoPi * 1.0e6;

[[noreturn]] void config_error(const std::string& what) { fail(ErrorCode::kConfig, what); }

void reject_unknown(const json& obj, const std::string& where, std::set<std::string> known) {
  if (!obj.is_object()) config_error(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!known.count(key)) config_error(where + ": unknown key \"" + key + "\"");
  }
}

template <typename T>
void read(const json& obj, const char* key, T& out, const std::string& where) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  try {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw std::invalid_argument("expected a boolean");
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw std::invalid_argument("expected an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0) {
          throw std::invalid_argument("expected a non-negative integer");
        }
      }
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw std::invalid_argument("expected a number");
    } else {
      if (!v.is_string()) throw std::invalid_argument("expected a string");
    }
    out = v.get<T>();
  } catch (const std::exception& e) {
    config_error(where + "." + key + ": " + e.what());
  }
}

}  // namespace

RunConfig RunConfig::from_json(const json& j) {
  RunConfig c;
  reject_unknown(j, "config",
                 {"physical", "grids", "cdd_bench", "variational", "montecarlo", "krotov",
                  "output_dir"});

  if (j.contains("physical")) {
    const json& p = j["physical"];
    reject_unknown(p, "physical", {"omega_z_ghz", "J_mhz", "tau_ns", "omega_cdd_ghz"});
    double omega_z = c.physical.omega_z / kGHz;
    double tau_ns = c.physical.tau * 1e9;
    double omega_cdd = c.physical.omega_cdd / kGHz;
    read(p, "omega_z_ghz", omega_z, "physical");
    read(p, "tau_ns", tau_ns, "physical");
    read(p, "omega_cdd_ghz", omega_cdd, "physical");
    c.physical.omega_z = omega_z * kGHz;
    c.physical.tau = tau_ns * 1e-9;
    c.physical.omega_cdd = omega_cdd * kGHz;
    if (p.contains("J_mhz")) {
      const json& jm = p["J_mhz"];
      if (!jm.is_array() || jm.size() != 4) config_error("physical.J_mhz: expected 4 rows");
      for (int r = 0; r < 4; ++r) {
        if (!jm[r].is_array() || jm[r].size() != 4) {
          config_error("physical.J_mhz: row " + std::to_string(r) + " must have 4 numbers");
        }
        for (int col = 0; col < 4; ++col) {
          if (!jm[r][col].is_number()) config_error("physical.J_mhz: entries must be numbers");
          c.physical.coupling(r, col) = jm[r][col].get<double>() * kMHz;
        }
      }
    }
  }

  if (j.contains("grids")) {
    const json& g = j["grids"];
    reject_unknown(g, "grids", {"geodesic_steps", "cdd_steps_per_fast_period"});
    read(g, "geodesic_steps", c.grids.geodesic_steps, "grids");
    read(g, "cdd_steps_per_fast_period", c.grids.cdd_steps_per_fast_period, "grids");
  }

  if (j.contains("cdd_bench")) {
    const json& b = j["cdd_bench"];
    reject_unknown(b, "cdd_bench", {"omega_ghz"});
    if (b.contains("omega_ghz")) {
      if (!b["omega_ghz"].is_array()) config_error("cdd_bench.omega_ghz: expected an array");
      c.cdd_bench_omega_ghz.clear();
      for (const auto& v : b["omega_ghz"]) {
        if (!v.is_number()) config_error("cdd_bench.omega_ghz: entries must be numbers");
        c.cdd_bench_omega_ghz.push_back(v.get<double>());
      }
    }
  }

  if (j.contains("variational")) {
    const json& v = j["variational"];
    reject_unknown(v, "variational",
                   {"eta", "max_iter", "infidelity_tol", "gradient_tol", "seed", "init_scale",
                    "starts", "screen_iter", "screen_tol"});
    auto& s = c.variational;
    read(v, "eta", s.eta, "variational");
    read(v, "max_iter", s.max_iter, "variational");
    read(v, "infidelity_tol", s.infidelity_tol, "variational");
    read(v, "gradient_tol", s.gradient_tol, "variational");
    read(v, "seed", s.seed, "variational");
    read(v, "init_scale", s.init_scale, "variational");
    read(v, "starts", s.starts, "variational");
    read(v, "screen_iter", s.screen_iter, "variational");
    read(v, "screen_tol", s.screen_tol, "variational");
  }

  if (j.contains("montecarlo")) {
    const json& m = j["montecarlo"];
    reject_unknown(m, "montecarlo",
                   {"n_samples", "coord_bound", "seed", "candidates", "infidelity_tol",
                    "screen_tol", "screen_evals", "max_evals", "initial_step", "x_tol",
                    "max_restarts"});
    auto& s = c.montecarlo;
    read(m, "n_samples", s.n_samples, "montecarlo");
    read(m, "coord_bound", s.coord_bound, "montecarlo");
    read(m, "seed", s.seed, "montecarlo");
    read(m, "candidates", s.candidates, "montecarlo");
    read(m, "infidelity_tol", s.infidelity_tol, "montecarlo");
    read(m, "screen_tol", s.screen_tol, "montecarlo");
    read(m, "screen_evals", s.screen_evals, "montecarlo");
    read(m, "max_evals", s.simplex.max_evals, "montecarlo");
    read(m, "initial_step", s.simplex.initial_step, "montecarlo");
    read(m, "x_tol", s.simplex.x_tol, "montecarlo");
    read(m, "max_restarts", s.simplex.max_restarts, "montecarlo");
  }

  if (j.contains("krotov")) {
    const json& k = j["krotov"];
    reject_unknown(k, "krotov",
                   {"lambda_a", "auto_lambda", "max_iter", "infidelity_tol", "init_amplitude"});
    auto& s = c.krotov;
    read(k, "lambda_a", s.lambda_a, "krotov");
    read(k, "auto_lambda", s.auto_lambda, "krotov");
    read(k, "max_iter", s.max_iter, "krotov");
    read(k, "infidelity_tol", s.infidelity_tol, "krotov");
    read(k, "init_amplitude", s.init_amplitude, "krotov");
  }

  read(j, "output_dir", c.output_dir, "config");
  c.validate();
  return c;
}

RunConfig RunConfig::from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    config_error(std::string("config is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return from_string(ss.str());
  } catch (const Error& e) {
    config_error(path.string() + ": " + e.what());
  }
}

void RunConfig::validate() const {
  physical.validate();
  if (grids.geodesic_steps < 2) config_error("grids.geodesic_steps must be >= 2");
  if (grids.cdd_steps_per_fast_period < 1) config_error("grids.cdd_steps_per_fast_period must be >= 1");
  for (double w : cdd_bench_omega_ghz) {
    if (!(w >= 0.0)) config_error("cdd_bench.omega_ghz entries must be >= 0");
  }
  variational.validate();
  montecarlo.validate();
  krotov.validate();
}

json RunConfig::to_json() const {
  json j;
  json jm = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int col = 0; col < 4; ++col) row.push_back(physical.coupling(r, col) / kMHz);
    jm.push_back(row);
  }
  j["physical"] = {{"omega_z_ghz", physical.omega_z / kGHz},
                   {"J_mhz", jm},
                   {"tau_ns", physical.tau * 1e9},
                   {"omega_cdd_ghz", physical.omega_cdd / kGHz}};
  j["grids"] = {{"geodesic_steps", grids.geodesic_steps},
                {"cdd_steps_per_fast_period", grids.cdd_steps_per_fast_period}};
  j["cdd_bench"] = {{"omega_ghz", cdd_bench_omega_ghz}};
  j["variational"] = {{"eta", variational.eta},
                      {"max_iter", variational.max_iter},
                      {"infidelity_tol", variational.infidelity_tol},
                      {"gradient_tol", variational.gradient_tol},
                      {"seed", variational.seed},
                      {"init_scale", variational.init_scale},
                      {"starts", variational.starts},
                      {"screen_iter", variational.screen_iter},
                      {"screen_tol", variational.screen_tol}};
  j["montecarlo"] = {{"n_samples", montecarlo.n_samples},
                     {"coord_bound", montecarlo.coord_bound},
                     {"seed", montecarlo.seed},
                     {"candidates", montecarlo.candidates},
                     {"infidelity_tol", montecarlo.infidelity_tol},
                     {"screen_tol", montecarlo.screen_tol},
                     {"screen_evals", montecarlo.screen_evals},
                     {"max_evals", montecarlo.simplex.max_evals},
                     {"initial_step", montecarlo.simplex.initial_step},
                     {"x_tol", montecarlo.simplex.x_tol},
                     {"max_restarts", montecarlo.simplex.max_restarts}};
  j["krotov"] = {{"lambda_a", krotov.lambda_a},
                 {"auto_lambda", krotov.auto_lambda},
                 {"max_iter", krotov.max_iter},
                 {"infidelity_tol", krotov.infidelity_tol},
                 {"init_amplitude", krotov.init_amplitude}};
  j["output_dir"] = output_dir;
  return j;
}

std::string RunConfig::hash() const {
  const std::string text = to_json().dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GeodesicProblem RunConfig::geodesic_problem(const Distribution& dist) const {
  GeodesicProblem p;
  p.drift = drift_hamiltonian(physical.j33() * physical.tau);
  p.dist = dist;
  p.grid = TimeGrid(grids.geodesic_steps, 0.0, 1.0);
  return p;
}

}  // namespace cddgate
