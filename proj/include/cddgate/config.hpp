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

#pragma once

// Run configuration. The JSON form uses conventional units (GHz, MHz, ns);
// every section and key is optional, unknown keys are rejected. See
// config/schema.json for the full layout.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "cddgate/krotov.hpp"
#include "cddgate/model.hpp"
#include "cddgate/montecarlo.hpp"
#include "cddgate/variational.hpp"

namespace cddgate {

struct GridSettings {
  int geodesic_steps = 2000;
  int cdd_steps_per_fast_period = 64;
};

struct RunConfig {
  PhysicalParams physical = PhysicalParams::reference();
  GridSettings grids;
  /// CDD frequencies for the benchmark, GHz; 0 means "CDD off".
  std::vector<double> cdd_bench_omega_ghz{0.0, 2.0, 10.0, 20.0};
  DescentSettings variational;
  MonteCarloSettings montecarlo;
  KrotovSettings krotov;
  std::string output_dir = "results";

  /// Throws kConfig on malformed input, unknown keys or invalid values.
  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig from_string(const std::string& text);
  static RunConfig load(const std::filesystem::path& path);

  /// Complete configuration (all defaults filled in), in JSON units.
  nlohmann::json to_json() const;
  /// FNV-1a 64 of the canonical to_json() dump, as 16 hex digits.
  std::string hash() const;

  void validate() const;

  /// Dimensionless geodesic setup: drift H_d * tau on [0, 1].
  GeodesicProblem geodesic_problem(const Distribution& dist) const;
};

/// Environment variable naming the default configuration file.
inline constexpr const char* kConfigEnvVar = "CDDGATE_CONFIG";

}  // namespace cddgate
