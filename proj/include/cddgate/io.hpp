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

// Persistence: report.json, controls.csv (t_ns,h1..h6 in rad/s), curve CSVs
// and self-contained SVG line charts.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "cddgate/config.hpp"
#include "cddgate/metrics.hpp"

namespace cddgate {

/// Metadata stored next to every result so a run can be repeated exactly.
struct RunMetadata {
  std::string config_hash;
  int geodesic_steps = 0;
  double tau_ns = 0.0;
};

RunMetadata run_metadata(const RunConfig& config);

nlohmann::json report_to_json(const OptimizationReport& report, const RunMetadata& meta);

/// Writes `controls` (dimensionless, on [0, 1]) as rad/s against t in ns.
void write_controls_csv(const std::filesystem::path& path, const ControlTrajectory& controls,
                        double tau);

/// Reads a controls file back onto the dimensionless grid. The time column
/// must start at 0, be uniform, and end at tau; anything else is a config
/// error.
ControlTrajectory read_controls_csv(const std::filesystem::path& path, double tau);

/// Two-column CSV "t_ns,<name>" on the uniform grid of `grid` scaled by tau.
void write_curve_csv(const std::filesystem::path& path, const std::string& name,
                     const TimeGrid& grid, double tau, const std::vector<double>& values);

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<double>& x,
                           const std::vector<double>& y);

/// report.json, controls.csv, fidelity_curve.csv, energy_integrand.csv and
/// two SVG plots in `dir` (created if needed).
void write_run_outputs(const std::filesystem::path& dir, const OptimizationReport& report,
                       const RunConfig& config);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace cddgate
