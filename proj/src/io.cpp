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

#include "cddgate/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cddgate/error.hpp"

namespace cddgate {

using nlohmann::json;

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

double parse_cell(const std::string& cell, const std::filesystem::path& path, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
    if (used != cell.size() || !std::isfinite(v)) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::kConfig,
         path.string() + ":" + std::to_string(line) + ": not a finite number: \"" + cell + "\"");
  }
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) fail(ErrorCode::kIo, "write failed for " + path.string());
}

RunMetadata run_metadata(const RunConfig& config) {
  return {config.hash(), config.grids.geodesic_steps, config.physical.tau * 1e9};
}

json report_to_json(const OptimizationReport& r, const RunMetadata& meta) {
  json j;
  j["method"] = to_string(r.method);
  j["gate"] = r.gate;
  j["axes"] = r.axes;
  j["infidelity"] = r.infidelity;
  j["fidelity"] = 1.0 - r.infidelity;
  j["energy"] = r.energy;
  j["energy_units"] = "hbar^2/tau";
  j["iterations"] = r.iterations;
  j["seed"] = r.seed;
  j["converged"] = r.converged;
  j["note"] = r.note;
  j["runtime_s"] = r.runtime_s;
  j["config_hash"] = meta.config_hash;
  j["geodesic_steps"] = meta.geodesic_steps;
  j["tau_ns"] = meta.tau_ns;
  j["control_steps"] = r.controls.grid.n_steps;
  if (r.lambda0) {
    j["lambda0"] = std::vector<double>(r.lambda0->data(), r.lambda0->data() + r.lambda0->size());
  } else {
    j["lambda0"] = nullptr;
  }
  j["fidelity_trace"] = r.fidelity_trace;
  return j;
}

void write_controls_csv(const std::filesystem::path& path, const ControlTrajectory& controls,
                        double tau) {
  const TimeGrid& g = controls.grid;
  if (int(controls.h.size()) != g.n_nodes()) {
    fail(ErrorCode::kInvalidInput, "control trajectory does not match its grid");
  }
  std::string text = "t_ns,h1,h2,h3,h4,h5,h6\n";
  for (int n = 0; n < g.n_nodes(); ++n) {
    text += format_double(g.node(n) * tau * 1e9);
    for (double v : controls.h[n]) text += "," + format_double(v / tau);
    text += "\n";
  }
  write_text_file(path, text);
}

ControlTrajectory read_controls_csv(const std::filesystem::path& path, double tau) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kConfig, "cannot open controls file " + path.string());
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::kConfig, path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t_ns,h1,h2,h3,h4,h5,h6") {
    fail(ErrorCode::kConfig, path.string() + ": expected header t_ns,h1,h2,h3,h4,h5,h6");
  }
  std::vector<double> t;
  std::vector<ChannelValues> h;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 7) {
      fail(ErrorCode::kConfig, path.string() + ":" + std::to_string(lineno) + ": expected 7 columns");
    }
    t.push_back(parse_cell(cells[0], path, lineno));
    ChannelValues row{};
    for (int k = 0; k < 6; ++k) row[k] = parse_cell(cells[k + 1], path, lineno) * tau;
    h.push_back(row);
  }
  if (t.size() < 3) fail(ErrorCode::kConfig, path.string() + ": need at least 3 samples");

  const int steps = int(t.size()) - 1;
  const double tau_ns = tau * 1e9;
  const double spacing = tau_ns / steps;
  for (int n = 0; n <= steps; ++n) {
    if (std::abs(t[n] - n * spacing) > 1e-6 * tau_ns) {
      fail(ErrorCode::kConfig, path.string() + ": time column is not a uniform grid on [0, " +
                                   format_double(tau_ns) + "] ns (row " + std::to_string(n + 2) +
                                   ")");
    }
  }
  ControlTrajectory out;
  out.grid = TimeGrid(steps, 0.0, 1.0);
  out.h = std::move(h);
  return out;
}

void write_curve_csv(const std::filesystem::path& path, const std::string& name,
                     const TimeGrid& grid, double tau, const std::vector<double>& values) {
  if (int(values.size()) != grid.n_nodes()) {
    fail(ErrorCode::kInvalidInput, "curve length does not match its grid");
  }
  std::string text = "t_ns," + name + "\n";
  for (int n = 0; n < grid.n_nodes(); ++n) {
    text += format_double(grid.node(n) * tau * 1e9) + "," + format_double(values[n]) + "\n";
  }
  write_text_file(path, text);
}

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<double>& x,
                           const std::vector<double>& y) {
  constexpr double W = 640, H = 400, L = 70, R = 20, T = 40, B = 50;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!x.empty()) {
    x0 = *std::min_element(x.begin(), x.end());
    x1 = *std::max_element(x.begin(), x.end());
    y0 = *std::min_element(y.begin(), y.end());
    y1 = *std::max_element(y.begin(), y.end());
  }
  if (x1 <= x0) x1 = x0 + 1;
  if (y1 - y0 < 1e-12) {
    y0 -= 0.5;
    y1 += 0.5;
  }
  auto px = [&](double v) { return L + (v - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double v) { return H - B - (v - y0) / (y1 - y0) * (H - T - B); };

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
     << xml_escape(title) << "</text>\n"
     << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\""
     << H - T - B << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0, yv = y0 + (y1 - y0) * i / 4.0;
    os << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\">" << xv
       << "</text>\n"
       << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << yv
       << "</text>\n";
  }
  os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">"
     << xml_escape(x_label) << "</text>\n"
     << "<text transform=\"translate(16," << (T + H - B) / 2
     << ") rotate(-90)\" text-anchor=\"middle\">" << xml_escape(y_label) << "</text>\n"
     << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  const std::size_t n = std::min(x.size(), y.size());
  const std::size_t stride = std::max<std::size_t>(1, n / 1000);
  for (std::size_t i = 0; i < n; i += stride) os << px(x[i]) << "," << py(y[i]) << " ";
  if (n > 0 && (n - 1) % stride != 0) os << px(x[n - 1]) << "," << py(y[n - 1]);
  os << "\"/>\n</svg>\n";
  return os.str();
}

void write_run_outputs(const std::filesystem::path& dir, const OptimizationReport& report,
                       const RunConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  const double tau = config.physical.tau;
  write_text_file(dir / "report.json", report_to_json(report, run_metadata(config)).dump(2) + "\n");
  write_controls_csv(dir / "controls.csv", report.controls, tau);

  const TimeGrid& g = report.controls.grid;
  std::vector<double> t_ns(g.n_nodes());
  for (int n = 0; n < g.n_nodes(); ++n) t_ns[n] = g.node(n) * tau * 1e9;
  const std::vector<double> integrand = energy_integrand_curve(report.controls);
  write_curve_csv(dir / "energy_integrand.csv", "integrand", g, tau, integrand);
  write_text_file(dir / "energy_integrand.svg",
                  svg_line_chart(report.gate + " / " + report.axes + " energy integrand", "t (ns)",
                                 "(1/2) sum h_k^2 (1/tau^2)", t_ns, integrand));
  if (int(report.fidelity_vs_time.size()) == g.n_nodes()) {
    write_curve_csv(dir / "fidelity_curve.csv", "fidelity", g, tau, report.fidelity_vs_time);
    write_text_file(dir / "fidelity_curve.svg",
                    svg_line_chart(report.gate + " / " + report.axes + " gate fidelity", "t (ns)",
                                   "fidelity", t_ns, report.fidelity_vs_time));
  }
}

}  // namespace cddgate
