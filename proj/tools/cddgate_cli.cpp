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

// Command-line front end. Talks to the library exclusively through the C API.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "cddgate/cddgate.h"

namespace {

// Exit codes: 0 success, 1 I/O or internal failure, 2 configuration or
// usage error, 3 non-convergence, 4 integration-accuracy failure.
int exit_code(cddgate_status s) {
  switch (s) {
    case CDDGATE_OK: return 0;
    case CDDGATE_ERR_INVALID_INPUT:
    case CDDGATE_ERR_CONFIG: return 2;
    case CDDGATE_ERR_NOT_CONVERGED: return 3;
    case CDDGATE_ERR_INTEGRATION: return 4;
    default: return 1;
  }
}

struct Failure {
  cddgate_status status;
};

void check(cddgate_status s, const std::string& context) {
  if (s == CDDGATE_OK) return;
  std::cerr << "cddgate: " << context << ": " << cddgate_last_error() << "\n";
  throw Failure{s};
}

using ConfigPtr = std::unique_ptr<cddgate_config, decltype(&cddgate_config_free)>;
using ReportPtr = std::unique_ptr<cddgate_report, decltype(&cddgate_report_free)>;

ConfigPtr load_config(const std::string& path) {
  cddgate_config* raw = nullptr;
  check(cddgate_config_load(path.empty() ? nullptr : path.c_str(), &raw), "loading config");
  return ConfigPtr(raw, cddgate_config_free);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  cddgate_string_free(s);
  return out;
}

std::string output_dir(const cddgate_config* cfg) {
  char* text = nullptr;
  check(cddgate_config_to_json(cfg, &text), "reading config");
  const auto j = nlohmann::json::parse(take_string(text));
  return j.at("output_dir").get<std::string>();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cddgate: cannot write " << path << "\n";
    throw Failure{CDDGATE_ERR_IO};
  }
  out << text;
}

int cmd_cdd_bench(const std::string& config_path, std::string out) {
  auto cfg = load_config(config_path);
  char* text = nullptr;
  check(cddgate_cdd_bench_json(cfg.get(), &text), "CDD benchmark");
  const std::string json = take_string(text);
  std::printf("%-12s %-14s %s\n", "omega/2pi", "F_CDD", "steps");
  for (const auto& row : nlohmann::json::parse(json)) {
    const double ghz = row["omega_ghz"];
    const std::string label = ghz > 0 ? std::to_string(ghz).substr(0, 5) + " GHz" : "off";
    std::printf("%-12s %-14.8f %d\n", label.c_str(), row["fidelity"].get<double>(),
                row["steps"].get<int>());
  }
  if (out.empty()) out = output_dir(cfg.get());
  write_file(std::filesystem::path(out) / "cdd_bench.json", json + "\n");
  return 0;
}

int cmd_optimize(const std::string& config_path, const std::string& method,
                 const std::string& gate, const std::string& axes, std::string out,
                 bool swap_check) {
  auto cfg = load_config(config_path);
  cddgate_report* raw = nullptr;
  check(cddgate_optimize(cfg.get(), method.c_str(), gate.c_str(), axes.c_str(), &raw),
        "optimization");
  ReportPtr report(raw, cddgate_report_free);
  if (out.empty()) {
    std::string tag = gate.rfind("custom:", 0) == 0 ? "custom" : gate;
    out = (std::filesystem::path(output_dir(cfg.get())) / (method + "_" + tag + "_" + axes))
              .string();
  }
  check(cddgate_report_write(report.get(), out.c_str()), "writing results");
  std::printf("method      %s\ngate        %s\naxes        %s\n", method.c_str(), gate.c_str(),
              axes.c_str());
  std::printf("infidelity  %.3e\nenergy      %.6f hbar^2/tau\niterations  %d\nconverged   %s\n",
              cddgate_report_infidelity(report.get()), cddgate_report_energy(report.get()),
              cddgate_report_iterations(report.get()),
              cddgate_report_converged(report.get()) ? "yes" : "no");
  if (swap_check) {
    double f = 0, fs = 0;
    check(cddgate_report_swap_fidelity(report.get(), &f, &fs), "swap check");
    std::printf("swap check  F=%.12f swapped F=%.12f |diff|=%.2e\n", f, fs, std::abs(f - fs));
  }
  std::printf("output      %s\n", out.c_str());
  if (!cddgate_report_converged(report.get())) {
    std::cerr << "cddgate: optimization did not reach its infidelity tolerance\n";
    return 3;
  }
  return 0;
}

int cmd_verify(const std::string& config_path, const std::string& controls,
               const std::string& gate, const std::vector<double>& omegas) {
  auto cfg = load_config(config_path);
  std::printf("%-12s %-14s %s\n", "omega/2pi", "fidelity", "F_CDD (no controls)");
  for (double ghz : omegas) {
    double f = 0, f_cdd = 0;
    check(cddgate_verify(cfg.get(), controls.c_str(), gate.c_str(), ghz, &f, &f_cdd),
          "verification");
    std::printf("%-12g %-14.8f %.8f\n", ghz, f, f_cdd);
  }
  return 0;
}

int cmd_table1(const std::string& config_path, std::string out,
               const std::vector<std::string>& methods) {
  auto cfg = load_config(config_path);
  if (out.empty()) out = (std::filesystem::path(output_dir(cfg.get())) / "table1").string();
  const std::vector<std::pair<std::string, std::string>> rows{
      {"cx", "xyz"}, {"cx", "yz"}, {"cx", "xz"}, {"cx", "xy"},
      {"r", "xyz"},  {"r", "yz"},  {"r", "xz"},  {"r", "xy"}};
  std::string csv = "gate,axes,method,energy,reference_energy,relative_deviation,infidelity,"
                    "converged,iterations,runtime_s\n";
  bool all_converged = true;
  for (const auto& [gate, axes] : rows) {
    for (const auto& method : methods) {
      cddgate_report* raw = nullptr;
      const cddgate_status s =
          cddgate_optimize(cfg.get(), method.c_str(), gate.c_str(), axes.c_str(), &raw);
      double ref = 0;
      const bool has_ref =
          cddgate_reference_energy(gate.c_str(), axes.c_str(), method.c_str(), &ref) ==
          CDDGATE_OK;
      char line[512];
      if (s != CDDGATE_OK) {
        std::cerr << "cddgate: " << gate << "/" << axes << "/" << method << ": "
                  << cddgate_last_error() << "\n";
        std::snprintf(line, sizeof line, "%s,%s,%s,nan,%.6g,nan,nan,false,0,0\n", gate.c_str(),
                      axes.c_str(), method.c_str(), has_ref ? ref : 0.0);
        csv += line;
        all_converged = false;
        continue;
      }
      ReportPtr report(raw, cddgate_report_free);
      const double e = cddgate_report_energy(raw);
      const bool conv = cddgate_report_converged(raw);
      all_converged = all_converged && conv;
      std::snprintf(line, sizeof line, "%s,%s,%s,%.6f,%.6g,%.4f,%.3e,%s,%d,%.1f\n",
                    gate.c_str(), axes.c_str(), method.c_str(), e, has_ref ? ref : 0.0,
                    has_ref ? (e - ref) / ref : 0.0, cddgate_report_infidelity(raw),
                    conv ? "true" : "false", cddgate_report_iterations(raw),
                    cddgate_report_runtime(raw));
      csv += line;
      std::printf("%s", line);
      std::fflush(stdout);
      const auto cell = std::filesystem::path(out) / (gate + "_" + axes + "_" + method);
      check(cddgate_report_write(raw, cell.string().c_str()), "writing results");
    }
  }
  write_file(std::filesystem::path(out) / "table1.csv", csv);
  std::printf("table written to %s\n", (std::filesystem::path(out) / "table1.csv").c_str());
  return all_converged ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal-energy two-qubit gate synthesis with continuous dynamical decoupling"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cddgate_version()));

  std::string config_path;
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path,
                    "JSON configuration (default: $CDDGATE_CONFIG, then built-in defaults)");
  };

  auto* bench = app.add_subcommand("cdd-bench", "CDD fidelity benchmark");
  std::string bench_out;
  add_config(bench);
  bench->add_option("--out", bench_out, "output directory (default: config output_dir)");

  auto* opt = app.add_subcommand("optimize", "synthesize one gate with one method");
  std::string method = "variational", gate = "cx", axes = "xyz", opt_out;
  bool swap_check = false;
  add_config(opt);
  opt->add_option("--method", method, "variational | montecarlo | krotov")
      ->check(CLI::IsMember({"variational", "montecarlo", "krotov"}));
  opt->add_option("--gate", gate, "cz | cx | r | custom:<path>");
  opt->add_option("--axes", axes, "control axes, e.g. xyz, yz, xz, xy");
  opt->add_option("--out", opt_out, "output directory");
  opt->add_flag("--swap-check", swap_check,
                "also re-propagate with qubit-1 and qubit-2 channels exchanged");

  auto* verify = app.add_subcommand("verify", "apply optimized controls together with CDD");
  std::string controls, verify_gate = "cx";
  std::vector<double> omegas{2.0, 10.0, 20.0};
  add_config(verify);
  verify->add_option("--controls", controls, "controls.csv written by optimize")->required();
  verify->add_option("--gate", verify_gate, "target gate");
  verify->add_option("--omega-ghz", omegas, "CDD frequencies in GHz (0 = off)");

  auto* table = app.add_subcommand("table1", "all gate/axes/method cells");
  std::string table_out;
  std::vector<std::string> methods{"montecarlo", "krotov", "variational"};
  add_config(table);
  table->add_option("--out", table_out, "output directory");
  table->add_option("--methods", methods, "subset of methods")
      ->check(CLI::IsMember({"variational", "montecarlo", "krotov"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*bench) return cmd_cdd_bench(config_path, bench_out);
    if (*opt) return cmd_optimize(config_path, method, gate, axes, opt_out, swap_check);
    if (*verify) return cmd_verify(config_path, controls, verify_gate, omegas);
    if (*table) return cmd_table1(config_path, table_out, methods);
  } catch (const Failure& f) {
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "cddgate: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
