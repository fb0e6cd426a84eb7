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


// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance <config.json> [unit-test executables...]
//
// Criterion 7 runs each listed executable and passes when all of them exit
// with status 0. Progress goes to stderr; the verdicts are printed to stdout
// in criterion order at the end.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cddgate/config.hpp"
#include "cddgate/experiments.hpp"
#include "cddgate/model.hpp"
#include "cddgate/rng.hpp"
#include "cddgate/variational.hpp"

namespace cddgate {
namespace {

constexpr double kCellBudgetSeconds = 600.0;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [fail: " << what << "]";
    }
  }
};

std::string line(int id, const std::string& title, const Verdict& v) {
  return "criterion " + std::to_string(id) + " " + title + ": " + (v.pass ? "PASS" : "FAIL") +
         v.detail.str();
}

std::string fmt(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

using CellKey = std::pair<std::string, std::string>;  // gate, axes

struct Cells {
  std::map<CellKey, OptimizationReport> variational, montecarlo, krotov;
};

OptimizationReport run_cell(Method m, const std::string& gate, const std::string& axes,
                            const RunConfig& cfg) {
  std::cerr << "  running " << to_string(m) << " " << gate << " " << axes << " ..." << std::flush;
  OptimizationReport r = run_optimization(m, resolve_gate(gate), Distribution::parse(axes), cfg);
  std::cerr << " I=" << fmt(r.infidelity, 3) << " E=" << fmt(r.energy) << " t=" << fmt(r.runtime_s, 3)
            << "s\n";
  return r;
}

Verdict cdd_benchmark_check(const RunConfig& cfg) {
  const std::map<double, double> expected{
      {0.0, 0.62568233}, {2.0, 0.99807888}, {10.0, 0.99992314}, {20.0, 0.99998078}};
  RunConfig c = cfg;
  c.cdd_bench_omega_ghz = {0.0, 2.0, 10.0, 20.0};
  Verdict v;
  for (const auto& row : cdd_benchmark(c)) {
    const double want = expected.at(row.omega_ghz);
    v.detail << " " << fmt(row.omega_ghz) << "GHz:" << fmt(row.fidelity, 9);
    v.check(std::abs(row.fidelity - want) <= 1e-3, fmt(row.omega_ghz) + " GHz off by more than 1e-3");
  }
  return v;
}

Verdict table_check(const Cells& cells) {
  Verdict v;
  for (const auto& [key, rv] : cells.variational) {
    const auto& [gate, axes] = key;
    const OptimizationReport& rm = cells.montecarlo.at(key);
    for (const OptimizationReport* r : {&rv, &rm}) {
      const auto ref = reference_energy(gate, axes, r->method);
      const std::string cell = to_string(r->method) + " " + gate + "/" + axes;
      const double rel = std::abs(r->energy - *ref) / *ref;
      v.detail << " " << cell << "=" << fmt(r->energy) << "(" << fmt(*ref) << ")";
      v.check(r->infidelity <= 1e-4, cell + " infidelity " + fmt(r->infidelity, 3));
      v.check(rel <= 0.05, cell + " energy off by " + fmt(100 * rel, 3) + "%");
      v.check(r->runtime_s <= kCellBudgetSeconds, cell + " took " + fmt(r->runtime_s, 4) + "s");
    }
  }
  return v;
}

Verdict krotov_check(const Cells& cells) {
  Verdict v;
  for (const auto& [key, rk] : cells.krotov) {
    const std::string cell = key.first + "/" + key.second;
    const double ev = cells.variational.at(key).energy;
    v.detail << " " << cell << ":F=" << fmt(1.0 - rk.infidelity, 6) << ",E=" << fmt(rk.energy);
    v.check(1.0 - rk.infidelity >= 0.999, cell + " fidelity below 0.999");
    v.check(rk.energy >= ev, cell + " energy below variational " + fmt(ev));
  }
  return v;
}

Verdict gradient_check(const RunConfig& cfg) {
  const GateTarget cx = target_gate(GateKind::kCX);
  const GeodesicProblem prob = cfg.geodesic_problem(Distribution::full());
  Rng rng(20260101);
  Verdict v;
  double worst = 0.0;
  for (int point = 0; point < 10; ++point) {
    const Coords l = rng.uniform_coords(1.0);
    const Coords g = evaluate_costate(l, prob, cx.matrix).gradient;
    const double h = 1e-5;
    for (int k = 0; k < kBasisDim; ++k) {
      if (std::abs(g[k]) <= 1e-8) continue;
      Coords lp = l, lm = l;
      lp[k] += h;
      lm[k] -= h;
      const double fd =
          (costate_infidelity(lp, prob, cx.matrix) - costate_infidelity(lm, prob, cx.matrix)) /
          (2 * h);
      worst = std::max(worst, std::abs(g[k] - fd) / std::abs(g[k]));
    }
  }
  v.detail << " worst relative error " << fmt(worst, 3);
  v.check(worst <= 1e-3, "relative error above 1e-3");
  return v;
}

Verdict averaging_check() {
  Verdict v;
  double worst = 0.0;
  auto one = [&](const PhysicalParams& p) {
    const Mat4 hn = native_hamiltonian(p.coupling);
    const double res = (averaged_hamiltonian_numeric(p) - drift_hamiltonian(p.j33())).norm();
    worst = std::max(worst, res / hn.norm());
  };
  one(PhysicalParams::reference());
  Rng rng(515);
  for (int trial = 0; trial < 20; ++trial) {
    PhysicalParams p = PhysicalParams::reference();
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) p.coupling(mu, nu) = rng.uniform(-1.0, 1.0) * kTwoPi * 1e8;
    p.coupling(0, 0) = 0.0;
    one(p);
  }
  v.detail << " worst residual/|H_N| " << fmt(worst, 3);
  v.check(worst <= 1e-8, "residual above 1e-8 |H_N|");
  return v;
}

Verdict equivalence_check(const Cells& cells, const OptimizationReport& cz_var,
                          const OptimizationReport& cz_mc, const RunConfig& cfg) {
  Verdict v;
  auto pair = [&](const std::string& gate, const OptimizationReport& a,
                  const OptimizationReport& b) {
    const double rel = std::abs(a.energy - b.energy) / std::min(a.energy, b.energy);
    v.detail << " " << gate << ":" << fmt(a.energy) << "/" << fmt(b.energy);
    v.check(rel <= 1e-3, gate + " energies differ by " + fmt(100 * rel, 3) + "%");
  };
  pair("cz", cz_var, cz_mc);
  for (const char* gate : {"cx", "r"}) {
    const CellKey key{gate, "xyz"};
    pair(gate, cells.variational.at(key), cells.montecarlo.at(key));
  }
  const SwapCheck s = swap_fidelity(cz_var.controls, target_gate(GateKind::kCZ), cfg.physical);
  const double diff = std::abs(s.fidelity - s.swapped_fidelity);
  v.detail << " cz swap |dF|=" << fmt(diff, 3);
  v.check(diff <= 1e-8, "cz swap changes the fidelity");
  return v;
}

Verdict property_suites_check(const std::vector<std::string>& suites) {
  Verdict v;
  v.check(!suites.empty(), "no suites given");
  for (const auto& exe : suites) {
    const std::string cmd = "\"" + exe + "\" > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    const std::string name = exe.substr(exe.find_last_of('/') + 1);
    v.detail << " " << name << (rc == 0 ? ":ok" : ":failed");
    v.check(rc == 0, name + " failed");
  }
  return v;
}

Verdict end_to_end_check(const OptimizationReport& cx_var, const RunConfig& cfg) {
  Verdict v;
  const GateTarget cx = target_gate(GateKind::kCX);
  double prev = -1.0;
  for (double ghz : {2.0, 10.0, 20.0}) {
    const FullStackResult fs = verify_full_stack(cx_var.controls, cx, cfg.physical,
                                                 kTwoPi * ghz * 1e9,
                                                 cfg.grids.cdd_steps_per_fast_period);
    v.detail << " " << fmt(ghz) << "GHz:" << fmt(fs.fidelity, 8);
    v.check(fs.fidelity >= prev, "fidelity decreases at " + fmt(ghz) + " GHz");
    prev = fs.fidelity;
  }
  v.check(prev >= 0.99, "fidelity at 20 GHz below 0.99");
  return v;
}

int run(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <config.json> [unit-test executables...]\n";
    return 2;
  }
  const RunConfig cfg = RunConfig::load(argv[1]);
  const std::vector<std::string> suites(argv + 2, argv + argc);
  int failures = 0;
  std::map<int, std::string> lines;
  auto report = [&](int id, const std::string& title, const Verdict& v) {
    lines[id] = line(id, title, v);
    std::cerr << lines[id] << "\n";
    if (!v.pass) ++failures;
  };

  report(1, "cdd benchmark", cdd_benchmark_check(cfg));
  report(4, "gradient oracle", gradient_check(cfg));
  report(5, "averaging oracle", averaging_check());

  Cells cells;
  for (const char* gate : {"cx", "r"}) {
    for (const char* axes : {"xyz", "yz", "xz", "xy"}) {
      const CellKey key{gate, axes};
      cells.variational[key] = run_cell(Method::kVariational, gate, axes, cfg);
      cells.montecarlo[key] = run_cell(Method::kMonteCarlo, gate, axes, cfg);
      cells.krotov[key] = run_cell(Method::kKrotov, gate, axes, cfg);
    }
  }
  report(2, "minimal-energy table", table_check(cells));
  report(3, "krotov column", krotov_check(cells));

  const OptimizationReport cz_var = run_cell(Method::kVariational, "cz", "xyz", cfg);
  const OptimizationReport cz_mc = run_cell(Method::kMonteCarlo, "cz", "xyz", cfg);
  report(6, "method equivalence", equivalence_check(cells, cz_var, cz_mc, cfg));
  report(7, "property suites", property_suites_check(suites));
  report(8, "end to end", end_to_end_check(cells.variational.at({"cx", "xyz"}), cfg));

  for (const auto& [id, text] : lines) std::printf("%s\n", text.c_str());
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace cddgate

int main(int argc, char** argv) {
  try {
    return cddgate::run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 1;
  }
}
