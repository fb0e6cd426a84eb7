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

#include "cddgate/cddgate.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "cddgate/config.hpp"
#include "cddgate/error.hpp"
#include "cddgate/experiments.hpp"
#include "cddgate/io.hpp"

struct cddgate_config {
  cddgate::RunConfig cfg;
};

struct cddgate_report {
  cddgate::OptimizationReport report;
  cddgate::RunConfig cfg;
  cddgate::GateTarget target;
};

namespace {

thread_local std::string g_last_error;

cddgate_status set_error(cddgate_status status, const std::string& msg) {
  g_last_error = msg;
  return status;
}

cddgate_status to_status(cddgate::ErrorCode code) {
  switch (code) {
    case cddgate::ErrorCode::kInvalidInput: return CDDGATE_ERR_INVALID_INPUT;
    case cddgate::ErrorCode::kConfig: return CDDGATE_ERR_CONFIG;
    case cddgate::ErrorCode::kNotConverged: return CDDGATE_ERR_NOT_CONVERGED;
    case cddgate::ErrorCode::kIntegrationAccuracy: return CDDGATE_ERR_INTEGRATION;
    case cddgate::ErrorCode::kIo: return CDDGATE_ERR_IO;
  }
  return CDDGATE_ERR_INTERNAL;
}

template <typename F>
cddgate_status guarded(F&& body) {
  try {
    body();
    return CDDGATE_OK;
  } catch (const cddgate::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CDDGATE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CDDGATE_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(CDDGATE_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) cddgate::fail(cddgate::ErrorCode::kInvalidInput, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* cddgate_version(void) { return "0.1.0"; }

const char* cddgate_last_error(void) { return g_last_error.c_str(); }

void cddgate_string_free(char* s) { std::free(s); }

cddgate_status cddgate_config_default(cddgate_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new cddgate_config{};
  });
}

cddgate_status cddgate_config_load(const char* path, cddgate_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    std::string p = path ? path : "";
    if (p.empty()) {
      const char* env = std::getenv(cddgate::kConfigEnvVar);
      if (env != nullptr) p = env;
    }
    auto* c = new cddgate_config{};
    try {
      if (!p.empty()) c->cfg = cddgate::RunConfig::load(p);
    } catch (...) {
      delete c;
      throw;
    }
    *out = c;
  });
}

cddgate_status cddgate_config_from_json(const char* text, cddgate_config** out) {
  return guarded([&] {
    require(out, "out");
    require(text, "text");
    *out = nullptr;
    cddgate::RunConfig cfg = cddgate::RunConfig::from_string(text);
    *out = new cddgate_config{std::move(cfg)};
  });
}

cddgate_status cddgate_config_to_json(const cddgate_config* cfg, char** out) {
  return guarded([&] {
    require(cfg, "config");
    require(out, "out");
    *out = dup_string(cfg->cfg.to_json().dump(2));
  });
}

cddgate_status cddgate_config_hash(const cddgate_config* cfg, char out[17]) {
  return guarded([&] {
    require(cfg, "config");
    require(out, "out");
    const std::string h = cfg->cfg.hash();
    std::memcpy(out, h.c_str(), 17);
  });
}

void cddgate_config_free(cddgate_config* cfg) { delete cfg; }

cddgate_status cddgate_cdd_fidelity(const cddgate_config* cfg, double omega_ghz,
                                    double* fidelity) {
  return guarded([&] {
    require(cfg, "config");
    require(fidelity, "fidelity");
    *fidelity = cddgate::cdd_benchmark_fidelity(cfg->cfg.physical,
                                                cddgate::kTwoPi * omega_ghz * 1e9,
                                                cfg->cfg.grids.cdd_steps_per_fast_period);
  });
}

cddgate_status cddgate_cdd_bench_json(const cddgate_config* cfg, char** out) {
  return guarded([&] {
    require(cfg, "config");
    require(out, "out");
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : cddgate::cdd_benchmark(cfg->cfg)) {
      rows.push_back({{"omega_ghz", r.omega_ghz},
                      {"fidelity", r.fidelity},
                      {"steps", r.steps},
                      {"runtime_s", r.runtime_s}});
    }
    *out = dup_string(rows.dump(2));
  });
}

cddgate_status cddgate_optimize(const cddgate_config* cfg, const char* method, const char* gate,
                                const char* axes, cddgate_report** out) {
  return guarded([&] {
    require(cfg, "config");
    require(method, "method");
    require(gate, "gate");
    require(axes, "axes");
    require(out, "out");
    *out = nullptr;
    auto r = std::make_unique<cddgate_report>();
    r->cfg = cfg->cfg;
    r->target = cddgate::resolve_gate(gate);
    const cddgate::Distribution dist = cddgate::Distribution::parse(axes);
    r->report = cddgate::run_optimization(cddgate::parse_method(method), r->target, dist, r->cfg);
    *out = r.release();
  });
}

double cddgate_report_infidelity(const cddgate_report* r) { return r ? r->report.infidelity : 1.0; }
double cddgate_report_energy(const cddgate_report* r) { return r ? r->report.energy : 0.0; }
int cddgate_report_iterations(const cddgate_report* r) { return r ? r->report.iterations : 0; }
int cddgate_report_converged(const cddgate_report* r) { return r && r->report.converged ? 1 : 0; }
double cddgate_report_runtime(const cddgate_report* r) { return r ? r->report.runtime_s : 0.0; }

size_t cddgate_report_control_nodes(const cddgate_report* r) {
  return r ? r->report.controls.h.size() : 0;
}

cddgate_status cddgate_report_controls(const cddgate_report* r, double* t_ns, double* h_rad_s) {
  return guarded([&] {
    require(r, "report");
    const auto& c = r->report.controls;
    const double tau = r->cfg.physical.tau;
    for (std::size_t n = 0; n < c.h.size(); ++n) {
      if (t_ns) t_ns[n] = c.grid.node(int(n)) * tau * 1e9;
      if (h_rad_s) {
        for (int k = 0; k < 6; ++k) h_rad_s[6 * n + k] = c.h[n][k] / tau;
      }
    }
  });
}

cddgate_status cddgate_report_to_json(const cddgate_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = dup_string(
        cddgate::report_to_json(r->report, cddgate::run_metadata(r->cfg)).dump(2));
  });
}

cddgate_status cddgate_report_write(const cddgate_report* r, const char* dir) {
  return guarded([&] {
    require(r, "report");
    require(dir, "dir");
    cddgate::write_run_outputs(dir, r->report, r->cfg);
  });
}

cddgate_status cddgate_report_swap_fidelity(const cddgate_report* r, double* fidelity,
                                            double* swapped_fidelity) {
  return guarded([&] {
    require(r, "report");
    const auto check = cddgate::swap_fidelity(r->report.controls, r->target, r->cfg.physical);
    if (fidelity) *fidelity = check.fidelity;
    if (swapped_fidelity) *swapped_fidelity = check.swapped_fidelity;
  });
}

void cddgate_report_free(cddgate_report* r) { delete r; }

cddgate_status cddgate_verify(const cddgate_config* cfg, const char* controls_csv,
                              const char* gate, double omega_ghz, double* fidelity,
                              double* cdd_only_fidelity) {
  return guarded([&] {
    require(cfg, "config");
    require(controls_csv, "controls_csv");
    require(gate, "gate");
    const auto& c = cfg->cfg;
    const cddgate::ControlTrajectory controls =
        cddgate::read_controls_csv(controls_csv, c.physical.tau);
    const auto result = cddgate::verify_full_stack(controls, cddgate::resolve_gate(gate),
                                                   c.physical, cddgate::kTwoPi * omega_ghz * 1e9,
                                                   c.grids.cdd_steps_per_fast_period);
    if (fidelity) *fidelity = result.fidelity;
    if (cdd_only_fidelity) *cdd_only_fidelity = result.cdd_only_fidelity;
  });
}

cddgate_status cddgate_reference_energy(const char* gate, const char* axes, const char* method,
                                        double* energy) {
  return guarded([&] {
    require(gate, "gate");
    require(axes, "axes");
    require(method, "method");
    require(energy, "energy");
    const auto v = cddgate::reference_energy(gate, axes, cddgate::parse_method(method));
    if (!v) {
      cddgate::fail(cddgate::ErrorCode::kInvalidInput,
                    std::string("no reference value for ") + gate + "/" + axes + "/" + method);
    }
    *energy = *v;
  });
}

}  // extern "C"
