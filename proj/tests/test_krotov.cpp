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

#include <gtest/gtest.h>

#include "cddgate/error.hpp"
#include "cddgate/krotov.hpp"
#include "cddgate/model.hpp"
#include "cddgate/propagation.hpp"

namespace cddgate {
namespace {

GeodesicProblem reference_problem(const char* axes, int steps) {
  const PhysicalParams p = PhysicalParams::reference();
  GeodesicProblem prob;
  prob.drift = drift_hamiltonian(p.j33() * p.tau);
  prob.dist = Distribution::parse(axes);
  prob.grid = TimeGrid(steps, 0.0, 1.0);
  return prob;
}

TEST(Krotov, ZeroIterationsGiveConstantControlEnergy) {
  for (const char* axes : {"xyz", "xy"}) {
    const auto prob = reference_problem(axes, 100);
    KrotovSettings s;
    s.max_iter = 0;
    s.init_amplitude = 0.3;
    const auto r = krotov_optimize(target_gate(GateKind::kCX), prob, s);
    EXPECT_EQ(r.iterations, 0);
    EXPECT_NEAR(r.energy, 0.5 * 0.3 * 0.3 * prob.dist.size(), 1e-13) << axes;
    EXPECT_NEAR(r.energy, energy_cost(r.controls), 1e-13);
  }
}

TEST(Krotov, FidelityMonotoneWithAutoTuning) {
  const auto prob = reference_problem("xyz", 200);
  KrotovSettings s;
  s.max_iter = 40;
  const auto r = krotov_optimize(target_gate(GateKind::kCX), prob, s);
  ASSERT_EQ(int(r.fidelity_trace.size()), r.iterations + 1);
  for (std::size_t i = 1; i < r.fidelity_trace.size(); ++i) {
    ASSERT_GE(r.fidelity_trace[i], r.fidelity_trace[i - 1] - 1e-12) << i;
  }
  EXPECT_GT(r.fidelity_trace.back(), r.fidelity_trace.front());
}

TEST(Krotov, SuppressedChannelsStayZero) {
  const auto prob = reference_problem("yz", 100);
  KrotovSettings s;
  s.max_iter = 10;
  const auto r = krotov_optimize(target_gate(GateKind::kCX), prob, s);
  for (const auto& h : r.controls.h) {
    EXPECT_EQ(h[0], 0.0);
    EXPECT_EQ(h[3], 0.0);
  }
}

TEST(Krotov, ReachesCzOnCoarseGrid) {
  const auto prob = reference_problem("xyz", 200);
  KrotovSettings s;
  s.max_iter = 3000;
  s.infidelity_tol = 1e-3;
  const auto r = krotov_optimize(target_gate(GateKind::kCZ), prob, s);
  EXPECT_TRUE(r.converged) << r.note << " I=" << r.infidelity;
  EXPECT_NEAR(r.fidelity_vs_time.back(), 1.0 - r.infidelity, 1e-12);
}

TEST(Krotov, SmallFixedStepWeightFlagsDivergence) {
  const auto prob = reference_problem("xyz", 100);
  KrotovSettings s;
  s.auto_lambda = false;
  s.lambda_a = 1e-9;
  s.max_iter = 100;
  const auto r = krotov_optimize(target_gate(GateKind::kCX), prob, s);
  EXPECT_FALSE(r.converged);
  EXPECT_NE(r.note.find("lambda_a"), std::string::npos) << r.note;
}

TEST(Krotov, SettingsValidation) {
  KrotovSettings s;
  s.lambda_a = 0.0;
  EXPECT_THROW(s.validate(), Error);
}

}  // namespace
}  // namespace cddgate
