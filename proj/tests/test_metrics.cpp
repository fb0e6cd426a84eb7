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

#include <cmath>

#include "cddgate/error.hpp"
#include "cddgate/metrics.hpp"
#include "cddgate/model.hpp"
#include "cddgate/propagation.hpp"
#include "test_support.hpp"

namespace cddgate {
namespace {

using testing::random_unitary;

ControlTrajectory constant_controls(int steps, const ChannelValues& h) {
  ControlTrajectory c;
  c.grid = TimeGrid(steps, 0.0, 1.0);
  c.h.assign(steps + 1, h);
  return c;
}

TEST(Infidelity, Examples) {
  const Mat4 cz = target_gate(GateKind::kCZ).matrix;
  EXPECT_NEAR(infidelity(cz, cz), 0.0, 1e-15);
  EXPECT_NEAR(infidelity(Mat4::Identity(), cz), 0.75, 1e-15);
  for (double phi : {0.3, 1.7, -2.9}) {
    EXPECT_NEAR(infidelity(std::polar(1.0, phi) * cz, cz), 0.0, 1e-15);
  }
}

TEST(Infidelity, SymmetricAndLeftInvariant) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat4 u = random_unitary(rng), v = random_unitary(rng), w = random_unitary(rng);
    const double i = infidelity(u, v);
    EXPECT_GE(i, 0.0);
    EXPECT_LE(i, 1.0);
    EXPECT_NEAR(i, infidelity(v, u), 1e-13);
    EXPECT_NEAR(i, infidelity(w * u, w * v), 1e-13);
    EXPECT_NEAR(cdd_fidelity(u, v), cdd_fidelity(w * u, w * v), 1e-13);
  }
}

TEST(CddFidelity, Examples) {
  Rng rng(13);
  const Mat4 u = random_unitary(rng);
  EXPECT_NEAR(cdd_fidelity(u, u), 1.0, 1e-14);
  const Mat4 xi = GeneratorBasis::instance().dense(GeneratorBasis::index_of(1, 0));
  EXPECT_NEAR(cdd_fidelity(Mat4::Identity(), xi), 0.0, 1e-15);
}

TEST(Energy, ZeroAndConstantControls) {
  EXPECT_EQ(energy_cost(constant_controls(50, {})), 0.0);
  const double a = 1.7;
  EXPECT_NEAR(energy_cost(constant_controls(50, {a, 0, 0, 0, 0, 0})), a * a / 2, 1e-14);
  EXPECT_NEAR(energy_cost(constant_controls(50, {a, 0, 0, 0, 0, a})), a * a, 1e-14);
  const auto flat = energy_integrand_curve(constant_controls(10, {a, 0, 0, 0, 0, 0}));
  for (double v : flat) EXPECT_DOUBLE_EQ(v, a * a / 2);
}

TEST(Energy, IntegrandIntegratesToCost) {
  Rng rng(14);
  ControlTrajectory c;
  c.grid = TimeGrid(137, 0.0, 1.0);
  for (int n = 0; n <= 137; ++n) {
    ChannelValues h;
    for (double& v : h) v = rng.uniform(-3, 3);
    c.h.push_back(h);
  }
  EXPECT_NEAR(trapezoid(energy_integrand_curve(c), c.grid.dt()), energy_cost(c), 1e-12);
}

TEST(Energy, InvariantUnderQubitChannelSwap) {
  Rng rng(15);
  ControlTrajectory c;
  c.grid = TimeGrid(20, 0.0, 1.0);
  for (int n = 0; n <= 20; ++n) {
    ChannelValues h;
    for (double& v : h) v = rng.uniform(-3, 3);
    c.h.push_back(h);
  }
  ControlTrajectory s = c;
  for (auto& h : s.h) std::swap_ranges(h.begin(), h.begin() + 3, h.begin() + 3);
  EXPECT_NEAR(energy_cost(c), energy_cost(s), 1e-13);
}

TEST(Energy, GridMismatchIsAnError) {
  ControlTrajectory c = constant_controls(10, {});
  c.h.pop_back();
  EXPECT_THROW(energy_cost(c), Error);
}

TEST(FidelityCurve, CzFromConstantHamiltonian) {
  const double tau = 40e-9;
  const Mat4 h = cz_hamiltonian(tau) * tau;
  const auto traj = propagate_linear([&](double) { return h; }, TimeGrid(100, 0.0, 1.0));
  const auto curve = fidelity_curve(traj, target_gate(GateKind::kCZ).matrix);
  ASSERT_EQ(curve.size(), 101u);
  EXPECT_NEAR(curve.front(), 0.25, 1e-14);
  EXPECT_NEAR(curve.back(), 1.0, 1e-12);
  for (double f : curve) {
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
  }
}

TEST(Method, Names) {
  for (Method m : {Method::kVariational, Method::kMonteCarlo, Method::kKrotov}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  EXPECT_THROW(parse_method("grape"), Error);
}

}  // namespace
}  // namespace cddgate
