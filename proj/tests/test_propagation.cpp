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
#include "cddgate/model.hpp"
#include "cddgate/propagation.hpp"
#include "cddgate/variational.hpp"
#include "test_support.hpp"

namespace cddgate {
namespace {

using testing::random_traceless_hermitian;

Mat4 basis(int mu, int nu) { return GeneratorBasis::instance().dense(GeneratorBasis::index_of(mu, nu)); }

// A smooth non-commuting Hamiltonian for order checks.
Mat4 wobble(double t) {
  return 1.3 * basis(1, 0) + 0.7 * std::cos(3.0 * t) * basis(3, 3) + 0.4 * t * basis(0, 2);
}

TEST(TimeGrid, Validation) {
  EXPECT_THROW(TimeGrid(1, 0.0, 1.0), Error);
  EXPECT_THROW(TimeGrid(10, 1.0, 1.0), Error);
  const TimeGrid g(4, 0.0, 2.0);
  EXPECT_DOUBLE_EQ(g.dt(), 0.5);
  EXPECT_EQ(g.n_nodes(), 5);
  EXPECT_DOUBLE_EQ(g.node(4), 2.0);
}

TEST(PropagateLinear, ConstantHamiltonianIsExact) {
  Rng rng(1);
  const Mat4 h = random_traceless_hermitian(rng);
  const auto traj = propagate_linear([&](double) { return h; }, TimeGrid(10, 0.0, 1.5));
  EXPECT_EQ(traj.U.size(), 11u);
  EXPECT_LT((traj.final() - expm_hermitian(h, 1.5)).norm(), 1e-12);
  EXPECT_LT((propagate_linear_final([&](double) { return h; }, TimeGrid(10, 0.0, 1.5)) -
             traj.final()).norm(), 1e-14);
}

TEST(PropagateLinear, SecondOrderAccurate) {
  const Mat4 ref = propagate_linear_final(wobble, TimeGrid(1 << 14, 0.0, 1.0));
  double prev = 0.0;
  for (int n : {32, 64, 128}) {
    const double err = (propagate_linear_final(wobble, TimeGrid(n, 0.0, 1.0)) - ref).norm();
    if (prev > 0.0) {
      const double order = std::log2(prev / err);
      EXPECT_NEAR(order, 2.0, 0.15) << n;
    }
    prev = err;
  }
}

TEST(Geodesic, CommutingCaseIsExponential) {
  // Without drift and with a purely local costate, P[U L U^+] = L and the
  // geodesic is exp(-i L t).
  Coords l = Coords::Zero();
  l[GeneratorBasis::index_of(1, 0)] = 0.8;
  l[GeneratorBasis::index_of(0, 3)] = -0.3;
  const auto path = propagate_geodesic(l, Mat4::Zero(), Distribution::full(), TimeGrid(100, 0, 1));
  EXPECT_LT((path.traj.final() - expm_coords(l)).norm(), 1e-8);
  for (const auto& h : path.controls.h) {
    EXPECT_NEAR(h[0], 0.8, 1e-12);
    EXPECT_NEAR(h[5], -0.3, 1e-12);
  }
}

TEST(Geodesic, FourthOrderAccurate) {
  Rng rng(17);
  const Coords l = rng.uniform_coords(1.0);
  const Mat4 drift = drift_hamiltonian(3.0);
  const Distribution d = Distribution::parse("xy");
  const Mat4 ref = geodesic_endpoint(l, drift, d, TimeGrid(4096, 0, 1)).U;
  double prev = 0.0;
  for (int n : {32, 64, 128}) {
    const double err = (geodesic_endpoint(l, drift, d, TimeGrid(n, 0, 1)).U - ref).norm();
    if (prev > 0.0) {
      EXPECT_NEAR(std::log2(prev / err), 4.0, 0.3) << n;
    }
    prev = err;
  }
}

TEST(Geodesic, StoredAndEndpointIntegratorsAgree) {
  Rng rng(2);
  const Coords l = rng.uniform_coords(1.0);
  const Mat4 drift = drift_hamiltonian(20.73);
  const TimeGrid g(2000, 0, 1);
  const auto path = propagate_geodesic(l, drift, Distribution::full(), g);
  const auto end = geodesic_endpoint(l, drift, Distribution::full(), g);
  EXPECT_LT((path.traj.final() - end.U).norm(), 1e-13);
}

TEST(Geodesic, UnitarityDriftBounded) {
  const PhysicalParams p = PhysicalParams::reference();
  const Mat4 drift = drift_hamiltonian(p.j33() * p.tau);
  Rng rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    const Coords l = rng.uniform_coords(4.0);
    const auto path = propagate_geodesic(l, drift, Distribution::full(), TimeGrid(2000, 0, 1));
    for (const auto& u : path.traj.U) ASSERT_LE(unitarity_drift(u), 1e-8);
  }
}

TEST(Geodesic, MidpointsMatchHalfStepIntegration) {
  Rng rng(5);
  const Coords l = rng.uniform_coords(1.0);
  const Mat4 drift = drift_hamiltonian(20.73);
  const auto coarse = propagate_geodesic(l, drift, Distribution::full(), TimeGrid(1000, 0, 1));
  const auto fine = propagate_geodesic(l, drift, Distribution::full(), TimeGrid(2000, 0, 1));
  for (int n = 0; n < 1000; n += 97) {
    EXPECT_LT((coarse.midpoints[n] - fine.traj.U[2 * n + 1]).norm(), 1e-7) << n;
  }
}

TEST(Geodesic, CoarseGridRaisesIntegrationError) {
  Coords l = Coords::Constant(40.0);
  try {
    propagate_geodesic(l, drift_hamiltonian(20.73), Distribution::full(), TimeGrid(10, 0, 1));
    FAIL() << "expected an integration-accuracy error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIntegrationAccuracy);
  }
}

TEST(Geodesic, RejectsNonFiniteCostate) {
  Coords l = Coords::Zero();
  l[0] = std::nan("");
  EXPECT_THROW(propagate_geodesic(l, Mat4::Zero(), Distribution::full(), TimeGrid(10, 0, 1)),
               Error);
}

TEST(Adjoint, HermitianAndTracelessAtEveryNode) {
  const PhysicalParams p = PhysicalParams::reference();
  const Mat4 drift = drift_hamiltonian(p.j33() * p.tau);
  const GateTarget cx = target_gate(GateKind::kCX);
  Rng rng(31);
  for (const char* axes : {"xyz", "yz"}) {
    const Distribution d = Distribution::parse(axes);
    const Coords l = rng.uniform_coords(1.0);
    const auto path = propagate_geodesic(l, drift, d, TimeGrid(2000, 0, 1));
    const Mat4 g1 = terminal_costate(path.traj.final(), cx.matrix);
    const auto gamma = propagate_adjoint_backward(path, l, drift, g1, d);
    ASSERT_EQ(gamma.size(), path.traj.U.size());
    for (const auto& g : gamma) {
      const double scale = std::max(1.0, g.norm());
      ASSERT_LE((g - g.adjoint()).norm() / scale, 1e-8);
      ASSERT_LE(std::abs(g.trace()) / scale, 1e-8);
    }
  }
}

TEST(Adjoint, ZeroTerminalConditionStaysZero) {
  Rng rng(6);
  const Coords l = rng.uniform_coords(1.0);
  const Mat4 drift = drift_hamiltonian(20.73);
  const auto path = propagate_geodesic(l, drift, Distribution::full(), TimeGrid(2000, 0, 1));
  for (const auto& g : propagate_adjoint_backward(path, l, drift, Mat4::Zero(), Distribution::full())) {
    EXPECT_EQ(g.norm(), 0.0);
  }
}

}  // namespace
}  // namespace cddgate
