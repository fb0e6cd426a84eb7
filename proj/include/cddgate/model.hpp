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

// Physical model of the tunable-coupler qubit pair in the rotating frame:
// native Hamiltonian, the continuous-dynamical-decoupling (CDD) drive and its
// closed-form unitary, the effective drift left after CDD averaging, and the
// target gates.

#include <Eigen/Dense>

#include <filesystem>
#include <string>
#include <string_view>

#include "cddgate/algebra.hpp"

namespace cddgate {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Physical parameters in SI units (angular frequencies in rad/s, times in s).
struct PhysicalParams {
  double omega_z = kTwoPi * 5.0e9;
  /// J(mu, nu) couples sigma_mu (x) sigma_nu; J(0, 0) must be zero.
  Eigen::Matrix4d coupling = Eigen::Matrix4d::Zero();
  double omega_cdd = kTwoPi * 2.0e9;
  double tau = 40.0e-9;

  /// Coupling matrix of the reference device, in MHz (multiply by 2 pi 1e6).
  static Eigen::Matrix4d reference_coupling_mhz();
  /// Reference device: J from reference_coupling_mhz(), 40 ns gate, 2 GHz CDD.
  static PhysicalParams reference();

  double j33() const { return coupling(3, 3); }
  /// Throws kConfig when an invariant is violated.
  void validate() const;
};

/// H_N = sum_{mu,nu} J_{mu,nu} sigma_mu (x) sigma_nu.
Mat4 native_hamiltonian(const Eigen::Matrix4d& coupling);

/// U_CDD(t) = U_1(t) (x) U_2(t) with
///   U_1 = exp(-i w t Z) exp(-3i w t X),  U_2 = exp(-8i w t Z) exp(-3i w t X).
/// Period 2 pi / w (each factor is in fact pi / w periodic).
Mat4 cdd_unitary(double t, double omega);

/// Drive Hamiltonian that generates cdd_unitary, i.e. i (dU/dt) U^dagger:
///   H1 = w Z + 3w X cos(2wt) + 3w Y sin(2wt)
///   H2 = 8w Z + 3w X cos(16wt) + 3w Y sin(16wt)
/// The +Y sin sign is the one consistent with the closed form; checked by
/// finite differences in the tests.
Mat4 cdd_hamiltonian(double t, double omega);

/// Period average of U_CDD^dagger H U_CDD leaves only (J33/2)(YY + ZZ).
Mat4 drift_hamiltonian(double j33);

/// (w / 2 pi) int_0^{2 pi / w} U_CDD^dagger(t) H_N U_CDD(t) dt by the periodic
/// trapezoidal rule. The integrand is a trigonometric polynomial of degree 30
/// in w t, so any node count above 30 integrates it exactly; the default
/// leaves a wide margin.
Mat4 averaged_hamiltonian_numeric(const PhysicalParams& params, int nodes = 256);

/// (pi / 4 tau)(I Z + Z I - Z Z); exp(-i H tau) is the CZ target.
Mat4 cz_hamiltonian(double tau);

enum class GateKind { kCZ, kCX, kR, kCustom };

struct GateTarget {
  GateKind kind = GateKind::kCustom;
  std::string name;
  /// Unitary with unit determinant.
  Mat4 matrix = Mat4::Identity();
};

/// Built-in targets. CZ and CX carry the exp(-i pi/4) prefactor so that
/// det = 1; R = (U1 (x) U2) CX with the reference single-qubit rotations,
/// projected back onto SU(4).
GateTarget target_gate(GateKind kind);

/// Wraps an arbitrary matrix: rejects non-unitary input (tolerance 1e-6),
/// then snaps to the nearest unitary and re-phases to unit determinant.
GateTarget custom_gate(const Mat4& matrix, std::string name = "custom");

/// Reads a JSON file holding 4 rows x 4 entries, each entry [re, im].
GateTarget load_custom_gate(const std::filesystem::path& path);

/// "cz", "cx", "r" or "custom:<path>".
GateTarget resolve_gate(std::string_view spec);

/// The two single-qubit rotations that define the R target, as quoted
/// (6 significant decimals, not exactly unitary).
Mat2 r_gate_left_factor();
Mat2 r_gate_right_factor();

}  // namespace cddgate
