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

#include "cddgate/model.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "json.hpp"

#include "cddgate/error.hpp"

namespace cddgate {

namespace {

// exp(-i a sigma) for a Pauli matrix sigma.
Mat2 pauli_rotation(double a, int axis) {
  return std::cos(a) * Mat2::Identity() - cplx(0.0, std::sin(a)) * pauli(axis);
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return m;
}

Mat4 cx_matrix() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return std::polar(1.0, -std::numbers::pi / 4) * m;
}

Mat4 to_special_unitary(const Mat4& m) {
  Eigen::JacobiSVD<Mat4> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat4 u = svd.matrixU() * svd.matrixV().adjoint();
  const cplx det = u.determinant();
  return u * std::polar(1.0, -std::arg(det) / 4.0);
}

}  // namespace

Eigen::Matrix4d PhysicalParams::reference_coupling_mhz() {
  Eigen::Matrix4d j;
  j << 0.0, 1.1, 1.2, 5.7,
       4.7, 11.8, 9.4, 2.1,
       4.8, 9.8, 31.6, 3.4,
       0.8, 9.0, 0.2, 82.5;
  return j;
}

PhysicalParams PhysicalParams::reference() {
  PhysicalParams p;
  p.coupling = reference_coupling_mhz() * (kTwoPi * 1.0e6);
  return p;
}

void PhysicalParams::validate() const {
  if (coupling(0, 0) != 0.0) fail(ErrorCode::kConfig, "J[0][0] must be zero (traceless H_N)");
  if (!(tau > 0.0)) fail(ErrorCode::kConfig, "gate duration tau must be positive");
  if (!(omega_cdd > 0.0)) fail(ErrorCode::kConfig, "CDD frequency must be positive");
  if (!coupling.allFinite()) fail(ErrorCode::kConfig, "coupling matrix has non-finite entries");
}

Mat4 native_hamiltonian(const Eigen::Matrix4d& coupling) {
  Mat4 h = Mat4::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == 0 && nu == 0) continue;
      if (coupling(mu, nu) != 0.0) PauliProduct::make(mu, nu).add_to(h, coupling(mu, nu));
    }
  }
  return h;
}

Mat4 cdd_unitary(double t, double omega) {
  const double a = omega * t;
  const Mat2 u1 = pauli_rotation(a, 3) * pauli_rotation(3.0 * a, 1);
  const Mat2 u2 = pauli_rotation(8.0 * a, 3) * pauli_rotation(3.0 * a, 1);
  return kron(u1, u2);
}

Mat4 cdd_hamiltonian(double t, double omega) {
  const double w = omega;
  const Mat2 h1 = w * pauli(3) + 3.0 * w * std::cos(2.0 * w * t) * pauli(1) +
                  3.0 * w * std::sin(2.0 * w * t) * pauli(2);
  const Mat2 h2 = 8.0 * w * pauli(3) + 3.0 * w * std::cos(16.0 * w * t) * pauli(1) +
                  3.0 * w * std::sin(16.0 * w * t) * pauli(2);
  return kron(h1, Mat2::Identity()) + kron(Mat2::Identity(), h2);
}

Mat4 drift_hamiltonian(double j33) {
  Mat4 h = Mat4::Zero();
  PauliProduct::make(2, 2).add_to(h, 0.5 * j33);
  PauliProduct::make(3, 3).add_to(h, 0.5 * j33);
  return h;
}

Mat4 averaged_hamiltonian_numeric(const PhysicalParams& params, int nodes) {
  if (nodes < 31) fail(ErrorCode::kInvalidInput, "averaging needs more than 30 nodes");
  const Mat4 hn = native_hamiltonian(params.coupling);
  const double period = kTwoPi / params.omega_cdd;
  Mat4 acc = Mat4::Zero();
  for (int j = 0; j < nodes; ++j) {
    const Mat4 u = cdd_unitary(period * j / nodes, params.omega_cdd);
    acc += u.adjoint() * hn * u;
  }
  return acc / double(nodes);
}

Mat4 cz_hamiltonian(double tau) {
  Mat4 h = Mat4::Zero();
  const double a = std::numbers::pi / (4.0 * tau);
  PauliProduct::make(0, 3).add_to(h, a);
  PauliProduct::make(3, 0).add_to(h, a);
  PauliProduct::make(3, 3).add_to(h, -a);
  return h;
}

Mat2 r_gate_left_factor() {
  Mat2 u;
  u << cplx(-0.942908, -0.158967), cplx(0.0207764, 0.291929),
       cplx(-0.0207764, 0.291929), cplx(-0.942908, 0.158967);
  return u;
}

Mat2 r_gate_right_factor() {
  Mat2 u;
  u << cplx(0.260618, 0.772926), cplx(0.532428, 0.226236),
       cplx(-0.532428, 0.226236), cplx(0.260618, -0.772926);
  return u;
}

GateTarget target_gate(GateKind kind) {
  GateTarget g;
  g.kind = kind;
  switch (kind) {
    case GateKind::kCZ: {
      g.name = "cz";
      Eigen::Vector4cd d(1.0, 1.0, 1.0, -1.0);
      g.matrix = std::polar(1.0, -std::numbers::pi / 4) * Mat4(d.asDiagonal());
      break;
    }
    case GateKind::kCX:
      g.name = "cx";
      g.matrix = cx_matrix();
      break;
    case GateKind::kR:
      g.name = "r";
      g.matrix = to_special_unitary(kron(r_gate_left_factor(), r_gate_right_factor()) *
                                    cx_matrix());
      break;
    case GateKind::kCustom:
      fail(ErrorCode::kInvalidInput, "custom targets need a matrix; use custom_gate()");
  }
  return g;
}

GateTarget custom_gate(const Mat4& matrix, std::string name) {
  if (!matrix.allFinite() || !is_unitary(matrix, 1e-4)) {
    fail(ErrorCode::kInvalidInput, "target matrix '" + name + "' is not unitary");
  }
  GateTarget g;
  g.kind = GateKind::kCustom;
  g.name = std::move(name);
  g.matrix = to_special_unitary(matrix);
  return g;
}

GateTarget load_custom_gate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kConfig, "cannot open gate file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kConfig, "gate file " + path.string() + ": " + e.what());
  }
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::kConfig, "gate file " + path.string() + ": " + why);
  };
  if (!j.is_array() || j.size() != 4) bad("expected an array of 4 rows");
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != 4) bad("row " + std::to_string(r) + " must have 4 entries");
    for (int c = 0; c < 4; ++c) {
      const auto& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        bad("entry [" + std::to_string(r) + "][" + std::to_string(c) + "] must be [re, im]");
      }
      m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  try {
    return custom_gate(m, "custom:" + path.filename().string());
  } catch (const Error& e) {
    fail(ErrorCode::kConfig, e.what());
  }
}

GateTarget resolve_gate(std::string_view spec) {
  if (spec == "cz" || spec == "CZ") return target_gate(GateKind::kCZ);
  if (spec == "cx" || spec == "CX") return target_gate(GateKind::kCX);
  if (spec == "r" || spec == "R") return target_gate(GateKind::kR);
  constexpr std::string_view prefix = "custom:";
  if (spec.substr(0, prefix.size()) == prefix) {
    return load_custom_gate(std::filesystem::path(std::string(spec.substr(prefix.size()))));
  }
  fail(ErrorCode::kConfig, "unknown gate \"" + std::string(spec) + "\" (expected cz, cx, r or custom:<path>)");
}

}  // namespace cddgate
