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

#include "cddgate/algebra.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

#include "cddgate/error.hpp"

namespace cddgate {

namespace {

const std::array<Mat2, 4>& pauli_table() {
  static const std::array<Mat2, 4> table = [] {
    const cplx i(0.0, 1.0);
    std::array<Mat2, 4> p;
    p[0] << 1, 0, 0, 1;
    p[1] << 0, 1, 1, 0;
    p[2] << 0, -i, i, 0;
    p[3] << 1, 0, 0, -1;
    return p;
  }();
  return table;
}

// Basis slots of the six local generators (X1, Y1, Z1, X2, Y2, Z2).
constexpr std::array<int, kChannels> kChannelSlots = {3, 7, 11, 0, 1, 2};

}  // namespace

const Mat2& pauli(int mu) { return pauli_table().at(mu); }

PauliProduct PauliProduct::make(int mu, int nu) {
  PauliProduct p;
  p.mu = mu;
  p.nu = nu;
  const Mat2& a = pauli(mu);
  const Mat2& b = pauli(nu);
  for (int r1 = 0; r1 < 2; ++r1) {
    for (int r2 = 0; r2 < 2; ++r2) {
      const int row = 2 * r1 + r2;
      for (int c1 = 0; c1 < 2; ++c1) {
        for (int c2 = 0; c2 < 2; ++c2) {
          const cplx v = a(r1, c1) * b(r2, c2);
          if (v != cplx(0.0, 0.0)) {
            p.col[row] = 2 * c1 + c2;
            p.val[row] = v;
          }
        }
      }
    }
  }
  return p;
}

Mat4 PauliProduct::dense() const {
  Mat4 m = Mat4::Zero();
  for (int r = 0; r < 4; ++r) m(r, col[r]) = val[r];
  return m;
}

double PauliProduct::coord(const Mat4& m) const {
  // Tr(P M) = sum_r P(r, col[r]) M(col[r], r)
  double acc = 0.0;
  for (int r = 0; r < 4; ++r) {
    const cplx pm = val[r] * m(col[r], r);
    acc += pm.real();
  }
  return 0.25 * acc;
}

void PauliProduct::add_to(Mat4& m, double a) const {
  for (int r = 0; r < 4; ++r) m(r, col[r]) += a * val[r];
}

GeneratorBasis::GeneratorBasis() {
  int k = 0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == 0 && nu == 0) continue;
      elems_[k] = PauliProduct::make(mu, nu);
      dense_[k] = elems_[k].dense();
      ++k;
    }
  }
}

const GeneratorBasis& GeneratorBasis::instance() {
  static const GeneratorBasis basis;
  return basis;
}

int GeneratorBasis::index_of(int mu, int nu) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3 || (mu == 0 && nu == 0)) {
    fail(ErrorCode::kInvalidInput, "no generator for sigma_" + std::to_string(mu) +
                                       " x sigma_" + std::to_string(nu));
  }
  return 4 * mu + nu - 1;
}

std::string GeneratorBasis::label(int k) const {
  static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
  return {kNames[elems_[k].mu], kNames[elems_[k].nu]};
}

int channel_basis_index(int channel) { return kChannelSlots.at(channel); }

Distribution::Distribution(bool x, bool y, bool z) : axes_{x, y, z} {
  if (!x && !y && !z) fail(ErrorCode::kInvalidInput, "control distribution must not be empty");
}

Distribution Distribution::parse(std::string_view axes) {
  bool x = false, y = false, z = false;
  if (axes.empty()) fail(ErrorCode::kInvalidInput, "empty axes specification");
  for (char c : axes) {
    bool* slot = nullptr;
    switch (c) {
      case 'x': case 'X': slot = &x; break;
      case 'y': case 'Y': slot = &y; break;
      case 'z': case 'Z': slot = &z; break;
      default:
        fail(ErrorCode::kInvalidInput, "invalid axis '" + std::string(1, c) + "' in \"" +
                                           std::string(axes) + "\"");
    }
    if (*slot) fail(ErrorCode::kInvalidInput, "repeated axis in \"" + std::string(axes) + "\"");
    *slot = true;
  }
  return Distribution(x, y, z);
}

int Distribution::size() const {
  return 2 * (int(axes_[0]) + int(axes_[1]) + int(axes_[2]));
}

std::string Distribution::label() const {
  std::string s;
  if (axes_[0]) s += 'x';
  if (axes_[1]) s += 'y';
  if (axes_[2]) s += 'z';
  return s;
}

double hs_inner(const Mat4& a, const Mat4& b) {
  return 0.25 * (a * b).trace().real();
}

bool is_hermitian(const Mat4& m, double rel_tol) {
  const double scale = std::max(m.norm(), 1.0);
  return (m - m.adjoint()).norm() <= rel_tol * scale;
}

bool is_unitary(const Mat4& u, double tol) {
  return (u.adjoint() * u - Mat4::Identity()).norm() <= tol;
}

Coords basis_coords(const Mat4& m) {
  if (!is_hermitian(m)) fail(ErrorCode::kInvalidInput, "basis_coords: matrix is not Hermitian");
  return basis_coords_unchecked(m);
}

Coords basis_coords_unchecked(const Mat4& m) {
  const auto& basis = GeneratorBasis::instance();
  Coords c;
  for (int k = 0; k < kBasisDim; ++k) c[k] = basis.element(k).coord(m);
  return c;
}

Mat4 from_coords(const Coords& c) {
  const auto& basis = GeneratorBasis::instance();
  Mat4 m = Mat4::Zero();
  for (int k = 0; k < kBasisDim; ++k) basis.element(k).add_to(m, c[k]);
  return m;
}

ChannelValues channel_coords(const Mat4& m, const Distribution& dist) {
  const auto& basis = GeneratorBasis::instance();
  ChannelValues h{};
  for (int ch = 0; ch < kChannels; ++ch) {
    if (dist.has_channel(ch)) h[ch] = basis.element(kChannelSlots[ch]).coord(m);
  }
  return h;
}

Mat4 from_channels(const ChannelValues& h) {
  const auto& basis = GeneratorBasis::instance();
  Mat4 m = Mat4::Zero();
  for (int ch = 0; ch < kChannels; ++ch) {
    if (h[ch] != 0.0) basis.element(kChannelSlots[ch]).add_to(m, h[ch]);
  }
  return m;
}

Mat4 project(const Mat4& m, const Distribution& dist) {
  return from_channels(channel_coords(m, dist));
}

Mat4 expm_hermitian(const Mat4& m, double t) {
  Eigen::SelfAdjointEigenSolver<Mat4> eig(m);
  const Mat4& v = eig.eigenvectors();
  Eigen::Matrix<cplx, 4, 1> phases;
  for (int j = 0; j < 4; ++j) phases[j] = std::polar(1.0, -eig.eigenvalues()[j] * t);
  return v * phases.asDiagonal() * v.adjoint();
}

Mat4 expm_coords(const Coords& c) { return expm_hermitian(from_coords(c)); }

LogResult principal_log(const Mat4& u, double branch_tol) {
  constexpr double pi = std::numbers::pi;
  // The Schur form of a normal matrix is diagonal with a unitary Schur basis,
  // which stays orthonormal for degenerate eigenvalues.
  Eigen::ComplexSchur<Mat4> schur(u);
  const Mat4& q = schur.matrixU();
  const Mat4& t = schur.matrixT();

  LogResult out;
  Eigen::Vector4d gen;  // eigenvalues of H where U = exp(-i H)
  for (int j = 0; j < 4; ++j) {
    double theta = std::arg(t(j, j));  // (-pi, pi]
    if (theta >= pi - branch_tol || theta <= -pi + branch_tol) {
      theta = pi;
      out.near_branch_cut = true;
    }
    gen[j] = -theta;
  }
  const Mat4 h = q * gen.cast<cplx>().asDiagonal() * q.adjoint();
  out.phase = 0.25 * h.trace().real();
  out.coords = basis_coords_unchecked(h);
  return out;
}

}  // namespace cddgate
