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

// su(4) algebra on 4x4 complex matrices: the Pauli-product generator basis,
// projections onto single-qubit control distributions, and the matrix
// exponential / principal logarithm used throughout the library.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <utility>

namespace cddgate {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline constexpr int kBasisDim = 15;
inline constexpr int kChannels = 6;

/// Real coordinates in the generator basis, e.g. a costate Lambda(0).
using Coords = Eigen::Matrix<double, kBasisDim, 1>;
/// One value per single-qubit control channel, ordered
/// (X1, Y1, Z1, X2, Y2, Z2) where X1 = sigma_x (x) I and X2 = I (x) sigma_x.
using ChannelValues = std::array<double, kChannels>;

/// sigma_0 = I, sigma_1..3 = x, y, z.
const Mat2& pauli(int mu);

/// A tensor product sigma_mu (x) sigma_nu stored sparsely: every Pauli
/// product has exactly one nonzero entry per row.
struct PauliProduct {
  int mu = 0;
  int nu = 0;
  std::array<int, 4> col{};   // column of the nonzero entry in each row
  std::array<cplx, 4> val{};  // its value

  static PauliProduct make(int mu, int nu);

  Mat4 dense() const;
  /// (1/4) Re Tr(P M).
  double coord(const Mat4& m) const;
  /// m += a * P.
  void add_to(Mat4& m, double a) const;
};

/// The 15 traceless generators sigma_mu (x) sigma_nu, (mu, nu) != (0, 0),
/// ordered row-major over (mu, nu):
///   k = 0..2  -> (0,1) (0,2) (0,3)
///   k = 3..6  -> (1,0) (1,1) (1,2) (1,3)
///   k = 7..10 -> (2,0) ... (2,3)
///   k = 11..14 -> (3,0) ... (3,3)
/// They are orthonormal under <A, B> = (1/4) Tr(A B).
class GeneratorBasis {
 public:
  static const GeneratorBasis& instance();

  static constexpr int size() { return kBasisDim; }
  const PauliProduct& element(int k) const { return elems_[k]; }
  const Mat4& dense(int k) const { return dense_[k]; }
  std::pair<int, int> indices(int k) const { return {elems_[k].mu, elems_[k].nu}; }
  static int index_of(int mu, int nu);
  /// Label such as "XI" or "ZZ".
  std::string label(int k) const;

 private:
  GeneratorBasis();
  std::array<PauliProduct, kBasisDim> elems_;
  std::array<Mat4, kBasisDim> dense_;
};

/// Basis index of control channel c (0..5).
int channel_basis_index(int channel);

/// Allowed single-qubit control axes. The same axis mask applies to both
/// qubits, so a restricted set such as {y, z} keeps 4 of the 6 channels.
class Distribution {
 public:
  /// All six local generators.
  static Distribution full() { return Distribution(true, true, true); }
  /// Parses "xyz", "yz", "xz", "xy" (any non-empty subset, any order).
  static Distribution parse(std::string_view axes);

  Distribution(bool x, bool y, bool z);

  bool axis(int a) const { return axes_[a]; }
  bool has_channel(int channel) const { return axes_[channel % 3]; }
  int size() const;
  /// Canonical label, "xyz" / "yz" / ...
  std::string label() const;

  bool operator==(const Distribution&) const = default;

 private:
  std::array<bool, 3> axes_{};
};

/// Hilbert-Schmidt inner product (1/4) Re Tr(A B).
double hs_inner(const Mat4& a, const Mat4& b);

/// ||M - M^dagger||_F <= rel_tol * ||M||_F (absolute for tiny M).
bool is_hermitian(const Mat4& m, double rel_tol = 1e-12);
bool is_unitary(const Mat4& u, double tol = 1e-10);

/// lambda_k = (1/4) Tr(alpha_k M). Throws kInvalidInput if M is not Hermitian.
Coords basis_coords(const Mat4& m);
/// Unchecked variant for hot loops.
Coords basis_coords_unchecked(const Mat4& m);
/// sum_k c_k alpha_k.
Mat4 from_coords(const Coords& c);

/// Control amplitudes h_k = (1/4) Tr(g_k M) for the channels in the
/// distribution; suppressed channels are zero.
ChannelValues channel_coords(const Mat4& m, const Distribution& dist);
/// sum_k h_k g_k.
Mat4 from_channels(const ChannelValues& h);

/// Orthogonal projection onto span(dist): sum_{g in dist} (1/4)Tr(g M) g.
Mat4 project(const Mat4& m, const Distribution& dist);

/// exp(-i M t) for Hermitian M, via eigendecomposition.
Mat4 expm_hermitian(const Mat4& m, double t = 1.0);

/// exp(-i sum_k c_k alpha_k).
Mat4 expm_coords(const Coords& c);

struct LogResult {
  Coords coords = Coords::Zero();
  /// Discarded trace part: U = exp(-i phase) exp(-i sum_k c_k alpha_k).
  double phase = 0.0;
  /// Some eigenphase lies within branch_tol of the cut at +-pi.
  bool near_branch_cut = false;
};

/// Principal logarithm of a unitary, expressed as generator coordinates.
/// Eigenphases are taken in (-pi, pi]; an eigenphase within branch_tol of
/// the cut on either side is mapped to +pi and the result is flagged.
LogResult principal_log(const Mat4& u, double branch_tol = 1e-9);

}  // namespace cddgate
