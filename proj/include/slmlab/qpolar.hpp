// Copyright 2026 The slmlab Authors
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

#include <Eigen/Dense>
#include <complex>

#include "slmlab/errors.hpp"

namespace slmlab::qpolar {

// Polarization-qubit state algebra. Basis convention throughout:
// |H> = (1 0)^T, |V> = (0 1)^T. On the Bloch sphere |V> sits at the north
// pole, |D> = (|H>+|V>)/sqrt(2) on the +x axis and |R> = (|H>+i|V>)/sqrt(2)
// on the +y axis, so a pure phase on the H component rotates states about
// the vertical (z) axis.

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueTol = 1e-10;

/// Pure polarization state |alpha> = cos(theta/2)|V> + e^{i phi} sin(theta/2)|H>.
struct PureQubit {
  double theta = 0.0;  // polar angle, [0, pi]
  double phi = 0.0;    // relative phase, reduced to [0, 2*pi)

  PureQubit(double theta_in, double phi_in);

  /// Amplitudes (a_H, a_V) in the computational basis.
  Eigen::Vector2cd amplitudes() const;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

/// 2x2 (polarization) or 4x4 (channel dual) density matrix. Construction
/// validates Hermiticity, unit trace and positivity; the stored matrix is
/// symmetrized so downstream eigendecompositions see an exactly Hermitian
/// operand.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const Eigen::MatrixXcd& m);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  explicit DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {}

  Eigen::MatrixXcd m_;
};

/// Rank-1 projector |alpha><alpha| of a pure state.
DensityMatrix density_from_pure(const PureQubit& state);

/// Bloch coordinates of a 2x2 state: x = 2 Re rho_HV, y = -2 Im rho_HV,
/// z = rho_VV - rho_HH.
BlochVector bloch_from_density(const DensityMatrix& rho);

/// Inverse of bloch_from_density; rejects vectors outside the unit ball.
DensityMatrix density_from_bloch(const BlochVector& v);

/// Tr rho^2.
double purity(const DensityMatrix& rho);

/// Fidelity F = Tr sqrt(sqrt(rho) sigma sqrt(rho)), in [0, 1].
double state_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Concurrence of a pure bipartite state from either reduced state:
/// C = sqrt(2 (1 - Tr rho_p^2)).
double concurrence_from_reduced(const DensityMatrix& rho_p);

/// Principal square root of a PSD Hermitian matrix, eigenvalues clamped at 0.
Eigen::MatrixXcd sqrt_psd(const Eigen::MatrixXcd& m);

}  // namespace slmlab::qpolar
