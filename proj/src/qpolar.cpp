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

#include "slmlab/qpolar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "slmlab/angle.hpp"

namespace slmlab::qpolar {

PureQubit::PureQubit(double theta_in, double phi_in) {
  if (!(theta_in >= -1e-12 && theta_in <= std::numbers::pi + 1e-12)) {
    throw ParameterError("PureQubit: theta must lie in [0, pi], got " +
                         std::to_string(theta_in));
  }
  theta = std::clamp(theta_in, 0.0, std::numbers::pi);
  phi = reduce_angle(phi_in);
}

Eigen::Vector2cd PureQubit::amplitudes() const {
  using namespace std::complex_literals;
  Eigen::Vector2cd v;
  v(0) = std::exp(1i * phi) * std::sin(theta / 2.0);  // H component
  v(1) = std::cos(theta / 2.0);                       // V component
  return v;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

DensityMatrix DensityMatrix::from_matrix(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) {
    throw InvalidStateError("DensityMatrix: expected a 2x2 or 4x4 matrix");
  }
  const double herm_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > kHermitianTol) {
    throw InvalidStateError("DensityMatrix: not Hermitian, defect " +
                            std::to_string(herm_defect));
  }
  if (std::abs(m.trace() - std::complex<double>(1.0)) > kTraceTol) {
    throw InvalidStateError("DensityMatrix: trace differs from 1");
  }
  Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kEigenvalueTol) {
    throw InvalidStateError("DensityMatrix: negative eigenvalue " +
                            std::to_string(es.eigenvalues().minCoeff()));
  }
  return DensityMatrix(std::move(sym));
}

DensityMatrix density_from_pure(const PureQubit& state) {
  const Eigen::Vector2cd v = state.amplitudes();
  return DensityMatrix::from_matrix(v * v.adjoint());
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw ParameterError("bloch_from_density: requires a 2x2 state");
  }
  const auto& m = rho.matrix();
  BlochVector v;
  v.x = 2.0 * m(0, 1).real();
  v.y = -2.0 * m(0, 1).imag();
  v.z = (m(1, 1) - m(0, 0)).real();
  return v;
}

DensityMatrix density_from_bloch(const BlochVector& v) {
  if (v.norm() > 1.0 + 1e-10) {
    throw InvalidStateError("density_from_bloch: Bloch norm " +
                            std::to_string(v.norm()) + " exceeds 1");
  }
  Eigen::Matrix2cd m;
  m(0, 0) = std::complex<double>(0.5 * (1.0 - v.z), 0.0);
  m(1, 1) = std::complex<double>(0.5 * (1.0 + v.z), 0.0);
  m(0, 1) = std::complex<double>(0.5 * v.x, -0.5 * v.y);
  m(1, 0) = std::conj(m(0, 1));
  return DensityMatrix::from_matrix(m);
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

Eigen::MatrixXcd sqrt_psd(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  // Eigenvalues at the rounding floor are exact zeros of a rank-deficient
  // state; square-rooting their noise would pollute the result at 1e-8.
  const double floor = 1e-14 * lam.maxCoeff();
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < floor) lam(i) = 0.0;
  }
  return es.eigenvectors() * lam.cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

double state_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw ParameterError("state_fidelity: dimension mismatch");
  }
  // Tr sqrt(sqrt(rho) sigma sqrt(rho)) is the trace norm of
  // sqrt(sigma) sqrt(rho); singular values carry no square-root noise
  // amplification near zero.
  const Eigen::MatrixXcd b = sqrt_psd(sigma.matrix()) * sqrt_psd(rho.matrix());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b);
  return std::clamp(svd.singularValues().sum(), 0.0, 1.0);
}

double concurrence_from_reduced(const DensityMatrix& rho_p) {
  const double c2 = 2.0 * (1.0 - purity(rho_p));
  return std::sqrt(std::max(0.0, c2));
}

}  // namespace slmlab::qpolar
