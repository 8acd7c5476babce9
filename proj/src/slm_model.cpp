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

#include "slmlab/slm_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "slmlab/angle.hpp"
#include "slmlab/rng.hpp"

namespace slmlab::slm {

namespace {

using complexd = std::complex<double>;

void check_gray(int g) {
  if (g < 0 || g > 255) {
    throw ParameterError("gray level must lie in [0, 255], got " +
                         std::to_string(g));
  }
}

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw ParameterError("mask dimensions must be >= 1");
  }
}

void check_same_grid(const Mask& m, const Wavefunction& psi) {
  if (m.width != psi.width() || m.height != psi.height()) {
    throw ParameterError("mask and wavefunction dimensions differ");
  }
}

/// Unit phase factors for all 256 gray levels.
std::array<complexd, 256> phase_factor_table() {
  std::array<complexd, 256> table;
  for (int g = 0; g < 256; ++g) {
    table[static_cast<std::size_t>(g)] = std::exp(complexd(0.0, gray_to_phase(g)));
  }
  return table;
}

/// Kahan-compensated complex accumulator; keeps large-grid sums independent
/// of (sequential) partitioning error at the 1e-15 level.
struct CompensatedSum {
  complexd sum{0.0, 0.0};
  complexd comp{0.0, 0.0};

  void add(complexd value) {
    const complexd y = value - comp;
    const complexd t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double gray_to_phase(int g) {
  check_gray(g);
  if (g == kPiGray) return std::numbers::pi;
  return kTwoPi * static_cast<double>(g) / 255.0;
}

Mask uniform_mask(int g, int width, int height) {
  check_gray(g);
  check_dims(width, height);
  Mask m;
  m.width = width;
  m.height = height;
  m.gray.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                static_cast<std::uint8_t>(g));
  return m;
}

Mask random_phase_flip_mask(double q, int cell_px, int width, int height,
                            std::uint64_t rng_seed) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw ParameterError("q must lie in [0, 1], got " + std::to_string(q));
  }
  if (cell_px < 1) {
    throw ParameterError("cell_px must be >= 1");
  }
  check_dims(width, height);

  const int cells_x = width / cell_px;
  const int cells_y = height / cell_px;
  std::vector<std::uint8_t> cell_gray(
      static_cast<std::size_t>(cells_x) * static_cast<std::size_t>(cells_y), 0);
  std::mt19937_64 rng(rng_seed);
  for (auto& g : cell_gray) {
    g = uniform01(rng) < q ? static_cast<std::uint8_t>(kPiGray) : 0;
  }

  Mask m;
  m.width = width;
  m.height = height;
  m.gray.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
  for (int cy = 0; cy < cells_y; ++cy) {
    for (int cx = 0; cx < cells_x; ++cx) {
      const std::uint8_t g =
          cell_gray[static_cast<std::size_t>(cy) * static_cast<std::size_t>(cells_x) +
                    static_cast<std::size_t>(cx)];
      if (g == 0) continue;
      for (int y = cy * cell_px; y < (cy + 1) * cell_px; ++y) {
        auto* row = m.gray.data() +
                    static_cast<std::size_t>(y) * static_cast<std::size_t>(width);
        std::fill(row + cx * cell_px, row + (cx + 1) * cell_px, g);
      }
    }
  }
  return m;
}

double realized_pi_fraction(const Mask& m, int cell_px) {
  if (cell_px < 1) {
    throw ParameterError("cell_px must be >= 1");
  }
  const int cells_x = m.width / cell_px;
  const int cells_y = m.height / cell_px;
  if (cells_x < 1 || cells_y < 1) {
    throw ParameterError("mask smaller than one complete cell");
  }
  std::int64_t pi_cells = 0;
  for (int cy = 0; cy < cells_y; ++cy) {
    for (int cx = 0; cx < cells_x; ++cx) {
      const std::uint8_t g = m.at(cx * cell_px, cy * cell_px);
      if (g != 0 && g != kPiGray) {
        throw ParameterError("mask cell holds a gray level other than 0 or pi");
      }
      for (int y = cy * cell_px; y < (cy + 1) * cell_px; ++y) {
        for (int x = cx * cell_px; x < (cx + 1) * cell_px; ++x) {
          if (m.at(x, y) != g) {
            throw ParameterError("mask cell is not uniform");
          }
        }
      }
      if (g == kPiGray) ++pi_cells;
    }
  }
  return static_cast<double>(pi_cells) /
         static_cast<double>(static_cast<std::int64_t>(cells_x) * cells_y);
}

Wavefunction Wavefunction::uniform(int width, int height) {
  check_dims(width, height);
  const std::size_t n =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  return Wavefunction(width, height,
                      std::vector<complexd>(n, complexd(amp, 0.0)));
}

Wavefunction Wavefunction::uniform_over_cells(int width, int height,
                                              int cell_px) {
  check_dims(width, height);
  if (cell_px < 1) {
    throw ParameterError("cell_px must be >= 1");
  }
  const int cells_x = width / cell_px;
  const int cells_y = height / cell_px;
  if (cells_x < 1 || cells_y < 1) {
    throw ParameterError("no complete cell fits the given dimensions");
  }
  const std::size_t support = static_cast<std::size_t>(cells_x) * cell_px *
                              static_cast<std::size_t>(cells_y) * cell_px;
  const double amp = 1.0 / std::sqrt(static_cast<double>(support));
  std::vector<complexd> a(
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
      complexd(0.0, 0.0));
  for (int y = 0; y < cells_y * cell_px; ++y) {
    for (int x = 0; x < cells_x * cell_px; ++x) {
      a[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
        static_cast<std::size_t>(x)] = complexd(amp, 0.0);
    }
  }
  return Wavefunction(width, height, std::move(a));
}

Wavefunction Wavefunction::from_amplitudes(int width, int height,
                                           std::vector<complexd> amp) {
  check_dims(width, height);
  if (amp.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw ParameterError("wavefunction sample count does not match dimensions");
  }
  double norm2 = 0.0;
  double comp = 0.0;
  for (const auto& a : amp) {
    const double y = std::norm(a) - comp;
    const double t = norm2 + y;
    comp = (t - norm2) - y;
    norm2 = t;
  }
  if (std::abs(norm2 - 1.0) > 1e-9) {
    throw InvalidStateError("wavefunction is not normalized: |psi|^2 = " +
                            std::to_string(norm2));
  }
  return Wavefunction(width, height, std::move(amp));
}

Wavefunction Wavefunction::normalized(int width, int height,
                                      std::vector<complexd> amp) {
  check_dims(width, height);
  if (amp.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw ParameterError("wavefunction sample count does not match dimensions");
  }
  double norm2 = 0.0;
  for (const auto& a : amp) norm2 += std::norm(a);
  if (norm2 <= 0.0) {
    throw InvalidStateError("cannot normalize an all-zero wavefunction");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amp) a *= scale;
  return Wavefunction(width, height, std::move(amp));
}

SpatialAverage spatial_phase_average(const Mask& m, const Wavefunction& psi) {
  check_same_grid(m, psi);
  const auto table = phase_factor_table();
  CompensatedSum acc;
  const std::size_t n = m.gray.size();
  for (std::size_t i = 0; i < n; ++i) {
    acc.add(table[m.gray[i]] * std::norm(psi.amplitudes()[i]));
  }
  return SpatialAverage{acc.sum};
}

qchannel::KrausSet effective_channel(const Mask& m, const Wavefunction& psi,
                                     double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("p must lie in [0, 1], got " + std::to_string(p));
  }
  const SpatialAverage avg = spatial_phase_average(m, psi);
  const double a_mag = std::min(avg.magnitude(), 1.0);
  const double p_eff =
      std::clamp(0.5 * (1.0 - (1.0 - 2.0 * p) * a_mag), 0.0, 1.0);
  return qchannel::general_slm_channel(avg.phase(), p_eff);
}

double q_eff(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw ParameterError("q_eff: p and q must lie in [0, 1]");
  }
  return 0.5 * (1.0 - (1.0 - 2.0 * p) * (1.0 - 2.0 * q));
}

double q_for_target_decoherence(double p, double q_target) {
  if (!(p >= 0.0 && p < 0.5)) {
    throw ParameterError("q_for_target_decoherence: requires p in [0, 1/2)");
  }
  if (!(q_target >= p && q_target <= 1.0 - p)) {
    throw ParameterError(
        "q_for_target_decoherence: target outside the reachable range "
        "[p, 1-p]");
  }
  return 0.5 * (1.0 - (1.0 - 2.0 * q_target) / (1.0 - 2.0 * p));
}

qpolar::DensityMatrix joint_evolve_and_trace(const Mask& m,
                                             const Wavefunction& psi,
                                             const qpolar::PureQubit& alpha) {
  check_same_grid(m, psi);
  const auto table = phase_factor_table();
  const Eigen::Vector2cd amp = alpha.amplitudes();

  // Per-pixel joint amplitudes (psi * e^{ia} * a_H, psi * a_V); the reduced
  // polarization matrix is the sum of their outer products.
  CompensatedSum hh;
  CompensatedSum hv;
  CompensatedSum vv;
  const std::size_t n = m.gray.size();
  for (std::size_t i = 0; i < n; ++i) {
    const complexd psi_i = psi.amplitudes()[i];
    const complexd a_h = table[m.gray[i]] * amp(0) * psi_i;
    const complexd a_v = amp(1) * psi_i;
    hh.add(complexd(std::norm(a_h), 0.0));
    hv.add(a_h * std::conj(a_v));
    vv.add(complexd(std::norm(a_v), 0.0));
  }
  Eigen::Matrix2cd rho;
  rho(0, 0) = hh.sum;
  rho(0, 1) = hv.sum;
  rho(1, 0) = std::conj(hv.sum);
  rho(1, 1) = vv.sum;
  return qpolar::DensityMatrix::from_matrix(rho);
}

qpolar::DensityMatrix reduced_state_from_average(
    const qpolar::PureQubit& alpha, std::complex<double> mean_phase_factor) {
  if (std::abs(mean_phase_factor) > 1.0 + 1e-10) {
    throw ParameterError(
        "reduced_state_from_average: |<e^{ia}>| exceeds 1");
  }
  const double half = alpha.theta / 2.0;
  const complexd phase = std::exp(complexd(0.0, alpha.phi));
  Eigen::Matrix2cd rho;
  rho(0, 0) = complexd(std::sin(half) * std::sin(half), 0.0);
  rho(1, 1) = complexd(std::cos(half) * std::cos(half), 0.0);
  rho(0, 1) = phase * mean_phase_factor * 0.5 * std::sin(alpha.theta);
  rho(1, 0) = std::conj(rho(0, 1));
  return qpolar::DensityMatrix::from_matrix(rho);
}

double mask_concurrence(double theta, const Mask& m, const Wavefunction& psi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw ParameterError("mask_concurrence: theta must lie in [0, pi]");
  }
  const double a_mag = std::min(spatial_phase_average(m, psi).magnitude(), 1.0);
  return std::sin(theta) * std::sqrt(std::max(0.0, 1.0 - a_mag * a_mag));
}

}  // namespace slmlab::slm
