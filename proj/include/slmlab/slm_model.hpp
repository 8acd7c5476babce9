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

#include <complex>
#include <cstdint>
#include <vector>

#include "slmlab/qchannel.hpp"
#include "slmlab/qpolar.hpp"

namespace slmlab::slm {

// SLM screen modeling: gray-level phase maps, random phase-flip masks, beam
// wavefunctions on the pixel lattice, spatial phase averaging and the
// effective polarization channel a mask realizes.

inline constexpr int kDefaultWidth = 1920;
inline constexpr int kDefaultHeight = 1080;
inline constexpr int kDefaultCellPx = 100;
inline constexpr double kPixelPitchUm = 8.0;

/// Gray level encoding a pi shift. 255/2 is not representable on an 8-bit
/// screen; it is stored as 128 and the analysis phase map treats that level
/// as exactly pi (the hardware imprints 2*pi*128/255, about 0.4% high).
inline constexpr int kPiGray = 128;

/// 8-bit gray-level image displayed on the SLM screen, row-major from the
/// top-left pixel. Pixel pitch is carried as metadata only.
struct Mask {
  int width = kDefaultWidth;
  int height = kDefaultHeight;
  std::vector<std::uint8_t> gray;
  double pixel_pitch_um = kPixelPitchUm;

  std::uint8_t at(int x, int y) const {
    return gray[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                static_cast<std::size_t>(x)];
  }
};

/// Phase imprinted on the H component for a gray level: a = 2*pi*g/255,
/// except that the pi level (g = 128) maps to exactly pi.
double gray_to_phase(int g);

Mask uniform_mask(int g, int width = kDefaultWidth, int height = kDefaultHeight);

/// Random phase-flip mask: complete cell_px x cell_px cells tiled from the
/// origin are filled with g = 0 (probability 1-q) or the pi level
/// (probability q); partial cells at the right/bottom edges are zero.
Mask random_phase_flip_mask(double q, int cell_px, int width, int height,
                            std::uint64_t rng_seed);

/// Fraction of complete cells at the pi level. Rejects masks whose complete
/// cells are not uniformly 0 or the pi level.
double realized_pi_fraction(const Mask& m, int cell_px);

/// Transverse beam amplitude sampled on the mask's pixel lattice; integrals
/// over the profile become sums weighted by |psi|^2 per pixel. Normalized to
/// unit total probability within 1e-9.
class Wavefunction {
 public:
  /// Uniform profile over the whole screen.
  static Wavefunction uniform(int width, int height);

  /// Uniform profile over the complete-cell region only, zero on the edge
  /// margins; makes the ideal phase-flip algebra exact for the realized
  /// cell fraction.
  static Wavefunction uniform_over_cells(int width, int height, int cell_px);

  /// Validates normalization of caller-supplied samples.
  static Wavefunction from_amplitudes(int width, int height,
                                      std::vector<std::complex<double>> amp);

  /// Rescales caller-supplied samples to unit norm.
  static Wavefunction normalized(int width, int height,
                                 std::vector<std::complex<double>> amp);

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }

  std::complex<double> at(int x, int y) const {
    return amp_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                static_cast<std::size_t>(x)];
  }

 private:
  Wavefunction(int width, int height, std::vector<std::complex<double>> amp)
      : width_(width), height_(height), amp_(std::move(amp)) {}

  int width_ = 0;
  int height_ = 0;
  std::vector<std::complex<double>> amp_;
};

/// Beam-weighted mean of the imprinted phase factor,
/// <e^{ia}> = sum e^{i a(x,y)} |psi(x,y)|^2, written A_psi e^{i a_psi}.
struct SpatialAverage {
  std::complex<double> value;

  double magnitude() const { return std::abs(value); }
  double phase() const { return std::arg(value); }
};

SpatialAverage spatial_phase_average(const Mask& m, const Wavefunction& psi);

/// Polarization channel realized by a mask for a beam profile, including the
/// device dephasing p: p_eff = (1 - (1-2p) A_psi)/2 with the averaged phase
/// a_psi.
qchannel::KrausSet effective_channel(const Mask& m, const Wavefunction& psi,
                                     double p);

/// Decoherence actually realized when a phase-flip mask programmed with q
/// runs on a device with intrinsic dephasing p:
/// q_eff = (1 - (1-2p)(1-2q))/2. Symmetric in p and q; p sets a lower bound.
double q_eff(double p, double q);

/// Mask parameter q that realizes a target decoherence q_target >= p on a
/// device with dephasing p; inverts q_eff.
double q_for_target_decoherence(double p, double q_target);

/// Independent oracle for the reduced polarization state: evolves psi (x)
/// alpha pixel by pixel under the ideal modulator and traces out the spatial
/// degree of freedom by explicit summation of per-pixel outer products.
qpolar::DensityMatrix joint_evolve_and_trace(const Mask& m,
                                             const Wavefunction& psi,
                                             const qpolar::PureQubit& alpha);

/// Closed form of the reduced polarization state given the spatial mean of
/// the phase factor.
qpolar::DensityMatrix reduced_state_from_average(
    const qpolar::PureQubit& alpha, std::complex<double> mean_phase_factor);

/// Polarization/space concurrence created by a mask,
/// C = sin(theta) sqrt(1 - |<e^{ia}>|^2).
double mask_concurrence(double theta, const Mask& m, const Wavefunction& psi);

}  // namespace slmlab::slm
