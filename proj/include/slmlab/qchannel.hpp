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
#include <optional>
#include <span>
#include <vector>

#include "slmlab/qpolar.hpp"

namespace slmlab::qchannel {

using qpolar::DensityMatrix;

// CPTP channel representations on a single polarization qubit, their
// Jamiolkowski duals, and the fidelity-maximizing fit of the dephasing
// family produced by a phase-only modulator.

/// Completeness threshold used by operations that require a CPTP set.
inline constexpr double kCompletenessTol = 1e-8;

/// Ordered Kraus operators {M_i}; the channel acts as rho -> sum M_i rho M_i^+.
/// All-zero members are allowed. Completeness (sum M_i^+ M_i = I) is checked
/// by the operations that need it, so partially built sets can be inspected.
struct KrausSet {
  std::vector<Eigen::Matrix2cd> operators;

  /// Operator norm of (sum M_i^+ M_i - I).
  double completeness_defect() const;
};

double completeness_defect(std::span<const Eigen::Matrix2cd> operators);

/// Jamiolkowski dual of a channel: the channel applied to the second half of
/// (|HH> + |VV>)/sqrt(2), normalized to trace 1. Slot order is fixed as
/// (ancilla x system); row index m*2+i addresses ancilla m, system i.
class ChoiState {
 public:
  static ChoiState from_state(DensityMatrix state);

  const DensityMatrix& state() const { return state_; }

  /// Reduced ancilla state Tr_system C; equals I/2 for trace-preserving maps.
  Eigen::Matrix2cd ancilla_reduced() const;

  /// Max-abs deviation of the reduced ancilla state from I/2.
  double trace_preservation_defect() const;

 private:
  explicit ChoiState(DensityMatrix state) : state_(std::move(state)) {}

  DensityMatrix state_;
};

struct PhaseFlipFit {
  double p = 0.0;         // dephasing strength, in [0, 1/2]
  double a = 0.0;         // programmed phase, in [0, 2*pi)
  double fidelity = 0.0;  // achieved dual-state fidelity, in [0, 1]
};

/// Device channel for a uniform phase a with dephasing strength p:
/// M0 = sqrt(1-p) diag(e^{ia}, 1), M1 = sqrt(p) diag(e^{ia}, -1), M2 = M3 = 0.
KrausSet slm_uniform_channel(double a, double p);

/// Phase flip channel {sqrt(1-q) I, sqrt(q) diag(1, -1)}.
KrausSet phase_flip_channel(double q);

/// Dephasing family member for a spatially averaged phase: the uniform-phase
/// operators with a -> a_psi and p -> p_eff, zero members retained.
KrausSet general_slm_channel(double a_psi, double p_eff);

/// rho -> sum M_i rho M_i^+. Requires a complete set.
DensityMatrix apply_channel(const KrausSet& k, const DensityMatrix& rho);

ChoiState choi_from_kraus(const KrausSet& k);

/// Eigendecomposition of a Choi state back into Kraus operators: every
/// eigenpair with lambda > 1e-10 unfolds into sqrt(2*lambda) times the
/// eigenvector read column-major over the system index. Zero operators are
/// dropped. The input must be trace preserving within 1e-6.
KrausSet kraus_from_choi(const ChoiState& c);

/// Fidelity between two channels, computed between their dual states.
double channel_fidelity(const ChoiState& c1, const ChoiState& c2);

/// Finds (p, a) maximizing the fidelity between `c` and the dual of the
/// uniform-phase family, p over [0, 1/2] and a over [0, 2*pi) unless pinned
/// by `a_fixed`. Coarse grid (1e-3 in p, 256 points in a), then alternating
/// golden-section refinement to 1e-6. Ties resolve to the smallest p, then
/// the smallest a.
PhaseFlipFit fit_phase_flip_family(const ChoiState& c,
                                   std::optional<double> a_fixed = std::nullopt);

/// Conjugated channel {U M_i U^+}; turns the phase flip into the bit flip or
/// bit phase flip for suitable U. U must be unitary within 1e-10.
KrausSet conjugate_channel(const KrausSet& k, const Eigen::Matrix2cd& u);

}  // namespace slmlab::qchannel
