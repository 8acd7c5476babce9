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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>

#include "slmlab/qchannel.hpp"
#include "slmlab/qpolar.hpp"

namespace slmlab::qpt {

using qchannel::ChoiState;
using qchannel::KrausSet;
using qpolar::DensityMatrix;

// Single-qubit process tomography over the four preparations/projections
// {H, V, D, R}: synthetic coincidence counts, linear-inversion state and
// process reconstruction, physicality projection, and Monte Carlo error bars.

enum class BasisLabel { H, V, D, R };

inline constexpr std::array<BasisLabel, 4> kBases = {
    BasisLabel::H, BasisLabel::V, BasisLabel::D, BasisLabel::R};

char to_char(BasisLabel b);
BasisLabel basis_from_char(char c);

/// The pure preparation state for a basis label.
DensityMatrix basis_state(BasisLabel b);

/// The projector |X><X| measured for a basis label.
Eigen::Matrix2cd basis_projector(BasisLabel b);

/// Coincidence counts indexed (preparation, projection); projections are
/// acquired in separate runs, so entries are independent Poisson variates.
struct TomographySet {
  std::array<std::array<std::int64_t, 4>, 4> counts{};  // [prep][proj]
  std::int64_t nominal_per_setting = 0;
  std::uint64_t seed = 0;

  std::int64_t at(BasisLabel prep, BasisLabel proj) const;
  std::int64_t& at(BasisLabel prep, BasisLabel proj);
};

/// Forward model of the coincidence measurement: for each preparation the
/// channel output is projected onto {H, V, D, R} and each count is drawn
/// Poisson with mean N * Tr(P rho_out). With `noiseless` the rounded expected
/// values are substituted. Draw order is preparation-major, projection-minor;
/// the same seed reproduces the same table.
TomographySet simulate_counts(const KrausSet& k, std::int64_t n_per_setting,
                              std::uint64_t rng_seed, bool noiseless);

/// Projection counts for one already-evolved state (used by sweep commands).
std::array<std::int64_t, 4> projection_counts(const DensityMatrix& rho_out,
                                              std::int64_t n_per_setting,
                                              std::mt19937_64& rng,
                                              bool noiseless);

/// Linear-inversion state estimate from one preparation row (n_H, n_V, n_D,
/// n_R): Bloch coordinates x = 2 n_D/(n_H+n_V) - 1, y = 2 n_R/(n_H+n_V) - 1,
/// z = (n_V-n_H)/(n_H+n_V), then projected to the physical set.
DensityMatrix state_from_counts(std::span<const std::int64_t, 4> row);

/// Nearest-physical projection: symmetrize, clamp negative eigenvalues to
/// zero, renormalize the trace to 1.
DensityMatrix project_to_physical(const Eigen::MatrixXcd& m);

/// Process reconstruction by linearity: the four reconstructed outputs give
/// E(|H><V|) = E(D) + i E(R) - (1+i)/2 [E(H) + E(V)], and the Choi state is
/// assembled as 1/2 sum |m><n| (x) E(|m><n|) and projected to the physical
/// set. Trace preservation is not re-imposed; its defect stays available as
/// a diagnostic on the result.
ChoiState choi_from_tomography(const TomographySet& t);

/// Phase treatment for fits run inside the Monte Carlo loop.
struct FitOptions {
  std::optional<double> a_fixed;  // engaged: pin the phase; empty: fit it
};

struct ScalarStat {
  double mean = 0.0;
  double std_dev = 0.0;
};

/// Means and standard deviations of the derived scalars over Poisson
/// resamples of a count table.
struct ErrorReport {
  std::map<std::string, ScalarStat> scalars;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Resamples every count Poisson(observed), re-runs the reconstruction and
/// fit per trial, and reports mean/std for the fitted p and fidelity (and a,
/// when fitted) plus per-preparation purity and Bloch coordinates. Per-trial
/// seeds derive deterministically from (seed, trial index).
ErrorReport monte_carlo_errors(const TomographySet& t, int trials,
                               std::uint64_t rng_seed,
                               const FitOptions& fit_options = {});

}  // namespace slmlab::qpt
