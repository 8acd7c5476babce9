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

#include "slmlab/qpt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "slmlab/rng.hpp"

namespace slmlab::qpt {

namespace {

using complexd = std::complex<double>;

int index_of(BasisLabel b) { return static_cast<int>(b); }

Eigen::Vector2cd basis_ket(BasisLabel b) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Eigen::Vector2cd v;
  switch (b) {
    case BasisLabel::H:
      v << 1.0, 0.0;
      break;
    case BasisLabel::V:
      v << 0.0, 1.0;
      break;
    case BasisLabel::D:
      v << inv_sqrt2, inv_sqrt2;
      break;
    case BasisLabel::R:
      v << complexd(inv_sqrt2, 0.0), complexd(0.0, inv_sqrt2);
      break;
  }
  return v;
}

double mean_and_std(const std::vector<double>& samples, double* out_std) {
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= static_cast<double>(samples.size());
  double var = 0.0;
  for (double s : samples) var += (s - mean) * (s - mean);
  var /= static_cast<double>(samples.size() - 1);
  *out_std = std::sqrt(var);
  return mean;
}

}  // namespace

char to_char(BasisLabel b) {
  switch (b) {
    case BasisLabel::H:
      return 'H';
    case BasisLabel::V:
      return 'V';
    case BasisLabel::D:
      return 'D';
    case BasisLabel::R:
      return 'R';
  }
  return '?';
}

BasisLabel basis_from_char(char c) {
  switch (c) {
    case 'H':
      return BasisLabel::H;
    case 'V':
      return BasisLabel::V;
    case 'D':
      return BasisLabel::D;
    case 'R':
      return BasisLabel::R;
    default:
      throw ParameterError(std::string("unknown basis label '") + c + "'");
  }
}

DensityMatrix basis_state(BasisLabel b) {
  const Eigen::Vector2cd v = basis_ket(b);
  return DensityMatrix::from_matrix(v * v.adjoint());
}

Eigen::Matrix2cd basis_projector(BasisLabel b) {
  const Eigen::Vector2cd v = basis_ket(b);
  return v * v.adjoint();
}

std::int64_t TomographySet::at(BasisLabel prep, BasisLabel proj) const {
  return counts[index_of(prep)][index_of(proj)];
}

std::int64_t& TomographySet::at(BasisLabel prep, BasisLabel proj) {
  return counts[index_of(prep)][index_of(proj)];
}

std::array<std::int64_t, 4> projection_counts(const DensityMatrix& rho_out,
                                              std::int64_t n_per_setting,
                                              std::mt19937_64& rng,
                                              bool noiseless) {
  std::array<std::int64_t, 4> out{};
  for (BasisLabel proj : kBases) {
    const double prob = std::clamp(
        (basis_projector(proj) * rho_out.matrix()).trace().real(), 0.0, 1.0);
    const double mean = static_cast<double>(n_per_setting) * prob;
    out[index_of(proj)] =
        noiseless ? std::llround(mean) : sample_poisson(rng, mean);
  }
  return out;
}

TomographySet simulate_counts(const KrausSet& k, std::int64_t n_per_setting,
                              std::uint64_t rng_seed, bool noiseless) {
  if (n_per_setting < 1) {
    throw ParameterError("simulate_counts: n_per_setting must be >= 1");
  }
  std::mt19937_64 rng(rng_seed);
  TomographySet t;
  t.nominal_per_setting = n_per_setting;
  t.seed = rng_seed;
  for (BasisLabel prep : kBases) {
    const DensityMatrix rho_out = qchannel::apply_channel(k, basis_state(prep));
    t.counts[index_of(prep)] =
        projection_counts(rho_out, n_per_setting, rng, noiseless);
  }
  return t;
}

DensityMatrix state_from_counts(std::span<const std::int64_t, 4> row) {
  const double n_h = static_cast<double>(row[0]);
  const double n_v = static_cast<double>(row[1]);
  const double total = n_h + n_v;
  if (total <= 0.0) {
    throw InsufficientDataError("state_from_counts: n_H + n_V is zero");
  }
  const double x = 2.0 * static_cast<double>(row[2]) / total - 1.0;
  const double y = 2.0 * static_cast<double>(row[3]) / total - 1.0;
  const double z = (n_v - n_h) / total;
  Eigen::Matrix2cd est;
  est(0, 0) = complexd(0.5 * (1.0 - z), 0.0);
  est(1, 1) = complexd(0.5 * (1.0 + z), 0.0);
  est(0, 1) = complexd(0.5 * x, -0.5 * y);
  est(1, 0) = std::conj(est(0, 1));
  return project_to_physical(est);
}

DensityMatrix project_to_physical(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) {
    throw ParameterError("project_to_physical: expected a 2x2 or 4x4 matrix");
  }
  if (m.cwiseAbs().maxCoeff() == 0.0) {
    throw InsufficientDataError("project_to_physical: all-zero matrix");
  }
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  const double total = lam.sum();
  if (total <= 0.0) {
    throw InsufficientDataError(
        "project_to_physical: no positive eigenvalue mass");
  }
  lam /= total;
  const Eigen::MatrixXcd out = es.eigenvectors() * lam.asDiagonal() *
                               es.eigenvectors().adjoint();
  return DensityMatrix::from_matrix(out);
}

ChoiState choi_from_tomography(const TomographySet& t) {
  std::array<Eigen::Matrix2cd, 4> outputs;
  for (BasisLabel prep : kBases) {
    outputs[index_of(prep)] =
        state_from_counts(std::span<const std::int64_t, 4>(
                              t.counts[index_of(prep)]))
            .matrix();
  }
  const Eigen::Matrix2cd& e_h = outputs[index_of(BasisLabel::H)];
  const Eigen::Matrix2cd& e_v = outputs[index_of(BasisLabel::V)];
  const Eigen::Matrix2cd& e_d = outputs[index_of(BasisLabel::D)];
  const Eigen::Matrix2cd& e_r = outputs[index_of(BasisLabel::R)];

  const complexd i_unit(0.0, 1.0);
  const Eigen::Matrix2cd e_hv =
      e_d + i_unit * e_r - 0.5 * complexd(1.0, 1.0) * (e_h + e_v);

  Eigen::Matrix4cd choi;
  choi.block<2, 2>(0, 0) = 0.5 * e_h;
  choi.block<2, 2>(0, 2) = 0.5 * e_hv;
  choi.block<2, 2>(2, 0) = 0.5 * e_hv.adjoint();
  choi.block<2, 2>(2, 2) = 0.5 * e_v;
  return ChoiState::from_state(project_to_physical(choi));
}

ErrorReport monte_carlo_errors(const TomographySet& t, int trials,
                               std::uint64_t rng_seed,
                               const FitOptions& fit_options) {
  if (trials < 2) {
    throw ParameterError("monte_carlo_errors: trials must be >= 2");
  }
  std::map<std::string, std::vector<double>> samples;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(derive_seed(rng_seed, static_cast<std::uint64_t>(trial)));
    TomographySet resampled = t;
    for (auto& row : resampled.counts) {
      for (auto& count : row) {
        count = sample_poisson(rng, static_cast<double>(count));
      }
    }
    for (BasisLabel prep : kBases) {
      const DensityMatrix rho = state_from_counts(
          std::span<const std::int64_t, 4>(resampled.counts[index_of(prep)]));
      const std::string name(1, to_char(prep));
      samples["purity_" + name].push_back(qpolar::purity(rho));
      const qpolar::BlochVector b = qpolar::bloch_from_density(rho);
      samples["bloch_" + name + "_x"].push_back(b.x);
      samples["bloch_" + name + "_y"].push_back(b.y);
      samples["bloch_" + name + "_z"].push_back(b.z);
    }
    const ChoiState choi = choi_from_tomography(resampled);
    const qchannel::PhaseFlipFit fit =
        qchannel::fit_phase_flip_family(choi, fit_options.a_fixed);
    samples["p"].push_back(fit.p);
    samples["fidelity"].push_back(fit.fidelity);
    if (!fit_options.a_fixed) {
      samples["a"].push_back(fit.a);
    }
  }

  ErrorReport report;
  report.trials = trials;
  report.seed = rng_seed;
  for (const auto& [name, values] : samples) {
    ScalarStat stat;
    stat.mean = mean_and_std(values, &stat.std_dev);
    report.scalars[name] = stat;
  }
  return report;
}

}  // namespace slmlab::qpt
