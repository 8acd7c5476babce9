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

#include "slmlab/qchannel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "slmlab/angle.hpp"

namespace slmlab::qchannel {

namespace {

using complexd = std::complex<double>;

/// Operator norm (largest |eigenvalue|) of a 2x2 Hermitian matrix.
double hermitian_operator_norm(const Eigen::Matrix2cd& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double disc =
      std::sqrt(0.25 * (a - d) * (a - d) + std::norm(h(0, 1)));
  return std::max(std::abs(mean + disc), std::abs(mean - disc));
}

void check_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ParameterError(std::string(name) + " must lie in [0, 1], got " +
                         std::to_string(value));
  }
}

/// (ancilla x system) vectorization of (I (x) M) |Phi+>, i.e. the dual-state
/// eigenvector a Kraus operator folds into: w[m*2 + i] = M(i, m) / sqrt(2).
Eigen::Vector4cd dual_vector(const Eigen::Matrix2cd& m) {
  Eigen::Vector4cd w;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (int anc = 0; anc < 2; ++anc) {
    for (int sys = 0; sys < 2; ++sys) {
      w(anc * 2 + sys) = m(sys, anc) * inv_sqrt2;
    }
  }
  return w;
}

/// Dual-state fidelity against the uniform-phase family, reduced to a 2x2
/// problem: the family dual is rank <= 2 with orthonormal eigenvectors
/// w0 = (e^{ia},0,0,1)/sqrt(2) and w1 = (e^{ia},0,0,-1)/sqrt(2), so only the
/// rho entries (0,0), (3,3) and (0,3) of the experimental dual enter.
struct FamilyFidelityKernel {
  double r00;
  double r33;
  complexd r03;

  double operator()(double a, double p) const {
    const complexd t = std::exp(complexd(0.0, -a)) * r03;
    const double s = r00 + r33;
    const double d = r00 - r33;
    const double a00 = (1.0 - p) * 0.5 * (s + 2.0 * t.real());
    const double a11 = p * 0.5 * (s - 2.0 * t.real());
    const double w = std::sqrt(std::max(0.0, p * (1.0 - p)));
    const complexd a01 = w * 0.5 * complexd(d, -2.0 * t.imag());
    const double mean = 0.5 * (a00 + a11);
    const double disc =
        std::sqrt(std::max(0.0, 0.25 * (a00 - a11) * (a00 - a11) +
                                    std::norm(a01)));
    const double f = std::sqrt(std::max(0.0, mean + disc)) +
                     std::sqrt(std::max(0.0, mean - disc));
    return std::min(f, 1.0);
  }
};

/// Golden-section maximization of a unimodal function on [lo, hi]. The
/// bracket endpoints compete with the interior estimate so boundary maxima
/// (p = 0 for an identity-like channel) resolve exactly; ties go to the
/// smaller argument.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double invphi2 = (3.0 - std::sqrt(5.0)) / 2.0;
  double a = lo;
  double b = hi;
  double h = b - a;
  double c = a + invphi2 * h;
  double d = a + invphi * h;
  double fc = f(c);
  double fd = f(d);
  while (h > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      h = b - a;
      c = a + invphi2 * h;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      h = b - a;
      d = a + invphi * h;
      fd = f(d);
    }
  }
  double best = lo;
  double best_f = f(lo);
  for (double x : {0.5 * (a + b), hi}) {
    const double fx = f(x);
    if (fx > best_f) {
      best_f = fx;
      best = x;
    }
  }
  return best;
}

}  // namespace

double completeness_defect(std::span<const Eigen::Matrix2cd> operators) {
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (const auto& m : operators) {
    sum += m.adjoint() * m;
  }
  sum -= Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd sym = 0.5 * (sum + sum.adjoint());
  return hermitian_operator_norm(sym);
}

double KrausSet::completeness_defect() const {
  return qchannel::completeness_defect(operators);
}

ChoiState ChoiState::from_state(DensityMatrix state) {
  if (state.dim() != 4) {
    throw ParameterError("ChoiState: requires a 4x4 density matrix");
  }
  return ChoiState(std::move(state));
}

Eigen::Matrix2cd ChoiState::ancilla_reduced() const {
  const auto& c = state_.matrix();
  Eigen::Matrix2cd out;
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      out(m, n) = c(m * 2 + 0, n * 2 + 0) + c(m * 2 + 1, n * 2 + 1);
    }
  }
  return out;
}

double ChoiState::trace_preservation_defect() const {
  Eigen::Matrix2cd diff =
      ancilla_reduced() - 0.5 * Eigen::Matrix2cd::Identity();
  return diff.cwiseAbs().maxCoeff();
}

KrausSet general_slm_channel(double a_psi, double p_eff) {
  check_probability(p_eff, "p_eff");
  const complexd phase = std::exp(complexd(0.0, a_psi));
  Eigen::Matrix2cd m0 = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd m1 = Eigen::Matrix2cd::Zero();
  m0(0, 0) = std::sqrt(1.0 - p_eff) * phase;
  m0(1, 1) = std::sqrt(1.0 - p_eff);
  m1(0, 0) = std::sqrt(p_eff) * phase;
  m1(1, 1) = -std::sqrt(p_eff);
  return KrausSet{{m0, m1, Eigen::Matrix2cd::Zero(), Eigen::Matrix2cd::Zero()}};
}

KrausSet slm_uniform_channel(double a, double p) {
  check_probability(p, "p");
  return general_slm_channel(a, p);
}

KrausSet phase_flip_channel(double q) {
  check_probability(q, "q");
  Eigen::Matrix2cd e0 = std::sqrt(1.0 - q) * Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd e1 = Eigen::Matrix2cd::Zero();
  e1(0, 0) = std::sqrt(q);
  e1(1, 1) = -std::sqrt(q);
  return KrausSet{{e0, e1}};
}

DensityMatrix apply_channel(const KrausSet& k, const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw ParameterError("apply_channel: requires a 2x2 state");
  }
  const double defect = k.completeness_defect();
  if (defect > kCompletenessTol) {
    throw InvariantViolationError(
        "apply_channel: Kraus set incomplete, defect " +
        std::to_string(defect));
  }
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  const Eigen::Matrix2cd in = rho.matrix();
  for (const auto& m : k.operators) {
    out += m * in * m.adjoint();
  }
  return DensityMatrix::from_matrix(out);
}

ChoiState choi_from_kraus(const KrausSet& k) {
  const double defect = k.completeness_defect();
  if (defect > kCompletenessTol) {
    throw InvariantViolationError(
        "choi_from_kraus: Kraus set incomplete, defect " +
        std::to_string(defect));
  }
  Eigen::Matrix4cd c = Eigen::Matrix4cd::Zero();
  for (const auto& m : k.operators) {
    const Eigen::Vector4cd w = dual_vector(m);
    c += w * w.adjoint();
  }
  return ChoiState::from_state(DensityMatrix::from_matrix(c));
}

KrausSet kraus_from_choi(const ChoiState& c) {
  const double tp = c.trace_preservation_defect();
  if (tp > 1e-6) {
    throw InvalidChannelError(
        "kraus_from_choi: Choi state not trace preserving, defect " +
        std::to_string(tp));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(c.state().matrix());
  KrausSet out;
  for (Eigen::Index i = 0; i < 4; ++i) {
    const double lambda = es.eigenvalues()(i);
    if (lambda <= 1e-10) continue;
    const double scale = std::sqrt(2.0 * lambda);
    const Eigen::Vector4cd v = es.eigenvectors().col(i);
    Eigen::Matrix2cd m;
    for (int anc = 0; anc < 2; ++anc) {
      for (int sys = 0; sys < 2; ++sys) {
        m(sys, anc) = scale * v(anc * 2 + sys);
      }
    }
    out.operators.push_back(m);
  }
  return out;
}

double channel_fidelity(const ChoiState& c1, const ChoiState& c2) {
  return qpolar::state_fidelity(c1.state(), c2.state());
}

PhaseFlipFit fit_phase_flip_family(const ChoiState& c,
                                   std::optional<double> a_fixed) {
  const auto& m = c.state().matrix();
  const FamilyFidelityKernel kernel{m(0, 0).real(), m(3, 3).real(), m(0, 3)};

  constexpr double kPStep = 1e-3;
  constexpr int kPSteps = 500;  // covers [0, 1/2]
  constexpr int kASteps = 256;
  constexpr double kRefineTol = 1e-7;

  double best_f = -1.0;
  double best_p = 0.0;
  double best_a = a_fixed ? reduce_angle(*a_fixed) : 0.0;
  if (a_fixed) {
    for (int i = 0; i <= kPSteps; ++i) {
      const double p = i * kPStep;
      const double f = kernel(best_a, p);
      if (f > best_f) {
        best_f = f;
        best_p = p;
      }
    }
  } else {
    // p outer / a inner with strict improvement implements the tie-break:
    // smallest p first, then smallest a.
    for (int i = 0; i <= kPSteps; ++i) {
      const double p = i * kPStep;
      for (int j = 0; j < kASteps; ++j) {
        const double a = kTwoPi * j / kASteps;
        const double f = kernel(a, p);
        if (f > best_f) {
          best_f = f;
          best_p = p;
          best_a = a;
        }
      }
    }
  }

  const double a_step = kTwoPi / kASteps;
  double p = best_p;
  double a = best_a;
  for (int round = 0; round < 3; ++round) {
    p = golden_max([&](double x) { return kernel(a, x); },
                   std::max(0.0, p - kPStep), std::min(0.5, p + kPStep),
                   kRefineTol);
    if (!a_fixed) {
      a = golden_max([&](double x) { return kernel(x, p); }, a - a_step,
                     a + a_step, kRefineTol);
    }
  }

  PhaseFlipFit fit;
  fit.p = std::clamp(p, 0.0, 0.5);
  fit.a = reduce_angle(a);
  fit.fidelity = std::clamp(kernel(a, fit.p), 0.0, 1.0);
  return fit;
}

KrausSet conjugate_channel(const KrausSet& k, const Eigen::Matrix2cd& u) {
  const Eigen::Matrix2cd defect =
      u.adjoint() * u - Eigen::Matrix2cd::Identity();
  if (defect.cwiseAbs().maxCoeff() > 1e-10) {
    throw ParameterError("conjugate_channel: matrix is not unitary");
  }
  KrausSet out;
  out.operators.reserve(k.operators.size());
  for (const auto& m : k.operators) {
    out.operators.push_back(u * m * u.adjoint());
  }
  return out;
}

}  // namespace slmlab::qchannel
