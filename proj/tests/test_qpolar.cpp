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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace slmlab;
using namespace slmlab::qpolar;
using slmlab::test::max_abs_diff;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix2cd mat2(std::complex<double> a, std::complex<double> b,
                      std::complex<double> c, std::complex<double> d) {
  Eigen::Matrix2cd m;
  m << a, b, c, d;
  return m;
}

/// Dephased output of the uniform-phase device channel on a pure input:
/// diagonal sin^2/cos^2, off-diagonal e^{i(phi+a)} (1-2p) sin(theta)/2.
Eigen::Matrix2cd dephased_output(double theta, double phi, double a, double p) {
  const std::complex<double> off =
      std::exp(std::complex<double>(0.0, phi + a)) * (1.0 - 2.0 * p) *
      std::sin(theta) / 2.0;
  return mat2(std::sin(theta / 2) * std::sin(theta / 2), off, std::conj(off),
              std::cos(theta / 2) * std::cos(theta / 2));
}

}  // namespace

TEST_CASE("pure-state projectors at the poles and equator") {
  CHECK(max_abs_diff(density_from_pure(PureQubit(0.0, 0.0)).matrix(),
                     mat2(0, 0, 0, 1)) < 1e-15);
  CHECK(max_abs_diff(density_from_pure(PureQubit(kPi, 0.0)).matrix(),
                     mat2(1, 0, 0, 0)) < 1e-15);
  CHECK(max_abs_diff(density_from_pure(PureQubit(kPi / 2, 0.0)).matrix(),
                     mat2(0.5, 0.5, 0.5, 0.5)) < 1e-15);
}

TEST_CASE("PureQubit validates theta and reduces phi") {
  CHECK_THROWS_AS(PureQubit(-0.1, 0.0), ParameterError);
  CHECK_THROWS_AS(PureQubit(kPi + 0.1, 0.0), ParameterError);
  CHECK(PureQubit(1.0, 7.0).phi == doctest::Approx(7.0 - 2 * kPi));
  CHECK(PureQubit(1.0, -kPi / 2).phi == doctest::Approx(3 * kPi / 2));
}

TEST_CASE("Bloch coordinates of reference states") {
  const BlochVector mixed =
      bloch_from_density(DensityMatrix::from_matrix(mat2(0.5, 0, 0, 0.5)));
  CHECK(std::abs(mixed.x) < 1e-15);
  CHECK(std::abs(mixed.y) < 1e-15);
  CHECK(std::abs(mixed.z) < 1e-15);

  const BlochVector d =
      bloch_from_density(density_from_pure(PureQubit(kPi / 2, 0.0)));
  CHECK(d.x == doctest::Approx(1.0));
  CHECK(std::abs(d.y) < 1e-12);
  CHECK(std::abs(d.z) < 1e-12);

  // |R> = (|H> + i|V>)/sqrt(2) sits on +y, |V> on +z, |H> on -z.
  const BlochVector r =
      bloch_from_density(density_from_pure(PureQubit(kPi / 2, -kPi / 2)));
  CHECK(r.y == doctest::Approx(1.0));
  CHECK(bloch_from_density(density_from_pure(PureQubit(0, 0))).z ==
        doctest::Approx(1.0));
  CHECK(bloch_from_density(density_from_pure(PureQubit(kPi, 0))).z ==
        doctest::Approx(-1.0));
}

TEST_CASE("dephased |D> output lands at (0.84, 0, 0) for p = 0.08") {
  const Eigen::Matrix2cd rho_f = dephased_output(kPi / 2, 0.0, 0.0, 0.08);
  const BlochVector v = bloch_from_density(DensityMatrix::from_matrix(rho_f));
  CHECK(v.x == doctest::Approx(0.84).epsilon(1e-12));
  CHECK(std::abs(v.y) < 1e-15);
  CHECK(std::abs(v.z) < 1e-15);

  const DensityMatrix back = density_from_bloch(BlochVector{0.84, 0.0, 0.0});
  CHECK(max_abs_diff(back.matrix(), rho_f) < 1e-15);
}

TEST_CASE("density_from_bloch inverts bloch_from_density") {
  CHECK(max_abs_diff(density_from_bloch(BlochVector{0, 0, 0}).matrix(),
                     mat2(0.5, 0, 0, 0.5)) < 1e-15);
  CHECK(max_abs_diff(density_from_bloch(BlochVector{0, 0, 1}).matrix(),
                     mat2(0, 0, 0, 1)) < 1e-15);
  CHECK_THROWS_AS(density_from_bloch(BlochVector{1.0, 0.5, 0.0}),
                  InvalidStateError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = test::random_mixed(rng);
    const DensityMatrix round =
        density_from_bloch(bloch_from_density(rho));
    CHECK(max_abs_diff(round.matrix(), rho.matrix()) < 1e-12);
  }
}

TEST_CASE("purity of reference and dephased states") {
  CHECK(purity(DensityMatrix::from_matrix(mat2(0.5, 0, 0, 0.5))) ==
        doctest::Approx(0.5).epsilon(1e-12));
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    CHECK(purity(density_from_pure(test::random_pure(rng))) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  // (1 + (1-2p)^2)/2 at p = 0.08; inside the measured range [0.83, 0.96].
  const double p_d =
      purity(DensityMatrix::from_matrix(dephased_output(kPi / 2, 0, 0, 0.08)));
  CHECK(p_d == doctest::Approx(0.8528).epsilon(1e-12));
  CHECK(p_d > 0.83);
  CHECK(p_d < 0.96);
}

TEST_CASE("purity equals (1 + |bloch|^2)/2") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = test::random_mixed(rng);
    const double n = bloch_from_density(rho).norm();
    CHECK(std::abs(purity(rho) - 0.5 * (1.0 + n * n)) < 1e-12);
  }
}

TEST_CASE("fidelity of reference pairs") {
  const DensityMatrix h = density_from_pure(PureQubit(kPi, 0));
  const DensityMatrix v = density_from_pure(PureQubit(0, 0));
  const DensityMatrix d = density_from_pure(PureQubit(kPi / 2, 0));
  CHECK(state_fidelity(h, h) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(state_fidelity(h, v) < 1e-8);
  // |<H|D>| = 1/sqrt(2), computed from the amplitudes directly.
  const std::complex<double> overlap =
      PureQubit(kPi, 0).amplitudes().dot(PureQubit(kPi / 2, 0).amplitudes());
  CHECK(std::abs(overlap) == doctest::Approx(1.0 / std::numbers::sqrt2));
  CHECK(state_fidelity(h, d) ==
        doctest::Approx(std::abs(overlap)).epsilon(1e-10));
}

TEST_CASE("fidelity is symmetric and matches pure-state overlaps") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix a = test::random_mixed(rng);
    const DensityMatrix b = test::random_mixed(rng);
    CHECK(std::abs(state_fidelity(a, b) - state_fidelity(b, a)) < 1e-10);
  }
  for (int i = 0; i < 100; ++i) {
    const PureQubit a = test::random_pure(rng);
    const PureQubit b = test::random_pure(rng);
    const double overlap = std::abs(a.amplitudes().dot(b.amplitudes()));
    CHECK(std::abs(state_fidelity(density_from_pure(a), density_from_pure(b)) -
                   overlap) < 1e-10);
  }
}

TEST_CASE("concurrence from the reduced state") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 50; ++i) {
    CHECK(concurrence_from_reduced(density_from_pure(test::random_pure(rng))) <
          1e-7);
  }
  CHECK(concurrence_from_reduced(
            DensityMatrix::from_matrix(mat2(0.5, 0, 0, 0.5))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Reduced state for theta = pi/2 and |<e^{ia}>| = 1/2: C = sqrt(3)/2.
  const DensityMatrix rho_p =
      DensityMatrix::from_matrix(mat2(0.5, 0.25, 0.25, 0.5));
  CHECK(concurrence_from_reduced(rho_p) ==
        doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
  // Same number through the definition used to derive it.
  CHECK(concurrence_from_reduced(rho_p) ==
        doctest::Approx(std::sqrt(2.0 * (1.0 - purity(rho_p)))));
}

TEST_CASE("DensityMatrix construction rejects unphysical input") {
  CHECK_THROWS_AS(DensityMatrix::from_matrix(mat2(0.5, 0.2, 0.1, 0.5)),
                  InvalidStateError);  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix::from_matrix(mat2(0.7, 0, 0, 0.5)),
                  InvalidStateError);  // trace 1.2
  CHECK_THROWS_AS(DensityMatrix::from_matrix(mat2(1.5, 0, 0, -0.5)),
                  InvalidStateError);  // negative eigenvalue
  CHECK_THROWS_AS(DensityMatrix::from_matrix(Eigen::MatrixXcd::Identity(3, 3)),
                  InvalidStateError);  // unsupported dimension
}
