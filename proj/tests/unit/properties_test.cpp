// Copyright 2026 The wdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wdist/entmetrics.hpp"
#include "wdist/measurement.hpp"
#include "wdist/noise.hpp"
#include "wdist/protocols.hpp"
#include "wdist/qcore.hpp"
#include "wdist/wfamily.hpp"

namespace wdist {
namespace {

void expect_valid_density(const Matrix& m, double tol = 1e-10) {
  EXPECT_NEAR(m.trace().real(), 1.0, tol);
  EXPECT_LT(max_abs_diff(m, m.adjoint()), tol);
  EXPECT_GT(hermitian_eigenvalues(m).minCoeff(), -tol);
}

TEST(Properties, ConcurrenceAndTangleInUnitInterval) {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 1000; ++trial) {
    const DensityMatrix rho({1, 2}, oracle::random_density(rng, 4));
    const double c = concurrence(rho);
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0 + 1e-12);
    EXPECT_NEAR(two_tangle(rho), c * c, 1e-14);
  }
}

TEST(Properties, ThreeQubitTanglesInUnitInterval) {
  std::mt19937_64 rng(1002);
  for (int trial = 0; trial < 200; ++trial) {
    const TangleReport t = tangle_report(DensityMatrix({1, 2, 3}, oracle::random_density(rng, 8)));
    for (double v : {t.tau_12, t.tau_13, t.tau_23, t.tau_av}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0 + 1e-12);
    }
  }
}

TEST(Properties, PureMonogamy) {
  std::mt19937_64 rng(1003);
  for (int trial = 0; trial < 200; ++trial) {
    const PureState psi = PureState::normalized({1, 2, 3}, oracle::random_vector(rng, 8));
    const TangleReport t = tangle_report(psi);
    ASSERT_TRUE(t.tau_3.has_value());
    EXPECT_GE(*t.tau_3, -1e-10);
    EXPECT_LE(t.tau_12 + t.tau_13, 1.0 + 1e-10);
  }
}

TEST(Properties, ChannelOutputsAreStates) {
  std::mt19937_64 rng(1004);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    DensityMatrix rho({1, 2, 3}, oracle::random_density(rng, 8));
    rho = depolarize(rho, u(rng), static_cast<int>(1 + trial % 3));
    rho = apply_channel(rho, random_qubit_channel(static_cast<std::uint64_t>(trial)), {2});
    expect_valid_density(rho.matrix());
  }
}

TEST(Properties, MeasurementProbabilitiesSumToOne) {
  std::mt19937_64 rng(1005);
  const std::vector<MeasurementBasis> bases{bell_basis({1, 2}), basis_eta_zeta({1, 2, 3}),
                                            computational_basis({3})};
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho({1, 2, 3, 4}, oracle::random_density(rng, 16));
    for (const auto& basis : bases) {
      double total = 0.0;
      for (const auto& rec : measure(rho, basis)) {
        total += rec.probability;
        if (rec.post_state) expect_valid_density(rec.post_state->matrix());
      }
      EXPECT_NEAR(total, 1.0, 1e-10);
    }
  }
}

TEST(Properties, FidelityIsLinearInState) {
  std::mt19937_64 rng(1006);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = oracle::random_density(rng, 8);
    const Matrix b = oracle::random_density(rng, 8);
    const double t = u(rng);
    const PureState psi = PureState::normalized({1, 2, 3}, oracle::random_vector(rng, 8));
    const double mixed = fidelity(DensityMatrix({1, 2, 3}, t * a + (1.0 - t) * b), psi);
    const double sep = t * fidelity(DensityMatrix({1, 2, 3}, a), psi) + (1.0 - t) * fidelity(DensityMatrix({1, 2, 3}, b), psi);
    EXPECT_NEAR(mixed, sep, 1e-12);
  }
}

TEST(Properties, PermuteInverse) {
  std::mt19937_64 rng(1007);
  const std::vector<Register> orders{{2, 3, 1}, {3, 1, 2}, {3, 2, 1}, {1, 3, 2}};
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho({1, 2, 3}, oracle::random_density(rng, 8));
    for (const auto& order : orders) {
      const DensityMatrix there = permute_qubits(rho, order);
      const DensityMatrix back = permute_qubits(there, {1, 2, 3});
      EXPECT_LT(max_abs_diff(back.matrix(), rho.matrix()), 1e-15);
      EXPECT_LT(max_abs_diff(partial_trace(there, {2}).matrix(), partial_trace(rho, {2}).matrix()), 1e-12);
    }
  }
}

TEST(Properties, TanglesNonIncreasingInNoise) {
  double prev = tangle_report(protocol1(0.0).final_state).tau_av;
  for (int i = 1; i <= 40; ++i) {
    const double cur = tangle_report(protocol1(0.025 * i).final_state).tau_av;
    EXPECT_LE(cur, prev + 1e-12);
    prev = cur;
  }
}

TEST(Properties, ComposedNoiseEqualsSequential) {
  std::mt19937_64 rng(1008);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<DepolarizingParam> ps{u(rng), u(rng), u(rng)};
    Matrix m = oracle::random_density(rng, 2);
    const Matrix start = m;
    for (const auto& p : ps) m = oracle::depolarize(m, 1, 0, p.value());
    const Matrix composed = oracle::depolarize(start, 1, 0, compose_depolarizing(ps).value());
    EXPECT_LT(max_abs_diff(m, composed), 1e-12);
  }
}

}  // namespace
}  // namespace wdist
