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

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wdist/qcore.hpp"
#include "wdist/wfamily.hpp"

namespace wdist {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TEST(Register, BigEndianIndexing) {
  const PureState s = PureState::basis({1, 2, 3}, "100");
  EXPECT_EQ(s.amplitudes()(4), Complex(1.0));
  EXPECT_EQ(bit_at(4, 0, 3), 1U);
  EXPECT_EQ(bit_at(4, 2, 3), 0U);
}

TEST(Register, RejectsDuplicateAndNonPositiveLabels) {
  EXPECT_THROW((Register{1, 1}), LabelError);
  EXPECT_THROW((Register{0, 1}), LabelError);
  EXPECT_THROW((Register{1, 2}).concat(Register{2, 3}), LabelError);
}

TEST(Register, ComplementAndPositions) {
  const Register r{1, 2, 5, 6};
  EXPECT_EQ(r.complement(Register{5, 1}), (Register{2, 6}));
  EXPECT_EQ(r.positions(Register{6, 2}), (std::vector<std::size_t>{3, 1}));
  EXPECT_THROW(r.position(QubitLabel(3)), LabelError);
  EXPECT_EQ(r.to_string(), "(1,2,5,6)");
}

TEST(Register, CapsAtEightQubits) {
  EXPECT_NO_THROW((Register{1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_THROW((Register{1, 2, 3, 4, 5, 6, 7, 8, 9}), DimensionError);
}

TEST(PureState, ValidatesNormAndLength) {
  Vector v = Vector::Zero(4);
  v(0) = 1.0;
  EXPECT_NO_THROW(PureState(Register{1, 2}, v));
  v(1) = 1.0;
  EXPECT_THROW(PureState(Register{1, 2}, v), InvariantError);
  EXPECT_THROW(PureState(Register{1, 2, 3}, Vector::Zero(4)), DimensionError);
  EXPECT_THROW(PureState::normalized(Register{1}, Vector::Zero(2)), InvariantError);
}

TEST(DensityMatrix, ValidatesInvariants) {
  Matrix m = Matrix::Identity(2, 2) * 0.5;
  EXPECT_NO_THROW(DensityMatrix(Register{1}, m));
  Matrix bad_trace = Matrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix(Register{1}, bad_trace), InvariantError);
  Matrix non_herm = m;
  non_herm(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix(Register{1}, non_herm), InvariantError);
  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix(Register{1}, negative), InvariantError);
}

TEST(Tensor, ComputationalProduct) {
  const PureState s = tensor(PureState::basis({1}, "0"), PureState::basis({2}, "1"));
  EXPECT_EQ(s.qubits(), (Register{1, 2}));
  EXPECT_TRUE(approx_equal(s, PureState::basis({1, 2}, "01")));
}

TEST(Tensor, SeedStateFromInterleavedLabels) {
  const PureState raw = tensor(bell(BellKind::PhiPlus, {1, 3}), PureState::basis({2}, "0"));
  const PureState seed = permute_qubits(raw, {1, 2, 3});
  Vector expected = Vector::Zero(8);
  expected(0b000) = kInvSqrt2;
  expected(0b101) = kInvSqrt2;
  EXPECT_LT((seed.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Tensor, TwoWmodCopiesHaveNineComponents) {
  const PureState tot = tensor(w_mod(), w_mod({4, 5, 6}));
  int nonzero = 0;
  for (Eigen::Index i = 0; i < tot.amplitudes().size(); ++i) nonzero += std::abs(tot.amplitudes()(i)) > 1e-14;
  EXPECT_EQ(nonzero, 9);
}

TEST(Tensor, MatchesKroneckerOracle) {
  std::mt19937_64 rng(11);
  const Vector a = oracle::random_vector(rng, 4);
  const Vector b = oracle::random_vector(rng, 2);
  const PureState s = tensor(PureState({1, 2}, a), PureState({3}, b));
  EXPECT_LT((s.amplitudes() - oracle::kron(a, b)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_THROW(tensor(PureState({1, 2}, a), PureState({2}, b)), LabelError);
}

TEST(Permute, IdentityAndRemap) {
  const PureState w = w_mod();
  EXPECT_TRUE(approx_equal(permute_qubits(w, {1, 2, 3}), w));
  Vector v = Vector::Zero(8);
  v(0b000) = kInvSqrt2;
  v(0b101) = kInvSqrt2;
  const PureState s({1, 3, 2}, v);
  const PureState p = permute_qubits(s, {1, 2, 3});
  EXPECT_NEAR(std::abs(p.amplitude("000")), kInvSqrt2, 1e-15);
  EXPECT_NEAR(std::abs(p.amplitude("110")), kInvSqrt2, 1e-15);
  EXPECT_THROW(permute_qubits(s, {1, 2}), LabelError);
  EXPECT_THROW(permute_qubits(s, {1, 2, 4}), LabelError);
}

TEST(Permute, SwapExchangesAmplitudes) {
  const PureState w = w_m({2.0, 0.3, 0.0});
  const PureState swapped = relabel(permute_qubits(w, {2, 1, 3}), {1, 2, 3});
  EXPECT_EQ(swapped.amplitude("100"), w.amplitude("010"));
  EXPECT_EQ(swapped.amplitude("010"), w.amplitude("100"));
  EXPECT_EQ(swapped.amplitude("001"), w.amplitude("001"));
}

TEST(ApplyUnitary, MatchesEmbeddedOracle) {
  std::mt19937_64 rng(5);
  const Matrix u = oracle::random_unitary(rng, 4);
  const Vector psi = oracle::random_vector(rng, 16);
  const PureState s({1, 2, 3, 4}, psi);
  const PureState out = apply_unitary(s, UnitaryOp(u), {4, 2});
  const Vector expected = oracle::embed(u, {3, 1}, 4) * psi;
  EXPECT_LT((out.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-13);

  const DensityMatrix rho = DensityMatrix::from_pure(s);
  const DensityMatrix out_rho = apply_unitary(rho, UnitaryOp(u), {4, 2});
  EXPECT_LT(max_abs_diff(out_rho.matrix(), expected * expected.adjoint()), 1e-13);
}

TEST(ApplyUnitary, PreparationAndPauliImages) {
  const PureState w = apply_unitary(preparation_seed(), u_mw(), {1, 2});
  EXPECT_TRUE(approx_equal(w, w_mod()));
  const PureState minus = apply_unitary(eta_plus(), UnitaryOp(pauli::z()), {1});
  EXPECT_TRUE(approx_equal(minus, basis_eta_xi().state("eta-")));
  EXPECT_THROW(apply_unitary(w, u_mw(), {1}), DimensionError);
  EXPECT_THROW(apply_unitary(w, UnitaryOp(pauli::x()), {7}), LabelError);
}

TEST(ApplyChannel, IdentityAndFullDepolarization) {
  const DensityMatrix rho = DensityMatrix::from_pure(w_mod());
  EXPECT_LT(max_abs_diff(apply_channel(rho, QuantumChannel::identity(), {2}).matrix(), rho.matrix()), 1e-15);

  const DensityMatrix zero = DensityMatrix::from_pure(PureState::basis({1}, "0"));
  const std::vector<Matrix> kraus{0.5 * pauli::i(), 0.5 * pauli::x(), 0.5 * pauli::y(), 0.5 * pauli::z()};
  const DensityMatrix mixed = apply_channel(zero, kraus, {1});
  EXPECT_LT(max_abs_diff(mixed.matrix(), 0.5 * Matrix::Identity(2, 2)), 1e-15);
}

TEST(ApplyChannel, RejectsIncompleteKraus) {
  const DensityMatrix rho = DensityMatrix::from_pure(w_mod());
  const std::vector<Matrix> kraus{0.9 * pauli::i()};
  EXPECT_THROW(apply_channel(rho, kraus, {1}), CompletenessError);
}

TEST(ApplyChannel, MatchesOracleOnMiddleQubit) {
  std::mt19937_64 rng(17);
  const Matrix m = oracle::random_density(rng, 8);
  const DensityMatrix rho({1, 2, 3}, m);
  const std::vector<Matrix> kraus{std::sqrt(0.7) * pauli::i(), std::sqrt(0.1) * pauli::x(),
                                  std::sqrt(0.1) * pauli::y(), std::sqrt(0.1) * pauli::z()};
  const DensityMatrix out = apply_channel(rho, kraus, {2});
  Matrix expected = Matrix::Zero(8, 8);
  for (const auto& k : kraus) {
    const Matrix big = oracle::embed(k, {1}, 3);
    expected += big * m * big.adjoint();
  }
  EXPECT_LT(max_abs_diff(out.matrix(), expected), 1e-14);
}

TEST(PartialTrace, ReducedStatesOfWmod) {
  const DensityMatrix rho = DensityMatrix::from_pure(w_mod());
  const DensityMatrix r3 = partial_trace(rho, {3});
  EXPECT_LT(max_abs_diff(r3.matrix(), 0.5 * Matrix::Identity(2, 2)), 1e-15);

  const Vector v00 = oracle::ket("00");
  const Vector sym = oracle::ket("10") + oracle::ket("01");
  const Matrix expected = 0.5 * v00 * v00.adjoint() + 0.25 * sym * sym.adjoint();
  EXPECT_LT(max_abs_diff(partial_trace(rho, {1, 2}).matrix(), expected), 1e-15);
}

TEST(PartialTrace, ProductFactorAndEmptyKeep) {
  const PureState a = bell(BellKind::PsiMinus, {1, 2});
  const PureState b = PureState::basis({3}, "1");
  const DensityMatrix r = partial_trace(tensor(a, b), {1, 2});
  EXPECT_LT(max_abs_diff(r.matrix(), DensityMatrix::from_pure(a).matrix()), 1e-15);
  const DensityMatrix scalar = partial_trace(DensityMatrix::from_pure(a), Register{});
  EXPECT_EQ(scalar.dimension(), 1U);
  EXPECT_NEAR(scalar.matrix()(0, 0).real(), 1.0, 1e-15);
}

TEST(PartialTrace, MatchesBitstringOracle) {
  std::mt19937_64 rng(23);
  const Matrix m = oracle::random_density(rng, 16);
  const DensityMatrix rho({1, 2, 3, 4}, m);
  const DensityMatrix r = partial_trace(rho, {4, 2});
  EXPECT_LT(max_abs_diff(r.matrix(), oracle::partial_trace(m, 4, {3, 1})), 1e-14);
  EXPECT_EQ(r.qubits(), (Register{4, 2}));
}

TEST(Measure, ComputationalZero) {
  const auto recs = measure(PureState::basis({1}, "0"), computational_basis({1}));
  ASSERT_EQ(recs.size(), 2U);
  EXPECT_EQ(recs[0].label, "0");
  EXPECT_NEAR(recs[0].probability, 1.0, 1e-15);
  EXPECT_FALSE(recs[1].post_state.has_value());
}

TEST(Measure, BellMeasurementSwapsWmod) {
  const PureState total = tensor(w_mod(), bell(BellKind::PhiPlus, {4, 5}));
  const auto recs = measure(total, bell_basis({3, 4}));
  ASSERT_EQ(recs.size(), 4U);
  for (const auto& r : recs) EXPECT_NEAR(r.probability, 0.25, 1e-14);
  ASSERT_TRUE(recs[0].post_state.has_value());
  EXPECT_EQ(recs[0].post_state->qubits(), (Register{1, 2, 5}));
  EXPECT_NEAR(fidelity(*recs[0].post_state, w_mod({1, 2, 5})), 1.0, 1e-14);
}

TEST(Measure, JointBasisEtaPlusBranch) {
  const PureState total = tensor(w_mod(), w_mod({4, 5, 6}));
  const auto recs = measure_pure(total, basis_eta_zeta({3, 4, 5}));
  EXPECT_EQ(recs[0].label, "eta+");
  EXPECT_NEAR(recs[0].probability, 0.25, 1e-14);
  Vector expected = Vector::Zero(8);
  expected(0b001) = kInvSqrt2;
  expected(0b010) = 0.5;
  expected(0b100) = 0.5;
  EXPECT_TRUE(equal_up_to_phase(*recs[0].post_state, PureState({1, 2, 6}, expected)));
}

TEST(Measure, MatchesProjectorOracle) {
  std::mt19937_64 rng(31);
  const Matrix m = oracle::random_density(rng, 16);
  const DensityMatrix rho({1, 2, 3, 4}, m);
  const MeasurementBasis basis = bell_basis({2, 4});
  double total = 0.0;
  for (const auto& rec : measure(rho, basis)) {
    const Vector v = basis.at(rec.label).vector;
    const Matrix proj = oracle::embed(v * v.adjoint(), {1, 3}, 4);
    const double p = (proj * m).trace().real();
    EXPECT_NEAR(rec.probability, p, 1e-14);
    total += rec.probability;
    // Post-state: <v|_{2,4} rho |v>_{2,4} / p on (1,3).
    const Matrix projected = proj * m * proj / p;
    const Matrix reduced = oracle::partial_trace(projected, 4, {0, 2});
    EXPECT_LT(max_abs_diff(rec.post_state->matrix(), reduced), 1e-13);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(MeasurementBasis, RejectsNonOrthonormalSets) {
  std::vector<LabeledVector> vs{{"a", oracle::ket("0")}, {"b", oracle::ket("0")}};
  EXPECT_THROW(MeasurementBasis({1}, vs), InvariantError);
  std::vector<LabeledVector> dup{{"a", oracle::ket("0")}, {"a", oracle::ket("1")}};
  EXPECT_THROW(MeasurementBasis({1}, dup), InvariantError);
  std::vector<LabeledVector> few{{"a", oracle::ket("0")}};
  EXPECT_THROW(MeasurementBasis({1}, few), DimensionError);
}

TEST(Fidelity, PureMixedAndMismatch) {
  const PureState g = ghz();
  EXPECT_NEAR(fidelity(DensityMatrix::from_pure(g), g), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(DensityMatrix::maximally_mixed({1, 2, 3}), w_mod()), 0.125, 1e-15);
  EXPECT_THROW(fidelity(DensityMatrix::maximally_mixed({1, 2}), w_mod()), DimensionError);
}

TEST(Fidelity, PolynomialAtPointFour) {
  const DensityMatrix rho = DensityMatrix::from_pure(w_mod());
  Matrix m = rho.matrix();
  for (int q = 0; q < 3; ++q) m = oracle::depolarize(m, 3, q, 0.4);
  EXPECT_NEAR(fidelity(DensityMatrix({1, 2, 3}, m), w_mod()), 0.392, 1e-12);
}

TEST(Fidelity, AlignsRegistersWithSameLabels) {
  const PureState w = w_mod();
  const DensityMatrix rho = DensityMatrix::from_pure(permute_qubits(w, {3, 1, 2}));
  EXPECT_NEAR(fidelity(rho, w), 1.0, 1e-14);
}

TEST(Entropy, KnownValues) {
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::from_pure(w_mod())), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed({1})), 1.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed({1, 2, 3})), 3.0, 1e-12);
  EXPECT_NEAR(purity(DensityMatrix::maximally_mixed({1, 2})), 0.25, 1e-15);
}

TEST(Phase, GlobalPhaseComparison) {
  const PureState w = w_mod();
  const PureState minus = PureState(w.qubits(), -w.amplitudes());
  EXPECT_TRUE(equal_up_to_phase(w, minus));
  EXPECT_FALSE(approx_equal(w, minus));
  EXPECT_FALSE(equal_up_to_phase(w, w_canonical()));
}

}  // namespace
}  // namespace wdist
