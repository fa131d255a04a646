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

#ifndef WDIST_STATE_HPP
#define WDIST_STATE_HPP

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "wdist/register.hpp"

namespace wdist {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Normalized amplitude vector over a register.
class PureState {
 public:
  /// Throws InvariantError unless the norm is 1 within 1e-12, and
  /// DimensionError unless the length is 2^|reg|.
  PureState(Register reg, Vector amplitudes);

  /// Rescales `amplitudes` to unit norm; throws InvariantError on a zero vector.
  static PureState normalized(Register reg, Vector amplitudes);
  /// Computational basis state, e.g. basis({1,2,3}, "010").
  static PureState basis(Register reg, std::string_view bits);

  const Register& qubits() const noexcept { return reg_; }
  const Vector& amplitudes() const noexcept { return amps_; }
  std::size_t num_qubits() const noexcept { return reg_.size(); }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  /// Amplitude of the basis ket spelled by `bits` (register order).
  Complex amplitude(std::string_view bits) const;

 private:
  Register reg_;
  Vector amps_;
};

/// Hermitian, positive semidefinite, unit-trace matrix over a register.
class DensityMatrix {
 public:
  /// Validates hermiticity and trace (1e-12) and the spectrum (>= -1e-10);
  /// throws InvariantError or DimensionError.
  DensityMatrix(Register reg, Matrix matrix);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(Register reg);

  const Register& qubits() const noexcept { return reg_; }
  const Matrix& matrix() const noexcept { return rho_; }
  std::size_t num_qubits() const noexcept { return reg_.size(); }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(rho_.rows()); }

 private:
  Register reg_;
  Matrix rho_;
};

/// alpha * a + (1 - alpha) * b over a common register.
DensityMatrix mix(double alpha, const DensityMatrix& a, const DensityMatrix& b);

/// Checks the DensityMatrix invariants on a raw matrix without throwing.
bool satisfies_density_invariants(const Matrix& m);

/// Unitary acting on `arity` qubits.
class UnitaryOp {
 public:
  /// Throws InvariantError unless U^dagger U = I within 1e-12.
  explicit UnitaryOp(Matrix u, std::string name = {});

  const Matrix& matrix() const noexcept { return u_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::string& name() const noexcept { return name_; }
  UnitaryOp adjoint() const;

 private:
  Matrix u_;
  std::size_t arity_;
  std::string name_;
};

/// Finite Kraus set with sum K^dagger K = I (within 1e-10).
class QuantumChannel {
 public:
  /// Throws CompletenessError or DimensionError.
  explicit QuantumChannel(std::vector<Matrix> kraus);

  const std::vector<Matrix>& kraus() const noexcept { return kraus_; }
  std::size_t arity() const noexcept { return arity_; }

  static QuantumChannel identity(std::size_t arity = 1);
  static QuantumChannel from_unitary(const UnitaryOp& u);

 private:
  std::vector<Matrix> kraus_;
  std::size_t arity_;
};

/// Single-qubit Pauli matrices.
namespace pauli {
Matrix i();
Matrix x();
Matrix y();
Matrix z();
}  // namespace pauli

}  // namespace wdist

#endif  // WDIST_STATE_HPP
