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

#ifndef WDIST_QCORE_HPP
#define WDIST_QCORE_HPP

#include <span>

#include "wdist/errors.hpp"
#include "wdist/measurement.hpp"
#include "wdist/register.hpp"
#include "wdist/state.hpp"
#include "wdist/tolerances.hpp"

namespace wdist {

// Kronecker product; the result register is a.qubits() followed by
// b.qubits(). Throws LabelError on overlapping labels.
PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Reorders qubits so that the logical state is unchanged and the register
// reads `new_order`. Throws LabelError unless new_order is a permutation.
PureState permute_qubits(const PureState& s, const Register& new_order);
DensityMatrix permute_qubits(const DensityMatrix& rho, const Register& new_order);

// Renames qubits position by position; amplitudes are untouched.
PureState relabel(const PureState& s, const Register& labels);
DensityMatrix relabel(const DensityMatrix& rho, const Register& labels);

// U on `targets` (U's first qubit is targets[0]), identity elsewhere.
PureState apply_unitary(const PureState& s, const UnitaryOp& u, const Register& targets);
DensityMatrix apply_unitary(const DensityMatrix& rho, const UnitaryOp& u, const Register& targets);

// rho -> sum_k (K_k (x) I) rho (K_k (x) I)^dagger.
DensityMatrix apply_channel(const DensityMatrix& rho, const QuantumChannel& channel, const Register& targets);
// Validates completeness of a raw Kraus list first (CompletenessError).
DensityMatrix apply_channel(const DensityMatrix& rho, std::span<const Matrix> kraus, const Register& targets);

// Reduced state on `keep`, in `keep`'s order. An empty `keep` yields the
// 1x1 matrix [1] over the empty register.
DensityMatrix partial_trace(const DensityMatrix& rho, const Register& keep);
DensityMatrix partial_trace(const PureState& psi, const Register& keep);

// <psi|rho|psi>. When both registers hold the same labels psi is first
// aligned to rho's order; otherwise the comparison is positional.
// Throws DimensionError on a size mismatch.
double fidelity(const DensityMatrix& rho, const PureState& psi);

// <a|b>, aligned or positional as in fidelity().
Complex inner_product(const PureState& a, const PureState& b);

// |<a|b>| >= 1 - tol.
bool equal_up_to_phase(const PureState& a, const PureState& b, double tol = tol::kPhase);
// Elementwise amplitude comparison (same register required).
bool approx_equal(const PureState& a, const PureState& b, double tol = tol::kInvariant);

// -sum lambda log2 lambda, in bits.
double von_neumann_entropy(const DensityMatrix& rho);
double purity(const DensityMatrix& rho);

// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

// max_ij |a_ij - b_ij|.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace wdist

#endif  // WDIST_QCORE_HPP
