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

#ifndef WDIST_MEASUREMENT_HPP
#define WDIST_MEASUREMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "wdist/state.hpp"

namespace wdist {

struct LabeledVector {
  std::string label;
  Vector vector;
};

/// Complete orthonormal basis of a k-qubit subsystem with labeled outcomes.
class MeasurementBasis {
 public:
  /// Requires exactly 2^k vectors, pairwise orthonormal within 1e-12 and
  /// uniquely labeled; throws InvariantError / DimensionError otherwise.
  MeasurementBasis(Register subsystem, std::vector<LabeledVector> vectors);

  const Register& subsystem() const noexcept { return subsystem_; }
  const std::vector<LabeledVector>& vectors() const noexcept { return vectors_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  const LabeledVector& at(const std::string& label) const;
  PureState state(const std::string& label) const;

 private:
  Register subsystem_;
  std::vector<LabeledVector> vectors_;
};

/// Extends `partial` (orthonormal, fewer than 2^k vectors) to a full basis
/// by Gram-Schmidt over computational basis vectors in ascending index
/// order, skipping residuals with norm below 1e-10. New vectors are
/// labeled `prefix0`, `prefix1`, ...
std::vector<LabeledVector> complete_basis(std::vector<LabeledVector> partial, std::size_t num_qubits,
                                          const std::string& prefix = "aux");

MeasurementBasis computational_basis(const Register& subsystem);

struct MeasurementRecord {
  std::string label;
  double probability = 0.0;
  /// Normalized state of the unmeasured qubits; empty when the outcome
  /// probability is below the 1e-12 floor.
  std::optional<DensityMatrix> post_state;
};

struct PureMeasurementRecord {
  std::string label;
  double probability = 0.0;
  std::optional<PureState> post_state;
};

/// Projective measurement of `basis.subsystem()`; one record per basis
/// vector, in basis order. Post-states live on the remaining qubits in
/// register order.
std::vector<MeasurementRecord> measure(const DensityMatrix& rho, const MeasurementBasis& basis);
std::vector<MeasurementRecord> measure(const PureState& psi, const MeasurementBasis& basis);
/// Same as measure(PureState), keeping post-states pure.
std::vector<PureMeasurementRecord> measure_pure(const PureState& psi, const MeasurementBasis& basis);

}  // namespace wdist

#endif  // WDIST_MEASUREMENT_HPP
