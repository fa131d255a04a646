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

#include "wdist/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "kernels.hpp"
#include "wdist/errors.hpp"
#include "wdist/qcore.hpp"

namespace wdist {

MeasurementBasis::MeasurementBasis(Register subsystem, std::vector<LabeledVector> vectors)
    : subsystem_(std::move(subsystem)), vectors_(std::move(vectors)) {
  const auto d = static_cast<Eigen::Index>(subsystem_.dimension());
  if (vectors_.size() != static_cast<std::size_t>(d)) {
    throw DimensionError("a basis of " + subsystem_.to_string() + " needs " + std::to_string(d) + " vectors, got " +
                         std::to_string(vectors_.size()));
  }
  std::set<std::string> labels;
  for (const auto& lv : vectors_) {
    if (lv.vector.size() != d) throw DimensionError("basis vector '" + lv.label + "' has the wrong length");
    if (!labels.insert(lv.label).second) throw InvariantError("duplicate basis label '" + lv.label + "'");
  }
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (std::abs(vectors_[i].vector.norm() - 1.0) > tol::kInvariant) {
      throw InvariantError("basis vector '" + vectors_[i].label + "' is not normalized");
    }
    for (std::size_t j = i + 1; j < vectors_.size(); ++j) {
      if (std::abs(vectors_[i].vector.dot(vectors_[j].vector)) > tol::kInvariant) {
        throw InvariantError("basis vectors '" + vectors_[i].label + "' and '" + vectors_[j].label +
                             "' are not orthogonal");
      }
    }
  }
}

const LabeledVector& MeasurementBasis::at(const std::string& label) const {
  auto it = std::find_if(vectors_.begin(), vectors_.end(), [&](const LabeledVector& v) { return v.label == label; });
  if (it == vectors_.end()) throw DomainError("no basis vector labeled '" + label + "'");
  return *it;
}

PureState MeasurementBasis::state(const std::string& label) const { return PureState(subsystem_, at(label).vector); }

std::vector<LabeledVector> complete_basis(std::vector<LabeledVector> partial, std::size_t num_qubits,
                                          const std::string& prefix) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
  std::size_t added = 0;
  for (Eigen::Index e = 0; e < d && static_cast<Eigen::Index>(partial.size()) < d; ++e) {
    Vector r = Vector::Zero(d);
    r(e) = 1.0;
    // Two Gram-Schmidt sweeps keep the residual orthogonal to 1e-16.
    for (int sweep = 0; sweep < 2; ++sweep) {
      for (const auto& v : partial) r -= v.vector.dot(r) * v.vector;
    }
    const double n = r.norm();
    if (n < 1e-10) continue;
    partial.push_back({prefix + std::to_string(added++), r / n});
  }
  if (static_cast<Eigen::Index>(partial.size()) != d) {
    throw InvariantError("basis completion failed: input vectors are not independent");
  }
  return partial;
}

MeasurementBasis computational_basis(const Register& subsystem) {
  const std::size_t k = subsystem.size();
  const auto d = static_cast<Eigen::Index>(subsystem.dimension());
  std::vector<LabeledVector> vs;
  for (Eigen::Index i = 0; i < d; ++i) {
    std::string label;
    for (std::size_t q = 0; q < k; ++q) label += bit_at(static_cast<std::size_t>(i), q, k) ? '1' : '0';
    Vector v = Vector::Zero(d);
    v(i) = 1.0;
    vs.push_back({label, v});
  }
  return MeasurementBasis(subsystem, std::move(vs));
}

namespace {

struct Projection {
  Register rest;
  SubsystemSplit split;
};

Projection projection_for(const Register& reg, const MeasurementBasis& basis) {
  return Projection{reg.complement(basis.subsystem()), SubsystemSplit(reg.size(), reg.positions(basis.subsystem()))};
}

// Rows: remaining qubits; columns: full register. Contracts the measured
// qubits with <v|.
Matrix contraction(const SubsystemSplit& split, const Vector& v, Eigen::Index full_dim) {
  const auto dr = static_cast<Eigen::Index>(split.rest_dimension());
  Matrix c = Matrix::Zero(dr, full_dim);
  for (std::size_t r = 0; r < split.rest_dimension(); ++r) {
    for (std::size_t s = 0; s < split.selected_dimension(); ++s) {
      c(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(split.full_index(s, r))) =
          std::conj(v(static_cast<Eigen::Index>(s)));
    }
  }
  return c;
}

}  // namespace

std::vector<MeasurementRecord> measure(const DensityMatrix& rho, const MeasurementBasis& basis) {
  const auto proj = projection_for(rho.qubits(), basis);
  std::vector<MeasurementRecord> out;
  out.reserve(basis.size());
  for (const auto& lv : basis.vectors()) {
    const Matrix c = contraction(proj.split, lv.vector, rho.matrix().rows());
    const Matrix sigma = c * rho.matrix() * c.adjoint();
    const double prob = std::clamp(sigma.trace().real(), 0.0, 1.0);
    MeasurementRecord rec{lv.label, prob, std::nullopt};
    if (prob > tol::kProbabilityFloor) rec.post_state.emplace(proj.rest, detail::hermitize(sigma / prob));
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<PureMeasurementRecord> measure_pure(const PureState& psi, const MeasurementBasis& basis) {
  const auto proj = projection_for(psi.qubits(), basis);
  std::vector<PureMeasurementRecord> out;
  out.reserve(basis.size());
  for (const auto& lv : basis.vectors()) {
    const Matrix c = contraction(proj.split, lv.vector, psi.amplitudes().size());
    const Vector phi = c * psi.amplitudes();
    const double prob = std::clamp(phi.squaredNorm(), 0.0, 1.0);
    PureMeasurementRecord rec{lv.label, prob, std::nullopt};
    if (prob > tol::kProbabilityFloor) rec.post_state.emplace(PureState::normalized(proj.rest, phi));
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<MeasurementRecord> measure(const PureState& psi, const MeasurementBasis& basis) {
  std::vector<MeasurementRecord> out;
  for (auto& r : measure_pure(psi, basis)) {
    MeasurementRecord rec{r.label, r.probability, std::nullopt};
    if (r.post_state) rec.post_state.emplace(DensityMatrix::from_pure(*r.post_state));
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace wdist
