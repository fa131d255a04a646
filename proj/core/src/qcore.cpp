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

#include "wdist/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "kernels.hpp"

namespace wdist {

// ---------------------------------------------------------------------------
// Registers
// ---------------------------------------------------------------------------

QubitLabel::QubitLabel(int index) : index_(index) {
  if (index < 1) {
    throw LabelError("qubit labels are 1-based; got " + std::to_string(index));
  }
}

namespace {

void validate_labels(const std::vector<QubitLabel>& labels) {
  if (labels.size() > kMaxQubits) {
    throw DimensionError("register of " + std::to_string(labels.size()) + " qubits exceeds the " +
                         std::to_string(kMaxQubits) + "-qubit cap");
  }
  std::set<QubitLabel> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw LabelError("duplicate qubit label " + std::to_string(l.index()));
    }
  }
}

}  // namespace

Register::Register(std::initializer_list<int> labels) {
  labels_.reserve(labels.size());
  for (int l : labels) labels_.emplace_back(l);
  validate_labels(labels_);
}

Register::Register(std::vector<QubitLabel> labels) : labels_(std::move(labels)) { validate_labels(labels_); }

bool Register::contains(QubitLabel label) const noexcept {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t Register::position(QubitLabel label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw LabelError("qubit " + std::to_string(label.index()) + " is not in register " + to_string());
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> Register::positions(const Register& sub) const {
  std::vector<std::size_t> out;
  out.reserve(sub.size());
  for (const auto& l : sub) out.push_back(position(l));
  return out;
}

Register Register::complement(const Register& sub) const {
  std::vector<QubitLabel> rest;
  for (const auto& l : labels_) {
    if (!sub.contains(l)) rest.push_back(l);
  }
  return Register(std::move(rest));
}

bool Register::same_labels(const Register& other) const {
  if (other.size() != size()) return false;
  return std::all_of(other.begin(), other.end(), [&](const QubitLabel& l) { return contains(l); });
}

Register Register::concat(const Register& other) const {
  std::vector<QubitLabel> all = labels_;
  all.insert(all.end(), other.begin(), other.end());
  return Register(std::move(all));
}

std::string Register::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) os << ',';
    os << labels_[i].index();
  }
  os << ')';
  return os.str();
}

SubsystemSplit::SubsystemSplit(std::size_t num_qubits, std::vector<std::size_t> selected_positions) {
  const std::size_t k = selected_positions.size();
  std::vector<bool> is_selected(num_qubits, false);
  for (auto p : selected_positions) is_selected[p] = true;
  std::vector<std::size_t> rest_positions;
  for (std::size_t p = 0; p < num_qubits; ++p) {
    if (!is_selected[p]) rest_positions.push_back(p);
  }
  auto spread = [num_qubits](std::size_t sub_index, const std::vector<std::size_t>& positions) {
    std::size_t full = 0;
    const std::size_t m = positions.size();
    for (std::size_t j = 0; j < m; ++j) {
      full |= bit_at(sub_index, j, m) << (num_qubits - 1 - positions[j]);
    }
    return full;
  };
  selected_.resize(std::size_t{1} << k);
  for (std::size_t s = 0; s < selected_.size(); ++s) selected_[s] = spread(s, selected_positions);
  rest_.resize(std::size_t{1} << rest_positions.size());
  for (std::size_t r = 0; r < rest_.size(); ++r) rest_[r] = spread(r, rest_positions);
}

// ---------------------------------------------------------------------------
// Kernels
// ---------------------------------------------------------------------------

namespace detail {

Matrix apply_left(const Matrix& m, const Matrix& op, const std::vector<std::size_t>& positions,
                  std::size_t num_qubits) {
  SubsystemSplit split(num_qubits, positions);
  const auto d = static_cast<Eigen::Index>(split.selected_dimension());
  Matrix out(m.rows(), m.cols());
  Matrix block(d, m.cols());
  for (std::size_t r = 0; r < split.rest_dimension(); ++r) {
    for (Eigen::Index s = 0; s < d; ++s) {
      block.row(s) = m.row(static_cast<Eigen::Index>(split.full_index(static_cast<std::size_t>(s), r)));
    }
    const Matrix mixed = op * block;
    for (Eigen::Index s = 0; s < d; ++s) {
      out.row(static_cast<Eigen::Index>(split.full_index(static_cast<std::size_t>(s), r))) = mixed.row(s);
    }
  }
  return out;
}

Matrix conjugate(const Matrix& rho, const Matrix& op, const std::vector<std::size_t>& positions,
                 std::size_t num_qubits) {
  const Matrix left = apply_left(rho, op, positions, num_qubits);
  return apply_left(left.adjoint(), op, positions, num_qubits).adjoint();
}

std::vector<std::size_t> permutation_map(const Register& from, const Register& to) {
  if (!from.same_labels(to)) {
    throw LabelError("new order " + to.to_string() + " is not a permutation of " + from.to_string());
  }
  const std::size_t n = from.size();
  std::vector<std::size_t> source_pos(n);
  for (std::size_t q = 0; q < n; ++q) source_pos[q] = from.position(to[q]);
  std::vector<std::size_t> map(from.dimension());
  for (std::size_t j = 0; j < map.size(); ++j) {
    std::size_t i = 0;
    for (std::size_t q = 0; q < n; ++q) {
      i |= bit_at(j, q, n) << (n - 1 - source_pos[q]);
    }
    map[j] = i;
  }
  return map;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// States and operators
// ---------------------------------------------------------------------------

namespace {

std::size_t parse_bits(std::string_view bits, std::size_t n) {
  if (bits.size() != n) {
    throw DimensionError("bit string '" + std::string(bits) + "' does not match a " + std::to_string(n) +
                         "-qubit register");
  }
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("bit strings may only contain 0 and 1");
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return index;
}

double hermiticity_defect(const Matrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t log2_dim(Eigen::Index n) {
  std::size_t k = 0;
  while ((Eigen::Index{1} << k) < n) ++k;
  return k;
}

}  // namespace

PureState::PureState(Register reg, Vector amplitudes) : reg_(std::move(reg)), amps_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amps_.size()) != reg_.dimension()) {
    throw DimensionError("amplitude vector of length " + std::to_string(amps_.size()) + " does not match register " +
                         reg_.to_string());
  }
  if (std::abs(amps_.norm() - 1.0) > tol::kInvariant) {
    throw InvariantError("state is not normalized (norm " + std::to_string(amps_.norm()) + ")");
  }
}

PureState PureState::normalized(Register reg, Vector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 1e-300)) throw InvariantError("cannot normalize the zero vector");
  return PureState(std::move(reg), amplitudes / n);
}

PureState PureState::basis(Register reg, std::string_view bits) {
  const std::size_t index = parse_bits(bits, reg.size());
  Vector v = Vector::Zero(static_cast<Eigen::Index>(reg.dimension()));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(reg), std::move(v));
}

Complex PureState::amplitude(std::string_view bits) const {
  return amps_(static_cast<Eigen::Index>(parse_bits(bits, reg_.size())));
}

bool satisfies_density_invariants(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  if (hermiticity_defect(m) > tol::kInvariant) return false;
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol::kInvariant) return false;
  return hermitian_eigenvalues(m).minCoeff() >= -tol::kEigenClip;
}

DensityMatrix::DensityMatrix(Register reg, Matrix matrix) : reg_(std::move(reg)), rho_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(reg_.dimension());
  if (rho_.rows() != d || rho_.cols() != d) {
    throw DimensionError("density matrix shape does not match register " + reg_.to_string());
  }
  const double herm = hermiticity_defect(rho_);
  if (herm > tol::kInvariant) {
    throw InvariantError("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::kInvariant) {
    throw InvariantError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  const double min_eig = hermitian_eigenvalues(rho_).minCoeff();
  if (min_eig < -tol::kEigenClip) {
    throw InvariantError("density matrix has negative eigenvalue " + std::to_string(min_eig));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const Vector& a = psi.amplitudes();
  return DensityMatrix(psi.qubits(), detail::hermitize(a * a.adjoint()));
}

DensityMatrix DensityMatrix::maximally_mixed(Register reg) {
  const auto d = static_cast<Eigen::Index>(reg.dimension());
  return DensityMatrix(std::move(reg), Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix mix(double alpha, const DensityMatrix& a, const DensityMatrix& b) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("mixing weight must lie in [0, 1]");
  if (a.qubits() != b.qubits()) throw DimensionError("cannot mix states over different registers");
  return DensityMatrix(a.qubits(), alpha * a.matrix() + (1.0 - alpha) * b.matrix());
}

UnitaryOp::UnitaryOp(Matrix u, std::string name) : u_(std::move(u)), arity_(0), name_(std::move(name)) {
  if (u_.rows() != u_.cols() || !is_power_of_two(u_.rows())) {
    throw DimensionError("unitary must be square with a power-of-two dimension");
  }
  arity_ = log2_dim(u_.rows());
  const double defect = (u_.adjoint() * u_ - Matrix::Identity(u_.rows(), u_.cols())).cwiseAbs().maxCoeff();
  if (defect > tol::kInvariant) {
    throw InvariantError("matrix " + name_ + " is not unitary (defect " + std::to_string(defect) + ")");
  }
}

UnitaryOp UnitaryOp::adjoint() const { return UnitaryOp(u_.adjoint(), name_.empty() ? name_ : name_ + "^dag"); }

QuantumChannel::QuantumChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)), arity_(0) {
  if (kraus_.empty()) throw DimensionError("a channel needs at least one Kraus operator");
  const auto d = kraus_.front().rows();
  if (!is_power_of_two(d)) throw DimensionError("Kraus operators must act on whole qubits");
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& k : kraus_) {
    if (k.rows() != d || k.cols() != d) throw DimensionError("Kraus operators have inconsistent shapes");
    sum += k.adjoint() * k;
  }
  const double defect = (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > tol::kCompleteness) {
    throw CompletenessError("Kraus operators are not complete (defect " + std::to_string(defect) + ")");
  }
  arity_ = log2_dim(d);
}

QuantumChannel QuantumChannel::identity(std::size_t arity) {
  const auto d = Eigen::Index{1} << arity;
  return QuantumChannel({Matrix::Identity(d, d)});
}

QuantumChannel QuantumChannel::from_unitary(const UnitaryOp& u) { return QuantumChannel({u.matrix()}); }

namespace pauli {
Matrix i() { return Matrix::Identity(2, 2); }
Matrix x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
Matrix y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
Matrix z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

PureState tensor(const PureState& a, const PureState& b) {
  Register reg = a.qubits().concat(b.qubits());
  const Vector& x = a.amplitudes();
  const Vector& y = b.amplitudes();
  Vector out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
  return PureState::normalized(std::move(reg), std::move(out));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Register reg = a.qubits().concat(b.qubits());
  const Matrix& x = a.matrix();
  const Matrix& y = b.matrix();
  const auto dy = y.rows();
  Matrix out(x.rows() * dy, x.cols() * dy);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) out.block(i * dy, j * dy, dy, dy) = x(i, j) * y;
  }
  return DensityMatrix(std::move(reg), std::move(out));
}

PureState permute_qubits(const PureState& s, const Register& new_order) {
  const auto map = detail::permutation_map(s.qubits(), new_order);
  Vector out(s.amplitudes().size());
  for (std::size_t j = 0; j < map.size(); ++j) {
    out(static_cast<Eigen::Index>(j)) = s.amplitudes()(static_cast<Eigen::Index>(map[j]));
  }
  return PureState(new_order, std::move(out));
}

DensityMatrix permute_qubits(const DensityMatrix& rho, const Register& new_order) {
  const auto map = detail::permutation_map(rho.qubits(), new_order);
  const auto d = static_cast<Eigen::Index>(map.size());
  Matrix out(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      out(i, j) = rho.matrix()(static_cast<Eigen::Index>(map[static_cast<std::size_t>(i)]),
                               static_cast<Eigen::Index>(map[static_cast<std::size_t>(j)]));
    }
  }
  return DensityMatrix(new_order, std::move(out));
}

PureState relabel(const PureState& s, const Register& labels) {
  if (labels.size() != s.num_qubits()) throw DimensionError("relabel needs one label per qubit");
  return PureState(labels, s.amplitudes());
}

DensityMatrix relabel(const DensityMatrix& rho, const Register& labels) {
  if (labels.size() != rho.num_qubits()) throw DimensionError("relabel needs one label per qubit");
  return DensityMatrix(labels, rho.matrix());
}

namespace {

std::vector<std::size_t> target_positions(const Register& reg, const Register& targets, std::size_t arity) {
  if (targets.size() != arity) {
    throw DimensionError("operator acts on " + std::to_string(arity) + " qubits but " +
                         std::to_string(targets.size()) + " targets were given");
  }
  return reg.positions(targets);
}

}  // namespace

PureState apply_unitary(const PureState& s, const UnitaryOp& u, const Register& targets) {
  const auto pos = target_positions(s.qubits(), targets, u.arity());
  Matrix col = s.amplitudes();
  Matrix out = detail::apply_left(col, u.matrix(), pos, s.num_qubits());
  return PureState(s.qubits(), out.col(0));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const UnitaryOp& u, const Register& targets) {
  const auto pos = target_positions(rho.qubits(), targets, u.arity());
  Matrix out = detail::conjugate(rho.matrix(), u.matrix(), pos, rho.num_qubits());
  return DensityMatrix(rho.qubits(), detail::hermitize(out));
}

DensityMatrix apply_channel(const DensityMatrix& rho, const QuantumChannel& channel, const Register& targets) {
  const auto pos = target_positions(rho.qubits(), targets, channel.arity());
  Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const auto& k : channel.kraus()) out += detail::conjugate(rho.matrix(), k, pos, rho.num_qubits());
  return DensityMatrix(rho.qubits(), detail::hermitize(out));
}

DensityMatrix apply_channel(const DensityMatrix& rho, std::span<const Matrix> kraus, const Register& targets) {
  return apply_channel(rho, QuantumChannel(std::vector<Matrix>(kraus.begin(), kraus.end())), targets);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Register& keep) {
  SubsystemSplit split(rho.num_qubits(), rho.qubits().positions(keep));
  const auto dk = static_cast<Eigen::Index>(split.selected_dimension());
  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& m = rho.matrix();
  for (Eigen::Index a = 0; a < dk; ++a) {
    for (Eigen::Index b = 0; b < dk; ++b) {
      Complex acc = 0.0;
      for (std::size_t r = 0; r < split.rest_dimension(); ++r) {
        acc += m(static_cast<Eigen::Index>(split.full_index(static_cast<std::size_t>(a), r)),
                 static_cast<Eigen::Index>(split.full_index(static_cast<std::size_t>(b), r)));
      }
      out(a, b) = acc;
    }
  }
  return DensityMatrix(keep, detail::hermitize(out));
}

DensityMatrix partial_trace(const PureState& psi, const Register& keep) {
  return partial_trace(DensityMatrix::from_pure(psi), keep);
}

namespace {

// psi expressed in `reg`'s order when the label sets agree.
Vector aligned_amplitudes(const Register& reg, const PureState& psi) {
  if (psi.num_qubits() != reg.size()) {
    throw DimensionError("register sizes differ: " + reg.to_string() + " vs " + psi.qubits().to_string());
  }
  if (psi.qubits() != reg && psi.qubits().same_labels(reg)) return permute_qubits(psi, reg).amplitudes();
  return psi.amplitudes();
}

}  // namespace

double fidelity(const DensityMatrix& rho, const PureState& psi) {
  const Vector v = aligned_amplitudes(rho.qubits(), psi);
  const double f = (v.adjoint() * rho.matrix() * v)(0, 0).real();
  return std::clamp(f, 0.0, 1.0);
}

Complex inner_product(const PureState& a, const PureState& b) {
  return a.amplitudes().dot(aligned_amplitudes(a.qubits(), b));
}

bool equal_up_to_phase(const PureState& a, const PureState& b, double tol) {
  return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

bool approx_equal(const PureState& a, const PureState& b, double tol) {
  if (a.qubits() != b.qubits()) return false;
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff() <= tol;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(rho.matrix())) {
    if (lambda > tol::kEntropyFloor) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

double purity(const DensityMatrix& rho) { return rho.matrix().cwiseAbs2().sum(); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix shapes differ");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace wdist
