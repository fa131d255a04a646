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

#include "wdist/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "wdist/errors.hpp"
#include "wdist/qcore.hpp"
#include "wdist/wfamily.hpp"

namespace wdist {

namespace {

Matrix pauli_by_name(char c) {
  switch (c) {
    case 'I': return pauli::i();
    case 'X': return pauli::x();
    case 'Y': return pauli::y();
    case 'Z': return pauli::z();
    default: throw DomainError(std::string("unknown Pauli '") + c + "'");
  }
}

ProtocolResult make_result(DensityMatrix rho, std::vector<OutcomeEntry> trace = {}) {
  const PureState target = relabel(w_mod(), rho.qubits());
  ProtocolResult r{std::move(rho), 0.0, {}, std::move(trace), std::nullopt};
  r.fidelity = fidelity(r.final_state, target);
  r.tangles = tangle_report(r.final_state);
  return r;
}

struct NoiseEvent {
  int label;
  QuantumChannel channel;
};

// Measures `basis` on rho, corrects each branch and either averages the
// branches or keeps the requested one.
DensityMatrix resolve_outcomes(const DensityMatrix& rho, const MeasurementBasis& basis, const CorrectionTable& table,
                               const OutcomePolicy& policy, int round, std::vector<OutcomeEntry>* trace) {
  const auto records = measure(rho, basis);
  std::optional<Register> reg;
  Matrix sum;
  double kept = 0.0;
  for (const auto& rec : records) {
    const Correction& corr = table.lookup(rec.label);
    if (trace != nullptr) trace->push_back({round, rec.label, rec.probability, corr.sequence});
    if (!rec.post_state) continue;
    if (!policy.averaging()) {
      if (rec.label != policy.label()) continue;
      return table.apply(*rec.post_state, rec.label);
    }
    const DensityMatrix fixed = table.apply(*rec.post_state, rec.label);
    if (!reg) {
      reg = fixed.qubits();
      sum = Matrix::Zero(fixed.dimension(), fixed.dimension());
    }
    sum += rec.probability * fixed.matrix();
    kept += rec.probability;
  }
  if (!policy.averaging()) {
    throw DomainError("outcome '" + policy.label() + "' has probability below the floor or is not in the basis");
  }
  return DensityMatrix(*reg, sum / kept);
}

// One entanglement swap: holder's role moves onto b through the pair (a,b).
DensityMatrix swap_hop(const DensityMatrix& rho, int holder, int a, int b, const std::vector<NoiseEvent>& events,
                       const OutcomePolicy& policy, int round, std::vector<OutcomeEntry>* trace) {
  DensityMatrix state = tensor(rho, DensityMatrix::from_pure(bell(BellKind::PhiPlus, Register{a, b})));
  for (const auto& ev : events) state = apply_channel(state, ev.channel, Register{ev.label});
  return resolve_outcomes(state, bell_basis(Register{holder, a}), bsm_corrections(b), policy, round, trace);
}

bool corrections_reach_target(const PureState& total, const MeasurementBasis& basis, const CorrectionTable& table,
                              const std::vector<std::string>& used, const PureState& target) {
  for (const auto& rec : measure_pure(total, basis)) {
    const bool is_used = std::find(used.begin(), used.end(), rec.label) != used.end();
    if (!is_used) {
      if (rec.probability > tol::kProbabilityFloor) return false;
      continue;
    }
    if (!rec.post_state || std::abs(rec.probability - 0.25) > tol::kInvariant) return false;
    if (!equal_up_to_phase(table.apply(*rec.post_state, rec.label), target)) return false;
  }
  return true;
}

CorrectionTable make_bsm_table(int target) {
  return CorrectionTable(target, {{"Phi+", "I"}, {"Phi-", "Z"}, {"Psi+", "X"}, {"Psi-", "XZ"}});
}

CorrectionTable make_joint_table(int target) {
  return CorrectionTable(target, {{"eta+", "I"}, {"eta-", "Z"}, {"zeta+", "X"}, {"zeta-", "XZ"}});
}

}  // namespace

Matrix Correction::matrix() const {
  Matrix op = pauli::i();
  for (char c : sequence) op = pauli_by_name(c) * op;
  return op;
}

CorrectionTable::CorrectionTable(int target, std::vector<Correction> entries)
    : target_(target), entries_(std::move(entries)), identity_{"", "I"} {
  QubitLabel check(target);
  (void)check;
  for (const auto& e : entries_) (void)e.matrix();
}

const Correction& CorrectionTable::lookup(const std::string& outcome) const {
  for (const auto& e : entries_) {
    if (e.outcome == outcome) return e;
  }
  return identity_;
}

DensityMatrix CorrectionTable::apply(const DensityMatrix& rho, const std::string& outcome) const {
  const Correction& c = lookup(outcome);
  if (c.sequence == "I") return rho;
  return apply_unitary(rho, UnitaryOp(c.matrix(), c.sequence), Register{target_});
}

PureState CorrectionTable::apply(const PureState& psi, const std::string& outcome) const {
  const Correction& c = lookup(outcome);
  if (c.sequence == "I") return psi;
  return apply_unitary(psi, UnitaryOp(c.matrix(), c.sequence), Register{target_});
}

CorrectionTable bsm_corrections(int target) {
  static const bool verified = [] {
    const PureState total = tensor(w_mod(), bell(BellKind::PhiPlus, Register{4, 5}));
    return corrections_reach_target(total, bell_basis(Register{3, 4}), make_bsm_table(5),
                                    {"Phi+", "Phi-", "Psi+", "Psi-"}, w_mod(Register{1, 2, 5}));
  }();
  if (!verified) throw InvariantError("Bell-measurement correction table does not restore W_mod");
  return make_bsm_table(target);
}

CorrectionTable joint_corrections(int target) {
  static const bool verified = [] {
    const PureState total = tensor(w_mod(), w_mod(Register{4, 5, 6}));
    return corrections_reach_target(total, basis_eta_zeta(Register{3, 4, 5}), make_joint_table(6),
                                    {"eta+", "eta-", "zeta+", "zeta-"}, w_mod(Register{1, 2, 6}));
  }();
  if (!verified) throw InvariantError("joint-measurement correction table does not restore W_mod");
  return make_joint_table(target);
}

ProtocolResult protocol1(std::span<const DepolarizingParam> ps, const PureState& state) {
  if (state.num_qubits() != 3) throw DimensionError("protocol1 distributes a three-qubit state");
  const DensityMatrix rho = depolarize_all(DensityMatrix::from_pure(state), ps);
  ProtocolResult r{rho, fidelity(rho, state), tangle_report(rho), {}, std::nullopt};
  return r;
}

ProtocolResult protocol1(DepolarizingParam p, const PureState& state) {
  const std::vector<DepolarizingParam> ps(3, p);
  return protocol1(ps, state);
}

ProtocolResult protocol1(DepolarizingParam p) { return protocol1(p, w_mod()); }

ProtocolResult protocol2(const ChainSpec& chain, Protocol2Mode mode, const OutcomePolicy& policy) {
  chain.validate();
  const int final_label = 2 * chain.hops + 3;
  if (mode == Protocol2Mode::Effective) {
    DensityMatrix rho = DensityMatrix::from_pure(w_mod());
    rho = depolarize(rho, chain.link, 1);
    rho = depolarize(rho, chain.link, 2);
    rho = depolarize(rho, chain_effective_noise(chain), 3);
    return make_result(relabel(rho, Register{1, 2, final_label}));
  }

  DensityMatrix rho = DensityMatrix::from_pure(w_mod());
  rho = depolarize(rho, chain.link, 1);
  rho = depolarize(rho, chain.link, 2);
  const QuantumChannel link = depolarizing_channel(chain.link);
  const QuantumChannel memory = depolarizing_channel(chain.memory);
  const QuantumChannel bsm = depolarizing_channel(chain.bsm);
  std::vector<OutcomeEntry> trace;
  int holder = 3;
  for (int k = 1; k <= chain.hops; ++k) {
    const int a = 2 * k + 2;
    const int b = 2 * k + 3;
    std::vector<NoiseEvent> events{{b, link}, {holder, memory}};
    if (k > 1) events.push_back({a, memory});
    events.push_back({holder, bsm});
    rho = swap_hop(rho, holder, a, b, events, policy, k, &trace);
    holder = b;
  }
  return make_result(std::move(rho), std::move(trace));
}

ProtocolResult protocol2_effective(DepolarizingParam p, DepolarizingParam p_eff) {
  DensityMatrix rho = DensityMatrix::from_pure(w_mod());
  rho = depolarize(rho, p, 1);
  rho = depolarize(rho, p, 2);
  rho = depolarize(rho, p_eff, 3);
  return make_result(std::move(rho));
}

namespace {

DensityMatrix protocol3_closed_form(DepolarizingParam p_eff) {
  const double beta = 1.0 - 0.75 * p_eff.value();
  const double b3 = beta * beta * beta;
  const Register reg{1, 2, 6};
  return mix(b3, DensityMatrix::from_pure(w_mod(reg)), DensityMatrix::maximally_mixed(reg));
}

}  // namespace

ProtocolResult protocol3(DepolarizingParam p_eff, Protocol3Mode mode, const OutcomePolicy& policy) {
  const DensityMatrix analytic = protocol3_closed_form(p_eff);
  if (mode == Protocol3Mode::Analytic) return make_result(analytic);

  DensityMatrix rho = DensityMatrix::from_pure(tensor(w_mod(), w_mod(Register{4, 5, 6})));
  for (int q : {3, 4, 5}) rho = depolarize(rho, p_eff, q);
  std::vector<OutcomeEntry> trace;
  DensityMatrix out = resolve_outcomes(rho, basis_eta_zeta(Register{3, 4, 5}), joint_corrections(6), policy, 1, &trace);
  ProtocolResult r = make_result(std::move(out), std::move(trace));
  r.deviation_from_analytic = max_abs_diff(r.final_state.matrix(), analytic.matrix());
  return r;
}

QuantumChannel random_qubit_channel(std::uint64_t seed, std::size_t kraus_count) {
  if (kraus_count < 1 || kraus_count > 4) throw DomainError("a qubit channel needs 1 to 4 Kraus operators");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Eigen::Index rows = static_cast<Eigen::Index>(2 * kraus_count);
  Matrix g(rows, 2);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix v = qr.householderQ() * Matrix::Identity(rows, 2);
  std::vector<Matrix> kraus;
  for (std::size_t k = 0; k < kraus_count; ++k) kraus.push_back(v.block(static_cast<Eigen::Index>(2 * k), 0, 2, 2));
  return QuantumChannel(std::move(kraus));
}

double verify_noise_commutation(const QuantumChannel& channel, int trials, std::uint64_t seed) {
  if (channel.arity() != 1) throw DimensionError("noise commutation is checked for single-qubit channels");
  if (trials < 1) throw DomainError("trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const OutcomePolicy avg = OutcomePolicy::average();
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    Vector amps = Vector::Zero(8);
    for (int idx : {0b100, 0b010, 0b001}) amps(idx) = Complex(normal(rng), normal(rng));
    const DensityMatrix input = DensityMatrix::from_pure(PureState::normalized(Register{1, 2, 3}, amps));

    const DensityMatrix noisy_first = apply_channel(input, channel, Register{3});
    const DensityMatrix path_a = swap_hop(noisy_first, 3, 4, 5, {}, avg, 1, nullptr);
    const DensityMatrix swapped = swap_hop(input, 3, 4, 5, {}, avg, 1, nullptr);
    const DensityMatrix path_b = apply_channel(swapped, channel, Register{5});
    worst = std::max(worst, max_abs_diff(path_a.matrix(), path_b.matrix()));
  }
  return worst;
}

TeleportResult teleport_wmod(const PureState& input) {
  if (input.num_qubits() != 1) throw DimensionError("teleport_wmod expects a one-qubit input");
  const PureState in4 = relabel(input, Register{4});
  const PureState total = tensor(w_mod(), in4);
  const CorrectionTable table(3, {{"T0+", "I"}, {"T0-", "Z"}, {"T1+", "X"}, {"T1-", "XZ"}});
  TeleportResult result;
  for (const auto& rec : measure_pure(total, teleport_basis(Register{4, 1, 2}))) {
    if (!rec.post_state) continue;
    const PureState out = table.apply(*rec.post_state, rec.label);
    const double f = std::norm(inner_product(input, out));
    result.branches.push_back({rec.label, rec.probability, table.lookup(rec.label).sequence, f});
    result.min_fidelity = std::min(result.min_fidelity, f);
  }
  return result;
}

DenseCodingResult superdense_wmod(std::string_view bits) {
  static const std::pair<std::string_view, std::string_view> kEncode[] = {
      {"00", "I"}, {"01", "Z"}, {"10", "X"}, {"11", "ZX"}};
  static const std::pair<std::string_view, std::string_view> kDecode[] = {
      {"eta+", "00"}, {"eta-", "01"}, {"xi+", "10"}, {"xi-", "11"}};
  std::string_view sequence;
  for (const auto& [msg, seq] : kEncode) {
    if (msg == bits) sequence = seq;
  }
  if (sequence.empty()) throw DomainError("message must be one of 00, 01, 10, 11; got '" + std::string(bits) + "'");

  const CorrectionTable encoder(1, {{"msg", std::string(sequence)}});
  const PureState encoded = encoder.apply(eta_plus(), "msg");
  const auto records = measure_pure(encoded, basis_eta_xi());
  const auto best = std::max_element(records.begin(), records.end(),
                                     [](const auto& x, const auto& y) { return x.probability < y.probability; });
  DenseCodingResult result{"??", best->probability};
  for (const auto& [label, msg] : kDecode) {
    if (label == best->label) result.decoded = std::string(msg);
  }
  return result;
}

}  // namespace wdist
