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

#ifndef WDIST_PROTOCOLS_HPP
#define WDIST_PROTOCOLS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wdist/entmetrics.hpp"
#include "wdist/noise.hpp"
#include "wdist/state.hpp"

namespace wdist {

/// One measurement outcome seen during a protocol run.
struct OutcomeEntry {
  int round = 1;  // hop index for repeater chains, 1 otherwise
  std::string label;
  double probability = 0.0;
  std::string correction;  // Pauli sequence, applied left to right
};

struct ProtocolResult {
  DensityMatrix final_state;
  /// Fidelity with W_mod placed on final_state's register.
  double fidelity = 0.0;
  TangleReport tangles;
  std::vector<OutcomeEntry> outcome_trace;
  /// Max elementwise distance to the closed-form Protocol-3 state.
  std::optional<double> deviation_from_analytic;
};

/// Pauli correction for one outcome. `sequence` lists Paulis in the order
/// they are applied, so "XZ" means X first, then Z (operator Z*X).
struct Correction {
  std::string outcome;
  std::string sequence;

  Matrix matrix() const;
};

/// Outcome -> single-qubit correction on one target qubit. Outcomes not in
/// the table (basis-completion vectors) get the identity.
class CorrectionTable {
 public:
  CorrectionTable(int target, std::vector<Correction> entries);

  int target() const noexcept { return target_; }
  const std::vector<Correction>& entries() const noexcept { return entries_; }
  const Correction& lookup(const std::string& outcome) const;
  DensityMatrix apply(const DensityMatrix& rho, const std::string& outcome) const;
  PureState apply(const PureState& psi, const std::string& outcome) const;

 private:
  int target_;
  std::vector<Correction> entries_;
  Correction identity_;
};

/// Bell-measurement corrections on the receiving qubit of the fresh pair:
/// Phi+ -> I, Phi- -> Z, Psi+ -> X, Psi- -> X then Z.
/// Verified on construction against a noiseless swap (InvariantError on failure).
CorrectionTable bsm_corrections(int target = 5);

/// {eta+-, zeta+-} corrections on qubit `target`:
/// eta+ -> I, eta- -> Z, zeta+ -> X, zeta- -> X then Z. Verified on construction.
CorrectionTable joint_corrections(int target = 6);

class OutcomePolicy {
 public:
  static OutcomePolicy average() { return OutcomePolicy(); }
  static OutcomePolicy postselect(std::string label) { return OutcomePolicy(std::move(label)); }

  bool averaging() const noexcept { return !label_.has_value(); }
  const std::string& label() const { return label_.value(); }
  std::string to_string() const { return averaging() ? "average" : "postselect:" + *label_; }

 private:
  OutcomePolicy() = default;
  explicit OutcomePolicy(std::string label) : label_(std::move(label)) {}
  std::optional<std::string> label_;
};

/// Direct transmission: per-qubit depolarizing on a three-qubit state.
ProtocolResult protocol1(std::span<const DepolarizingParam> ps, const PureState& state);
ProtocolResult protocol1(DepolarizingParam p, const PureState& state);
ProtocolResult protocol1(DepolarizingParam p);

enum class Protocol2Mode { Explicit, Effective };

/// Repeater-chain distribution of qubit 3. Hop k swaps the current holder
/// of qubit 3's role into a fresh Bell pair (2k+2, 2k+3); the result lives
/// on (1, 2, 2n+3). Qubits 1 and 2 each see one link event.
///
/// Explicit mode places the chain's events on the distributed line: link
/// noise on each pair's travelling half; memory noise on qubit 3 at the
/// central node and on both stored qubits at every repeater; BSM noise on
/// the measured memory qubit. Effective mode applies the composed noise to
/// qubit 3 of W_mod. The outcome policy only matters for explicit mode.
ProtocolResult protocol2(const ChainSpec& chain, Protocol2Mode mode = Protocol2Mode::Explicit,
                         const OutcomePolicy& policy = OutcomePolicy::average());

/// W_mod with noise p on qubits 1 and 2 and p_eff on qubit 3.
ProtocolResult protocol2_effective(DepolarizingParam p, DepolarizingParam p_eff);

enum class Protocol3Mode { Analytic, Explicit };

/// Two W_mod copies on (1,2,3) and (4,5,6); qubits 3,4,5 are depolarized
/// with p_eff, jointly measured in the {eta+-, zeta+-} basis, and qubit 6
/// corrected. Analytic mode returns
///   beta^3 |W><W| + (1 - beta^3) I/8,  beta = 1 - 3 p_eff / 4
/// on (1,2,6). Explicit mode also reports its distance to that state.
ProtocolResult protocol3(DepolarizingParam p_eff, Protocol3Mode mode = Protocol3Mode::Analytic,
                         const OutcomePolicy& policy = OutcomePolicy::average());

/// Seeded random single-qubit CPTP map with `kraus_count` operators,
/// drawn from a Haar-like random isometry.
QuantumChannel random_qubit_channel(std::uint64_t seed, std::size_t kraus_count = 4);

/// Max elementwise deviation between "channel on qubit 3, then an ideal
/// outcome-averaged swap onto qubit 5" and "ideal swap, then channel on
/// qubit 5", over `trials` seeded random W-class inputs.
double verify_noise_commutation(const QuantumChannel& channel, int trials, std::uint64_t seed);

struct BranchFidelity {
  std::string label;
  double probability = 0.0;
  std::string correction;
  double fidelity = 0.0;
};

struct TeleportResult {
  double min_fidelity = 1.0;
  std::vector<BranchFidelity> branches;
};

/// Teleports a one-qubit state through W_mod: qubits 1,2 with the sender,
/// qubit 3 with the receiver. Reports every outcome with nonzero probability.
TeleportResult teleport_wmod(const PureState& input);

struct DenseCodingResult {
  std::string decoded;
  double probability = 0.0;
};

/// Encodes two bits with {I, Z, X, X*Z} on qubit 1 of eta+ and decodes by
/// measuring in the {eta+-, xi+-} basis. Throws DomainError on bad input.
DenseCodingResult superdense_wmod(std::string_view bits);

}  // namespace wdist

#endif  // WDIST_PROTOCOLS_HPP
