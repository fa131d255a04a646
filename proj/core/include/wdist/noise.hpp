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

#ifndef WDIST_NOISE_HPP
#define WDIST_NOISE_HPP

#include <span>
#include <vector>

#include "wdist/state.hpp"

namespace wdist {

/// Depolarizing strength p in [0, 1] in the Kraus convention
/// rho -> (1 - 3p/4) rho + (p/4)(X rho X + Y rho Y + Z rho Z).
/// p = 1 is full depolarization.
class DepolarizingParam {
 public:
  /// Throws DomainError unless 0 <= p <= 1.
  DepolarizingParam(double p);  // NOLINT(google-explicit-constructor)

  double value() const noexcept { return p_; }

 private:
  double p_;
};

/// Converts between the Kraus convention above and the "Pauli error
/// probability" convention rho -> (1 - q) rho + (q/3) sum P rho P.
/// q = 3p/4; the Kraus form covers q in [0, 3/4].
double pauli_error_from_kraus(DepolarizingParam p);
DepolarizingParam kraus_from_pauli_error(double q);

/// {sqrt(1 - 3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}.
std::vector<Matrix> depolarizing_kraus(DepolarizingParam p);
QuantumChannel depolarizing_channel(DepolarizingParam p);

DensityMatrix depolarize(const DensityMatrix& rho, DepolarizingParam p, int label);
/// One parameter per register position. Throws DimensionError on a
/// length mismatch.
DensityMatrix depolarize_all(const DensityMatrix& rho, std::span<const DepolarizingParam> ps);
DensityMatrix depolarize_all(const DensityMatrix& rho, DepolarizingParam p);

/// 1 - prod(1 - p_i). An empty list gives 0.
DepolarizingParam compose_depolarizing(std::span<const DepolarizingParam> ps);
/// 1 - (1 - p)^(4n - 1). Throws DomainError for n < 1.
DepolarizingParam p_eff_hops(DepolarizingParam p, int hops);

struct EventCount {
  int link = 0;
  int memory = 0;
  int bsm = 0;
  int total = 0;
};

/// Noise events on the distributed qubit's line over n hops:
/// (n, 2n - 1, n, 4n - 1).
EventCount event_count(int hops);

/// Exponential attenuation; lambda in 1/km, length in km.
struct LinkModel {
  double lambda = 0.0;
  double length = 0.0;

  /// Throws DomainError unless lambda > 0 and length >= 0.
  LinkModel(double lambda_per_km, double length_km);
};

/// 1 - exp(-lambda * length).
DepolarizingParam link_noise(const LinkModel& model);
/// 1 - exp(-(4n - 1) lambda L / n) for total distance L over n hops.
DepolarizingParam p_eff_distance(int hops, double total_length, double lambda);

/// eta^N for direct transmission of N photons.
double rate_direct(double eta, int photons);

/// Repeater chain: n hops with per-event link, memory and BSM noise.
struct ChainSpec {
  int hops = 1;
  DepolarizingParam link = 0.0;
  DepolarizingParam memory = 0.0;
  DepolarizingParam bsm = 0.0;

  /// All three event kinds at the same strength.
  static ChainSpec uniform(int hops, DepolarizingParam p);
  /// Throws DomainError for hops < 1.
  void validate() const;
};

/// Composition of every event on the distributed qubit's line:
/// 1 - (1-p_link)^n (1-p_mem)^(2n-1) (1-p_bsm)^n.
DepolarizingParam chain_effective_noise(const ChainSpec& chain);

}  // namespace wdist

#endif  // WDIST_NOISE_HPP
