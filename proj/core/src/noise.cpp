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

#include "wdist/noise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wdist/errors.hpp"
#include "wdist/qcore.hpp"

namespace wdist {

DepolarizingParam::DepolarizingParam(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("depolarizing parameter must lie in [0,1]; got " + std::to_string(p));
}

double pauli_error_from_kraus(DepolarizingParam p) { return 0.75 * p.value(); }

DepolarizingParam kraus_from_pauli_error(double q) {
  if (!(q >= 0.0 && q <= 0.75)) throw DomainError("Pauli error probability must lie in [0,3/4]; got " + std::to_string(q));
  return DepolarizingParam(std::min(1.0, q / 0.75));
}

std::vector<Matrix> depolarizing_kraus(DepolarizingParam p) {
  const double v = p.value();
  const double w0 = std::sqrt(std::max(0.0, 1.0 - 0.75 * v));
  const double w = std::sqrt(0.25 * v);
  return {w0 * pauli::i(), w * pauli::x(), w * pauli::y(), w * pauli::z()};
}

QuantumChannel depolarizing_channel(DepolarizingParam p) { return QuantumChannel(depolarizing_kraus(p)); }

DensityMatrix depolarize(const DensityMatrix& rho, DepolarizingParam p, int label) {
  if (p.value() == 0.0) {
    rho.qubits().position(QubitLabel(label));
    return rho;
  }
  return apply_channel(rho, depolarizing_channel(p), Register{label});
}

DensityMatrix depolarize_all(const DensityMatrix& rho, std::span<const DepolarizingParam> ps) {
  if (ps.size() != rho.num_qubits()) {
    throw DimensionError("depolarize_all: " + std::to_string(ps.size()) + " parameters for " +
                         std::to_string(rho.num_qubits()) + " qubits");
  }
  DensityMatrix out = rho;
  for (std::size_t i = 0; i < ps.size(); ++i) out = depolarize(out, ps[i], rho.qubits()[i].index());
  return out;
}

DensityMatrix depolarize_all(const DensityMatrix& rho, DepolarizingParam p) {
  const std::vector<DepolarizingParam> ps(rho.num_qubits(), p);
  return depolarize_all(rho, ps);
}

DepolarizingParam compose_depolarizing(std::span<const DepolarizingParam> ps) {
  double survive = 1.0;
  for (const auto& p : ps) survive *= 1.0 - p.value();
  return DepolarizingParam(std::clamp(1.0 - survive, 0.0, 1.0));
}

EventCount event_count(int hops) {
  if (hops < 1) throw DomainError("hop count must be >= 1; got " + std::to_string(hops));
  return {hops, 2 * hops - 1, hops, 4 * hops - 1};
}

DepolarizingParam p_eff_hops(DepolarizingParam p, int hops) {
  const int events = event_count(hops).total;
  return DepolarizingParam(std::clamp(1.0 - std::pow(1.0 - p.value(), events), 0.0, 1.0));
}

LinkModel::LinkModel(double lambda_per_km, double length_km) : lambda(lambda_per_km), length(length_km) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be > 0; got " + std::to_string(lambda));
  if (!(length >= 0.0) || !std::isfinite(length)) throw DomainError("length must be >= 0; got " + std::to_string(length));
}

DepolarizingParam link_noise(const LinkModel& model) { return DepolarizingParam(-std::expm1(-model.lambda * model.length)); }

DepolarizingParam p_eff_distance(int hops, double total_length, double lambda) {
  const int events = event_count(hops).total;
  const LinkModel model(lambda, total_length);
  return DepolarizingParam(-std::expm1(-events * model.lambda * model.length / hops));
}

double rate_direct(double eta, int photons) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("transmissivity must lie in [0,1]; got " + std::to_string(eta));
  if (photons < 1) throw DomainError("photon count must be >= 1; got " + std::to_string(photons));
  return std::pow(eta, photons);
}

ChainSpec ChainSpec::uniform(int hops, DepolarizingParam p) { return ChainSpec{hops, p, p, p}; }

void ChainSpec::validate() const { event_count(hops); }

DepolarizingParam chain_effective_noise(const ChainSpec& chain) {
  const EventCount ev = event_count(chain.hops);
  const double survive = std::pow(1.0 - chain.link.value(), ev.link) * std::pow(1.0 - chain.memory.value(), ev.memory) *
                         std::pow(1.0 - chain.bsm.value(), ev.bsm);
  return DepolarizingParam(std::clamp(1.0 - survive, 0.0, 1.0));
}

}  // namespace wdist
