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

#ifndef WDIST_ENTMETRICS_HPP
#define WDIST_ENTMETRICS_HPP

#include <functional>
#include <optional>
#include <string>

#include "wdist/state.hpp"
#include "wdist/tolerances.hpp"

namespace wdist {

/// Wootters concurrence of a two-qubit state, in [0, 1].
/// Throws DimensionError unless rho has exactly two qubits.
double concurrence(const DensityMatrix& rho);

/// sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4) before the max with 0.
/// Positive exactly when the state is entangled; used as a smooth
/// zero-crossing signal by threshold searches.
double concurrence_margin(const DensityMatrix& rho);

/// Concurrence squared.
double two_tangle(const DensityMatrix& rho);

/// Pairwise tangles of a three-qubit state. Indices refer to register
/// positions, so for a state over (1,2,6) tau_13 is the (1,6) tangle.
struct TangleReport {
  double tau_12 = 0.0;
  double tau_13 = 0.0;
  double tau_23 = 0.0;
  double tau_av = 0.0;
  /// Residual three-tangle, filled for pure inputs only.
  std::optional<double> tau_3;
};

TangleReport tangle_report(const DensityMatrix& rho);
TangleReport tangle_report(const PureState& psi);

/// Concurrence margins of the three pairs, in TangleReport order.
struct MarginReport {
  double m_12 = 0.0;
  double m_13 = 0.0;
  double m_23 = 0.0;

  double max() const noexcept;
};

MarginReport margin_report(const DensityMatrix& rho);

/// 4 det(rho_1) - tau_12 - tau_13, clipped to [0, 1].
double three_tangle_pure(const PureState& psi);

struct Threshold {
  double p_crit = 0.0;
  std::string metric;
  double lo = 0.0;
  double hi = 0.0;
  double tolerance = 0.0;
};

inline constexpr double kThresholdTolerance = 1e-4;
inline constexpr double kMetricZero = 1e-9;

/// Bisection for the point where `metric` stops exceeding `zero`.
/// Requires metric(lo) > zero >= metric(hi) (BracketError otherwise).
/// p_crit is the upper end of the final bracket, so metric <= zero at
/// p_crit and metric > zero at p_crit - tol for monotone metrics.
Threshold find_threshold(const std::function<double(double)>& metric, double lo, double hi,
                         double tol = kThresholdTolerance, std::string label = {}, double zero = kMetricZero);

struct Minimum {
  double x = 0.0;
  double value = 0.0;
  std::string metric;
};

/// Golden-section search for a unimodal function on [lo, hi].
Minimum find_minimum(const std::function<double(double)>& f, double lo, double hi, double tol = kThresholdTolerance,
                     std::string label = {});

}  // namespace wdist

#endif  // WDIST_ENTMETRICS_HPP
