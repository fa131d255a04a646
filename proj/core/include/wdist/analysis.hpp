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

#ifndef WDIST_ANALYSIS_HPP
#define WDIST_ANALYSIS_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wdist/entmetrics.hpp"
#include "wdist/state.hpp"
#include "wdist/table_io.hpp"

namespace wdist {

/// Named, strictly ascending list of parameter values.
class SweepGrid {
 public:
  /// Throws DomainError unless values are finite and strictly ascending.
  SweepGrid(std::string name, std::vector<double> values);
  /// lo, lo + step, ..., hi with round((hi - lo) / step) steps; the last
  /// point is exactly hi.
  static SweepGrid uniform(std::string name, double lo, double hi, double step);

  const std::string& name() const noexcept { return name_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double front() const { return values_.front(); }
  double back() const { return values_.back(); }
  /// Throws DomainError when any value falls outside [lo, hi].
  void require_within(double lo, double hi) const;
  /// Compact description for table metadata.
  std::string describe() const;

 private:
  std::string name_;
  std::vector<double> values_;
};

/// p in [0, 1] with step 0.005.
SweepGrid default_p_grid(std::string name = "p");

/// Runs body(i) for i in [0, n), possibly on several threads. Each index
/// must write only to its own output slot, so results match a sequential
/// run exactly. threads == 0 picks the hardware concurrency.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = 0);

/// Fidelity of W_mod, W, GHZ (and optional W_m members) under uniform
/// per-qubit depolarizing, with differences F_A - F_B and relative
/// differences 100 (F_A - F_B) / F_B for the pairs (Wmod,W), (Wmod,GHZ)
/// and (W,GHZ).
Table fidelity_sweep(const SweepGrid& p_grid, const std::vector<double>& extra_m = {});

enum class Protocol3Model {
  /// Explicit simulation kept on the eta+ outcome branch.
  JointBranch,
  /// Explicit simulation averaged over all outcomes after correction.
  Averaged,
  /// beta^3 |W><W| + (1 - beta^3) I/8.
  ClosedForm,
};

std::string_view to_string(Protocol3Model model);
/// Accepts "branch", "average" and "closed-form".
Protocol3Model parse_protocol3_model(std::string_view name);

struct TangleSweepOptions {
  int protocol = 1;
  SweepGrid p_grid = default_p_grid();
  /// Protocol 2 only: second axis for the effective noise on qubit 3.
  SweepGrid p_eff_grid = default_p_grid("p_eff");
  Protocol3Model model = Protocol3Model::JointBranch;
};

struct TangleSweepResult {
  Table table;
  /// Vanishing points, bisection-refined from the first grid crossing.
  std::vector<Threshold> thresholds;
  /// Interior minima of metrics that never vanish, golden-section refined.
  std::vector<Minimum> minima;
  /// Protocol 2 only: p_eff at which the R-pair tangles and tau_av vanish,
  /// per p (nan when the tangle survives on the whole p_eff range).
  std::optional<Table> contour;
};

/// Tangle curves of a protocol. Protocol 1 sweeps uniform p; Protocol 2
/// sweeps (p, p_eff) with p on qubits 1,2 and p_eff on qubit 3; Protocol 3
/// sweeps p_eff under `model`.
TangleSweepResult tangle_sweep(const TangleSweepOptions& options);

/// Three-qubit state of a protocol at one noise point (`p_eff` is used by
/// Protocol 2 only).
DensityMatrix protocol_state(int protocol, double p, double p_eff = 0.0,
                             Protocol3Model model = Protocol3Model::JointBranch);

/// Column names for a protocol's pair tangles, e.g. tau_12, tau_16, tau_26.
std::vector<std::string> tangle_columns(int protocol);

/// Threshold of a named metric ("tau12", "tau13", "tau23", "tauav") for a
/// protocol; Protocol 2 holds p_eff fixed. Bisection starts from the first
/// crossing on `grid`. Returns nullopt when the metric never vanishes.
std::optional<Threshold> protocol_threshold(int protocol, const std::string& metric, const SweepGrid& grid,
                                            double p_eff = 0.0, Protocol3Model model = Protocol3Model::JointBranch);

/// Corner of the Protocol 2 region where every tangle is positive: the
/// tau_12 threshold p* and the p_eff at which the R-pair tangles vanish
/// for p = p*.
struct Protocol2Corner {
  Threshold p_star;
  Threshold p_eff_star;
};
Protocol2Corner protocol2_corner(const SweepGrid& p_grid = default_p_grid(),
                                 const SweepGrid& p_eff_grid = default_p_grid("p_eff"));

struct DesignPoint {
  int n = 1;
  double ell = 0.0;
  double p_eff = 0.0;
  bool feasible = false;
};

/// Longest per-hop link with p_eff <= threshold: -ln(1 - t) / ((4n - 1) lambda).
/// Throws DomainError unless 0 <= t < 1, lambda > 0 and n >= 1.
double ell_max(int n, double threshold, double lambda);
/// n * ell_max.
double total_length_max(int n, double threshold, double lambda);

struct DesignSpaceOptions {
  double lambda = 0.046;
  std::vector<double> thresholds{0.2, 0.3, 0.407};
  /// Threshold used for the feasibility map.
  double feasibility_threshold = 0.407;
  int n_max = 20;
  SweepGrid ell_grid = SweepGrid::uniform("ell", 0.01, 5.0, 0.01);
};

struct DesignSpaceResult {
  /// threshold, n, ell_max, L_max.
  Table boundary;
  /// n, ell, L, p_eff, feasible (1 or 0).
  Table grid;
  std::vector<DesignPoint> points;
};

DesignSpaceResult design_space(const DesignSpaceOptions& options);

/// (n, ell) pairs highlighted on the repeater design map.
std::vector<std::pair<int, double>> reference_star_points();
/// n, ell, L, p_eff for each (n, ell).
Table star_points(double lambda, std::span<const std::pair<int, double>> points);

/// |0> (x) (|10> + |01>)/sqrt2, the large-m limit of W_m.
PureState wm_limit_state();

struct MSweepOptions {
  std::vector<double> m_grid{1, 2, 5, 10, 20, 50, 100, 150, 200, 500};
  SweepGrid p_grid = default_p_grid();
  /// Saturation: max_p |F(p, m) - F_limit(p)| below this value.
  double criterion = 1e-3;
};

struct MSweepResult {
  /// p, F_m=<m>..., F_limit, dF_m=<m>... (increment over the first m).
  Table table;
  /// m, max_dev_limit, max_increment.
  Table summary;
  /// Smallest grid m meeting the criterion.
  std::optional<double> m_star;
};

MSweepResult m_sweep(const MSweepOptions& options);

}  // namespace wdist

#endif  // WDIST_ANALYSIS_HPP
