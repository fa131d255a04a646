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

#include "wdist/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "wdist/errors.hpp"
#include "wdist/noise.hpp"
#include "wdist/protocols.hpp"
#include "wdist/qcore.hpp"
#include "wdist/wfamily.hpp"

namespace wdist {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void stamp(Table& t, const std::string& kind) {
  t.set_meta("tool", "wdist");
  t.set_meta("tool_version", std::string(version()));
  t.set_meta("table", kind);
}

}  // namespace

SweepGrid::SweepGrid(std::string name, std::vector<double> values) : name_(std::move(name)), values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw DomainError("grid '" + name_ + "' has a non-finite value");
    if (i > 0 && !(values_[i] > values_[i - 1])) throw DomainError("grid '" + name_ + "' is not strictly ascending");
  }
}

SweepGrid SweepGrid::uniform(std::string name, double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw DomainError("grid '" + name + "' needs step > 0 and hi >= lo");
  const auto steps = static_cast<std::size_t>(std::llround((hi - lo) / step));
  std::vector<double> values(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) values[i] = lo + static_cast<double>(i) * step;
  values.back() = hi;
  return SweepGrid(std::move(name), std::move(values));
}

void SweepGrid::require_within(double lo, double hi) const {
  for (double v : values_) {
    if (v < lo || v > hi) {
      throw DomainError("grid '" + name_ + "' value " + format_number(v) + " lies outside [" + format_number(lo) + ", " +
                        format_number(hi) + "]");
    }
  }
}

std::string SweepGrid::describe() const {
  if (values_.empty()) return name_ + ": empty";
  return name_ + ": " + std::to_string(values_.size()) + " points in [" + format_number(values_.front()) + ", " +
         format_number(values_.back()) + "]";
}

SweepGrid default_p_grid(std::string name) { return SweepGrid::uniform(std::move(name), 0.0, 1.0, 0.005); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------- fidelity

Table fidelity_sweep(const SweepGrid& p_grid, const std::vector<double>& extra_m) {
  p_grid.require_within(0.0, 1.0);
  std::vector<std::pair<std::string, PureState>> states{
      {"F_Wmod", w_mod()}, {"F_W", w_canonical()}, {"F_GHZ", ghz()}};
  for (double m : extra_m) states.emplace_back("F_Wm=" + format_number(m), w_m({m, 0.0, 0.0}));

  Table t;
  t.columns.push_back(p_grid.name());
  for (const auto& s : states) t.columns.push_back(s.first);
  for (const char* c : {"dF_Wmod_W", "dF_Wmod_GHZ", "dF_W_GHZ", "pct_Wmod_W", "pct_Wmod_GHZ", "pct_W_GHZ"}) {
    t.columns.emplace_back(c);
  }
  t.rows.resize(p_grid.size());
  parallel_for(p_grid.size(), [&](std::size_t i) {
    const double p = p_grid.values()[i];
    std::vector<double> row{p};
    for (const auto& s : states) row.push_back(protocol1(p, s.second).fidelity);
    const double fm = row[1];
    const double fw = row[2];
    const double fg = row[3];
    row.insert(row.end(), {fm - fw, fm - fg, fw - fg, 100.0 * (fm - fw) / fw, 100.0 * (fm - fg) / fg,
                           100.0 * (fw - fg) / fg});
    t.rows[i] = std::move(row);
  });
  stamp(t, "fidelity_sweep");
  t.set_meta("grid", p_grid.describe());
  t.set_meta("noise", "uniform per-qubit depolarizing");
  return t;
}

// ----------------------------------------------------------------- tangles

std::string_view to_string(Protocol3Model model) {
  switch (model) {
    case Protocol3Model::JointBranch: return "branch";
    case Protocol3Model::Averaged: return "average";
    case Protocol3Model::ClosedForm: return "closed-form";
  }
  return "?";
}

Protocol3Model parse_protocol3_model(std::string_view name) {
  if (name == "branch") return Protocol3Model::JointBranch;
  if (name == "average") return Protocol3Model::Averaged;
  if (name == "closed-form") return Protocol3Model::ClosedForm;
  throw DomainError("unknown protocol-3 model '" + std::string(name) + "' (expected branch, average or closed-form)");
}

namespace {

void require_protocol(int protocol) {
  if (protocol < 1 || protocol > 3) throw DomainError("protocol must be 1, 2 or 3; got " + std::to_string(protocol));
}

int metric_index(const std::string& metric) {
  if (metric == "tau12") return 0;
  if (metric == "tau13") return 1;
  if (metric == "tau23") return 2;
  if (metric == "tauav") return 3;
  throw DomainError("unknown metric '" + metric + "' (expected tau12, tau13, tau23 or tauav)");
}

double margin_of(const MarginReport& m, int index) {
  switch (index) {
    case 0: return m.m_12;
    case 1: return m.m_13;
    case 2: return m.m_23;
    default: return m.max();
  }
}

double tangle_of(const TangleReport& t, int index) {
  switch (index) {
    case 0: return t.tau_12;
    case 1: return t.tau_13;
    case 2: return t.tau_23;
    default: return t.tau_av;
  }
}

// Threshold refined from the first grid crossing of `f` through zero.
std::optional<Threshold> threshold_on_grid(const std::function<double(double)>& f, const std::vector<double>& xs,
                                           const std::vector<double>& fx, const std::string& label) {
  if (xs.empty() || !(fx[0] > kMetricZero)) return std::nullopt;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (fx[i] <= kMetricZero) return find_threshold(f, xs[i - 1], xs[i], kThresholdTolerance, label);
  }
  return std::nullopt;
}

std::vector<double> evaluate(const std::function<double(double)>& f, const std::vector<double>& xs) {
  std::vector<double> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { out[i] = f(xs[i]); });
  return out;
}

}  // namespace

std::vector<std::string> tangle_columns(int protocol) {
  require_protocol(protocol);
  switch (protocol) {
    case 1: return {"tau_12", "tau_13", "tau_23", "tau_av"};
    case 2: return {"tau_12", "tau_1R", "tau_2R", "tau_av"};
    default: return {"tau_12", "tau_16", "tau_26", "tau_av"};
  }
}

DensityMatrix protocol_state(int protocol, double p, double p_eff, Protocol3Model model) {
  require_protocol(protocol);
  switch (protocol) {
    case 1: return protocol1(p).final_state;
    case 2: return protocol2_effective(p, p_eff).final_state;
    default:
      switch (model) {
        case Protocol3Model::JointBranch:
          return protocol3(p, Protocol3Mode::Explicit, OutcomePolicy::postselect("eta+")).final_state;
        case Protocol3Model::Averaged: return protocol3(p, Protocol3Mode::Explicit).final_state;
        case Protocol3Model::ClosedForm: return protocol3(p, Protocol3Mode::Analytic).final_state;
      }
  }
  throw DomainError("unreachable protocol model");
}

std::optional<Threshold> protocol_threshold(int protocol, const std::string& metric, const SweepGrid& grid,
                                            double p_eff, Protocol3Model model) {
  const int index = metric_index(metric);
  grid.require_within(0.0, 1.0);
  auto f = [=](double p) { return margin_of(margin_report(protocol_state(protocol, p, p_eff, model)), index); };
  const std::string label = tangle_columns(protocol)[static_cast<std::size_t>(index)];
  return threshold_on_grid(f, grid.values(), evaluate(f, grid.values()), label);
}

Protocol2Corner protocol2_corner(const SweepGrid& p_grid, const SweepGrid& p_eff_grid) {
  auto p_star = protocol_threshold(2, "tau12", p_grid, 0.0);
  if (!p_star) throw BracketError("tau_12 of protocol 2 does not vanish on the p grid");
  const double p = p_star->p_crit;
  auto f = [p](double q) {
    const MarginReport m = margin_report(protocol2_effective(p, q).final_state);
    return std::max(m.m_13, m.m_23);
  };
  auto q_star = threshold_on_grid(f, p_eff_grid.values(), evaluate(f, p_eff_grid.values()), "tau_R");
  if (!q_star) throw BracketError("R-pair tangles do not vanish on the p_eff grid");
  return {*p_star, *q_star};
}

TangleSweepResult tangle_sweep(const TangleSweepOptions& options) {
  const int protocol = options.protocol;
  require_protocol(protocol);
  options.p_grid.require_within(0.0, 1.0);
  const auto names = tangle_columns(protocol);
  const auto& xs = options.p_grid.values();
  TangleSweepResult result;
  Table& t = result.table;

  if (protocol != 2) {
    t.columns = {protocol == 3 ? "p_eff" : options.p_grid.name()};
    t.columns.insert(t.columns.end(), names.begin(), names.end());
    std::vector<TangleReport> reports(xs.size());
    std::vector<MarginReport> margins(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
      const DensityMatrix rho = protocol_state(protocol, xs[i], 0.0, options.model);
      reports[i] = tangle_report(rho);
      margins[i] = margin_report(rho);
    });
    for (std::size_t i = 0; i < xs.size(); ++i) {
      t.add_row({xs[i], reports[i].tau_12, reports[i].tau_13, reports[i].tau_23, reports[i].tau_av});
    }
    for (int k = 0; k < 4; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      auto f = [&, k](double p) { return margin_of(margin_report(protocol_state(protocol, p, 0.0, options.model)), k); };
      std::vector<double> fx(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) fx[i] = margin_of(margins[i], k);
      if (auto th = threshold_on_grid(f, xs, fx, names[idx])) {
        result.thresholds.push_back(*th);
        continue;
      }
      std::size_t best = 0;
      for (std::size_t i = 1; i < xs.size(); ++i) {
        if (tangle_of(reports[i], k) < tangle_of(reports[best], k)) best = i;
      }
      if (best == 0 || best + 1 >= xs.size()) continue;
      auto g = [&, k](double p) { return tangle_of(tangle_report(protocol_state(protocol, p, 0.0, options.model)), k); };
      result.minima.push_back(find_minimum(g, xs[best - 1], xs[best + 1], kThresholdTolerance, names[idx]));
    }
    if (protocol == 3) t.set_meta("model", std::string(to_string(options.model)));
  } else {
    options.p_eff_grid.require_within(0.0, 1.0);
    const auto& qs = options.p_eff_grid.values();
    t.columns = {options.p_grid.name(), options.p_eff_grid.name()};
    t.columns.insert(t.columns.end(), names.begin(), names.end());
    t.rows.resize(xs.size() * qs.size());
    std::vector<MarginReport> margins(t.rows.size());
    parallel_for(t.rows.size(), [&](std::size_t i) {
      const double p = xs[i / qs.size()];
      const double q = qs[i % qs.size()];
      const DensityMatrix rho = protocol2_effective(p, q).final_state;
      const TangleReport r = tangle_report(rho);
      margins[i] = margin_report(rho);
      t.rows[i] = {p, q, r.tau_12, r.tau_13, r.tau_23, r.tau_av};
    });
    for (double q : {qs.front(), qs.back()}) {
      if (auto th = protocol_threshold(2, "tau12", options.p_grid, q)) {
        th->metric += "@p_eff=" + format_number(q);
        result.thresholds.push_back(*th);
      }
    }
    Table contour;
    contour.columns = {options.p_grid.name(), "p_eff_zero_" + names[1], "p_eff_zero_" + names[2], "p_eff_zero_" + names[3]};
    contour.rows.resize(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
      const double p = xs[i];
      std::vector<double> row{p};
      for (int k = 1; k < 4; ++k) {
        auto f = [p, k](double q) { return margin_of(margin_report(protocol2_effective(p, q).final_state), k); };
        std::vector<double> fx(qs.size());
        for (std::size_t j = 0; j < qs.size(); ++j) fx[j] = margin_of(margins[i * qs.size() + j], k);
        const auto th = threshold_on_grid(f, qs, fx, names[static_cast<std::size_t>(k)]);
        row.push_back(th ? th->p_crit : kNaN);
      }
      contour.rows[i] = std::move(row);
    });
    stamp(contour, "protocol2_zero_contour");
    contour.set_meta("grid", options.p_grid.describe() + "; " + options.p_eff_grid.describe());
    result.contour = std::move(contour);
    const Protocol2Corner corner = protocol2_corner(options.p_grid, options.p_eff_grid);
    Threshold p_star = corner.p_star;
    p_star.metric = "corner_p";
    Threshold q_star = corner.p_eff_star;
    q_star.metric = "corner_p_eff";
    result.thresholds.push_back(p_star);
    result.thresholds.push_back(q_star);
  }
  stamp(t, "tangle_sweep");
  t.set_meta("protocol", std::to_string(protocol));
  t.set_meta("grid", protocol == 2 ? options.p_grid.describe() + "; " + options.p_eff_grid.describe()
                                   : options.p_grid.describe());
  return result;
}

// ------------------------------------------------------------ design space

double ell_max(int n, double threshold, double lambda) {
  event_count(n);
  if (!(threshold >= 0.0 && threshold < 1.0)) {
    throw DomainError("threshold must lie in [0, 1); got " + format_number(threshold));
  }
  if (!(lambda > 0.0)) throw DomainError("lambda must be > 0; got " + format_number(lambda));
  return -std::log1p(-threshold) / ((4.0 * n - 1.0) * lambda);
}

double total_length_max(int n, double threshold, double lambda) { return n * ell_max(n, threshold, lambda); }

DesignSpaceResult design_space(const DesignSpaceOptions& options) {
  if (options.n_max < 1) throw DomainError("n_max must be >= 1");
  for (double t : options.thresholds) ell_max(1, t, options.lambda);
  ell_max(1, options.feasibility_threshold, options.lambda);
  options.ell_grid.require_within(0.0, std::numeric_limits<double>::infinity());

  DesignSpaceResult result;
  result.boundary.columns = {"threshold", "n", "ell_max", "L_max"};
  for (double t : options.thresholds) {
    for (int n = 1; n <= options.n_max; ++n) {
      result.boundary.add_row({t, static_cast<double>(n), ell_max(n, t, options.lambda),
                               total_length_max(n, t, options.lambda)});
    }
  }
  result.grid.columns = {"n", "ell", "L", "p_eff", "feasible"};
  const auto& ells = options.ell_grid.values();
  for (int n = 1; n <= options.n_max; ++n) {
    for (double ell : ells) {
      const double p = p_eff_distance(n, n * ell, options.lambda).value();
      const bool ok = p <= options.feasibility_threshold;
      result.points.push_back({n, ell, p, ok});
      result.grid.add_row({static_cast<double>(n), ell, n * ell, p, ok ? 1.0 : 0.0});
    }
  }
  for (Table* t : {&result.boundary, &result.grid}) {
    stamp(*t, t == &result.boundary ? "design_space_boundary" : "design_space_grid");
    t->set_meta("lambda", format_number(options.lambda));
    t->set_meta("feasibility_threshold", format_number(options.feasibility_threshold));
    t->set_meta("grid", "n: 1.." + std::to_string(options.n_max) + "; " + options.ell_grid.describe());
  }
  return result;
}

std::vector<std::pair<int, double>> reference_star_points() { return {{1, 3.5}, {2, 1.5}, {3, 1.0}, {10, 0.29}}; }

Table star_points(double lambda, std::span<const std::pair<int, double>> points) {
  Table t;
  t.columns = {"n", "ell", "L", "p_eff"};
  for (const auto& [n, ell] : points) {
    t.add_row({static_cast<double>(n), ell, n * ell, p_eff_distance(n, n * ell, lambda).value()});
  }
  stamp(t, "star_points");
  t.set_meta("lambda", format_number(lambda));
  return t;
}

// ----------------------------------------------------------------- m sweep

PureState wm_limit_state() {
  Vector v = Vector::Zero(8);
  v(0b010) = 1.0 / std::sqrt(2.0);
  v(0b001) = 1.0 / std::sqrt(2.0);
  return PureState(Register{1, 2, 3}, v);
}

MSweepResult m_sweep(const MSweepOptions& options) {
  const SweepGrid ms("m", options.m_grid);
  ms.require_within(0.0, std::numeric_limits<double>::infinity());
  options.p_grid.require_within(0.0, 1.0);
  if (ms.size() == 0) throw DomainError("m grid is empty");
  const auto& ps = options.p_grid.values();

  MSweepResult result;
  Table& t = result.table;
  t.columns.push_back(options.p_grid.name());
  for (double m : ms.values()) t.columns.push_back("F_m=" + format_number(m));
  t.columns.emplace_back("F_limit");
  for (double m : ms.values()) t.columns.push_back("dF_m=" + format_number(m));

  const std::size_t nm = ms.size();
  std::vector<PureState> states;
  for (double m : ms.values()) states.push_back(w_m({m, 0.0, 0.0}));
  const PureState limit = wm_limit_state();
  t.rows.resize(ps.size());
  parallel_for(ps.size(), [&](std::size_t i) {
    std::vector<double> row{ps[i]};
    for (const auto& s : states) row.push_back(protocol1(ps[i], s).fidelity);
    row.push_back(protocol1(ps[i], limit).fidelity);
    for (std::size_t k = 0; k < nm; ++k) row.push_back(row[1 + k] - row[1]);
    t.rows[i] = std::move(row);
  });

  result.summary.columns = {"m", "max_dev_limit", "max_increment"};
  for (std::size_t k = 0; k < nm; ++k) {
    double dev = 0.0;
    double inc = 0.0;
    for (const auto& row : t.rows) {
      dev = std::max(dev, std::abs(row[1 + k] - row[1 + nm]));
      inc = std::max(inc, row[2 + nm + k]);
    }
    result.summary.add_row({ms.values()[k], dev, inc});
    if (!result.m_star && dev < options.criterion) result.m_star = ms.values()[k];
  }
  for (Table* tab : {&result.table, &result.summary}) {
    stamp(*tab, tab == &result.table ? "m_sweep" : "m_sweep_summary");
    tab->set_meta("grid", options.p_grid.describe() + "; " + ms.describe());
    tab->set_meta("criterion", format_number(options.criterion));
    tab->set_meta("m_star", result.m_star ? format_number(*result.m_star) : "none");
  }
  return result;
}

}  // namespace wdist
