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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "wdist/analysis.hpp"
#include "wdist/entmetrics.hpp"
#include "wdist/noise.hpp"
#include "wdist/protocols.hpp"
#include "wdist/qcore.hpp"
#include "wdist/wfamily.hpp"

namespace {

using namespace wdist;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Check fidelity_polynomial() {
  Check c;
  double worst = 0.0;
  const SweepGrid grid = default_p_grid();
  for (double p : grid.values()) {
    const double poly = 1.0 - 17.0 / 8.0 * p + 27.0 / 16.0 * p * p - 7.0 / 16.0 * p * p * p;
    worst = std::max(worst, std::abs(protocol1(p).fidelity - poly));
  }
  c.require(worst < 1e-10, "max deviation " + num(worst));
  c.require(std::abs(protocol1(0.0).fidelity - 1.0) < 1e-12, "F(0)");
  c.require(std::abs(protocol1(1.0).fidelity - 0.125) < 1e-12, "F(1)");
  c.note("max deviation " + num(worst));
  return c;
}

Check preparation() {
  Check c;
  const PureState seed = preparation_seed();
  double worst = 0.0;
  const auto infid = [&](const PureState& got, const PureState& want) {
    const double v = 1.0 - std::norm(inner_product(want, got));
    worst = std::max(worst, v);
    return v;
  };
  c.require(infid(apply_unitary(seed, u_mw(), {1, 2}), w_mod()) < 1e-12, "U_MW");
  c.require(infid(apply_unitary(seed, u_mwb(), {2, 3}), eta_plus()) < 1e-12, "U_MWB");
  for (double m : {0.0, 0.5, 1.0, 10.0}) {
    c.require(infid(apply_unitary(seed, u_mwm(m), {1, 2}), w_m({m, 0.0, 0.0})) < 1e-12, "U_MWm m=" + num(m));
    c.require(infid(apply_unitary(seed, u_mwmb(m), {2, 3}), eta_plus(m)) < 1e-12, "U_MWmB m=" + num(m));
  }
  c.note("max infidelity " + num(worst));
  return c;
}

Check swapping() {
  Check c;
  double worst_f = 0.0;
  double worst_p = 0.0;
  for (int n = 1; n <= 5; ++n) {
    for (const char* label : {"Phi+", "Phi-", "Psi+", "Psi-"}) {
      const ProtocolResult r =
          protocol2(ChainSpec::uniform(n, 0.0), Protocol2Mode::Explicit, OutcomePolicy::postselect(label));
      worst_f = std::max(worst_f, std::abs(1.0 - r.fidelity));
      c.require(r.final_state.qubits() == Register{1, 2, 2 * n + 3}, "register n=" + std::to_string(n));
    }
    for (const auto& e : protocol2(ChainSpec::uniform(n, 0.0)).outcome_trace) {
      worst_p = std::max(worst_p, std::abs(e.probability - 0.25));
    }
  }
  c.require(worst_f < 1e-12, "fidelity deviation " + num(worst_f));
  c.require(worst_p < 1e-12, "probability deviation " + num(worst_p));
  c.note("n=1..5, fidelity deviation " + num(worst_f));
  return c;
}

Check joint_measurement() {
  Check c;
  const ProtocolResult r = protocol3(0.0, Protocol3Mode::Explicit);
  int used = 0;
  for (const auto& e : r.outcome_trace) {
    if (e.label.rfind("aux", 0) == 0) {
      c.require(e.probability < 1e-12, e.label + " probability " + num(e.probability));
    } else {
      ++used;
      c.require(std::abs(e.probability - 0.25) < 1e-12, e.label + " probability " + num(e.probability));
      const ProtocolResult b = protocol3(0.0, Protocol3Mode::Explicit, OutcomePolicy::postselect(e.label));
      c.require(std::abs(1.0 - b.fidelity) < 1e-12, e.label + " fidelity " + num(b.fidelity));
    }
  }
  c.require(used == 4, "used outcomes " + std::to_string(used));
  c.require(std::abs(1.0 - r.fidelity) < 1e-12, "averaged fidelity");
  c.note(std::to_string(used) + " outcomes at 1/4, completion outcomes empty");
  return c;
}

Check thresholds() {
  Check c;
  const SweepGrid grid = default_p_grid();
  const auto t12 = protocol_threshold(1, "tau12", grid);
  const auto tav = protocol_threshold(1, "tauav", grid);
  c.require(t12 && std::abs(t12->p_crit - 0.214) <= 0.005, "P1 tau12");
  c.require(tav && std::abs(tav->p_crit - 0.308) <= 0.005, "P1 tau_av");
  if (t12 && tav) c.note("P1 tau12=" + num(t12->p_crit) + " tau_av=" + num(tav->p_crit));

  std::vector<double> p2;
  for (double pe : {0.0, 0.1, 0.408, 0.7, 1.0}) {
    const auto t = protocol_threshold(2, "tau12", grid, pe);
    c.require(t.has_value(), "P2 tau12 at p_eff=" + num(pe));
    if (t) p2.push_back(t->p_crit);
  }
  c.require(!p2.empty() && std::all_of(p2.begin(), p2.end(), [&](double v) { return v == p2.front(); }),
            "P2 tau12 depends on p_eff");
  c.require(t12 && !p2.empty() && std::abs(p2.front() - t12->p_crit) <= 1e-4, "P2 tau12 vs P1");

  const Protocol2Corner corner = protocol2_corner();
  const double ps = corner.p_star.p_crit;
  const double pe = corner.p_eff_star.p_crit;
  c.require(std::abs(ps - 0.214) <= 0.005 && std::abs(pe - 0.408) <= 0.005,
            "P2 corner (" + num(ps) + ", " + num(pe) + ")");
  const TangleReport inside = tangle_report(protocol_state(2, ps - 0.005, pe - 0.005));
  c.require(inside.tau_12 > 0 && inside.tau_13 > 0 && inside.tau_23 > 0 && inside.tau_av > 0,
            "P2 tangles inside corner");
  c.note("P2 corner (" + num(ps) + ", " + num(pe) + ")");

  TangleSweepOptions opt;
  opt.protocol = 3;
  opt.p_grid = SweepGrid::uniform("p_eff", 0.0, 1.0, 0.005);
  const TangleSweepResult r3 = tangle_sweep(opt);
  std::optional<double> t16;
  for (const auto& t : r3.thresholds) {
    if (t.metric == "tau_16") t16 = t.p_crit;
  }
  c.require(t16 && std::abs(*t16 - 0.361) <= 0.005, "P3 tau16 zero");
  std::optional<Minimum> m12;
  for (const auto& m : r3.minima) {
    if (m.metric == "tau_12") m12 = m;
  }
  c.require(m12 && std::abs(m12->x - 0.392) <= 0.005 && m12->value > 0.0, "P3 tau12 minimum");
  const auto tav3 = r3.table.column_values("tau_av");
  const double tav_min = *std::min_element(tav3.begin(), tav3.end());
  c.require(tav_min > 0.0, "P3 tau_av vanishes");
  if (t16 && m12) {
    c.note("P3 tau16=" + num(*t16) + " tau12 min " + num(m12->value) + " at " + num(m12->x) + " tau_av min " +
           num(tav_min));
  }
  return c;
}

Check design() {
  Check c;
  const double lambda = 0.046;
  const double t = 0.407;
  c.require(std::abs(ell_max(1, t, lambda) - 3.79) <= 0.01, "ell_max(1)=" + num(ell_max(1, t, lambda)));
  c.require(std::abs(ell_max(20, t, lambda) - 0.14) <= 0.01, "ell_max(20)=" + num(ell_max(20, t, lambda)));
  c.require(std::abs(total_length_max(20, t, lambda) - 2.88) <= 0.01,
            "L_max(20)=" + num(total_length_max(20, t, lambda)));
  const auto refs = reference_star_points();
  const Table stars = star_points(lambda, refs);
  const std::vector<double> expected{0.383, 0.383, 0.397, 0.407};
  const auto pe = stars.column_values("p_eff");
  for (std::size_t i = 0; i < expected.size(); ++i) {
    c.require(i < pe.size() && std::abs(pe[i] - expected[i]) <= 0.002, "star " + std::to_string(i));
  }
  c.note("ell_max(1)=" + num(ell_max(1, t, lambda)) + " L_max(20)=" + num(total_length_max(20, t, lambda)));
  return c;
}

Check commutation() {
  Check c;
  double worst = 0.0;
  for (double p : {0.1, 0.3, 0.7}) worst = std::max(worst, verify_noise_commutation(depolarizing_channel(p), 5, 1));
  for (std::uint64_t s = 0; s < 20; ++s) {
    worst = std::max(worst, verify_noise_commutation(random_qubit_channel(1000 + s), 5, s));
  }
  c.require(worst < 1e-10, "commutation deviation " + num(worst));
  double chain = 0.0;
  for (double p : {0.0, 0.05, 0.1, 0.2}) {
    for (int n : {1, 2, 3, 5}) {
      const ChainSpec spec = ChainSpec::uniform(n, p);
      chain = std::max(chain, max_abs_diff(protocol2(spec, Protocol2Mode::Explicit).final_state.matrix(),
                                           protocol2(spec, Protocol2Mode::Effective).final_state.matrix()));
    }
  }
  c.require(chain < 1e-10, "explicit vs effective " + num(chain));
  c.note("commutation " + num(worst) + ", chain " + num(chain));
  return c;
}

Check metrics() {
  Check c;
  c.require(std::abs(concurrence(DensityMatrix::from_pure(bell(BellKind::PhiPlus))) - 1.0) < 1e-12, "Bell");
  c.require(concurrence(DensityMatrix::from_pure(PureState::basis({1, 2}, "01"))) < 1e-12, "product");
  double worst = 0.0;
  for (double m : {0.0, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0}) {
    const PureState w = w_m({m, 0.3, 1.1});
    const double a[3] = {std::abs(w.amplitude("100")), std::abs(w.amplitude("010")), std::abs(w.amplitude("001"))};
    const DensityMatrix rho = DensityMatrix::from_pure(w);
    worst = std::max(worst, std::abs(concurrence(partial_trace(rho, {1, 2})) - 2 * a[0] * a[1]));
    worst = std::max(worst, std::abs(concurrence(partial_trace(rho, {1, 3})) - 2 * a[0] * a[2]));
    worst = std::max(worst, std::abs(concurrence(partial_trace(rho, {2, 3})) - 2 * a[1] * a[2]));
    c.require(std::abs(von_neumann_entropy(partial_trace(rho, {3})) - 1.0) < 1e-10, "S(rho_3) m=" + num(m));
  }
  c.require(worst < 1e-10, "C_ij deviation " + num(worst));
  for (double m : {0.5, 1.0, 10.0}) c.require(std::abs(three_tangle_pure(w_m({m, 0, 0}))) < 1e-10, "tau3 w_m");
  c.require(std::abs(three_tangle_pure(ghz()) - 1.0) < 1e-10, "tau3 GHZ");
  c.note("C_ij deviation " + num(worst));
  return c;
}

Check robustness() {
  Check c;
  const Table t = fidelity_sweep(SweepGrid::uniform("p", 0.05, 0.95, 0.05));
  const auto a = t.column_values("F_Wmod");
  const auto b = t.column_values("F_W");
  const auto g = t.column_values("F_GHZ");
  for (std::size_t i = 0; i < a.size(); ++i) c.require(a[i] > b[i] && b[i] > g[i], "ordering at row " + std::to_string(i));
  c.note(std::to_string(a.size()) + " points");
  return c;
}

Check msweep() {
  Check c;
  const MSweepResult r = m_sweep(MSweepOptions{});
  const auto& grid = MSweepOptions{}.m_grid;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const auto lo = r.table.column_values("F_m=" + num(grid[k - 1]));
    const auto hi = r.table.column_values("F_m=" + num(grid[k]));
    for (std::size_t i = 0; i < lo.size(); ++i) {
      c.require(hi[i] >= lo[i] - 1e-12, "F decreases from m=" + num(grid[k - 1]) + " at row " + std::to_string(i));
    }
  }
  c.require(r.m_star && *r.m_star >= 100 && *r.m_star <= 200, "m* outside [100, 200]");
  const double limit = std::norm(inner_product(wm_limit_state(), w_m({1e6, 0, 0})));
  c.require(limit > 1.0 - 1e-3, "limit fidelity " + num(limit));
  c.note("m*=" + (r.m_star ? num(*r.m_star) : std::string("none")) + ", limit fidelity " + num(limit));
  return c;
}

Check tasks() {
  Check c;
  double worst_f = 0.0;
  double worst_p = 0.0;
  int inputs = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double theta = std::numbers::pi * (i + 0.5) / 5.0;
      const double phi = 2.0 * std::numbers::pi * j / 10.0;
      Vector v(2);
      v << std::cos(theta / 2), std::polar(1.0, phi) * std::sin(theta / 2);
      const TeleportResult r = teleport_wmod(PureState::normalized({1}, v));
      ++inputs;
      for (const auto& b : r.branches) {
        worst_f = std::max(worst_f, 1.0 - b.fidelity);
        worst_p = std::max(worst_p, std::abs(b.probability - 0.25));
      }
    }
  }
  c.require(worst_f < 1e-12, "teleport infidelity " + num(worst_f));
  c.require(worst_p < 1e-12, "teleport probability " + num(worst_p));
  for (const char* m : {"00", "01", "10", "11"}) {
    const DenseCodingResult d = superdense_wmod(m);
    c.require(d.decoded == m && std::abs(d.probability - 1.0) < 1e-12, std::string("dense coding ") + m);
  }
  c.note(std::to_string(inputs) + " teleport inputs, infidelity " + num(worst_f));
  return c;
}

void protocol3_diagnostic() {
  const auto closed = [](const char* metric) {
    return protocol_threshold(3, metric, default_p_grid("p_eff"), 0.0, Protocol3Model::ClosedForm);
  };
  const auto t12 = closed("tau12");
  const auto t16 = closed("tau13");
  const auto tav = closed("tauav");
  const ProtocolResult r = protocol3(0.3, Protocol3Mode::Explicit);
  std::printf("INFO protocol-3 closed form zeros: tau12=%s tau16=%s tau_av=%s; explicit vs closed form at p=0.3: %s\n",
              t12 ? num(t12->p_crit).c_str() : "none", t16 ? num(t16->p_crit).c_str() : "none",
              tav ? num(tav->p_crit).c_str() : "none", num(*r.deviation_from_analytic).c_str());
}

}  // namespace

int main() {
  struct Item {
    const char* name;
    Check (*fn)();
  };
  const Item items[] = {
      {"fidelity polynomial", fidelity_polynomial},
      {"preparation unitaries", preparation},
      {"entanglement swapping", swapping},
      {"joint measurement", joint_measurement},
      {"tangle thresholds", thresholds},
      {"repeater design space", design},
      {"noise commutation", commutation},
      {"entanglement metrics", metrics},
      {"comparative robustness", robustness},
      {"m sweep", msweep},
      {"teleportation and dense coding", tasks},
  };
  int failed = 0;
  int index = 0;
  for (const auto& item : items) {
    ++index;
    Check c;
    try {
      c = item.fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    if (!c.ok) ++failed;
    std::printf("%s %2d %s: %s\n", c.ok ? "PASS" : "FAIL", index, item.name, c.detail.c_str());
    std::fflush(stdout);
  }
  try {
    protocol3_diagnostic();
  } catch (const std::exception& e) {
    std::printf("INFO protocol-3 diagnostic failed: %s\n", e.what());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
