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

#include "wdist/cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wdist/analysis.hpp"
#include "wdist/cli/config.hpp"
#include "wdist/noise.hpp"
#include "wdist/protocols.hpp"
#include "wdist/qcore.hpp"
#include "wdist/table_io.hpp"

namespace wdist::cli {

namespace {

// ------------------------------------------------------------------ checks

std::function<void(const ParamValue&)> real_in(double lo, double hi) {
  return [lo, hi](const ParamValue& v) {
    const double x = std::get<double>(v);
    if (x < lo || x > hi) throw DomainError("must lie in [" + format_number(lo) + ", " + format_number(hi) + "]");
  };
}

std::function<void(const ParamValue&)> real_positive() {
  return [](const ParamValue& v) {
    if (!(std::get<double>(v) > 0.0)) throw DomainError("must be > 0");
  };
}

std::function<void(const ParamValue&)> int_in(long long lo, long long hi) {
  return [lo, hi](const ParamValue& v) {
    const long long x = std::get<long long>(v);
    if (x < lo || x > hi) throw DomainError("must be an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  };
}

std::function<void(const ParamValue&)> one_of(std::vector<std::string> choices) {
  return [choices](const ParamValue& v) {
    const auto& s = std::get<std::string>(v);
    if (std::find(choices.begin(), choices.end(), s) == choices.end()) {
      std::string all;
      for (const auto& c : choices) all += (all.empty() ? "" : ", ") + c;
      throw DomainError("must be one of: " + all);
    }
  };
}

std::function<void(const ParamValue&)> list_in(double lo, double hi) {
  return [lo, hi](const ParamValue& v) {
    for (double x : std::get<std::vector<double>>(v)) {
      if (x < lo || x > hi) throw DomainError("entries must lie in [" + format_number(lo) + ", " + format_number(hi) + "]");
    }
  };
}

std::function<void(const ParamValue&)> optional_probability() {
  return [](const ParamValue& v) {
    const double x = std::get<double>(v);
    if (x != -1.0 && (x < 0.0 || x > 1.0)) throw DomainError("must be -1 (use --p) or lie in [0, 1]");
  };
}

ParamSpec real(std::string key, std::string def, std::string help, std::function<void(const ParamValue&)> check) {
  return {std::move(key), ParamKind::Real, std::move(def), std::move(help), std::move(check)};
}
ParamSpec integer(std::string key, std::string def, std::string help, std::function<void(const ParamValue&)> check) {
  return {std::move(key), ParamKind::Integer, std::move(def), std::move(help), std::move(check)};
}
ParamSpec text(std::string key, std::string def, std::string help, std::function<void(const ParamValue&)> check) {
  return {std::move(key), ParamKind::Text, std::move(def), std::move(help), std::move(check)};
}
ParamSpec real_list(std::string key, std::string def, std::string help, std::function<void(const ParamValue&)> check) {
  return {std::move(key), ParamKind::RealList, std::move(def), std::move(help), std::move(check)};
}

std::vector<ParamSpec> p_grid_specs(const std::string& prefix, const std::string& step) {
  return {real(prefix + "_min", "0", "lowest " + prefix + " on the grid", real_in(0, 1)),
          real(prefix + "_max", "1", "highest " + prefix + " on the grid", real_in(0, 1)),
          real(prefix + "_step", step, "grid step for " + prefix, real_positive())};
}

SweepGrid grid_from(const RunConfig& cfg, const std::string& prefix) {
  const double lo = cfg.real(prefix + "_min");
  const double hi = cfg.real(prefix + "_max");
  if (hi < lo) throw ConfigError(prefix + "_max", "must be >= " + prefix + "_min");
  return SweepGrid::uniform(prefix, lo, hi, cfg.real(prefix + "_step"));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ------------------------------------------------------------- subcommands

struct Outcome {
  Table table;
  /// Additional tables written next to the main one as <stem>.<suffix>.<ext>.
  std::vector<std::pair<std::string, Table>> extras;
  std::string summary;
  bool invariant_violated = false;
};

struct Command {
  std::string name;
  std::string help;
  std::vector<ParamSpec> specs;
  std::function<Outcome(const RunConfig&)> run;
};

Outcome run_fidelity_sweep(const RunConfig& cfg) {
  const SweepGrid grid = grid_from(cfg, "p");
  Outcome o{fidelity_sweep(grid, cfg.list("m")), {}, {}, false};
  const auto& t = o.table;
  bool ordered = true;
  for (const auto& row : t.rows) {
    const double p = row[0];
    if (p > 0.0 && p < 1.0 && !(row[1] > row[2] && row[2] > row[3])) ordered = false;
  }
  o.summary = "F_Wmod > F_W > F_GHZ on interior points: " + std::string(ordered ? "yes" : "no");
  return o;
}

Protocol3Model model_of(const RunConfig& cfg) { return parse_protocol3_model(cfg.text("model")); }

Outcome run_tangle_sweep(const RunConfig& cfg) {
  TangleSweepOptions opt;
  opt.protocol = static_cast<int>(cfg.integer("protocol"));
  opt.p_grid = grid_from(cfg, "p");
  opt.p_eff_grid = grid_from(cfg, "p_eff");
  opt.model = model_of(cfg);
  TangleSweepResult r = tangle_sweep(opt);
  Outcome o{std::move(r.table), {}, {}, false};
  if (r.contour) o.extras.emplace_back("contour", std::move(*r.contour));
  std::string s;
  for (const auto& th : r.thresholds) s += (s.empty() ? "" : "; ") + th.metric + " vanishes at " + fmt(th.p_crit);
  for (const auto& m : r.minima) {
    s += (s.empty() ? "" : "; ") + m.metric + " minimum " + fmt(m.value) + " at " + fmt(m.x);
  }
  o.summary = s.empty() ? "no thresholds on the grid" : s;
  return o;
}

Outcome run_protocol(const RunConfig& cfg) {
  const int protocol = static_cast<int>(cfg.integer("protocol"));
  const double p = cfg.real("p");
  const std::string& mode = cfg.text("mode");
  const std::string& policy_name = cfg.text("policy");
  const OutcomePolicy policy =
      policy_name == "average" ? OutcomePolicy::average() : OutcomePolicy::postselect(policy_name);
  ProtocolResult r = [&] {
    switch (protocol) {
      case 1: return protocol1(p);
      case 2: {
        auto pick = [&](const char* key) {
          const double v = cfg.real(key);
          return v < 0.0 ? p : v;
        };
        ChainSpec chain{static_cast<int>(cfg.integer("hops")), pick("p_link"), pick("p_mem"), pick("p_bsm")};
        if (mode == "analytic") throw ConfigError("mode", "protocol 2 supports explicit or effective");
        return protocol2(chain, mode == "effective" ? Protocol2Mode::Effective : Protocol2Mode::Explicit, policy);
      }
      default: {
        if (mode == "effective") throw ConfigError("mode", "protocol 3 supports analytic or explicit");
        return protocol3(p, mode == "explicit" ? Protocol3Mode::Explicit : Protocol3Mode::Analytic, policy);
      }
    }
  }();
  Table t;
  t.columns = {"fidelity", "tau_12", "tau_13", "tau_23", "tau_av", "deviation_from_closed_form"};
  t.add_row({r.fidelity, r.tangles.tau_12, r.tangles.tau_13, r.tangles.tau_23, r.tangles.tau_av,
             r.deviation_from_analytic.value_or(std::nan(""))});
  t.set_meta("tool", "wdist");
  t.set_meta("tool_version", std::string(version()));
  t.set_meta("table", "protocol_run");
  t.set_meta("register", r.final_state.qubits().to_string());
  Table outcomes;
  outcomes.columns = {"round", "outcome", "probability"};
  std::string labels;
  std::map<std::string, int> index;
  for (const auto& e : r.outcome_trace) {
    auto it = index.find(e.label);
    if (it == index.end()) {
      it = index.emplace(e.label, static_cast<int>(index.size())).first;
      labels += (labels.empty() ? "" : ",") + e.label + ":" + e.correction;
    }
    outcomes.add_row({static_cast<double>(e.round), static_cast<double>(it->second), e.probability});
  }
  outcomes.set_meta("table", "outcome_trace");
  outcomes.set_meta("outcomes", labels);
  Outcome o{std::move(t), {}, {}, false};
  if (!outcomes.rows.empty()) o.extras.emplace_back("outcomes", std::move(outcomes));
  o.summary = "protocol " + std::to_string(protocol) + " on " + r.final_state.qubits().to_string() +
              ": fidelity=" + fmt(r.fidelity) + " tau_av=" + fmt(r.tangles.tau_av);
  if (r.deviation_from_analytic) o.summary += " deviation=" + fmt(*r.deviation_from_analytic);
  return o;
}

Outcome run_threshold(const RunConfig& cfg) {
  const int protocol = static_cast<int>(cfg.integer("protocol"));
  const SweepGrid grid = grid_from(cfg, "p");
  const auto th = protocol_threshold(protocol, cfg.text("metric"), grid, cfg.real("p_eff"), model_of(cfg));
  Table t;
  t.columns = {"p_crit", "bracket_lo", "bracket_hi", "tolerance"};
  t.set_meta("tool", "wdist");
  t.set_meta("tool_version", std::string(version()));
  t.set_meta("table", "threshold");
  t.set_meta("protocol", std::to_string(protocol));
  t.set_meta("metric", cfg.text("metric"));
  Outcome o{{}, {}, {}, false};
  if (th) {
    t.add_row({th->p_crit, th->lo, th->hi, th->tolerance});
    o.summary = th->metric + " threshold p=" + fmt(th->p_crit) + " (tolerance " + fmt(th->tolerance) + ")";
  } else {
    o.summary = cfg.text("metric") + " does not vanish on the grid";
  }
  o.table = std::move(t);
  return o;
}

std::vector<std::pair<int, double>> parse_points(const std::string& text) {
  std::vector<std::pair<int, double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    char* end = nullptr;
    if (colon == std::string::npos) throw ConfigError("points", "expected n:ell pairs, got '" + item + "'");
    const long n = std::strtol(item.substr(0, colon).c_str(), &end, 10);
    const std::string ell_text = item.substr(colon + 1);
    const double ell = std::strtod(ell_text.c_str(), &end);
    if (n < 1 || !(ell >= 0.0) || end != ell_text.c_str() + ell_text.size()) {
      throw ConfigError("points", "bad n:ell pair '" + item + "'");
    }
    out.emplace_back(static_cast<int>(n), ell);
  }
  return out;
}

Outcome run_design_space(const RunConfig& cfg) {
  const double lambda = cfg.real("lambda");
  const std::string& which = cfg.text("table");
  Outcome o{{}, {}, {}, false};
  if (which == "stars") {
    const auto pts = parse_points(cfg.text("points"));
    o.table = star_points(lambda, pts);
    std::string s;
    for (const auto& row : o.table.rows) {
      s += (s.empty() ? "" : ", ") + std::string("(") + fmt(row[0]) + ", " + fmt(row[1]) + ")->" + fmt(row[3]);
    }
    o.summary = "star points p_eff: " + s;
    return o;
  }
  DesignSpaceOptions opt;
  opt.lambda = lambda;
  opt.feasibility_threshold = cfg.real("threshold");
  opt.thresholds = cfg.list("thresholds");
  if (std::find(opt.thresholds.begin(), opt.thresholds.end(), opt.feasibility_threshold) == opt.thresholds.end()) {
    opt.thresholds.push_back(opt.feasibility_threshold);
  }
  std::sort(opt.thresholds.begin(), opt.thresholds.end());
  opt.n_max = static_cast<int>(cfg.integer("n_max"));
  const double lo = cfg.real("ell_min");
  const double hi = cfg.real("ell_max");
  if (hi < lo) throw ConfigError("ell_max", "must be >= ell_min");
  opt.ell_grid = SweepGrid::uniform("ell", lo, hi, cfg.real("ell_step"));
  DesignSpaceResult r = design_space(opt);
  const double t = opt.feasibility_threshold;
  o.summary = "threshold " + fmt(t) + ": ell_max(1)=" + fmt(ell_max(1, t, lambda)) + " km, ell_max(" +
              std::to_string(opt.n_max) + ")=" + fmt(ell_max(opt.n_max, t, lambda)) + " km, L_max(" +
              std::to_string(opt.n_max) + ")=" + fmt(total_length_max(opt.n_max, t, lambda)) + " km";
  if (which == "grid") {
    o.table = std::move(r.grid);
  } else {
    o.table = std::move(r.boundary);
  }
  return o;
}

Outcome run_m_sweep(const RunConfig& cfg) {
  MSweepOptions opt;
  opt.m_grid = cfg.list("m_grid");
  opt.p_grid = grid_from(cfg, "p");
  opt.criterion = cfg.real("criterion");
  MSweepResult r = m_sweep(opt);
  Outcome o{{}, {}, {}, false};
  o.summary = "saturation m*=" + (r.m_star ? fmt(*r.m_star) : std::string("none")) + " (criterion " +
              fmt(opt.criterion) + ")";
  if (cfg.text("table") == "summary") {
    o.table = std::move(r.summary);
  } else {
    o.table = std::move(r.table);
    o.extras.emplace_back("summary", std::move(r.summary));
  }
  return o;
}

PureState bloch_state(double theta, double phi) {
  Vector v(2);
  v << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
  return PureState::normalized(Register{1}, v);
}

Outcome run_teleport(const RunConfig& cfg) {
  std::vector<std::pair<double, double>> inputs;
  const long long samples = cfg.integer("samples");
  if (samples == 0) {
    inputs.emplace_back(cfg.real("theta"), cfg.real("phi"));
  } else {
    // Spiral lattice over the Bloch sphere.
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (long long k = 0; k < samples; ++k) {
      const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(samples);
      inputs.emplace_back(std::acos(z), std::fmod(golden * static_cast<double>(k), 2.0 * std::numbers::pi));
    }
  }
  Table t;
  t.columns = {"theta", "phi", "branch", "probability", "fidelity"};
  t.set_meta("tool", "wdist");
  t.set_meta("tool_version", std::string(version()));
  t.set_meta("table", "teleport");
  double worst = 1.0;
  std::string labels;
  for (const auto& [theta, phi] : inputs) {
    const TeleportResult r = teleport_wmod(bloch_state(theta, phi));
    worst = std::min(worst, r.min_fidelity);
    labels.clear();
    for (std::size_t b = 0; b < r.branches.size(); ++b) {
      const auto& br = r.branches[b];
      labels += (labels.empty() ? "" : ",") + br.label + ":" + br.correction;
      t.add_row({theta, phi, static_cast<double>(b), br.probability, br.fidelity});
    }
  }
  t.set_meta("branches", labels);
  return Outcome{std::move(t), {}, std::to_string(inputs.size()) + " input(s); minimum fidelity " + fmt(worst), false};
}

Outcome run_densecode(const RunConfig& cfg) {
  const std::string& msg = cfg.text("message");
  std::vector<std::string> messages = msg == "all" ? std::vector<std::string>{"00", "01", "10", "11"}
                                                   : std::vector<std::string>{msg};
  Table t;
  t.columns = {"sent", "decoded", "probability"};
  t.set_meta("tool", "wdist");
  t.set_meta("tool_version", std::string(version()));
  t.set_meta("table", "densecode");
  t.set_meta("encoding", "00:I,01:Z,10:X,11:ZX on qubit 1 of eta+");
  int ok = 0;
  for (const auto& m : messages) {
    const DenseCodingResult r = superdense_wmod(m);
    if (r.decoded == m) ++ok;
    t.add_row({static_cast<double>(std::stoi(m, nullptr, 2)),
               r.decoded == "??" ? std::nan("") : static_cast<double>(std::stoi(r.decoded, nullptr, 2)), r.probability});
  }
  return Outcome{std::move(t), {}, std::to_string(ok) + "/" + std::to_string(messages.size()) + " messages decoded", false};
}

Outcome run_verify(const RunConfig& cfg) {
  const double tolerance = cfg.real("tolerance");
  const int trials = static_cast<int>(cfg.integer("trials"));
  Table t;
  t.columns = {"kind", "parameter", "hops", "deviation"};
  t.set_meta("tool", "wdist");
  t.set_meta("tool_version", std::string(version()));
  t.set_meta("table", "verify");
  t.set_meta("kinds", "0:depolarizing commutation,1:random-channel commutation,2:chain explicit vs effective");
  t.set_meta("seed", std::to_string(cfg.seed));
  double worst = 0.0;
  for (double p : cfg.list("p")) {
    const double d = verify_noise_commutation(depolarizing_channel(p), trials, cfg.seed);
    worst = std::max(worst, d);
    t.add_row({0.0, p, 1.0, d});
  }
  for (long long c = 0; c < cfg.integer("channels"); ++c) {
    const auto channel_seed = cfg.seed + static_cast<std::uint64_t>(c);
    const double d = verify_noise_commutation(random_qubit_channel(channel_seed), trials, cfg.seed);
    worst = std::max(worst, d);
    t.add_row({1.0, static_cast<double>(c), 1.0, d});
  }
  for (double p : cfg.list("chain_p")) {
    for (double n : cfg.list("chain_hops")) {
      const ChainSpec chain = ChainSpec::uniform(static_cast<int>(n), p);
      const double d = max_abs_diff(protocol2(chain, Protocol2Mode::Explicit).final_state.matrix(),
                                    protocol2(chain, Protocol2Mode::Effective).final_state.matrix());
      worst = std::max(worst, d);
      t.add_row({2.0, p, n, d});
    }
  }
  Outcome o{std::move(t), {}, {}, false};
  o.invariant_violated = worst > tolerance;
  o.summary = "max deviation " + fmt(worst) + (o.invariant_violated ? " exceeds " : " within ") + fmt(tolerance);
  return o;
}

std::vector<Command> commands() {
  const auto protocol_spec = integer("protocol", "1", "protocol number (1, 2 or 3)", int_in(1, 3));
  const auto model_spec = text("model", "branch", "protocol-3 model: branch, average or closed-form",
                               one_of({"branch", "average", "closed-form"}));
  std::vector<Command> cmds;

  std::vector<ParamSpec> fs = p_grid_specs("p", "0.005");
  fs.push_back(real_list("m", "", "extra W_m members to include", list_in(0, 1e12)));
  cmds.push_back({"fidelity-sweep", "fidelity of W_mod, W and GHZ under uniform depolarizing", fs, run_fidelity_sweep});

  std::vector<ParamSpec> ts{protocol_spec};
  for (auto& s : p_grid_specs("p", "0.005")) ts.push_back(s);
  for (auto& s : p_grid_specs("p_eff", "0.01")) ts.push_back(s);
  ts.push_back(model_spec);
  cmds.push_back({"tangle-sweep", "pairwise tangles along a noise grid, with thresholds", ts, run_tangle_sweep});

  cmds.push_back({"protocol-run",
                  "run one distribution protocol",
                  {protocol_spec, real("p", "0", "noise strength (p_eff for protocol 3)", real_in(0, 1)),
                   integer("hops", "1", "repeater hops (protocol 2)", int_in(1, 5)),
                   real("p_link", "-1", "link noise (protocol 2; -1 uses --p)", optional_probability()),
                   real("p_mem", "-1", "memory noise (protocol 2; -1 uses --p)", optional_probability()),
                   real("p_bsm", "-1", "BSM noise (protocol 2; -1 uses --p)", optional_probability()),
                   text("mode", "explicit", "explicit, effective (protocol 2) or analytic (protocol 3)",
                        one_of({"explicit", "effective", "analytic"})),
                   text("policy", "average", "average, or an outcome label to postselect", {})},
                  run_protocol});

  std::vector<ParamSpec> th{protocol_spec,
                            text("metric", "tau12", "tau12, tau13, tau23 or tauav",
                                 one_of({"tau12", "tau13", "tau23", "tauav"})),
                            real("p_eff", "0", "fixed effective noise on qubit 3 (protocol 2)", real_in(0, 1)),
                            model_spec};
  for (auto& s : p_grid_specs("p", "0.005")) th.push_back(s);
  cmds.push_back({"threshold", "noise level at which a tangle vanishes", th, run_threshold});

  cmds.push_back({"design-space",
                  "repeater design map: longest links meeting a p_eff threshold",
                  {real("lambda", "0.046", "attenuation rate per km", real_positive()),
                   real("threshold", "0.407", "p_eff threshold for feasibility", real_in(0, 0.999999)),
                   real_list("thresholds", "0.2,0.3,0.407", "thresholds for the boundary table", list_in(0, 0.999999)),
                   integer("n_max", "20", "largest hop count", int_in(1, 1000)),
                   real("ell_min", "0.01", "shortest link length (km)", real_positive()),
                   real("ell_max", "5", "longest link length (km)", real_positive()),
                   real("ell_step", "0.01", "link length step (km)", real_positive()),
                   text("table", "boundary", "boundary, grid or stars", one_of({"boundary", "grid", "stars"})),
                   text("points", "1:3.5,2:1.5,3:1.0,10:0.29", "n:ell pairs for the stars table", {})},
                  run_design_space});

  std::vector<ParamSpec> ms{real_list("m_grid", "1,2,5,10,20,50,100,150,200,500", "W_m members", list_in(0, 1e12)),
                            real("criterion", "0.001", "uniform distance to the large-m limit", real_positive()),
                            text("table", "curves", "curves or summary", one_of({"curves", "summary"}))};
  for (auto& s : p_grid_specs("p", "0.005")) ms.push_back(s);
  cmds.push_back({"m-sweep", "fidelity of W_m versus m and saturation point", ms, run_m_sweep});

  cmds.push_back({"teleport",
                  "teleport a qubit through W_mod",
                  {real("theta", "0", "Bloch polar angle of the input", real_in(0, std::numbers::pi)),
                   real("phi", "0", "Bloch azimuth of the input", real_in(-2 * std::numbers::pi, 2 * std::numbers::pi)),
                   integer("samples", "0", "if > 0, use this many spiral-lattice inputs instead", int_in(0, 100000))},
                  run_teleport});

  cmds.push_back({"densecode",
                  "superdense coding with eta+",
                  {text("message", "all", "00, 01, 10, 11 or all", one_of({"00", "01", "10", "11", "all"}))},
                  run_densecode});

  cmds.push_back({"verify",
                  "noise/swap commutation and chain consistency checks",
                  {real_list("p", "0.1,0.3,0.7", "depolarizing strengths", list_in(0, 1)),
                   integer("channels", "20", "seeded random channels", int_in(0, 100000)),
                   integer("trials", "5", "random inputs per channel", int_in(1, 100000)),
                   real_list("chain_p", "0,0.05,0.1,0.2", "chain noise grid", list_in(0, 1)),
                   real_list("chain_hops", "1,2,3,5", "chain hop counts", list_in(1, 5)),
                   real("tolerance", "1e-10", "maximum allowed deviation", real_positive())},
                  run_verify});
  return cmds;
}

std::string flag_of(const std::string& key) {
  std::string f = "--" + key;
  std::replace(f.begin(), f.end(), '_', '-');
  return f;
}

std::filesystem::path extra_path(const std::filesystem::path& main, const std::string& suffix) {
  std::filesystem::path p = main;
  p.replace_filename(main.stem().string() + "." + suffix + main.extension().string());
  return p;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const std::vector<Command> cmds = commands();
  CLI::App app{"wdist: W-class entanglement distribution simulator"};
  app.name("wdist");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  struct Bound {
    CLI::App* sub = nullptr;
    std::map<std::string, std::string> values;
    std::string config;
    std::string out;
    std::string format;
    std::string seed;
    bool dry_run = false;
  };
  std::vector<Bound> bound(cmds.size());
  for (std::size_t i = 0; i < cmds.size(); ++i) {
    Bound& b = bound[i];
    b.sub = app.add_subcommand(cmds[i].name, cmds[i].help);
    for (const auto& spec : cmds[i].specs) {
      std::string help = spec.help;
      if (!spec.default_value.empty()) help += " [default: " + spec.default_value + "]";
      b.sub->add_option(flag_of(spec.key), b.values[spec.key], help);
    }
    b.sub->add_option("--config", b.config, "TOML file of key = value parameters");
    b.sub->add_option("--out", b.out, "output file (default: $WDIST_OUT_DIR/<command>.<format> or stdout)");
    b.sub->add_option("--format", b.format, "csv or json [default: csv]");
    b.sub->add_option("--seed", b.seed, "RNG seed for random channels [default: " + std::to_string(kDefaultSeed) + "]");
    b.sub->add_flag("--dry-run", b.dry_run, "validate and print the resolved parameters only");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::size_t which = 0;
  while (which < cmds.size() && !bound[which].sub->parsed()) ++which;
  if (which == cmds.size()) {
    err << "error: no subcommand\n";
    return kExitUsage;
  }
  const Command& cmd = cmds[which];
  Bound& b = bound[which];

  try {
    std::vector<std::pair<std::string, std::string>> flags;
    for (const auto& spec : cmd.specs) {
      if (b.sub->get_option(flag_of(spec.key))->count() > 0) flags.emplace_back(spec.key, b.values[spec.key]);
    }
    if (b.sub->get_option("--out")->count() > 0) flags.emplace_back("out", b.out);
    if (b.sub->get_option("--format")->count() > 0) flags.emplace_back("format", b.format);
    if (b.sub->get_option("--seed")->count() > 0) flags.emplace_back("seed", b.seed);
    std::optional<ConfigFile> file;
    if (b.sub->get_option("--config")->count() > 0) file = load_config(b.config);
    RunConfig cfg = resolve_config(cmd.name, cmd.specs, flags, file ? &*file : nullptr);
    cfg.dry_run = b.dry_run;

    if (cfg.dry_run) {
      out << cfg.canonical() << "hash=" << cfg.hash() << "\n";
      err << "wdist " << cmd.name << ": dry run, parameters valid; params=" << cfg.hash() << "\n";
      return kExitOk;
    }

    Outcome result = cmd.run(cfg);
    result.table.set_meta("command", cmd.name);
    result.table.set_meta("params_hash", cfg.hash());
    std::optional<std::filesystem::path> target = cfg.out;
    if (!target) {
      if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
        target = std::filesystem::path(dir) / (cmd.name + "." + std::string(to_string(cfg.format)));
      }
    }
    std::string where = "stdout";
    if (target) {
      if (target->has_parent_path()) std::filesystem::create_directories(target->parent_path());
      write_table(result.table, cfg.format, *target);
      for (auto& [suffix, table] : result.extras) {
        table.set_meta("command", cmd.name);
        table.set_meta("params_hash", cfg.hash());
        write_table(table, cfg.format, extra_path(*target, suffix));
      }
      where = target->string();
    } else {
      out << serialize(result.table, cfg.format);
    }
    err << "wdist " << cmd.name << ": " << result.summary << "; params=" << cfg.hash()
        << "; rows=" << result.table.rows.size() << "; out=" << where << "\n";
    return result.invariant_violated ? kExitInvariant : kExitOk;
  } catch (const ConfigError& e) {
    err << "error: invalid parameter " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "error: numerical invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace wdist::cli
