// Copyright 2026 The diraccat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch runs: a `key = value` configuration selects one of five commands,
// each of which writes a single CSV or grid file.
//
//   command   spectrum | evolve | trajectory | cat | husimi
//   xi        coupling xi > 0
//   z_abs     |z| of the start amplitude z = i|z| (default 0)
//   pz        longitudinal momentum (default 0, spectrum only)
//   cutoff    Fock cutoff (default ceil(z_abs^2 + 6 z_abs) + 8)
//   t_max     end of the time grid (evolve, trajectory)
//   n_steps   number of intervals of the time grid (evolve, trajectory)
//   output    output file path
//   branch    plus | minus (trajectory, default plus)
//   resolution  grid points per axis (husimi, default 201)

#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "diraccat/boost.hpp"
#include "diraccat/cat.hpp"
#include "diraccat/diagnostics.hpp"
#include "diraccat/errors.hpp"
#include "diraccat/evolution.hpp"
#include "diraccat/hamiltonian.hpp"

namespace diraccat {

enum class Command { spectrum, evolve, trajectory, cat, husimi };

struct RunConfig {
  Command command = Command::spectrum;
  double xi = 0.0;
  double z_abs = 0.0;
  double pz = 0.0;
  std::optional<int> cutoff;
  double t_max = 0.0;
  int n_steps = 0;
  std::string output_path;
  Sign branch = Sign::plus;
  int resolution = 201;

  int effective_cutoff() const {
    return cutoff.value_or(static_cast<int>(std::ceil(z_abs * z_abs + 6.0 * z_abs)) + 8);
  }
  ModelParams params() const { return {xi, pz, effective_cutoff()}; }
};

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitGuard = 3, kExitIo = 4 };

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError(key, "key '" + key + "': not a finite number: '" + std::string(text) + "'");
  }
  return v;
}

inline int parse_int(const std::string& key, std::string_view text) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(key, "key '" + key + "': not an integer: '" + std::string(text) + "'");
  }
  return v;
}

inline Command parse_command(std::string_view text) {
  if (text == "spectrum") return Command::spectrum;
  if (text == "evolve") return Command::evolve;
  if (text == "trajectory") return Command::trajectory;
  if (text == "cat") return Command::cat;
  if (text == "husimi") return Command::husimi;
  throw ConfigError("command", "key 'command': unknown command '" + std::string(text) + "'");
}

}  // namespace detail

/// Raw key/value pairs of one configuration source. Command-line
/// overrides replace entries before make_run_config sees them.
using ConfigEntries = std::map<std::string, std::string>;

/// Reads `key = value` lines. '#' starts a comment; blank lines are
/// ignored; a key may appear only once per source.
inline ConfigEntries read_config_entries(std::istream& in) {
  ConfigEntries out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = detail::trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(detail::trim(view.substr(0, eq)));
    const std::string value(detail::trim(view.substr(eq + 1)));
    if (key.empty()) throw ConfigError("", "line " + std::to_string(line_no) + ": empty key");
    if (value.empty()) throw ConfigError(key, "key '" + key + "': empty value");
    if (!out.emplace(key, value).second) {
      throw ConfigError(key, "key '" + key + "': given more than once");
    }
  }
  return out;
}

/// Builds and validates a RunConfig. Unknown keys are rejected.
inline RunConfig make_run_config(const ConfigEntries& entries) {
  RunConfig cfg;
  bool have_command = false, have_xi = false, have_output = false, have_t = false, have_steps = false;
  for (const auto& [key, value] : entries) {
    if (key == "command") {
      cfg.command = detail::parse_command(value);
      have_command = true;
    } else if (key == "xi") {
      cfg.xi = detail::parse_double(key, value);
      have_xi = true;
    } else if (key == "z_abs") {
      cfg.z_abs = detail::parse_double(key, value);
    } else if (key == "pz") {
      cfg.pz = detail::parse_double(key, value);
    } else if (key == "cutoff") {
      cfg.cutoff = detail::parse_int(key, value);
    } else if (key == "t_max") {
      cfg.t_max = detail::parse_double(key, value);
      have_t = true;
    } else if (key == "n_steps") {
      cfg.n_steps = detail::parse_int(key, value);
      have_steps = true;
    } else if (key == "output") {
      cfg.output_path = value;
      have_output = true;
    } else if (key == "branch") {
      if (value == "plus") {
        cfg.branch = Sign::plus;
      } else if (value == "minus") {
        cfg.branch = Sign::minus;
      } else {
        throw ConfigError(key, "key 'branch': expected plus or minus");
      }
    } else if (key == "resolution") {
      cfg.resolution = detail::parse_int(key, value);
    } else {
      throw ConfigError(key, "unknown key '" + key + "'");
    }
  }
  if (!have_command) throw ConfigError("command", "missing required key 'command'");
  if (!have_xi) throw ConfigError("xi", "missing required key 'xi'");
  if (!have_output) throw ConfigError("output", "missing required key 'output'");
  if (!(cfg.xi > 0.0)) throw ConfigError("xi", "key 'xi': must be > 0");
  if (cfg.z_abs < 0.0) throw ConfigError("z_abs", "key 'z_abs': must be >= 0");
  if (cfg.cutoff && *cfg.cutoff < 1) throw ConfigError("cutoff", "key 'cutoff': must be >= 1");
  if (cfg.resolution < 2) throw ConfigError("resolution", "key 'resolution': must be >= 2");

  const bool timed = cfg.command == Command::evolve || cfg.command == Command::trajectory;
  if (timed) {
    if (!have_t) throw ConfigError("t_max", "missing required key 't_max'");
    if (!have_steps) throw ConfigError("n_steps", "missing required key 'n_steps'");
    if (!(cfg.t_max > 0.0)) throw ConfigError("t_max", "key 't_max': must be > 0");
    if (cfg.n_steps < 1) throw ConfigError("n_steps", "key 'n_steps': must be >= 1");
  }
  const bool needs_field = cfg.command == Command::trajectory || cfg.command == Command::cat ||
                           cfg.command == Command::husimi;
  if (needs_field && !(cfg.z_abs > 0.0)) {
    throw ConfigError("z_abs", "key 'z_abs': must be > 0 for this command");
  }
  return cfg;
}

inline std::string format_csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

namespace detail {

inline void write_row(std::ostream& os, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) os << ',';
    os << format_csv_number(v);
    first = false;
  }
  os << '\n';
}

inline std::vector<double> time_grid(const RunConfig& cfg) {
  std::vector<double> ts(static_cast<std::size_t>(cfg.n_steps) + 1);
  for (int k = 0; k <= cfg.n_steps; ++k) ts[k] = cfg.t_max * k / cfg.n_steps;
  return ts;
}

inline void require_coherent_fits(const ModelParams& p, double z_abs) {
  const int required = coherent_required_cutoff(z_abs);
  if (p.cutoff < required) {
    throw TruncationError("key 'cutoff': " + std::to_string(p.cutoff) + " is below the coherent-state guard " +
                              std::to_string(required) + " for z_abs",
                          required);
  }
}

}  // namespace detail

/// Relativistic levels n_r = 0..cutoff-1: p_z = 0 frame, boosted to pz,
/// and the non-relativistic approximation 1 + 2 xi (n_r + 1).
inline void write_spectrum(std::ostream& os, const RunConfig& cfg) {
  const ModelParams p = cfg.params();
  os << "n_r,E_plus_rest_frame,E_plus_boosted,E_nonrel_approx\n";
  for (int n = 0; n < p.cutoff; ++n) {
    os << n << ',' << format_csv_number(landau_energy(p, n, Sign::plus)) << ','
       << format_csv_number(boosted_energy(p, n, Sign::plus)) << ','
       << format_csv_number(1.0 + p.cyclotron() * (n + 1)) << '\n';
  }
}

/// Exact evolution of |i z_abs> chi_{1 up}.
inline void write_evolution(std::ostream& os, const RunConfig& cfg) {
  const ModelParams p = cfg.params();
  detail::require_coherent_fits(p, cfg.z_abs);
  const EvolutionPlan plan(p);
  const DiracState psi0 =
      DiracState::product(embed_jc(Spinor2(1.0, 0.0)), coherent_vector(start_amplitude(cfg.z_abs), p.cutoff));
  const auto ts = detail::time_grid(cfg);
  struct Row {
    std::array<double, 4> pops;
    double norm, energy, purity;
  };
  std::vector<Row> rows(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) {
    const DiracState s = evolve(psi0, plan, ts[i]);
    rows[i] = {spin_populations(s), std::sqrt(s.squared_norm()), energy_expectation(p, s),
               purity(reduced_density(s, Subsystem::spinor))};
  });
  os << "t,pop1,pop2,pop3,pop4,norm,energy,spinor_purity\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Row& r = rows[i];
    detail::write_row(os, {ts[i], r.pops[0], r.pops[1], r.pops[2], r.pops[3], r.norm, r.energy, r.purity});
  }
}

/// Exact position expectation of |branch E_z>|i z_abs> against the
/// rotated-coherent circle.
inline void write_trajectory(std::ostream& os, const RunConfig& cfg) {
  const ModelParams p = cfg.params();
  detail::require_coherent_fits(p, cfg.z_abs);
  const Complex z = start_amplitude(cfg.z_abs);
  const auto sc = semiclassical_eigenspinors(p, z);
  const Spinor2& spinor = cfg.branch == Sign::plus ? sc.plus : sc.minus;
  const DiracState psi0 = DiracState::product(embed_jc(spinor), coherent_vector(z, p.cutoff));
  const EvolutionPlan plan(p);
  const auto ts = detail::time_grid(cfg);
  std::vector<PlanePoint> exact(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) { exact[i] = position_expectation(evolve(psi0, plan, ts[i])); });
  os << "t,x_exact,y_exact,x_asym,y_asym\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const PlanePoint asym = trajectory(p, z, cfg.branch, ts[i]);
    detail::write_row(os, {ts[i], exact[i].x, exact[i].y, asym.x, asym.y});
  }
}

/// Cat summary for |i z_abs> chi_{1 up}.
inline void write_cat(std::ostream& os, const RunConfig& cfg, std::ostream* warnings = nullptr) {
  const ModelParams p = cfg.params();
  detail::require_coherent_fits(p, cfg.z_abs);
  const Complex z = start_amplitude(cfg.z_abs);
  const double n_bar = cfg.z_abs * cfg.z_abs;
  const auto sched = cat_schedule(p, z);
  const DiracCat cat = dirac_cat(p, z);
  if (!cat.ultra_relativistic && warnings) {
    *warnings << "warning: 4*xi*z_abs^2 = " << format_csv_number(4.0 * p.xi * n_bar)
              << " < 10, spinor branches stay distinguishable and the cat coherence is suppressed\n";
  }
  const DiracState composite = mesoscopic_composite(p, z, sched.t_d);
  const double coherence = coherence_magnitude(composite, cat.plus_component, cat.minus_component);
  // the two components sit at z exp(-+i pi/2): |<o+|o->| = exp(-2|z|^2)
  const double component_overlap = std::exp(-2.0 * n_bar);
  os << "t_R,t_d,spinor_overlap,component_overlap,coherence_magnitude,regime_label,plus_weight,minus_weight\n";
  os << format_csv_number(sched.t_R) << ',' << format_csv_number(sched.t_d) << ','
     << format_csv_number(measured_spinor_overlap(p, z)) << ',' << format_csv_number(component_overlap) << ','
     << format_csv_number(coherence) << ',' << regime_label(classify_regime(n_bar)) << ','
     << format_csv_number(cat.plus_weight) << ',' << format_csv_number(cat.minus_weight) << '\n';
}

/// Husimi Q of the orbital reduction of the exactly evolved
/// |i z_abs> chi_{1 up} at the cat time.
inline PhaseSpaceGrid cat_time_husimi(const RunConfig& cfg) {
  const ModelParams p = cfg.params();
  detail::require_coherent_fits(p, cfg.z_abs);
  const Complex z = start_amplitude(cfg.z_abs);
  const DiracState psi0 = DiracState::product(embed_jc(Spinor2(1.0, 0.0)), coherent_vector(z, p.cutoff));
  const DiracState at_cat = evolve(psi0, EvolutionPlan(p), cat_schedule(p, z).t_d);
  return husimi_q(reduced_density(at_cat, Subsystem::orbital), default_grid(cfg.z_abs, cfg.resolution));
}

inline void write_output(std::ostream& os, const RunConfig& cfg, std::ostream* warnings = nullptr) {
  switch (cfg.command) {
    case Command::spectrum: write_spectrum(os, cfg); break;
    case Command::evolve: write_evolution(os, cfg); break;
    case Command::trajectory: write_trajectory(os, cfg); break;
    case Command::cat: write_cat(os, cfg, warnings); break;
    case Command::husimi: {
      const PhaseSpaceGrid g = cat_time_husimi(cfg);
      if (!g.normalized && warnings) {
        *warnings << "warning: husimi grid integrates to " << format_csv_number(g.integral)
                  << ", grid does not cover the state\n";
      }
      write_grid(os, g);
      break;
    }
  }
}

/// Runs `cfg`, writing cfg.output_path. Errors are reported as one line on
/// `diag` and mapped to ExitCode values.
inline int run(const RunConfig& cfg, std::ostream& diag) {
  try {
    std::ostringstream buffer;
    write_output(buffer, cfg, &diag);
    std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw OutputError("cannot open output '" + cfg.output_path + "'");
    out << buffer.str();
    out.flush();
    if (!out) throw OutputError("failed writing output '" + cfg.output_path + "'");
    return kExitOk;
  } catch (const ConfigError& e) {
    diag << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const TruncationError& e) {
    diag << "truncation error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const OutputError& e) {
    diag << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace diraccat
