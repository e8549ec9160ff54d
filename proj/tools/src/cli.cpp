#include "fnls_cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>

#include "fnls/errors.hpp"
#include "fnls/initial_data.hpp"
#include "fnls/norms.hpp"
#include "fnls/verify.hpp"

namespace fnls::cli {

namespace {

// Flat key=value config: every key belongs to the selected subcommand, and
// commas stay inside values so "init=plane:a=0.1,k=2" survives.
class FlatConfig : public CLI::ConfigBase {
 public:
  explicit FlatConfig(const CLI::App* app) : app_(app) { arraySeparator = '\0'; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigBase::from_config(input);
    const auto selected = app_->get_subcommands();
    if (!selected.empty()) {
      for (auto& item : items) {
        if (item.parents.empty()) item.parents = {selected.front()->get_name()};
      }
    }
    return items;
  }

 private:
  const CLI::App* app_;
};

std::string join(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : ",") + format_double(x);
  return s;
}

NonlinearPhase parse_phase(const std::string& name) {
  if (name == "dealiased") return NonlinearPhase::dealiased;
  if (name == "pointwise") return NonlinearPhase::pointwise;
  throw ValidationError("unknown nonlinear phase '" + name + "' (dealiased or pointwise)");
}

Report sim_report(const SimConfig& c) {
  Report r;
  r.set("alpha", c.alpha);
  r.set("gamma", c.gamma);
  r.set("nx", c.grid.nx());
  r.set("length", c.grid.length());
  r.set("dt", c.dt);
  r.set("t-final", c.t_final);
  r.set("record-every", c.record_every);
  r.set("cfl", c.cfl_factor);
  r.set("phase", c.phase == NonlinearPhase::dealiased ? "dealiased" : "pointwise");
  r.set("check-wraparound", c.check_wraparound);
  return r;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot open '" + path + "' for writing");
  return f;
}

void emit(std::ostream& out, const RunConfig& cfg, const Report& report) {
  write_header(out, cfg.to_report());
  write_report(out, report);
}

void write_scan_file(const std::string& path, const RunConfig& cfg, const ScanResult& scan) {
  auto f = open_output(path);
  write_header(f, cfg.to_report());
  write_scan_csv(f, scan);
}

// "dir/wp.csv" -> "dir/wp_s0.25.csv"
std::string suffixed(const std::string& path, const std::string& suffix) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out) {
  const Trajectory traj = evolve(make_initial_data(cfg.init, cfg.sim.grid), cfg.sim);
  Report r;
  const double m0 = mass(traj.states.front());
  const double h0 = hamiltonian(traj.states.front(), cfg.sim.alpha, cfg.sim.gamma);
  double mass_drift = 0.0, energy_drift = 0.0;
  for (const auto& f : traj.states) {
    const double dm = std::abs(mass(f) - m0);
    const double dh = std::abs(hamiltonian(f, cfg.sim.alpha, cfg.sim.gamma) - h0);
    mass_drift = std::max(mass_drift, m0 != 0.0 ? dm / std::abs(m0) : dm);
    energy_drift = std::max(energy_drift, h0 != 0.0 ? dh / std::abs(h0) : dh);
  }
  r.set("records", traj.size());
  r.set("steps", cfg.sim.step_count());
  r.set("mass_initial", m0);
  r.set("energy_initial", h0);
  r.set("mass_drift", mass_drift);
  r.set("energy_drift", energy_drift);
  if (!cfg.out.empty()) {
    auto f = open_output(cfg.out);
    write_header(f, cfg.to_report());
    write_trajectory_csv(f, traj);
  }
  emit(out, cfg, r);
  return kOk;
}

int cmd_picard(const RunConfig& cfg, std::ostream& out) {
  const Field phi = make_initial_data(cfg.init, cfg.sim.grid);
  const PicardResult p = picard_iterate(phi, cfg.sim, cfg.iterations);
  SimConfig split = cfg.sim;
  split.record_every = split.step_count() + 1;
  const Field reference = evolve(phi, split).final_state();
  Report r;
  r.set("iterations", p.differences.size());
  for (std::size_t j = 0; j < p.differences.size(); ++j) {
    r.set("difference." + std::to_string(j + 1), p.differences[j]);
  }
  for (std::size_t j = 0; j < p.ratios.size(); ++j) r.set("ratio." + std::to_string(j + 2), p.ratios[j]);
  const double ref_norm = std::sqrt(mass(reference));
  const double gap = sobolev_distance(p.final_state, reference, 0.0);
  r.set("split_step_agreement", ref_norm > 0.0 ? gap / ref_norm : gap);
  if (!cfg.out.empty()) {
    Trajectory last;
    last.times = {cfg.sim.t_final};
    last.states = {as_physical(p.final_state)};
    last.config = cfg.sim;
    auto f = open_output(cfg.out);
    write_header(f, cfg.to_report());
    write_trajectory_csv(f, last);
  }
  emit(out, cfg, r);
  return kOk;
}

int cmd_trilinear(const RunConfig& cfg, std::ostream& out) {
  const TrilinearScan scan =
      scan_trilinear(cfg.tri_alpha, cfg.tri_s, cfg.tri_b, cfg.tri_n, cfg.xi_samples, cfg.tau_samples);
  if (!cfg.out.empty()) write_scan_file(cfg.out, cfg, scan.ratio);
  emit(out, cfg, scan.to_report());
  return kOk;
}

int cmd_remainder(const RunConfig& cfg, std::ostream& out) {
  const RemainderScan scan = scan_remainder(cfg.rem_alpha, cfg.rem_n, cfg.xi_max, cfg.samples);
  if (!cfg.out.empty()) write_scan_file(cfg.out, cfg, scan.scan);
  emit(out, cfg, scan.to_report());
  return kOk;
}

int cmd_wavepacket(const RunConfig& cfg, std::ostream& out) {
  const auto scans = scan_wavepacket(cfg.wp_s, cfg.wp_m, cfg.packet, Grid(cfg.wp_grid.nx, cfg.wp_grid.length));
  Report r;
  for (std::size_t i = 0; i < scans.size(); ++i) {
    const std::string tag = "s" + format_double(cfg.wp_s[i]);
    r.merge(tag + ".", scan_summary(scans[i]));
    if (!cfg.out.empty()) {
      write_scan_file(scans.size() == 1 ? cfg.out : suffixed(cfg.out, "_" + tag), cfg, scans[i]);
    }
  }
  emit(out, cfg, r);
  return kOk;
}

int cmd_approx(const RunConfig& cfg, std::ostream& out) {
  const ScanResult scan = run_approximation_error(cfg.approx);
  if (!cfg.out.empty()) write_scan_file(cfg.out, cfg, scan);
  Report r = scan_summary(scan);
  bool decreasing = true;
  for (std::size_t i = 1; i < scan.points.size(); ++i) {
    decreasing = decreasing && scan.points[i].value < scan.points[i - 1].value;
  }
  r.set("strictly_decreasing", decreasing);
  emit(out, cfg, r);
  return kOk;
}

int cmd_illposed(const RunConfig& cfg, std::ostream& out) {
  const IllposedResult res = run_illposedness_demo(cfg.ill);
  if (!cfg.out.empty()) {
    auto f = open_output(cfg.out);
    emit(f, cfg, res.to_report());
  }
  emit(out, cfg, res.to_report());
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  Report r;
  bool all = true;
  write_header(out, cfg.to_report());
  for (const auto& gate : all_gates()) {
    if (!cfg.gates.empty() && std::find(cfg.gates.begin(), cfg.gates.end(), gate.id) == cfg.gates.end()) continue;
    const GateResult g = gate.run();
    out << g.summary_line() << '\n' << std::flush;
    const std::string tag = "gate" + std::to_string(g.id) + ".";
    r.set(tag + "name", g.name);
    r.set(tag + "passed", g.passed);
    r.set(tag + "seconds", g.seconds);
    r.merge(tag, g.measurements);
    all = all && g.passed;
  }
  r.set("all_passed", all);
  if (!cfg.out.empty()) {
    auto f = open_output(cfg.out);
    emit(f, cfg, r);
  }
  return all ? kOk : kRuntime;
}

void add_sim_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--alpha", cfg.sim.alpha, "Levy index in (1, 2]")->capture_default_str();
  sub->add_option("--gamma", cfg.sim.gamma, "cubic coefficient")->capture_default_str();
  sub->add_option("--nx", cfg.sim_grid.nx, "grid points (power of two)")->capture_default_str();
  sub->add_option("--length", cfg.sim_grid.length, "period L")->capture_default_str();
  sub->add_option("--dt", cfg.sim.dt, "time step")->capture_default_str();
  sub->add_option("--t-final", cfg.sim.t_final, "final time")->capture_default_str();
  sub->add_option("--record-every", cfg.sim.record_every, "steps between records")->capture_default_str();
  sub->add_option("--cfl", cfg.sim.cfl_factor, "accuracy guard factor")->capture_default_str();
  sub->add_option("--phase", cfg.phase, "dealiased or pointwise")->capture_default_str();
  sub->add_flag("--check-wraparound", cfg.sim.check_wraparound, "check edge mass at every record");
  sub->add_option("--init", cfg.init, "initial data, e.g. plane:a=0.1,k=2")->capture_default_str();
}

void add_common(CLI::App* sub, RunConfig& cfg, const char* out_help) {
  sub->add_option("--out", cfg.out, out_help);
  sub->add_option("--seed", cfg.seed, "recorded for reproducibility; all pipelines are deterministic")
      ->capture_default_str();
}

void add_slow_fast(CLI::App* sub, GridFlags& y, GridFlags& x, std::string& profile, double& width) {
  sub->add_option("--y-nx", y.nx, "profile grid points")->capture_default_str();
  sub->add_option("--y-length", y.length, "profile grid period")->capture_default_str();
  sub->add_option("--nx", x.nx, "fractional grid points")->capture_default_str();
  sub->add_option("--length", x.length, "fractional grid period")->capture_default_str();
  sub->add_option("--profile", profile, "gaussian or sech")->capture_default_str();
  sub->add_option("--width", width, "envelope width")->capture_default_str();
}

}  // namespace

void RunConfig::resolve() {
  sim.grid = Grid(sim_grid.nx, sim_grid.length);
  sim.phase = parse_phase(phase);
  packet.envelope = parse_envelope(envelope);
  approx.y_grid = Grid(approx_y.nx, approx_y.length);
  approx.x_grid = Grid(approx_x.nx, approx_x.length);
  approx.shape = parse_profile(approx_profile);
  ill.y_grid = Grid(ill_y.nx, ill_y.length);
  ill.x_grid = Grid(ill_x.nx, ill_x.length);
  ill.shape = parse_profile(ill_profile);
  if (command == "evolve" || command == "picard") sim.validate();
  for (int id : gates) {
    if (id < 1 || id > static_cast<int>(all_gates().size())) {
      throw ValidationError("unknown gate " + std::to_string(id));
    }
  }
}

Report RunConfig::to_report() const {
  Report r;
  r.set("command", command);
  if (!config_path.empty()) r.set("config", config_path);
  r.set("seed", seed);
  if (command == "evolve" || command == "picard") {
    r.merge("", sim_report(sim));
    r.set("init", init);
    if (command == "picard") r.set("iterations", iterations);
  } else if (command == "scan-trilinear") {
    r.set("alpha", tri_alpha);
    r.set("s", tri_s);
    r.set("b", tri_b);
    r.set("n", join(tri_n));
    r.set("xi-samples", xi_samples);
    r.set("tau-samples", tau_samples);
  } else if (command == "scan-remainder") {
    r.set("alpha", rem_alpha);
    r.set("n", join(rem_n));
    r.set("xi-max", xi_max);
    r.set("samples", samples);
  } else if (command == "scan-wavepacket") {
    r.set("s", join(wp_s));
    r.set("m", join(wp_m));
    r.set("amplitude", packet.amplitude);
    r.set("tau", packet.tau_scale);
    r.set("x0", packet.x0);
    r.set("sigma", packet.sigma);
    r.set("envelope", envelope);
    r.set("nx", wp_grid.nx);
    r.set("length", wp_grid.length);
  } else if (command == "approx-error") {
    r.merge("", approx.to_report());
  } else if (command == "illposed") {
    r.merge("", ill.to_report());
  } else if (command == "verify") {
    std::string ids;
    for (int id : gates) ids += (ids.empty() ? "" : ",") + std::to_string(id);
    r.set("only", ids.empty() ? "all" : ids);
  }
  return r;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,x,re,im\n";
  for (std::size_t r = 0; r < traj.size(); ++r) {
    const Field f = as_physical(traj.states[r]);
    const Grid& g = f.grid();
    const std::string t = format_double(traj.times[r]);
    for (std::size_t j = 0; j < g.nx(); ++j) {
      os << t << ',' << format_double(g.x(j)) << ',' << format_double(f[j].real()) << ','
         << format_double(f[j].imag()) << '\n';
    }
  }
}

int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Fractional cubic Schrodinger toolkit", "fnls"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value file keyed by flag names; flags win");
  app.config_formatter(std::make_shared<FlatConfig>(&app));
  app.allow_config_extras(CLI::config_extras_mode::error);

  auto* evolve_cmd = app.add_subcommand("evolve", "split-step evolution; writes a t,x,re,im trajectory CSV");
  add_sim_options(evolve_cmd, cfg);
  add_common(evolve_cmd, cfg, "trajectory CSV");

  auto* picard_cmd = app.add_subcommand("picard", "Picard iteration of the Duhamel formula");
  add_sim_options(picard_cmd, cfg);
  picard_cmd->add_option("--iterations", cfg.iterations, "number of iterations")->capture_default_str();
  add_common(picard_cmd, cfg, "final state CSV");

  auto* tri_cmd = app.add_subcommand("scan-trilinear", "resonant-box trilinear ratio against N");
  tri_cmd->add_option("--alpha", cfg.tri_alpha, "Levy index in (1, 2)")->capture_default_str();
  tri_cmd->add_option("--s", cfg.tri_s, "regularity")->capture_default_str();
  tri_cmd->add_option("--b", cfg.tri_b, "modulation exponent")->capture_default_str();
  tri_cmd->add_option("--n", cfg.tri_n, "comma-separated N list")->delimiter(',')->capture_default_str();
  tri_cmd->add_option("--xi-samples", cfg.xi_samples, "xi samples per box width")->capture_default_str();
  tri_cmd->add_option("--tau-samples", cfg.tau_samples, "tau samples per unit")->capture_default_str();
  add_common(tri_cmd, cfg, "ratio scan CSV");

  auto* rem_cmd = app.add_subcommand("scan-remainder", "sup |R(xi)|/|xi|^3 against N");
  rem_cmd->add_option("--alpha", cfg.rem_alpha, "Levy index in (1, 2)")->capture_default_str();
  rem_cmd->add_option("--n", cfg.rem_n, "comma-separated N list")->delimiter(',')->capture_default_str();
  rem_cmd->add_option("--xi-max", cfg.xi_max, "sampled range 0 < |xi| <= xi-max")->capture_default_str();
  rem_cmd->add_option("--samples", cfg.samples, "samples per sign")->capture_default_str();
  add_common(rem_cmd, cfg, "scan CSV");

  auto* wp_cmd = app.add_subcommand("scan-wavepacket", "H^s norm of modulated wavepackets against M");
  wp_cmd->add_option("--s", cfg.wp_s, "comma-separated regularities")->delimiter(',')->capture_default_str();
  wp_cmd->add_option("--m", cfg.wp_m, "comma-separated carriers")->delimiter(',')->capture_default_str();
  wp_cmd->add_option("--amplitude", cfg.packet.amplitude)->capture_default_str();
  wp_cmd->add_option("--tau", cfg.packet.tau_scale, "envelope scale")->capture_default_str();
  wp_cmd->add_option("--x0", cfg.packet.x0, "envelope center")->capture_default_str();
  wp_cmd->add_option("--sigma", cfg.packet.sigma, "assumed envelope regularity")->capture_default_str();
  wp_cmd->add_option("--envelope", cfg.envelope, "gaussian or bump")->capture_default_str();
  wp_cmd->add_option("--nx", cfg.wp_grid.nx)->capture_default_str();
  wp_cmd->add_option("--length", cfg.wp_grid.length)->capture_default_str();
  add_common(wp_cmd, cfg, "scan CSV (one file per s, suffixed _s<value>)");

  auto* approx_cmd = app.add_subcommand("approx-error", "sup_t ||u - V|| against N");
  approx_cmd->add_option("--alpha", cfg.approx.alpha, "Levy index in (1, 2)")->capture_default_str();
  approx_cmd->add_option("--gamma", cfg.approx.gamma)->capture_default_str();
  approx_cmd->add_option("--n", cfg.approx.n_list, "comma-separated N list")->delimiter(',')->capture_default_str();
  approx_cmd->add_option("--epsilon", cfg.approx.epsilon, "profile amplitude")->capture_default_str();
  approx_cmd->add_option("--t-final", cfg.approx.t_final)->capture_default_str();
  approx_cmd->add_option("--dt", cfg.approx.dt)->capture_default_str();
  approx_cmd->add_option("--record-every", cfg.approx.record_every)->capture_default_str();
  add_slow_fast(approx_cmd, cfg.approx_y, cfg.approx_x, cfg.approx_profile, cfg.approx.width);
  add_common(approx_cmd, cfg, "scan CSV");

  auto* ill_cmd = app.add_subcommand("illposed", "two-datum separation experiment");
  ill_cmd->add_option("--alpha", cfg.ill.alpha, "Levy index in (1, 2)")->capture_default_str();
  ill_cmd->add_option("--gamma", cfg.ill.gamma)->capture_default_str();
  ill_cmd->add_option("--s", cfg.ill.s, "regularity")->capture_default_str();
  ill_cmd->add_option("--epsilon", cfg.ill.epsilon, "data size")->capture_default_str();
  ill_cmd->add_option("--delta", cfg.ill.delta, "data separation")->capture_default_str();
  ill_cmd->add_option("--t-final", cfg.ill.t_final, "time window after rescaling")->capture_default_str();
  ill_cmd->add_option("--n", cfg.ill.n, "carrier frequency N")->capture_default_str();
  ill_cmd->add_option("--dt", cfg.ill.dt, "time step in slow time")->capture_default_str();
  ill_cmd->add_option("--record-every", cfg.ill.record_every)->capture_default_str();
  add_slow_fast(ill_cmd, cfg.ill_y, cfg.ill_x, cfg.ill_profile, cfg.ill.width);
  add_common(ill_cmd, cfg, "report file");

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance gates");
  verify_cmd->add_option("--only", cfg.gates, "comma-separated gate ids")->delimiter(',');
  add_common(verify_cmd, cfg, "report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kValidation;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (auto* opt = app.get_option("--config"); opt->count() > 0) cfg.config_path = opt->as<std::string>();

  try {
    cfg.resolve();
    if (cfg.command == "evolve") return cmd_evolve(cfg, out);
    if (cfg.command == "picard") return cmd_picard(cfg, out);
    if (cfg.command == "scan-trilinear") return cmd_trilinear(cfg, out);
    if (cfg.command == "scan-remainder") return cmd_remainder(cfg, out);
    if (cfg.command == "scan-wavepacket") return cmd_wavepacket(cfg, out);
    if (cfg.command == "approx-error") return cmd_approx(cfg, out);
    if (cfg.command == "illposed") return cmd_illposed(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kRuntime;
  }
}

}  // namespace fnls::cli
