#include "fnls/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>

#include "fnls/evolution.hpp"
#include "fnls/experiments.hpp"
#include "fnls/initial_data.hpp"
#include "fnls/norms.hpp"

namespace fnls {

namespace {

class Gate {
 public:
  Gate(int id, const char* name, double budget) {
    result_.id = id;
    result_.name = name;
    result_.budget_seconds = budget;
  }

  void require(bool ok, const std::string& what) {
    if (!ok && result_.failure.empty()) result_.failure = what;
  }

  Report& measurements() { return result_.measurements; }

  GateResult run(const std::function<void(Gate&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
      body(*this);
    } catch (const std::exception& e) {
      require(false, std::string("threw: ") + e.what());
    }
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(result_.seconds <= result_.budget_seconds,
            "runtime " + format_double(result_.seconds) + " s exceeds the budget");
    result_.passed = result_.failure.empty();
    return result_;
  }

 private:
  GateResult result_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

// Slope band plus the r^2 flag.
void require_fit(Gate& g, const std::string& label, const ScanResult& scan, double target, double tol) {
  g.measurements().merge(label + ".", scan_summary(scan));
  g.require(within(scan.fitted_slope, target, tol),
            label + " slope " + fmt(scan.fitted_slope) + " outside " + fmt(target) + " +- " + fmt(tol));
  g.require(!scan.flagged(), label + " r^2 " + fmt(scan.r_squared) + " below 0.98" +
                                 (scan.flat() ? " (zero-slope fit: values constant to within 1%)" : ""));
}

}  // namespace

std::string GateResult::summary_line() const {
  std::string line = std::string(passed ? "PASS" : "FAIL") + " [" + std::to_string(id) + "] " + name + " (" +
                     fmt(seconds) + " s / " + fmt(budget_seconds) + " s)";
  if (!failure.empty()) line += ": " + failure;
  return line;
}

GateResult gate_plane_wave() {
  return Gate(1, "plane-wave-oracle", 5.0).run([](Gate& g) {
    const double a = 0.1, k = 2.0, gamma = 1.0;
    for (double alpha : {1.2, 1.5, 1.8, 2.0}) {
      SimConfig cfg;
      cfg.alpha = alpha;
      cfg.gamma = gamma;
      cfg.dt = 1e-3;
      cfg.t_final = 1.0;
      cfg.grid = Grid(256, 2.0 * M_PI);
      cfg.record_every = cfg.step_count();
      const Field u = evolve(make_initial_data("plane:a=0.1,k=2", cfg.grid), cfg).final_state();
      const double omega = std::pow(k, alpha) - gamma * a * a;
      const Field exact = Field::from_function(
          cfg.grid, [&](double x) { return a * std::exp(Complex(0.0, k * x + omega * cfg.t_final)); });
      const double err = sobolev_distance(u, exact, 0.0) / std::sqrt(mass(exact));
      g.measurements().set("relative_error.alpha_" + fmt(alpha), err);
      g.require(err <= 1e-6, "alpha " + fmt(alpha) + ": relative error " + fmt(err) + " > 1e-6");
    }
  });
}

GateResult gate_conservation() {
  return Gate(2, "conservation", 10.0).run([](Gate& g) {
    SimConfig cfg;
    cfg.alpha = 1.5;
    cfg.gamma = 1.0;
    cfg.dt = 1e-2;
    cfg.t_final = 1.0;
    cfg.grid = Grid(256, 40.0);
    cfg.record_every = 10;
    const ConservationResult r = run_conservation_suite(cfg, make_initial_data("gaussian:a=1,w=1", cfg.grid));
    g.measurements() = r.to_report();
    g.require(r.mass_drift <= 1e-10 && r.mass_drift_half <= 1e-10,
              "mass drift " + fmt(std::max(r.mass_drift, r.mass_drift_half)) + " > 1e-10");
    g.require(r.energy_drift_ratio >= 3.0 && r.energy_drift_ratio <= 5.0,
              "energy drift ratio " + fmt(r.energy_drift_ratio) + " outside [3, 5]");
  });
}

GateResult gate_picard_cross_check() {
  return Gate(3, "picard-cross-check", 10.0).run([](Gate& g) {
    SimConfig cfg;
    cfg.alpha = 1.5;
    cfg.gamma = 1.0;
    cfg.dt = 1e-3;
    cfg.t_final = 0.1;
    cfg.grid = Grid(256, 20.0);
    const ConvergenceResult r = run_convergence_suite(cfg, make_initial_data("gaussian:a=0.1,w=1", cfg.grid), 12);
    g.measurements() = r.to_report();
    g.require(r.picard_agreement <= 1e-6, "Picard vs split-step " + fmt(r.picard_agreement) + " > 1e-6");
    std::size_t run = 1;
    while (run < r.picard_differences.size() && r.picard_differences[run] < r.picard_differences[run - 1]) ++run;
    g.measurements().set("monotone_decay_iterations", run);
    g.require(run >= 4, "Picard differences decay monotonically for only " + std::to_string(run) + " iterations");
  });
}

GateResult gate_trilinear() {
  return Gate(4, "trilinear-counterexample", 120.0).run([](Gate& g) {
    const double alpha = 1.5, b = 0.51;
    const std::vector<double> n_list{16, 32, 64, 128, 256};
    const double threshold = (2.0 - alpha) / 4.0;
    for (double s : {0.0, threshold}) {
      const TrilinearScan scan = scan_trilinear(alpha, s, b, n_list);
      const std::string tag = "s_" + fmt(s);
      const char* names[] = {"factor_u1", "factor_u2bar", "factor_u3"};
      for (std::size_t i = 0; i < scan.factors.size(); ++i) {
        require_fit(g, tag + "." + names[i], scan.factors[i], s + threshold, 0.15);
      }
      require_fit(g, tag + ".ratio", scan.ratio, (2.0 - alpha) / 2.0 - 2.0 * s, 0.15);
    }
  });
}

GateResult gate_remainder() {
  return Gate(5, "remainder-bound", 30.0).run([](Gate& g) {
    std::vector<double> n_list;
    for (int j = 4; j <= 10; ++j) n_list.push_back(std::ldexp(1.0, j));
    for (double alpha : {1.2, 1.5, 1.8}) {
      const RemainderScan r = scan_remainder(alpha, n_list, 1.0);
      const std::string tag = "alpha_" + fmt(alpha);
      require_fit(g, tag, r.scan, -0.5 * alpha, 0.1);
      g.measurements().set(tag + ".worst_bound_fraction", r.worst_bound_fraction);
      g.require(r.bound_holds, tag + ": a sample exceeds c1 N^{-alpha/2} |xi|^3");
    }
  });
}

GateResult gate_wavepacket() {
  return Gate(6, "wavepacket-scaling", 30.0).run([](Gate& g) {
    std::vector<double> m_list;
    for (int j = 4; j <= 9; ++j) m_list.push_back(std::ldexp(1.0, j));
    const std::vector<double> s_list{-0.25, 0.0, 0.25};
    WavepacketSpec spec;
    spec.tau_scale = 1.0;
    spec.envelope = Envelope::gaussian;
    const auto scans = scan_wavepacket(s_list, m_list, spec, Grid(16384, 64.0));
    for (std::size_t i = 0; i < s_list.size(); ++i) {
      require_fit(g, "s_" + fmt(s_list[i]), scans[i], s_list[i], 0.05);
    }
  });
}

GateResult gate_approximation_error() {
  return Gate(7, "approximation-error", 300.0).run([](Gate& g) {
    const ApproxErrorConfig cfg;
    const ScanResult scan = run_approximation_error(cfg);
    g.measurements().merge("config.", cfg.to_report());
    g.measurements().merge("fit.", scan_summary(scan));
    for (std::size_t i = 1; i < scan.points.size(); ++i) {
      g.require(scan.points[i].value < scan.points[i - 1].value,
                "error does not decrease from N=" + fmt(scan.points[i - 1].parameter) + " to N=" +
                    fmt(scan.points[i].parameter));
    }
    const double limit = -0.5 * cfg.alpha + 0.3;
    g.require(scan.fitted_slope <= limit, "slope " + fmt(scan.fitted_slope) + " > " + fmt(limit));
    g.require(!scan.flagged(), "r^2 " + fmt(scan.r_squared) + " below 0.98");
  });
}

GateResult gate_illposedness() {
  return Gate(8, "illposedness-demo", 300.0).run([](Gate& g) {
    const IllposedConfig cfg;
    const IllposedResult r = run_illposedness_demo(cfg);
    g.measurements().merge("config.", cfg.to_report());
    g.measurements().merge("result.", r.to_report());
    auto factor_two = [](double v, double target) { return v >= 0.5 * target && v <= 2.0 * target; };
    g.require(r.amplification >= 10.0, "amplification " + fmt(r.amplification) + " < 10");
    g.require(factor_two(r.data_norm_1, cfg.epsilon) && factor_two(r.data_norm_2, cfg.epsilon),
              "data norms " + fmt(r.data_norm_1) + ", " + fmt(r.data_norm_2) + " not within 2x of epsilon");
    g.require(factor_two(r.data_separation, cfg.delta),
              "data separation " + fmt(r.data_separation) + " not within 2x of delta");
  });
}

const std::vector<GateEntry>& all_gates() {
  static const std::vector<GateEntry> gates{
      {1, "plane-wave-oracle", gate_plane_wave},
      {2, "conservation", gate_conservation},
      {3, "picard-cross-check", gate_picard_cross_check},
      {4, "trilinear-counterexample", gate_trilinear},
      {5, "remainder-bound", gate_remainder},
      {6, "wavepacket-scaling", gate_wavepacket},
      {7, "approximation-error", gate_approximation_error},
      {8, "illposedness-demo", gate_illposedness},
  };
  return gates;
}

}  // namespace fnls
