#include "fnls/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fnls/errors.hpp"
#include "fnls/norms.hpp"
#include "fnls/parallel.hpp"
#include "fnls/spectral.hpp"
#include "fnls/symbols.hpp"

namespace fnls {

namespace {

double relative_drift(double value, double reference) {
  const double d = std::abs(value - reference);
  return reference != 0.0 ? d / std::abs(reference) : d;
}

double relative_l2(const Field& a, const Field& b) {
  const double ref = std::sqrt(mass(b));
  const double d = sobolev_distance(a, b, 0.0);
  return ref > 0.0 ? d / ref : d;
}

struct Drift {
  double mass = 0.0;
  double energy = 0.0;
};

Drift measure_drift(const Trajectory& traj) {
  const auto& cfg = traj.config;
  const double m0 = mass(traj.states.front());
  const double e0 = hamiltonian(traj.states.front(), cfg.alpha, cfg.gamma);
  Drift d;
  for (const auto& f : traj.states) {
    d.mass = std::max(d.mass, relative_drift(mass(f), m0));
    d.energy = std::max(d.energy, relative_drift(hamiltonian(f, cfg.alpha, cfg.gamma), e0));
  }
  return d;
}

void require_scan_list(const std::vector<double>& list, const char* what) {
  if (list.size() < 4) throw ValidationError(std::string(what) + " needs at least 4 values");
  for (double v : list) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(std::string(what) + " values must be positive");
  }
}

Field profile_field(Profile shape, double amplitude, double width, const Grid& grid) {
  return Field::from_function(grid, [=](double y) -> Complex {
    const double z = y / width;
    return amplitude * (shape == Profile::sech ? 1.0 / std::cosh(z) : std::exp(-0.5 * z * z));
  });
}

const char* profile_name(Profile p) { return p == Profile::sech ? "sech" : "gaussian"; }

}  // namespace

Report ConservationResult::to_report() const {
  Report r;
  r.set("mass_drift", mass_drift);
  r.set("mass_drift_half_dt", mass_drift_half);
  r.set("energy_drift", energy_drift);
  r.set("energy_drift_half_dt", energy_drift_half);
  r.set("energy_drift_ratio", energy_drift_ratio);
  return r;
}

ConservationResult run_conservation_suite(const SimConfig& cfg, const Field& init) {
  SimConfig half = cfg;
  half.dt = 0.5 * cfg.dt;
  half.record_every = 2 * cfg.record_every;
  const Drift coarse = measure_drift(evolve(init, cfg));
  const Drift fine = measure_drift(evolve(init, half));
  ConservationResult r;
  r.mass_drift = coarse.mass;
  r.mass_drift_half = fine.mass;
  r.energy_drift = coarse.energy;
  r.energy_drift_half = fine.energy;
  r.energy_drift_ratio = fine.energy > 0.0 ? coarse.energy / fine.energy : 0.0;
  return r;
}

Report TrilinearScan::to_report() const {
  Report r;
  r.merge("ratio.", scan_summary(ratio));
  r.merge("numerator.", scan_summary(numerator));
  const char* names[] = {"factor_u1.", "factor_u2bar.", "factor_u3."};
  for (std::size_t i = 0; i < factors.size() && i < 3; ++i) r.merge(names[i], scan_summary(factors[i]));
  return r;
}

TrilinearScan scan_trilinear(double alpha, double s, double b, const std::vector<double>& n_list,
                             int xi_samples_per_box, int tau_samples_per_unit) {
  require_scan_list(n_list, "scan_trilinear N list");
  struct Point {
    double numerator, f1, f2, f3;
  };
  const auto points = parallel_map<Point>(n_list.size(), [&](std::size_t k) {
    BoxSpec spec{n_list[k], alpha, xi_samples_per_box, tau_samples_per_unit, false};
    const SpaceTimeField u1 = box_data(spec);
    spec.conjugate = true;
    const SpaceTimeField u2bar = box_data(spec);
    const SpaceTimeField& u3 = u1;
    const SpaceTimeField out = trilinear_convolution(u1, u2bar, u3);
    return Point{xsb_norm(out, s, b - 1.0, alpha, Sign::minus), xsb_norm(u1, s, b, alpha, Sign::minus),
                 xsb_norm(u2bar, s, b, alpha, Sign::plus), xsb_norm(u3, s, b, alpha, Sign::minus)};
  });

  std::vector<ScanPoint> ratio, numerator, f1, f2, f3;
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    const Point& p = points[k];
    const double n = n_list[k];
    const double product = p.f1 * p.f2 * p.f3;
    ratio.push_back({n, p.numerator / product, p.numerator, product});
    numerator.push_back({n, p.numerator, s, b});
    f1.push_back({n, p.f1, s, b});
    f2.push_back({n, p.f2, s, b});
    f3.push_back({n, p.f3, s, b});
  }
  TrilinearScan scan;
  scan.ratio = fit_power_law("N", ratio);
  scan.numerator = fit_power_law("N", numerator);
  scan.factors = {fit_power_law("N", f1), fit_power_law("N", f2), fit_power_law("N", f3)};
  return scan;
}

Report RemainderScan::to_report() const {
  Report r = scan_summary(scan);
  r.set("bound_constant", bound_constant);
  r.set("worst_bound_fraction", worst_bound_fraction);
  r.set("bound_holds", bound_holds);
  return r;
}

RemainderScan scan_remainder(double alpha, const std::vector<double>& n_list, double xi_max,
                             std::size_t samples_per_side) {
  require_scan_list(n_list, "scan_remainder N list");
  if (!(xi_max > 0.0)) throw ValidationError("scan_remainder needs xi_max > 0");
  if (samples_per_side < 16) throw ValidationError("scan_remainder needs at least 16 samples per side");
  const double c1 = remainder_bound_constant(alpha);

  RemainderScan result;
  result.bound_constant = c1;
  result.bound_holds = true;
  std::vector<ScanPoint> points;
  for (double n : n_list) {
    const double bound = c1 * std::pow(n, -0.5 * alpha);
    double sup = 0.0;
    for (std::size_t j = 1; j <= samples_per_side; ++j) {
      const double xi = xi_max * static_cast<double>(j) / static_cast<double>(samples_per_side);
      for (double x : {xi, -xi}) {
        const double ratio = std::abs(remainder_symbol(alpha, n, x)) / std::abs(x * x * x);
        sup = std::max(sup, ratio);
        if (ratio > bound) result.bound_holds = false;
      }
    }
    result.worst_bound_fraction = std::max(result.worst_bound_fraction, sup / bound);
    points.push_back({n, sup, bound, sup / bound});
  }
  result.scan = fit_power_law("N", points);
  return result;
}

std::vector<ScanResult> scan_wavepacket(const std::vector<double>& s_list, const std::vector<double>& m_list,
                                        const WavepacketSpec& spec_template, const Grid& grid) {
  require_scan_list(m_list, "scan_wavepacket M list");
  if (s_list.empty()) throw ValidationError("scan_wavepacket needs at least one s");
  for (double s : s_list) {
    if (!(s > -0.5)) throw ValidationError("scan_wavepacket needs s > -1/2");
    for (double m : m_list) {
      WavepacketSpec spec = spec_template;
      spec.s = s;
      spec.carrier = m;
      if (!spec.hypotheses_hold()) {
        throw ValidationError("wavepacket hypotheses fail at s=" + format_double(s) + ", M=" + format_double(m));
      }
    }
  }
  WavepacketSpec unmodulated = spec_template;
  unmodulated.carrier = 0.0;
  const double envelope_norm = std::sqrt(mass(modulated_wavepacket(unmodulated, grid)));

  std::vector<ScanResult> out;
  for (double s : s_list) {
    const auto points = parallel_map<ScanPoint>(m_list.size(), [&](std::size_t k) {
      WavepacketSpec spec = spec_template;
      spec.s = s;
      spec.carrier = m_list[k];
      const Field f = modulated_wavepacket(spec, grid);
      if (spectral_tail_fraction(f) > 1e-16) {
        throw ResolutionError("wavepacket at M=" + format_double(spec.carrier) + " is not resolved by the grid");
      }
      const double value = sobolev_norm(f, s);
      const double reference = std::pow(spec.carrier, s) * envelope_norm;
      return ScanPoint{spec.carrier, value, reference, value / reference};
    });
    out.push_back(fit_power_law("M", points));
  }
  return out;
}

Report ApproxErrorConfig::to_report() const {
  Report r;
  r.set("alpha", alpha);
  r.set("gamma", gamma);
  std::string ns;
  for (double n : n_list) ns += (ns.empty() ? "" : ",") + format_double(n);
  r.set("n", ns);
  r.set("epsilon", epsilon);
  r.set("t_final", t_final);
  r.set("dt", dt);
  r.set("record_every", record_every);
  r.set("y_nx", y_grid.nx());
  r.set("y_length", y_grid.length());
  r.set("nx", x_grid.nx());
  r.set("length", x_grid.length());
  r.set("profile", profile_name(shape));
  r.set("width", width);
  return r;
}

ScanResult run_approximation_error(const ApproxErrorConfig& cfg) {
  require_scan_list(cfg.n_list, "approximation-error N list");
  if (!(cfg.epsilon > 0.0)) throw ValidationError("approximation error needs epsilon > 0");
  if (!(cfg.alpha > 1.0 && cfg.alpha < 2.0)) throw ValidationError("approximation error needs alpha in (1, 2)");
  const double s_err = (2.0 - cfg.alpha) / 4.0;

  const auto points = parallel_map<ScanPoint>(cfg.n_list.size(), [&](std::size_t k) {
    const double n = cfg.n_list[k];
    SimConfig slow;
    slow.alpha = 2.0;
    slow.gamma = cfg.gamma;
    slow.dt = cfg.dt;
    slow.t_final = cfg.t_final;
    slow.grid = cfg.y_grid;
    slow.record_every = cfg.record_every;
    const Trajectory v = evolve(profile_field(cfg.shape, cfg.epsilon, cfg.width, cfg.y_grid), slow);
    const Trajectory big_v = approximate_solution(v, n, cfg.alpha, cfg.x_grid);

    SimConfig fast = slow;
    fast.alpha = cfg.alpha;
    fast.grid = cfg.x_grid;
    fast.check_wraparound = true;
    const Trajectory u = evolve(big_v.states.front(), fast);
    if (u.size() != big_v.size()) throw RuntimeFailure("approximation error: record lattices differ");

    double sup_err = 0.0, sup_norm = 0.0;
    for (std::size_t r = 0; r < u.size(); ++r) {
      sup_err = std::max(sup_err, sobolev_distance(u.states[r], big_v.states[r], s_err));
      sup_norm = std::max(sup_norm, sobolev_norm(big_v.states[r], s_err));
    }
    const double last = sobolev_distance(u.final_state(), big_v.final_state(), s_err);
    return ScanPoint{n, sup_err, sup_norm, last};
  });
  return fit_power_law("N", points);
}

Report ConvergenceResult::to_report() const {
  Report r;
  r.set("strang_error", strang_error);
  r.set("strang_error_half_dt", strang_error_half);
  r.set("strang_order", strang_order);
  r.set("picard_agreement", picard_agreement);
  r.set("picard_iterations", picard_differences.size());
  r.set("picard_last_difference", picard_differences.empty() ? 0.0 : picard_differences.back());
  r.set("linear_error", linear_error);
  return r;
}

ConvergenceResult run_convergence_suite(const SimConfig& cfg, const Field& init, int picard_iterations) {
  cfg.validate();
  ConvergenceResult r;
  auto final_at = [&](double dt) {
    SimConfig c = cfg;
    c.dt = dt;
    c.record_every = c.step_count() + 1;
    return evolve(init, c).final_state();
  };
  const Field u1 = final_at(cfg.dt);
  const Field u2 = final_at(0.5 * cfg.dt);
  const Field u4 = final_at(0.25 * cfg.dt);
  r.strang_error = sobolev_distance(u1, u2, 0.0);
  r.strang_error_half = sobolev_distance(u2, u4, 0.0);
  r.strang_order = r.strang_error_half > 0.0 ? std::log2(r.strang_error / r.strang_error_half) : 0.0;

  const PicardResult p = picard_iterate(init, cfg, picard_iterations);
  r.picard_differences = p.differences;
  r.picard_agreement = relative_l2(as_physical(p.final_state), u1);

  SimConfig linear = cfg;
  linear.gamma = 0.0;
  linear.record_every = linear.step_count() + 1;
  r.linear_error = relative_l2(evolve(init, linear).final_state(), linear_propagate(init, cfg.alpha, cfg.t_final));
  return r;
}

}  // namespace fnls
