#pragma once

#include <vector>

#include "fnls/constructions.hpp"
#include "fnls/evolution.hpp"
#include "fnls/fit.hpp"
#include "fnls/report.hpp"

namespace fnls {

// Mass and energy drift at dt and dt/2, the energy being the conserved
// hamiltonian(). Drifts are max_t |Q(t) - Q(0)| / |Q(0)|
// over the records (absolute when Q(0) = 0).
struct ConservationResult {
  double mass_drift = 0.0;
  double mass_drift_half = 0.0;
  double energy_drift = 0.0;
  double energy_drift_half = 0.0;
  double energy_drift_ratio = 0.0;  // energy_drift / energy_drift_half

  Report to_report() const;
};

ConservationResult run_conservation_suite(const SimConfig& cfg, const Field& init);

// Resonant-box scan. numerator = ||F1 * F2bar * F3||_{X^{s,b-1}} (minus sign),
// factors = ||F1||, ||F2bar|| (plus sign), ||F3|| in X^{s,b}, ratio =
// numerator / product of factors.
struct TrilinearScan {
  ScanResult ratio;
  ScanResult numerator;
  std::vector<ScanResult> factors;

  Report to_report() const;
};

TrilinearScan scan_trilinear(double alpha, double s, double b, const std::vector<double>& n_list,
                             int xi_samples_per_box = 16, int tau_samples_per_unit = 8);

// sup_{0<|xi|<=xi_max} |R(xi)|/|xi|^3 per N (value), with aux1 = c1 N^{-alpha/2}
// and aux2 = the sampled sup divided by that bound.
struct RemainderScan {
  ScanResult scan;
  double bound_constant = 0.0;
  double worst_bound_fraction = 0.0;
  bool bound_holds = false;

  Report to_report() const;
};

RemainderScan scan_remainder(double alpha, const std::vector<double>& n_list, double xi_max,
                             std::size_t samples_per_side = 4000);

// ||w~||_{H^s} against the carrier M for every s; aux1 = |A| tau^{1/2} M^s ||w||_{L^2},
// aux2 = value / aux1. Throws ValidationError when a (s, M) pair violates the
// scaling-law hypotheses.
std::vector<ScanResult> scan_wavepacket(const std::vector<double>& s_list, const std::vector<double>& m_list,
                                        const WavepacketSpec& spec_template, const Grid& grid);

// Approximation error experiment: for each N, v solves the alpha = 2 equation
// from epsilon * w(y/width) on y_grid, V is built on x_grid, u evolves the
// fractional equation from V(0), and the value is sup_t ||u - V||_{H^{(2-alpha)/4}}
// over the records. aux1 = sup_t ||V||_{H^{(2-alpha)/4}}, aux2 = error at t_final.
struct ApproxErrorConfig {
  double alpha = 1.5;
  double gamma = 1.0;
  std::vector<double> n_list{8, 16, 32, 64};
  double epsilon = 0.1;
  double t_final = 0.5;
  double dt = 1e-3;
  std::size_t record_every = 25;
  Grid y_grid{256, 64.0};
  Grid x_grid{2048, 32.0};
  Profile shape = Profile::gaussian;
  double width = 2.0;

  Report to_report() const;
};

ScanResult run_approximation_error(const ApproxErrorConfig& cfg);

// Ill-posedness pipeline. Slow time S = lambda^alpha * t_final is simulated
// before rescaling; dt and record_every refer to that slow time. When width
// <= 0 the envelope width is matched to the sech soliton of the chosen
// amplitude (alpha = 2 profile), which keeps the profile coherent.
struct IllposedConfig {
  double alpha = 1.5;
  double gamma = 1.0;
  double s = -0.1;
  double epsilon = 1.5;
  double delta = 0.015;
  double t_final = 0.2;
  double n = 64.0;
  double dt = 1e-3;
  std::size_t record_every = 100;
  Grid y_grid{2048, 128.0};
  Grid x_grid{16384, 128.0};
  Profile shape = Profile::sech;
  double width = 0.0;

  Report to_report() const;
};

struct IllposedResult {
  double lambda = 0.0;
  double slow_time = 0.0;
  double width = 0.0;
  double data_norm_1 = 0.0;
  double data_norm_2 = 0.0;
  double data_separation = 0.0;
  double max_separation = 0.0;
  double time_of_max = 0.0;
  double amplification = 0.0;
  // sup over the window of ||u_j - V_j||_{H^{(2-alpha)/4}} before rescaling.
  double approx_error_1 = 0.0;
  double approx_error_2 = 0.0;

  Report to_report() const;
};

// Admissible regularity window (2 - 3a)/(4(a + 1)) < s < (2 - a)/4.
bool illposed_range_contains(double alpha, double s);

IllposedResult run_illposedness_demo(const IllposedConfig& cfg);

// Richardson order of Strang (errors against dt/2 and dt/4), Picard versus
// Strang agreement at the configured t_final, and the gamma = 0 check.
struct ConvergenceResult {
  double strang_error = 0.0;       // ||u_dt - u_{dt/2}||
  double strang_error_half = 0.0;  // ||u_{dt/2} - u_{dt/4}||
  double strang_order = 0.0;
  double picard_agreement = 0.0;   // relative L^2
  std::vector<double> picard_differences;
  double linear_error = 0.0;       // gamma = 0 run versus linear_propagate, relative

  Report to_report() const;
};

ConvergenceResult run_convergence_suite(const SimConfig& cfg, const Field& init, int picard_iterations = 12);

}  // namespace fnls
