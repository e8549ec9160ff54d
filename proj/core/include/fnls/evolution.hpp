#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "fnls/field.hpp"
#include "fnls/spectral.hpp"

namespace fnls {

// How the pointwise phase rotation u <- u exp(-i gamma rho dt) obtains rho.
enum class NonlinearPhase {
  dealiased,  // rho = |u|^2 projected onto the grid band via 2x padding
  pointwise,  // rho = |u(x_j)|^2 at the collocation points
};

inline constexpr double kDefaultCflFactor = 8.0;

// Run parameters for i u_t + (-Delta)^{alpha/2} u = gamma |u|^2 u.
struct SimConfig {
  double alpha = 1.5;
  double gamma = 1.0;
  double dt = 1e-3;
  double t_final = 1.0;
  Grid grid{256, 2.0 * std::numbers::pi};
  std::size_t record_every = 1;
  // Accuracy guard: dt * max_k |k|^alpha <= 2*pi*cfl_factor. The linear step
  // is exact, so this is not a stability limit.
  double cfl_factor = kDefaultCflFactor;
  NonlinearPhase phase = NonlinearPhase::dealiased;
  // Check the edge-mass criterion at every record (for localized data on a
  // torus standing in for the real line).
  bool check_wraparound = false;

  void validate() const;
  std::size_t step_count() const;
};

// Samples u(t) on one grid at increasing times. Times are uniformly spaced by
// record_every*dt from 0, except that the final state is always recorded, so
// the last interval may be shorter when t_final is not a multiple.
struct Trajectory {
  std::vector<double> times;
  std::vector<Field> states;
  SimConfig config;

  std::size_t size() const { return states.size(); }
  const Field& final_state() const { return states.back(); }
  // Number of leading records that are uniformly spaced.
  std::size_t uniform_prefix() const;
};

// U(t) f: multiplies every spectral coefficient by exp(i |k|^alpha t).
// Returns the representation of the input.
Field linear_propagate(const Field& f, double alpha, double t);

// One Strang step of the configured size: half linear, exact nonlinear phase
// rotation, half linear. `step` overrides cfg.dt and may be negative.
Field strang_step(const Field& f, const SimConfig& cfg);
Field strang_step(const Field& f, const SimConfig& cfg, double step);

// Split-step evolution from phi over [0, t_final]. Throws BlowUpError when any
// sample becomes non-finite or exceeds 1e8 in modulus.
Trajectory evolve(const Field& phi, const SimConfig& cfg);

// Time-indexed forcing E(t).
using Forcing = std::function<Field(double)>;

// Solves i e_t + (-Delta)^{alpha/2} e = E, e(0) = 0, i.e.
// e(t) = -i int_0^t U(t-t') E(t') dt', by the trapezoidal rule applied to the
// interaction-picture variable w = U(-t) e. Second order. cfg.gamma is unused.
Trajectory evolve_forced(const Forcing& forcing, const SimConfig& cfg);

struct PicardResult {
  Field final_state;
  // differences[j] = sup_t ||u_{j+1}(t) - u_j(t)||_{H^{(2-alpha)/4}}, with u_0
  // the free evolution U(t) phi.
  std::vector<double> differences;
  // differences[j+1] / differences[j].
  std::vector<double> ratios;
};

// Iterates the Duhamel map u -> U(t) phi - i gamma int_0^t U(t-t') |u|^2 u dt'
// on the time lattice of cfg (same quadrature as evolve_forced) and returns the
// last iterate at t_final. Throws NonContractionError when the successive
// differences grow for three consecutive iterations.
PicardResult picard_iterate(const Field& phi, const SimConfig& cfg, int iterations);

struct Residual {
  double absolute = 0.0;  // ||i u_t + D u - gamma |u|^2 u||_{L^2}
  double relative = 0.0;  // absolute / (||i u_t|| + ||D u|| + ||gamma |u|^2 u||)
};

// PDE residual of a recorded trajectory at record `index`, with u_t from a
// centered finite difference in time (five points where available, else
// three) and the spatial terms evaluated spectrally.
Residual pde_residual(const Trajectory& traj, std::size_t index);

// Split-step engine bound to a configuration; keeps plans and phase tables
// between steps. The state is held as spectral coefficients.
class SplitStepper {
 public:
  explicit SplitStepper(const SimConfig& cfg);

  // Advances `spectral` in place by `step` (signed); `time_reached` is only
  // used to label blow-up failures.
  void step(std::span<Complex> spectral, double step, double time_reached);

 private:
  void apply_linear(std::span<Complex> spectral, double t);

  SimConfig cfg_;
  SpectralWorkspace ws_;
  std::vector<double> symbol_;
  std::vector<Complex> half_phase_;  // exp(i |k|^a dt/2) for cfg.dt
  ComplexVector physical_;
  std::vector<double> rho_;
};

}  // namespace fnls
