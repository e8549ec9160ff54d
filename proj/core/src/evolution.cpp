#include "fnls/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fnls/errors.hpp"
#include "fnls/report.hpp"
#include "fnls/symbols.hpp"

namespace fnls {

namespace {

constexpr double kBlowUpThreshold = 1e8;

std::vector<double> symbol_table(const Grid& g, double alpha) {
  std::vector<double> s(g.nx());
  for (std::size_t i = 0; i < g.nx(); ++i) s[i] = dispersion_symbol_unchecked(alpha, g.wavenumber(i));
  return s;
}

}  // namespace

void SimConfig::validate() const {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw ValidationError("alpha must lie in (1, 2], got " + format_double(alpha));
  }
  if (!std::isfinite(gamma)) throw ValidationError("gamma must be finite");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("dt must be positive");
  if (!(t_final > 0.0) || !std::isfinite(t_final)) throw ValidationError("t_final must be positive");
  if (record_every == 0) throw ValidationError("record_every must be positive");
  if (!(cfl_factor > 0.0)) throw ValidationError("cfl_factor must be positive");
  const double stiff = dt * dispersion_symbol_unchecked(alpha, grid.k_max());
  if (stiff > 2.0 * std::numbers::pi * cfl_factor) {
    throw ValidationError("dt * max|k|^alpha = " + format_double(stiff) + " exceeds 2*pi*cfl_factor (" +
                          format_double(2.0 * std::numbers::pi * cfl_factor) +
                          "); reduce dt or raise cfl_factor");
  }
}

std::size_t SimConfig::step_count() const {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(t_final / dt - 1e-9)));
}

std::size_t Trajectory::uniform_prefix() const {
  if (times.size() < 3) return times.size();
  const double h = times[1] - times[0];
  std::size_t n = times.size();
  const double last = times[n - 1] - times[n - 2];
  if (std::abs(last - h) > 1e-9 * std::max(1.0, std::abs(h))) --n;
  return n;
}

Field linear_propagate(const Field& f, double alpha, double t) {
  if (!(alpha > 1.0 && alpha <= 2.0)) throw ValidationError("alpha must lie in (1, 2]");
  ComplexVector v = std::move(as_spectral(f)).release();
  const Grid& g = f.grid();
  for (std::size_t i = 0; i < g.nx(); ++i) {
    v[i] *= std::polar(1.0, dispersion_symbol_unchecked(alpha, g.wavenumber(i)) * t);
  }
  Field out(g, Representation::spectral, std::move(v));
  return f.is_spectral() ? out : to_physical(out);
}

SplitStepper::SplitStepper(const SimConfig& cfg)
    : cfg_(cfg),
      ws_(cfg.grid),
      symbol_(symbol_table(cfg.grid, cfg.alpha)),
      half_phase_(cfg.grid.nx()),
      physical_(cfg.grid.nx()),
      rho_(cfg.grid.nx()) {
  for (std::size_t i = 0; i < symbol_.size(); ++i) {
    half_phase_[i] = std::polar(1.0, 0.5 * symbol_[i] * cfg.dt);
  }
}

void SplitStepper::apply_linear(std::span<Complex> spectral, double t) {
  if (t == 0.5 * cfg_.dt) {
    for (std::size_t i = 0; i < spectral.size(); ++i) spectral[i] *= half_phase_[i];
    return;
  }
  for (std::size_t i = 0; i < spectral.size(); ++i) spectral[i] *= std::polar(1.0, symbol_[i] * t);
}

void SplitStepper::step(std::span<Complex> spectral, double step, double time_reached) {
  apply_linear(spectral, 0.5 * step);
  if (cfg_.gamma != 0.0) {
    if (cfg_.phase == NonlinearPhase::dealiased) {
      ws_.modulus_squared_dealiased(spectral, rho_);
      ws_.backward(spectral, physical_);
    } else {
      ws_.backward(spectral, physical_);
      for (std::size_t j = 0; j < physical_.size(); ++j) rho_[j] = std::norm(physical_[j]);
    }
    const double g = -cfg_.gamma * step;
    double peak = 0.0;
    for (std::size_t j = 0; j < physical_.size(); ++j) {
      physical_[j] *= std::polar(1.0, g * rho_[j]);
      peak = std::max(peak, std::abs(physical_[j]));
    }
    if (!(peak <= kBlowUpThreshold)) {
      throw BlowUpError(time_reached, "max |u| = " + format_double(peak));
    }
    ws_.forward(physical_, spectral);
  }
  apply_linear(spectral, 0.5 * step);
}

Field strang_step(const Field& f, const SimConfig& cfg) { return strang_step(f, cfg, cfg.dt); }

Field strang_step(const Field& f, const SimConfig& cfg, double step) {
  SimConfig local = cfg;
  local.grid = f.grid();
  SplitStepper stepper(local);
  ComplexVector v = std::move(as_spectral(f)).release();
  stepper.step(v, step, step);
  Field out(f.grid(), Representation::spectral, std::move(v));
  return f.is_spectral() ? out : to_physical(out);
}

Trajectory evolve(const Field& phi, const SimConfig& cfg) {
  cfg.validate();
  if (!(phi.grid() == cfg.grid)) throw ValidationError("initial data grid differs from config grid");
  if (!phi.all_finite()) throw ValidationError("initial data contains non-finite values");

  Trajectory traj;
  traj.config = cfg;
  SplitStepper stepper(cfg);
  SpectralWorkspace ws(cfg.grid);

  ComplexVector state = std::move(as_spectral(phi)).release();
  auto record = [&](double t) {
    ComplexVector phys(state.size());
    ws.backward(state, phys);
    Field f(cfg.grid, Representation::physical, std::move(phys));
    if (cfg.check_wraparound) check_wraparound(f, ("evolve at t=" + format_double(t)).c_str());
    traj.times.push_back(t);
    traj.states.push_back(std::move(f));
  };

  record(0.0);
  const std::size_t n = cfg.step_count();
  double t = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double h = (k < n) ? cfg.dt : cfg.t_final - static_cast<double>(n - 1) * cfg.dt;
    stepper.step(state, h, t);
    t = (k < n) ? static_cast<double>(k) * cfg.dt : cfg.t_final;
    if (k % cfg.record_every == 0 || k == n) record(t);
  }
  if (!traj.final_state().all_finite()) {
    throw BlowUpError(t, "non-finite values in final state");
  }
  return traj;
}

Trajectory evolve_forced(const Forcing& forcing, const SimConfig& cfg) {
  cfg.validate();
  const Grid& g = cfg.grid;
  const std::vector<double> symbol = symbol_table(g, cfg.alpha);
  SpectralWorkspace ws(g);

  // g(t) = U(-t) E(t) in spectral form.
  auto pulled_back = [&](double t) {
    const Field e = forcing(t);
    if (!(e.grid() == g)) throw ValidationError("forcing grid differs from config grid");
    ComplexVector v = std::move(as_spectral(e)).release();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= std::polar(1.0, -symbol[i] * t);
    return v;
  };

  Trajectory traj;
  traj.config = cfg;
  ComplexVector w(g.nx());
  auto record = [&](double t) {
    ComplexVector spec(w);
    for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= std::polar(1.0, symbol[i] * t);
    ComplexVector phys(spec.size());
    ws.backward(spec, phys);
    Field f(g, Representation::physical, std::move(phys));
    if (!f.all_finite()) throw BlowUpError(t, "non-finite values in forced evolution");
    traj.times.push_back(t);
    traj.states.push_back(std::move(f));
  };

  record(0.0);
  const std::size_t n = cfg.step_count();
  ComplexVector g_prev = pulled_back(0.0);
  double t = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double h = (k < n) ? cfg.dt : cfg.t_final - static_cast<double>(n - 1) * cfg.dt;
    const double t_next = (k < n) ? static_cast<double>(k) * cfg.dt : cfg.t_final;
    ComplexVector g_next = pulled_back(t_next);
    const Complex coeff(0.0, -0.5 * h);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += coeff * (g_prev[i] + g_next[i]);
    g_prev = std::move(g_next);
    t = t_next;
    if (k % cfg.record_every == 0 || k == n) record(t);
  }
  return traj;
}

Residual pde_residual(const Trajectory& traj, std::size_t index) {
  const std::size_t n = traj.uniform_prefix();
  if (n < 3 || index == 0 || index + 1 >= n) {
    throw ValidationError("pde_residual needs an interior record of a uniform trajectory");
  }
  const SimConfig& cfg = traj.config;
  const Grid& g = traj.states[index].grid();
  const double h = traj.times[1] - traj.times[0];

  auto phys = [&](std::size_t i) {
    const Field f = as_physical(traj.states[i]);
    return ComplexVector(f.values().begin(), f.values().end());
  };
  ComplexVector ut(g.nx());
  if (index >= 2 && index + 2 < n) {
    const auto a = phys(index - 2), b = phys(index - 1), c = phys(index + 1), d = phys(index + 2);
    for (std::size_t j = 0; j < ut.size(); ++j) {
      ut[j] = (a[j] - 8.0 * b[j] + 8.0 * c[j] - d[j]) / (12.0 * h);
    }
  } else {
    const auto b = phys(index - 1), c = phys(index + 1);
    for (std::size_t j = 0; j < ut.size(); ++j) ut[j] = (c[j] - b[j]) / (2.0 * h);
  }

  const Field u = as_spectral(traj.states[index]);
  ComplexVector du(u.values().begin(), u.values().end());
  for (std::size_t i = 0; i < du.size(); ++i) du[i] *= dispersion_symbol_unchecked(cfg.alpha, g.wavenumber(i));
  const Field du_phys = to_physical(Field(g, Representation::spectral, std::move(du)));
  const Field cubic = as_physical(cubic_nonlinearity(u));

  double res = 0.0, n1 = 0.0, n2 = 0.0, n3 = 0.0;
  const Complex i_unit(0.0, 1.0);
  for (std::size_t j = 0; j < g.nx(); ++j) {
    const Complex a = i_unit * ut[j];
    const Complex b = du_phys[j];
    const Complex c = cfg.gamma * cubic[j];
    res += std::norm(a + b - c);
    n1 += std::norm(a);
    n2 += std::norm(b);
    n3 += std::norm(c);
  }
  const double dx = g.dx();
  Residual r;
  r.absolute = std::sqrt(res * dx);
  const double denom = std::sqrt(n1 * dx) + std::sqrt(n2 * dx) + std::sqrt(n3 * dx);
  r.relative = denom > 0.0 ? r.absolute / denom : 0.0;
  return r;
}

}  // namespace fnls
