#include "fnls/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fnls/errors.hpp"
#include "fnls/fft.hpp"
#include "fnls/spectral.hpp"
#include "fnls/symbols.hpp"

namespace fnls {

double mass(const Field& f) {
  double acc = 0.0;
  for (const auto& z : f.values()) acc += std::norm(z);
  return f.is_spectral() ? acc / f.grid().length() : acc * f.grid().dx();
}

double energy(const Field& f, double alpha, double gamma) {
  const Field spec = as_spectral(f);
  const Field phys = as_physical(f);
  const Grid& g = f.grid();
  double kinetic = 0.0;
  for (std::size_t i = 0; i < g.nx(); ++i) {
    kinetic += dispersion_symbol(alpha, g.wavenumber(i)) * std::norm(spec[i]);
  }
  double quartic = 0.0;
  for (const auto& z : phys.values()) {
    const double m = std::norm(z);
    quartic += m * m;
  }
  return 0.5 * kinetic / g.length() + 0.25 * gamma * quartic * g.dx();
}

double hamiltonian(const Field& f, double alpha, double gamma) { return energy(f, alpha, -gamma); }

double sobolev_norm(const Field& f, double s) {
  const Field spec = as_spectral(f);
  const Grid& g = f.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const double k = g.wavenumber(i);
    acc += std::pow(1.0 + k * k, s) * std::norm(spec[i]);
  }
  return std::sqrt(acc / g.length());
}

double sobolev_distance(const Field& a, const Field& b, double s) {
  if (!(a.grid() == b.grid())) throw ValidationError("sobolev_distance: grids differ");
  return sobolev_norm(as_spectral(a) - as_spectral(b), s);
}

double window_value(Window w, double t, double span) {
  if (t < 0.0 || t > span) return 0.0;
  const double r = t / span;
  switch (w) {
    case Window::rectangular:
      return 1.0;
    case Window::raised_cosine: {
      const double edge = std::min(r, 1.0 - r);
      if (edge >= 0.25) return 1.0;
      return 0.5 * (1.0 - std::cos(4.0 * std::numbers::pi * edge));
    }
    case Window::smooth_bump: {
      // C-infinity step f(s)/(f(s) + f(1-s)), f(s) = exp(-1/s), across each quarter.
      const double edge = std::min(r, 1.0 - r);
      if (edge >= 0.25) return 1.0;
      const double s = 4.0 * edge;
      if (s <= 0.0) return 0.0;
      const double rise = std::exp(-1.0 / s);
      const double fall = s < 1.0 ? std::exp(-1.0 / (1.0 - s)) : 0.0;
      return rise / (rise + fall);
    }
  }
  return 0.0;
}

SpaceTimeField window_trajectory(const Trajectory& traj, Window window) {
  const std::size_t n = traj.uniform_prefix();
  if (n < 8) throw ValidationError("window_trajectory needs at least 8 uniformly spaced records");
  const Grid& g = traj.states.front().grid();
  const double h = traj.times[1] - traj.times[0];
  const double t0 = traj.times[0];
  const double span = static_cast<double>(n) * h;
  const double dtau = 2.0 * std::numbers::pi / span;
  const double tau0 = -static_cast<double>(n / 2) * dtau;
  const std::size_t nx = g.nx();

  // Columns ordered by increasing wavenumber: storage index of signed mode m.
  std::vector<std::size_t> column(nx);
  for (std::size_t c = 0; c < nx; ++c) {
    const long m = static_cast<long>(c) - static_cast<long>(nx / 2);
    column[c] = m >= 0 ? static_cast<std::size_t>(m) : static_cast<std::size_t>(m + static_cast<long>(nx));
  }

  std::vector<Field> spectra;
  spectra.reserve(n);
  for (std::size_t j = 0; j < n; ++j) spectra.push_back(as_spectral(traj.states[j]));

  SpaceTimeField out(-static_cast<double>(nx / 2) * g.dk(), g.dk(), nx, tau0, dtau, n);
  FftPlan plan(n);
  ComplexVector series(n), transformed(n);
  for (std::size_t c = 0; c < nx; ++c) {
    const std::size_t idx = column[c];
    for (std::size_t j = 0; j < n; ++j) {
      const double t = traj.times[j];
      series[j] = h * window_value(window, t - t0, span) * spectra[j][idx] * std::polar(1.0, -tau0 * t);
    }
    plan.forward(series, transformed);
    for (std::size_t m = 0; m < n; ++m) {
      out.at(m, c) = transformed[m] * std::polar(1.0, -static_cast<double>(m) * dtau * t0);
    }
  }
  return out;
}

double xsb_norm(const SpaceTimeField& f, double s, double b, double alpha, Sign sign) {
  const double sgn = sign == Sign::minus ? -1.0 : 1.0;
  std::vector<double> xi_weight(f.nxi()), disp(f.nxi());
  for (std::size_t i = 0; i < f.nxi(); ++i) {
    xi_weight[i] = std::pow(bracket(f.xi(i)), 2.0 * s);
    disp[i] = dispersion_symbol(alpha, f.xi(i));
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < f.ntau(); ++j) {
    const double tau = f.tau(j);
    for (std::size_t i = 0; i < f.nxi(); ++i) {
      const Complex& z = f.at(j, i);
      if (z == Complex{}) continue;
      acc += xi_weight[i] * std::pow(bracket(tau + sgn * disp[i]), 2.0 * b) * std::norm(z);
    }
  }
  return std::sqrt(acc * f.cell_area());
}

}  // namespace fnls
