#include <algorithm>
#include <cmath>
#include <string>

#include "fnls/errors.hpp"
#include "fnls/evolution.hpp"
#include "fnls/report.hpp"
#include "fnls/symbols.hpp"

namespace fnls {

namespace {

// Norm of a spectral difference in H^{(2-alpha)/4}; U(t) is an isometry there,
// so it can be taken in the interaction picture.
double sobolev_spectral(std::span<const Complex> a, std::span<const Complex> b,
                        const std::vector<double>& weight, double length) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += weight[i] * std::norm(a[i] - b[i]);
  return std::sqrt(acc / length);
}

}  // namespace

PicardResult picard_iterate(const Field& phi, const SimConfig& cfg, int iterations) {
  cfg.validate();
  if (iterations < 1) throw ValidationError("picard_iterate needs at least one iteration");
  if (!(phi.grid() == cfg.grid)) throw ValidationError("initial data grid differs from config grid");

  const Grid& g = cfg.grid;
  const std::size_t nx = g.nx();
  const std::size_t steps = cfg.step_count();
  std::vector<double> times(steps + 1);
  for (std::size_t k = 0; k < steps; ++k) times[k] = static_cast<double>(k) * cfg.dt;
  times[steps] = cfg.t_final;

  std::vector<double> symbol(nx), weight(nx);
  const double s = (2.0 - cfg.alpha) / 4.0;
  for (std::size_t i = 0; i < nx; ++i) {
    symbol[i] = dispersion_symbol_unchecked(cfg.alpha, g.wavenumber(i));
    weight[i] = std::pow(sobolev_weight(s, g.wavenumber(i)), 2.0);
  }

  const Field phi_hat = as_spectral(phi);
  // Iterates in the interaction picture: w(t) = U(-t) u(t). The free
  // evolution is w = phi_hat at every node.
  std::vector<ComplexVector> w(steps + 1, ComplexVector(phi_hat.values().begin(), phi_hat.values().end()));
  std::vector<ComplexVector> next(steps + 1, ComplexVector(nx));

  SpectralWorkspace ws(g);
  ComplexVector u(nx), cubic(nx), g_prev(nx), g_cur(nx), acc(nx);
  auto pulled_back_cubic = [&](const ComplexVector& wn, double t, ComplexVector& out) {
    for (std::size_t i = 0; i < nx; ++i) u[i] = wn[i] * std::polar(1.0, symbol[i] * t);
    ws.cubic_spectral(u, cubic);
    for (std::size_t i = 0; i < nx; ++i) out[i] = cubic[i] * std::polar(1.0, -symbol[i] * t);
  };

  PicardResult result{Field::zeros(g, Representation::spectral), {}, {}};
  int growth_run = 0;
  for (int it = 0; it < iterations; ++it) {
    std::fill(acc.begin(), acc.end(), Complex{});
    next[0].assign(phi_hat.values().begin(), phi_hat.values().end());
    pulled_back_cubic(w[0], times[0], g_prev);
    const Complex coeff(0.0, -cfg.gamma);
    for (std::size_t k = 1; k <= steps; ++k) {
      const double h = times[k] - times[k - 1];
      pulled_back_cubic(w[k], times[k], g_cur);
      for (std::size_t i = 0; i < nx; ++i) {
        acc[i] += 0.5 * h * (g_prev[i] + g_cur[i]);
        next[k][i] = phi_hat[i] + coeff * acc[i];
      }
      std::swap(g_prev, g_cur);
    }

    double diff = 0.0;
    for (std::size_t k = 0; k <= steps; ++k) {
      diff = std::max(diff, sobolev_spectral(next[k], w[k], weight, g.length()));
    }
    if (!std::isfinite(diff)) throw BlowUpError(cfg.t_final, "Picard iterate became non-finite");
    if (!result.differences.empty()) {
      const double prev = result.differences.back();
      result.ratios.push_back(prev > 0.0 ? diff / prev : 0.0);
      growth_run = diff > prev ? growth_run + 1 : 0;
    }
    result.differences.push_back(diff);
    std::swap(w, next);
    if (growth_run >= 3) {
      throw NonContractionError("Picard differences grew for 3 consecutive iterations (last " +
                                format_double(diff) + "); shorten t_final or shrink the data");
    }
  }

  ComplexVector final_hat(nx);
  for (std::size_t i = 0; i < nx; ++i) final_hat[i] = w[steps][i] * std::polar(1.0, symbol[i] * cfg.t_final);
  Field out(g, Representation::spectral, std::move(final_hat));
  result.final_state = phi.is_spectral() ? out : to_physical(out);
  return result;
}

}  // namespace fnls
