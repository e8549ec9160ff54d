#include "fnls/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fnls/errors.hpp"
#include "fnls/norms.hpp"
#include "fnls/report.hpp"
#include "fnls/spectral.hpp"
#include "fnls/symbols.hpp"

namespace fnls {

namespace {

// Mass fractions. The edge bound is the usual real-line proxy check; the tail
// bound keeps band-limited evaluation within 1e-8 relative in L^2.
constexpr double kEdgeTolerance = 1e-8;
constexpr double kTailTolerance = 1e-16;

struct Entry {
  std::size_t j, i;
  Complex value;
};

std::vector<Entry> nonzeros(const SpaceTimeField& f) {
  std::vector<Entry> out;
  for (std::size_t j = 0; j < f.ntau(); ++j) {
    for (std::size_t i = 0; i < f.nxi(); ++i) {
      if (f.at(j, i) != Complex{}) out.push_back({j, i, f.at(j, i)});
    }
  }
  return out;
}

bool same_spacing(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(a, b); }

void require_localized(const Field& f, const std::string& what) {
  const double edge = edge_mass_fraction(f);
  if (edge > kEdgeTolerance) {
    throw WrapAroundError(what + ": edge mass fraction " + format_double(edge) +
                          " exceeds 1e-8; enlarge the domain");
  }
}

void require_band_limited(const Field& f, const std::string& what) {
  const double tail = spectral_tail_fraction(f);
  if (tail > kTailTolerance) {
    throw ResolutionError(what + ": spectral tail fraction " + format_double(tail) +
                          " exceeds 1e-16; refine the grid");
  }
}

double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace

void BoxSpec::validate() const {
  if (!(n >= 16.0)) throw ValidationError("box frequency N must be at least 16");
  if (!(alpha > 1.0 && alpha < 2.0)) throw ValidationError("box alpha must lie in (1, 2)");
  if (xi_samples_per_box < 8) throw ValidationError("resolution too coarse: need >= 8 xi samples per box");
  if (tau_samples_per_unit < 4) {
    throw ValidationError("resolution too coarse: need >= 4 tau samples per unit (8 across the strip)");
  }
}

double BoxSpec::width() const { return std::pow(n, 0.5 * (2.0 - alpha)); }

SpaceTimeField box_data(const BoxSpec& spec) {
  spec.validate();
  const double w = spec.width();
  const auto nxi = static_cast<std::size_t>(spec.xi_samples_per_box);
  const double dxi = w / static_cast<double>(nxi);
  const double dtau = 1.0 / static_cast<double>(spec.tau_samples_per_unit);
  const double start = spec.conjugate ? -spec.n : spec.n;
  const double xi0 = start + 0.5 * dxi;
  const double sgn = spec.conjugate ? -1.0 : 1.0;

  std::vector<double> centre(nxi);
  for (std::size_t i = 0; i < nxi; ++i) {
    centre[i] = sgn * dispersion_symbol(spec.alpha, xi0 + static_cast<double>(i) * dxi);
  }
  const auto [lo_it, hi_it] = std::minmax_element(centre.begin(), centre.end());
  const auto j_lo = static_cast<long>(std::ceil((*lo_it - 1.0) / dtau - 1e-9));
  const auto j_hi = static_cast<long>(std::floor((*hi_it + 1.0) / dtau + 1e-9));
  const auto ntau = static_cast<std::size_t>(j_hi - j_lo + 1);

  SpaceTimeField box(xi0, dxi, nxi, static_cast<double>(j_lo) * dtau, dtau, ntau);
  for (std::size_t j = 0; j < ntau; ++j) {
    const double tau = static_cast<double>(j_lo + static_cast<long>(j)) * dtau;
    for (std::size_t i = 0; i < nxi; ++i) {
      if (std::abs(tau - centre[i]) <= 1.0 + 1e-12) box.at(j, i) = 1.0;
    }
  }
  return box;
}

SpaceTimeField convolve(const SpaceTimeField& a, const SpaceTimeField& b) {
  if (!same_spacing(a.dxi(), b.dxi()) || !same_spacing(a.dtau(), b.dtau())) {
    throw ValidationError("convolution needs equal lattice spacings");
  }
  SpaceTimeField out(a.xi0() + b.xi0(), a.dxi(), a.nxi() + b.nxi() - 1, a.tau0() + b.tau0(), a.dtau(),
                     a.ntau() + b.ntau() - 1);
  const double weight = a.cell_area();
  const auto ea = nonzeros(a);
  const auto eb = nonzeros(b);
  for (const auto& x : ea) {
    const Complex c = weight * x.value;
    for (const auto& y : eb) out.at(x.j + y.j, x.i + y.i) += c * y.value;
  }
  return out;
}

SpaceTimeField trilinear_convolution(const SpaceTimeField& f1, const SpaceTimeField& f2bar,
                                     const SpaceTimeField& f3) {
  return convolve(convolve(f1, f2bar), f3);
}

SlowVariables change_of_variables(double t, double x, double n, double alpha) {
  if (!(n >= 4.0)) throw ValidationError("change of variables needs N >= 4");
  const double c = curvature_scale(alpha, n);
  return {t, (x + alpha * std::pow(n, alpha - 1.0) * t) / std::sqrt(c)};
}

Trajectory approximate_solution(const Trajectory& v, double n, double alpha, const Grid& target,
                                double x_shift) {
  if (!(alpha > 1.0 && alpha <= 2.0)) throw ValidationError("alpha must lie in (1, 2]");
  if (!(n >= 4.0)) throw ValidationError("approximate_solution needs N >= 4");
  if (v.size() == 0) throw ValidationError("approximate_solution needs a non-empty trajectory");

  const double root_c = std::sqrt(curvature_scale(alpha, n));
  const double velocity = alpha * std::pow(n, alpha - 1.0);
  const double n_alpha = std::pow(n, alpha);
  const double step = target.dx() / root_c;

  // v carries no energy beyond 2/3 of its band (checked per record), so V
  // lives in N +- (2/3) k_max(y) / c^{1/2}.
  const double reach = n + (2.0 / 3.0) * v.states.front().grid().k_max() / root_c;
  if (reach > target.k_max()) {
    throw ResolutionError("approximate_solution: V reaches |k| = " + format_double(reach) +
                          " beyond the target band " + format_double(target.k_max()) + "; refine the grid");
  }

  ComplexVector carrier(target.nx());
  for (std::size_t j = 0; j < target.nx(); ++j) carrier[j] = std::polar(1.0, n * (target.x(j) - x_shift));

  Trajectory out;
  out.config = v.config;
  out.config.alpha = alpha;
  out.config.grid = target;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const double t = v.times[r];
    const std::string at = "approximate_solution at t=" + format_double(t);
    require_localized(v.states[r], at + " (profile v)");
    require_band_limited(v.states[r], at + " (profile v)");

    const double start = (target.x(0) - x_shift + velocity * t) / root_c;
    ComplexVector samples = evaluate_band_limited_affine(v.states[r], start, step, target.nx(), true);
    const Complex phase = std::polar(1.0, n_alpha * t);
    for (std::size_t j = 0; j < samples.size(); ++j) samples[j] *= phase * carrier[j];
    Field big_v(target, Representation::physical, std::move(samples));
    check_wraparound(big_v, at.c_str());
    out.times.push_back(t);
    out.states.push_back(std::move(big_v));
  }
  return out;
}

bool WavepacketSpec::hypotheses_hold() const {
  if (s >= 0.0) return carrier * tau_scale >= 1.0;
  return sigma >= std::abs(s) && tau_scale * std::pow(carrier, 1.0 + s / sigma) >= 1.0;
}

double envelope_value(Envelope e, double x) {
  if (e == Envelope::gaussian) return std::exp(-0.5 * x * x);
  const double q = 1.0 - x * x;
  return q > 0.0 ? std::exp(1.0 - 1.0 / q) : 0.0;
}

Field modulated_wavepacket(const WavepacketSpec& spec, const Grid& grid) {
  if (!(spec.tau_scale > 0.0)) throw ValidationError("wavepacket tau_scale must be positive");
  Field f = Field::from_function(grid, [&](double x) {
    return spec.amplitude * envelope_value(spec.envelope, (x - spec.x0) / spec.tau_scale) *
           std::polar(1.0, spec.carrier * x);
  });
  check_wraparound(f, "modulated_wavepacket");
  return f;
}

Trajectory rescale_solution(const Trajectory& traj, double lambda, double alpha, const Grid& target) {
  if (!(lambda >= 1.0) || !std::isfinite(lambda)) throw ValidationError("lambda must be >= 1");
  if (!(alpha > 1.0 && alpha <= 2.0)) throw ValidationError("alpha must lie in (1, 2]");
  if (traj.size() == 0) throw ValidationError("rescale_solution needs a non-empty trajectory");
  const Grid& src = traj.states.front().grid();
  const double time_scale = std::pow(lambda, alpha);
  const bool relabel = target.nx() == src.nx() &&
                       std::abs(target.length() - src.length() / lambda) <= 1e-12 * src.length();

  Trajectory out;
  out.config = traj.config;
  out.config.grid = target;
  out.config.alpha = alpha;
  out.config.dt = traj.config.dt / time_scale;
  out.config.t_final = traj.config.t_final / time_scale;
  // lambda u(lambda^a t, lambda x) solves the equation with the cubic
  // coefficient scaled by lambda^{a-2}; exact scaling only at a = 2.
  out.config.gamma = traj.config.gamma * std::pow(lambda, alpha - 2.0);

  for (std::size_t r = 0; r < traj.size(); ++r) {
    const Field phys = as_physical(traj.states[r]);
    ComplexVector values;
    if (relabel) {
      values.assign(phys.values().begin(), phys.values().end());
    } else {
      values = evaluate_band_limited_affine(phys, lambda * target.x(0), lambda * target.dx(), target.nx(), true);
    }
    for (auto& z : values) z *= lambda;
    Field scaled(target, Representation::physical, std::move(values));
    const double expected = lambda * mass(phys);
    const double got = mass(scaled);
    if (expected > 0.0 && std::abs(got - expected) / expected > 1e-8) {
      throw ResolutionError("rescale_solution: mass identity violated by " +
                            format_double(std::abs(got - expected) / expected) +
                            " (relative); target grid does not resolve the profile");
    }
    out.times.push_back(traj.times[r] / time_scale);
    out.states.push_back(std::move(scaled));
  }
  return out;
}

double lambda_for(double s, double alpha, double n) {
  if (!(s > -0.5)) throw ValidationError("lambda_for needs s > -1/2");
  return std::pow(n, ((2.0 - alpha) / 4.0 - s) / (s + 0.5));
}

std::pair<Field, Field> nls_pair(double epsilon, double delta, const Grid& grid, const NlsProfile& profile) {
  if (!(epsilon > 0.0)) throw ValidationError("nls_pair needs epsilon > 0");
  if (!(delta >= 0.0 && delta <= epsilon)) throw ValidationError("nls_pair needs 0 <= delta <= epsilon");
  if (!(profile.width > 0.0)) throw ValidationError("nls_pair needs a positive width");
  const Field shape = Field::from_function(grid, [&](double x) -> Complex {
    const double y = x / profile.width;
    return profile.shape == Profile::sech ? sech(y) : std::exp(-0.5 * y * y);
  });
  try {
    check_wraparound(shape, "nls_pair envelope");
  } catch (const WrapAroundError& e) {
    throw ValidationError(std::string("envelope/grid mismatch: ") + e.what());
  }
  const double a1 = epsilon / sobolev_norm(shape, profile.s);
  const double a2 = a1 * (1.0 + delta / epsilon);
  return {shape.scaled(a1), shape.scaled(a2)};
}

Envelope parse_envelope(const std::string& name) {
  if (name == "gaussian") return Envelope::gaussian;
  if (name == "bump") return Envelope::bump;
  throw ValidationError("unknown envelope '" + name + "' (expected gaussian or bump)");
}

Profile parse_profile(const std::string& name) {
  if (name == "gaussian") return Profile::gaussian;
  if (name == "sech") return Profile::sech;
  throw ValidationError("unknown profile '" + name + "' (expected gaussian or sech)");
}

}  // namespace fnls
