#include "fnls/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fnls/errors.hpp"
#include "fnls/report.hpp"

namespace fnls {

namespace {

// exp(-i k_m x_0) with x_0 = -L/2 reduces to (-1)^m; m and the storage index
// share parity because nx is even.
inline double seam_sign(std::size_t i) { return (i & 1U) ? -1.0 : 1.0; }

}  // namespace

SpectralWorkspace::SpectralWorkspace(const Grid& grid)
    : grid_(grid),
      plan_(grid.nx()),
      padded_plan_(2 * grid.nx()),
      padded_(2 * grid.nx()),
      scratch_(grid.nx()) {}

void SpectralWorkspace::forward(std::span<const Complex> physical, std::span<Complex> spectral) {
  plan_.forward(physical, spectral);
  const double dx = grid_.dx();
  for (std::size_t i = 0; i < spectral.size(); ++i) spectral[i] *= dx * seam_sign(i);
}

void SpectralWorkspace::backward(std::span<const Complex> spectral, std::span<Complex> physical) {
  const double inv_len = 1.0 / grid_.length();
  for (std::size_t i = 0; i < spectral.size(); ++i) scratch_[i] = spectral[i] * (inv_len * seam_sign(i));
  plan_.backward(scratch_, physical);
}

void SpectralWorkspace::pad(std::span<const Complex> spectral) {
  const std::size_t n = grid_.nx();
  const double inv_len = 1.0 / grid_.length();
  std::fill(padded_.begin(), padded_.end(), Complex{});
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = i < n / 2 ? i : i + n;
    padded_[p] = spectral[i] * (inv_len * seam_sign(i));
  }
  padded_plan_.backward(padded_, padded_);
}

void SpectralWorkspace::truncate(std::span<Complex> out) {
  const std::size_t n = grid_.nx();
  padded_plan_.forward(padded_, padded_);
  const double dxp = grid_.length() / static_cast<double>(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = i < n / 2 ? i : i + n;
    out[i] = padded_[p] * (dxp * seam_sign(i));
  }
}

void SpectralWorkspace::cubic_spectral(std::span<const Complex> spectral, std::span<Complex> out) {
  pad(spectral);
  for (auto& z : padded_) z *= std::norm(z);
  truncate(out);
}

void SpectralWorkspace::modulus_squared_dealiased(std::span<const Complex> spectral,
                                                  std::span<double> out) {
  pad(spectral);
  for (auto& z : padded_) z = std::norm(z);
  truncate(scratch_);
  // scratch_ now holds the band-limited spectrum of |u|^2; bring it back to
  // the grid. backward() also uses scratch_, so stage through padded_.
  std::copy(scratch_.begin(), scratch_.end(), padded_.begin());
  std::span<Complex> staged(padded_.data(), grid_.nx());
  std::span<Complex> samples(padded_.data() + grid_.nx(), grid_.nx());
  backward(staged, samples);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = samples[j].real();
}

Field to_spectral(const Field& f) {
  if (f.is_spectral()) throw ValidationError("to_spectral: field is already spectral");
  SpectralWorkspace ws(f.grid());
  ComplexVector out(f.size());
  ws.forward(f.values(), out);
  return Field(f.grid(), Representation::spectral, std::move(out));
}

Field to_physical(const Field& f) {
  if (f.is_physical()) throw ValidationError("to_physical: field is already physical");
  SpectralWorkspace ws(f.grid());
  ComplexVector out(f.size());
  ws.backward(f.values(), out);
  return Field(f.grid(), Representation::physical, std::move(out));
}

Field as_spectral(const Field& f) { return f.is_spectral() ? f : to_spectral(f); }
Field as_physical(const Field& f) { return f.is_physical() ? f : to_physical(f); }

Field cubic_nonlinearity(const Field& f) {
  SpectralWorkspace ws(f.grid());
  const Field spec = as_spectral(f);
  ComplexVector out(f.size());
  ws.cubic_spectral(spec.values(), out);
  Field result(f.grid(), Representation::spectral, std::move(out));
  return f.is_spectral() ? result : to_physical(result);
}

ComplexVector evaluate_band_limited(const Field& f, std::span<const double> points,
                                    bool zero_outside) {
  const Field spec = as_spectral(f);
  const Grid& g = spec.grid();
  const double half = 0.5 * g.length();
  const double inv_len = 1.0 / g.length();
  ComplexVector out(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    const double x = points[p];
    if (zero_outside && (x < -half || x >= half)) continue;
    Complex acc{};
    for (std::size_t i = 0; i < g.nx(); ++i) {
      acc += spec[i] * std::polar(1.0, g.wavenumber(i) * x);
    }
    out[p] = acc * inv_len;
  }
  return out;
}

ComplexVector evaluate_band_limited_affine(const Field& f, double start, double step,
                                           std::size_t count, bool zero_outside) {
  const Field spec = as_spectral(f);
  const Grid& g = spec.grid();
  const double half = 0.5 * g.length();
  const double inv_len = 1.0 / g.length();
  ComplexVector out(count);
  if (count == 0) return out;

  // Restrict to the index range whose points fall inside the domain.
  std::size_t first = 0;
  std::size_t last = count;
  if (zero_outside) {
    if (step == 0.0) {
      if (start < -half || start >= half) return out;
    } else {
      const double a = (-half - start) / step;
      const double b = (half - start) / step;
      const double lo = std::min(a, b);
      const double hi = std::max(a, b);
      const double c = static_cast<double>(count);
      first = static_cast<std::size_t>(std::clamp(std::ceil(lo), 0.0, c));
      last = static_cast<std::size_t>(std::clamp(std::floor(hi) + 1.0, 0.0, c));
      while (first < last && start + static_cast<double>(first) * step < -half) ++first;
      while (last > first && start + static_cast<double>(last - 1) * step >= half) --last;
    }
  }
  if (first >= last) return out;

  const double x_first = start + static_cast<double>(first) * step;
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const double k = g.wavenumber(i);
    const Complex c = spec[i] * inv_len;
    if (c == Complex{}) continue;
    const Complex rot = std::polar(1.0, k * step);
    Complex phase = std::polar(1.0, k * x_first);
    // Re-anchor the recurrence periodically to bound round-off growth.
    for (std::size_t j = first; j < last; ++j) {
      if (((j - first) & 255U) == 0U) {
        phase = std::polar(1.0, k * (start + static_cast<double>(j) * step));
      }
      out[j] += c * phase;
      phase *= rot;
    }
  }
  return out;
}

Field resample(const Field& f, const Grid& target) {
  if (std::abs(target.length() - f.grid().length()) > 1e-12 * f.grid().length()) {
    throw ValidationError("resample: target grid must have the same length");
  }
  const Field spec = as_spectral(f);
  const Grid& src = spec.grid();
  ComplexVector out(target.nx());
  const long keep = static_cast<long>(std::min(src.nx(), target.nx()) / 2);
  for (std::size_t i = 0; i < src.nx(); ++i) {
    const long m = src.mode(i);
    if (m < -keep || m >= keep) continue;
    const std::size_t t = m >= 0 ? static_cast<std::size_t>(m)
                                 : static_cast<std::size_t>(static_cast<long>(target.nx()) + m);
    out[t] = spec[i];
  }
  Field result(target, Representation::spectral, std::move(out));
  return f.is_spectral() ? result : to_physical(result);
}

double edge_mass_fraction(const Field& f, double outer_fraction) {
  const Field phys = as_physical(f);
  const Grid& g = phys.grid();
  const double edge = 0.5 * g.length() * (1.0 - outer_fraction);
  double total = 0.0;
  double outer = 0.0;
  for (std::size_t j = 0; j < g.nx(); ++j) {
    const double w = std::norm(phys[j]);
    total += w;
    if (std::abs(g.x(j)) >= edge) outer += w;
  }
  return total > 0.0 ? outer / total : 0.0;
}

void check_wraparound(const Field& f, const char* what, double outer_fraction, double tolerance) {
  const double frac = edge_mass_fraction(f, outer_fraction);
  if (frac > tolerance) {
    throw WrapAroundError(std::string(what) + ": edge mass fraction " + format_double(frac) +
                          " exceeds " + format_double(tolerance) +
                          "; enlarge the domain");
  }
}

double spectral_tail_fraction(const Field& f, double band_fraction) {
  const Field spec = as_spectral(f);
  const Grid& g = spec.grid();
  const double cut = band_fraction * g.k_max();
  double total = 0.0;
  double tail = 0.0;
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const double w = std::norm(spec[i]);
    total += w;
    if (std::abs(g.wavenumber(i)) > cut) tail += w;
  }
  return total > 0.0 ? tail / total : 0.0;
}

}  // namespace fnls
