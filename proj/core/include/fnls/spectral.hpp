#pragma once

#include <span>
#include <vector>

#include "fnls/fft.hpp"
#include "fnls/field.hpp"

namespace fnls {

// Transform normalization used throughout:
//
//   u_hat(k) = dx * sum_j u(x_j) exp(-i k x_j)       (Riemann sum of the integral)
//   u(x_j)   = (1/L) * sum_k u_hat(k) exp(+i k x_j)
//
// so that  dx * sum_j |u_j|^2 == (1/L) * sum_k |u_hat(k)|^2.
Field to_spectral(const Field& f);
Field to_physical(const Field& f);

// Converts only when needed.
Field as_spectral(const Field& f);
Field as_physical(const Field& f);

// Dealiased |u|^2 u, returned in the representation of the input. The product
// is formed on a 2x zero-padded lattice, which is exact for cubic terms, then
// projected back onto the grid's band.
Field cubic_nonlinearity(const Field& f);

// Reusable transform machinery bound to one grid; owns FFT plans and scratch
// space for the plain and the 2x-padded lattice. Not reentrant, so give each
// thread its own instance.
class SpectralWorkspace {
 public:
  explicit SpectralWorkspace(const Grid& grid);

  const Grid& grid() const { return grid_; }

  void forward(std::span<const Complex> physical, std::span<Complex> spectral);
  void backward(std::span<const Complex> spectral, std::span<Complex> physical);

  // Dealiased cubic term, spectral in / spectral out.
  void cubic_spectral(std::span<const Complex> spectral, std::span<Complex> out);

  // Dealiased |u|^2 sampled on the grid, from spectral coefficients of u.
  void modulus_squared_dealiased(std::span<const Complex> spectral, std::span<double> out);

 private:
  void pad(std::span<const Complex> spectral);
  void truncate(std::span<Complex> out);

  Grid grid_;
  FftPlan plan_;
  FftPlan padded_plan_;
  ComplexVector padded_;
  ComplexVector scratch_;
};

// Band-limited (trigonometric) interpolation of a field at arbitrary points.
// Points outside [-L/2, L/2) evaluate to zero when `zero_outside` is set,
// which is how a torus field stands in for a function on the real line;
// otherwise the periodic extension is used.
ComplexVector evaluate_band_limited(const Field& f, std::span<const double> points,
                                    bool zero_outside);

// Same, for points on the affine lattice start + j*step, j = 0..count-1, using
// a recurrence for the exponentials.
ComplexVector evaluate_band_limited_affine(const Field& f, double start, double step,
                                           std::size_t count, bool zero_outside);

// Band-limited resampling onto a grid of the same length (zero padding or
// truncation of the spectrum).
Field resample(const Field& f, const Grid& target);

// Fraction of the mass that sits in the outer `outer_fraction` of the domain
// (half at each end, i.e. next to the periodic seam).
double edge_mass_fraction(const Field& f, double outer_fraction = 0.1);

// Throws WrapAroundError if edge_mass_fraction exceeds `tolerance`.
void check_wraparound(const Field& f, const char* what, double outer_fraction = 0.1,
                      double tolerance = 1e-8);

// Fraction of the spectral energy carried by modes with |k| > band_fraction * k_max.
double spectral_tail_fraction(const Field& f, double band_fraction = 2.0 / 3.0);

}  // namespace fnls
