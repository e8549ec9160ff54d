#pragma once

#include <cstddef>
#include <vector>

namespace fnls {

// Uniform periodic lattice on a torus of circumference `length`.
//
// Physical samples sit at x_j = -L/2 + j*dx, j = 0..nx-1, so the domain is
// [-L/2, L/2). Spectral coefficients are stored in FFT order: storage index i
// holds the signed mode m = i for i < nx/2 and m = i - nx otherwise, with
// wavenumber k = m * 2*pi/L. The window of signed modes is {-nx/2, ..., nx/2-1}.
class Grid {
 public:
  Grid(std::size_t nx, double length);

  std::size_t nx() const { return nx_; }
  double length() const { return length_; }
  double dx() const { return length_ / static_cast<double>(nx_); }
  double dk() const;

  // Physical coordinate of sample j.
  double x(std::size_t j) const { return -0.5 * length_ + static_cast<double>(j) * dx(); }

  // Signed mode number and wavenumber of storage index i.
  long mode(std::size_t i) const {
    const auto half = static_cast<long>(nx_ / 2);
    const auto si = static_cast<long>(i);
    return si < half ? si : si - static_cast<long>(nx_);
  }
  double wavenumber(std::size_t i) const { return static_cast<double>(mode(i)) * dk(); }

  // Largest representable |k| (the Nyquist wavenumber).
  double k_max() const { return static_cast<double>(nx_ / 2) * dk(); }

  std::vector<double> wavenumbers() const;
  std::vector<double> points() const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.nx_ == b.nx_ && a.length_ == b.length_;
  }

 private:
  std::size_t nx_;
  double length_;
};

// Validating factory: nx must be a power of two with nx >= 8, length > 0.
Grid make_grid(std::size_t nx, double length);

bool is_power_of_two(std::size_t n);

}  // namespace fnls
