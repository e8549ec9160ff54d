#include "fnls/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fnls/errors.hpp"

namespace fnls {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Grid::Grid(std::size_t nx, double length) : nx_(nx), length_(length) {
  if (!is_power_of_two(nx) || nx < 8) {
    throw ValidationError("grid size must be a power of two >= 8, got " + std::to_string(nx));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw ValidationError("grid length must be positive and finite");
  }
}

double Grid::dk() const { return 2.0 * std::numbers::pi / length_; }

std::vector<double> Grid::wavenumbers() const {
  std::vector<double> k(nx_);
  for (std::size_t i = 0; i < nx_; ++i) k[i] = wavenumber(i);
  return k;
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(nx_);
  for (std::size_t j = 0; j < nx_; ++j) xs[j] = x(j);
  return xs;
}

Grid make_grid(std::size_t nx, double length) { return Grid(nx, length); }

}  // namespace fnls
