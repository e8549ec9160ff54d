#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "fnls/grid.hpp"

namespace fnls {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

enum class Representation { physical, spectral };

// One complex-valued state on a Grid, held either as physical samples or as
// spectral coefficients (see Grid for storage order and spectral.hpp for the
// transform normalization). Immutable once constructed.
class Field {
 public:
  Field(Grid grid, Representation representation, ComplexVector values);

  static Field zeros(const Grid& grid, Representation representation = Representation::physical);
  static Field from_function(const Grid& grid, const std::function<Complex(double)>& f);

  const Grid& grid() const { return grid_; }
  Representation representation() const { return representation_; }
  bool is_physical() const { return representation_ == Representation::physical; }
  bool is_spectral() const { return representation_ == Representation::spectral; }

  std::span<const Complex> values() const { return values_; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  // Moves the storage out; the field is left empty.
  ComplexVector release() && { return std::move(values_); }

  Field scaled(Complex c) const;
  bool all_finite() const;

  friend Field operator+(const Field& a, const Field& b);
  friend Field operator-(const Field& a, const Field& b);
  friend Field operator*(Complex c, const Field& f) { return f.scaled(c); }

 private:
  Grid grid_;
  Representation representation_;
  ComplexVector values_;
};

}  // namespace fnls
