#include "fnls/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fnls/errors.hpp"

namespace fnls {

Field::Field(Grid grid, Representation representation, ComplexVector values)
    : grid_(grid), representation_(representation), values_(std::move(values)) {
  if (values_.size() != grid_.nx()) {
    throw ValidationError("field has " + std::to_string(values_.size()) +
                          " values but grid has nx=" + std::to_string(grid_.nx()));
  }
}

Field Field::zeros(const Grid& grid, Representation representation) {
  return Field(grid, representation, ComplexVector(grid.nx()));
}

Field Field::from_function(const Grid& grid, const std::function<Complex(double)>& f) {
  ComplexVector v(grid.nx());
  for (std::size_t j = 0; j < grid.nx(); ++j) v[j] = f(grid.x(j));
  return Field(grid, Representation::physical, std::move(v));
}

Field Field::scaled(Complex c) const {
  ComplexVector v(values_);
  for (auto& z : v) z *= c;
  return Field(grid_, representation_, std::move(v));
}

bool Field::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

namespace {

void require_compatible(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw ValidationError("fields live on different grids");
  if (a.representation() != b.representation()) {
    throw ValidationError("fields are in different representations");
  }
}

}  // namespace

Field operator+(const Field& a, const Field& b) {
  require_compatible(a, b);
  ComplexVector v(a.values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
  return Field(a.grid_, a.representation_, std::move(v));
}

Field operator-(const Field& a, const Field& b) {
  require_compatible(a, b);
  ComplexVector v(a.values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values_[i];
  return Field(a.grid_, a.representation_, std::move(v));
}

}  // namespace fnls
