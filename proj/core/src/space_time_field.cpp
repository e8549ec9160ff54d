#include "fnls/space_time_field.hpp"

#include <algorithm>
#include <cmath>

#include "fnls/errors.hpp"

namespace fnls {

SpaceTimeField::SpaceTimeField(double xi0, double dxi, std::size_t nxi, double tau0, double dtau,
                               std::size_t ntau)
    : SpaceTimeField(xi0, dxi, nxi, tau0, dtau, ntau, ComplexVector(nxi * ntau)) {}

SpaceTimeField::SpaceTimeField(double xi0, double dxi, std::size_t nxi, double tau0, double dtau,
                               std::size_t ntau, ComplexVector values)
    : xi0_(xi0), dxi_(dxi), nxi_(nxi), tau0_(tau0), dtau_(dtau), ntau_(ntau), values_(std::move(values)) {
  if (!(dxi > 0.0) || !(dtau > 0.0)) throw ValidationError("lattice spacings must be positive");
  if (!std::isfinite(xi0) || !std::isfinite(tau0)) throw ValidationError("lattice origin must be finite");
  if (values_.size() != nxi * ntau) throw ValidationError("value matrix does not match the lattice");
}

std::size_t SpaceTimeField::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](const Complex& z) { return z != Complex{}; }));
}

}  // namespace fnls
