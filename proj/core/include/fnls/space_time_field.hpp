#pragma once

#include <cstddef>
#include <vector>

#include "fnls/field.hpp"

namespace fnls {

// Complex values on a uniform (tau, xi) lattice:
//   xi_i  = xi0  + i*dxi,   i = 0..nxi-1
//   tau_j = tau0 + j*dtau,  j = 0..ntau-1
// stored row-major with tau as the slow index. Integral norms use the
// Riemann weight dtau*dxi.
class SpaceTimeField {
 public:
  SpaceTimeField(double xi0, double dxi, std::size_t nxi, double tau0, double dtau, std::size_t ntau);
  SpaceTimeField(double xi0, double dxi, std::size_t nxi, double tau0, double dtau, std::size_t ntau,
                 ComplexVector values);

  double xi0() const { return xi0_; }
  double dxi() const { return dxi_; }
  std::size_t nxi() const { return nxi_; }
  double tau0() const { return tau0_; }
  double dtau() const { return dtau_; }
  std::size_t ntau() const { return ntau_; }

  double xi(std::size_t i) const { return xi0_ + static_cast<double>(i) * dxi_; }
  double tau(std::size_t j) const { return tau0_ + static_cast<double>(j) * dtau_; }

  Complex& at(std::size_t j, std::size_t i) { return values_[j * nxi_ + i]; }
  const Complex& at(std::size_t j, std::size_t i) const { return values_[j * nxi_ + i]; }

  const ComplexVector& values() const { return values_; }
  ComplexVector& values() { return values_; }

  double cell_area() const { return dtau_ * dxi_; }
  std::size_t nonzero_count() const;

 private:
  double xi0_, dxi_;
  std::size_t nxi_;
  double tau0_, dtau_;
  std::size_t ntau_;
  ComplexVector values_;
};

}  // namespace fnls
