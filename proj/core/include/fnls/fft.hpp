#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "fnls/field.hpp"

namespace fnls {

// Unnormalized 1-D complex DFT of fixed length backed by FFTW.
//
//   forward:  X[m] = sum_j x[j] exp(-2 pi i j m / n)
//   backward: x[j] = sum_m X[m] exp(+2 pi i j m / n)
//
// Each instance owns its plans and scratch buffer, so distinct instances can
// execute concurrently. A single instance is not reentrant.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const { return n_; }

  // `in` and `out` may alias.
  void forward(std::span<const Complex> in, std::span<Complex> out) const;
  void backward(std::span<const Complex> in, std::span<Complex> out) const;

 private:
  struct Impl;
  std::size_t n_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fnls
