#include "fnls/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "fnls/errors.hpp"

namespace fnls {

namespace {

// FFTW's planner is not thread-safe; only fftw_execute is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct FftPlan::Impl {
  fftw_complex* buffer = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  explicit Impl(std::size_t n) {
    std::lock_guard lock(planner_mutex());
    buffer = fftw_alloc_complex(n);
    const int len = static_cast<int>(n);
    forward = fftw_plan_dft_1d(len, buffer, buffer, FFTW_FORWARD, FFTW_ESTIMATE);
    backward = fftw_plan_dft_1d(len, buffer, buffer, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
    fftw_free(buffer);
  }
};

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw ValidationError("FFT length must be positive");
  impl_ = std::make_unique<Impl>(n);
}

FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

namespace {

void run(fftw_plan plan, fftw_complex* buffer, std::size_t n, std::span<const Complex> in,
         std::span<Complex> out) {
  if (in.size() != n || out.size() != n) throw ValidationError("FFT length mismatch");
  auto* buf = reinterpret_cast<Complex*>(buffer);
  std::copy(in.begin(), in.end(), buf);
  fftw_execute(plan);
  std::copy(buf, buf + n, out.begin());
}

}  // namespace

void FftPlan::forward(std::span<const Complex> in, std::span<Complex> out) const {
  run(impl_->forward, impl_->buffer, n_, in, out);
}

void FftPlan::backward(std::span<const Complex> in, std::span<Complex> out) const {
  run(impl_->backward, impl_->buffer, n_, in, out);
}

}  // namespace fnls
