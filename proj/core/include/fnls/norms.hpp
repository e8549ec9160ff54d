#pragma once

#include "fnls/evolution.hpp"
#include "fnls/field.hpp"
#include "fnls/space_time_field.hpp"

namespace fnls {

// M(u) = dx * sum |u_j|^2.
double mass(const Field& f);

// E(u) = 1/2 (1/L) sum |k|^alpha |u_hat|^2 + gamma/4 dx sum |u_j|^4.
double energy(const Field& f, double alpha, double gamma);

// Invariant of i u_t + (-Delta)^{alpha/2} u = gamma |u|^2 u, which is the
// energy with the opposite quartic sign: energy(f, alpha, -gamma).
double hamiltonian(const Field& f, double alpha, double gamma);

// ((1/L) sum (1+k^2)^s |u_hat(k)|^2)^{1/2}; s = 0 gives sqrt(mass).
double sobolev_norm(const Field& f, double s);

// sobolev_norm(a - b, s) without materializing the difference twice.
double sobolev_distance(const Field& a, const Field& b, double s);

enum class Window {
  raised_cosine,  // 1 on the middle half of the span, cosine tapers to 0 at the ends
  smooth_bump,    // same plateau with C-infinity tapers built from exp(-1/s)
  rectangular,    // identically 1; exact for signals periodic in the span
};

// Time cut-off value at t in [0, span].
double window_value(Window w, double t, double span);

// Multiplies the uniformly recorded part of `traj` by the time cut-off and
// takes the space-time transform
//   F(tau, xi) = sum_j h exp(-i tau t_j) psi(t_j) u_hat(t_j, xi),
// with h the record spacing and span T = n*h, so dtau = 2*pi/T. The tau
// lattice is centered on 0 (n points), the xi lattice is the grid's
// wavenumbers in increasing order. Needs at least 8 uniform records.
SpaceTimeField window_trajectory(const Trajectory& traj, Window window = Window::raised_cosine);

enum class Sign {
  minus,  // <tau - |xi|^alpha>, for u
  plus,   // <tau + |xi|^alpha>, for conjugated factors
};

// (sum <xi>^{2s} <tau -/+ |xi|^alpha>^{2b} |F|^2 dtau dxi)^{1/2}, <x> = 1 + |x|.
double xsb_norm(const SpaceTimeField& f, double s, double b, double alpha, Sign sign);

}  // namespace fnls
