#pragma once

#include <string>
#include <utility>

#include "fnls/evolution.hpp"
#include "fnls/field.hpp"
#include "fnls/space_time_field.hpp"

namespace fnls {

// Resonant box near the dispersion curve at frequency N:
//   conjugate = false: xi in [N, N + W],   |tau - |xi|^alpha| <= 1
//   conjugate = true:  xi in [-N, -N + W], |tau + |xi|^alpha| <= 1
// with W = N^{(2-alpha)/2}.
struct BoxSpec {
  double n = 16.0;
  double alpha = 1.5;
  int xi_samples_per_box = 16;
  int tau_samples_per_unit = 8;
  bool conjugate = false;

  void validate() const;
  double width() const;
};

// Indicator of the box on a cell-centered xi lattice (dxi = W/xi_samples) and
// the tau lattice dtau*Z, dtau = 1/tau_samples_per_unit. Lattices of boxes built
// from specs with equal sample counts and equal W line up for convolution.
SpaceTimeField box_data(const BoxSpec& spec);

// Discrete convolution of two space-time fields on lattices with equal
// spacings, weighted by dtau*dxi; the output covers the Minkowski sum.
SpaceTimeField convolve(const SpaceTimeField& a, const SpaceTimeField& b);

// (F1 * F2 * F3) with weight (dtau*dxi)^2, computed as two pairwise passes.
SpaceTimeField trilinear_convolution(const SpaceTimeField& f1, const SpaceTimeField& f2bar,
                                     const SpaceTimeField& f3);

struct SlowVariables {
  double s;
  double y;
};

// (s, y) = (t, (x + alpha N^{alpha-1} t) / c^{1/2}), c = alpha(alpha-1)/2 N^{alpha-2}.
SlowVariables change_of_variables(double t, double x, double n, double alpha);

// V(t, x) = exp(iNx) exp(i N^alpha t) v(t, y(t, x)) sampled on `target` at the
// record times of v. v lives on its own (y) torus and is continued by zero
// outside it, so every record must be localized (edge mass <= 1e-8) and
// band-limited (spectral tail <= 1e-16, so that band-limited evaluation errs
// by less than 1e-8 relative in L^2). V must fit `target` in space
// (wrap-around) and in frequency. The returned config carries `alpha`, v's
// gamma and time step, and `target`. A nonzero `x_shift` returns the
// translate V(t, x - x_shift), which lets a packet that travels at group
// velocity -alpha N^{alpha-1} start off-center.
Trajectory approximate_solution(const Trajectory& v, double n, double alpha, const Grid& target,
                                double x_shift = 0.0);

enum class Envelope { gaussian, bump };

// A e^{iMx} w((x - x0)/tau_scale); w(x) = exp(-x^2/2) or the compact bump
// exp(1 - 1/(1 - x^2)) on |x| < 1.
struct WavepacketSpec {
  double amplitude = 1.0;
  double carrier = 1.0;
  double tau_scale = 1.0;
  double x0 = 0.0;
  Envelope envelope = Envelope::gaussian;
  double s = 0.0;
  // Regularity of w assumed when s < 0; must satisfy sigma >= |s|.
  double sigma = 1.0;

  // Scaling-law hypotheses: M*tau >= 1 for s >= 0, tau*M^{1+s/sigma} >= 1 otherwise.
  bool hypotheses_hold() const;
};

double envelope_value(Envelope e, double x);

Field modulated_wavepacket(const WavepacketSpec& spec, const Grid& grid);

// u^lambda(t, x) = lambda u(lambda^alpha t, lambda x) on `target`, with times
// divided by lambda^alpha. When target is the source grid shrunk by lambda
// (same nx, length L/lambda) the samples are relabeled exactly; otherwise they
// are evaluated by band-limited interpolation. Throws ResolutionError when the
// mass identity M(u^lambda) = lambda M(u) is violated by more than 1e-8.
Trajectory rescale_solution(const Trajectory& traj, double lambda, double alpha, const Grid& target);

// lambda = N^{((2-alpha)/4 - s)/(s + 1/2)}; requires s > -1/2.
double lambda_for(double s, double alpha, double n);

enum class Profile { gaussian, sech };

struct NlsProfile {
  Profile shape = Profile::sech;
  double width = 1.0;  // w(x/width)
  double s = 0.0;      // norm in which the amplitude is calibrated
};

// phi_1 = a1 w(x/width), phi_2 = a2 w(x/width), a2 = a1 (1 + delta/epsilon),
// a1 chosen so ||phi_1||_{H^s} = epsilon on the grid.
std::pair<Field, Field> nls_pair(double epsilon, double delta, const Grid& grid, const NlsProfile& profile);

Envelope parse_envelope(const std::string& name);
Profile parse_profile(const std::string& name);

}  // namespace fnls
