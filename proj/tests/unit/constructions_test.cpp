#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fnls/constructions.hpp"
#include "fnls/errors.hpp"
#include "fnls/fit.hpp"
#include "fnls/initial_data.hpp"
#include "fnls/norms.hpp"
#include "fnls/spectral.hpp"
#include "fnls/symbols.hpp"
#include "generators.hpp"

using namespace fnls;
using fnls::testing::Gen;
using fnls::testing::relative_l2;

namespace {

constexpr double kPi = std::numbers::pi;

double integral(const SpaceTimeField& f) {
  Complex sum{};
  for (const auto& z : f.values()) sum += z;
  return sum.real() * f.cell_area();
}

SpaceTimeField random_field(Gen& gen, double dxi, double dtau) {
  SpaceTimeField f(gen.uniform(-3.0, 3.0), dxi, static_cast<std::size_t>(gen.integer(1, 5)), gen.uniform(-3.0, 3.0),
                   dtau, static_cast<std::size_t>(gen.integer(1, 5)));
  for (auto& z : f.values()) z = gen.complex();
  return f;
}

Trajectory free_profile(double t_final) {
  SimConfig cfg;
  cfg.alpha = 2.0;
  cfg.gamma = 1.0;
  cfg.dt = 1e-3;
  cfg.t_final = t_final;
  cfg.grid = Grid(256, 40.0);
  cfg.record_every = 100;
  return evolve(make_initial_data("gaussian:a=0.5,w=1", cfg.grid), cfg);
}

}  // namespace

TEST(Box, WidthTendsToOneAsAlphaApproachesTwo) {
  BoxSpec spec;
  spec.n = 1024.0;
  spec.alpha = 1.5;
  EXPECT_NEAR(spec.width(), std::sqrt(32.0), 1e-12);
  spec.alpha = 1.999;
  EXPECT_NEAR(spec.width(), 1.0, 0.01);
}

TEST(Box, IndicatorMassIsTheArea) {
  for (double n : {16.0, 64.0, 256.0}) {
    for (bool conjugate : {false, true}) {
      BoxSpec spec;
      spec.n = n;
      spec.conjugate = conjugate;
      const SpaceTimeField box = box_data(spec);
      const double w = spec.width();
      // Each xi column holds the closed strip of height 2, so the count
      // exceeds the area by at most one tau cell per column.
      EXPECT_NEAR(integral(box), 2.0 * w, w * box.dtau() * 1.001);
      for (const auto& z : box.values()) EXPECT_TRUE(z == Complex(1.0) || z == Complex{});
      EXPECT_GE(box.xi(0), conjugate ? -n : n);
      EXPECT_LE(box.xi(box.nxi() - 1), (conjugate ? -n : n) + w);
    }
  }
}

TEST(Box, RejectsCoarseResolution) {
  BoxSpec spec;
  spec.xi_samples_per_box = 4;
  EXPECT_THROW(box_data(spec), ValidationError);
  spec = BoxSpec{};
  spec.tau_samples_per_unit = 2;
  EXPECT_THROW(box_data(spec), ValidationError);
  spec = BoxSpec{};
  spec.n = 8.0;
  EXPECT_THROW(box_data(spec), ValidationError);
}

TEST(Box, XsbNormGrowsLikeTheFactorExponent) {
  for (double s : {0.0, 0.125}) {
    std::vector<ScanPoint> points;
    for (double n = 16.0; n <= 256.0; n *= 2.0) {
      BoxSpec spec;
      spec.n = n;
      points.push_back({n, xsb_norm(box_data(spec), s, 0.51, spec.alpha, Sign::minus)});
    }
    const ScanResult fit = fit_power_law("N", points);
    EXPECT_NEAR(fit.fitted_slope, s + 0.125, 0.15) << "s " << s;
  }
}

TEST(Trilinear, DeltasCombine) {
  const double dxi = 0.5, dtau = 0.25;
  SpaceTimeField a(1.0, dxi, 1, 2.0, dtau, 1), b(-3.0, dxi, 1, 0.5, dtau, 1), c(0.5, dxi, 1, -1.0, dtau, 1);
  a.at(0, 0) = Complex(2.0, 1.0);
  b.at(0, 0) = Complex(0.0, -1.0);
  c.at(0, 0) = 3.0;
  const SpaceTimeField out = trilinear_convolution(a, b, c);
  ASSERT_EQ(out.nxi(), 1u);
  ASSERT_EQ(out.ntau(), 1u);
  EXPECT_NEAR(out.xi(0), -1.5, 1e-15);
  EXPECT_NEAR(out.tau(0), 1.5, 1e-15);
  const Complex expected = Complex(2.0, 1.0) * Complex(0.0, -1.0) * 3.0 * std::pow(dxi * dtau, 2);
  EXPECT_NEAR(std::abs(out.at(0, 0) - expected), 0.0, 1e-15);
}

TEST(TrilinearProperty, MatchesDirectTripleSum) {
  Gen gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    const double dxi = gen.uniform(0.1, 1.0), dtau = gen.uniform(0.1, 1.0);
    const SpaceTimeField f1 = random_field(gen, dxi, dtau);
    const SpaceTimeField f2 = random_field(gen, dxi, dtau);
    const SpaceTimeField f3 = random_field(gen, dxi, dtau);
    const SpaceTimeField out = trilinear_convolution(f1, f2, f3);
    ASSERT_EQ(out.nxi(), f1.nxi() + f2.nxi() + f3.nxi() - 2);
    ASSERT_EQ(out.ntau(), f1.ntau() + f2.ntau() + f3.ntau() - 2);
    EXPECT_NEAR(out.xi0(), f1.xi0() + f2.xi0() + f3.xi0(), 1e-12);
    EXPECT_NEAR(out.tau0(), f1.tau0() + f2.tau0() + f3.tau0(), 1e-12);

    SpaceTimeField direct(out.xi0(), dxi, out.nxi(), out.tau0(), dtau, out.ntau());
    const double w = std::pow(dxi * dtau, 2);
    for (std::size_t j1 = 0; j1 < f1.ntau(); ++j1)
      for (std::size_t i1 = 0; i1 < f1.nxi(); ++i1)
        for (std::size_t j2 = 0; j2 < f2.ntau(); ++j2)
          for (std::size_t i2 = 0; i2 < f2.nxi(); ++i2)
            for (std::size_t j3 = 0; j3 < f3.ntau(); ++j3)
              for (std::size_t i3 = 0; i3 < f3.nxi(); ++i3)
                direct.at(j1 + j2 + j3, i1 + i2 + i3) += w * f1.at(j1, i1) * f2.at(j2, i2) * f3.at(j3, i3);
    for (std::size_t k = 0; k < out.values().size(); ++k) {
      EXPECT_NEAR(std::abs(out.values()[k] - direct.values()[k]), 0.0, 1e-10);
    }
  }
}

TEST(Trilinear, RejectsMismatchedLattices) {
  SpaceTimeField a(0.0, 0.5, 2, 0.0, 0.25, 2), b(0.0, 0.5, 2, 0.0, 0.3, 2);
  EXPECT_THROW(trilinear_convolution(a, b, a), ValidationError);
}

// The boxes sit within 1 of their curves, so the output can only sit off
// tau = |xi|^alpha by 3 plus the spread of the four-wave phase over the boxes.
TEST(Trilinear, BoxOutputHugsTheDispersionCurve) {
  const double alpha = 1.5, n = 64.0;
  BoxSpec spec;
  spec.n = n;
  spec.alpha = alpha;
  const SpaceTimeField u1 = box_data(spec);
  spec.conjugate = true;
  const SpaceTimeField u2 = box_data(spec);
  const SpaceTimeField out = trilinear_convolution(u1, u2, u1);

  double phase = 0.0;
  for (std::size_t a = 0; a < u1.nxi(); ++a)
    for (std::size_t b = 0; b < u2.nxi(); ++b)
      for (std::size_t c = 0; c < u1.nxi(); ++c) {
        const double x1 = u1.xi(a), x2 = u2.xi(b), x3 = u1.xi(c);
        const double d = dispersion_symbol(alpha, x1) - dispersion_symbol(alpha, x2) +
                         dispersion_symbol(alpha, x3) - dispersion_symbol(alpha, x1 + x2 + x3);
        phase = std::max(phase, std::abs(d));
      }
  // Of order alpha(alpha-1) (2W)^2 N^{alpha-2} = 3, independent of N.
  EXPECT_LT(phase, 4.0);

  double total = 0.0;
  for (std::size_t j = 0; j < out.ntau(); ++j) {
    for (std::size_t i = 0; i < out.nxi(); ++i) {
      if (out.at(j, i) == Complex{}) continue;
      total += std::norm(out.at(j, i));
      EXPECT_LE(std::abs(out.tau(j) - dispersion_symbol(alpha, out.xi(i))), 3.0 + phase + 1e-9);
      EXPECT_GE(out.xi(i), n - 1e-9);
      EXPECT_LE(out.xi(i), n + 3.0 * spec.width() + 1e-9);
    }
  }
  EXPECT_GT(total, 0.0);
}

TEST(ChangeOfVariables, Examples) {
  const double alpha = 1.5, n = 16.0;
  const SlowVariables at_zero = change_of_variables(0.0, 0.7, n, alpha);
  EXPECT_EQ(at_zero.s, 0.0);
  EXPECT_NEAR(at_zero.y, 0.7 * std::pow(alpha * (alpha - 1.0) / 2.0, -0.5) * std::pow(n, (2.0 - alpha) / 2.0), 1e-13);

  const SlowVariables nls = change_of_variables(0.3, 0.7, n, 2.0);
  EXPECT_NEAR(nls.y, 0.7 + 2.0 * n * 0.3, 1e-12);
  EXPECT_EQ(nls.s, 0.3);

  // The point y = 0 travels at -alpha N^{alpha-1} in x.
  const double v = -alpha * std::pow(n, alpha - 1.0);
  for (double t : {0.1, 0.5, 2.0}) EXPECT_NEAR(change_of_variables(t, v * t, n, alpha).y, 0.0, 1e-12);
  EXPECT_THROW(change_of_variables(0.0, 0.0, 2.0, alpha), ValidationError);
}

TEST(ApproximateSolution, InitialRecordIsTheModulatedProfile) {
  const double alpha = 1.5, n = 16.0;
  const Trajectory v = free_profile(0.3);
  const Grid target(512, 20.0);
  const Trajectory big = approximate_solution(v, n, alpha, target);
  ASSERT_EQ(big.size(), v.size());
  EXPECT_EQ(big.config.grid.nx(), 512u);
  EXPECT_EQ(big.config.alpha, alpha);
  for (std::size_t j = 0; j < target.nx(); j += 7) {
    const double x = target.x(j);
    const double y = change_of_variables(0.0, x, n, alpha).y;
    const Complex expected = std::polar(1.0, n * x) * 0.5 * std::exp(-0.5 * y * y);
    EXPECT_NEAR(std::abs(big.states[0][j] - expected), 0.0, 1e-10) << "x " << x;
  }
}

TEST(ApproximateSolution, LaterRecordsFollowTheSlowVariables) {
  const double alpha = 1.5, n = 16.0;
  const Trajectory v = free_profile(0.3);
  const Grid target(512, 20.0);
  const Trajectory big = approximate_solution(v, n, alpha, target);
  const std::size_t r = big.size() - 1;
  std::vector<double> ys;
  for (std::size_t j = 0; j < target.nx(); ++j) ys.push_back(change_of_variables(big.times[r], target.x(j), n, alpha).y);
  const ComplexVector slow = evaluate_band_limited(v.states[r], ys, true);
  for (std::size_t j = 0; j < target.nx(); ++j) {
    const Complex expected = std::polar(1.0, n * target.x(j) + std::pow(n, alpha) * big.times[r]) * slow[j];
    EXPECT_NEAR(std::abs(big.states[r][j] - expected), 0.0, 1e-10);
  }
}

TEST(ApproximateSolution, MassCarriesTheJacobian) {
  const Trajectory v = free_profile(0.1);
  for (double alpha : {1.2, 1.5, 1.8}) {
    for (double n : {16.0, 32.0}) {
      const Trajectory big = approximate_solution(v, n, alpha, Grid(4096, 40.0));
      const double expected = std::sqrt(curvature_scale(alpha, n)) * mass(v.states[0]);
      EXPECT_NEAR(mass(big.states[0]), expected, 1e-8 * expected) << alpha << " " << n;
    }
  }
}

TEST(ApproximateSolution, RejectsUnresolvedTargets) {
  const Trajectory v = free_profile(0.1);
  EXPECT_THROW(approximate_solution(v, 16.0, 1.5, Grid(64, 20.0)), ResolutionError);
  EXPECT_THROW(approximate_solution(v, 2.0, 1.5, Grid(512, 20.0)), ValidationError);
}

TEST(Wavepacket, PlainGaussianWithoutCarrier) {
  const Grid g(256, 40.0);
  WavepacketSpec spec;
  spec.carrier = 0.0;
  const Field f = modulated_wavepacket(spec, g);
  for (std::size_t j = 0; j < g.nx(); ++j) EXPECT_NEAR(std::abs(f[j] - std::exp(-0.5 * g.x(j) * g.x(j))), 0.0, 1e-15);
}

TEST(WavepacketProperty, L2NormScalesWithTheEnvelopeWidth) {
  // ||w||_{L^2} by Simpson's rule on a fine lattice.
  auto l2 = [](Envelope e) {
    const int n = 200000;
    const double a = -10.0, h = 20.0 / n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double w = envelope_value(e, a + i * h);
      sum += (i == 0 || i == n ? 1.0 : (i % 2 ? 4.0 : 2.0)) * w * w;
    }
    return std::sqrt(sum * h / 3.0);
  };
  Gen gen(9);
  for (Envelope e : {Envelope::gaussian, Envelope::bump}) {
    const double norm_w = l2(e);
    if (e == Envelope::gaussian) EXPECT_NEAR(norm_w, std::pow(kPi, 0.25), 1e-10);
    for (int trial = 0; trial < 20; ++trial) {
      WavepacketSpec spec;
      spec.envelope = e;
      spec.amplitude = gen.uniform(-3.0, 3.0);
      spec.tau_scale = gen.uniform(0.5, 4.0);
      spec.carrier = gen.uniform(1.0, 30.0);
      spec.x0 = gen.uniform(-5.0, 5.0);
      const double expected = std::abs(spec.amplitude) * std::sqrt(spec.tau_scale) * norm_w;
      EXPECT_NEAR(sobolev_norm(modulated_wavepacket(spec, Grid(2048, 100.0)), 0.0), expected, 0.01 * expected);
    }
  }
}

TEST(Wavepacket, RejectsWrapAround) {
  WavepacketSpec spec;
  spec.tau_scale = 10.0;
  EXPECT_THROW(modulated_wavepacket(spec, Grid(128, 20.0)), WrapAroundError);
}

TEST(Wavepacket, Hypotheses) {
  WavepacketSpec spec;
  spec.carrier = 4.0;
  spec.tau_scale = 0.25;
  EXPECT_TRUE(spec.hypotheses_hold());
  spec.tau_scale = 0.2;
  EXPECT_FALSE(spec.hypotheses_hold());
  spec.s = -0.5;
  spec.sigma = 1.0;
  spec.tau_scale = 0.125;  // 0.125 * 4^{1/2} < 1
  EXPECT_FALSE(spec.hypotheses_hold());
  spec.tau_scale = 0.5;
  EXPECT_TRUE(spec.hypotheses_hold());
  spec.sigma = 0.25;
  EXPECT_FALSE(spec.hypotheses_hold());
}

TEST(Rescale, UnitLambdaIsTheIdentity) {
  const Trajectory v = free_profile(0.2);
  const Trajectory same = rescale_solution(v, 1.0, 2.0, v.config.grid);
  ASSERT_EQ(same.size(), v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    EXPECT_EQ(same.times[r], v.times[r]);
    EXPECT_LT(relative_l2(same.states[r], v.states[r]), 1e-15);
  }
}

TEST(Rescale, MassScalesLinearly) {
  const Trajectory v = free_profile(0.1);
  for (double lambda : {1.5, 2.0, 4.0}) {
    const Grid shrunk(256, 40.0 / lambda);
    const Grid other(512, 40.0 / lambda);
    for (const Grid& g : {shrunk, other}) {
      const Trajectory u = rescale_solution(v, lambda, 2.0, g);
      EXPECT_NEAR(mass(u.states[0]), lambda * mass(v.states[0]), 1e-8 * lambda * mass(v.states[0]));
      EXPECT_NEAR(u.times.back(), v.times.back() / (lambda * lambda), 1e-15);
    }
  }
}

TEST(Rescale, RescaledSolutionSolvesTheScaledEquation) {
  SimConfig cfg;
  cfg.alpha = 1.5;
  cfg.gamma = 1.0;
  cfg.dt = 1e-4;
  cfg.t_final = 0.05;
  cfg.grid = Grid(128, 20.0);
  cfg.record_every = 10;
  const Trajectory u = evolve(make_initial_data("gaussian:a=1,w=1", cfg.grid), cfg);
  const double lambda = 2.0;
  const Trajectory scaled = rescale_solution(u, lambda, cfg.alpha, Grid(128, 20.0 / lambda));
  EXPECT_NEAR(scaled.config.gamma, std::pow(lambda, cfg.alpha - 2.0), 1e-15);
  for (std::size_t r : {std::size_t{1}, scaled.size() / 2}) {
    EXPECT_LT(pde_residual(scaled, r).relative, 1e-6) << "record " << r;
  }
}

TEST(Rescale, RejectsUnresolvedTargetsAndSmallLambda) {
  const Trajectory v = free_profile(0.1);
  EXPECT_THROW(rescale_solution(v, 0.5, 2.0, v.config.grid), ValidationError);
  EXPECT_THROW(rescale_solution(v, 4.0, 2.0, Grid(16, 10.0)), ResolutionError);
}

TEST(LambdaFor, Examples) {
  EXPECT_NEAR(lambda_for(0.125, 1.5, 1024.0), 1.0, 1e-15);
  EXPECT_NEAR(lambda_for(0.0, 1.5, 256.0), 4.0, 1e-12);
  EXPECT_THROW(lambda_for(-0.5, 1.5, 16.0), ValidationError);
}

TEST(LambdaForProperty, ExponentSignFollowsCriticalRegularity) {
  Gen gen(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const double alpha = gen.uniform(1.05, 2.0), s = gen.uniform(-0.49, 1.0);
    const double critical = (2.0 - alpha) / 4.0;
    if (std::abs(s - critical) < 1e-6) continue;
    EXPECT_EQ(lambda_for(s, alpha, 64.0) > 1.0, s < critical) << alpha << " " << s;
  }
}

TEST(NlsPair, ZeroDeltaGivesIdenticalFields) {
  const auto [a, b] = nls_pair(0.1, 0.0, Grid(256, 200.0), NlsProfile{});
  EXPECT_EQ(relative_l2(a, b), 0.0);
  EXPECT_NEAR(sobolev_norm(a, 0.0), 0.1, 1e-14);
}

TEST(NlsPairProperty, SeparationRatioIsDeltaOverEpsilon) {
  Gen gen(13);
  for (int trial = 0; trial < 50; ++trial) {
    NlsProfile p;
    p.shape = trial % 2 ? Profile::sech : Profile::gaussian;
    p.width = gen.uniform(1.0, 8.0);
    p.s = gen.uniform(-1.0, 1.0);
    const double eps = gen.uniform(0.01, 0.5), delta = eps * gen.uniform(1e-3, 0.5);
    const auto [a, b] = nls_pair(eps, delta, Grid(512, 200.0), p);
    EXPECT_NEAR(sobolev_norm(a, p.s), eps, 1e-12);
    EXPECT_NEAR(sobolev_distance(a, b, p.s) / sobolev_norm(a, p.s), delta / eps, 0.01 * delta / eps);
  }
}

TEST(NlsPair, RejectsBadInputs) {
  EXPECT_THROW(nls_pair(0.0, 0.0, Grid(64, 50.0), NlsProfile{}), ValidationError);
  EXPECT_THROW(nls_pair(0.1, 0.2, Grid(64, 50.0), NlsProfile{}), ValidationError);
  NlsProfile wide;
  wide.width = 20.0;
  EXPECT_THROW(nls_pair(0.1, 0.01, Grid(64, 50.0), wide), ValidationError);
}

TEST(Constructions, Deterministic) {
  BoxSpec spec;
  spec.n = 32.0;
  EXPECT_EQ(box_data(spec).values(), box_data(spec).values());
  WavepacketSpec w;
  w.carrier = 8.0;
  const Field a = modulated_wavepacket(w, Grid(256, 40.0)), b = modulated_wavepacket(w, Grid(256, 40.0));
  for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(a[j], b[j]);
}
