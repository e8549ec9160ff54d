#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fnls/errors.hpp"
#include "fnls/fft.hpp"
#include "fnls/grid.hpp"
#include "fnls/norms.hpp"
#include "fnls/spectral.hpp"
#include "generators.hpp"

using namespace fnls;
using fnls::testing::Gen;
using fnls::testing::relative_l2;

namespace {

constexpr double kPi = std::numbers::pi;

// Direct O(n^2) transform with the library's normalization.
ComplexVector direct_spectral(const Field& f) {
  const Grid& g = f.grid();
  ComplexVector out(g.nx(), Complex(0.0));
  for (std::size_t i = 0; i < g.nx(); ++i) {
    for (std::size_t j = 0; j < g.nx(); ++j) {
      out[i] += f[j] * std::exp(Complex(0.0, -g.wavenumber(i) * g.x(j)));
    }
    out[i] *= g.dx();
  }
  return out;
}

// |u|^2 u for a band-limited u, sampled exactly on a 4x finer lattice and
// truncated back to the grid window.
Field cubic_oracle(const Field& u) {
  const Grid& g = u.grid();
  const Field spec = as_spectral(u);
  const Grid fine(4 * g.nx(), g.length());
  ComplexVector cube(fine.nx());
  for (std::size_t j = 0; j < fine.nx(); ++j) {
    Complex v(0.0);
    for (std::size_t i = 0; i < g.nx(); ++i) v += spec[i] * std::exp(Complex(0.0, g.wavenumber(i) * fine.x(j)));
    v /= g.length();
    cube[j] = std::norm(v) * v;
  }
  const ComplexVector fine_hat = direct_spectral(Field(fine, Representation::physical, cube));
  ComplexVector out(g.nx());
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const long m = g.mode(i);
    out[i] = fine_hat[m >= 0 ? static_cast<std::size_t>(m) : static_cast<std::size_t>(m + static_cast<long>(fine.nx()))];
  }
  return Field(g, Representation::spectral, out);
}

double max_abs_diff(const Field& a, const Field& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(Grid, FrequencyLatticeOfEightPointsOnTwoPi) {
  const Grid g = make_grid(8, 2.0 * kPi);
  std::vector<double> k = g.wavenumbers();
  std::sort(k.begin(), k.end());
  const std::vector<double> expected{-4, -3, -2, -1, 0, 1, 2, 3};
  for (std::size_t i = 0; i < k.size(); ++i) EXPECT_NEAR(k[i], expected[i], 1e-15);
  EXPECT_DOUBLE_EQ(g.dx(), kPi / 4.0);
}

TEST(Grid, SpacingHalfOnFourPi) { EXPECT_DOUBLE_EQ(make_grid(16, 4.0 * kPi).dk(), 0.5); }

TEST(Grid, StorageOrderIsFftOrder) {
  const Grid g(8, 2.0 * kPi);
  const long expected[] = {0, 1, 2, 3, -4, -3, -2, -1};
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(g.mode(i), expected[i]);
  EXPECT_DOUBLE_EQ(g.x(0), -kPi);
  EXPECT_DOUBLE_EQ(g.k_max(), 4.0);
}

TEST(Grid, RejectsBadSizes) {
  EXPECT_THROW(make_grid(12, 1.0), ValidationError);
  EXPECT_THROW(make_grid(4, 1.0), ValidationError);
  EXPECT_THROW(make_grid(16, 0.0), ValidationError);
  EXPECT_THROW(make_grid(16, -2.0), ValidationError);
  EXPECT_THROW(make_grid(16, std::numeric_limits<double>::infinity()), ValidationError);
}

TEST(Transform, SingleModeGivesLengthAtThatMode) {
  const Grid g(32, 2.0 * kPi);
  const Field f = Field::from_function(g, [](double x) { return std::exp(Complex(0.0, 3.0 * x)); });
  const Field s = to_spectral(f);
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const Complex expected = g.mode(i) == 3 ? Complex(g.length()) : Complex(0.0);
    EXPECT_NEAR(std::abs(s[i] - expected), 0.0, 1e-12) << "mode " << g.mode(i);
  }
}

TEST(Transform, ZeroMapsToZero) {
  const Field z = Field::zeros(Grid(16, 3.0));
  const Field s = to_spectral(z);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i], Complex(0.0));
}

TEST(Transform, MatchesDirectSummation) {
  Gen gen(11);
  const Grid g(64, 7.5);
  const Field f = gen.field(g);
  const Field s = to_spectral(f);
  const ComplexVector d = direct_spectral(f);
  double scale = 0.0, err = 0.0;
  for (std::size_t i = 0; i < g.nx(); ++i) {
    scale = std::max(scale, std::abs(d[i]));
    err = std::max(err, std::abs(s[i] - d[i]));
  }
  EXPECT_LT(err / scale, 1e-12);
}

TEST(Transform, IdempotentCallIsAnError) {
  const Field f = Field::zeros(Grid(16, 1.0));
  EXPECT_THROW(to_physical(f), ValidationError);
  EXPECT_THROW(to_spectral(to_spectral(f)), ValidationError);
  EXPECT_NO_THROW(as_physical(f));
}

TEST(TransformProperty, RoundTripAndParsevalOnRandomFields) {
  Gen gen(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const Grid g(std::size_t{1} << gen.integer(3, 10), gen.uniform(0.5, 200.0));
    const Field f = gen.field(g);
    const Field s = to_spectral(f);
    EXPECT_LT(relative_l2(to_physical(s), f), 1e-12);
    double phys = 0.0, spec = 0.0;
    for (std::size_t j = 0; j < g.nx(); ++j) phys += std::norm(f[j]);
    for (std::size_t i = 0; i < g.nx(); ++i) spec += std::norm(s[i]);
    phys *= g.dx();
    spec /= g.length();
    EXPECT_NEAR(phys, spec, 1e-12 * phys);
  }
}

TEST(FftPlan, ArbitraryLengthMatchesDirectDft) {
  Gen gen(5);
  for (std::size_t n : {1u, 3u, 7u, 12u, 45u}) {
    const FftPlan plan(n);
    ComplexVector x(n), fwd(n), back(n);
    for (auto& z : x) z = gen.complex();
    plan.forward(x, fwd);
    plan.backward(fwd, back);
    for (std::size_t m = 0; m < n; ++m) {
      Complex d(0.0);
      for (std::size_t j = 0; j < n; ++j) {
        d += x[j] * std::exp(Complex(0.0, -2.0 * kPi * static_cast<double>(j * m) / static_cast<double>(n)));
      }
      EXPECT_LT(std::abs(fwd[m] - d), 1e-12 * static_cast<double>(n));
      EXPECT_LT(std::abs(back[m] / static_cast<double>(n) - x[m]), 1e-12);
    }
  }
}

TEST(Cubic, PlaneWaveIsAnEigenfunction) {
  const Grid g(64, 2.0 * kPi);
  const Complex a(0.3, -0.2);
  const Field u = Field::from_function(g, [&](double x) { return a * std::exp(Complex(0.0, 5.0 * x)); });
  const Field c = cubic_nonlinearity(u);
  ASSERT_TRUE(c.is_physical());
  const Field expected = std::norm(a) * u;
  EXPECT_LT(relative_l2(c, expected), 1e-13);
}

TEST(Cubic, ZeroMapsToZero) {
  const Field c = cubic_nonlinearity(Field::zeros(Grid(32, 1.0), Representation::spectral));
  EXPECT_TRUE(c.is_spectral());
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c[i], Complex(0.0));
}

TEST(Cubic, TwoModesMatchFourTimesPaddedOracle) {
  const Grid g(16, 2.0 * kPi);
  const Field u = Field::from_function(g, [](double x) {
    return Complex(0.7, 0.1) * std::exp(Complex(0.0, 6.0 * x)) + Complex(-0.2, 0.5) * std::exp(Complex(0.0, -5.0 * x));
  });
  const Field c = as_spectral(cubic_nonlinearity(u));
  EXPECT_LT(max_abs_diff(c, cubic_oracle(u)), 1e-12 * g.length());
}

TEST(CubicProperty, RandomFullBandInputsMatchOracle) {
  Gen gen(77);
  for (int trial = 0; trial < 10; ++trial) {
    const Grid g(16, gen.uniform(1.0, 20.0));
    const Field u = gen.band_limited(g, 1.01);
    const Field c = as_spectral(cubic_nonlinearity(u));
    const Field o = cubic_oracle(u);
    double scale = 0.0;
    for (std::size_t i = 0; i < o.size(); ++i) scale = std::max(scale, std::abs(o[i]));
    EXPECT_LT(max_abs_diff(c, o), 1e-12 * scale);
  }
}

TEST(CubicProperty, HomogeneousOfDegreeThree) {
  Gen gen(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Grid g(64, gen.uniform(1.0, 50.0));
    const Field u = gen.band_limited(g, 0.8);
    const Complex c = gen.complex();
    const Field lhs = cubic_nonlinearity(c * u);
    const Field rhs = (std::norm(c) * c) * cubic_nonlinearity(u);
    EXPECT_LT(relative_l2(lhs, rhs), 1e-12);
  }
}

TEST(BandLimited, EvaluationReproducesTrigonometricPolynomial) {
  const Grid g(32, 10.0);
  const double k = 3.0 * g.dk();
  const Field f = Field::from_function(g, [&](double x) { return std::exp(Complex(0.0, k * x)) + 0.5; });
  const std::vector<double> pts{-4.9, -1.234, 0.0, 2.5, 4.99};
  const ComplexVector v = evaluate_band_limited(f, pts, false);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_LT(std::abs(v[i] - (std::exp(Complex(0.0, k * pts[i])) + 0.5)), 1e-12);
  }
  const ComplexVector outside = evaluate_band_limited(f, std::vector<double>{7.0}, true);
  EXPECT_EQ(outside[0], Complex(0.0));
  const ComplexVector periodic = evaluate_band_limited(f, std::vector<double>{7.0}, false);
  EXPECT_LT(std::abs(periodic[0] - (std::exp(Complex(0.0, k * -3.0)) + 0.5)), 1e-12);
}

TEST(BandLimited, AffineLatticeAgreesWithPointwise) {
  Gen gen(3);
  const Grid g(64, 12.0);
  const Field f = gen.band_limited(g, 0.6);
  std::vector<double> pts;
  for (int j = 0; j < 200; ++j) pts.push_back(-7.0 + 0.07 * j);
  const ComplexVector a = evaluate_band_limited(f, pts, true);
  const ComplexVector b = evaluate_band_limited_affine(f, -7.0, 0.07, pts.size(), true);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_LT(std::abs(a[i] - b[i]), 1e-10);
}

TEST(BandLimited, ResampleKeepsMassOfBandLimitedData) {
  Gen gen(4);
  const Grid g(64, 12.0);
  const Field f = gen.band_limited(g, 0.5);
  const Field up = resample(f, Grid(256, 12.0));
  EXPECT_NEAR(mass(up), mass(f), 1e-12 * mass(f));
  const Field back = resample(up, g);
  EXPECT_LT(relative_l2(back, f), 1e-12);
  EXPECT_THROW(resample(f, Grid(64, 13.0)), ValidationError);
}

TEST(WrapAround, EdgeMassOfCenteredGaussianIsTiny) {
  const Grid g(256, 40.0);
  const Field centered = Field::from_function(g, [](double x) { return std::exp(-x * x / 2.0); });
  EXPECT_LT(edge_mass_fraction(centered), 1e-30);
  EXPECT_NO_THROW(check_wraparound(centered, "centered"));
  const Field shifted = Field::from_function(g, [](double x) { return std::exp(-(x - 18.0) * (x - 18.0) / 2.0); });
  EXPECT_GT(edge_mass_fraction(shifted), 0.1);
  EXPECT_THROW(check_wraparound(shifted, "shifted"), WrapAroundError);
}

TEST(SpectralTail, SmoothDataHasNoTailAndNoiseDoes) {
  Gen gen(8);
  const Grid g(256, 40.0);
  EXPECT_LT(spectral_tail_fraction(Field::from_function(g, [](double x) { return std::exp(-x * x / 2.0); })), 1e-20);
  EXPECT_GT(spectral_tail_fraction(gen.field(g)), 0.1);
}
