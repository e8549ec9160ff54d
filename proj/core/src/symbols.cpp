#include "fnls/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fnls/errors.hpp"
#include "fnls/report.hpp"

namespace fnls {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw ValidationError("alpha must lie in (1, 2], got " + format_double(alpha));
  }
}

void require_sum_zero(double xi1, double xi2, double xi3) {
  const double scale = std::max({1.0, std::abs(xi1), std::abs(xi2), std::abs(xi3)});
  if (std::abs(xi1 + xi2 + xi3) > 1e-9 * scale) {
    throw ValidationError("frequency triple does not sum to zero");
  }
}

bool comparable(double a, double b) { return std::max(a, b) <= 4.0 * std::min(a, b); }

}  // namespace

double dispersion_symbol(double alpha, double xi) {
  require_alpha(alpha);
  return dispersion_symbol_unchecked(alpha, xi);
}

double dispersion_symbol_unchecked(double alpha, double xi) {
  const double a = std::abs(xi);
  if (alpha == 2.0) return a * a;
  return a == 0.0 ? 0.0 : std::pow(a, alpha);
}

double sobolev_weight(double s, double xi) { return std::pow(1.0 + xi * xi, 0.5 * s); }

double bracket(double x) { return 1.0 + std::abs(x); }

double resonance(double alpha, double xi1, double xi2, double xi3) {
  require_alpha(alpha);
  require_sum_zero(xi1, xi2, xi3);
  return dispersion_symbol_unchecked(alpha, xi1) - dispersion_symbol_unchecked(alpha, xi2) +
         dispersion_symbol_unchecked(alpha, xi3);
}

double curvature_scale(double alpha, double n) {
  return 0.5 * alpha * (alpha - 1.0) * std::pow(n, alpha - 2.0);
}

double remainder_symbol(double alpha, double n, double xi) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw ValidationError("remainder_symbol needs alpha in (1, 2)");
  }
  if (!(n >= 4.0)) throw ValidationError("remainder_symbol needs N >= 4");

  const double root_c = std::sqrt(curvature_scale(alpha, n));
  const double z = xi / (root_c * n);
  const double n_alpha = std::pow(n, alpha);

  if (std::abs(xi) <= std::pow(n, 0.5 * alpha) / 8.0 && std::abs(z) <= 0.5) {
    // N^a * sum_{j>=3} binom(a, j) z^j
    double coeff = alpha * (alpha - 1.0) * (alpha - 2.0) / 6.0;
    double power = z * z * z;
    double sum = 0.0;
    for (int j = 3; j < 400; ++j) {
      const double term = coeff * power;
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
      coeff *= (alpha - j) / (j + 1.0);
      power *= z;
    }
    return n_alpha * sum;
  }
  return std::pow(std::abs(1.0 + z), alpha) * n_alpha - n_alpha -
         alpha * std::pow(n, alpha - 1.0) * xi / root_c - xi * xi;
}

double remainder_bound_constant(double alpha) {
  const double q = 0.5 * alpha * (alpha - 1.0);
  const double first = 8.0 * alpha * std::pow(q, -1.5);
  const double second = std::pow(2.0, 4.0 - alpha) / 6.0 * (2.0 - alpha) / std::sqrt(q);
  return std::max(first, second);
}

double dyadic_shell(double magnitude) {
  const double m = std::max(std::abs(magnitude), 1.0);
  return std::exp2(std::round(std::log2(m)));
}

DyadicClass classify_dyadic(double alpha, double xi1, double xi2, double xi3, double lam1,
                            double lam2, double lam3) {
  const double h = resonance(alpha, xi1, xi2, xi3);
  DyadicClass c;
  c.n1 = dyadic_shell(xi1);
  c.n2 = dyadic_shell(xi2);
  c.n3 = dyadic_shell(xi3);
  c.h = dyadic_shell(h);
  c.l1 = dyadic_shell(lam1);
  c.l2 = dyadic_shell(lam2);
  c.l3 = dyadic_shell(lam3);

  double ns[3] = {c.n1, c.n2, c.n3};
  double ls[3] = {c.l1, c.l2, c.l3};
  std::sort(ns, ns + 3);
  std::sort(ls, ls + 3);
  c.admissible = comparable(ns[2], ns[1]) && comparable(ls[2], std::max(c.h, ls[1]));
  return c;
}

}  // namespace fnls
