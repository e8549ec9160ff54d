#pragma once

namespace fnls {

// |xi|^alpha, the symbol of (-Delta)^{alpha/2}. Requires 1 < alpha <= 2;
// alpha = 2 is admitted as the classical Schrodinger limit.
double dispersion_symbol(double alpha, double xi);

// Same without the range check, for hot loops that validated alpha upstream.
double dispersion_symbol_unchecked(double alpha, double xi);

// (1 + xi^2)^{s/2}, the H^s weight.
double sobolev_weight(double s, double xi);

// 1 + |x|, the bracket used by X^{s,b} weights.
double bracket(double x);

// h = |xi1|^a - |xi2|^a + |xi3|^a on triples with xi1 + xi2 + xi3 = 0.
// Throws ValidationError when the sum is off by more than 1e-9*max(1,|xi|max).
double resonance(double alpha, double xi1, double xi2, double xi3);

// Coefficient alpha(alpha-1)/2 * N^{alpha-2}: the curvature of |xi|^alpha at
// xi = N, which sets the y-scale of the NLS approximation near frequency N.
double curvature_scale(double alpha, double n);

// Third-order Taylor remainder of the dispersion around frequency N after the
// NLS change of variables:
//
//   R(xi) = |xi/c^{1/2} + N|^a - N^a - a N^{a-1} xi / c^{1/2} - xi^2,
//   c = a(a-1)/2 * N^{a-2}.
//
// The leading three terms cancel to O(xi^3 N^{-a/2}); for small arguments the
// value is summed as a binomial series starting at the cubic term so no
// digits are lost. Requires N >= 4 and 1 < alpha < 2.
double remainder_symbol(double alpha, double n, double xi);

// Constant in |R(xi)| <= c1 N^{-alpha/2} |xi|^3:
//   c1 = max(8a (a(a-1)/2)^{-3/2}, 2^{4-a}/6 (2-a) (a(a-1)/2)^{-1/2}).
double remainder_bound_constant(double alpha);

// Rounds a magnitude to its dyadic shell 2^round(log2 max(m, 1)).
double dyadic_shell(double magnitude);

// Dyadic interaction class of a sum-zero frequency triple with modulations
// lambda_j = tau_j - h_j(xi_j).
struct DyadicClass {
  double n1 = 1, n2 = 1, n3 = 1;
  double h = 1;
  double l1 = 1, l2 = 1, l3 = 1;
  bool admissible = false;
};

// admissible iff N_max ~ N_med and L_max ~ max(H, L_med), where "~" means
// within a factor 4 after dyadic rounding.
DyadicClass classify_dyadic(double alpha, double xi1, double xi2, double xi3, double lam1,
                            double lam2, double lam3);

}  // namespace fnls
