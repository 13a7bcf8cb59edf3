#pragma once

namespace elicit {

/// ln B(a, b).
double log_beta(double a, double b);

/// Regularized incomplete beta function I_x(a, b), evaluated by the
/// Numerical-Recipes continued fraction (modified Lentz) to 1e-12.
double regularized_incomplete_beta(double a, double b, double x);

/// Beta(a, b) density at x, with the usual boundary limits for shapes
/// below/above 1.
double beta_pdf(double a, double b, double x);

/// Inverse CDF of Beta(a, b) by bisection.
double beta_cdf_inverse(double a, double b, double p);

}  // namespace elicit
