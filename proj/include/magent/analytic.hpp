#pragma once

// Closed-form stationary covariance matrices at resonance with matched
// couplings and zero magnon occupation. Used as oracles for the numerical
// pipeline and as the data source for the reduced-parameter density plots.

#include "magent/cvgaussian.hpp"

namespace magent {

/// a = kappa_m / kappa_a, b = g / kappa_a.
struct ReducedParams {
  double a = 0.2;
  double b = 5.0;
  double r = 0.0;
};

void validate(const ReducedParams& p);

/// Cavity pair with the magnons decoupled: the two-mode squeezed vacuum.
CovarianceMatrix vaa_analytic(double r);

/// max{0, -ln min{|cosh r - sinh r|^2, |cosh r + sinh r|^2}} (= 2r).
double eaa_analytic(double r);

/// Magnon pair, ordering (x1, y1, x2, y2).
CovarianceMatrix vmm_analytic(const ReducedParams& p);

/// Cavity and magnon in the same cavity, ordering (X, Y, x, y).
CovarianceMatrix vam_analytic(const ReducedParams& p);

/// Unclamped -ln(2 nu~_-) of vam_analytic.
double cavity_magnon_N(const ReducedParams& p);

}  // namespace magent
