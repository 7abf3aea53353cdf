#pragma once

#include "ouschro/grid.hpp"

namespace ouschro {

struct WeightedNormResult {
  double value = 0.0;
  /// Set when the boundary-shell integrand exceeds 1e-6 of the accumulated
  /// sum, i.e. the truncated box does not capture the integral.
  bool truncation_unsafe = false;
};

/// ( int e^{2w|x|^2} |f|^2 e^{-|x|^2/2} dx )^{1/2} by trapezoid quadrature.
WeightedNormResult weighted_l2_gamma_norm(const Field& f, double w);

/// Trapezoid L^p norm; p = inf returns the max modulus over nodes.
double lp_norm(const Field& f, double p);

inline double l2_norm(const Field& f) { return lp_norm(f, 2.0); }

/// ||a - b||_2 / ||b||_2 over the common grid.
double rel_l2_error(const Field& a, const Field& b);

}  // namespace ouschro
