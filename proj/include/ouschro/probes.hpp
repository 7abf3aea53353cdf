#pragma once

#include "ouschro/propagate.hpp"
#include "ouschro/riccati.hpp"

namespace ouschro {

/// Outcome of a joint-decay probe at times 0 and s. a_max and b_max are the
/// suprema of admissible Gaussian weights, computed exactly from coefficients;
/// product = a_max * b_max * sin^2 s is compared against the threshold 1/16.
struct UncertaintyProbeResult {
  double s = 0.0;
  double a_max = 0.0;
  double b_max = 0.0;
  double product = 0.0;
  double threshold = 1.0 / 16.0;
  bool attained = false;  // suprema attained (pointwise probe only)
  bool endpoint = false;  // nonzero state sitting exactly at product = 1/16
  double C = 0.0;         // pointwise bound constant (pointwise probe)
};

/// Weighted-L^2 regime: admissible weights form open intervals, so the
/// suprema are never attained.
UncertaintyProbeResult uncertainty_probe_l2(const GaussianExponential& psi,
                                            double s);

/// Pointwise regime: Gaussian bounds hold at the rate itself with an explicit
/// constant, so the suprema are attained (for centered states).
UncertaintyProbeResult uncertainty_probe_linf(const GaussianExponential& psi,
                                              double s);

/// Joint Gaussian decay of g and its Fourier transform; product <= pi^2 with
/// equality exactly when the chirp vanishes.
struct HardyProbeResult {
  double a_rate = 0.0;
  double b_rate = 0.0;
  double product = 0.0;
};
HardyProbeResult hardy_probe(const GaussianExponential& g);

struct DispersiveProbeResult {
  double p = 0.0;
  double p_conj = 0.0;  // Hoelder conjugate (inf for p = 1)
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double constant = 0.0;
  bool in_theorem = false;  // p in [1, 2]
};

/// Sharp-constant dispersive bound probe, closed-form route.
DispersiveProbeResult dispersive_probe(const GaussianExponential& psi,
                                       const EvolutionTime& t, double p);
/// Same on sampled data via the grid propagator.
DispersiveProbeResult dispersive_probe(const Field& psi, const EvolutionTime& t,
                                       double p,
                                       const PropagatorConfig& cfg = {});

/// Finite-difference residuals of the gauge transform u = e^{-h} f:
/// forward  : i(Lap u + Phi u) - u_t  relative to the inner-grid L^2,
/// converse : i(Lap f - 2<grad h, grad f>) - f_t.
struct RiccatiCheckResult {
  double forward_residual = 0.0;
  double converse_residual = 0.0;
  double max_residual() const {
    return forward_residual > converse_residual ? forward_residual
                                                : converse_residual;
  }
};

RiccatiCheckResult riccati_gauge_check(const RiccatiSpec& spec,
                                       const GaussianExponential& data,
                                       double t_sample, const Grid& grid,
                                       double dt = 1e-4);

/// Cross-validates the weighted transform-side integral against the weighted
/// gamma-norm of the evolved field (the evolved side is computed by the
/// kernel path when the oscillation guard allows, keeping the routes
/// independent).
struct WeightedIdentityResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_error = 0.0;
  bool truncation_unsafe = false;
};

WeightedIdentityResult weighted_norm_identity_check(
    const Field& psi, const EvolutionTime& t, double b,
    const PropagatorConfig& cfg = {});

}  // namespace ouschro
