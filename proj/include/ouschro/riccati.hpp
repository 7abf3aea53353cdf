#pragma once

#include "ouschro/gaussian.hpp"

namespace ouschro {

/// Quadratic gauge ansatz h(x,t) = A|x|^2 + B t with intended potential
/// Phi(x) = phi_quad |x|^2. The substitution u = e^{-h} f transfers Phi into
/// the drift exactly when i h_t + Laplacian h - |grad h|^2 = Phi.
struct RiccatiSpec {
  Complex A{0.0, 0.0};
  Complex B{0.0, 0.0};
  Complex phi_quad{0.0, 0.0};
};

/// Phi(x) = constant + quad |x|^2 implied by (A, B):
/// constant = iB + 2mA, quad = -4A^2.
struct RiccatiPotential {
  Complex quad{0.0, 0.0};
  Complex constant{0.0, 0.0};
};

inline RiccatiPotential riccati_potential(const RiccatiSpec& spec, int m) {
  RiccatiPotential p;
  p.quad = -4.0 * spec.A * spec.A;
  p.constant = Complex(0.0, 1.0) * spec.B + 2.0 * static_cast<double>(m) * spec.A;
  return p;
}

}  // namespace ouschro
