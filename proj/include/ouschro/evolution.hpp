#pragma once

#include "ouschro/gaussian.hpp"

namespace ouschro {

enum class TimeBranch { JPlus, JMinus, SingularZero, SingularPi };

/// Guard width on |sin t| inside which a time is classified singular.
inline constexpr double kSingularEps = 1e-9;

/// Flow time with its 2pi reduction, branch classification and the covariance
/// value Q(t) = e^{-it} sin t. The evolution group is exactly 2pi-periodic, so
/// every trigonometric quantity is taken at t_reduced; the original t is kept
/// for the harmonic-oscillator phase, which is only 4pi-periodic.
struct EvolutionTime {
  double t = 0.0;
  double t_reduced = 0.0;  // t mod 2pi in [0, 2pi)
  double sin_t = 0.0;
  double cot_t = 0.0;
  TimeBranch branch = TimeBranch::SingularZero;
  Complex q{0.0, 0.0};  // Q(t) = e^{-it} sin t

  bool singular() const {
    return branch == TimeBranch::SingularZero ||
           branch == TimeBranch::SingularPi;
  }

  /// Kernel prefactor in log form (phases never wrap a principal branch):
  ///   (4pi)^{-m/2} e^{i m t/2} e^{-i pi m/4}   (sin t)^{-m/2}   on J+,
  ///   (4pi)^{-m/2} e^{i m t/2} e^{-3i pi m/4}  |sin t|^{-m/2}   on J-.
  Complex rho_log(int m) const;
  Complex rho(int m) const { return std::exp(rho_log(m)); }
};

/// Classifies t and populates the covariance data. Singular times are
/// classified, never rejected.
EvolutionTime covariance_q(double t);

enum class OuPath { Transform, Symbol };
enum class HoPath { Direct, Gauge };

/// e^{itL} phi for L = Laplacian - <x, grad>, acting on the phi-side state.
///
/// Symbol path: the closed coefficient flow with D = 1 + 4 i Q(t) a,
///   a' = a e^{-2it}/D,  b' = e^{-it} b/D,  c' = c + iQ <b,b>/D - (m/2) Log D,
/// valid for every t (continuous through the singular times); the principal
/// Log D is the continuous branch because D stays off (-inf, 0] whenever the
/// psi-side state is integrable.
///
/// Transform path: gauge -> chirp -> Fourier -> dilation by 1/(4 pi sin t) ->
/// chirp -> prefactor -> inverse gauge; requires a nonsingular branch.
GaussianExponential ou_evolve(const GaussianExponential& g_phi,
                              const EvolutionTime& t, OuPath path);

/// e^{itH} u0 for H = Laplacian - |x|^2/4. Direct is the chirp sandwich with
/// the oscillator prefactor; Gauge conjugates through e^{itL}.
GaussianExponential ho_evolve(const GaussianExponential& g_u0,
                              const EvolutionTime& t, HoPath path);

/// Real-time drift semigroup for u_t - Laplacian u + 2 sqrt(omega) <x, grad u> = 0.
/// Requires t > 0, omega > 0 and the Gaussian-integral admissibility
/// Re a > -(sqrt(omega)/2) (coth(2 t sqrt(omega)) + 1).
GaussianExponential mehler_evolve(const GaussianExponential& g_phi, double t,
                                  double omega);

/// Analytic continuation of the Mehler coefficient flow to complex time tau.
/// The log branch is tracked along the arc |tau| e^{i theta} from the real
/// axis; rational coefficients are evaluated exactly at the endpoint.
GaussianExponential mehler_evolve_complex_time(const GaussianExponential& g_phi,
                                               Complex tau, double omega);

}  // namespace ouschro
