#include "ouschro/evolution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ouschro {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI{0.0, 1.0};
}  // namespace

EvolutionTime covariance_q(double t) {
  if (!std::isfinite(t))
    throw std::invalid_argument("covariance_q: t must be finite");
  EvolutionTime et;
  et.t = t;
  double tr = t - kTwoPi * std::floor(t / kTwoPi);
  if (tr >= kTwoPi) tr = 0.0;
  et.t_reduced = tr;
  et.sin_t = std::sin(tr);
  et.cot_t = std::cos(tr) / et.sin_t;
  et.q = std::exp(-kI * tr) * et.sin_t;
  if (et.sin_t > kSingularEps) {
    et.branch = TimeBranch::JPlus;
  } else if (et.sin_t < -kSingularEps) {
    et.branch = TimeBranch::JMinus;
  } else {
    et.branch = std::cos(tr) > 0.0 ? TimeBranch::SingularZero
                                   : TimeBranch::SingularPi;
  }
  return et;
}

Complex EvolutionTime::rho_log(int m) const {
  if (singular())
    throw std::domain_error("rho_log: prefactor undefined at singular time");
  const double half_m = 0.5 * m;
  const double phase =
      branch == TimeBranch::JPlus ? -kPi * half_m / 2.0 : -3.0 * kPi * half_m / 2.0;
  return Complex(-half_m * std::log(4.0 * kPi) -
                     half_m * std::log(std::abs(sin_t)),
                 half_m * t_reduced + phase);
}

namespace {

GaussianExponential ou_evolve_symbol(const GaussianExponential& g,
                                     const EvolutionTime& t) {
  const Complex D = 1.0 + 4.0 * kI * t.q * g.a;
  const Complex rot = std::exp(-kI * t.t_reduced);
  GaussianExponential out = g;
  out.a = g.a * rot * rot / D;
  out.b = (rot / D) * g.b;
  out.c = g.c + kI * t.q * bilinear(g.b, g.b) / D - 0.5 * g.m * std::log(D);
  return out;
}

GaussianExponential ou_evolve_transform(const GaussianExponential& g,
                                        const EvolutionTime& t) {
  if (t.singular())
    throw std::domain_error("ou_evolve: transform path undefined at singular time");
  const Complex chirp = kI * t.cot_t / 4.0;
  GaussianExponential h = multiply_quadratic(g, Complex(-0.25), Complex(0.0));
  h = multiply_quadratic(h, chirp);
  GaussianExponential hat = fourier_gaussian(h);
  GaussianExponential scaled =
      scale_argument(hat, Complex(1.0 / (4.0 * kPi * t.sin_t)));
  GaussianExponential chirped = multiply_quadratic(scaled, chirp, t.rho_log(g.m));
  return multiply_quadratic(chirped, Complex(0.25));
}

}  // namespace

GaussianExponential ou_evolve(const GaussianExponential& g_phi,
                              const EvolutionTime& t, OuPath path) {
  if (!(g_phi.a.real() + 0.25 > 0.0))
    throw std::invalid_argument("ou_evolve: psi-side state not integrable");
  return path == OuPath::Symbol ? ou_evolve_symbol(g_phi, t)
                                : ou_evolve_transform(g_phi, t);
}

GaussianExponential ho_evolve(const GaussianExponential& g_u0,
                              const EvolutionTime& t, HoPath path) {
  if (!g_u0.integrable())
    throw std::invalid_argument("ho_evolve: u0 not integrable");
  const Complex osc_phase = -kI * (0.5 * g_u0.m * t.t);
  if (path == HoPath::Gauge) {
    GaussianExponential phi = multiply_quadratic(g_u0, Complex(0.25));
    GaussianExponential f = ou_evolve(phi, t, OuPath::Symbol);
    return multiply_quadratic(f, Complex(-0.25), osc_phase);
  }
  if (t.singular())
    throw std::domain_error("ho_evolve: direct path undefined at singular time");
  const Complex chirp = kI * t.cot_t / 4.0;
  GaussianExponential h = multiply_quadratic(g_u0, chirp);
  GaussianExponential hat = fourier_gaussian(h);
  GaussianExponential scaled =
      scale_argument(hat, Complex(1.0 / (4.0 * kPi * t.sin_t)));
  // rho * e^{-i m t/2}: the e^{imt_red/2} in rho cancels against the
  // oscillator phase up to the 4pi-periodicity factor carried by original t.
  return multiply_quadratic(scaled, chirp, t.rho_log(g_u0.m) + osc_phase);
}

namespace {

struct MehlerTerms {
  Complex k, A, s, W;  // W = sqrt(omega) / (2 A sinh 2s)
};

MehlerTerms mehler_terms(Complex a, Complex tau, double omega) {
  MehlerTerms mt;
  const double rw = std::sqrt(omega);
  mt.s = tau * rw;
  const Complex sh = std::sinh(2.0 * mt.s);
  mt.k = rw / (2.0 * sh);
  mt.A = a + mt.k * std::exp(2.0 * mt.s);
  mt.W = rw / (2.0 * mt.A * sh);
  return mt;
}

GaussianExponential mehler_apply(const GaussianExponential& g,
                                 const MehlerTerms& mt, Complex logW) {
  GaussianExponential out = g;
  out.a = g.a * mt.k * std::exp(-2.0 * mt.s) / mt.A;
  out.b = (mt.k / mt.A) * g.b;
  out.c = g.c + bilinear(g.b, g.b) / (4.0 * mt.A) +
          static_cast<double>(g.m) * mt.s + 0.5 * g.m * logW;
  return out;
}

}  // namespace

GaussianExponential mehler_evolve(const GaussianExponential& g_phi, double t,
                                  double omega) {
  if (!(t > 0.0)) throw std::invalid_argument("mehler_evolve: t must be > 0");
  if (!(omega > 0.0))
    throw std::invalid_argument("mehler_evolve: omega must be > 0");
  const MehlerTerms mt = mehler_terms(g_phi.a, Complex(t), omega);
  if (!(mt.A.real() > 0.0))
    throw std::domain_error(
        "mehler_evolve: inadmissible decay (divergent Gaussian integral)");
  // At real time arg W = -arg A lies in (-pi/2, pi/2); principal log is exact.
  return mehler_apply(g_phi, mt, std::log(mt.W));
}

GaussianExponential mehler_evolve_complex_time(const GaussianExponential& g_phi,
                                               Complex tau, double omega) {
  if (!(omega > 0.0))
    throw std::invalid_argument("mehler_evolve_complex_time: omega must be > 0");
  const double t0 = std::abs(tau);
  if (!(t0 > 0.0))
    throw std::invalid_argument("mehler_evolve_complex_time: tau = 0");
  const MehlerTerms end = mehler_terms(g_phi.a, tau, omega);
  if (end.W == Complex(0.0, 0.0) || !std::isfinite(std::abs(end.W)))
    throw std::domain_error("mehler_evolve_complex_time: flow singular at tau");

  // Unwind arg W along tau(theta) = |tau| e^{i theta}; the step count only
  // affects winding detection, not the endpoint value.
  const double theta1 = std::arg(tau);
  const int steps = 512;
  Complex w_prev = mehler_terms(g_phi.a, Complex(t0), omega).W;
  double arg_acc = std::arg(w_prev);
  for (int j = 1; j <= steps; ++j) {
    const Complex z = t0 * std::exp(kI * (theta1 * j / steps));
    const Complex w = mehler_terms(g_phi.a, z, omega).W;
    arg_acc += std::arg(w / w_prev);
    w_prev = w;
  }
  const Complex logW(std::log(std::abs(end.W)), arg_acc);
  return mehler_apply(g_phi, end, logW);
}

}  // namespace ouschro
