#include "ouschro/gaussian.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ouschro {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

GaussianExponential::GaussianExponential(int dim, Complex quad,
                                         ComplexVector lin, Complex amp)
    : m(dim), a(quad), b(std::move(lin)), c(amp) {
  if (m < 1) throw std::invalid_argument("GaussianExponential: m must be >= 1");
  if (b.size() != m)
    throw std::invalid_argument("GaussianExponential: b must have length m");
}

GaussianExponential GaussianExponential::isotropic(int dim, Complex quad,
                                                   Complex amp) {
  return GaussianExponential(dim, quad, ComplexVector::Zero(dim), amp);
}

Complex GaussianExponential::evaluate(const RealVector& x) const {
  if (x.size() != m)
    throw std::invalid_argument("evaluate: point dimension mismatch");
  const Complex bx = (b.array() * x.cast<Complex>().array()).sum();
  return std::exp(-a * x.squaredNorm() + bx + c);
}

Complex GaussianExponential::evaluate(double x) const {
  if (m != 1) throw std::invalid_argument("evaluate(double): m != 1");
  return std::exp(-a * x * x + b[0] * x + c);
}

GaussianExponential fourier_gaussian(const GaussianExponential& g) {
  if (g.a == Complex(0.0, 0.0))
    throw std::invalid_argument("fourier_gaussian: a = 0");
  if (g.a.real() < 0.0)
    throw std::invalid_argument("fourier_gaussian: Re a < 0 (non-tempered)");
  GaussianExponential out = g;
  out.a = kPi * kPi / g.a;
  out.b = (-kPi * Complex(0.0, 1.0) / g.a) * g.b;
  // Principal log: arg a in [-pi/2, pi/2] since Re a >= 0, so (pi/a)^{m/2}
  // carries the unique analytic branch that is positive for real a.
  out.c = g.c + 0.5 * g.m * (std::log(Complex(kPi)) - std::log(g.a)) +
          bilinear(g.b, g.b) / (4.0 * g.a);
  return out;
}

GaussianExponential multiply_quadratic(const GaussianExponential& g, Complex q,
                                       const ComplexVector& l, Complex k) {
  if (l.size() != g.m)
    throw std::invalid_argument("multiply_quadratic: l must have length m");
  GaussianExponential out = g;
  out.a = g.a - q;
  out.b = g.b + l;
  out.c = g.c + k;
  return out;
}

GaussianExponential multiply_quadratic(const GaussianExponential& g, Complex q,
                                       Complex k) {
  GaussianExponential out = g;
  out.a = g.a - q;
  out.c = g.c + k;
  return out;
}

GaussianExponential scale_argument(const GaussianExponential& g,
                                   Complex lambda) {
  if (lambda == Complex(0.0, 0.0))
    throw std::invalid_argument("scale_argument: lambda = 0");
  GaussianExponential out = g;
  out.a = g.a * lambda * lambda;
  out.b = lambda * g.b;
  return out;
}

GaussianExponential translate(const GaussianExponential& g,
                              const ComplexVector& z) {
  if (z.size() != g.m)
    throw std::invalid_argument("translate: z must have length m");
  GaussianExponential out = g;
  out.b = g.b - 2.0 * g.a * z;
  out.c = g.c + bilinear(g.b, z) - g.a * bilinear(z, z);
  return out;
}

double decay_rate(const GaussianExponential& g) { return g.a.real(); }

namespace {

// ( int exp(-s|x|^2 + <v,x> + u) dx )^{1/2} for real s, v, u; +inf if s <= 0.
double half_log_gauss_integral(int m, double s, const RealVector& v, double u) {
  if (s <= 0.0) return kInf;
  const double logval =
      u + 0.5 * m * std::log(kPi / s) + v.squaredNorm() / (4.0 * s);
  return std::exp(0.5 * logval);
}

}  // namespace

double l2_norm(const GaussianExponential& g) {
  return half_log_gauss_integral(g.m, 2.0 * g.a.real(),
                                 2.0 * g.b.real().eval(), 2.0 * g.c.real());
}

double gamma_l2_norm(const GaussianExponential& g) {
  return half_log_gauss_integral(g.m, 2.0 * g.a.real() + 0.5,
                                 2.0 * g.b.real().eval(), 2.0 * g.c.real());
}

double lp_norm(const GaussianExponential& g, double p) {
  if (!(p >= 1.0))
    throw std::invalid_argument("lp_norm: p must be >= 1 or infinity");
  const double ar = g.a.real();
  const RealVector br = g.b.real();
  const double cr = g.c.real();
  if (std::isinf(p)) {
    if (ar < 0.0) return kInf;
    if (ar == 0.0) return br.isZero(0.0) ? std::exp(cr) : kInf;
    return std::exp(cr + br.squaredNorm() / (4.0 * ar));
  }
  if (ar <= 0.0) return kInf;
  const double logval = cr + br.squaredNorm() / (4.0 * ar) +
                        (0.5 * g.m / p) * std::log(kPi / (p * ar));
  return std::exp(logval);
}

}  // namespace ouschro
