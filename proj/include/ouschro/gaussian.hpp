#pragma once

#include <Eigen/Core>

#include <complex>

namespace ouschro {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Bilinear (unconjugated) pairing <u,v> = sum_j u_j v_j.
inline Complex bilinear(const ComplexVector& u, const ComplexVector& v) {
  return (u.array() * v.array()).sum();
}

/// g(x) = exp(-a|x|^2 + <b,x> + c) on R^m with complex a, b, c.
///
/// This family is closed under every operation applied here: the Fourier
/// transform, multiplication by quadratic exponentials (gauges and chirps),
/// argument scaling by a complex factor, complex translation, and the exact
/// coefficient flows of the evolution groups. It is the ground-truth state
/// against which all grid computations are validated.
struct GaussianExponential {
  int m = 1;
  Complex a{0.0, 0.0};
  ComplexVector b = ComplexVector::Zero(1);
  Complex c{0.0, 0.0};

  GaussianExponential() = default;
  GaussianExponential(int dim, Complex quad, ComplexVector lin, Complex amp);

  /// Radial state exp(-quad |x|^2 + amp) in dimension dim.
  static GaussianExponential isotropic(int dim, Complex quad,
                                       Complex amp = Complex(0.0, 0.0));

  /// True iff g is absolutely integrable (Re a > 0).
  bool integrable() const { return a.real() > 0.0; }

  Complex evaluate(const RealVector& x) const;
  Complex evaluate(double x) const;  // m == 1 convenience
};

/// Fg(xi) = int e^{-2 pi i <xi,x>} g(x) dx, principal square-root branch.
/// Requires Re a >= 0 and a != 0; Re a = 0 is the admitted Fresnel boundary.
GaussianExponential fourier_gaussian(const GaussianExponential& g);

/// Multiply by exp(q|x|^2 + <l,x> + k).
GaussianExponential multiply_quadratic(const GaussianExponential& g, Complex q,
                                       const ComplexVector& l, Complex k);
GaussianExponential multiply_quadratic(const GaussianExponential& g, Complex q,
                                       Complex k = Complex(0.0, 0.0));

/// x -> g(lambda x), lambda != 0 complex.
GaussianExponential scale_argument(const GaussianExponential& g, Complex lambda);

/// x -> g(x + z), z a complex center.
GaussianExponential translate(const GaussianExponential& g,
                              const ComplexVector& z);

/// Gaussian decay rate of |g|: Re a. Admissible L^2 weights form (-inf, Re a).
double decay_rate(const GaussianExponential& g);

/// Flat L^2 norm; +inf when divergent.
double l2_norm(const GaussianExponential& g);

/// L^2(e^{-|x|^2/2} dx) norm; +inf when 2 Re a + 1/2 <= 0.
double gamma_l2_norm(const GaussianExponential& g);

/// L^p norm for p in [1, inf]; +inf when divergent.
double lp_norm(const GaussianExponential& g, double p);

}  // namespace ouschro
