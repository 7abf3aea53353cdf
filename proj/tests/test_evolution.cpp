#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ouschro/evolution.hpp"
#include "ouschro/riccati.hpp"

using namespace ouschro;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

double coeff_distance(const GaussianExponential& u,
                      const GaussianExponential& v) {
  double d = std::abs(u.a - v.a) / (1.0 + std::abs(v.a));
  for (int a = 0; a < u.m; ++a)
    d = std::max(d, std::abs(u.b[a] - v.b[a]) / (1.0 + std::abs(v.b[a])));
  return std::max(d, std::abs(u.c - v.c) / (1.0 + std::abs(v.c)));
}

GaussianExponential random_integrable(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexVector b(m);
  for (int a = 0; a < m; ++a) b[a] = Complex(u(rng), u(rng));
  // psi-side integrability: Re a > -1/4; keep clear of the boundary
  return GaussianExponential(m, Complex(-0.2 + 1.5 * std::abs(u(rng)), 2.0 * u(rng)),
                             std::move(b), Complex(u(rng), u(rng)));
}

// Direct trapezoid quadrature of the m=1 kernel representation of e^{itL},
// written branch by branch in its literal form: the upper branch carries
// e^{-i pi/4} (sin t)^{-1/2} and the phase +i |.|^2 / (4 sin t); the lower
// branch carries e^{-3i pi/4} |sin t|^{-1/2} and the phase -i |.|^2/(4|sin t|).
Complex kernel_quadrature(const GaussianExponential& phi,
                          const EvolutionTime& et, double x, double half_width,
                          int n) {
  const double h = 2.0 * half_width / n;
  const Complex eit = std::exp(kI * et.t_reduced);
  const Complex emit = std::exp(-kI * et.t_reduced);
  const bool upper = et.branch == TimeBranch::JPlus;
  const double abs_sin = std::abs(et.sin_t);
  const Complex phase_scale =
      (upper ? kI : -kI) / (4.0 * abs_sin);
  const Complex pref =
      std::pow(4.0 * kPi, -0.5) * std::exp(kI * (et.t_reduced / 2.0)) *
      std::exp(-kI * (upper ? kPi / 4.0 : 3.0 * kPi / 4.0)) /
      std::sqrt(abs_sin);
  Complex acc{0.0, 0.0};
  for (int j = 0; j <= n; ++j) {
    const double y = -half_width + j * h;
    const double w = (j == 0 || j == n) ? 0.5 : 1.0;
    // bilinear square of e^{it/2} y - e^{-it/2} x
    const Complex sq = eit * y * y + emit * x * x - 2.0 * x * y;
    acc += w * std::exp(phase_scale * sq) * phi.evaluate(y);
  }
  return acc * h * pref;
}

}  // namespace

TEST_CASE("covariance_q evaluates Q and classifies branches") {
  const EvolutionTime a = covariance_q(kPi / 2.0);
  CHECK(std::abs(a.q - Complex(0.0, -1.0)) < 1e-15);
  CHECK(a.branch == TimeBranch::JPlus);

  const EvolutionTime b = covariance_q(kPi / 4.0);
  CHECK(std::abs(b.q - Complex(0.5, -0.5)) < 1e-15);

  const EvolutionTime c = covariance_q(kPi);
  CHECK(c.branch == TimeBranch::SingularPi);
  CHECK(std::abs(c.q) < 1e-15);

  CHECK(covariance_q(4.0).branch == TimeBranch::JMinus);
  CHECK(covariance_q(0.0).branch == TimeBranch::SingularZero);
  CHECK(covariance_q(2.0 * kPi).branch == TimeBranch::SingularZero);
  CHECK(covariance_q(-0.5).t_reduced == doctest::Approx(2.0 * kPi - 0.5));
  CHECK_THROWS_AS(covariance_q(std::nan("")), std::invalid_argument);
}

TEST_CASE("ou_evolve frozen example: psi-side a=1 at t=pi/2") {
  // phi-side a = 3/4; expected e^{-x^2/4} f(x) = (1/2) e^{-x^2/16}, i.e.
  // a_f = -3/16 and c_f = -ln 2 (hand-derived, cross-checked by kernel
  // quadrature below).
  const GaussianExponential phi = GaussianExponential::isotropic(1, Complex(0.75));
  const EvolutionTime et = covariance_q(kPi / 2.0);
  for (OuPath path : {OuPath::Symbol, OuPath::Transform}) {
    const GaussianExponential f = ou_evolve(phi, et, path);
    CHECK(std::abs(f.a - Complex(-3.0 / 16.0)) < 1e-14);
    CHECK(std::abs(f.b[0]) < 1e-14);
    CHECK(std::abs(f.c - Complex(-std::log(2.0))) < 1e-14);
  }
  const GaussianExponential f = ou_evolve(phi, et, OuPath::Symbol);
  for (double x : {0.0, 0.8, -1.7, 3.1}) {
    const Complex quad = kernel_quadrature(phi, et, x, 14.0, 200'000);
    CHECK(std::abs(f.evaluate(x) - quad) < 1e-9);
  }
}

TEST_CASE("lower-branch flow matches the literal kernel representation") {
  // The coefficient flow is cross-checked against quadrature of the kernel in
  // its lower-branch form (conjugated phase, |sin t|, phase e^{-3 i pi/4}).
  const GaussianExponential phi(1, Complex(0.75, 0.2),
                                ComplexVector::Constant(1, Complex(0.3, -0.1)),
                                Complex(0.05));
  for (double t : {4.0, 5.5}) {
    const EvolutionTime et = covariance_q(t);
    REQUIRE(et.branch == TimeBranch::JMinus);
    const GaussianExponential f = ou_evolve(phi, et, OuPath::Symbol);
    for (double x : {0.0, -0.9, 2.3}) {
      const Complex quad = kernel_quadrature(phi, et, x, 14.0, 200'000);
      CHECK(std::abs(f.evaluate(x) - quad) < 1e-8 * (1.0 + std::abs(quad)));
    }
  }
}

TEST_CASE("prefactor and paths are rejected at singular times") {
  CHECK_THROWS_AS(covariance_q(kPi).rho(1), std::domain_error);
  const GaussianExponential u0 = GaussianExponential::isotropic(1, Complex(0.5));
  CHECK_THROWS_AS(ho_evolve(u0, covariance_q(2.0 * kPi), HoPath::Direct),
                  std::domain_error);
  CHECK_NOTHROW(ho_evolve(u0, covariance_q(2.0 * kPi), HoPath::Gauge));
}

TEST_CASE("ou_evolve approaches the identity as t -> 0+") {
  const GaussianExponential phi(1, Complex(0.6, -0.4),
                                ComplexVector::Constant(1, Complex(0.2, 0.1)),
                                Complex(0.0));
  const GaussianExponential f =
      ou_evolve(phi, covariance_q(1e-7), OuPath::Symbol);
  CHECK(coeff_distance(f, phi) < 1e-5);
}

TEST_CASE("ou_evolve at t=pi is parity, at 2 pi the identity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + trial % 3;
    const GaussianExponential g = random_integrable(rng, m);
    const GaussianExponential at_pi =
        ou_evolve(g, covariance_q(kPi), OuPath::Symbol);
    CHECK(coeff_distance(at_pi, scale_argument(g, Complex(-1.0))) < 1e-12);
    const GaussianExponential at_2pi =
        ou_evolve(g, covariance_q(2.0 * kPi), OuPath::Symbol);
    CHECK(coeff_distance(at_2pi, g) < 1e-12);
  }
}

TEST_CASE("transform and symbol paths agree on both branches") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 3;
    const GaussianExponential g = random_integrable(rng, m);
    for (double t : {0.05, 0.3, kPi / 2.0, 2.2, 3.2, 4.0, 5.5, 6.2}) {
      const GaussianExponential ft = ou_evolve(g, covariance_q(t), OuPath::Transform);
      const GaussianExponential fs = ou_evolve(g, covariance_q(t), OuPath::Symbol);
      CHECK(coeff_distance(ft, fs) < 1e-12);
    }
  }
}

TEST_CASE("path agreement holds up to the integrability boundary") {
  // Near Re a = -1/4 with a large chirp the denominator 1 + 4iQa passes
  // closest to the log cut; the principal branch must still be the
  // continuous one.
  for (Complex a : {Complex(-0.249, 5.0), Complex(-0.249, -5.0),
                    Complex(-0.2499, 20.0), Complex(3.0, 0.001),
                    Complex(-0.24, 0.0)}) {
    for (Complex b0 : {Complex(0.0, 0.0), Complex(0.5, -0.3)}) {
      const GaussianExponential g(1, a, ComplexVector::Constant(1, b0),
                                  Complex(0.0, 0.1));
      for (int k = 0; k < 113; ++k) {
        const double t = 0.01 + (2.0 * kPi - 0.02) * k / 112.0;
        if (std::abs(std::sin(t)) < 1e-3) continue;
        const EvolutionTime et = covariance_q(t);
        CHECK(coeff_distance(ou_evolve(g, et, OuPath::Transform),
                             ou_evolve(g, et, OuPath::Symbol)) < 1e-12);
      }
    }
  }
}

TEST_CASE("transform path refuses singular times, symbol path continues") {
  const GaussianExponential g = GaussianExponential::isotropic(1, Complex(0.5));
  CHECK_THROWS_AS(ou_evolve(g, covariance_q(kPi), OuPath::Transform),
                  std::domain_error);
  CHECK_NOTHROW(ou_evolve(g, covariance_q(kPi), OuPath::Symbol));
  CHECK_THROWS_AS(
      ou_evolve(GaussianExponential::isotropic(1, Complex(-0.3)),
                covariance_q(1.0), OuPath::Symbol),
      std::invalid_argument);
}

TEST_CASE("ou group law under composition, including wraparound") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const GaussianExponential g = random_integrable(rng, 1 + trial % 2);
    for (auto [s, t] : {std::pair{0.5, 0.7}, std::pair{2.0, 1.5},
                        std::pair{2.5, 2.5}, std::pair{4.0, 3.0}}) {
      const GaussianExponential two = ou_evolve(
          ou_evolve(g, covariance_q(s), OuPath::Symbol), covariance_q(t),
          OuPath::Symbol);
      const GaussianExponential one =
          ou_evolve(g, covariance_q(s + t), OuPath::Symbol);
      CHECK(coeff_distance(two, one) < 1e-12);
    }
  }
}

TEST_CASE("gamma norm is invariant under the flow") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const GaussianExponential g = random_integrable(rng, 1 + trial % 2);
    const double n0 = gamma_l2_norm(g);
    for (double t : {0.3, 1.9, 4.4}) {
      const double nt = gamma_l2_norm(ou_evolve(g, covariance_q(t), OuPath::Symbol));
      CHECK(nt == doctest::Approx(n0).epsilon(1e-12));
    }
  }
}

TEST_CASE("translation covariance: the center flows by e^{it}") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 1 + trial % 2;
    const GaussianExponential g = random_integrable(rng, m);
    ComplexVector z(m);
    for (int a = 0; a < m; ++a) z[a] = Complex(u(rng), u(rng));
    for (double t : {0.8, 2.6, 4.1}) {
      const EvolutionTime et = covariance_q(t);
      const GaussianExponential lhs =
          ou_evolve(translate(g, z), et, OuPath::Symbol);
      const ComplexVector zt = std::exp(kI * et.t_reduced) * z;
      const GaussianExponential rhs =
          translate(ou_evolve(g, et, OuPath::Symbol), zt);
      CHECK(coeff_distance(lhs, rhs) < 1e-12);
      // pointwise agreement at 10 sample points
      RealVector x(m);
      for (int pt = 0; pt < 10; ++pt) {
        for (int a = 0; a < m; ++a) x[a] = -3.0 + 0.7 * pt + 0.3 * a;
        CHECK(std::abs(lhs.evaluate(x) - rhs.evaluate(x)) <
              1e-11 * (1.0 + std::abs(rhs.evaluate(x))));
      }
    }
  }
}

TEST_CASE("ho_evolve ground state picks up the phase e^{-i m t/2}") {
  for (int m : {1, 2, 3}) {
    const GaussianExponential u0 = GaussianExponential::isotropic(m, Complex(0.25));
    for (double t : {0.7, 2.2, 4.0, 7.5}) {
      for (HoPath path : {HoPath::Direct, HoPath::Gauge}) {
        const GaussianExponential ut = ho_evolve(u0, covariance_q(t), path);
        CHECK(std::abs(ut.a - Complex(0.25)) < 1e-13);
        CHECK(std::abs(ut.b[0]) < 1e-13);
        CHECK(std::abs(ut.c - (-kI * (0.5 * m * t))) < 1e-12);
      }
    }
  }
}

TEST_CASE("ho_evolve at t=pi is parity with phase e^{-i m pi/2}") {
  std::mt19937_64 rng(21);
  for (int m : {1, 2}) {
    GaussianExponential u0 = random_integrable(rng, m);
    u0.a += Complex(0.3, 0.0);  // ensure Re a > 0
    const GaussianExponential ut =
        ho_evolve(u0, covariance_q(kPi), HoPath::Gauge);
    GaussianExponential expect = scale_argument(u0, Complex(-1.0));
    expect.c += -kI * (0.5 * m * kPi);
    CHECK(coeff_distance(ut, expect) < 1e-12);
  }
}

TEST_CASE("ho direct and gauge paths agree for generic states") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + trial % 3;
    GaussianExponential u0 = random_integrable(rng, m);
    u0.a += Complex(0.35, 0.0);
    for (double t : {0.4, 1.0, 2.2, 4.0, 5.9}) {
      const GaussianExponential d = ho_evolve(u0, covariance_q(t), HoPath::Direct);
      const GaussianExponential g = ho_evolve(u0, covariance_q(t), HoPath::Gauge);
      CHECK(coeff_distance(d, g) < 1e-12);
    }
  }
}

TEST_CASE("ho_evolve approaches identity as t -> 0+") {
  const GaussianExponential u0 = GaussianExponential::isotropic(1, Complex(0.5, 0.2));
  const GaussianExponential ut = ho_evolve(u0, covariance_q(1e-7), HoPath::Gauge);
  CHECK(coeff_distance(ut, u0) < 1e-5);
}

TEST_CASE("mehler_evolve fixes constants and approaches identity") {
  const GaussianExponential one = GaussianExponential::isotropic(1, Complex(0.0));
  for (double t : {0.2, 1.0, 3.0}) {
    for (double omega : {0.25, 1.0}) {
      const GaussianExponential u = mehler_evolve(one, t, omega);
      CHECK(std::abs(u.a) < 1e-14);
      CHECK(std::abs(u.b[0]) < 1e-14);
      CHECK(std::abs(u.c) < 1e-12);
    }
  }
  const GaussianExponential g(1, Complex(1.0, 0.3),
                              ComplexVector::Constant(1, Complex(0.2, -0.1)),
                              Complex(0.1));
  CHECK(coeff_distance(mehler_evolve(g, 1e-8, 0.25), g) < 1e-6);
}

TEST_CASE("mehler_evolve enforces the admissibility bound") {
  // Re a must exceed -(sqrt(omega)/2)(coth(2 t sqrt(omega)) + 1).
  const double omega = 0.25, t = 2.0;
  const double bound = -0.5 * std::sqrt(omega) *
                       (1.0 / std::tanh(2.0 * t * std::sqrt(omega)) + 1.0);
  CHECK_NOTHROW(mehler_evolve(
      GaussianExponential::isotropic(1, Complex(bound + 0.01)), t, omega));
  CHECK_THROWS_AS(
      mehler_evolve(GaussianExponential::isotropic(1, Complex(bound - 0.01)), t,
                    omega),
      std::domain_error);
  CHECK_THROWS_AS(mehler_evolve(GaussianExponential::isotropic(1, Complex(0.0)),
                                -1.0, 0.25),
                  std::invalid_argument);
}

TEST_CASE("wick rotation: mehler flow at omega=1/4, t -> it equals ou flow") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 1 + trial % 2;
    const GaussianExponential g = random_integrable(rng, m);
    for (double t : {0.3, 1.0, kPi / 2.0, 2.5}) {
      const GaussianExponential via_mehler =
          mehler_evolve_complex_time(g, Complex(0.0, t), 0.25);
      const GaussianExponential via_ou =
          ou_evolve(g, covariance_q(t), OuPath::Symbol);
      CHECK(coeff_distance(via_mehler, via_ou) < 1e-12);
    }
  }
}

TEST_CASE("riccati_potential closed forms") {
  {
    const RiccatiSpec spec{Complex(0.25), Complex(0.0, 1.0), Complex(-0.25)};
    const RiccatiPotential p = riccati_potential(spec, 2);
    CHECK(std::abs(p.constant) < 1e-15);
    CHECK(std::abs(p.quad - Complex(-0.25)) < 1e-15);
  }
  {
    const RiccatiPotential p = riccati_potential({Complex(0.0), Complex(0.0),
                                                  Complex(0.0)}, 3);
    CHECK(p.quad == Complex(0.0));
    CHECK(p.constant == Complex(0.0));
  }
  {
    const RiccatiPotential p = riccati_potential({Complex(0.5), Complex(0.0),
                                                  Complex(-1.0)}, 1);
    CHECK(std::abs(p.constant - Complex(1.0)) < 1e-15);
    CHECK(std::abs(p.quad - Complex(-1.0)) < 1e-15);
  }
}
