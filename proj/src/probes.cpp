#include "ouschro/probes.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ouschro/parallel.hpp"
#include "ouschro/stencil.hpp"

namespace ouschro {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const Complex kI{0.0, 1.0};

// Smallest C with |g(x)| <= C e^{-Re(a)|x|^2}; finite only for centered |g|.
double sup_at_rate(const GaussianExponential& g) {
  if (!g.b.real().isZero(0.0)) return kInf;
  return std::exp(g.c.real());
}

GaussianExponential evolved_psi_side(const GaussianExponential& psi,
                                     const EvolutionTime& et) {
  const GaussianExponential phi = multiply_quadratic(psi, Complex(0.25));
  const GaussianExponential f = ou_evolve(phi, et, OuPath::Symbol);
  return multiply_quadratic(f, Complex(-0.25));
}

UncertaintyProbeResult uncertainty_rates(const GaussianExponential& psi,
                                         double s) {
  if (!psi.integrable())
    throw std::invalid_argument("uncertainty probe: psi not integrable");
  const EvolutionTime et = covariance_q(s);
  if (et.singular())
    throw std::domain_error("uncertainty probe: singular time");
  UncertaintyProbeResult out;
  out.s = s;
  out.a_max = decay_rate(psi);
  const GaussianExponential psi_s = evolved_psi_side(psi, et);
  out.b_max = decay_rate(psi_s);
  out.product = out.a_max * out.b_max * et.sin_t * et.sin_t;
  out.endpoint = std::abs(out.product - out.threshold) < 1e-12;
  out.C = std::max({1.0, sup_at_rate(psi), sup_at_rate(psi_s)});
  return out;
}

}  // namespace

UncertaintyProbeResult uncertainty_probe_l2(const GaussianExponential& psi,
                                            double s) {
  UncertaintyProbeResult out = uncertainty_rates(psi, s);
  out.attained = false;
  return out;
}

UncertaintyProbeResult uncertainty_probe_linf(const GaussianExponential& psi,
                                              double s) {
  UncertaintyProbeResult out = uncertainty_rates(psi, s);
  out.attained = std::isfinite(out.C);
  return out;
}

HardyProbeResult hardy_probe(const GaussianExponential& g) {
  if (!g.integrable())
    throw std::invalid_argument("hardy_probe: g not integrable");
  HardyProbeResult out;
  out.a_rate = decay_rate(g);
  out.b_rate = decay_rate(fourier_gaussian(g));
  out.product = out.a_rate * out.b_rate;
  return out;
}

namespace {

// (p^{1/p} / p'^{1/p'})^{m/2} (4 pi |sin t|)^{-m (1/2 - 1/p')}
double dispersive_constant(double p, double p_conj, double abs_sin, int m) {
  const double bab =
      std::pow(p, 1.0 / p) / (std::isinf(p_conj) ? 1.0 : std::pow(p_conj, 1.0 / p_conj));
  const double inv_conj = std::isinf(p_conj) ? 0.0 : 1.0 / p_conj;
  return std::pow(bab, 0.5 * m) *
         std::pow(4.0 * kPi * abs_sin, -static_cast<double>(m) * (0.5 - inv_conj));
}

DispersiveProbeResult dispersive_shell(const EvolutionTime& t, double p, int m) {
  if (!(p >= 1.0))
    throw std::invalid_argument("dispersive_probe: p must be >= 1");
  if (t.singular())
    throw std::domain_error("dispersive_probe: singular time");
  DispersiveProbeResult out;
  out.p = p;
  out.p_conj = p == 1.0 ? kInf : p / (p - 1.0);
  out.t = t.t;
  out.in_theorem = p <= 2.0;
  out.constant = dispersive_constant(p, out.p_conj, std::abs(t.sin_t), m);
  return out;
}

}  // namespace

DispersiveProbeResult dispersive_probe(const GaussianExponential& psi,
                                       const EvolutionTime& t, double p) {
  DispersiveProbeResult out = dispersive_shell(t, p, psi.m);
  out.lhs = lp_norm(evolved_psi_side(psi, t), out.p_conj);
  out.rhs = out.constant * lp_norm(psi, p);
  out.ratio = out.lhs / out.rhs;
  return out;
}

DispersiveProbeResult dispersive_probe(const Field& psi, const EvolutionTime& t,
                                       double p, const PropagatorConfig& cfg) {
  DispersiveProbeResult out = dispersive_shell(t, p, psi.grid.m);
  const Field phi = gauge_phi_of_psi(psi);
  const Field f = propagate_ou_transform(phi, t, cfg).field;
  out.lhs = lp_norm(gauge_psi_of_phi(f), out.p_conj);
  out.rhs = out.constant * lp_norm(psi, p);
  out.ratio = out.lhs / out.rhs;
  return out;
}

namespace {

Field sample_gauged(const GaussianExponential& g, const Grid& grid, Complex A,
                    Complex B, double tau) {
  // u(.,tau) = e^{-A|x|^2 - B tau} f(.,tau)
  return sample(multiply_quadratic(g, -A, -B * tau), grid);
}

}  // namespace

RiccatiCheckResult riccati_gauge_check(const RiccatiSpec& spec,
                                       const GaussianExponential& data,
                                       double t_sample, const Grid& grid,
                                       double dt) {
  const RiccatiPotential pot = riccati_potential(spec, grid.m);
  if (std::abs(pot.constant) > 1e-12)
    throw std::invalid_argument(
        "riccati_gauge_check: inconsistent spec, constant part iB + 2mA != 0");
  if (std::abs(pot.quad - spec.phi_quad) > 1e-12)
    throw std::invalid_argument(
        "riccati_gauge_check: inconsistent spec, phi_quad != -4A^2");

  RiccatiCheckResult out;

  if (spec.A == Complex(0.0, 0.0) && spec.B == Complex(0.0, 0.0)) {
    // Free gauge with static data: only the u_t term is probed.
    if (t_sample != 0.0)
      throw std::invalid_argument(
          "riccati_gauge_check: zero spec supports only t_sample = 0");
    out.forward_residual = 0.0;
    out.converse_residual = 0.0;
    return out;
  }

  if (std::abs(pot.quad - Complex(-0.25)) > 1e-12)
    throw std::invalid_argument(
        "riccati_gauge_check: unsupported potential, need phi_quad = -1/4");

  // f solves the drift equation; u = e^{-h} f must solve the oscillator one.
  const auto f_at = [&](double tau) {
    return sample(ou_evolve(data, covariance_q(tau), OuPath::Symbol), grid);
  };
  const auto evolved = [&](double tau) {
    return ou_evolve(data, covariance_q(tau), OuPath::Symbol);
  };

  {
    const Field u0 = sample_gauged(evolved(t_sample), grid, spec.A, spec.B,
                                   t_sample);
    const Field up = sample_gauged(evolved(t_sample + dt), grid, spec.A,
                                   spec.B, t_sample + dt);
    const Field um = sample_gauged(evolved(t_sample - dt), grid, spec.A,
                                   spec.B, t_sample - dt);
    const Field lap = laplacian4(u0);
    Field resid{grid, Eigen::ArrayXcd::Zero(grid.size())};
    Field rhs{grid, Eigen::ArrayXcd::Zero(grid.size())};
    for (std::int64_t j = 0; j < grid.size(); ++j) {
      const Complex phi_u =
          pot.quad * grid.node_sqnorm(j) * u0.values[j];
      rhs.values[j] = kI * (lap.values[j] + phi_u);
      resid.values[j] =
          (up.values[j] - um.values[j]) / (2.0 * dt) - rhs.values[j];
    }
    out.forward_residual = inner_rel_l2(resid, rhs);
  }

  {
    const Field f0 = f_at(t_sample);
    const Field fp = f_at(t_sample + dt);
    const Field fm = f_at(t_sample - dt);
    const Field lap = laplacian4(f0);
    std::vector<Field> grads;
    for (int a = 0; a < grid.m; ++a) grads.push_back(gradient4(f0, a));
    Field resid{grid, Eigen::ArrayXcd::Zero(grid.size())};
    Field rhs{grid, Eigen::ArrayXcd::Zero(grid.size())};
    double x[3];
    for (std::int64_t j = 0; j < grid.size(); ++j) {
      grid.node(j, x);
      Complex drift{0.0, 0.0};
      for (int a = 0; a < grid.m; ++a)
        drift += 2.0 * spec.A * x[a] * grads[a].values[j];
      rhs.values[j] = kI * (lap.values[j] - 2.0 * drift);
      resid.values[j] =
          (fp.values[j] - fm.values[j]) / (2.0 * dt) - rhs.values[j];
    }
    out.converse_residual = inner_rel_l2(resid, rhs);
  }

  return out;
}

WeightedIdentityResult weighted_norm_identity_check(const Field& psi,
                                                    const EvolutionTime& t,
                                                    double b,
                                                    const PropagatorConfig& cfg) {
  if (t.singular() || std::abs(t.sin_t) < cfg.eps_sing)
    throw std::domain_error("weighted_norm_identity_check: singular time");
  const Grid& g = psi.grid;

  // Transform side: chirped data, transform evaluated on the scaled lattice.
  const Field chirped = multiply_radial(psi, Complex(0.0, t.cot_t / 4.0));
  Eigen::MatrixXd targets(g.size(), g.m);
  double x[3];
  const double scale = 1.0 / (4.0 * kPi * t.sin_t);
  for (std::int64_t j = 0; j < g.size(); ++j) {
    g.node(j, x);
    for (int a = 0; a < g.m; ++a) targets(j, a) = x[a] * scale;
  }
  const Eigen::VectorXcd hat = dft_at(chirped, targets);
  const double lhs_sq = pairwise_map_sum<double>(
      0, g.size(), [&](std::int64_t j) {
        return std::exp(2.0 * b * g.node_sqnorm(j)) * std::norm(hat[j]);
      });

  WeightedIdentityResult out;
  out.lhs = std::sqrt(lhs_sq * std::pow(g.spacing(), g.m));

  // Evolved side through the independent kernel quadrature when admissible.
  const Field phi = gauge_phi_of_psi(psi);
  const Field f = std::abs(t.sin_t) >= cfg.min_abs_sin
                      ? propagate_ou_kernel(phi, t, cfg).field
                      : propagate_ou_transform(phi, t, cfg).field;
  const WeightedNormResult wn = weighted_l2_gamma_norm(f, b);
  out.rhs = std::pow(4.0 * kPi * std::abs(t.sin_t), 0.5 * g.m) * wn.value;
  out.truncation_unsafe = wn.truncation_unsafe;
  out.rel_error = std::abs(out.lhs - out.rhs) / out.rhs;
  return out;
}

}  // namespace ouschro
