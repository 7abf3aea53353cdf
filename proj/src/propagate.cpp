#include "ouschro/propagate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ouschro/parallel.hpp"
#include "ouschro/stencil.hpp"

namespace ouschro {

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

void require_nonsingular(const EvolutionTime& t, const PropagatorConfig& cfg,
                         const char* who) {
  if (t.singular() || std::abs(t.sin_t) < cfg.eps_sing)
    throw std::domain_error(std::string(who) + ": singular time");
}

Eigen::MatrixXd scaled_targets(const Grid& g, double scale) {
  Eigen::MatrixXd targets(g.size(), g.m);
  double x[3];
  for (std::int64_t j = 0; j < g.size(); ++j) {
    g.node(j, x);
    for (int a = 0; a < g.m; ++a) targets(j, a) = x[a] * scale;
  }
  return targets;
}

}  // namespace

void PropagatorConfig::validate() const {
  if (!(eps_sing > 0.0) || !(min_abs_sin > 0.0))
    throw std::invalid_argument("PropagatorConfig: guards must be positive");
  if (!(eps_sing < min_abs_sin))
    throw std::invalid_argument("PropagatorConfig: eps_sing must be < min_abs_sin");
  if (quadrature_n != 0 && (quadrature_n < 16 || quadrature_n % 2 != 0))
    throw std::invalid_argument("PropagatorConfig: quadrature_n must be even >= 16");
  if (quadrature_r < 0.0)
    throw std::invalid_argument("PropagatorConfig: quadrature_r must be >= 0");
}

PropagationResult propagate_ou_transform(const Field& phi,
                                         const EvolutionTime& t,
                                         const PropagatorConfig& cfg) {
  cfg.validate();
  require_nonsingular(t, cfg, "propagate_ou_transform");
  const Grid& g = phi.grid;
  // psi-gauge and chirp in one radial multiply: e^{(-1/4 + i cot t/4)|x|^2}.
  const Complex pre(-0.25, t.cot_t / 4.0);
  Field chirped = multiply_radial(phi, pre);
  const Eigen::VectorXcd hat =
      dft_at(chirped, scaled_targets(g, 1.0 / (4.0 * kPi * t.sin_t)));
  const Complex rho = t.rho(g.m);
  // Inverse gauge and outgoing chirp: e^{(+1/4 + i cot t/4)|x|^2}.
  const Complex post(0.25, t.cot_t / 4.0);
  Field out{g, Eigen::ArrayXcd(g.size())};
  parallel_for(g.size(), [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t j = lo; j < hi; ++j)
      out.values[j] = rho * hat[j] * std::exp(post * g.node_sqnorm(j));
  });
  return {std::move(out), {}};
}

namespace {

PropagationResult ou_kernel_impl(const Eigen::ArrayXcd& phi_values,
                                 const Grid& src, const Grid& outg,
                                 const EvolutionTime& t,
                                 const PropagatorConfig& cfg) {
  cfg.validate();
  if (t.singular() || std::abs(t.sin_t) < cfg.min_abs_sin)
    throw std::domain_error(
        "propagate_ou_kernel: |sin t| below the oscillation guard");
  if (src.m != outg.m)
    throw std::invalid_argument("propagate_ou_kernel: dimension mismatch");
  const int m = src.m;
  const double inv4s = 1.0 / (4.0 * t.sin_t);
  const Complex eit = std::exp(kI * t.t_reduced);
  const Complex emit = std::exp(-kI * t.t_reduced);

  // exp(i (e^{it}|y|^2 + e^{-it}|x|^2 - 2<x,y>) / (4 sin t)); the |y|^2 factor
  // has modulus e^{-|y|^2/4}, the built-in psi-gauge of the kernel.
  std::vector<Complex> srcfac(src.size());
  for (std::int64_t j = 0; j < src.size(); ++j)
    srcfac[j] =
        phi_values[j] * std::exp(kI * eit * src.node_sqnorm(j) * inv4s);

  // Cross tables per axis: exp(-i x y / (2 sin t)).
  std::vector<std::vector<Complex>> cross(m);
  for (int a = 0; a < m; ++a) {
    cross[a].resize(static_cast<std::size_t>(outg.n) * src.n);
    for (int xi = 0; xi < outg.n; ++xi)
      for (int yi = 0; yi < src.n; ++yi)
        cross[a][static_cast<std::size_t>(xi) * src.n + yi] = std::exp(
            -kI * (outg.axis_coord(xi) * src.axis_coord(yi) * 2.0 * inv4s));
  }

  const Complex rho = t.rho(m);
  const double weight = std::pow(src.spacing(), m);
  Field out{outg, Eigen::ArrayXcd(outg.size())};
  parallel_for(outg.size(), [&](std::int64_t lo, std::int64_t hi) {
    std::vector<Complex> scratch(src.size());
    int xv[3];
    for (std::int64_t xj = lo; xj < hi; ++xj) {
      outg.axis_indices(xj, xv);
      const Complex* c0 = &cross[0][static_cast<std::size_t>(xv[0]) * src.n];
      std::int64_t j = 0;
      if (m == 1) {
        for (int y0 = 0; y0 < src.n; ++y0, ++j) scratch[j] = srcfac[j] * c0[y0];
      } else if (m == 2) {
        const Complex* c1 = &cross[1][static_cast<std::size_t>(xv[1]) * src.n];
        for (int y0 = 0; y0 < src.n; ++y0) {
          const Complex w0 = c0[y0];
          for (int y1 = 0; y1 < src.n; ++y1, ++j)
            scratch[j] = srcfac[j] * w0 * c1[y1];
        }
      } else {
        const Complex* c1 = &cross[1][static_cast<std::size_t>(xv[1]) * src.n];
        const Complex* c2 = &cross[2][static_cast<std::size_t>(xv[2]) * src.n];
        for (int y0 = 0; y0 < src.n; ++y0) {
          const Complex w0 = c0[y0];
          for (int y1 = 0; y1 < src.n; ++y1) {
            const Complex w01 = w0 * c1[y1];
            for (int y2 = 0; y2 < src.n; ++y2, ++j)
              scratch[j] = srcfac[j] * w01 * c2[y2];
          }
        }
      }
      const Complex sum = pairwise_sum(scratch.data(), src.size());
      out.values[xj] = rho * weight * sum *
                       std::exp(kI * emit * outg.node_sqnorm(xj) * inv4s);
    }
  });
  return {std::move(out), {}};
}

}  // namespace

PropagationResult propagate_ou_kernel(const Field& phi, const EvolutionTime& t,
                                      const PropagatorConfig& cfg) {
  return ou_kernel_impl(phi.values, phi.grid, phi.grid, t, cfg);
}

PropagationResult propagate_ou_kernel(
    const std::function<Complex(const RealVector&)>& phi, const Grid& source,
    const Grid& out, const EvolutionTime& t, const PropagatorConfig& cfg) {
  Grid src = source;
  if (cfg.quadrature_n != 0) src.n = cfg.quadrature_n;
  if (cfg.quadrature_r > 0.0) src.r = cfg.quadrature_r;
  const Field sampled = sample(phi, src);
  return ou_kernel_impl(sampled.values, src, out, t, cfg);
}

PropagationResult propagate_ho(const Field& u0, const EvolutionTime& t,
                               HoPath path, const PropagatorConfig& cfg) {
  cfg.validate();
  const Grid& g = u0.grid;
  const Complex osc_phase = std::exp(-kI * (0.5 * g.m * t.t));
  if (path == HoPath::Gauge) {
    std::vector<std::string> flags;
    Field lifted = gauge_phi_of_psi(u0);
    double boundary_max = 0.0, overall_max = 0.0;
    for (std::int64_t j = 0; j < g.size(); ++j) {
      const double mag = std::abs(lifted.values[j]);
      overall_max = std::max(overall_max, mag);
      int iv[3];
      g.axis_indices(j, iv);
      for (int a = 0; a < g.m; ++a)
        if (iv[a] == 0 || iv[a] == g.n - 1) {
          boundary_max = std::max(boundary_max, mag);
          break;
        }
    }
    if (boundary_max > 1e-3 * overall_max) flags.push_back("gauge-lift-overflow");
    PropagationResult f = propagate_ou_transform(lifted, t, cfg);
    Field out{g, Eigen::ArrayXcd(g.size())};
    parallel_for(g.size(), [&](std::int64_t lo, std::int64_t hi) {
      for (std::int64_t j = lo; j < hi; ++j)
        out.values[j] = f.field.values[j] * osc_phase *
                        std::exp(-0.25 * g.node_sqnorm(j));
    });
    flags.insert(flags.end(), f.flags.begin(), f.flags.end());
    return {std::move(out), std::move(flags)};
  }
  require_nonsingular(t, cfg, "propagate_ho");
  const Complex chirp(0.0, t.cot_t / 4.0);
  Field chirped = multiply_radial(u0, chirp);
  const Eigen::VectorXcd hat =
      dft_at(chirped, scaled_targets(g, 1.0 / (4.0 * kPi * t.sin_t)));
  const Complex pref = t.rho(g.m) * osc_phase;
  Field out{g, Eigen::ArrayXcd(g.size())};
  parallel_for(g.size(), [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t j = lo; j < hi; ++j)
      out.values[j] = pref * hat[j] * std::exp(chirp * g.node_sqnorm(j));
  });
  return {std::move(out), {}};
}

PropagationResult propagate_mehler(const Field& phi, double t, double omega,
                                   const PropagatorConfig& cfg) {
  cfg.validate();
  if (!(t > 0.0)) throw std::invalid_argument("propagate_mehler: t must be > 0");
  if (!(omega > 0.0))
    throw std::invalid_argument("propagate_mehler: omega must be > 0");
  const Grid& g = phi.grid;
  const double rw = std::sqrt(omega);
  const double s = t * rw;
  const double sh = std::sinh(2.0 * s);
  const double k = rw / (2.0 * sh);
  const double es = std::exp(s), ems = std::exp(-s);
  const double log_pref =
      g.m * (s + 0.5 * std::log(2.0 * rw / sh) - 0.5 * std::log(4.0 * kPi));
  const double pref = std::exp(log_pref);
  const double weight = std::pow(g.spacing(), g.m);

  Field out{g, Eigen::ArrayXcd(g.size())};
  parallel_for(g.size(), [&](std::int64_t lo, std::int64_t hi) {
    std::vector<Complex> scratch(g.size());
    double x[3], y[3];
    for (std::int64_t xj = lo; xj < hi; ++xj) {
      g.node(xj, x);
      for (std::int64_t yj = 0; yj < g.size(); ++yj) {
        g.node(yj, y);
        double d2 = 0.0;
        for (int a = 0; a < g.m; ++a) {
          const double d = es * y[a] - ems * x[a];
          d2 += d * d;
        }
        scratch[yj] = phi.values[yj] * std::exp(-k * d2);
      }
      out.values[xj] = pref * weight * pairwise_sum(scratch.data(), g.size());
    }
  });
  return {std::move(out), {}};
}

namespace {

double pde_residual(const Field& f0, const Field& fp, const Field& fm,
                    double dt, const std::function<Complex(std::int64_t)>& zero_order) {
  const Grid& g = f0.grid;
  Field lap = laplacian4(f0);
  Field rhs{g, Eigen::ArrayXcd::Zero(g.size())};
  for (std::int64_t j = 0; j < g.size(); ++j)
    rhs.values[j] = kI * (lap.values[j] + zero_order(j));
  Field diff{g, Eigen::ArrayXcd(g.size())};
  for (std::int64_t j = 0; j < g.size(); ++j)
    diff.values[j] =
        (fp.values[j] - fm.values[j]) / (2.0 * dt) - rhs.values[j];
  return inner_rel_l2(diff, rhs);
}

}  // namespace

double pde_residual_ou(const Field& phi, double t, double dt,
                       const PropagatorConfig& cfg) {
  const Field f0 = propagate_ou_transform(phi, covariance_q(t), cfg).field;
  const Field fp = propagate_ou_transform(phi, covariance_q(t + dt), cfg).field;
  const Field fm = propagate_ou_transform(phi, covariance_q(t - dt), cfg).field;
  const Grid& g = f0.grid;
  std::vector<Field> grads;
  for (int a = 0; a < g.m; ++a) grads.push_back(gradient4(f0, a));
  return pde_residual(f0, fp, fm, dt, [&](std::int64_t j) {
    double x[3];
    g.node(j, x);
    Complex drift{0.0, 0.0};
    for (int a = 0; a < g.m; ++a) drift += x[a] * grads[a].values[j];
    return -drift;
  });
}

double pde_residual_ho(const Field& u0, double t, double dt, HoPath path,
                       const PropagatorConfig& cfg) {
  const Field f0 = propagate_ho(u0, covariance_q(t), path, cfg).field;
  const Field fp = propagate_ho(u0, covariance_q(t + dt), path, cfg).field;
  const Field fm = propagate_ho(u0, covariance_q(t - dt), path, cfg).field;
  const Grid& g = f0.grid;
  return pde_residual(f0, fp, fm, dt, [&](std::int64_t j) {
    return -0.25 * g.node_sqnorm(j) * f0.values[j];
  });
}

double convergence_order(const std::function<double(double)>& residual,
                         std::initializer_list<double> steps) {
  std::vector<double> lx, ly;
  for (double h : steps) {
    lx.push_back(std::log(h));
    ly.push_back(std::log(residual(h)));
  }
  const auto n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace ouschro
