#include "ouschro/norms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ouschro/parallel.hpp"

namespace ouschro {

namespace {

bool on_boundary_shell(const Grid& g, std::int64_t idx) {
  int iv[3];
  g.axis_indices(idx, iv);
  for (int a = 0; a < g.m; ++a)
    if (iv[a] == 0 || iv[a] == g.n - 1) return true;
  return false;
}

}  // namespace

WeightedNormResult weighted_l2_gamma_norm(const Field& f, double w) {
  const Grid& g = f.grid;
  const double exponent = 2.0 * w - 0.5;
  const auto integrand = [&](std::int64_t j) {
    return std::norm(f.values[j]) * std::exp(exponent * g.node_sqnorm(j));
  };
  const double sum = pairwise_map_sum<double>(0, g.size(), integrand);
  double shell_max = 0.0;
  for (std::int64_t j = 0; j < g.size(); ++j)
    if (on_boundary_shell(g, j)) shell_max = std::max(shell_max, integrand(j));
  WeightedNormResult out;
  out.value = std::sqrt(sum * std::pow(g.spacing(), g.m));
  out.truncation_unsafe = shell_max > 1e-6 * sum;
  return out;
}

double lp_norm(const Field& f, double p) {
  if (!(p >= 1.0))
    throw std::invalid_argument("lp_norm: p must be >= 1 or infinity");
  if (std::isinf(p)) {
    double mx = 0.0;
    for (std::int64_t j = 0; j < f.values.size(); ++j)
      mx = std::max(mx, std::abs(f.values[j]));
    return mx;
  }
  const double sum = pairwise_map_sum<double>(
      0, f.values.size(),
      [&](std::int64_t j) { return std::pow(std::abs(f.values[j]), p); });
  return std::pow(sum * std::pow(f.grid.spacing(), f.grid.m), 1.0 / p);
}

double rel_l2_error(const Field& a, const Field& b) {
  if (!(a.grid == b.grid))
    throw std::invalid_argument("rel_l2_error: grid mismatch");
  const double num = pairwise_map_sum<double>(
      0, a.values.size(),
      [&](std::int64_t j) { return std::norm(a.values[j] - b.values[j]); });
  const double den = pairwise_map_sum<double>(
      0, b.values.size(),
      [&](std::int64_t j) { return std::norm(b.values[j]); });
  if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(num / den);
}

}  // namespace ouschro
