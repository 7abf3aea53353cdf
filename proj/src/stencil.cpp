#include "ouschro/stencil.hpp"

#include <cmath>
#include <stdexcept>

#include "ouschro/parallel.hpp"

namespace ouschro {

namespace {

std::int64_t axis_stride(const Grid& g, int axis) {
  std::int64_t s = 1;
  for (int a = g.m - 1; a > axis; --a) s *= g.n;
  return s;
}

}  // namespace

Field laplacian4(const Field& f) {
  const Grid& g = f.grid;
  const double inv12h2 = 1.0 / (12.0 * g.spacing() * g.spacing());
  Field out{g, Eigen::ArrayXcd::Zero(g.size())};
  parallel_for(g.size(), [&](std::int64_t lo, std::int64_t hi) {
    int iv[3];
    for (std::int64_t j = lo; j < hi; ++j) {
      g.axis_indices(j, iv);
      bool interior = true;
      for (int a = 0; a < g.m; ++a)
        if (iv[a] < 2 || iv[a] > g.n - 3) interior = false;
      if (!interior) continue;
      Complex acc{0.0, 0.0};
      for (int a = 0; a < g.m; ++a) {
        const std::int64_t s = axis_stride(g, a);
        acc += (-f.values[j - 2 * s] + 16.0 * f.values[j - s] -
                30.0 * f.values[j] + 16.0 * f.values[j + s] -
                f.values[j + 2 * s]) *
               inv12h2;
      }
      out.values[j] = acc;
    }
  });
  return out;
}

Field gradient4(const Field& f, int axis) {
  const Grid& g = f.grid;
  if (axis < 0 || axis >= g.m)
    throw std::invalid_argument("gradient4: axis out of range");
  const double inv12h = 1.0 / (12.0 * g.spacing());
  const std::int64_t s = axis_stride(g, axis);
  Field out{g, Eigen::ArrayXcd::Zero(g.size())};
  parallel_for(g.size(), [&](std::int64_t lo, std::int64_t hi) {
    int iv[3];
    for (std::int64_t j = lo; j < hi; ++j) {
      g.axis_indices(j, iv);
      if (iv[axis] < 2 || iv[axis] > g.n - 3) continue;
      out.values[j] = (f.values[j - 2 * s] - 8.0 * f.values[j - s] +
                       8.0 * f.values[j + s] - f.values[j + 2 * s]) *
                      inv12h;
    }
  });
  return out;
}

bool in_inner_half_box(const Grid& g, std::int64_t idx) {
  int iv[3];
  g.axis_indices(idx, iv);
  for (int a = 0; a < g.m; ++a)
    if (iv[a] < g.n / 4 || iv[a] >= 3 * g.n / 4) return false;
  return true;
}

double inner_rel_l2(const Field& num, const Field& den) {
  if (!(num.grid == den.grid))
    throw std::invalid_argument("inner_rel_l2: grid mismatch");
  const Grid& g = num.grid;
  double nsum = 0.0, dsum = 0.0;
  for (std::int64_t j = 0; j < g.size(); ++j) {
    if (!in_inner_half_box(g, j)) continue;
    nsum += std::norm(num.values[j]);
    dsum += std::norm(den.values[j]);
  }
  if (dsum == 0.0) throw std::domain_error("inner_rel_l2: zero reference");
  return std::sqrt(nsum / dsum);
}

}  // namespace ouschro
