#include "ouschro/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ouschro/parallel.hpp"

namespace ouschro {

std::int64_t Grid::size() const {
  std::int64_t total = 1;
  for (int a = 0; a < m; ++a) total *= n;
  return total;
}

void Grid::axis_indices(std::int64_t idx, int* iout) const {
  for (int a = m - 1; a >= 0; --a) {
    iout[a] = static_cast<int>(idx % n);
    idx /= n;
  }
}

void Grid::node(std::int64_t idx, double* xout) const {
  int iv[3];
  axis_indices(idx, iv);
  for (int a = 0; a < m; ++a) xout[a] = axis_coord(iv[a]);
}

double Grid::node_sqnorm(std::int64_t idx) const {
  double x[3];
  node(idx, x);
  double s = 0.0;
  for (int a = 0; a < m; ++a) s += x[a] * x[a];
  return s;
}

Grid make_grid(int m, int n, double r, std::int64_t budget) {
  if (m < 1 || m > 3)
    throw std::invalid_argument("make_grid: dimension m must be in {1,2,3}");
  if (n < 16) throw std::invalid_argument("make_grid: n must be >= 16");
  if (n % 2 != 0) throw std::invalid_argument("make_grid: n must be even");
  if (!(r > 0.0)) throw std::invalid_argument("make_grid: r must be > 0");
  Grid g{m, n, r};
  if (g.size() > budget)
    throw std::invalid_argument("make_grid: n^m exceeds the point budget (" +
                                std::to_string(budget) + ")");
  return g;
}

namespace {

void check_finite(const Field& f, const char* what) {
  for (std::int64_t j = 0; j < f.values.size(); ++j) {
    const Complex v = f.values[j];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::domain_error(std::string(what) +
                              ": non-finite value at node " + std::to_string(j));
  }
}

}  // namespace

Field sample(const GaussianExponential& g, const Grid& grid) {
  if (g.m != grid.m)
    throw std::invalid_argument("sample: dimension mismatch");
  Field f{grid, Eigen::ArrayXcd(grid.size())};
  parallel_for(grid.size(), [&](std::int64_t lo, std::int64_t hi) {
    double x[3];
    for (std::int64_t j = lo; j < hi; ++j) {
      grid.node(j, x);
      double sq = 0.0;
      Complex bx{0.0, 0.0};
      for (int a = 0; a < grid.m; ++a) {
        sq += x[a] * x[a];
        bx += g.b[a] * x[a];
      }
      f.values[j] = std::exp(-g.a * sq + bx + g.c);
    }
  });
  check_finite(f, "sample");
  return f;
}

Field sample(const std::function<Complex(const RealVector&)>& fn,
             const Grid& grid) {
  Field f{grid, Eigen::ArrayXcd(grid.size())};
  RealVector x(grid.m);
  double xv[3];
  for (std::int64_t j = 0; j < grid.size(); ++j) {
    grid.node(j, xv);
    for (int a = 0; a < grid.m; ++a) x[a] = xv[a];
    f.values[j] = fn(x);
  }
  check_finite(f, "sample");
  return f;
}

Field multiply_radial(const Field& f, Complex q) {
  Field out{f.grid, Eigen::ArrayXcd(f.values.size())};
  parallel_for(f.values.size(), [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t j = lo; j < hi; ++j)
      out.values[j] = f.values[j] * std::exp(q * f.grid.node_sqnorm(j));
  });
  return out;
}

Field gauge_psi_of_phi(const Field& f) {
  return multiply_radial(f, Complex(-0.25));
}

Field gauge_phi_of_psi(const Field& f) {
  Field out = multiply_radial(f, Complex(0.25));
  check_finite(out, "gauge_phi_of_psi");
  return out;
}

}  // namespace ouschro
