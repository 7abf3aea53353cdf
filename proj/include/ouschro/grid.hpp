#pragma once

#include <cstdint>
#include <functional>

#include "ouschro/gaussian.hpp"

namespace ouschro {

/// Uniform centered grid covering [-r, r)^m with n nodes per axis (n even, so
/// the origin is a node). Nodes are ordered row-major with the first axis
/// slowest.
struct Grid {
  int m = 1;
  int n = 16;
  double r = 1.0;

  double spacing() const { return 2.0 * r / n; }
  std::int64_t size() const;
  double axis_coord(int k) const { return -r + k * spacing(); }
  /// Writes the m coordinates of node idx into xout.
  void axis_indices(std::int64_t idx, int* iout) const;
  void node(std::int64_t idx, double* xout) const;
  double node_sqnorm(std::int64_t idx) const;
  bool operator==(const Grid&) const = default;
};

Grid make_grid(int m, int n, double r,
               std::int64_t budget = std::int64_t(1) << 24);

/// Complex field sampled on a grid; values in row-major node order.
struct Field {
  Grid grid;
  Eigen::ArrayXcd values;
};

Field sample(const GaussianExponential& g, const Grid& grid);
Field sample(const std::function<Complex(const RealVector&)>& fn,
             const Grid& grid);

/// Pointwise multiply by e^{-|x|^2/4} (phi -> psi) or e^{+|x|^2/4}
/// (psi -> phi). The lift direction reports overflow instead of saturating.
Field gauge_psi_of_phi(const Field& f);
Field gauge_phi_of_psi(const Field& f);

/// Pointwise multiply by e^{q|x|^2} for complex q (chirps and gauges).
Field multiply_radial(const Field& f, Complex q);

}  // namespace ouschro
