#include "ouschro/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ouschro/parallel.hpp"

namespace ouschro {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI{0.0, 1.0};
}  // namespace

Eigen::VectorXcd dft_at(const Field& f, const Eigen::MatrixXd& targets) {
  const Grid& g = f.grid;
  if (targets.cols() != g.m)
    throw std::invalid_argument("dft_at: target dimension mismatch");
  if (!targets.allFinite())
    throw std::invalid_argument("dft_at: non-finite target");
  const std::int64_t n_targets = targets.rows();
  const std::int64_t n_nodes = g.size();
  const double weight = std::pow(g.spacing(), g.m);
  Eigen::VectorXcd out(n_targets);

  parallel_for(n_targets, [&](std::int64_t tlo, std::int64_t thi) {
    std::vector<Complex> scratch(n_nodes);
    std::vector<Complex> tab(static_cast<std::size_t>(g.m) * g.n);
    for (std::int64_t ti = tlo; ti < thi; ++ti) {
      for (int a = 0; a < g.m; ++a) {
        const double xi = targets(ti, a);
        for (int k = 0; k < g.n; ++k)
          tab[a * g.n + k] = std::exp(-kI * (kTwoPi * xi * g.axis_coord(k)));
      }
      std::int64_t j = 0;
      if (g.m == 1) {
        for (int k = 0; k < g.n; ++k, ++j) scratch[j] = f.values[j] * tab[k];
      } else if (g.m == 2) {
        for (int i0 = 0; i0 < g.n; ++i0) {
          const Complex w0 = tab[i0];
          for (int i1 = 0; i1 < g.n; ++i1, ++j)
            scratch[j] = f.values[j] * w0 * tab[g.n + i1];
        }
      } else {
        for (int i0 = 0; i0 < g.n; ++i0) {
          const Complex w0 = tab[i0];
          for (int i1 = 0; i1 < g.n; ++i1) {
            const Complex w01 = w0 * tab[g.n + i1];
            for (int i2 = 0; i2 < g.n; ++i2, ++j)
              scratch[j] = f.values[j] * w01 * tab[2 * g.n + i2];
          }
        }
      }
      out[ti] = weight * pairwise_sum(scratch.data(), n_nodes);
    }
  });
  return out;
}

}  // namespace ouschro
