#pragma once

#include "ouschro/grid.hpp"

namespace ouschro {

/// Semidiscrete Fourier transform at arbitrary target points:
///   F(xi) = sum_j f(x_j) e^{-2 pi i <xi, x_j>} Delta^m
/// for each row xi of `targets` (T x m). Direct summation with per-axis phase
/// tables; each target sum is pairwise-reduced serially, parallelism is over
/// targets only, so results are independent of thread count.
Eigen::VectorXcd dft_at(const Field& f, const Eigen::MatrixXd& targets);

}  // namespace ouschro
