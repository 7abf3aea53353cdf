#pragma once

#include "ouschro/grid.hpp"

namespace ouschro {

/// 4th-order centered Laplacian. Values within two nodes of the box edge are
/// left as zero; consumers restrict to the inner half box.
Field laplacian4(const Field& f);

/// 4th-order centered first derivative along one axis, same edge convention.
Field gradient4(const Field& f, int axis);

/// True when every axis index of the node lies in [n/4, 3n/4), the inner half
/// box used for residual measurements away from truncation pollution.
bool in_inner_half_box(const Grid& g, std::int64_t idx);

/// ||num||_2 / ||den||_2 restricted to the inner half box.
double inner_rel_l2(const Field& num, const Field& den);

}  // namespace ouschro
