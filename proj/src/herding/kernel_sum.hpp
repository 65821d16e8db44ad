#ifndef BPCG_SRC_HERDING_KERNEL_SUM_HPP
#define BPCG_SRC_HERDING_KERNEL_SUM_HPP

#include "bpcg/herding/kernel_kind.hpp"

#include <cstddef>

// Hot loops over many points, compiled with vectorised math (see
// src/CMakeLists.txt). The translation unit must not include Eigen: its
// allocator depends on the target ISA. Points are stored coordinate-major,
// coords[j * n + i] being coordinate j of point i.

namespace bpcg::detail {

/// sum_i w_i K(p_i, x).
double kernel_sum(KernelKind kind, const double* coords, const double* weights, std::size_t n, int d,
                  const double* x);

/// out[i] = K(p_i, x).
void kernel_column(KernelKind kind, const double* coords, std::size_t n, int d, const double* x, double* out);

}  // namespace bpcg::detail

#endif
