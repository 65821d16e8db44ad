#ifndef BPCG_NUMERICS_GOLDEN_SECTION_HPP
#define BPCG_NUMERICS_GOLDEN_SECTION_HPP

#include <functional>

namespace bpcg::numerics {

struct ScalarMinimum {
  double argmin = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for the minimum of f on [lo, hi].
///
/// The interval endpoints are evaluated as well and returned if they beat the
/// interior estimate, so minima on the boundary are found exactly.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                      double tolerance = 1e-10, int max_iterations = 200);

}  // namespace bpcg::numerics

#endif
