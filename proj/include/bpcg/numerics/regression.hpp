#ifndef BPCG_NUMERICS_REGRESSION_HPP
#define BPCG_NUMERICS_REGRESSION_HPP

#include <span>

namespace bpcg::numerics {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least-squares line y ~ slope * x + intercept.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace bpcg::numerics

#endif
