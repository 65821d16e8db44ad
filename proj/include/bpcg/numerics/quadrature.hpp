#ifndef BPCG_NUMERICS_QUADRATURE_HPP
#define BPCG_NUMERICS_QUADRATURE_HPP

#include <vector>

namespace bpcg::numerics {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes by Newton iteration on the three-term Legendre recurrence.
GaussLegendreRule gauss_legendre(int order);

/// The same rule affinely mapped to [lo, hi].
GaussLegendreRule gauss_legendre(int order, double lo, double hi);

}  // namespace bpcg::numerics

#endif
