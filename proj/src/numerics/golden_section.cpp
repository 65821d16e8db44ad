#include "bpcg/numerics/golden_section.hpp"

#include <cmath>

namespace bpcg::numerics {

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                      double tolerance, int max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  ScalarMinimum best{lo, f(lo), 1};
  const double f_hi = f(hi);
  ++best.evaluations;
  if (f_hi < best.value) best = {hi, f_hi, best.evaluations};
  if (!(hi > lo)) return best;

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  best.evaluations += 2;
  for (int it = 0; it < max_iterations && (b - a) > tolerance; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++best.evaluations;
  }
  const double x = fc <= fd ? c : d;
  const double fx = fc <= fd ? fc : fd;
  if (fx < best.value) {
    best.argmin = x;
    best.value = fx;
  }
  return best;
}

}  // namespace bpcg::numerics
