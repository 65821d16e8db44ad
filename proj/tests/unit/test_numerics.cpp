#include "doctest.h"

#include "bpcg/numerics/golden_section.hpp"
#include "bpcg/numerics/halton.hpp"
#include "bpcg/numerics/quadrature.hpp"
#include "bpcg/numerics/regression.hpp"

#include <cmath>
#include <vector>

using namespace bpcg::numerics;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const auto rule = gauss_legendre(8);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 14);
  CHECK(s == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
  const auto mapped = gauss_legendre(64, 0.0, 1.0);
  double e = 0.0;
  for (std::size_t i = 0; i < mapped.nodes.size(); ++i) e += mapped.weights[i] * std::exp(mapped.nodes[i]);
  CHECK(e == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("golden section finds interior and boundary minima") {
  auto m = golden_section_minimize([](double x) { return (x - 0.3) * (x - 0.3); }, 0.0, 1.0);
  CHECK(m.argmin == doctest::Approx(0.3).epsilon(1e-8));
  m = golden_section_minimize([](double x) { return x; }, 0.0, 1.0);
  CHECK(m.argmin == 0.0);
  m = golden_section_minimize([](double x) { return -x; }, 0.0, 1.0);
  CHECK(m.argmin == 1.0);
}

TEST_CASE("Halton points") {
  CHECK(radical_inverse(1, 2) == 0.5);
  CHECK(radical_inverse(3, 2) == 0.75);
  CHECK(radical_inverse(1, 3) == doctest::Approx(1.0 / 3.0));
  const auto pts = halton_points(100, 2, -1.0, 1.0);
  REQUIRE(pts.size() == 100);
  for (const auto& p : pts) CHECK(p.cwiseAbs().maxCoeff() <= 1.0);
  CHECK(pts[0][0] == 0.0);
}

TEST_CASE("least-squares line") {
  const std::vector<double> x{0, 1, 2, 3}, y{1, 3, 5, 7};
  const auto fit = fit_line(x, y);
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(fit.r_squared == doctest::Approx(1.0));
}
