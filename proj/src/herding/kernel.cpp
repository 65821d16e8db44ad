#include "bpcg/herding/kernel.hpp"

#include "bpcg/core/errors.hpp"

#include <cmath>
#include <string>

namespace bpcg {

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::Matern32: return "matern32";
    case KernelKind::Matern52: return "matern52";
    case KernelKind::Gaussian: return "gaussian";
  }
  return "?";
}

KernelKind kernel_kind_from_string(std::string_view text) {
  if (text == "matern32") return KernelKind::Matern32;
  if (text == "matern52") return KernelKind::Matern52;
  if (text == "gaussian") return KernelKind::Gaussian;
  throw ConfigError("unknown kernel '" + std::string(text) + "'");
}

double Kernel::of_distance(double r) const {
  switch (kind_) {
    case KernelKind::Matern32: return (1.0 + r) * std::exp(-r);
    case KernelKind::Matern52: return (1.0 + r + r * r / 3.0) * std::exp(-r);
    case KernelKind::Gaussian: return std::exp(-r * r);
  }
  return 0.0;
}

double Kernel::operator()(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  if (x.size() != y.size()) throw ContractViolation("kernel arguments differ in dimension");
  const double r2 = (x - y).squaredNorm();
  if (kind_ == KernelKind::Gaussian) return std::exp(-r2);
  return of_distance(std::sqrt(r2));
}

}  // namespace bpcg
