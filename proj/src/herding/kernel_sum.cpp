#include "kernel_sum.hpp"

#include <cmath>

namespace bpcg::detail {

namespace {

template <KernelKind K>
inline double profile(double r2) {
  if constexpr (K == KernelKind::Gaussian) {
    return std::exp(-r2);
  } else {
    const double r = std::sqrt(r2);
    if constexpr (K == KernelKind::Matern32)
      return (1.0 + r) * std::exp(-r);
    else
      return (1.0 + r + r * r / 3.0) * std::exp(-r);
  }
}

template <KernelKind K>
double sum_impl(const double* p, const double* w, std::size_t n, int d, const double* x) {
  double s = 0.0;
  if (d == 2) {
    const double x0 = x[0], x1 = x[1];
#pragma omp simd reduction(+ : s)
    for (std::size_t i = 0; i < n; ++i) {
      const double a = p[i] - x0, b = p[n + i] - x1;
      s += w[i] * profile<K>(a * a + b * b);
    }
    return s;
  }
#pragma omp simd reduction(+ : s)
  for (std::size_t i = 0; i < n; ++i) {
    double r2 = 0.0;
    for (int j = 0; j < d; ++j) {
      const double a = p[j * n + i] - x[j];
      r2 += a * a;
    }
    s += w[i] * profile<K>(r2);
  }
  return s;
}

template <KernelKind K>
void column_impl(const double* p, std::size_t n, int d, const double* x, double* out) {
#pragma omp simd
  for (std::size_t i = 0; i < n; ++i) {
    double r2 = 0.0;
    for (int j = 0; j < d; ++j) {
      const double a = p[j * n + i] - x[j];
      r2 += a * a;
    }
    out[i] = profile<K>(r2);
  }
}

}  // namespace

double kernel_sum(KernelKind kind, const double* coords, const double* weights, std::size_t n, int d,
                  const double* x) {
  switch (kind) {
    case KernelKind::Matern32: return sum_impl<KernelKind::Matern32>(coords, weights, n, d, x);
    case KernelKind::Matern52: return sum_impl<KernelKind::Matern52>(coords, weights, n, d, x);
    case KernelKind::Gaussian: return sum_impl<KernelKind::Gaussian>(coords, weights, n, d, x);
  }
  return 0.0;
}

void kernel_column(KernelKind kind, const double* coords, std::size_t n, int d, const double* x, double* out) {
  switch (kind) {
    case KernelKind::Matern32: column_impl<KernelKind::Matern32>(coords, n, d, x, out); return;
    case KernelKind::Matern52: column_impl<KernelKind::Matern52>(coords, n, d, x, out); return;
    case KernelKind::Gaussian: column_impl<KernelKind::Gaussian>(coords, n, d, x, out); return;
  }
}

}  // namespace bpcg::detail
