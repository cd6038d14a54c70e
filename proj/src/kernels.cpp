#include "scalelab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace scalelab::kernels {

namespace {

// Reduction block length. Fixed so partial sums do not depend on the thread count.
constexpr std::ptrdiff_t kBlock = 2048;

// Below this many elements the parallel region costs more than it saves.
constexpr std::ptrdiff_t kParallelThreshold = 8192;

template <class T, class Op>
double blocked_sum(std::span<const T> x, Op op) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  const std::ptrdiff_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t b = 0; b < blocks; ++b) {
    const std::ptrdiff_t lo = b * kBlock;
    const std::ptrdiff_t hi = std::min(n, lo + kBlock);
    double s = 0.0;
    for (std::ptrdiff_t i = lo; i < hi; ++i) s += op(x[i]);
    partial[b] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

}  // namespace

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, std::span<double> x) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) x[i] *= alpha;
}

void scale_modes(std::span<cplx> c, std::span<const double> m) {
  const auto n = static_cast<std::ptrdiff_t>(c.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) c[i] *= m[i];
}

void scale_modes(std::span<cplx> c, std::span<const cplx> m) {
  const auto n = static_cast<std::ptrdiff_t>(c.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) c[i] *= m[i];
}

double max_abs(std::span<const double> x) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

double sum_squares(std::span<const double> x) {
  return blocked_sum(x, [](double v) { return v * v; });
}

double sum_squares(std::span<const cplx> c) {
  return blocked_sum(c, [](const cplx& v) { return std::norm(v); });
}

double sum(std::span<const double> x) {
  return blocked_sum(x, [](double v) { return v; });
}

namespace serial {

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

void scale(double alpha, std::span<double> x) {
  for (double& v : x) v *= alpha;
}

void scale_modes(std::span<cplx> c, std::span<const double> m) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= m[i];
}

void scale_modes(std::span<cplx> c, std::span<const cplx> m) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= m[i];
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double sum_squares(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double sum_squares(std::span<const cplx> c) {
  double s = 0.0;
  for (const auto& v : c) s += std::norm(v);
  return s;
}

double sum(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

}  // namespace serial

}  // namespace scalelab::kernels
