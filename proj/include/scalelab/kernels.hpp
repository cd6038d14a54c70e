#pragma once

#include <complex>
#include <span>

// Data-parallel inner loops shared by every module. `kernels::*` are the OpenMP
// versions used in production; `kernels::serial::*` are plain loops kept as the
// reference the parallel versions are tested and benchmarked against.
//
// Reductions use a fixed block partition independent of the thread count, so the
// parallel sums are bitwise reproducible from run to run.

namespace scalelab::kernels {

using cplx = std::complex<double>;

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(double alpha, std::span<double> x);
/// c[k] *= m[k]
void scale_modes(std::span<cplx> c, std::span<const double> m);
void scale_modes(std::span<cplx> c, std::span<const cplx> m);
double max_abs(std::span<const double> x);
double sum_squares(std::span<const double> x);
double sum_squares(std::span<const cplx> c);
double sum(std::span<const double> x);

namespace serial {
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(double alpha, std::span<double> x);
void scale_modes(std::span<cplx> c, std::span<const double> m);
void scale_modes(std::span<cplx> c, std::span<const cplx> m);
double max_abs(std::span<const double> x);
double sum_squares(std::span<const double> x);
double sum_squares(std::span<const cplx> c);
double sum(std::span<const double> x);
}  // namespace serial

}  // namespace scalelab::kernels
