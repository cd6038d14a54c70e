#include "scalelab/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "scalelab/error.hpp"
#include "scalelab/kernels.hpp"

namespace scalelab {

namespace {

using cplx = std::complex<double>;

// In-place complex transforms, planned once per (dim, size, direction). FFTW planning
// is not thread-safe; execution through the new-array interface is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(const Grid& grid, int sign) {
    const auto key = std::make_tuple(grid.dim(), grid.size(), sign);
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<cplx> scratch(grid.points());
    auto* data = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = nullptr;
    // FFTW is row-major; axis 0 is the contiguous (last) dimension.
    if (grid.dim() == 1) {
      plan = fftw_plan_dft_1d(grid.size(), data, data, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    } else {
      plan = fftw_plan_dft_2d(grid.size(), grid.size(), data, data, sign,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    if (plan == nullptr) throw NumericalError("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& plans() {
  static PlanCache cache;
  return cache;
}

void transform(const Grid& grid, std::span<cplx> data, int sign) {
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans().get(grid, sign), p, p);
}

// Per-mode multiplier of d^order/dx_axis^order.
cplx derivative_factor(const Grid& grid, std::size_t mode, int axis, int order) {
  if (order == 0) return {1.0, 0.0};
  const double k = order % 2 == 1 ? grid.odd_wavenumber(mode, axis) : grid.wavenumber(mode, axis);
  cplx factor{1.0, 0.0};
  const cplx ik{0.0, k};
  for (int i = 0; i < order; ++i) factor *= ik;
  return factor;
}

Field apply_multiplier(const Field& f, const std::vector<cplx>& m) {
  SpectralField s = to_spectral(f);
  for (int c = 0; c < s.components; ++c) kernels::scale_modes(s.component(c), m);
  return from_spectral(s, f.t(), f.eta());
}

}  // namespace

SpectralField::SpectralField(const Grid& g, int comps)
    : grid(g), components(comps), coeffs(g.points() * static_cast<std::size_t>(comps)) {}

std::span<cplx> SpectralField::component(int c) {
  return std::span<cplx>(coeffs).subspan(c * grid.points(), grid.points());
}

std::span<const cplx> SpectralField::component(int c) const {
  return std::span<const cplx>(coeffs).subspan(c * grid.points(), grid.points());
}

SpectralField to_spectral(const Field& f) {
  const Grid& grid = f.grid();
  SpectralField s(grid, f.components());
  const auto values = f.values();
  for (std::size_t i = 0; i < values.size(); ++i) s.coeffs[i] = cplx(values[i], 0.0);
  const double norm = 1.0 / static_cast<double>(grid.points());
  for (int c = 0; c < f.components(); ++c) {
    auto comp = s.component(c);
    transform(grid, comp, FFTW_FORWARD);
    for (auto& z : comp) z *= norm;
  }
  return s;
}

Field from_spectral(const SpectralField& s, double t, double eta) {
  std::vector<cplx> work(s.coeffs);
  Field out(s.grid, s.components, t, eta);
  auto values = out.values();
  for (int c = 0; c < s.components; ++c) {
    std::span<cplx> comp(work.data() + c * s.grid.points(), s.grid.points());
    transform(s.grid, comp, FFTW_BACKWARD);
  }
  for (std::size_t i = 0; i < work.size(); ++i) values[i] = work[i].real();
  return out;
}

Field spectral_derivative(const Field& f, int axis, int order) {
  if (axis < 0 || axis >= f.grid().dim()) throw ValidationError("derivative axis out of range");
  if (order < 1) throw ValidationError("derivative order must be at least 1");
  std::array<int, 2> orders{0, 0};
  orders[axis] = order;
  return partial_derivative(f, orders);
}

Field partial_derivative(const Field& f, std::array<int, 2> orders) {
  const Grid& grid = f.grid();
  if (orders[0] < 0 || orders[1] < 0) throw ValidationError("negative derivative order");
  if (grid.dim() == 1 && orders[1] != 0) throw ValidationError("x2 derivative on a 1-D grid");
  if (orders[0] == 0 && orders[1] == 0) return f;
  std::vector<cplx> m(grid.points());
  for (std::size_t p = 0; p < grid.points(); ++p) {
    cplx factor = derivative_factor(grid, p, 0, orders[0]);
    if (grid.dim() == 2) factor *= derivative_factor(grid, p, 1, orders[1]);
    m[p] = factor;
  }
  return apply_multiplier(f, m);
}

Field laplacian(const Field& f) {
  const Grid& grid = f.grid();
  std::vector<cplx> m(grid.points());
  for (std::size_t p = 0; p < grid.points(); ++p) m[p] = -grid.wavenumber_sq(p);
  return apply_multiplier(f, m);
}

Field gradient(const Field& scalar) {
  if (scalar.components() != 1) throw ValidationError("gradient expects a scalar field");
  std::vector<Field> parts;
  for (int a = 0; a < scalar.grid().dim(); ++a) parts.push_back(spectral_derivative(scalar, a, 1));
  return concat(parts);
}

Field divergence(const Field& vec) {
  const Grid& grid = vec.grid();
  if (vec.components() != grid.dim()) {
    throw ValidationError("divergence expects a field with one component per axis");
  }
  SpectralField s = to_spectral(vec);
  SpectralField d(grid, 1);
  for (std::size_t p = 0; p < grid.points(); ++p) {
    cplx acc{0.0, 0.0};
    for (int a = 0; a < grid.dim(); ++a) {
      acc += cplx(0.0, grid.odd_wavenumber(p, a)) * s.component(a)[p];
    }
    d.coeffs[p] = acc;
  }
  return from_spectral(d, vec.t(), vec.eta());
}

bool in_dealiased_band(const Grid& grid, std::size_t mode) {
  for (int a = 0; a < grid.dim(); ++a) {
    if (3 * std::abs(grid.wavenumber(mode, a)) >= grid.size()) return false;
  }
  return true;
}

SpectralField dealias(const SpectralField& s) {
  SpectralField out = s;
  for (int c = 0; c < out.components; ++c) {
    auto comp = out.component(c);
    for (std::size_t p = 0; p < out.grid.points(); ++p) {
      if (!in_dealiased_band(out.grid, p)) comp[p] = 0.0;
    }
  }
  return out;
}

Field dealias(const Field& f) { return from_spectral(dealias(to_spectral(f)), f.t(), f.eta()); }

Field banded_product(const Field& a, const Field& b) {
  if (a.components() != 1 || b.components() != 1 || !(a.grid() == b.grid())) {
    throw ValidationError("product expects two scalar fields on one grid");
  }
  Field out(a.grid(), 1, a.t(), a.eta());
  kernels::multiply(a.values(), b.values(), out.values());
  return dealias(out);
}

Field dealiased_product(const Field& a, const Field& b) {
  return banded_product(dealias(a), dealias(b));
}

Norms field_norms(const Field& f) {
  const double ms = kernels::sum_squares(f.values()) / static_cast<double>(f.grid().points());
  return {std::sqrt(ms) * f.grid().measure(), kernels::max_abs(f.values())};
}

double spectral_l2(const SpectralField& s) {
  return std::sqrt(kernels::sum_squares(std::span<const cplx>(s.coeffs))) * s.grid.measure();
}

}  // namespace scalelab
