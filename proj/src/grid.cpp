#include "scalelab/grid.hpp"

#include <cmath>
#include <string>

#include "scalelab/error.hpp"
#include "scalelab/kernels.hpp"

namespace scalelab {

Grid::Grid(int dim, int size) : dim_(dim), size_(size) {
  if (dim != 1 && dim != 2) {
    throw ValidationError("grid dimension must be 1 or 2, got " + std::to_string(dim));
  }
  if (size < 8) throw ValidationError("grid size must be at least 8, got " + std::to_string(size));
  if (size % 2 != 0) throw ValidationError("grid size must be even, got " + std::to_string(size));
  points_ = dim == 1 ? static_cast<std::size_t>(size)
                     : static_cast<std::size_t>(size) * static_cast<std::size_t>(size);
}

double Grid::measure() const noexcept { return dim_ == 1 ? length : length * length; }

double Grid::wavenumber_sq(std::size_t p) const noexcept {
  double k2 = 0.0;
  for (int a = 0; a < dim_; ++a) {
    const double k = wavenumber(p, a);
    k2 += k * k;
  }
  return k2;
}

Grid make_grid(int dim, int size) { return Grid(dim, size); }

Field::Field(const Grid& grid, int components, double t, double eta)
    : grid_(grid), components_(components), t_(t), eta_(eta) {
  if (components < 1) throw ValidationError("field needs at least one component");
  values_.assign(grid.points() * static_cast<std::size_t>(components), 0.0);
}

Field::Field(const Grid& grid, int components, std::vector<double> values, double t, double eta)
    : grid_(grid), components_(components), values_(std::move(values)), t_(t), eta_(eta) {
  if (components < 1) throw ValidationError("field needs at least one component");
  if (values_.size() != grid.points() * static_cast<std::size_t>(components)) {
    throw ValidationError("field value array does not match grid and component count");
  }
}

Field Field::with_coords(double t, double eta) const {
  Field out = *this;
  out.t_ = t;
  out.eta_ = eta;
  return out;
}

std::span<const double> Field::component(int c) const {
  if (c < 0 || c >= components_) throw ValidationError("component index out of range");
  return std::span<const double>(values_).subspan(c * grid_.points(), grid_.points());
}

std::span<double> Field::component(int c) {
  if (c < 0 || c >= components_) throw ValidationError("component index out of range");
  return std::span<double>(values_).subspan(c * grid_.points(), grid_.points());
}

Field Field::extract(int c) const {
  const auto src = component(c);
  return Field(grid_, 1, std::vector<double>(src.begin(), src.end()), t_, eta_);
}

bool Field::all_finite() const noexcept {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void Field::check_compatible(const Field& other) const {
  if (!(grid_ == other.grid_) || components_ != other.components_) {
    throw ValidationError("incompatible fields (grid or component count differ)");
  }
}

Field& Field::operator+=(const Field& other) { return add_scaled(1.0, other); }
Field& Field::operator-=(const Field& other) { return add_scaled(-1.0, other); }

Field& Field::operator*=(double a) {
  kernels::scale(a, values_);
  return *this;
}

Field& Field::add_scaled(double a, const Field& other) {
  check_compatible(other);
  kernels::axpy(a, other.values_, values_);
  return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(double a, Field f) { return f *= a; }

Field concat(std::span<const Field> parts) {
  if (parts.empty()) throw ValidationError("concat needs at least one field");
  const Grid& grid = parts.front().grid();
  int total = 0;
  for (const auto& p : parts) {
    if (!(p.grid() == grid)) throw ValidationError("concat: fields live on different grids");
    total += p.components();
  }
  Field out(grid, total, parts.front().t(), parts.front().eta());
  std::size_t offset = 0;
  for (const auto& p : parts) {
    std::copy(p.values().begin(), p.values().end(), out.values().begin() + offset);
    offset += p.values().size();
  }
  return out;
}

Field sample(const Grid& grid, const std::function<double(double, double)>& fn, double t,
             double eta) {
  Field out(grid, 1, t, eta);
  auto v = out.values();
  for (std::size_t p = 0; p < grid.points(); ++p) {
    const double x = grid.coordinate(p, 0);
    const double y = grid.dim() == 2 ? grid.coordinate(p, 1) : 0.0;
    v[p] = fn(x, y);
  }
  return out;
}

}  // namespace scalelab
