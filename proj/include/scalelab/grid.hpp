#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace scalelab {

/// Uniform grid on the 2*pi-periodic torus in one or two dimensions.
///
/// Points are stored with axis 0 (x1) contiguous: flat index p = i0 + size * i1.
/// Wavenumbers along each axis span {-size/2+1, ..., size/2}; the last one is the
/// Nyquist mode.
class Grid {
 public:
  static constexpr double length = 2.0 * std::numbers::pi;

  Grid(int dim, int size);

  int dim() const noexcept { return dim_; }
  int size() const noexcept { return size_; }
  std::size_t points() const noexcept { return points_; }
  double spacing() const noexcept { return length / size_; }
  int nyquist() const noexcept { return size_ / 2; }
  /// Lebesgue measure of the torus, (2*pi)^dim.
  double measure() const noexcept;

  /// Index along `axis` of flat point/mode index p.
  int axis_index(std::size_t p, int axis) const noexcept {
    return axis == 0 ? static_cast<int>(p % size_) : static_cast<int>(p / size_);
  }
  /// Signed wavenumber of flat mode index p along `axis`.
  int wavenumber(std::size_t p, int axis) const noexcept {
    const int i = axis_index(p, axis);
    return i <= size_ / 2 ? i : i - size_;
  }
  /// Wavenumber with the Nyquist entry mapped to zero; used by odd-order operators.
  int odd_wavenumber(std::size_t p, int axis) const noexcept {
    const int k = wavenumber(p, axis);
    return k == size_ / 2 ? 0 : k;
  }
  /// |k|^2 of mode p.
  double wavenumber_sq(std::size_t p) const noexcept;
  double coordinate(std::size_t p, int axis) const noexcept {
    return axis_index(p, axis) * spacing();
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int dim_;
  int size_;
  std::size_t points_;
};

/// Validated grid constructor: dim in {1, 2}, size even and at least 8.
Grid make_grid(int dim, int size);

/// Real, multi-component field sampled on a grid, tagged with its (t, eta) coordinates.
/// Values are component-major: component c occupies [c * points, (c + 1) * points).
class Field {
 public:
  Field(const Grid& grid, int components, double t = 0.0, double eta = 0.0);
  Field(const Grid& grid, int components, std::vector<double> values, double t, double eta);

  const Grid& grid() const noexcept { return grid_; }
  int components() const noexcept { return components_; }
  double t() const noexcept { return t_; }
  double eta() const noexcept { return eta_; }
  Field with_coords(double t, double eta) const;

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  std::span<const double> component(int c) const;
  std::span<double> component(int c);
  /// Copy of one component as a scalar field.
  Field extract(int c) const;

  bool all_finite() const noexcept;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(double a);
  /// this += a * other
  Field& add_scaled(double a, const Field& other);

 private:
  void check_compatible(const Field& other) const;

  Grid grid_;
  int components_;
  std::vector<double> values_;
  double t_;
  double eta_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double a, Field f);

/// Stack scalar or vector fields into one multi-component field (coords from the first).
Field concat(std::span<const Field> parts);

/// Samples fn(x, y) (y = 0 in 1-D) into a scalar field.
Field sample(const Grid& grid, const std::function<double(double, double)>& fn, double t = 0.0,
             double eta = 0.0);

}  // namespace scalelab
