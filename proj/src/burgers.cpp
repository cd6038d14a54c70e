#include "scalelab/burgers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scalelab/error.hpp"
#include "scalelab/spectral.hpp"

namespace scalelab {

namespace {

Field burgers_rate(const Field& u) {
  Field r = banded_product(dealias(u), dealias(spectral_derivative(u, 0, 1)));
  r *= -1.0;
  return r;
}

Field rk4_step(const Field& u, double dt) {
  const Field k1 = burgers_rate(u);
  Field s = u;
  s.add_scaled(0.5 * dt, k1);
  const Field k2 = burgers_rate(s);
  s = u;
  s.add_scaled(0.5 * dt, k2);
  const Field k3 = burgers_rate(s);
  s = u;
  s.add_scaled(dt, k3);
  const Field k4 = burgers_rate(s);
  Field out = u;
  out.add_scaled(dt / 6.0, k1).add_scaled(dt / 3.0, k2).add_scaled(dt / 3.0, k3).add_scaled(dt / 6.0, k4);
  return out;
}

}  // namespace

std::vector<BurgersSnapshot> reference_burgers(const BurgersReferenceConfig& config) {
  if (config.refine < 4) throw ValidationError("burgers reference needs refine >= 4");
  if (config.snapshot_times.empty()) throw ValidationError("burgers reference needs snapshot times");
  if (!(config.dt > 0.0)) throw ValidationError("burgers reference dt must be positive");
  std::vector<double> times = config.snapshot_times;
  std::sort(times.begin(), times.end());
  if (times.front() < 0.0) throw ValidationError("snapshot times must be non-negative");
  if (!(times.back() < 1.0)) {
    throw ValidationError("burgers reference t_end must be < 1 (gradient blow-up at t = 1)");
  }
  const Grid fine = make_grid(1, config.coarse_size * config.refine);
  Field u = sample(fine, [](double x, double) { return std::sin(x); });

  std::vector<BurgersSnapshot> out;
  double t = 0.0;
  for (double target : times) {
    const double span = target - t;
    if (span > 0.0) {
      const long steps = std::max(1L, static_cast<long>(std::ceil(span / config.dt - 1e-9)));
      const double h = span / static_cast<double>(steps);
      for (long k = 0; k < steps; ++k) u = rk4_step(u, h);
      if (!u.all_finite()) throw NumericalError("burgers reference produced non-finite values");
    }
    t = target;
    out.push_back({t, u.with_coords(t, 0.0), burgers_rate(u).with_coords(t, 0.0)});
  }
  return out;
}

Field burgers_characteristics(const Grid& grid, double t, double tol) {
  if (grid.dim() != 1) throw ValidationError("burgers characteristics are 1-D");
  if (!(t >= 0.0 && t < 1.0)) throw ValidationError("characteristic solution needs 0 <= t < 1");
  return sample(grid, [t, tol](double x, double) {
    double u = std::sin(x);
    for (int it = 0; it < 100; ++it) {
      const double g = u - std::sin(x - u * t);
      const double dg = 1.0 + t * std::cos(x - u * t);
      const double step = g / dg;
      u -= step;
      if (std::abs(step) < tol) break;
    }
    return u;
  }, t, 0.0);
}

Field restrict_to(const Field& fine, const Grid& coarse) {
  const Grid& fg = fine.grid();
  if (fg.dim() != coarse.dim() || fg.size() < coarse.size() || fg.size() % coarse.size() != 0) {
    throw ValidationError("restriction needs a coarser grid dividing the fine one");
  }
  const SpectralField fs = to_spectral(fine);
  SpectralField cs(coarse, fine.components());
  const int half = coarse.size() / 2;
  for (std::size_t p = 0; p < coarse.points(); ++p) {
    int idx[2] = {0, 0};
    bool keep = true;
    for (int a = 0; a < coarse.dim(); ++a) {
      const int k = coarse.wavenumber(p, a);
      if (std::abs(k) >= half) keep = false;
      idx[a] = k >= 0 ? k : k + fg.size();
    }
    if (!keep) continue;
    const std::size_t q = static_cast<std::size_t>(idx[0]) +
                          static_cast<std::size_t>(fg.size()) * static_cast<std::size_t>(idx[1]);
    for (int c = 0; c < fine.components(); ++c) cs.component(c)[p] = fs.component(c)[q];
  }
  return from_spectral(cs, fine.t(), fine.eta());
}

std::pair<ScaleStack, ScaleStack> burgers_filtered_stacks(const BurgersSnapshot& snapshot,
                                                          const Grid& coarse, double first_eta,
                                                          double delta_eta, int K) {
  const Field u0 = restrict_to(snapshot.u, coarse).with_coords(snapshot.t, 0.0);
  const Field ut0 = restrict_to(snapshot.u_t, coarse).with_coords(snapshot.t, 0.0);
  return {propagated_stack(u0, first_eta, delta_eta, K),
          propagated_stack(ut0, first_eta, delta_eta, K)};
}

}  // namespace scalelab
