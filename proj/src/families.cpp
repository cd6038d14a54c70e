#include "scalelab/families.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "scalelab/error.hpp"

namespace scalelab {

double TimeProfile::value(double t) const {
  const double base = a0 + a1 * std::sin(omega * t);
  return power == 2 ? base * base : base;
}

double TimeProfile::rate(double t) const {
  const double base = a0 + a1 * std::sin(omega * t);
  const double d = a1 * omega * std::cos(omega * t);
  return power == 2 ? 2.0 * base * d : d;
}

ModeFamily::ModeFamily(std::string name, int n, int N, std::vector<ModeTerm> terms)
    : name_(std::move(name)), n_(n), N_(N), terms_(std::move(terms)) {
  if (n != 1 && n != 2) throw ValidationError("family dimension must be 1 or 2");
  for (const auto& term : terms_) {
    if (term.component < 0 || term.component >= N) {
      throw ValidationError("family term component out of range");
    }
    if (n == 1 && term.k[1] != 0) throw ValidationError("1-D family term with k_y != 0");
    if (term.time.power != 1 && term.time.power != 2) {
      throw ValidationError("time profile power must be 1 or 2");
    }
  }
}

bool ModeFamily::filtered() const {
  for (const auto& term : terms_) {
    const double k2 = term.k[0] * term.k[0] + term.k[1] * term.k[1];
    if (term.decay != k2) return false;
  }
  return true;
}

Field ModeFamily::evaluate(const Grid& grid, double t, double eta, Part part) const {
  if (grid.dim() != n_) throw ValidationError("family sampled on a grid of another dimension");
  Field out(grid, N_, t, eta);
  for (const auto& term : terms_) {
    const double k2 = term.k[0] * term.k[0] + term.k[1] * term.k[1];
    const double scale_factor = std::exp(-term.decay * eta);
    double amp = term.coeff * scale_factor;
    switch (part) {
      case Part::value: amp *= term.time.value(t); break;
      case Part::t_rate: amp *= term.time.rate(t); break;
      case Part::eta_rate: amp *= -term.decay * term.time.value(t); break;
      case Part::defect: amp *= (k2 - term.decay) * term.time.value(t); break;
      case Part::defect_rate: amp *= (k2 - term.decay) * term.time.rate(t); break;
    }
    auto comp = out.component(term.component);
    for (std::size_t p = 0; p < grid.points(); ++p) {
      const double x = grid.coordinate(p, 0);
      const double y = n_ == 2 ? grid.coordinate(p, 1) : 0.0;
      comp[p] += amp * std::cos(term.k[0] * x + term.k[1] * y + term.phase);
    }
  }
  return out;
}

Field ModeFamily::u(const Grid& grid, double t, double eta) const {
  return evaluate(grid, t, eta, Part::value);
}
Field ModeFamily::u_t(const Grid& grid, double t, double eta) const {
  return evaluate(grid, t, eta, Part::t_rate);
}
Field ModeFamily::u_eta(const Grid& grid, double t, double eta) const {
  return evaluate(grid, t, eta, Part::eta_rate);
}
Field ModeFamily::psi(const Grid& grid, double t, double eta) const {
  return evaluate(grid, t, eta, Part::defect);
}

Field ModeFamily::psi_t(const Grid& grid, double t, double eta) const {
  return evaluate(grid, t, eta, Part::defect_rate);
}

ScaleStack ModeFamily::stack(const Grid& grid, double t, double first_eta, double delta_eta,
                             int K) const {
  std::vector<Field> fields;
  for (int j = 0; j < K; ++j) fields.push_back(u(grid, t, first_eta + j * delta_eta));
  return ScaleStack(first_eta, delta_eta, std::move(fields), first_eta + (K - 1) * delta_eta);
}

ScaleStack ModeFamily::stack_t(const Grid& grid, double t, double first_eta, double delta_eta,
                               int K) const {
  std::vector<Field> fields;
  for (int j = 0; j < K; ++j) fields.push_back(u_t(grid, t, first_eta + j * delta_eta));
  return ScaleStack(first_eta, delta_eta, std::move(fields), first_eta + (K - 1) * delta_eta);
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Velocity terms of the streamfunction chi = coeff cos(k.x + phase):
// v = (d chi/dy, -d chi/dx) = (-k_y, k_x) * (-coeff) sin(...) ... written as cosines.
void add_streamfunction(std::vector<ModeTerm>& terms, int kx, int ky, double phase, double coeff,
                        const TimeProfile& time, double decay) {
  // d/dy cos(theta) = -k_y sin(theta) = -k_y cos(theta - pi/2)
  ModeTerm vx{0, {kx, ky}, phase - kHalfPi, -ky * coeff, time, decay};
  ModeTerm vy{1, {kx, ky}, phase - kHalfPi, kx * coeff, time, decay};
  if (vx.coeff != 0.0) terms.push_back(vx);
  if (vy.coeff != 0.0) terms.push_back(vy);
}

}  // namespace

ModeFamily taylor_green_family(const TimeProfile& g, double perturbation) {
  std::vector<ModeTerm> terms;
  // chi = sin x sin y = (cos(x - y) - cos(x + y)) / 2
  add_streamfunction(terms, 1, -1, 0.0, 0.5, g, 2.0);
  add_streamfunction(terms, 1, 1, 0.0, -0.5, g, 2.0);
  if (perturbation != 0.0) add_streamfunction(terms, 1, 2, 0.3, perturbation, g, 5.0);
  TimeProfile g2 = g;
  g2.power = 2;
  terms.push_back({2, {2, 0}, 0.0, 0.25, g2, 4.0});
  terms.push_back({2, {0, 2}, 0.0, 0.25, g2, 4.0});
  return ModeFamily(perturbation == 0.0 ? "taylor-green" : "taylor-green-perturbed", 2, 3,
                    std::move(terms));
}

ModeFamily solenoidal_family(std::uint64_t seed, int kmax, double amplitude, bool filtered) {
  if (kmax < 1) throw ValidationError("solenoidal family needs kmax >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> off(0.3, 0.8);
  std::vector<ModeTerm> terms;
  for (int kx = 0; kx <= kmax; ++kx) {
    for (int ky = -kmax; ky <= kmax; ++ky) {
      if (kx == 0 && ky <= 0) continue;
      const double k2 = kx * kx + ky * ky;
      const TimeProfile time{1.0, 0.5 * unit(rng), 1.0 + angle(rng) / 4.0, 1};
      const double decay = filtered ? k2 : off(rng) * k2 + 0.5;
      add_streamfunction(terms, kx, ky, angle(rng), amplitude * unit(rng) / k2, time, decay);
      const TimeProfile ptime{1.0, 0.5 * unit(rng), 1.0 + angle(rng) / 4.0, 1};
      const double pdecay = filtered ? k2 : off(rng) * k2 + 0.5;
      terms.push_back({2, {kx, ky}, angle(rng), amplitude * unit(rng) / k2, ptime, pdecay});
    }
  }
  return ModeFamily(filtered ? "solenoidal" : "solenoidal-nonfiltered", 2, 3, std::move(terms));
}

ModeFamily scalar_family(std::uint64_t seed, int kmax, double amplitude, bool filtered) {
  if (kmax < 1) throw ValidationError("scalar family needs kmax >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> off(0.3, 0.8);
  std::vector<ModeTerm> terms;
  terms.push_back({0, {0, 0}, 0.0, 0.3 * amplitude * unit(rng), TimeProfile{}, 0.0});
  for (int k = 1; k <= kmax; ++k) {
    const TimeProfile time{1.0, 0.5 * unit(rng), 1.0 + angle(rng) / 4.0, 1};
    const double k2 = static_cast<double>(k * k);
    const double decay = filtered ? k2 : off(rng) * k2 + 0.5;
    terms.push_back({0, {k, 0}, angle(rng), amplitude * unit(rng) / k, time, decay});
  }
  return ModeFamily(filtered ? "scalar" : "scalar-nonfiltered", 1, 1, std::move(terms));
}

}  // namespace scalelab
