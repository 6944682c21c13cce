#include "leplab/example_semigroup.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace leplab {

ExampleSemigroup::ExampleSemigroup(GridFunction profile) : profile_(std::move(profile)) {
  if (!profile_.is_real()) {
    throw std::invalid_argument("ExampleSemigroup: profile must be real kind");
  }
  for (std::size_t k = 0; k < profile_.size(); ++k) {
    const double v = profile_.real_value(k);
    if (!(v > 0.0) || v > 1.0) {
      throw std::invalid_argument(
          "ExampleSemigroup: profile requires 0 < f0(x) <= 1 at every node");
    }
  }
  const double mass = trapezoid_integral(profile_).real();
  if (std::abs(mass - 1.0) > 1e-8) {
    throw std::invalid_argument("ExampleSemigroup: profile integral must be 1 within 1e-8");
  }
}

ExampleSemigroup ExampleSemigroup::with_gaussian_profile(double half_width,
                                                         std::size_t num_points) {
  // The Gaussian underflows to 0 beyond |x| ~ 38.6; clamp the far tail to the
  // smallest positive double so strict positivity survives on wide grids.
  const double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  const double floor = std::numeric_limits<double>::denorm_min();
  return ExampleSemigroup(GridFunction::sample(half_width, num_points, [=](double x) {
    return std::max(scale * std::exp(-0.5 * x * x), floor);
  }));
}

GridFunction ExampleSemigroup::apply(const GridFunction& f, double t) const {
  if (!f.same_grid(profile_)) {
    throw std::invalid_argument("ExampleSemigroup::apply: incompatible discretizations");
  }
  if (!(t >= 0)) {
    throw std::invalid_argument("ExampleSemigroup::apply: time must be nonnegative");
  }
  const std::complex<double> c = trapezoid_integral(f);
  const GridFunction ft = translate(f, t);
  const GridFunction f0t = translate(profile_, t);
  std::vector<std::complex<double>> values(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    values[k] = c * profile_.value(k) + (ft.value(k) - c * f0t.value(k));
  }
  return GridFunction(f.half_width(), f.size(), std::move(values), f.kind());
}

std::optional<double> ExampleSemigroup::time_to_positivity(
    const GridFunction& f, double radius, std::span<const double> t_grid) const {
  check_positive_datum(f, "time_to_positivity");
  if (t_grid.empty()) {
    throw std::invalid_argument("time_to_positivity: empty time grid");
  }
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw std::invalid_argument("time_to_positivity: time grid must be increasing");
    }
  }
  long last_failure = -1;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (min_on_window(apply(f, t_grid[i]), radius) <= 0.0) last_failure = long(i);
  }
  if (last_failure == long(t_grid.size()) - 1) return std::nullopt;
  return t_grid[std::size_t(last_failure + 1)];
}

double ExampleSemigroup::uniform_onset_bound(double radius, double step,
                                             double search_max) const {
  if (!(step > 0) || !(search_max > step)) {
    throw std::invalid_argument("uniform_onset_bound: need 0 < step < search_max");
  }
  const std::size_t count = std::size_t(std::floor(search_max / step)) + 1;
  long last_failure = -1;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = double(i) * step;
    const GridFunction shifted = translate(profile_, t);
    const auto [lo, hi] = profile_.window(radius);
    double diff_min = profile_.real_value(lo) - shifted.real_value(lo);
    for (std::size_t k = lo + 1; k <= hi; ++k) {
      diff_min = std::min(diff_min, profile_.real_value(k) - shifted.real_value(k));
    }
    if (diff_min <= 0.0) last_failure = long(i);
  }
  if (last_failure == long(count) - 1) {
    throw std::runtime_error(
        "uniform_onset_bound: profile difference not positive within the search "
        "horizon; increase search_max");
  }
  return double(last_failure + 1) * step;
}

std::vector<ExampleSemigroup::OrbitDistSample> ExampleSemigroup::orbit_cone_distances(
    const GridFunction& f, std::span<const double> t_grid) const {
  if (!f.is_real()) {
    throw std::invalid_argument("orbit_cone_distances: datum must be real kind");
  }
  std::vector<OrbitDistSample> samples;
  samples.reserve(t_grid.size());
  for (const double t : t_grid) {
    samples.push_back({t, dist_to_positive_cone(apply(f, t))});
  }
  return samples;
}

double ExampleSemigroup::noncompactness_plateau(const GridFunction& f) const {
  const double c = trapezoid_integral(f).real();
  return norm_l1(neg_part(f - c * profile_));
}

}  // namespace leplab
