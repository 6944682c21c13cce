#pragma once

#include <optional>
#include <span>
#include <vector>

#include "leplab/grid_function.hpp"
#include "leplab/lattice.hpp"

namespace leplab {

/// The translation-mixing semigroup
///
///   (T_t f)(x) = phi(f) f0(x) + [f(x + t) - phi(f) f0(x + t)],
///
/// where phi(f) is the integral of f and f0 is a fixed strictly positive
/// profile of unit mass (default: the standard Gaussian). T_t acts as the
/// identity on multiples of f0 and as left translation on the kernel of phi.
/// It is locally eventually positive but its orbits do not converge: the
/// distance of T_t f to the positive cone plateaus instead of vanishing,
/// which makes it the negative control for asymptotic-positivity claims that
/// need compact orbits.
class ExampleSemigroup {
public:
  /// Validates 0 < f0 <= 1 at every node and integral(f0) = 1 within 1e-8.
  explicit ExampleSemigroup(GridFunction profile);

  static ExampleSemigroup with_gaussian_profile(double half_width,
                                                std::size_t num_points);

  const GridFunction& profile() const { return profile_; }

  GridFunction apply(const GridFunction& f, double t) const;

  /// Smallest sampled tau such that min over [-R, R] of T_t f is strictly
  /// positive for every sampled t >= tau; nullopt if the last sample fails.
  /// Requires f >= 0, f != 0. Zero crossings exactly on a node count as
  /// failure for that t.
  std::optional<double> time_to_positivity(const GridFunction& f, double radius,
                                           std::span<const double> t_grid) const;

  /// Datum-independent onset: smallest sampled tau (multiples of step) with
  /// f0(x) - f0(x + t) > 0 on the window for all sampled t in [tau, search_max].
  /// For the Gaussian profile the exact answer is 2R, so the returned value
  /// lies in (2R, 2R + step].
  double uniform_onset_bound(double radius, double step, double search_max) const;

  struct OrbitDistSample {
    double t;
    double dist;
  };

  /// dist(T_t f, E_+) per sampled t. For data with (f - phi(f) f0)^- != 0 the
  /// values plateau near noncompactness_plateau(f) instead of decaying.
  std::vector<OrbitDistSample> orbit_cone_distances(
      const GridFunction& f, std::span<const double> t_grid) const;

  /// The plateau constant ||(f - phi(f) f0)^-||_1.
  double noncompactness_plateau(const GridFunction& f) const;

private:
  GridFunction profile_;
};

}  // namespace leplab
