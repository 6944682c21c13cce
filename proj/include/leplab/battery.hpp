#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "leplab/grid_function.hpp"

namespace leplab {

/// Deterministic test-function generators. All draw from the caller's
/// engine, so a fixed seed fixes the whole battery.

/// Smooth mix of a few Gaussian bumps with signs; centers stay within
/// [-8, 8] so the tail is negligible for half widths >= 16.
GridFunction random_smooth(std::mt19937& rng, double half_width,
                           std::size_t num_points);

/// Nonnegative, compactly supported (within [-8, 8]) mix of hats.
GridFunction random_positive_compact(std::mt19937& rng, double half_width,
                                     std::size_t num_points);

/// random_smooth conditioned on taking both signs.
GridFunction random_sign_changing(std::mt19937& rng, double half_width,
                                  std::size_t num_points);

std::vector<GridFunction> make_battery(std::uint32_t seed, std::size_t count,
                                       double half_width, std::size_t num_points);

}  // namespace leplab
