#pragma once

#include <span>

namespace leplab {

/// Least-squares slope of y against x. Throws if fewer than 3 points.
double linear_slope(std::span<const double> x, std::span<const double> y);

/// Least-squares slope of log y against log x; x, y must be positive.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace leplab
