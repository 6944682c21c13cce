#include "leplab/fit.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace leplab {

double linear_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit: size mismatch");
  if (x.size() < 3) throw std::invalid_argument("fit: need at least 3 points");
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0)) throw std::invalid_argument("fit: loglog needs positive x");
    lx[i] = std::log(x[i]);
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] > 0)) throw std::invalid_argument("fit: loglog needs positive y");
    ly[i] = std::log(y[i]);
  }
  return linear_slope(lx, ly);
}

}  // namespace leplab
