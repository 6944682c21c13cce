#include "leplab/grid_function.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace leplab {

namespace {

void check_grid_spec(double half_width, std::size_t num_points) {
  if (!(half_width > 0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("GridFunction: half_width must be positive and finite");
  }
  if (num_points < 3 || num_points % 2 == 0) {
    throw std::invalid_argument("GridFunction: num_points must be an odd integer >= 3");
  }
}

}  // namespace

GridFunction::GridFunction(double half_width, std::size_t num_points,
                           std::vector<std::complex<double>> values, Kind kind)
    : half_width_(half_width),
      step_(2.0 * half_width / double(num_points - 1)),
      kind_(kind),
      values_(std::move(values)) {
  check_grid_spec(half_width, num_points);
  if (values_.size() != num_points) {
    throw std::invalid_argument("GridFunction: value count does not match num_points");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("GridFunction: values must be finite");
    }
    if (kind_ == Kind::real && v.imag() != 0.0) {
      throw std::invalid_argument("GridFunction: real kind requires exactly zero imaginary parts");
    }
  }
}

GridFunction GridFunction::zeros(double half_width, std::size_t num_points, Kind kind) {
  return GridFunction(half_width, num_points,
                      std::vector<std::complex<double>>(num_points, 0.0), kind);
}

GridFunction GridFunction::sample(double half_width, std::size_t num_points,
                                  const std::function<double(double)>& f) {
  check_grid_spec(half_width, num_points);
  std::vector<std::complex<double>> values(num_points);
  for (std::size_t k = 0; k < num_points; ++k) {
    values[k] = f(node_of(half_width, num_points, k));
  }
  return GridFunction(half_width, num_points, std::move(values), Kind::real);
}

GridFunction GridFunction::sample_complex(
    double half_width, std::size_t num_points,
    const std::function<std::complex<double>(double)>& f) {
  check_grid_spec(half_width, num_points);
  std::vector<std::complex<double>> values(num_points);
  for (std::size_t k = 0; k < num_points; ++k) {
    values[k] = f(node_of(half_width, num_points, k));
  }
  return GridFunction(half_width, num_points, std::move(values), Kind::complex);
}

bool GridFunction::same_grid(const GridFunction& other) const {
  return half_width_ == other.half_width_ && size() == other.size();
}

double GridFunction::boundary_tail() const {
  return std::max(std::abs(values_.front()), std::abs(values_.back()));
}

std::pair<std::size_t, std::size_t> GridFunction::window(double radius) const {
  if (!(radius >= 0) || radius > half_width_) {
    throw std::invalid_argument("GridFunction: window radius must lie in [0, half_width]");
  }
  const double slack = 1e-6;  // fraction of a step; snaps |x_k| == radius onto the window
  const double lo_real = (half_width_ - radius) / step_ - slack;
  const double hi_real = (half_width_ + radius) / step_ + slack;
  const std::size_t lo = std::size_t(std::max(0.0, std::ceil(lo_real)));
  const std::size_t hi = std::min(size() - 1, std::size_t(std::floor(hi_real)));
  return {lo, hi};
}

GridFunction GridFunction::as_complex() const {
  return GridFunction(half_width_, size(), values_, Kind::complex);
}

namespace {

GridFunction zip(const GridFunction& f, const GridFunction& g,
                 const std::function<std::complex<double>(std::complex<double>,
                                                          std::complex<double>)>& op) {
  if (!f.same_grid(g)) {
    throw std::invalid_argument("GridFunction: incompatible discretizations");
  }
  std::vector<std::complex<double>> values(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) values[k] = op(f.value(k), g.value(k));
  const Kind kind = (f.is_real() && g.is_real()) ? Kind::real : Kind::complex;
  return GridFunction(f.half_width(), f.size(), std::move(values), kind);
}

}  // namespace

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
  return zip(f, g, [](auto a, auto b) { return a + b; });
}

GridFunction operator-(const GridFunction& f, const GridFunction& g) {
  return zip(f, g, [](auto a, auto b) { return a - b; });
}

GridFunction operator*(double c, const GridFunction& f) {
  std::vector<std::complex<double>> values(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) values[k] = c * f.value(k);
  return GridFunction(f.half_width(), f.size(), std::move(values), f.kind());
}

GridFunction operator*(std::complex<double> c, const GridFunction& f) {
  std::vector<std::complex<double>> values(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) values[k] = c * f.value(k);
  return GridFunction(f.half_width(), f.size(), std::move(values), Kind::complex);
}

GridFunction standard_gaussian(double half_width, std::size_t num_points) {
  const double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  return GridFunction::sample(half_width, num_points,
                              [scale](double x) { return scale * std::exp(-0.5 * x * x); });
}

GridFunction triangle_bump(double half_width, std::size_t num_points, double a,
                           double b, double scale) {
  if (!(a < b)) throw std::invalid_argument("triangle_bump: requires a < b");
  const double mid = 0.5 * (a + b);
  const double height = 2.0 / (b - a);  // unit area before scaling
  return GridFunction::sample(half_width, num_points, [=](double x) {
    if (x <= a || x >= b) return 0.0;
    const double rise = x < mid ? (x - a) / (mid - a) : (b - x) / (b - mid);
    return scale * height * rise;
  });
}

GridFunction hat(double half_width, std::size_t num_points, double center,
                 double width, double height) {
  if (!(width > 0)) throw std::invalid_argument("hat: width must be positive");
  return GridFunction::sample(half_width, num_points, [=](double x) {
    const double d = std::abs(x - center);
    return d >= width ? 0.0 : height * (1.0 - d / width);
  });
}

}  // namespace leplab
