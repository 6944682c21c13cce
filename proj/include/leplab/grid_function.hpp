#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace leplab {

enum class Kind { real, complex };

/// Uniform-grid sample of a function on [-L, L].
///
/// Nodes are x_k = -L + k*h with h = 2L/(N-1); N is odd so that x = 0 is a
/// node. Functions are treated as identically zero outside [-L, L], which is
/// the discrete stand-in for decay at infinity. Real-kind functions carry
/// exactly zero imaginary parts; lattice operations are defined only for
/// real kind. Values are immutable after construction.
class GridFunction {
public:
  GridFunction(double half_width, std::size_t num_points,
               std::vector<std::complex<double>> values, Kind kind);

  static GridFunction zeros(double half_width, std::size_t num_points,
                            Kind kind = Kind::real);
  static GridFunction sample(double half_width, std::size_t num_points,
                             const std::function<double(double)>& f);
  static GridFunction sample_complex(
      double half_width, std::size_t num_points,
      const std::function<std::complex<double>(double)>& f);

  double half_width() const { return half_width_; }
  std::size_t size() const { return values_.size(); }
  double step() const { return step_; }

  /// x_k, evaluated by distance from the center node so that x_0 = -L,
  /// x_{N-1} = L, the center is exactly 0, and x_k = -x_{N-1-k} bitwise.
  static double node_of(double half_width, std::size_t num_points, std::size_t k) {
    const std::size_t center = (num_points - 1) / 2;
    if (k == center) return 0.0;
    const double offset =
        half_width * (2.0 * double(k > center ? k - center : center - k) /
                      double(num_points - 1));
    return k > center ? offset : -offset;
  }

  double node(std::size_t k) const { return node_of(half_width_, values_.size(), k); }
  Kind kind() const { return kind_; }
  bool is_real() const { return kind_ == Kind::real; }

  const std::vector<std::complex<double>>& values() const { return values_; }
  std::complex<double> value(std::size_t k) const { return values_[k]; }
  double real_value(std::size_t k) const { return values_[k].real(); }

  bool same_grid(const GridFunction& other) const;

  /// Largest boundary magnitude max(|f(-L)|, |f(L)|); experiments use this
  /// to confirm the truncation window is wide enough.
  double boundary_tail() const;

  /// Index range [first, last] of nodes with |x_k| <= radius (the comparison
  /// snaps to nodes so that integer radii on aligned grids are exact).
  std::pair<std::size_t, std::size_t> window(double radius) const;

  GridFunction as_complex() const;

private:
  double half_width_;
  double step_;
  Kind kind_;
  std::vector<std::complex<double>> values_;
};

GridFunction operator+(const GridFunction& f, const GridFunction& g);
GridFunction operator-(const GridFunction& f, const GridFunction& g);
GridFunction operator*(double c, const GridFunction& f);
GridFunction operator*(std::complex<double> c, const GridFunction& f);

/// Standard Gaussian (2*pi)^{-1/2} exp(-x^2/2).
GridFunction standard_gaussian(double half_width, std::size_t num_points);

/// Piecewise-linear bump supported on [a, b] with unit integral, scaled.
GridFunction triangle_bump(double half_width, std::size_t num_points, double a,
                           double b, double scale = 1.0);

/// Hat of height `height` supported on [center - width, center + width].
GridFunction hat(double half_width, std::size_t num_points, double center,
                 double width, double height = 1.0);

}  // namespace leplab
