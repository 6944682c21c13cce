#include "leplab/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "leplab/fit.hpp"

namespace leplab {

namespace {

constexpr double kTailTolerance = 1e-12;

void check_params(const WeylParams& p) {
  if (p.alpha == 0.0 || !std::isfinite(p.alpha)) {
    throw std::invalid_argument("weyl: alpha must be nonzero and finite");
  }
  if (p.n < 1) throw std::invalid_argument("weyl: index n must be >= 1");
}

void check_tail(const WeylParams& p, double half_width) {
  const double beta = std::abs(p.alpha);
  const double envelope = std::exp(-beta * half_width * half_width / (2.0 * p.n));
  if (envelope >= kTailTolerance) {
    const double required = std::sqrt(2.0 * p.n * std::log(1.0 / kTailTolerance) / beta);
    throw std::invalid_argument(
        "weyl: grid too narrow for n = " + std::to_string(p.n) +
        "; increase half_width to at least " + std::to_string(required));
  }
}

}  // namespace

double weyl_half_width(const WeylParams& p, double min_half_width) {
  check_params(p);
  return std::max(min_half_width, 8.0 * std::sqrt(double(p.n) / std::abs(p.alpha)));
}

GridFunction weyl_vector(const WeylParams& p, double half_width,
                         std::size_t num_points) {
  check_params(p);
  check_tail(p, half_width);
  const double beta = std::abs(p.alpha);
  const bool conjugate = p.alpha < 0.0;
  const double n = double(p.n);
  const double scale = 1.0 / std::sqrt(n);
  return GridFunction::sample_complex(half_width, num_points, [=](double x) {
    const std::complex<double> lin(1.0, x / n);
    const std::complex<double> expo =
        std::exp(std::complex<double>(-beta * x * x / (2.0 * n), beta * x));
    const std::complex<double> w = scale * lin * expo;
    return conjugate ? std::conj(w) : w;
  });
}

GridFunction weyl_residual(const WeylParams& p, double half_width,
                           std::size_t num_points) {
  check_params(p);
  check_tail(p, half_width);
  const double beta = std::abs(p.alpha);
  const bool conjugate = p.alpha < 0.0;
  const double n = double(p.n);
  const double scale = 1.0 / (n * std::sqrt(n));
  return GridFunction::sample_complex(half_width, num_points, [=](double x) {
    const std::complex<double> expo =
        std::exp(std::complex<double>(-beta * x * x / (2.0 * n), beta * x));
    const std::complex<double> lin(-beta * x, 1.0 - beta * x * x / n);
    const std::complex<double> r = scale * lin * expo;
    return conjugate ? std::conj(r) : r;
  });
}

WeylDecayFit weyl_decay_fit(double alpha, std::span<const int> n_list,
                            double h_target, double min_half_width) {
  if (n_list.size() < 3) {
    throw std::invalid_argument("weyl_decay_fit: need at least 3 indices");
  }
  if (!(h_target > 0)) throw std::invalid_argument("weyl_decay_fit: h_target must be positive");

  std::vector<int> ns(n_list.begin(), n_list.end());
  std::sort(ns.begin(), ns.end());

  WeylDecayFit fit;
  std::vector<double> xs, r_l1, r_sup, r_e, w_sup;
  for (const int n : ns) {
    const WeylParams p{alpha, n};
    const double half_width = weyl_half_width(p, min_half_width);
    std::size_t num_points = std::size_t(std::ceil(2.0 * half_width / h_target)) + 1;
    if (num_points % 2 == 0) ++num_points;
    const GridFunction w = weyl_vector(p, half_width, num_points);
    const GridFunction r = weyl_residual(p, half_width, num_points);
    WeylSample s;
    s.n = n;
    s.w = norms(w);
    s.residual = norms(r);
    s.integral_abs = std::abs(trapezoid_integral(w));
    fit.samples.push_back(s);
    xs.push_back(double(n));
    r_l1.push_back(s.residual.l1);
    r_sup.push_back(s.residual.sup);
    r_e.push_back(s.residual.mixed);
    w_sup.push_back(s.w.sup);
  }
  fit.slope_l1 = loglog_slope(xs, r_l1);
  fit.slope_sup = loglog_slope(xs, r_sup);
  fit.slope_e = loglog_slope(xs, r_e);
  fit.slope_w_sup = loglog_slope(xs, w_sup);
  return fit;
}

}  // namespace leplab
