#include "leplab/polyharmonic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "leplab/fit.hpp"
#include "leplab/lattice.hpp"

namespace leplab {

namespace {

constexpr double kKernelResolutionTol = 1e-6;
constexpr double kRealityTol = 1e-12;

}  // namespace

PolyharmonicFlow::PolyharmonicFlow(FlowParams params) : params_(params) {
  if (!(params_.alpha >= 1.0)) {
    throw std::invalid_argument("PolyharmonicFlow: alpha must be >= 1");
  }
  if (params_.dim != 1) {
    throw std::invalid_argument(
        "PolyharmonicFlow: dim = " + std::to_string(params_.dim) +
        " is not supported in this build (only dim = 1)");
  }
  if (!(params_.box_half_width > 0)) {
    throw std::invalid_argument("PolyharmonicFlow: box_half_width must be positive");
  }
  const std::size_t m = params_.num_modes;
  if (m < 4 || (m & (m - 1)) != 0) {
    throw std::invalid_argument("PolyharmonicFlow: num_modes must be a power of two >= 4");
  }
  if (!(params_.wrap_tolerance > 0)) {
    throw std::invalid_argument("PolyharmonicFlow: wrap_tolerance must be positive");
  }
  fft_ = std::make_shared<const Radix2Fft>(m);
  symbol_.resize(m);
  const double base = std::numbers::pi / params_.box_half_width;
  for (std::size_t k = 0; k < m; ++k) {
    const double s = (k <= m / 2 - 1) ? double(k) : double(k) - double(m);
    symbol_[k] = std::pow(std::abs(s) * base, 2.0 * params_.alpha);
  }

  if (params_.alpha == 1.0) {
    kernel_l1_bound_ = 1.0;  // the heat kernel is positive with unit mass
  } else {
    // ||K_t||_1 is t-independent by self-similar scaling; evaluate at a time
    // the grid resolves, with a margin for box truncation.
    const double t_ref = std::max(1.0, std::log(1.0 / kKernelResolutionTol) /
                                           symbol_[m / 2]);
    kernel_l1_bound_ = 1.25 * norm_l1(kernel(t_ref));
  }
}

void PolyharmonicFlow::check_grid(const GridFunction& u0) const {
  if (u0.size() != grid_points() || u0.half_width() != params_.box_half_width) {
    throw std::invalid_argument("PolyharmonicFlow: function is not on the box grid");
  }
  const double scale = std::max(1.0, norm_sup(u0));
  if (std::abs(u0.value(u0.size() - 1) - u0.value(0)) > params_.wrap_tolerance * scale) {
    throw std::invalid_argument(
        "PolyharmonicFlow: datum is not compatible with the periodic box "
        "(boundary values differ); enlarge box_half_width");
  }
}

GridFunction PolyharmonicFlow::assemble(std::vector<std::complex<double>> modes,
                                        double t, Kind kind, double scale,
                                        double boundary_allowance) const {
  const std::size_t m = params_.num_modes;
  for (std::size_t k = 0; k < m; ++k) {
    modes[k] *= std::exp(-t * symbol_[k]);
  }
  fft_->inverse(modes);

  std::vector<std::complex<double>> values(m + 1);
  for (std::size_t k = 0; k < m; ++k) values[k] = modes[k];
  values[m] = modes[0];

  // Periodic images contaminate the whole-line solution at the boundary
  // first, so growth of the boundary value beyond the datum's own boundary
  // magnitude is the wrap-around detector. Data that are genuinely periodic
  // (e.g. Fourier modes) keep their boundary magnitude and pass.
  const double boundary = std::abs(values[0]);
  if (boundary > boundary_allowance + params_.wrap_tolerance * scale) {
    throw std::runtime_error(
        "PolyharmonicFlow: wrap-around budget exceeded at t = " + std::to_string(t) +
        " (boundary magnitude " + std::to_string(boundary) +
        "); enlarge box_half_width");
  }

  if (kind == Kind::real) {
    for (auto& v : values) {
      if (std::abs(v.imag()) > kRealityTol * scale) {
        throw std::runtime_error(
            "PolyharmonicFlow: imaginary residue exceeds tolerance; spectrum lost "
            "conjugate symmetry");
      }
      v = std::complex<double>(v.real(), 0.0);
    }
  }
  return GridFunction(params_.box_half_width, m + 1, std::move(values), kind);
}

PolyharmonicFlow::Orbit::Orbit(const PolyharmonicFlow& flow, const GridFunction& u0)
    : flow_(flow), kind_(u0.kind()) {
  flow_.check_grid(u0);
  scale_ = std::max(1.0, norm_mixed(u0));
  boundary0_ = u0.boundary_tail();
  spectrum_.assign(u0.values().begin(), u0.values().end() - 1);
  flow_.fft_->forward(spectrum_);
}

GridFunction PolyharmonicFlow::Orbit::at(double t) const {
  if (!(t >= 0)) throw std::invalid_argument("PolyharmonicFlow: time must be nonnegative");
  return flow_.assemble(spectrum_, t, kind_, scale_, boundary0_);
}

GridFunction PolyharmonicFlow::evolve(const GridFunction& u0, double t) const {
  if (!(t >= 0)) throw std::invalid_argument("PolyharmonicFlow: time must be nonnegative");
  if (t == 0.0) {
    check_grid(u0);
    return u0;  // multiplier is identically 1
  }
  return Orbit(*this, u0).at(t);
}

GridFunction PolyharmonicFlow::kernel(double t) const {
  if (!(t > 0)) throw std::invalid_argument("PolyharmonicFlow::kernel: t must be positive");
  const std::size_t m = params_.num_modes;
  if (std::exp(-t * symbol_[m / 2]) > kKernelResolutionTol) {
    throw std::invalid_argument(
        "PolyharmonicFlow::kernel: grid too coarse to resolve the kernel at t = " +
        std::to_string(t) + "; increase num_modes");
  }
  // Fundamental solution: K(x_j) = (1/2L) sum_k m_k exp(i xi_k x_j); the
  // (-1)^k factor carries the e^{-i xi_k L} phase of the box origin.
  std::vector<std::complex<double>> modes(m);
  const double amp = double(m) / (2.0 * params_.box_half_width);
  for (std::size_t k = 0; k < m; ++k) {
    modes[k] = (k % 2 == 0) ? amp : -amp;
  }
  // No boundary budget: the kernel may legitimately fill the box.
  return assemble(std::move(modes), t, Kind::real, 1.0,
                  std::numeric_limits<double>::infinity());
}

std::optional<double> PolyharmonicFlow::lep_onset(const GridFunction& u0,
                                                  double k_radius,
                                                  std::span<const double> t_grid) const {
  check_positive_datum(u0, "PolyharmonicFlow::lep_onset");
  if (!(k_radius > 0) || k_radius >= params_.box_half_width / 2) {
    throw std::invalid_argument(
        "PolyharmonicFlow::lep_onset: window radius must lie in (0, box_half_width/2)");
  }
  if (t_grid.empty()) {
    throw std::invalid_argument("PolyharmonicFlow::lep_onset: empty time grid");
  }
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw std::invalid_argument("PolyharmonicFlow::lep_onset: time grid must be increasing");
    }
  }
  const Orbit orbit(*this, u0);
  long last_failure = -1;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (min_on_window(orbit.at(t_grid[i]), k_radius) <= 0.0) last_failure = long(i);
  }
  if (last_failure == long(t_grid.size()) - 1) return std::nullopt;
  return t_grid[std::size_t(last_failure + 1)];
}

PolyharmonicFlow::DecayFit PolyharmonicFlow::decay_slope(
    const GridFunction& u0, std::span<const double> t_list) const {
  const Orbit orbit(*this, u0);
  DecayFit fit;
  std::vector<double> ts, sups;
  for (const double t : t_list) {
    if (!(t > 0)) throw std::invalid_argument("decay_slope: times must be positive");
    const GridFunction u = orbit.at(t);
    DecaySample s;
    s.t = t;
    s.sup = norm_sup(u);
    s.l1 = norm_l1(u);
    s.mass = trapezoid_integral(u).real();
    fit.samples.push_back(s);
    ts.push_back(t);
    sups.push_back(s.sup);
  }
  fit.slope = loglog_slope(ts, sups);
  return fit;
}

}  // namespace leplab
