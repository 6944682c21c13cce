#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "leplab/fft.hpp"
#include "leplab/lattice.hpp"
#include "leplab/polyharmonic.hpp"

using namespace leplab;

namespace {

double max_abs_diff(const GridFunction& f, const GridFunction& g) {
  double m = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    m = std::max(m, std::abs(f.value(k) - g.value(k)));
  }
  return m;
}

FlowParams box(double alpha, double half_width, std::size_t modes) {
  FlowParams p;
  p.alpha = alpha;
  p.box_half_width = half_width;
  p.num_modes = modes;
  return p;
}

}  // namespace

TEST_CASE("fft round trip and delta spectrum") {
  const Radix2Fft fft(256);
  std::vector<std::complex<double>> a(256);
  for (std::size_t j = 0; j < a.size(); ++j) {
    a[j] = {std::sin(0.1 * double(j)), std::cos(0.23 * double(j))};
  }
  auto b = a;
  fft.forward(b);
  fft.inverse(b);
  double err = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) err = std::max(err, std::abs(a[j] - b[j]));
  CHECK(err <= 1e-13);

  std::vector<std::complex<double>> delta(256, 0.0);
  delta[0] = 1.0;
  fft.forward(delta);
  for (std::size_t k = 0; k < 256; k += 31) {
    CHECK(std::abs(delta[k] - std::complex<double>(1.0)) <= 1e-14);
  }

  CHECK_THROWS_AS(Radix2Fft(100), std::invalid_argument);
  CHECK_THROWS_AS(Radix2Fft(1), std::invalid_argument);
}

TEST_CASE("flow parameter validation") {
  CHECK_THROWS_AS(PolyharmonicFlow(box(0.5, 40.0, 4096)), std::invalid_argument);
  CHECK_THROWS_AS(PolyharmonicFlow(box(2.0, 40.0, 4095)), std::invalid_argument);
  CHECK_THROWS_AS(PolyharmonicFlow(box(2.0, -1.0, 4096)), std::invalid_argument);
  FlowParams two_d = box(2.0, 40.0, 4096);
  two_d.dim = 2;
  CHECK_THROWS_WITH_AS((PolyharmonicFlow(two_d)), doctest::Contains("not supported"),
                       std::invalid_argument);
}

TEST_CASE("t = 0 is the identity") {
  const PolyharmonicFlow flow(box(2.0, 40.0, 4096));
  const GridFunction u0 = hat(40.0, 4097, 0.0, 1.0);
  CHECK(max_abs_diff(flow.evolve(u0, 0.0), u0) == 0.0);
}

TEST_CASE("pure Fourier modes are eigenvectors") {
  for (const double alpha : {1.0, 2.0}) {
    const PolyharmonicFlow flow(box(alpha, 40.0, 4096));
    const double xi = std::numbers::pi * 3.0 / 40.0;
    const GridFunction mode = GridFunction::sample(
        40.0, 4097, [xi](double x) { return std::cos(xi * x); });
    const double t = 1.7;
    const GridFunction u = flow.evolve(mode, t);
    const double gain = std::exp(-t * std::pow(xi, 2 * alpha));
    CHECK(max_abs_diff(u, gain * mode) <= 1e-12);
  }
}

TEST_CASE("heat kernel matches the closed form") {
  const PolyharmonicFlow flow(box(1.0, 40.0, 4096));
  for (const double t : {0.5, 2.0}) {
    const GridFunction k = flow.kernel(t);
    const GridFunction exact = GridFunction::sample(40.0, 4097, [t](double x) {
      return std::exp(-x * x / (4 * t)) / std::sqrt(4 * std::numbers::pi * t);
    });
    CHECK(max_abs_diff(k, exact) <= 1e-8);
    CHECK(std::abs(trapezoid_integral(k).real() - 1.0) <= 1e-8);
  }
}

TEST_CASE("kernel mass is one for every exponent") {
  for (const double alpha : {1.0, 1.5, 2.0, 3.0}) {
    const PolyharmonicFlow flow(box(alpha, 40.0, 4096));
    for (const double t : {0.5, 1.0, 2.0}) {
      CHECK(std::abs(trapezoid_integral(flow.kernel(t)).real() - 1.0) <= 1e-8);
    }
  }
}

TEST_CASE("biharmonic kernel is sign changing; heat kernel is not") {
  const PolyharmonicFlow bi(box(2.0, 40.0, 4096));
  const GridFunction k2 = bi.kernel(1.0);
  double min2 = 0.0;
  for (std::size_t j = 0; j < k2.size(); ++j) min2 = std::min(min2, k2.real_value(j));
  CHECK(min2 < -1e-4);

  const PolyharmonicFlow heat(box(1.0, 40.0, 4096));
  const GridFunction k1 = heat.kernel(1.0);
  double min1 = 0.0;
  for (std::size_t j = 0; j < k1.size(); ++j) min1 = std::min(min1, k1.real_value(j));
  CHECK(min1 >= -1e-12);
}

TEST_CASE("heat flow preserves positivity; biharmonic flow does not") {
  const GridFunction u0 = hat(40.0, 4097, 0.0, 0.5);

  const PolyharmonicFlow heat(box(1.0, 40.0, 4096));
  double heat_min = 0.0;
  for (const double t : {0.1, 1.0, 5.0}) {
    const GridFunction u = heat.evolve(u0, t);
    for (std::size_t j = 0; j < u.size(); ++j) heat_min = std::min(heat_min, u.real_value(j));
  }
  CHECK(heat_min >= -1e-10);

  const PolyharmonicFlow bi(box(2.0, 40.0, 4096));
  const GridFunction u = bi.evolve(u0, 1.0);
  double bi_min = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) bi_min = std::min(bi_min, u.real_value(j));
  CHECK(bi_min < 0.0);
}

TEST_CASE("mass conservation and l2 contraction") {
  const PolyharmonicFlow flow(box(2.0, 40.0, 4096));
  const GridFunction u0 = hat(40.0, 4097, 1.0, 2.0, 0.7);
  const double mass0 = trapezoid_integral(u0).real();
  double prev_l2 = norm_l2(u0);
  for (const double t : {0.25, 1.0, 4.0}) {
    const GridFunction u = flow.evolve(u0, t);
    CHECK(std::abs(trapezoid_integral(u).real() - mass0) <= 1e-8);
    const double l2 = norm_l2(u);
    CHECK(l2 <= prev_l2 + 1e-12);
    prev_l2 = l2;
  }
}

TEST_CASE("semigroup law in spectral space") {
  const PolyharmonicFlow flow(box(2.0, 40.0, 4096));
  const GridFunction u0 = hat(40.0, 4097, 0.0, 1.5);
  const GridFunction a = flow.evolve(flow.evolve(u0, 0.7), 1.9);
  const GridFunction b = flow.evolve(u0, 2.6);
  CHECK(max_abs_diff(a, b) <= 1e-10);
}

TEST_CASE("real data stays real; the raw imaginary residue is tiny") {
  const PolyharmonicFlow flow(box(2.0, 40.0, 4096));
  const GridFunction u0 = hat(40.0, 4097, 0.0, 1.0);
  CHECK(flow.evolve(u0, 1.0).is_real());

  const GridFunction u = flow.evolve(u0.as_complex(), 1.0);
  double residue = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    residue = std::max(residue, std::abs(u.value(j).imag()));
  }
  CHECK(residue <= 1e-12);
}

TEST_CASE("the heat flow is positive on the window from the first sample") {
  const PolyharmonicFlow heat(box(1.0, 40.0, 4096));
  const GridFunction u0 = hat(40.0, 4097, 0.0, 1.0);
  const std::vector<double> t_grid = {0.5, 1.0, 2.0, 4.0, 8.0};
  const auto tau = heat.lep_onset(u0, 5.0, t_grid);
  REQUIRE(tau.has_value());
  CHECK(*tau == 0.5);
}

TEST_CASE("onset of local positivity for the biharmonic flow") {
  const PolyharmonicFlow flow(box(2.0, 160.0, 1 << 14));
  const GridFunction u0 = hat(160.0, (1 << 14) + 1, 0.0, 1.0);
  std::vector<double> t_grid;
  for (double t = 0.5; t <= 500.0; t += 0.5) t_grid.push_back(t);

  const auto tau5 = flow.lep_onset(u0, 5.0, t_grid);
  REQUIRE(tau5.has_value());
  CHECK(*tau5 > 0.5);
  CHECK(*tau5 < 100.0);

  const auto tau10 = flow.lep_onset(u0, 10.0, t_grid);
  REQUIRE(tau10.has_value());
  CHECK(*tau10 >= *tau5);

  CHECK_THROWS_AS(flow.lep_onset(-1.0 * u0, 5.0, t_grid), std::invalid_argument);
  CHECK_THROWS_AS(flow.lep_onset(u0, 100.0, t_grid), std::invalid_argument);
}

TEST_CASE("sup-norm decay exponents") {
  const GridFunction u0 = hat(160.0, (1 << 14) + 1, 0.0, 1.0);

  const PolyharmonicFlow bi(box(2.0, 160.0, 1 << 14));
  std::vector<double> t_bi;
  for (int i = 0; i < 12; ++i) t_bi.push_back(10.0 * std::pow(100.0, i / 11.0));
  CHECK(std::abs(bi.decay_slope(u0, t_bi).slope + 0.25) <= 0.05);

  const PolyharmonicFlow heat(box(1.0, 160.0, 1 << 14));
  std::vector<double> t_heat;
  for (int i = 0; i < 12; ++i) t_heat.push_back(2.0 * std::pow(100.0, i / 11.0));
  CHECK(std::abs(heat.decay_slope(u0, t_heat).slope + 0.5) <= 0.05);
}

TEST_CASE("wrap-around and resolution guards") {
  const PolyharmonicFlow small(box(1.0, 10.0, 1024));
  const GridFunction u0 = hat(10.0, 1025, 0.0, 0.5);
  CHECK_THROWS_WITH_AS(small.evolve(u0, 100.0), doctest::Contains("wrap-around"),
                       std::runtime_error);

  CHECK_THROWS_WITH_AS(small.kernel(1e-12), doctest::Contains("too coarse"),
                       std::invalid_argument);

  // Data that are incompatible with the periodic box are rejected up front.
  const GridFunction ramp = GridFunction::sample(10.0, 1025, [](double x) { return x; });
  CHECK_THROWS_AS(small.evolve(ramp, 1.0), std::invalid_argument);

  // Wrong grid entirely.
  CHECK_THROWS_AS(small.evolve(hat(10.0, 513, 0.0, 0.5), 1.0), std::invalid_argument);
}
