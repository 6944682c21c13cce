#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "leplab/battery.hpp"
#include "leplab/example_semigroup.hpp"
#include "leplab/lattice.hpp"
#include "leplab/weyl.hpp"

using namespace leplab;

namespace {

double max_abs_diff(const GridFunction& f, const GridFunction& g) {
  double m = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    m = std::max(m, std::abs(f.value(k) - g.value(k)));
  }
  return m;
}

const double kL = 20.0;
const std::size_t kN = 4001;

ExampleSemigroup make_sg() { return ExampleSemigroup::with_gaussian_profile(kL, kN); }

}  // namespace

TEST_CASE("profile validation") {
  CHECK_NOTHROW(make_sg());
  // Not strictly positive at the boundary.
  CHECK_THROWS_AS(ExampleSemigroup(hat(kL, kN, 0.0, 2.0, 1.0)), std::invalid_argument);
  // Integral 2, not 1.
  CHECK_THROWS_AS(ExampleSemigroup(GridFunction::sample(
                      kL, kN,
                      [](double x) {
                        return std::sqrt(2 / std::numbers::pi) * std::exp(-0.5 * x * x) +
                               1e-30;
                      })),
                  std::invalid_argument);
}

TEST_CASE("mass functional examples") {
  const ExampleSemigroup sg = make_sg();
  CHECK(std::abs(trapezoid_integral(sg.profile()).real() - 1.0) <= 1e-8);
  CHECK(trapezoid_integral(GridFunction::zeros(kL, kN)) == std::complex<double>(0.0));

  const GridFunction w4 = weyl_vector({1.0, 4}, kL, kN);
  CHECK(std::abs(trapezoid_integral(w4)) <= 1e-8);
}

TEST_CASE("the profile is a fixed point") {
  const ExampleSemigroup sg = make_sg();
  for (const double t : {0.0, 0.5, 3.0, 17.5, 50.0}) {
    CHECK(norm_mixed(sg.apply(sg.profile(), t) - sg.profile()) <= 1e-8);
  }
}

TEST_CASE("zero-mass data translate") {
  const ExampleSemigroup sg = make_sg();
  const GridFunction f = hat(kL, kN, -2.0, 1.0) - hat(kL, kN, 2.0, 1.0);
  CHECK(std::abs(trapezoid_integral(f)) <= 1e-14);
  CHECK(max_abs_diff(sg.apply(f, 2.0), translate(f, 2.0)) <= 1e-12);
}

TEST_CASE("apply agrees with a direct formula evaluation") {
  const ExampleSemigroup sg = make_sg();
  const GridFunction f = triangle_bump(kL, kN, 1.0, 2.0);
  const double t = 15.0;
  const GridFunction u = sg.apply(f, t);

  const double c = trapezoid_integral(f).real();
  const auto [lo, hi] = f.window(0.0);
  REQUIRE(lo == hi);  // x = 0 is a node
  const std::size_t center = lo;
  const double gauss0 = sg.profile().real_value(center);
  // x = 0, so f(x + t) = f(15) = 0 and f0(x + t) = f0(15).
  const std::size_t at15 = center + std::size_t(std::llround(t / f.step()));
  const double expected = c * gauss0 + (0.0 - c * sg.profile().real_value(at15));
  CHECK(std::abs(u.real_value(center) - expected) <= 1e-9);
}

TEST_CASE("apply keeps real data real and rejects bad input") {
  const ExampleSemigroup sg = make_sg();
  const GridFunction f = triangle_bump(kL, kN, 1.0, 2.0);
  CHECK(sg.apply(f, 1.7).is_real());
  CHECK_THROWS_AS(sg.apply(f, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(sg.apply(GridFunction::zeros(kL, 101), 1.0), std::invalid_argument);
}

TEST_CASE("semigroup law for grid-aligned times") {
  const ExampleSemigroup sg = make_sg();
  std::mt19937 rng(21);
  for (int i = 0; i < 5; ++i) {
    const GridFunction f = random_smooth(rng, kL, kN);
    const GridFunction a = sg.apply(sg.apply(f, 2.5), 4.0);
    const GridFunction b = sg.apply(f, 6.5);
    CHECK(norm_mixed(a - b) <= 1e-8);
  }
}

TEST_CASE("uniform bound 3||f||") {
  const ExampleSemigroup sg = make_sg();
  std::mt19937 rng(22);
  for (int i = 0; i < 10; ++i) {
    const GridFunction f = random_smooth(rng, kL, kN);
    const double bound = 3.0 * norm_mixed(f) + 1e-8;
    for (double t = 0.0; t <= 50.0; t += 2.5) {
      CHECK(norm_mixed(sg.apply(f, t)) <= bound);
    }
  }
}

TEST_CASE("time to positivity") {
  const ExampleSemigroup sg = make_sg();
  std::vector<double> t_grid;
  for (double t = 0.0; t <= 40.0; t += 0.1) t_grid.push_back(t);

  // The profile is already strictly positive.
  const auto tau0 = sg.time_to_positivity(sg.profile(), 5.0, t_grid);
  REQUIRE(tau0.has_value());
  CHECK(*tau0 == 0.0);

  // A bump becomes positive on [-5, 5] no later than 2R + step.
  const GridFunction f = triangle_bump(kL, kN, 1.0, 2.0);
  const auto tau = sg.time_to_positivity(f, 5.0, t_grid);
  REQUIRE(tau.has_value());
  CHECK(*tau <= 10.1 + 1e-9);

  // Direct check at t = 2R + 1.
  CHECK(min_on_window(sg.apply(f, 11.0), 5.0) > 0.0);

  CHECK_THROWS_AS(sg.time_to_positivity(-1.0 * f, 5.0, t_grid), std::invalid_argument);
  CHECK_THROWS_AS(sg.time_to_positivity(GridFunction::zeros(kL, kN), 5.0, t_grid),
                  std::invalid_argument);
}

TEST_CASE("uniform onset bound brackets 2R for the Gaussian profile") {
  const ExampleSemigroup sg = make_sg();
  const double b5 = sg.uniform_onset_bound(5.0, 0.01, 22.0);
  CHECK(b5 > 10.0);
  CHECK(b5 <= 10.01 + 1e-9);

  const double b_half = sg.uniform_onset_bound(0.5, 0.01, 4.0);
  CHECK(b_half > 1.0);
  CHECK(b_half <= 1.01 + 1e-9);

  // Monotone in R on a sampled set.
  const double b1 = sg.uniform_onset_bound(1.0, 0.01, 6.0);
  const double b3 = sg.uniform_onset_bound(3.0, 0.01, 14.0);
  CHECK(b_half <= b1);
  CHECK(b1 <= b3);
  CHECK(b3 <= b5);
}

TEST_CASE("no global eventual positivity") {
  const ExampleSemigroup sg = make_sg();
  const GridFunction f = triangle_bump(kL, kN, 1.0, 2.0);
  const GridFunction u = sg.apply(f, 11.0);
  double outside_min = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (std::abs(u.node(k)) > 5.0) outside_min = std::min(outside_min, u.real_value(k));
  }
  CHECK(outside_min < 0.0);
}

TEST_CASE("orbit distances plateau at the noncompactness constant") {
  const ExampleSemigroup sg = ExampleSemigroup::with_gaussian_profile(250.0, 25001);
  const GridFunction f = triangle_bump(250.0, 25001, 1.0, 2.0, 2.0);
  const double plateau = sg.noncompactness_plateau(f);
  CHECK(plateau > 1.0);  // most of the 2 f0 mass lies outside the bump

  std::vector<double> t_grid;
  for (double t = 20.0; t <= 200.0; t += 20.0) t_grid.push_back(t);
  for (const auto& [t, dist] : sg.orbit_cone_distances(f, t_grid)) {
    CHECK(dist == doctest::Approx(plateau).epsilon(0.05));
    CHECK(dist >= 0.5 * plateau);
  }

  // The fixed point never leaves the cone.
  for (const auto& [t, dist] : sg.orbit_cone_distances(sg.profile(), t_grid)) {
    CHECK(dist <= 1e-12);
  }

  // Degenerate datum: the zero function has zero distance at every time.
  for (const auto& [t, dist] :
       sg.orbit_cone_distances(GridFunction::zeros(250.0, 25001), t_grid)) {
    CHECK(dist == 0.0);
  }
}

TEST_CASE("time grids must be increasing") {
  const ExampleSemigroup sg = make_sg();
  const GridFunction f = triangle_bump(kL, kN, 1.0, 2.0);
  const std::vector<double> bad = {0.0, 1.0, 0.5};
  CHECK_THROWS_AS(sg.time_to_positivity(f, 5.0, bad), std::invalid_argument);
}
