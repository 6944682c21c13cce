#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "leplab/battery.hpp"
#include "leplab/lattice.hpp"
#include "leplab/localizer.hpp"

using namespace leplab;

namespace {

const double kL = 20.0;
const std::size_t kN = 2001;

double max_abs_diff(const GridFunction& f, const GridFunction& g) {
  double m = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    m = std::max(m, std::abs(f.value(k) - g.value(k)));
  }
  return m;
}

}  // namespace

TEST_CASE("indicator localizer keeps or kills supports") {
  const Localizer p3(LocalizerKind::indicator, 3);
  const GridFunction inside = hat(kL, kN, 0.0, 2.0);
  CHECK(max_abs_diff(p3.apply(inside), inside) == 0.0);

  const GridFunction outside = hat(kL, kN, 10.0, 2.0);
  CHECK(norm_sup(p3.apply(outside)) == 0.0);
}

TEST_CASE("urysohn profile is the trapezoid ramp") {
  const Localizer q3(LocalizerKind::urysohn, 3);
  const GridFunction profile = q3.profile(kL, kN);
  for (std::size_t k = 0; k < kN; k += 7) {
    const double x = profile.node(k);
    const double expected = std::clamp(3.0 - std::abs(x), 0.0, 1.0);
    CHECK(profile.real_value(k) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(profile.real_value(k) >= 0.0);
    CHECK(profile.real_value(k) <= 1.0);
  }
}

TEST_CASE("window exceeding the grid is rejected") {
  const Localizer p(LocalizerKind::indicator, 25);
  CHECK_THROWS_AS(p.apply(GridFunction::zeros(kL, kN)), std::invalid_argument);
  CHECK_THROWS_AS(Localizer(LocalizerKind::indicator, 0), std::invalid_argument);
}

TEST_CASE("band projection laws are exact on a random battery") {
  const auto battery = make_battery(31, 20, kL, kN);
  for (const auto& report : verify_band_projection_laws(2, 5, battery)) {
    INFO(report.law);
    CHECK(report.pass);
    CHECK(report.max_violation == 0.0);
  }
  // n = m: idempotence degenerate case.
  for (const auto& report : verify_band_projection_laws(4, 4, battery)) {
    INFO(report.law);
    CHECK(report.pass);
  }
  CHECK_THROWS_AS(verify_band_projection_laws(5, 2, battery), std::invalid_argument);
}

TEST_CASE("multipliers are lattice homomorphisms, exactly") {
  const auto battery = make_battery(32, 20, kL, kN);
  for (const auto kind : {LocalizerKind::indicator, LocalizerKind::urysohn}) {
    const Localizer q(kind, 4);
    for (const auto& report : verify_lattice_homomorphism(q, battery)) {
      INFO(report.kind << " " << report.law);
      CHECK(report.pass);
      CHECK(report.max_violation == 0.0);
    }
  }
}

TEST_CASE("monotonicity in the index and positivity") {
  std::mt19937 rng(33);
  const GridFunction f = abs_value(random_smooth(rng, kL, kN));
  for (const auto kind : {LocalizerKind::indicator, LocalizerKind::urysohn}) {
    const Localizer pn(kind, 3);
    const Localizer pm(kind, 9);
    const GridFunction a = pn.apply(f);
    const GridFunction b = pm.apply(f);
    for (std::size_t k = 0; k < f.size(); ++k) {
      CHECK(a.real_value(k) >= 0.0);
      CHECK(a.real_value(k) <= b.real_value(k));
      CHECK(b.real_value(k) <= f.real_value(k));
    }
  }
}

TEST_CASE("urysohn multipliers are not projections") {
  const Localizer q(LocalizerKind::urysohn, 3);
  std::mt19937 rng(34);
  const GridFunction f = abs_value(random_smooth(rng, kL, kN));
  const GridFunction once = q.apply(f);
  const GridFunction twice = q.apply(once);
  bool strict_somewhere = false;
  for (std::size_t k = 0; k < f.size(); ++k) {
    CHECK(twice.real_value(k) <= once.real_value(k));
    strict_somewhere = strict_somewhere || twice.real_value(k) < once.real_value(k);
  }
  CHECK(strict_somewhere);
}

TEST_CASE("strong convergence to the identity") {
  std::vector<int> n_list;
  for (int n = 1; n <= 20; ++n) n_list.push_back(n);

  // Compactly supported data: exact zero once the window covers the support.
  const GridFunction bump = hat(kL, kN, 0.0, 3.0);
  const auto conv_ind = strong_convergence_to_identity(LocalizerKind::indicator, bump, n_list);
  const auto conv_ury = strong_convergence_to_identity(LocalizerKind::urysohn, bump, n_list);
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] >= 3) CHECK(conv_ind[i].error == 0.0);
    if (n_list[i] >= 4) CHECK(conv_ury[i].error == 0.0);
    CHECK(conv_ury[i].error >= conv_ind[i].error);
    if (i > 0) {
      CHECK(conv_ind[i].error <= conv_ind[i - 1].error);
      CHECK(conv_ury[i].error <= conv_ury[i - 1].error);
    }
  }

  // The Gaussian only hits zero when the window reaches the grid edge.
  const GridFunction f0 = standard_gaussian(kL, kN);
  const auto conv_f0 = strong_convergence_to_identity(LocalizerKind::indicator, f0, n_list);
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    CHECK(conv_f0[i].error < conv_f0[i - 1].error);
  }
  CHECK(conv_f0.back().error == 0.0);
}
