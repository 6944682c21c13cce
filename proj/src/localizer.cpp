#include "leplab/localizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "leplab/lattice.hpp"

namespace leplab {

Localizer::Localizer(LocalizerKind kind, int index) : kind_(kind), index_(index) {
  if (index < 1) throw std::invalid_argument("Localizer: index must be >= 1");
}

std::vector<double> Localizer::multiplier(const GridFunction& f) const {
  if (double(index_) > f.half_width()) {
    throw std::invalid_argument("Localizer: window [-" + std::to_string(index_) + ", " +
                                std::to_string(index_) + "] exceeds the grid");
  }
  std::vector<double> m(f.size(), 0.0);
  if (kind_ == LocalizerKind::indicator) {
    const auto [lo, hi] = f.window(double(index_));
    for (std::size_t k = lo; k <= hi; ++k) m[k] = 1.0;
  } else {
    for (std::size_t k = 0; k < f.size(); ++k) {
      m[k] = std::clamp(double(index_) - std::abs(f.node(k)), 0.0, 1.0);
    }
  }
  return m;
}

GridFunction Localizer::apply(const GridFunction& f) const {
  const std::vector<double> m = multiplier(f);
  std::vector<std::complex<double>> values(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) values[k] = m[k] * f.value(k);
  return GridFunction(f.half_width(), f.size(), std::move(values), f.kind());
}

GridFunction Localizer::profile(double half_width, std::size_t num_points) const {
  const GridFunction ones = GridFunction::sample(half_width, num_points,
                                                 [](double) { return 1.0; });
  return apply(ones);
}

namespace {

double max_abs_diff(const GridFunction& f, const GridFunction& g) {
  double m = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    m = std::max(m, std::abs(f.value(k) - g.value(k)));
  }
  return m;
}

LawReport report(std::string kind, int n, std::string law, double violation) {
  return {std::move(kind), n, std::move(law), violation, violation == 0.0};
}

}  // namespace

std::vector<LawReport> verify_band_projection_laws(int n, int m,
                                                   std::span<const GridFunction> battery) {
  if (n > m) throw std::invalid_argument("verify_band_projection_laws: requires n <= m");
  const Localizer pn(LocalizerKind::indicator, n);
  const Localizer pm(LocalizerKind::indicator, m);

  double absorb = 0.0, commute = 0.0, idem = 0.0, order = 0.0, complement = 0.0;
  for (const GridFunction& f : battery) {
    const GridFunction pnf = pn.apply(f);
    const GridFunction pm_pn = pm.apply(pnf);
    const GridFunction pn_pm = pn.apply(pm.apply(f));
    absorb = std::max(absorb, max_abs_diff(pn_pm, pnf));
    commute = std::max(commute, max_abs_diff(pm_pn, pnf));
    idem = std::max(idem, max_abs_diff(pn.apply(pnf), pnf));

    const GridFunction g = abs_value(f);  // a positive test vector
    const GridFunction png = pn.apply(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
      order = std::max(order, std::max(-png.real_value(k),
                                       png.real_value(k) - g.real_value(k)));
    }
    const GridFunction rest = f - pnf;
    const auto [lo, hi] = f.window(double(n));
    for (std::size_t k = lo; k <= hi; ++k) {
      complement = std::max(complement, std::abs(rest.value(k)));
    }
  }
  order = std::max(order, 0.0);
  return {
      report("indicator", n, "P_n P_m = P_n", absorb),
      report("indicator", n, "P_m P_n = P_n", commute),
      report("indicator", n, "P_n P_n = P_n", idem),
      report("indicator", n, "0 <= P_n f <= f for f >= 0", order),
      report("indicator", n, "(I - P_n) f vanishes on the window", complement),
  };
}

std::vector<LawReport> verify_lattice_homomorphism(const Localizer& q,
                                                   std::span<const GridFunction> battery) {
  const std::string kind = q.kind() == LocalizerKind::indicator ? "indicator" : "urysohn";
  double modulus = 0.0, disjoint = 0.0, join = 0.0;
  for (std::size_t i = 0; i < battery.size(); ++i) {
    const GridFunction& f = battery[i];
    modulus = std::max(modulus, max_abs_diff(abs_value(q.apply(f)), q.apply(abs_value(f))));

    // Disjoint positive pair carved out of f: its parts left and right of 0.
    const GridFunction a = abs_value(f);
    std::vector<std::complex<double>> lv(f.size()), rv(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
      const bool neg_side = f.node(k) < 0.0;
      lv[k] = neg_side ? a.value(k) : 0.0;
      rv[k] = neg_side ? 0.0 : a.value(k);
    }
    const GridFunction fl(f.half_width(), f.size(), std::move(lv), Kind::real);
    const GridFunction fr(f.half_width(), f.size(), std::move(rv), Kind::real);
    disjoint = std::max(disjoint, norm_sup(lattice_inf(q.apply(fl), q.apply(fr))));

    const GridFunction& g = battery[(i + 1) % battery.size()];
    join = std::max(join, max_abs_diff(q.apply(lattice_sup(f, g)),
                                       lattice_sup(q.apply(f), q.apply(g))));
  }
  return {
      report(kind, q.index(), "|Qf| = Q|f|", modulus),
      report(kind, q.index(), "f ^ g = 0 => Qf ^ Qg = 0", disjoint),
      report(kind, q.index(), "Q(f v g) = Qf v Qg", join),
  };
}

std::vector<ConvergenceSample> strong_convergence_to_identity(
    LocalizerKind kind, const GridFunction& f, std::span<const int> n_list) {
  std::vector<ConvergenceSample> out;
  out.reserve(n_list.size());
  for (const int n : n_list) {
    const Localizer p(kind, n);
    out.push_back({n, norm_mixed(f - p.apply(f))});
  }
  return out;
}

}  // namespace leplab
