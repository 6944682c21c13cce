#include "leplab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leplab {

namespace {

void require_real(const GridFunction& f, const char* op) {
  if (!f.is_real()) {
    throw std::invalid_argument(std::string(op) +
                                ": lattice operations are defined on real kind only");
  }
}

void require_same_grid(const GridFunction& f, const GridFunction& g, const char* op) {
  if (!f.same_grid(g)) {
    throw std::invalid_argument(std::string(op) + ": incompatible discretizations");
  }
}

GridFunction map_real(const GridFunction& f, double (*op)(double)) {
  std::vector<std::complex<double>> values(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) values[k] = op(f.real_value(k));
  return GridFunction(f.half_width(), f.size(), std::move(values), Kind::real);
}

}  // namespace

std::complex<double> trapezoid_integral(const GridFunction& f) {
  std::complex<double> sum = 0.5 * (f.value(0) + f.value(f.size() - 1));
  for (std::size_t k = 1; k + 1 < f.size(); ++k) sum += f.value(k);
  return f.step() * sum;
}

double norm_l1(const GridFunction& f) {
  const std::size_t n = f.size();
  double sum = 0.5 * (std::abs(f.value(0)) + std::abs(f.value(n - 1)));
  for (std::size_t k = 1; k + 1 < n; ++k) sum += std::abs(f.value(k));
  return f.step() * sum;
}

double norm_sup(const GridFunction& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double norm_l2(const GridFunction& f) {
  const std::size_t n = f.size();
  double sum = 0.5 * (std::norm(f.value(0)) + std::norm(f.value(n - 1)));
  for (std::size_t k = 1; k + 1 < n; ++k) sum += std::norm(f.value(k));
  return std::sqrt(f.step() * sum);
}

NormReport norms(const GridFunction& f) {
  NormReport r;
  r.l1 = norm_l1(f);
  r.sup = norm_sup(f);
  r.mixed = std::max(r.l1, r.sup);
  return r;
}

double norm_mixed(const GridFunction& f) { return norms(f).mixed; }

GridFunction pos_part(const GridFunction& f) {
  require_real(f, "pos_part");
  return map_real(f, +[](double v) { return std::max(v, 0.0); });
}

GridFunction neg_part(const GridFunction& f) {
  require_real(f, "neg_part");
  return map_real(f, +[](double v) { return std::max(-v, 0.0); });
}

GridFunction abs_value(const GridFunction& f) {
  require_real(f, "abs_value");
  return map_real(f, +[](double v) { return std::abs(v); });
}

GridFunction lattice_inf(const GridFunction& f, const GridFunction& g) {
  require_real(f, "lattice_inf");
  require_real(g, "lattice_inf");
  require_same_grid(f, g, "lattice_inf");
  std::vector<std::complex<double>> values(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    values[k] = std::min(f.real_value(k), g.real_value(k));
  }
  return GridFunction(f.half_width(), f.size(), std::move(values), Kind::real);
}

GridFunction lattice_sup(const GridFunction& f, const GridFunction& g) {
  require_real(f, "lattice_sup");
  require_real(g, "lattice_sup");
  require_same_grid(f, g, "lattice_sup");
  std::vector<std::complex<double>> values(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    values[k] = std::max(f.real_value(k), g.real_value(k));
  }
  return GridFunction(f.half_width(), f.size(), std::move(values), Kind::real);
}

LatticeParts lattice_parts(const GridFunction& f) {
  return {pos_part(f), neg_part(f), abs_value(f)};
}

double dist_to_positive_cone(const GridFunction& f) {
  return norm_mixed(neg_part(f));
}

GridFunction translate(const GridFunction& f, double t) {
  const std::size_t n = f.size();
  const double shift = t / f.step();
  double base = std::floor(shift);
  double theta = shift - base;
  const double snap = 1e-9;
  if (theta < snap) {
    theta = 0.0;
  } else if (theta > 1.0 - snap) {
    base += 1.0;
    theta = 0.0;
  }
  const long offset = long(base);

  std::vector<std::complex<double>> values(n);
  const auto at = [&](long j) -> std::complex<double> {
    return (j < 0 || j >= long(n)) ? 0.0 : f.value(std::size_t(j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    const long j = long(k) + offset;
    if (theta == 0.0) {
      values[k] = at(j);
    } else if (j < 0 || j + 1 >= long(n)) {
      values[k] = 0.0;  // any part of the stencil outside [-L, L] reads zero
    } else {
      values[k] = (1.0 - theta) * f.value(std::size_t(j)) +
                  theta * f.value(std::size_t(j + 1));
    }
  }
  return GridFunction(f.half_width(), n, std::move(values), f.kind());
}

double min_on_window(const GridFunction& f, double radius) {
  require_real(f, "min_on_window");
  const auto [lo, hi] = f.window(radius);
  double m = f.real_value(lo);
  for (std::size_t k = lo + 1; k <= hi; ++k) m = std::min(m, f.real_value(k));
  return m;
}

void check_positive_datum(const GridFunction& f, const char* op) {
  require_real(f, op);
  bool nonzero = false;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double v = f.real_value(k);
    if (v < 0.0) {
      throw std::invalid_argument(std::string(op) +
                                  ": datum has a negative node; positivity onset is "
                                  "defined for positive data only");
    }
    nonzero = nonzero || v > 0.0;
  }
  if (!nonzero) {
    throw std::invalid_argument(std::string(op) + ": datum is identically zero");
  }
}

}  // namespace leplab
