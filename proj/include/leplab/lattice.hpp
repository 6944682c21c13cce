#pragma once

#include <complex>

#include "leplab/grid_function.hpp"

namespace leplab {

/// The three norms of E = L^1 \cap C_0: mixed = max(l1, sup) exactly.
struct NormReport {
  double l1 = 0.0;
  double sup = 0.0;
  double mixed = 0.0;
};

/// Composite trapezoid rule over the grid, h * (v0/2 + v1 + ... + v_{N-1}/2),
/// summed left to right. Every integral in the project goes through here so
/// that e.g. the integral of a nonnegative function and its l1 norm agree
/// bit for bit.
std::complex<double> trapezoid_integral(const GridFunction& f);

double norm_l1(const GridFunction& f);
double norm_sup(const GridFunction& f);
double norm_l2(const GridFunction& f);
NormReport norms(const GridFunction& f);
double norm_mixed(const GridFunction& f);

/// Pointwise lattice operations. Defined on real kind only; complex input is
/// rejected rather than silently projected to its real part.
GridFunction pos_part(const GridFunction& f);
GridFunction neg_part(const GridFunction& f);
GridFunction abs_value(const GridFunction& f);
GridFunction lattice_inf(const GridFunction& f, const GridFunction& g);
GridFunction lattice_sup(const GridFunction& f, const GridFunction& g);

struct LatticeParts {
  GridFunction pos;
  GridFunction neg;
  GridFunction abs;
};
LatticeParts lattice_parts(const GridFunction& f);

/// dist(f, E_+) = ||f^-||_E: the nearest positive element is f^+ in any
/// lattice norm (for g >= 0, -f <= g - f gives f^- <= |f - g| pointwise).
double dist_to_positive_cone(const GridFunction& f);

/// Samples of x -> f(x + t): linear interpolation between nodes, zero outside
/// [-L, L]. Shifts within ~1e-9 of a whole number of steps snap to exact
/// index shifts so that grid-aligned translations are bit-exact.
GridFunction translate(const GridFunction& f, double t);

/// Minimum of the (real) values over the window |x_k| <= radius.
double min_on_window(const GridFunction& f, double radius);

/// Throws unless f is real kind, nonnegative at every node, and not
/// identically zero. Positivity-onset scans are defined for such data only.
void check_positive_datum(const GridFunction& f, const char* op);

}  // namespace leplab
