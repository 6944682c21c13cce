#pragma once

#include <span>
#include <vector>

#include "leplab/grid_function.hpp"
#include "leplab/lattice.hpp"

namespace leplab {

/// Parameters of the approximate-eigenvector family for the spectral point
/// i*alpha of the translation-mixing generator. Negative alpha is handled by
/// building the family for -alpha and conjugating.
struct WeylParams {
  double alpha = 1.0;  // nonzero
  int n = 1;           // family index, >= 1
};

/// max(min_half_width, 8 sqrt(n/|alpha|)): wide enough that the Gaussian
/// envelope tail is below ~1.3e-14 at the boundary.
double weyl_half_width(const WeylParams& p, double min_half_width = 20.0);

/// w_n(x) = n^{-1/2} (1 + ix/n) exp(-|alpha| x^2 / (2n) + i alpha x).
/// Zero mean, ||w_n||_1 >= sqrt(2 pi / |alpha|), sup norm ~ n^{-1/2}.
/// Throws if the grid is too narrow for the envelope tail.
GridFunction weyl_vector(const WeylParams& p, double half_width,
                         std::size_t num_points);

/// Closed form of the eigen-residual w_n' - i alpha w_n =
///   n^{-3/2} (-alpha x + i (1 - alpha x^2 / n)) exp(-alpha x^2/(2n) + i alpha x)
/// (conjugated for negative alpha). No numerical differentiation; matches a
/// central-difference oracle to O(h^2). Modulus at x = 0 is exactly n^{-3/2};
/// the l1/sup norms decay like n^{-1/2} and n^{-1}.
GridFunction weyl_residual(const WeylParams& p, double half_width,
                           std::size_t num_points);

struct WeylSample {
  int n = 0;
  NormReport w;
  NormReport residual;
  double integral_abs = 0.0;  // |trapezoid integral of w_n|
};

struct WeylDecayFit {
  std::vector<WeylSample> samples;
  double slope_l1 = 0.0;   // fitted log-log slope of ||residual||_1 vs n
  double slope_sup = 0.0;  // of ||residual||_inf vs n
  double slope_e = 0.0;    // of ||residual||_E vs n
  double slope_w_sup = 0.0;  // of ||w_n||_inf vs n
};

/// Norms and fitted decay slopes over a list of indices (>= 3 required).
/// The grid is rescaled per index via weyl_half_width with node spacing
/// near h_target.
WeylDecayFit weyl_decay_fit(double alpha, std::span<const int> n_list,
                            double h_target = 0.01, double min_half_width = 20.0);

}  // namespace leplab
