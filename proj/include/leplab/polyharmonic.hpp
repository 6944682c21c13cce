#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "leplab/fft.hpp"
#include "leplab/grid_function.hpp"

namespace leplab {

/// Configuration of the u_t + (-Laplacian)^alpha u = 0 flow on a periodic
/// computational box of width 2L with M spectral nodes (M a power of two).
/// Grid functions carry N = M + 1 nodes; the right endpoint duplicates the
/// left one, so the trapezoid rule on [-L, L] equals the periodic sum.
struct FlowParams {
  double alpha = 2.0;          // polyharmonic exponent, >= 1 (1 = heat, 2 = biharmonic)
  int dim = 1;                 // only 1 is built
  double box_half_width = 0.0; // L
  std::size_t num_modes = 0;   // M, power of two
  double wrap_tolerance = 1e-10;
};

/// Spectral-multiplier evolution: transform, damp mode xi by
/// exp(-t |xi|^{2 alpha}), transform back. Frequencies are pi*k/L with the
/// Nyquist mode assigned to the negative side.
class PolyharmonicFlow {
public:
  explicit PolyharmonicFlow(FlowParams params);

  const FlowParams& params() const { return params_; }
  std::size_t grid_points() const { return params_.num_modes + 1; }

  GridFunction evolve(const GridFunction& u0, double t) const;

  /// Fundamental solution at time t > 0 (inverse transform of the multiplier
  /// alone). Throws if the multiplier has not decayed at the Nyquist
  /// frequency, i.e. the grid cannot resolve the kernel yet.
  GridFunction kernel(double t) const;

  /// Smallest sampled tau with min over [-K, K] of the evolved solution
  /// strictly positive for all sampled t in [tau, end]; nullopt if the last
  /// sample fails. Requires u0 >= 0, u0 != 0.
  std::optional<double> lep_onset(const GridFunction& u0, double k_radius,
                                  std::span<const double> t_grid) const;

  struct DecaySample {
    double t;
    double sup;
    double l1;
    double mass;
  };

  struct DecayFit {
    std::vector<DecaySample> samples;
    double slope = 0.0;  // fitted log-log slope of the sup norm vs t
  };

  /// Sup-norm decay fit over increasing positive times within the
  /// wrap-around-safe horizon (each evolve enforces the boundary budget).
  DecayFit decay_slope(const GridFunction& u0, std::span<const double> t_list) const;

  /// max over t of ||kernel(t)||_1; by self-similar scaling this equals
  /// ||kernel(1)||_1 (computed once). Used as the orbit norm bound.
  double kernel_l1_bound() const { return kernel_l1_bound_; }

  /// Shares one forward transform across a time sweep.
  class Orbit {
  public:
    Orbit(const PolyharmonicFlow& flow, const GridFunction& u0);
    GridFunction at(double t) const;

  private:
    const PolyharmonicFlow& flow_;
    double scale_;
    double boundary0_;
    Kind kind_;
    std::vector<std::complex<double>> spectrum_;
  };

private:
  friend class Orbit;

  void check_grid(const GridFunction& u0) const;
  GridFunction assemble(std::vector<std::complex<double>> modes, double t,
                        Kind kind, double scale, double boundary_allowance) const;

  FlowParams params_;
  std::shared_ptr<const Radix2Fft> fft_;
  std::vector<double> symbol_;  // |xi_k|^{2 alpha} in FFT index order
  double kernel_l1_bound_ = 1.0;
};

}  // namespace leplab
