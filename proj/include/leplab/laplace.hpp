#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "leplab/localizer.hpp"
#include "leplab/semigroup_model.hpp"

namespace leplab {

/// Time-quadrature configuration for Laplace transforms of orbits.
/// The rule is the composite trapezoid on [0, t_max] with step dt.
struct QuadratureSpec {
  double t_max = 0.0;
  double dt = 0.0;

  void validate() const;

  /// Horizon needed so the truncated tail bound e^{-re_lambda t} B / re_lambda
  /// stays below tail_tol.
  static double required_horizon(double re_lambda, double orbit_bound,
                                 double tail_tol);
};

/// Trapezoid quadrature of e^{-lambda t} loc(T_t f) over [0, t_max],
/// pointwise on the grid; loc = identity when absent. Requires Re lambda > 0
/// (both in-scope models are bounded) and a horizon within the tail budget.
GridFunction laplace_orbit(const SemigroupModel& model, const Localizer* loc,
                           const GridFunction& f, std::complex<double> lambda,
                           const QuadratureSpec& quad, double tail_tol = 1e-10);

/// r_{n,f}(sigma) = integral over [0, tau_n] of e^{-sigma t} (|T_t f| - T_t |f|),
/// the finite-horizon correction that eventual positivity leaves behind.
GridFunction remainder_term(const SemigroupModel& model, const GridFunction& f,
                            double sigma, double tau_n, double dt);

struct ResolventInequalityReport {
  std::complex<double> lambda;
  double tau_n = 0.0;
  double tol = 0.0;
  double max_violation = 0.0;
  bool pass = false;
  GridFunction lhs;            // |P R(lambda) f|
  GridFunction rhs_resolvent;  // P R(Re lambda) |f|
  GridFunction rhs_remainder;  // P r_{n,f}(Re lambda)
};

/// Checks |P R(lambda) f| <= P R(Re lambda)|f| + P r_{n,f}(Re lambda)
/// pointwise on the grid. tau_n is snapped up to the quadrature instants
/// (the report carries the value used). The hypothesis that P T_t f^+ and
/// P T_t f^- are nonnegative at every quadrature instant >= tau_n is
/// verified first (up to a 1e-10 rounding allowance) and a failed
/// verification is an error, not a report.
ResolventInequalityReport check_localized_resolvent_inequality(
    const SemigroupModel& model, const Localizer& p, const GridFunction& f,
    std::complex<double> lambda, double tau_n, const QuadratureSpec& quad,
    double tol = 1e-6);

struct ProbeSample {
  double sigma = 0.0;
  double norm_e = 0.0;
  double required_t_max = 0.0;
  double used_t_max = 0.0;
  bool within_budget = true;
};

/// ||R(sigma) f||_E along sigma decreasing toward the spectral bound 0.
/// The horizon grows like 1/sigma; samples that would exceed t_max_cap are
/// computed at the cap and flagged rather than silently truncated.
std::vector<ProbeSample> spectral_bound_probe(const SemigroupModel& model,
                                              const GridFunction& f,
                                              std::span<const double> sigma_list,
                                              double dt, double t_max_cap,
                                              double tail_tol = 1e-10);

}  // namespace leplab
