#include "leplab/laplace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "leplab/lattice.hpp"

namespace leplab {

void QuadratureSpec::validate() const {
  if (!(dt > 0) || !(t_max > dt)) {
    throw std::invalid_argument("QuadratureSpec: requires 0 < dt < t_max");
  }
}

double QuadratureSpec::required_horizon(double re_lambda, double orbit_bound,
                                        double tail_tol) {
  if (!(re_lambda > 0)) {
    throw std::invalid_argument("QuadratureSpec: requires Re lambda > 0");
  }
  const double b = std::max(orbit_bound, tail_tol);
  return std::log(b / (tail_tol * re_lambda)) / re_lambda;
}

namespace {

/// Trapezoid sum over t_j = j * dt, j = 0..steps, with the horizon rounded up
/// to a whole number of steps. Every time quadrature in this module samples
/// exactly these instants, so quadratures over nested horizons share their
/// sample points bitwise - the localized inequality check depends on that.
std::size_t step_count(double horizon, double dt) {
  return std::size_t(std::ceil(horizon / dt - 1e-12));
}

GridFunction time_trapezoid(const std::function<GridFunction(double)>& orbit,
                            const GridFunction& shape, double horizon, double dt,
                            const std::function<std::complex<double>(double)>& weight,
                            const std::vector<double>* multiplier, Kind kind) {
  const std::size_t steps = std::max<std::size_t>(1, step_count(horizon, dt));
  std::vector<std::complex<double>> acc(shape.size(), 0.0);
  for (std::size_t j = 0; j <= steps; ++j) {
    const double t = double(j) * dt;
    const GridFunction u = orbit(t);
    const std::complex<double> w =
        weight(t) * ((j == 0 || j == steps) ? 0.5 : 1.0);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      const std::complex<double> v =
          multiplier ? (*multiplier)[k] * u.value(k) : u.value(k);
      acc[k] += w * v;
    }
  }
  for (auto& v : acc) v *= dt;
  if (kind == Kind::real) {
    for (auto& v : acc) v = std::complex<double>(v.real(), 0.0);
  }
  return GridFunction(shape.half_width(), shape.size(), std::move(acc), kind);
}

std::vector<double> localizer_values(const Localizer* loc, const GridFunction& f) {
  if (loc == nullptr) return {};
  const GridFunction profile = loc->profile(f.half_width(), f.size());
  std::vector<double> m(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) m[k] = profile.real_value(k);
  return m;
}

GridFunction laplace_core(const SemigroupModel& model, const Localizer* loc,
                          const GridFunction& f, std::complex<double> lambda,
                          const QuadratureSpec& quad) {
  const std::vector<double> m = localizer_values(loc, f);
  const Kind kind = (f.is_real() && lambda.imag() == 0.0) ? Kind::real : Kind::complex;
  return time_trapezoid(
      model.orbit(f), f, quad.t_max, quad.dt,
      [lambda](double t) { return std::exp(-lambda * t); },
      m.empty() ? nullptr : &m, kind);
}

}  // namespace

GridFunction laplace_orbit(const SemigroupModel& model, const Localizer* loc,
                           const GridFunction& f, std::complex<double> lambda,
                           const QuadratureSpec& quad, double tail_tol) {
  quad.validate();
  if (!(lambda.real() > 0)) {
    throw std::invalid_argument("laplace_orbit: requires Re lambda > 0");
  }
  const double required =
      QuadratureSpec::required_horizon(lambda.real(), model.orbit_norm_bound(f), tail_tol);
  if (quad.t_max < required) {
    throw std::runtime_error("laplace_orbit: tail budget violated; need t_max >= " +
                             std::to_string(required) + " for Re lambda = " +
                             std::to_string(lambda.real()));
  }
  return laplace_core(model, loc, f, lambda, quad);
}

GridFunction remainder_term(const SemigroupModel& model, const GridFunction& f,
                            double sigma, double tau_n, double dt) {
  if (!f.is_real()) {
    throw std::invalid_argument("remainder_term: f must be real kind");
  }
  if (!(tau_n >= 0) || !std::isfinite(tau_n)) {
    throw std::invalid_argument("remainder_term: tau_n must be finite and nonnegative");
  }
  if (tau_n == 0.0) return GridFunction::zeros(f.half_width(), f.size());
  if (!(dt > 0)) throw std::invalid_argument("remainder_term: dt must be positive");

  const auto orbit_f = model.orbit(f);
  const auto orbit_abs = model.orbit(abs_value(f));
  const auto defect = [&](double t) {
    const GridFunction uf = orbit_f(t);
    const GridFunction ua = orbit_abs(t);
    std::vector<std::complex<double>> values(uf.size());
    for (std::size_t k = 0; k < uf.size(); ++k) {
      values[k] = std::abs(uf.real_value(k)) - ua.real_value(k);
    }
    return GridFunction(uf.half_width(), uf.size(), std::move(values), Kind::real);
  };
  return time_trapezoid(defect, f, tau_n, dt,
                        [sigma](double t) { return std::complex<double>(std::exp(-sigma * t), 0.0); },
                        nullptr, Kind::real);
}

ResolventInequalityReport check_localized_resolvent_inequality(
    const SemigroupModel& model, const Localizer& p, const GridFunction& f,
    std::complex<double> lambda, double tau_n, const QuadratureSpec& quad,
    double tol) {
  quad.validate();
  if (!f.is_real()) {
    throw std::invalid_argument("check_localized_resolvent_inequality: f must be real kind");
  }
  if (!(tau_n >= 0) || tau_n >= quad.t_max) {
    throw std::invalid_argument(
        "check_localized_resolvent_inequality: tau_n must lie in [0, t_max)");
  }

  // Snap tau_n up to the shared quadrature instants j * dt so that the
  // remainder integral covers exactly the t < tau part of the transforms.
  const std::size_t tau_steps = step_count(tau_n, quad.dt);
  const std::size_t total_steps = std::max<std::size_t>(1, step_count(quad.t_max, quad.dt));
  const double tau_used = double(tau_steps) * quad.dt;

  // Verify the hypothesis P T_t f^+ >= 0, P T_t f^- >= 0 at every quadrature
  // instant in [tau, t_max]; 1e-10 absolute slack absorbs transform rounding.
  const double slack = 1e-10 * std::max(1.0, norm_mixed(f));
  const double radius = double(p.index());
  for (const GridFunction& part : {pos_part(f), neg_part(f)}) {
    if (norm_sup(part) == 0.0) continue;
    const auto orb = model.orbit(part);
    for (std::size_t j = tau_steps; j <= total_steps; ++j) {
      const double t = double(j) * quad.dt;
      if (min_on_window(orb(t), radius) < -slack) {
        throw std::runtime_error(
            "check_localized_resolvent_inequality: hypothesis fails at t = " +
            std::to_string(t) + "; the localized orbit of a part of f is not yet "
            "positive - increase tau_n");
      }
    }
  }

  ResolventInequalityReport rep{lambda,
                                tau_used,
                                tol,
                                0.0,
                                false,
                                GridFunction::zeros(f.half_width(), f.size()),
                                GridFunction::zeros(f.half_width(), f.size()),
                                GridFunction::zeros(f.half_width(), f.size())};

  const GridFunction lhs_c = laplace_orbit(model, &p, f, lambda, quad);
  std::vector<std::complex<double>> lhs(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) lhs[k] = std::abs(lhs_c.value(k));
  rep.lhs = GridFunction(f.half_width(), f.size(), std::move(lhs), Kind::real);

  rep.rhs_resolvent = laplace_orbit(model, &p, abs_value(f),
                                    std::complex<double>(lambda.real(), 0.0), quad);
  rep.rhs_remainder = p.apply(remainder_term(model, f, lambda.real(), tau_used, quad.dt));

  double violation = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < f.size(); ++k) {
    violation = std::max(violation, rep.lhs.real_value(k) - rep.rhs_resolvent.real_value(k) -
                                        rep.rhs_remainder.real_value(k));
  }
  rep.max_violation = violation;
  rep.pass = violation <= tol;
  return rep;
}

std::vector<ProbeSample> spectral_bound_probe(const SemigroupModel& model,
                                              const GridFunction& f,
                                              std::span<const double> sigma_list,
                                              double dt, double t_max_cap,
                                              double tail_tol) {
  if (!(dt > 0) || !(t_max_cap > dt)) {
    throw std::invalid_argument("spectral_bound_probe: requires 0 < dt < t_max_cap");
  }
  std::vector<ProbeSample> out;
  out.reserve(sigma_list.size());
  for (std::size_t i = 0; i < sigma_list.size(); ++i) {
    const double sigma = sigma_list[i];
    if (!(sigma > 0) || (i > 0 && sigma >= sigma_list[i - 1])) {
      throw std::invalid_argument(
          "spectral_bound_probe: sigma values must be positive and decreasing");
    }
    ProbeSample s;
    s.sigma = sigma;
    s.required_t_max =
        QuadratureSpec::required_horizon(sigma, model.orbit_norm_bound(f), tail_tol);
    s.within_budget = s.required_t_max <= t_max_cap;
    s.used_t_max = std::min(s.required_t_max, t_max_cap);
    const QuadratureSpec quad{std::max(s.used_t_max, 2 * dt), dt};
    s.norm_e = norm_mixed(laplace_core(model, nullptr, f, sigma, quad));
    out.push_back(s);
  }
  return out;
}

}  // namespace leplab
