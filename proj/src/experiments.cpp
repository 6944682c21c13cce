#include "leplab/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "leplab/battery.hpp"
#include "leplab/csv.hpp"
#include "leplab/example_semigroup.hpp"
#include "leplab/fit.hpp"
#include "leplab/laplace.hpp"
#include "leplab/lattice.hpp"
#include "leplab/localizer.hpp"
#include "leplab/polyharmonic.hpp"
#include "leplab/semigroup_model.hpp"
#include "leplab/weyl.hpp"
#include "leplab/version.hpp"

namespace leplab {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Config access with field-path error messages.

[[noreturn]] void config_error(const std::string& path, const std::string& why) {
  throw std::invalid_argument("config error at " + path + ": " + why);
}

class Config {
public:
  Config(const json& j, std::string prefix) : j_(j), prefix_(std::move(prefix)) {}

  std::string path_of(const std::string& key) const {
    return prefix_.empty() ? key : prefix_ + "." + key;
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  Config section(const std::string& key) const {
    if (!j_.contains(key) || !j_.at(key).is_object()) {
      config_error(path_of(key), "expected an object");
    }
    return Config(j_.at(key), path_of(key));
  }

  Config section_or_empty(const std::string& key) const {
    static const json empty = json::object();
    if (!j_.contains(key)) return Config(empty, path_of(key));
    return section(key);
  }

  double number(const std::string& key) const {
    if (!j_.contains(key) || !j_.at(key).is_number()) {
      config_error(path_of(key), "expected a number");
    }
    return j_.at(key).get<double>();
  }

  double number_or(const std::string& key, double fallback) const {
    return j_.contains(key) ? number(key) : fallback;
  }

  long integer(const std::string& key) const {
    if (!j_.contains(key) || !j_.at(key).is_number_integer()) {
      config_error(path_of(key), "expected an integer");
    }
    return j_.at(key).get<long>();
  }

  long integer_or(const std::string& key, long fallback) const {
    return j_.contains(key) ? integer(key) : fallback;
  }

  std::string text_or(const std::string& key, const std::string& fallback) const {
    if (!j_.contains(key)) return fallback;
    if (!j_.at(key).is_string()) config_error(path_of(key), "expected a string");
    return j_.at(key).get<std::string>();
  }

  std::vector<double> number_list_or(const std::string& key,
                                     std::vector<double> fallback) const {
    if (!j_.contains(key)) return fallback;
    if (!j_.at(key).is_array() || j_.at(key).empty()) {
      config_error(path_of(key), "expected a nonempty array of numbers");
    }
    std::vector<double> out;
    for (const auto& v : j_.at(key)) {
      if (!v.is_number()) config_error(path_of(key), "expected numbers");
      out.push_back(v.get<double>());
    }
    return out;
  }

  std::vector<int> int_list_or(const std::string& key, std::vector<int> fallback) const {
    if (!j_.contains(key)) return fallback;
    if (!j_.at(key).is_array() || j_.at(key).empty()) {
      config_error(path_of(key), "expected a nonempty array of integers");
    }
    std::vector<int> out;
    for (const auto& v : j_.at(key)) {
      if (!v.is_number_integer()) config_error(path_of(key), "expected integers");
      out.push_back(v.get<int>());
    }
    return out;
  }

  const json& raw() const { return j_; }

private:
  const json& j_;
  std::string prefix_;
};

struct GridSpec {
  double half_width = 20.0;
  std::size_t num_points = 4001;
};

GridSpec parse_grid(const Config& c, double default_l, long default_n) {
  const Config g = c.section_or_empty("grid");
  GridSpec spec;
  spec.half_width = g.number_or("half_width", default_l);
  const long n = g.integer_or("num_points", default_n);
  if (!(spec.half_width > 0)) config_error(g.path_of("half_width"), "must be positive");
  if (n < 3 || n % 2 == 0) {
    config_error(g.path_of("num_points"), "must be an odd integer >= 3");
  }
  spec.num_points = std::size_t(n);
  return spec;
}

GridFunction parse_initial_data(const Config& c, const GridSpec& grid,
                                const std::string& fallback_type) {
  const Config d = c.section_or_empty("initial_data");
  const std::string type = d.text_or("type", fallback_type);
  if (type == "gaussian") {
    return standard_gaussian(grid.half_width, grid.num_points);
  }
  if (type == "triangle") {
    return triangle_bump(grid.half_width, grid.num_points, d.number_or("a", 1.0),
                         d.number_or("b", 2.0), d.number_or("scale", 1.0));
  }
  if (type == "hat") {
    return hat(grid.half_width, grid.num_points, d.number_or("center", 0.0),
               d.number_or("width", 1.0), d.number_or("height", 1.0));
  }
  if (type == "random-positive") {
    std::mt19937 rng(std::uint32_t(d.integer_or("seed", 1)));
    return random_positive_compact(rng, grid.half_width, grid.num_points);
  }
  if (type == "csv") {
    const std::string path = d.text_or("path", "");
    if (path.empty()) config_error(d.path_of("path"), "expected a GridFunction CSV path");
    GridFunction f = read_grid_csv(path);
    if (f.half_width() != grid.half_width || f.size() != grid.num_points) {
      config_error(d.path_of("path"), "grid in " + path +
                                          " does not match the configured grid");
    }
    return f;
  }
  config_error(d.path_of("type"),
               "unknown initial datum '" + type +
                   "' (expected gaussian | triangle | hat | random-positive | csv)");
}

// ---------------------------------------------------------------------------
// Report plumbing.

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Checks {
  json rows = json::array();
  bool all_pass = true;

  void add(const std::string& name, bool pass, json detail = json::object()) {
    detail["check"] = name;
    detail["pass"] = pass;
    rows.push_back(detail);
    all_pass = all_pass && pass;
  }
};

class Reporter {
public:
  Reporter(const json& config, const RunOptions& options)
      : config_(config), out_dir_(options.out_dir) {
    std::filesystem::create_directories(out_dir_ / "data");
  }

  void write_table(const std::string& name, const CsvTable& table) {
    write_csv(out_dir_ / "data" / name, table);
    data_files_.push_back(name);
  }

  void write_grid(const std::string& name, const GridFunction& f) {
    write_grid_csv(out_dir_ / "data" / name, f);
    data_files_.push_back(name);
  }

  ExperimentOutcome finish(const std::string& experiment, json summary, json records,
                           bool pass) {
    summary["pass"] = pass;
    json report;
    report["experiment"] = experiment;
    report["config"] = config_;
    report["records"] = std::move(records);
    report["summary"] = std::move(summary);
    report["data_files"] = data_files_;
    report["provenance"] = {
        {"artifact", std::string(kArtifactName) + " " + kVersion},
        {"timestamp", utc_timestamp()},
    };
    std::ofstream out(out_dir_ / "report.json");
    if (!out) {
      throw std::runtime_error("cannot write report to " + (out_dir_ / "report.json").string());
    }
    out << report.dump(2) << '\n';
    return {pass, std::move(report)};
  }

private:
  json config_;
  std::filesystem::path out_dir_;
  std::vector<std::string> data_files_;
};

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body) {
  const int workers = std::max(1, std::min<int>(threads, int(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<double> arithmetic_grid(double start, double stop, double step) {
  std::vector<double> out;
  const std::size_t count = std::size_t(std::floor((stop - start) / step + 1e-9)) + 1;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(start + double(i) * step);
  return out;
}

std::vector<double> geometric_grid(double start, double stop, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  const double ratio = std::log(stop / start) / double(count - 1);
  for (std::size_t i = 0; i < count; ++i) out.push_back(start * std::exp(ratio * double(i)));
  return out;
}

// ---------------------------------------------------------------------------
// Experiments.

ExperimentOutcome run_lep_onset_example(const Config& c, Reporter& rep) {
  const GridSpec grid = parse_grid(c, 20.0, 4001);
  const double radius = c.number_or("window_radius", 5.0);
  const double t_step = c.number_or("t_step", 0.1);
  const double t_max = c.number_or("t_max", 40.0);
  const double onset_step = c.number_or("onset_step", 0.01);
  const double onset_search_max = c.number_or("onset_search_max", 4.0 * radius + 2.0);
  if (!(t_step > 0) || !(t_max > t_step)) config_error("t_step", "requires 0 < t_step < t_max");

  const ExampleSemigroup sg =
      ExampleSemigroup::with_gaussian_profile(grid.half_width, grid.num_points);
  const GridFunction f = parse_initial_data(c, grid, "triangle");
  check_positive_datum(f, "lep-onset-example");

  const std::vector<double> t_grid = arithmetic_grid(0.0, t_max, t_step);
  CsvTable table;
  table.header = {"t", "min_on_window", "dist_to_cone"};
  for (const double t : t_grid) {
    const GridFunction u = sg.apply(f, t);
    table.add_row({t, min_on_window(u, radius), dist_to_positive_cone(u)});
  }
  rep.write_table("onset_scan.csv", table);
  rep.write_grid("initial_data.csv", f);

  const auto onset = sg.time_to_positivity(f, radius, t_grid);
  const double bound = sg.uniform_onset_bound(radius, onset_step, onset_search_max);

  Checks checks;
  checks.add("onset_found", onset.has_value(),
             {{"onset", onset ? json(*onset) : json()}});
  checks.add("onset_within_uniform_bound",
             onset.has_value() && *onset <= 2.0 * radius + t_step + 1e-12,
             {{"limit", 2.0 * radius + t_step}});
  checks.add("uniform_bound_brackets_2R",
             bound > 2.0 * radius && bound <= 2.0 * radius + onset_step,
             {{"uniform_onset_bound", bound}, {"two_R", 2.0 * radius}});

  json summary;
  summary["onset"] = onset ? json(*onset) : json();
  summary["uniform_onset_bound"] = bound;
  summary["window_radius"] = radius;
  summary["boundary_tail"] = f.boundary_tail();
  return rep.finish("lep-onset-example", summary, checks.rows, checks.all_pass);
}

FlowParams parse_flow(const Config& c, double default_alpha, double default_l,
                      long default_m) {
  FlowParams p;
  p.alpha = c.number_or("alpha", default_alpha);
  p.dim = int(c.integer_or("dim", 1));
  p.box_half_width = c.number_or("box_half_width", default_l);
  const long m = c.integer_or("num_points", default_m);
  if (m < 4 || (m & (m - 1)) != 0) {
    config_error("num_points", "must be a power of two >= 4");
  }
  p.num_modes = std::size_t(m);
  return p;
}

GridFunction parse_box_initial(const Config& c, const FlowParams& p) {
  const GridSpec grid{p.box_half_width, p.num_modes + 1};
  return parse_initial_data(c, grid, "hat");
}

ExperimentOutcome run_lep_onset_polyharmonic(const Config& c, Reporter& rep) {
  const FlowParams params = parse_flow(c, 2.0, 160.0, 1 << 14);
  const double k_radius = c.number_or("k_radius", 5.0);
  const double t_step = c.number_or("t_step", 0.5);
  const double t_max = c.number_or("t_max", 100.0);

  const PolyharmonicFlow flow(params);
  const GridFunction u0 = parse_box_initial(c, params);
  check_positive_datum(u0, "lep-onset-polyharmonic");

  const std::vector<double> t_grid = arithmetic_grid(0.0, t_max, t_step);
  const PolyharmonicFlow::Orbit orbit(flow, u0);
  const double mass0 = trapezoid_integral(u0).real();

  CsvTable table;
  table.header = {"t", "sup_norm", "l1_norm", "min_on_K", "mass"};
  double mass_drift = 0.0;
  for (const double t : t_grid) {
    const GridFunction u = orbit.at(t);
    const double mass = trapezoid_integral(u).real();
    mass_drift = std::max(mass_drift, std::abs(mass - mass0));
    table.add_row({t, norm_sup(u), norm_l1(u), min_on_window(u, k_radius), mass});
  }
  rep.write_table("onset_scan.csv", table);

  const auto onset = flow.lep_onset(u0, k_radius, t_grid);
  Checks checks;
  checks.add("onset_found", onset.has_value(), {{"onset", onset ? json(*onset) : json()}});
  checks.add("mass_conserved", mass_drift <= 1e-8 * std::max(1.0, std::abs(mass0)),
             {{"max_drift", mass_drift}});

  json summary;
  summary["onset"] = onset ? json(*onset) : json();
  summary["k_radius"] = k_radius;
  summary["alpha"] = params.alpha;
  return rep.finish("lep-onset-polyharmonic", summary, checks.rows, checks.all_pass);
}

ExperimentOutcome run_weyl_residuals(const Config& c, Reporter& rep) {
  const double alpha = c.number_or("alpha", 1.0);
  std::vector<int> default_n;
  for (int n = 4; n <= 256; n *= 2) default_n.push_back(n);
  const std::vector<int> n_list = c.int_list_or("n_list", default_n);
  const double h_target = c.number_or("h_target", 0.01);
  const double min_half_width = c.number_or("min_half_width", 20.0);

  const WeylDecayFit fit = weyl_decay_fit(alpha, n_list, h_target, min_half_width);

  CsvTable table;
  table.header = {"n", "l1", "sup", "mixed", "residual_l1", "residual_sup", "residual_mixed"};
  double max_integral = 0.0;
  double min_l1_margin = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  const double floor_l1 = std::sqrt(2.0 * std::numbers::pi / std::abs(alpha));
  for (std::size_t i = 0; i < fit.samples.size(); ++i) {
    const WeylSample& s = fit.samples[i];
    table.add_row({double(s.n), s.w.l1, s.w.sup, s.w.mixed, s.residual.l1, s.residual.sup,
                   s.residual.mixed});
    max_integral = std::max(max_integral, s.integral_abs);
    min_l1_margin = std::min(min_l1_margin, s.w.l1 - floor_l1);
    if (i > 0) decreasing = decreasing && s.residual.mixed < fit.samples[i - 1].residual.mixed;
  }
  rep.write_table("weyl_norms.csv", table);

  Checks checks;
  checks.add("zero_mean", max_integral <= 1e-8, {{"max_abs_integral", max_integral}});
  checks.add("l1_lower_bound", min_l1_margin >= -1e-6,
             {{"min_margin", min_l1_margin}, {"floor", floor_l1}});
  checks.add("residual_decreasing", decreasing);
  // The eigen-residual l1 norm decays like 2 n^{-1/2}, so the E norm slope
  // sits near -0.55 over dyadic ranges.
  checks.add("e_slope_near_minus_half",
             fit.slope_e >= -0.7 && fit.slope_e <= -0.4, {{"slope_e", fit.slope_e}});

  json summary;
  summary["slope"] = fit.slope_e;
  summary["slope_l1"] = fit.slope_l1;
  summary["slope_sup"] = fit.slope_sup;
  summary["slope_e"] = fit.slope_e;
  summary["slope_w_sup"] = fit.slope_w_sup;
  summary["alpha"] = alpha;
  return rep.finish("weyl-residuals", summary, checks.rows, checks.all_pass);
}

ExperimentOutcome run_decay_fit(const Config& c, Reporter& rep) {
  const FlowParams params = parse_flow(c, 2.0, 160.0, 1 << 16);
  const double t_min = c.number_or("t_min", 10.0);
  const double t_max = c.number_or("t_max", 1000.0);
  const long samples = c.integer_or("samples", 12);
  const double k_radius = c.number_or("k_radius", 5.0);
  // sup norm decays like t^{-N/(2 alpha)}: -1/4 for the biharmonic line flow.
  const double expected =
      c.number_or("expected_slope", -double(params.dim) / (2.0 * params.alpha));
  const double tol = c.number_or("slope_tol", 0.05);
  if (!(t_min > 0) || !(t_max > t_min)) config_error("t_min", "requires 0 < t_min < t_max");
  if (samples < 3) config_error("samples", "need at least 3 samples");

  const PolyharmonicFlow flow(params);
  const GridFunction u0 = parse_box_initial(c, params);
  const std::vector<double> t_list = geometric_grid(t_min, t_max, std::size_t(samples));
  const PolyharmonicFlow::DecayFit fit = flow.decay_slope(u0, t_list);

  CsvTable table;
  table.header = {"t", "sup_norm", "l1_norm", "min_on_K", "mass"};
  const PolyharmonicFlow::Orbit orbit(flow, u0);
  for (const auto& s : fit.samples) {
    table.add_row({s.t, s.sup, s.l1, min_on_window(orbit.at(s.t), k_radius), s.mass});
  }
  rep.write_table("decay.csv", table);

  Checks checks;
  checks.add("slope_in_band", std::abs(fit.slope - expected) <= tol,
             {{"slope", fit.slope}, {"expected", expected}, {"tol", tol}});

  json summary;
  summary["slope"] = fit.slope;
  summary["expected_slope"] = expected;
  summary["alpha"] = params.alpha;
  return rep.finish("decay-fit", summary, checks.rows, checks.all_pass);
}

ExperimentOutcome run_resolvent_audit(const Config& c, Reporter& rep, int threads) {
  // Part 1: eigenmode oracle against the polyharmonic flow.
  const Config em = c.section_or_empty("eigenmode");
  FlowParams params;
  params.alpha = em.number_or("alpha", 1.0);
  params.box_half_width = em.number_or("box_half_width", 20.0);
  const long m = em.integer_or("num_points", 4096);
  if (m < 4 || (m & (m - 1)) != 0) {
    config_error(em.path_of("num_points"), "must be a power of two >= 4");
  }
  params.num_modes = std::size_t(m);
  const long mode_index = em.integer_or("mode_index", 6);
  const double dt_em = em.number_or("dt", 0.001);
  const double tol_em = em.number_or("tol", 1e-6);

  const PolyharmonicModel poly(params);
  const double xi = std::numbers::pi * double(mode_index) / params.box_half_width;
  const GridFunction mode =
      GridFunction::sample(params.box_half_width, params.num_modes + 1,
                           [xi](double x) { return std::cos(xi * x); });
  const double symbol = std::pow(xi, 2.0 * params.alpha);

  json eigen_rows = json::array();
  CsvTable em_table;
  em_table.header = {"re_lambda", "im_lambda", "max_error"};
  bool eigen_pass = true;
  std::vector<std::complex<double>> lambdas = {{1.0, 0.0}, {2.0, 3.0}};
  if (em.has("lambdas")) {
    if (!em.raw().at("lambdas").is_array() || em.raw().at("lambdas").empty()) {
      config_error(em.path_of("lambdas"), "expected a nonempty array of {re, im} objects");
    }
    lambdas.clear();
    for (const auto& l : em.raw().at("lambdas")) {
      lambdas.emplace_back(l.value("re", 1.0), l.value("im", 0.0));
    }
  }
  for (const auto lambda : lambdas) {
    const double horizon =
        QuadratureSpec::required_horizon(lambda.real(), poly.orbit_norm_bound(mode), 1e-10);
    const GridFunction r = laplace_orbit(poly, nullptr, mode, lambda, {horizon, dt_em});
    const std::complex<double> gain = 1.0 / (lambda + symbol);
    double err = 0.0;
    for (std::size_t k = 0; k < mode.size(); ++k) {
      err = std::max(err, std::abs(r.value(k) - gain * mode.value(k)));
    }
    eigen_pass = eigen_pass && err <= tol_em;
    em_table.add_row({lambda.real(), lambda.imag(), err});
    eigen_rows.push_back({{"lambda", {lambda.real(), lambda.imag()}},
                          {"max_error", err},
                          {"tol", tol_em},
                          {"pass", err <= tol_em}});
  }
  rep.write_table("eigenmode_errors.csv", em_table);

  // Part 2: localized resolvent inequality on a sign-changing battery.
  const GridSpec grid = parse_grid(c, 20.0, 2001);
  const int window_index = int(c.integer_or("window_index", 5));
  const double tau_n = c.number_or("tau_n", 2.0 * window_index + 1.0);
  const std::complex<double> lambda(c.number_or("lambda_re", 0.5), c.number_or("lambda_im", 2.0));
  const long battery_size = c.integer_or("battery_size", 10);
  const std::uint32_t seed = std::uint32_t(c.integer_or("seed", 20240601));
  const double dt = c.number_or("dt", 0.01);
  const double tol = c.number_or("tol", 1e-6);

  const ExampleSemigroupModel example(
      ExampleSemigroup::with_gaussian_profile(grid.half_width, grid.num_points));
  const Localizer window(LocalizerKind::indicator, window_index);

  std::mt19937 rng(seed);
  std::vector<GridFunction> battery;
  for (long i = 0; i < battery_size; ++i) {
    battery.push_back(random_sign_changing(rng, grid.half_width, grid.num_points));
  }

  std::vector<json> rows(battery.size());
  std::vector<char> row_pass(battery.size(), 0);
  parallel_for(battery.size(), threads, [&](std::size_t i) {
    const double horizon = QuadratureSpec::required_horizon(
        lambda.real(), example.orbit_norm_bound(battery[i]), 1e-10);
    const auto report = check_localized_resolvent_inequality(
        example, window, battery[i], lambda, tau_n, {horizon, dt}, tol);
    rows[i] = {{"lambda", {lambda.real(), lambda.imag()}},
               {"tau_n", report.tau_n},
               {"max_violation", report.max_violation},
               {"tol", report.tol},
               {"pass", report.pass}};
    row_pass[i] = report.pass ? 1 : 0;
  });

  Checks checks;
  checks.add("eigenmode_oracle", eigen_pass, {{"rows", eigen_rows}});
  bool ineq_pass = true;
  for (const char p : row_pass) ineq_pass = ineq_pass && p;
  checks.add("localized_inequality", ineq_pass, {{"rows", rows}});

  json summary;
  summary["battery_size"] = battery_size;
  summary["lambda"] = {lambda.real(), lambda.imag()};
  summary["tau_n"] = tau_n;
  return rep.finish("resolvent-audit", summary, checks.rows, checks.all_pass);
}

ExperimentOutcome run_spectral_bound_probe(const Config& c, Reporter& rep) {
  const std::string model_name = c.text_or("model", "example");
  const std::vector<double> sigmas = c.number_list_or("sigma_list", {0.5, 0.25, 0.125});
  const double dt = c.number_or("dt", 0.01);
  const double cap = c.number_or("t_max_cap", 1000.0);

  std::unique_ptr<SemigroupModel> model;
  std::unique_ptr<GridFunction> f;
  if (model_name == "example") {
    const GridSpec grid = parse_grid(c, 20.0, 2001);
    auto ex = std::make_unique<ExampleSemigroupModel>(
        ExampleSemigroup::with_gaussian_profile(grid.half_width, grid.num_points));
    if (c.has("initial_data")) {
      f = std::make_unique<GridFunction>(parse_initial_data(c, grid, "gaussian"));
    } else {
      f = std::make_unique<GridFunction>(ex->semigroup().profile());
    }
    model = std::move(ex);
  } else if (model_name == "polyharmonic") {
    const FlowParams params = parse_flow(c, 2.0, 100.0, 1 << 13);
    f = std::make_unique<GridFunction>(parse_box_initial(c, params));
    model = std::make_unique<PolyharmonicModel>(params);
  } else {
    config_error("model", "expected 'example' or 'polyharmonic'");
  }

  const auto samples = spectral_bound_probe(*model, *f, sigmas, dt, cap);
  CsvTable table;
  table.header = {"sigma", "norm_E"};
  json records = json::array();
  for (const auto& s : samples) {
    table.add_row({s.sigma, s.norm_e});
    records.push_back({{"sigma", s.sigma},
                       {"norm_e", s.norm_e},
                       {"required_t_max", s.required_t_max},
                       {"used_t_max", s.used_t_max},
                       {"within_budget", s.within_budget}});
  }
  rep.write_table("probe.csv", table);

  Checks checks;
  const std::string expected = c.text_or("expected", model_name == "example"
                                                         ? "inverse-sigma"
                                                         : "slope-range");
  if (expected == "inverse-sigma") {
    const double rtol = c.number_or("rtol", 0.02);
    bool ok = true;
    for (const auto& s : samples) {
      ok = ok && std::abs(s.norm_e * s.sigma - 1.0) <= rtol;
    }
    checks.add("norm_matches_inverse_sigma", ok, {{"rtol", rtol}});
  } else if (expected == "slope-range") {
    std::vector<double> xs, ys;
    for (const auto& s : samples) {
      xs.push_back(s.sigma);
      ys.push_back(s.norm_e);
    }
    const double slope = loglog_slope(xs, ys);
    // The zero-mode mass m0/sigma dominates; the fitted slope sits at -1 with
    // a small overshoot because late times carry slightly more l1 mass.
    const double lo = c.number_or("slope_lo", -1.05), hi = c.number_or("slope_hi", -0.7);
    checks.add("divergence_slope_in_range", slope >= lo && slope <= hi, {{"slope", slope}});
  } else if (expected == "bounded") {
    const double growth = samples.back().norm_e / samples.front().norm_e;
    checks.add("norm_stays_bounded", growth <= c.number_or("max_growth", 1.5),
               {{"growth", growth}});
  } else {
    config_error("expected", "expected inverse-sigma | slope-range | bounded");
  }

  bool budgets_ok = true;
  for (const auto& s : samples) budgets_ok = budgets_ok && s.within_budget;
  checks.add("horizons_within_cap", budgets_ok);

  json summary;
  summary["model"] = model_name;
  return rep.finish("spectral-bound-probe", summary, checks.rows, checks.all_pass);
}

ExperimentOutcome run_localizer_laws(const Config& c, Reporter& rep) {
  const GridSpec grid = parse_grid(c, 20.0, 2001);
  const int n = int(c.integer_or("n", 2));
  const int m = int(c.integer_or("m", 5));
  const long battery_size = c.integer_or("battery_size", 20);
  const std::uint32_t seed = std::uint32_t(c.integer_or("seed", 7));
  if (n < 1 || m < n) config_error("n", "requires 1 <= n <= m");

  const std::vector<GridFunction> battery =
      make_battery(seed, std::size_t(battery_size), grid.half_width, grid.num_points);

  json rows = json::array();
  bool all_laws = true;
  const auto add_reports = [&](const std::vector<LawReport>& reports) {
    for (const auto& r : reports) {
      rows.push_back({{"kind", r.kind},
                      {"n", r.n},
                      {"law", r.law},
                      {"max_violation", r.max_violation},
                      {"pass", r.pass}});
      all_laws = all_laws && r.pass;
    }
  };
  add_reports(verify_band_projection_laws(n, m, battery));
  add_reports(verify_lattice_homomorphism(Localizer(LocalizerKind::urysohn, m), battery));
  add_reports(verify_lattice_homomorphism(Localizer(LocalizerKind::indicator, n), battery));

  // Strong convergence on a compactly supported datum.
  GridFunction f = c.has("initial_data")
                       ? parse_initial_data(c, grid, "hat")
                       : hat(grid.half_width, grid.num_points, 0.0, 3.0, 1.0);
  std::vector<int> n_list;
  for (int k = 1; k <= int(grid.half_width); ++k) n_list.push_back(k);
  const auto conv_ind = strong_convergence_to_identity(LocalizerKind::indicator, f, n_list);
  const auto conv_ury = strong_convergence_to_identity(LocalizerKind::urysohn, f, n_list);

  CsvTable table;
  table.header = {"n", "error_indicator", "error_urysohn"};
  bool nonincreasing = true, terminates = false;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    table.add_row({double(n_list[i]), conv_ind[i].error, conv_ury[i].error});
    if (i > 0) {
      nonincreasing = nonincreasing && conv_ind[i].error <= conv_ind[i - 1].error &&
                      conv_ury[i].error <= conv_ury[i - 1].error;
    }
    terminates = terminates || (conv_ind[i].error == 0.0 && conv_ury[i].error == 0.0);
  }
  rep.write_table("strong_convergence.csv", table);

  Checks checks;
  checks.add("localizer_laws_exact", all_laws, {{"rows", rows}});
  checks.add("convergence_nonincreasing", nonincreasing);
  checks.add("convergence_terminates_at_zero", terminates);

  json summary;
  summary["battery_size"] = battery_size;
  return rep.finish("localizer-laws", summary, checks.rows, checks.all_pass);
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "lep-onset-example",  "lep-onset-polyharmonic", "weyl-residuals", "decay-fit",
      "resolvent-audit",    "spectral-bound-probe",   "localizer-laws",
  };
  return names;
}

std::string list_experiments() {
  return
      "lep-onset-example       positivity onset of the translation-mixing semigroup on a "
      "compact window, with the datum-independent onset bound\n"
      "lep-onset-polyharmonic  positivity onset of the polyharmonic heat flow inside a "
      "compact window\n"
      "weyl-residuals          approximate-eigenvector norms and residual decay rates for "
      "the translation-mixing generator\n"
      "decay-fit               sup-norm decay exponent of the polyharmonic flow\n"
      "resolvent-audit         localized resolvent inequality and the eigenmode resolvent "
      "oracle for Laplace-transformed orbits\n"
      "spectral-bound-probe    growth of ||R(sigma)f||_E as sigma decreases toward the "
      "spectral bound 0\n"
      "localizer-laws          band-projection algebra, lattice-homomorphism laws, and "
      "strong convergence of localizers to the identity\n";
}

nlohmann::json load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path.string());
  json config;
  try {
    in >> config;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config parse error in " + path.string() + ": " + e.what());
  }
  if (!config.is_object() || !config.contains("experiment") ||
      !config.at("experiment").is_string()) {
    config_error("experiment", "expected a string naming the experiment");
  }
  return config;
}

ExperimentOutcome run_experiment(const nlohmann::json& config, const RunOptions& options) {
  if (!config.is_object() || !config.contains("experiment") ||
      !config.at("experiment").is_string()) {
    config_error("experiment", "expected a string naming the experiment");
  }
  const std::string name = config.at("experiment").get<std::string>();
  const Config c(config, "");
  Reporter rep(config, options);
  if (name == "lep-onset-example") return run_lep_onset_example(c, rep);
  if (name == "lep-onset-polyharmonic") return run_lep_onset_polyharmonic(c, rep);
  if (name == "weyl-residuals") return run_weyl_residuals(c, rep);
  if (name == "decay-fit") return run_decay_fit(c, rep);
  if (name == "resolvent-audit") return run_resolvent_audit(c, rep, options.threads);
  if (name == "spectral-bound-probe") return run_spectral_bound_probe(c, rep);
  if (name == "localizer-laws") return run_localizer_laws(c, rep);

  std::string known;
  for (const auto& n : experiment_names()) known += (known.empty() ? "" : ", ") + n;
  config_error("experiment", "unknown experiment '" + name + "'; valid names: " + known);
}

}  // namespace leplab
