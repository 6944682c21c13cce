#include "leplab/battery.hpp"

#include <cmath>
#include <stdexcept>

namespace leplab {

GridFunction random_smooth(std::mt19937& rng, double half_width,
                           std::size_t num_points) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> center(-8.0, 8.0);
  std::uniform_real_distribution<double> width(0.5, 2.0);
  struct Bump {
    double a, c, s;
  };
  std::vector<Bump> bumps(5);
  for (auto& b : bumps) b = {amp(rng), center(rng), width(rng)};
  return GridFunction::sample(half_width, num_points, [bumps](double x) {
    double v = 0.0;
    for (const auto& b : bumps) {
      const double z = (x - b.c) / b.s;
      v += b.a * std::exp(-0.5 * z * z);
    }
    return v;
  });
}

GridFunction random_positive_compact(std::mt19937& rng, double half_width,
                                     std::size_t num_points) {
  std::uniform_real_distribution<double> amp(0.2, 1.0);
  std::uniform_real_distribution<double> center(-6.0, 6.0);
  std::uniform_real_distribution<double> width(0.5, 2.0);
  struct Hat {
    double a, c, w;
  };
  std::vector<Hat> hats(4);
  for (auto& h : hats) h = {amp(rng), center(rng), width(rng)};
  return GridFunction::sample(half_width, num_points, [hats](double x) {
    double v = 0.0;
    for (const auto& h : hats) {
      const double d = std::abs(x - h.c);
      if (d < h.w) v += h.a * (1.0 - d / h.w);
    }
    return v;
  });
}

GridFunction random_sign_changing(std::mt19937& rng, double half_width,
                                  std::size_t num_points) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    GridFunction f = random_smooth(rng, half_width, num_points);
    bool has_pos = false, has_neg = false;
    for (std::size_t k = 0; k < f.size(); ++k) {
      has_pos = has_pos || f.real_value(k) > 0;
      has_neg = has_neg || f.real_value(k) < 0;
    }
    if (has_pos && has_neg) return f;
  }
  throw std::runtime_error("random_sign_changing: generator failed to change sign");
}

std::vector<GridFunction> make_battery(std::uint32_t seed, std::size_t count,
                                       double half_width, std::size_t num_points) {
  std::mt19937 rng(seed);
  std::vector<GridFunction> battery;
  battery.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    battery.push_back(random_smooth(rng, half_width, num_points));
  }
  return battery;
}

}  // namespace leplab
