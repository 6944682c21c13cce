#pragma once

#include <span>
#include <string>
#include <vector>

#include "leplab/grid_function.hpp"

namespace leplab {

enum class LocalizerKind { indicator, urysohn };

/// Positive multiplication operator that localizes onto the window [-n, n]:
///
///   indicator: m_n = 1 on [-n, n], 0 outside (a band projection);
///   urysohn:   m_n = 1 on [-(n-1), n-1], 0 outside [-n, n], linear ramps
///              (a lattice homomorphism, not a projection).
///
/// Always 0 <= m_n <= 1 and m_n <= m_{n+1} pointwise; indicator windows snap
/// to grid nodes so the band-projection algebra is exact in floating point.
class Localizer {
public:
  Localizer(LocalizerKind kind, int index);

  LocalizerKind kind() const { return kind_; }
  int index() const { return index_; }

  /// Pointwise product m_n * f. Throws if the window exceeds the grid.
  GridFunction apply(const GridFunction& f) const;

  /// The multiplier profile sampled on a grid (urysohn closed form; the
  /// indicator uses the same node snapping as apply).
  GridFunction profile(double half_width, std::size_t num_points) const;

private:
  std::vector<double> multiplier(const GridFunction& f) const;

  LocalizerKind kind_;
  int index_;
};

struct LawReport {
  std::string kind;
  int n = 0;
  std::string law;
  double max_violation = 0.0;
  bool pass = false;
};

/// Band-projection algebra on a battery: P_n P_m = P_m P_n = P_n for n <= m,
/// idempotence, 0 <= P_n f <= f for f >= 0, and the complement (I - P_n) f
/// vanishing inside the window. All comparisons exact.
std::vector<LawReport> verify_band_projection_laws(int n, int m,
                                                   std::span<const GridFunction> battery);

/// Lattice-homomorphism laws for a multiplier of either kind: |Qf| = Q|f|,
/// preservation of disjointness, and Q(f v g) = Qf v Qg. Exact comparisons.
std::vector<LawReport> verify_lattice_homomorphism(const Localizer& q,
                                                   std::span<const GridFunction> battery);

struct ConvergenceSample {
  int n = 0;
  double error = 0.0;  // ||f - P_n f||_E
};

/// The strong-convergence error sequence ||f - P_n f||_E over n_list; it is
/// nonincreasing and reaches exactly 0 once the window covers the support.
std::vector<ConvergenceSample> strong_convergence_to_identity(
    LocalizerKind kind, const GridFunction& f, std::span<const int> n_list);

}  // namespace leplab
