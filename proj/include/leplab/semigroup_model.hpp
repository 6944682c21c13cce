#pragma once

#include <functional>
#include <memory>
#include <string>

#include "leplab/example_semigroup.hpp"
#include "leplab/polyharmonic.hpp"

namespace leplab {

/// Uniform interface over the two evolution families so that Laplace
/// transforms and probes can drive either one.
class SemigroupModel {
public:
  virtual ~SemigroupModel() = default;

  virtual std::string name() const = 0;
  virtual GridFunction apply(const GridFunction& f, double t) const = 0;

  /// A bound B with ||T_t f||_E <= B for all t >= 0; used for truncation
  /// budgets of improper time integrals.
  virtual double orbit_norm_bound(const GridFunction& f) const = 0;

  /// Time sweep evaluator; implementations may share per-datum precomputation.
  virtual std::function<GridFunction(double)> orbit(const GridFunction& f) const;
};

class ExampleSemigroupModel final : public SemigroupModel {
public:
  explicit ExampleSemigroupModel(ExampleSemigroup semigroup)
      : semigroup_(std::move(semigroup)) {}

  std::string name() const override { return "example"; }
  GridFunction apply(const GridFunction& f, double t) const override {
    return semigroup_.apply(f, t);
  }
  double orbit_norm_bound(const GridFunction& f) const override {
    return 3.0 * norm_mixed(f);  // the uniform bound of the mixing semigroup
  }
  const ExampleSemigroup& semigroup() const { return semigroup_; }

private:
  ExampleSemigroup semigroup_;
};

class PolyharmonicModel final : public SemigroupModel {
public:
  explicit PolyharmonicModel(FlowParams params) : flow_(params) {}

  std::string name() const override { return "polyharmonic"; }
  GridFunction apply(const GridFunction& f, double t) const override {
    return flow_.evolve(f, t);
  }
  double orbit_norm_bound(const GridFunction& f) const override {
    return flow_.kernel_l1_bound() * norm_mixed(f);
  }
  std::function<GridFunction(double)> orbit(const GridFunction& f) const override;
  const PolyharmonicFlow& flow() const { return flow_; }

private:
  PolyharmonicFlow flow_;
};

}  // namespace leplab
