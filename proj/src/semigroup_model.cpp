#include "leplab/semigroup_model.hpp"

namespace leplab {

std::function<GridFunction(double)> SemigroupModel::orbit(const GridFunction& f) const {
  return [this, f](double t) { return apply(f, t); };
}

std::function<GridFunction(double)> PolyharmonicModel::orbit(const GridFunction& f) const {
  auto shared = std::make_shared<PolyharmonicFlow::Orbit>(flow_, f);
  return [shared](double t) { return shared->at(t); };
}

}  // namespace leplab
