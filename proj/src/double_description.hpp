#pragma once

#include <vector>

#include "torolog/lattice.hpp"

namespace torolog::detail {

/// A cone written as lineality span + nonnegative span of rays.
struct GeneratorSystem {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};

/// Generators of {x in Q^dim : a.x >= 0 for every a in inequalities}.
/// Rays are primitive and extreme modulo the lineality space.
GeneratorSystem double_description(std::size_t dim,
                                   const std::vector<IntVector>& inequalities);

Integer dot(const IntVector& a, const IntVector& b);

}  // namespace torolog::detail
