#pragma once

// Standard examples shared by several test files.

#include "oracles.hpp"
#include "torolog/fan.hpp"

namespace fixtures {

using oracle::iv;
using torolog::FanOfMonoids;
using torolog::RationalCone;
using torolog::ToricMonoid;

inline RationalCone cone(std::size_t n, std::vector<torolog::IntVector> rays) {
  return RationalCone::from_generators(n, rays);
}

/// The four charts of C^2.
inline FanOfMonoids c2_atlas() {
  return FanOfMonoids{2,
                      {{cone(2, {iv({1, 0}), iv({0, 1})}), ToricMonoid::free_monoid(2)},
                       {cone(2, {iv({0, 1})}), ToricMonoid(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})})},
                       {cone(2, {iv({1, 0})}), ToricMonoid(2, {iv({1, 0}), iv({0, 1}), iv({0, -1})})},
                       {RationalCone(2), ToricMonoid::lattice(2)}}};
}

/// P^1: cones R>=0, R<=0, {0} with monoids N, -N, Z.
inline FanOfMonoids p1() {
  return FanOfMonoids{1,
                      {{cone(1, {iv({1})}), ToricMonoid(1, {iv({1})})},
                       {cone(1, {iv({-1})}), ToricMonoid(1, {iv({-1})})},
                       {RationalCone(1), ToricMonoid::lattice(1)}}};
}

}  // namespace fixtures
