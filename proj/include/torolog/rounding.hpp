#pragma once

#include <vector>

#include "torolog/fan.hpp"
#include "torolog/morphism.hpp"
#include "torolog/points.hpp"

namespace torolog {

/// Fiber of the rounding map: a torsor under a compact group with character
/// lattice `invariants`, i.e. `components` disjoint tori of rank torus_rank.
struct FiberReport {
  std::size_t torus_rank = 0;
  Integer components = 1;
  AbelianGroupInvariants invariants;

  static FiberReport from_invariants(AbelianGroupInvariants inv);
  friend bool operator==(const FiberReport&, const FiberReport&) = default;
};

/// The rounding point with the given image of each generator.
/// Radii must be >= 0 and vanish exactly off a face.
RoundingPoint encode_hom(const ToricMonoid& g, const std::vector<PolarValue>& images);

/// The rounding map.
ComplexPoint tau(const RoundingPoint& p);

/// Some rounding point over x.
RoundingPoint lift(const ComplexPoint& x);

std::complex<double> evaluate_monomial(const ComplexPoint& p, const IntVector& m);
PolarValue evaluate_monomial(const RoundingPoint& p, const IntVector& m);

FiberReport fiber_structure(const ToricMonoid& g, const MonoidFace& f);

struct RoundingRow {
  RationalCone cone;
  std::size_t orbit_dimension = 0;
  FiberReport fiber;
  bool boundary = false;  ///< nontrivial ghost
};

std::vector<RoundingRow> rounding_report(const FanOfMonoids& f);

/// Fiber of the rounded morphism over a point of the stratum of f1 in the
/// codomain of mu: cokernel of M2/Phi2^gp -> M1/Phi1^gp with Phi2 = mu^-1(Phi1).
FiberReport relative_fiber(const MonoidMorphism& mu, const MonoidFace& f1);

/// relative_fiber of N -> N^k, 1 |-> m, over the deepest stratum.
FiberReport milnor_stratum_fiber(const std::vector<Integer>& multiplicities);

}  // namespace torolog
