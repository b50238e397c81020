#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "torolog/cone.hpp"
#include "torolog/monoid.hpp"

namespace torolog {

enum class FanFailure {
  RankMismatch,
  NotSharp,
  DuplicateCone,
  MissingFace,
  MissingIntersection,
  GpNotFull,
  WeightConeMismatch,
  FaceIncompatible,
};

std::string_view to_string(FanFailure f);

struct FanIssue {
  FanFailure code;
  std::size_t first = 0;   ///< offending cone or entry
  std::size_t second = 0;  ///< partner index, when the check involves a pair
  std::string detail;
};

/// Every failed check, in check order. Empty means the input passed.
struct FanReport {
  std::vector<FanIssue> issues;
  bool passed() const noexcept { return issues.empty(); }
  bool has(FanFailure code) const;
};

/// A finite fan in N_R = R^n.
struct Fan {
  std::size_t ambient_rank = 0;
  std::vector<RationalCone> cones;

  /// The fan {0}.
  static Fan trivial(std::size_t n);
};

struct FanEntry {
  RationalCone cone;
  ToricMonoid monoid;
};

/// Cones in N_R paired with exponent monoids in M = Z^n.
struct FanOfMonoids {
  std::size_t rank = 0;
  std::vector<FanEntry> entries;

  Fan fan() const;
};

FanReport validate_fan(const Fan& f);
FanReport validate_fan_of_monoids(const FanOfMonoids& f);

/// One chart Gamma + Phi^gp per face Phi, on the weight-cone face dual to Phi.
/// Entries follow the order of faces(g). Requires Gamma^gp = Z^n.
FanOfMonoids affine_atlas(const ToricMonoid& g);

/// M ∩ sigma^vee for every cone, presented by its Hilbert basis.
FanOfMonoids normal_fan_of_monoids(const Fan& f);

struct Stratum {
  std::size_t entry = 0;  ///< index of the cone in the fan
  RationalCone cone;
  std::size_t orbit_dimension = 0;
  std::size_t chart = 0;  ///< maximal entry the ghost was computed on
  GhostReport ghost;
};

/// One torus orbit per cone. Throws InvalidFan when the input does not validate.
std::vector<Stratum> strata(const FanOfMonoids& f);

}  // namespace torolog
