#pragma once

// Solving for group characters Z^s -> R and Z^s -> R/Z from their values on
// a generating set.

#include <vector>

#include "torolog/angle.hpp"
#include "torolog/lattice.hpp"

namespace torolog::detail {

/// rho with rows[i].rho == logs[i]; rows generate a rank-s lattice.
/// Throws RelationViolated when exp of the fitted values differs from exp of
/// the given values by more than rel_tol (relative).
std::vector<double> solve_log_character(const std::vector<IntVector>& rows, std::size_t s,
                                        const std::vector<double>& logs, double rel_tol);

/// theta with rows[i].theta == angles[i] mod 1; rows must generate Z^s.
/// Exact angles are checked exactly, real ones to `tol` turns.
std::vector<Angle> solve_angle_character(const std::vector<IntVector>& rows, std::size_t s,
                                         const std::vector<Angle>& angles, double tol);

/// Some theta on Z^r whose restriction to the sublattice spanned by the
/// (independent) columns of `sub` is `values`.
std::vector<Angle> extend_angle_character(const IntMatrix& sub, const std::vector<Angle>& values);

Angle divide(const Angle& a, const Integer& d);

}  // namespace torolog::detail
