#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "torolog/points.hpp"
#include "torolog/rounding.hpp"

namespace torolog {

/// An element of the stalk C* (+)_Phi Gamma in normal form: a unit together
/// with the reduced representative of its class modulo Phi^gp.
struct StalkElement {
  std::complex<double> unit{1.0, 0.0};
  IntVector representative;
};

/// Stalk of the log structure associated to the chart Gamma at a point x
/// of the stratum of Phi.
///
/// Classes (u, m) and (u * x(d), m - d) agree for d in Phi^gp. The
/// representative of m is its HNF reduction modulo Phi^gp, which need not lie
/// in Gamma; the difference m - rep(m) is absorbed into the unit through x.
class LogStalk {
 public:
  explicit LogStalk(ComplexPoint x);

  const ComplexPoint& point() const noexcept { return x_; }
  const MonoidFace& face() const noexcept { return x_.face(); }
  const GhostReport& ghost() const noexcept { return ghost_; }
  /// Phi = Gamma: only units.
  bool trivial() const noexcept { return x_.face().indices.size() == x_.monoid().size(); }

  IntVector reduce(const IntVector& m) const;
  /// The twist x(d) for d in Phi^gp.
  std::complex<double> twist(const IntVector& d) const;
  StalkElement element(std::complex<double> unit, const IntVector& m) const;
  StalkElement multiply(const StalkElement& a, const StalkElement& b) const;
  /// The structure map to the local ring, evaluated at x.
  std::complex<double> structure_value(const StalkElement& e) const;
  std::string describe() const;

 private:
  ComplexPoint x_;
  GhostReport ghost_;
};

/// Stalk at the distinguished point of the stratum of f.
LogStalk associated_log_stalk(const ToricMonoid& g, const MonoidFace& f);

enum class LogPointKind { Empty, Trivial, Standard, Polar };

std::string_view to_string(LogPointKind k);

struct LogPointDescriptor {
  LogPointKind kind;
  std::string monoid;      ///< the monoid mapping to (C, *)
  std::string evaluation;  ///< the structure morphism
};

LogPointDescriptor log_point(LogPointKind kind);

/// (lambda, m) |-> lambda * delta_0^m.
std::complex<double> standard_log_point_map(std::complex<double> lambda, const Integer& m);
/// (r, u) |-> r * u.
std::complex<double> polar_log_point_map(const PolarValue& v);

struct PointStratum {
  MonoidFace face;
  std::size_t orbit_dimension = 0;  ///< rank of Phi^gp
  FiberReport fiber;                ///< fiber over a point of the stratum
};

/// Points of X^Gamma with values in a log point of the given kind, stratified
/// by support face. Strata follow the order of faces(g).
std::vector<PointStratum> points_of(const ToricMonoid& g, LogPointKind kind);

/// Samples points on the stratum of f and compares the rounding fiber there
/// with the fiber of the restricted log structure at that point.
bool strict_restriction_check(const ToricMonoid& g, const MonoidFace& f, std::size_t samples,
                              std::uint64_t seed = 1);

}  // namespace torolog
