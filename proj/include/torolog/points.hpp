#pragma once

#include <complex>
#include <vector>

#include "torolog/angle.hpp"
#include "torolog/monoid.hpp"

namespace torolog {

/// A value in R>=0 x S^1.
struct PolarValue {
  double radius = 1.0;
  Angle angle;

  std::complex<double> complex() const { return radius * angle.unit(); }
};

/// A point of X^Gamma = Hom(Gamma, (C, *)), in normal form.
///
/// The morphism sends m to 0 unless m lies on the support face Phi; on Phi it
/// is the group character of Phi^gp with log-modulus `radial_log` and
/// argument `angle`, both given on the HNF basis of Phi^gp.
class ComplexPoint {
 public:
  ComplexPoint(ToricMonoid monoid, MonoidFace face, std::vector<double> radial_log,
               std::vector<Angle> angle);

  /// The distinguished point 1 of the dense torus.
  static ComplexPoint base_point(const ToricMonoid& g);
  /// Normal form of the point with the given value on each generator.
  static ComplexPoint from_values(const ToricMonoid& g,
                                  const std::vector<std::complex<double>>& values);

  const ToricMonoid& monoid() const noexcept { return monoid_; }
  const MonoidFace& face() const noexcept { return face_; }
  const std::vector<double>& radial_log() const noexcept { return radial_log_; }
  const std::vector<Angle>& angle() const noexcept { return angle_; }
  /// HNF basis of Phi^gp (columns).
  const IntMatrix& face_basis() const noexcept { return face_basis_; }

  /// The character on Phi^gp at x, as (log-modulus, argument).
  std::pair<double, Angle> character(const IntVector& x) const;
  /// chi^m at this point; m must lie in Gamma.
  std::complex<double> evaluate(const IntVector& m) const;

 private:
  ToricMonoid monoid_;
  MonoidFace face_;
  std::vector<double> radial_log_;
  std::vector<Angle> angle_;
  IntMatrix face_basis_;
};

/// A point of the real oriented blowup Hom(Gamma, R>=0 x S^1) in normal form.
///
/// The R>=0 part is supported exactly on the face Phi and given by
/// `radial_log` on the HNF basis of Phi^gp. The S^1 part is the group
/// character of M = Gamma^gp given by `angle` on the gp() basis.
class RoundingPoint {
 public:
  RoundingPoint(ToricMonoid monoid, MonoidFace face, std::vector<double> radial_log,
                std::vector<Angle> angle);

  const ToricMonoid& monoid() const noexcept { return monoid_; }
  const MonoidFace& face() const noexcept { return face_; }
  const std::vector<double>& radial_log() const noexcept { return radial_log_; }
  const std::vector<Angle>& angle() const noexcept { return angle_; }
  const IntMatrix& face_basis() const noexcept { return face_basis_; }

  /// The argument character on M.
  Angle argument(const IntVector& x) const;
  PolarValue evaluate(const IntVector& m) const;
  /// Image of every generator.
  std::vector<PolarValue> decode() const;

 private:
  ToricMonoid monoid_;
  MonoidFace face_;
  std::vector<double> radial_log_;
  std::vector<Angle> angle_;
  IntMatrix face_basis_;
};

bool approx_equal(const RoundingPoint& a, const RoundingPoint& b, double tol = 1e-9);
bool approx_equal(const ComplexPoint& a, const ComplexPoint& b, double tol = 1e-9);

/// Multiplies p by a point t of the dense torus (t must have the full face).
ComplexPoint torus_act(const ComplexPoint& t, const ComplexPoint& p);

}  // namespace torolog
