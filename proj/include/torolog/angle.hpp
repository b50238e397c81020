#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include "torolog/lattice.hpp"

namespace torolog {

/// A point of S^1 written in turns, i.e. an element of R/Z.
///
/// Exact when built from rational data, real-valued otherwise. Arithmetic
/// between two exact angles stays exact; any real operand makes the result
/// real.
class Angle {
 public:
  Angle() : value_(Rational(0)) {}
  explicit Angle(const Rational& turns);
  static Angle from_real(double turns);
  /// arg(u) / 2pi for a nonzero complex number.
  static Angle from_unit(std::complex<double> u);
  /// Accepts "p/q", an integer, or a decimal (the latter yields a real angle).
  static Angle parse(std::string_view text);

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
  /// Representative in [0, 1); throws if the angle is real-valued.
  const Rational& exact() const;
  /// Representative in [0, 1).
  double turns() const;
  std::complex<double> unit() const;

  Angle operator+(const Angle& other) const;
  Angle operator-() const;
  Angle operator-(const Angle& other) const { return *this + (-other); }
  Angle& operator+=(const Angle& other) { return *this = *this + other; }
  friend Angle operator*(const Integer& k, const Angle& a);

  std::string to_string() const;

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  std::variant<Rational, double> value_;
};

/// Circular distance in turns, in [0, 1/2].
double distance(const Angle& a, const Angle& b);
/// Exact equality for exact angles, circular distance <= tol otherwise.
bool same_angle(const Angle& a, const Angle& b, double tol = 1e-9);

}  // namespace torolog
