#include "torolog/angle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "torolog/error.hpp"

namespace torolog {

namespace {

Rational reduce(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

double reduce(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

}  // namespace

Angle::Angle(const Rational& turns) : value_(reduce(turns)) {}

Angle Angle::from_real(double turns) {
  Angle a;
  a.value_ = reduce(turns);
  return a;
}

Angle Angle::from_unit(std::complex<double> u) {
  if (u == std::complex<double>(0.0, 0.0))
    throw Error(ErrorCode::InvalidInput, "angle of the zero complex number");
  return from_real(std::arg(u) / (2.0 * std::numbers::pi));
}

Angle Angle::parse(std::string_view text) {
  const std::string s(text);
  if (s.find_first_of(".eE") != std::string::npos) {
    try {
      std::size_t used = 0;
      const double x = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return from_real(x);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "malformed angle '" + s + "'");
    }
  }
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::InvalidInput, "malformed angle '" + s + "'");
  q.canonicalize();
  return Angle(q);
}

const Rational& Angle::exact() const {
  if (!is_exact()) throw Error(ErrorCode::InvalidInput, "angle is not exact");
  return std::get<Rational>(value_);
}

double Angle::turns() const {
  if (is_exact()) return std::get<Rational>(value_).get_d();
  return std::get<double>(value_);
}

std::complex<double> Angle::unit() const {
  return std::polar(1.0, 2.0 * std::numbers::pi * turns());
}

Angle Angle::operator+(const Angle& other) const {
  if (is_exact() && other.is_exact()) return Angle(exact() + other.exact());
  return from_real(turns() + other.turns());
}

Angle Angle::operator-() const {
  if (is_exact()) return Angle(-exact());
  return from_real(-turns());
}

Angle operator*(const Integer& k, const Angle& a) {
  if (a.is_exact()) return Angle(Rational(k) * a.exact());
  return Angle::from_real(k.get_d() * a.turns());
}

std::string Angle::to_string() const {
  if (is_exact()) return exact().get_str();
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(value_);
  std::string s = os.str();
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

double distance(const Angle& a, const Angle& b) {
  const double d = (a - b).turns();
  return std::min(d, 1.0 - d);
}

bool same_angle(const Angle& a, const Angle& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return distance(a, b) <= tol;
}

}  // namespace torolog
