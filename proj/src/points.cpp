#include "torolog/points.hpp"

#include <cmath>

#include "characters.hpp"
#include "torolog/error.hpp"

namespace torolog {

namespace detail {

std::vector<double> solve_log_character(const std::vector<IntVector>& rows, std::size_t s,
                                        const std::vector<double>& logs, double rel_tol) {
  std::vector<IntVector> chosen;
  std::vector<double> chosen_logs;
  for (std::size_t i = 0; i < rows.size() && chosen.size() < s; ++i) {
    chosen.push_back(rows[i]);
    if (rank_of(chosen, s) < chosen.size()) {
      chosen.pop_back();
      continue;
    }
    chosen_logs.push_back(logs[i]);
  }
  if (chosen.size() != s)
    throw Error(ErrorCode::InvalidInput, "values do not determine a character");
  std::vector<double> rho(s, 0.0);
  if (s > 0) {
    RatMatrix m;
    for (const auto& r : chosen) m.push_back(to_rational(r));
    const RatMatrix inv = *inverse(m);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) rho[i] += inv[i][j].get_d() * chosen_logs[j];
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double fit = 0.0;
    for (std::size_t j = 0; j < s; ++j) fit += rows[i][j].get_d() * rho[j];
    if (std::abs(std::expm1(fit - logs[i])) > rel_tol)
      throw Error(ErrorCode::RelationViolated, "radii violate a monoid relation");
  }
  return rho;
}

std::vector<Angle> solve_angle_character(const std::vector<IntVector>& rows, std::size_t s,
                                         const std::vector<Angle>& angles, double tol) {
  std::vector<Angle> theta(s);
  if (rows.empty()) {
    if (s != 0) throw Error(ErrorCode::InvalidInput, "values do not determine a character");
    return theta;
  }
  const IntMatrix g = IntMatrix::from_rows(s, rows);
  const SmithForm f = snf(g);
  for (std::size_t j = 0; j < s; ++j)
    if (f.s(j, j) != 1)
      throw Error(ErrorCode::InvalidInput, "generators do not span the character lattice");
  std::vector<Angle> b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) b[i] += f.u(i, j) * angles[j];
  for (std::size_t i = s; i < rows.size(); ++i)
    if (!same_angle(b[i], Angle(), tol))
      throw Error(ErrorCode::RelationViolated, "angles violate a monoid relation");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) theta[i] += f.v(i, j) * b[j];
  return theta;
}

Angle divide(const Angle& a, const Integer& d) {
  if (a.is_exact()) return Angle(a.exact() / Rational(d));
  return Angle::from_real(a.turns() / d.get_d());
}

std::vector<Angle> extend_angle_character(const IntMatrix& sub, const std::vector<Angle>& values) {
  const std::size_t r = sub.rows();
  const std::size_t s = sub.cols();
  std::vector<Angle> theta(r);
  if (s == 0) return theta;
  const SmithForm f = snf(sub.transpose());
  std::vector<Angle> phi(r);
  for (std::size_t j = 0; j < s; ++j) {
    Angle c;
    for (std::size_t k = 0; k < s; ++k) c += f.u(j, k) * values[k];
    if (f.s(j, j) == 0) throw Error(ErrorCode::InvalidInput, "sublattice basis is dependent");
    phi[j] = divide(c, f.s(j, j));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) theta[i] += f.v(i, j) * phi[j];
  return theta;
}

}  // namespace detail

namespace {

IntMatrix basis_of(const ToricMonoid& g, const MonoidFace& f) {
  return lattice_basis(IntMatrix::from_columns(g.ambient_rank(), f.monoid.generators()));
}

void check_face(const ToricMonoid& g, const MonoidFace& f) {
  if (!is_face(g, f)) throw Error(ErrorCode::NotAFace, "support is not a face of the monoid");
}

std::optional<IntVector> face_coords(const IntMatrix& basis, const IntVector& m) {
  if (basis.cols() == 0) {
    if (is_zero(m)) return IntVector{};
    return std::nullopt;
  }
  return lattice_coordinates(basis, m);
}

}  // namespace

ComplexPoint::ComplexPoint(ToricMonoid monoid, MonoidFace face, std::vector<double> radial_log,
                           std::vector<Angle> angle)
    : monoid_(std::move(monoid)),
      face_(std::move(face)),
      radial_log_(std::move(radial_log)),
      angle_(std::move(angle)) {
  check_face(monoid_, face_);
  face_basis_ = basis_of(monoid_, face_);
  if (radial_log_.size() != face_basis_.cols() || angle_.size() != face_basis_.cols())
    throw Error(ErrorCode::DimensionMismatch, "point coordinates do not match the face rank");
}

ComplexPoint ComplexPoint::base_point(const ToricMonoid& g) {
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  MonoidFace full = face_from_indices(g, all);
  const std::size_t r = g.gp_rank();
  return ComplexPoint(g, std::move(full), std::vector<double>(r, 0.0), std::vector<Angle>(r));
}

ComplexPoint ComplexPoint::from_values(const ToricMonoid& g,
                                       const std::vector<std::complex<double>>& values) {
  if (values.size() != g.size())
    throw Error(ErrorCode::DimensionMismatch, "one value per generator expected");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != std::complex<double>(0.0, 0.0)) support.push_back(i);
  MonoidFace face = face_from_indices(g, support);
  const IntMatrix basis = basis_of(g, face);
  std::vector<IntVector> rows;
  std::vector<double> logs;
  std::vector<Angle> angles;
  for (auto i : support) {
    rows.push_back(*face_coords(basis, g.generators()[i]));
    logs.push_back(std::log(std::abs(values[i])));
    angles.push_back(Angle::from_unit(values[i]));
  }
  auto rho = detail::solve_log_character(rows, basis.cols(), logs, 1e-9);
  auto theta = detail::solve_angle_character(rows, basis.cols(), angles, 1e-9);
  return ComplexPoint(g, std::move(face), std::move(rho), std::move(theta));
}

std::pair<double, Angle> ComplexPoint::character(const IntVector& x) const {
  const auto c = face_coords(face_basis_, x);
  if (!c) throw Error(ErrorCode::NotInMonoid, "element is not in the group of the support face");
  double lr = 0.0;
  Angle a;
  for (std::size_t i = 0; i < c->size(); ++i) {
    lr += (*c)[i].get_d() * radial_log_[i];
    a += (*c)[i] * angle_[i];
  }
  return {lr, a};
}

std::complex<double> ComplexPoint::evaluate(const IntVector& m) const {
  if (!contains(monoid_, m)) throw Error(ErrorCode::NotInMonoid, "monomial is not in the monoid");
  if (!face_coords(face_basis_, m)) return {0.0, 0.0};
  const auto [lr, a] = character(m);
  return std::exp(lr) * a.unit();
}

RoundingPoint::RoundingPoint(ToricMonoid monoid, MonoidFace face, std::vector<double> radial_log,
                             std::vector<Angle> angle)
    : monoid_(std::move(monoid)),
      face_(std::move(face)),
      radial_log_(std::move(radial_log)),
      angle_(std::move(angle)) {
  check_face(monoid_, face_);
  face_basis_ = basis_of(monoid_, face_);
  if (radial_log_.size() != face_basis_.cols())
    throw Error(ErrorCode::DimensionMismatch, "radial coordinates do not match the face rank");
  if (angle_.size() != monoid_.gp_rank())
    throw Error(ErrorCode::DimensionMismatch, "angle coordinates do not match the group rank");
}

Angle RoundingPoint::argument(const IntVector& x) const {
  const IntVector c = gp_coordinates(monoid_, x);
  Angle a;
  for (std::size_t i = 0; i < c.size(); ++i) a += c[i] * angle_[i];
  return a;
}

namespace {

PolarValue evaluate_unchecked(const RoundingPoint& p, const IntVector& m) {
  PolarValue v;
  v.angle = p.argument(m);
  const auto c = face_coords(p.face_basis(), m);
  if (!c) {
    v.radius = 0.0;
    return v;
  }
  double lr = 0.0;
  for (std::size_t i = 0; i < c->size(); ++i) lr += (*c)[i].get_d() * p.radial_log()[i];
  v.radius = std::exp(lr);
  return v;
}

}  // namespace

PolarValue RoundingPoint::evaluate(const IntVector& m) const {
  if (!contains(monoid_, m)) throw Error(ErrorCode::NotInMonoid, "monomial is not in the monoid");
  return evaluate_unchecked(*this, m);
}

std::vector<PolarValue> RoundingPoint::decode() const {
  std::vector<PolarValue> out;
  for (const auto& g : monoid_.generators()) out.push_back(evaluate_unchecked(*this, g));
  return out;
}

bool approx_equal(const RoundingPoint& a, const RoundingPoint& b, double tol) {
  if (!(a.monoid() == b.monoid()) || !(a.face() == b.face())) return false;
  for (std::size_t i = 0; i < a.radial_log().size(); ++i)
    if (std::abs(a.radial_log()[i] - b.radial_log()[i]) > tol) return false;
  for (std::size_t i = 0; i < a.angle().size(); ++i)
    if (!same_angle(a.angle()[i], b.angle()[i], tol)) return false;
  return true;
}

bool approx_equal(const ComplexPoint& a, const ComplexPoint& b, double tol) {
  if (!(a.monoid() == b.monoid()) || !(a.face() == b.face())) return false;
  for (std::size_t i = 0; i < a.radial_log().size(); ++i)
    if (std::abs(a.radial_log()[i] - b.radial_log()[i]) > tol) return false;
  for (std::size_t i = 0; i < a.angle().size(); ++i)
    if (!same_angle(a.angle()[i], b.angle()[i], tol)) return false;
  return true;
}

ComplexPoint torus_act(const ComplexPoint& t, const ComplexPoint& p) {
  if (!(t.monoid() == p.monoid()))
    throw Error(ErrorCode::InvalidInput, "torus point and point live on different monoids");
  if (t.face().indices.size() != t.monoid().size())
    throw Error(ErrorCode::InvalidInput, "acting point is not in the dense torus");
  std::vector<double> radial = p.radial_log();
  std::vector<Angle> angle = p.angle();
  for (std::size_t i = 0; i < p.face_basis().cols(); ++i) {
    const auto [lr, a] = t.character(p.face_basis().column(i));
    radial[i] += lr;
    angle[i] += a;
  }
  return ComplexPoint(p.monoid(), p.face(), std::move(radial), std::move(angle));
}

}  // namespace torolog
