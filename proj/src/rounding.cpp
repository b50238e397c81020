#include "torolog/rounding.hpp"

#include "characters.hpp"
#include "torolog/error.hpp"

namespace torolog {

FiberReport FiberReport::from_invariants(AbelianGroupInvariants inv) {
  FiberReport r;
  r.torus_rank = inv.rank;
  r.components = inv.torsion_order();
  r.invariants = std::move(inv);
  return r;
}

RoundingPoint encode_hom(const ToricMonoid& g, const std::vector<PolarValue>& images) {
  if (images.size() != g.size())
    throw Error(ErrorCode::DimensionMismatch, "one image per generator expected");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!(images[i].radius >= 0.0)) throw Error(ErrorCode::InvalidInput, "negative radius");
    if (images[i].radius > 0.0) support.push_back(i);
  }
  MonoidFace face = face_from_indices(g, support);
  const IntMatrix basis =
      lattice_basis(IntMatrix::from_columns(g.ambient_rank(), face.monoid.generators()));
  std::vector<IntVector> rows;
  std::vector<double> logs;
  for (auto i : support) {
    rows.push_back(*lattice_coordinates(basis, g.generators()[i]));
    logs.push_back(std::log(images[i].radius));
  }
  auto rho = detail::solve_log_character(rows, basis.cols(), logs, 1e-9);
  std::vector<IntVector> all_rows;
  std::vector<Angle> angles;
  for (std::size_t i = 0; i < g.size(); ++i) {
    all_rows.push_back(gp_coordinates(g, g.generators()[i]));
    angles.push_back(images[i].angle);
  }
  auto theta = detail::solve_angle_character(all_rows, g.gp_rank(), angles, 1e-9);
  return RoundingPoint(g, std::move(face), std::move(rho), std::move(theta));
}

ComplexPoint tau(const RoundingPoint& p) {
  std::vector<Angle> angle;
  for (std::size_t j = 0; j < p.face_basis().cols(); ++j)
    angle.push_back(p.argument(p.face_basis().column(j)));
  return ComplexPoint(p.monoid(), p.face(), p.radial_log(), std::move(angle));
}

RoundingPoint lift(const ComplexPoint& x) {
  const ToricMonoid& g = x.monoid();
  IntMatrix sub(g.gp_rank(), x.face_basis().cols());
  for (std::size_t j = 0; j < sub.cols(); ++j) {
    const IntVector c = gp_coordinates(g, x.face_basis().column(j));
    for (std::size_t i = 0; i < sub.rows(); ++i) sub(i, j) = c[i];
  }
  return RoundingPoint(g, x.face(), x.radial_log(), detail::extend_angle_character(sub, x.angle()));
}

std::complex<double> evaluate_monomial(const ComplexPoint& p, const IntVector& m) {
  return p.evaluate(m);
}

PolarValue evaluate_monomial(const RoundingPoint& p, const IntVector& m) { return p.evaluate(m); }

FiberReport fiber_structure(const ToricMonoid& g, const MonoidFace& f) {
  if (!is_face(g, f)) throw Error(ErrorCode::NotAFace, "not a face of the monoid");
  return FiberReport::from_invariants(ghost(g, f).quotient_invariants);
}

std::vector<RoundingRow> rounding_report(const FanOfMonoids& f) {
  std::vector<RoundingRow> rows;
  for (auto& s : strata(f)) {
    FiberReport fr = FiberReport::from_invariants(s.ghost.quotient_invariants);
    const bool boundary = fr.torus_rank > 0 || fr.components > 1;
    rows.push_back({std::move(s.cone), s.orbit_dimension, std::move(fr), boundary});
  }
  return rows;
}

FiberReport relative_fiber(const MonoidMorphism& mu, const MonoidFace& f1) {
  const ToricMonoid& g1 = mu.codomain();
  if (!is_face(g1, f1)) throw Error(ErrorCode::NotAFace, "not a face of the codomain");
  std::vector<IntVector> sub;
  for (const auto& m : f1.monoid.generators()) sub.push_back(gp_coordinates(g1, m));
  const IntMatrix& b2 = mu.domain().gp();
  for (std::size_t j = 0; j < b2.cols(); ++j) sub.push_back(gp_coordinates(g1, mu(b2.column(j))));
  const std::size_t r = g1.gp_rank();
  return FiberReport::from_invariants(quotient_invariants(r, IntMatrix::from_columns(r, sub)));
}

FiberReport milnor_stratum_fiber(const std::vector<Integer>& multiplicities) {
  const std::size_t k = multiplicities.size();
  if (k == 0) throw Error(ErrorCode::InvalidInput, "no multiplicities");
  for (const auto& m : multiplicities)
    if (m < 1) throw Error(ErrorCode::InvalidInput, "multiplicities must be positive");
  const IntMatrix mu = IntMatrix::from_columns(k, std::vector<IntVector>{multiplicities});
  const MonoidMorphism m(mu, ToricMonoid::free_monoid(1), ToricMonoid::free_monoid(k));
  return relative_fiber(m, face_from_indices(m.codomain(), {}));
}

}  // namespace torolog
