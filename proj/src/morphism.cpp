#include "torolog/morphism.hpp"

#include "torolog/error.hpp"

namespace torolog {

ToricMorphismData::ToricMorphismData(IntMatrix n, FanOfMonoids s, FanOfMonoids t)
    : nu(std::move(n)), source(std::move(s)), target(std::move(t)) {
  nu_dual = nu.transpose();
}

bool MorphismReport::passed() const {
  if (!rank_ok) return false;
  for (const auto& c : charts)
    if (!c.ok) return false;
  return true;
}

MorphismReport check_morphism(const ToricMorphismData& d) {
  MorphismReport rep;
  if (d.nu.cols() != d.source.rank || d.nu.rows() != d.target.rank ||
      !(d.nu_dual == d.nu.transpose())) {
    rep.rank_ok = false;
    return rep;
  }
  const std::size_t n2 = d.target.rank;
  for (std::size_t i = 0; i < d.source.entries.size(); ++i) {
    ChartCheck cc{i, std::nullopt, false, {}};
    std::vector<IntVector> image;
    for (const auto& r : d.source.entries[i].cone.generators()) image.push_back(d.nu * r);
    const RationalCone img = RationalCone::from_generators(n2, image);
    std::optional<RationalCone> meet;
    for (const auto& e : d.target.entries)
      if (e.cone.contains(img)) meet = meet ? meet->intersect(e.cone) : e.cone;
    if (!meet) {
      cc.detail = "no target cone contains the image";
      rep.charts.push_back(std::move(cc));
      continue;
    }
    for (std::size_t j = 0; j < d.target.entries.size(); ++j)
      if (d.target.entries[j].cone == *meet) cc.target = j;
    if (!cc.target) {
      cc.detail = "minimal containing cone is not in the target fan";
      rep.charts.push_back(std::move(cc));
      continue;
    }
    cc.ok = true;
    const ToricMonoid& g1 = d.source.entries[i].monoid;
    for (const auto& m : d.target.entries[*cc.target].monoid.generators()) {
      const IntVector pulled = d.nu_dual * m;
      if (!contains(g1, pulled)) {
        cc.ok = false;
        cc.detail = "nu_dual sends " + to_string(m) + " to " + to_string(pulled) + " outside the chart";
        break;
      }
    }
    rep.charts.push_back(std::move(cc));
  }
  return rep;
}

ToricMorphismData normalization_morphism(const ToricMonoid& g) {
  const std::size_t n = g.ambient_rank();
  return ToricMorphismData(IntMatrix::identity(n), affine_atlas(saturate(g)), affine_atlas(g));
}

MonoidMorphism::MonoidMorphism(IntMatrix matrix, ToricMonoid domain, ToricMonoid codomain)
    : matrix_(std::move(matrix)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (matrix_.rows() != codomain_.ambient_rank() || matrix_.cols() != domain_.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "morphism matrix has the wrong shape");
  for (const auto& g : domain_.generators())
    if (!contains(codomain_, matrix_ * g))
      throw Error(ErrorCode::NotAMorphism,
                  "generator " + to_string(g) + " maps outside the codomain");
}

MonoidMorphism compose(const MonoidMorphism& outer, const MonoidMorphism& inner) {
  if (!monoid_equal(inner.codomain(), outer.domain()))
    throw Error(ErrorCode::NotAMorphism, "morphisms are not composable");
  return MonoidMorphism(outer.matrix() * inner.matrix(), inner.domain(), outer.codomain());
}

ComplexPoint apply_to_point(const MonoidMorphism& mu, const ComplexPoint& p) {
  if (!monoid_equal(mu.codomain(), p.monoid()))
    throw Error(ErrorCode::NotAMorphism, "point does not live on the codomain");
  const ToricMonoid& g2 = mu.domain();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < g2.size(); ++i) {
    const IntVector img = mu(g2.generators()[i]);
    if (is_zero(img) || (p.face_basis().cols() > 0 && lattice_coordinates(p.face_basis(), img)))
      support.push_back(i);
  }
  MonoidFace face = face_from_indices(g2, support);
  const IntMatrix basis = lattice_basis(IntMatrix::from_columns(g2.ambient_rank(), face.monoid.generators()));
  std::vector<double> radial;
  std::vector<Angle> angle;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    const auto [lr, a] = p.character(mu(basis.column(j)));
    radial.push_back(lr);
    angle.push_back(a);
  }
  return ComplexPoint(g2, std::move(face), std::move(radial), std::move(angle));
}

}  // namespace torolog
