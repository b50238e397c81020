#include "torolog/fan.hpp"

#include <map>

#include "torolog/error.hpp"

namespace torolog {

std::string_view to_string(FanFailure f) {
  switch (f) {
    case FanFailure::RankMismatch: return "rank-mismatch";
    case FanFailure::NotSharp: return "not-sharp";
    case FanFailure::DuplicateCone: return "duplicate-cone";
    case FanFailure::MissingFace: return "missing-face";
    case FanFailure::MissingIntersection: return "missing-intersection";
    case FanFailure::GpNotFull: return "gp-not-full";
    case FanFailure::WeightConeMismatch: return "weight-cone-mismatch";
    case FanFailure::FaceIncompatible: return "face-incompatible";
  }
  return "unknown";
}

bool FanReport::has(FanFailure code) const {
  for (const auto& i : issues)
    if (i.code == code) return true;
  return false;
}

Fan Fan::trivial(std::size_t n) { return Fan{n, {RationalCone(n)}}; }

Fan FanOfMonoids::fan() const {
  Fan f{rank, {}};
  for (const auto& e : entries) f.cones.push_back(e.cone);
  return f;
}

namespace {

using ConeIndex = std::map<RationalCone, std::size_t>;

ConeIndex index_cones(const std::vector<RationalCone>& cones) {
  ConeIndex idx;
  for (std::size_t i = 0; i < cones.size(); ++i) idx.emplace(cones[i], i);
  return idx;
}

bool orthogonal_to(const RationalCone& c, const IntVector& m) {
  for (const auto& r : c.generators())
    if (pairing(r, m) != 0) return false;
  return true;
}

/// Generators of g lying on c^perp; a face when c sits inside the weight cone.
std::vector<std::size_t> perp_indices(const ToricMonoid& g, const RationalCone& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (orthogonal_to(c, g.generators()[i])) out.push_back(i);
  return out;
}

bool full_gp(const ToricMonoid& g) {
  const std::size_t n = g.ambient_rank();
  if (g.gp_rank() != n) return false;
  if (n == 0) return true;
  const Integer d = determinant(g.gp());
  return d == 1 || d == -1;
}

}  // namespace

FanReport validate_fan(const Fan& f) {
  FanReport rep;
  const auto& cones = f.cones;
  bool ranks_ok = true;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (cones[i].ambient_rank() != f.ambient_rank) {
      rep.issues.push_back({FanFailure::RankMismatch, i, i, cones[i].to_string()});
      ranks_ok = false;
    } else if (!cones[i].is_sharp()) {
      rep.issues.push_back({FanFailure::NotSharp, i, i, cones[i].to_string()});
    }
  }
  if (!ranks_ok) return rep;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      if (cones[i] == cones[j])
        rep.issues.push_back({FanFailure::DuplicateCone, i, j, cones[i].to_string()});
  const ConeIndex idx = index_cones(cones);
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (const auto& face : cones[i].faces())
      if (!idx.contains(face))
        rep.issues.push_back({FanFailure::MissingFace, i, i, face.to_string()});
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      const RationalCone meet = cones[i].intersect(cones[j]);
      if (!idx.contains(meet) || !meet.is_face_of(cones[i]) || !meet.is_face_of(cones[j]))
        rep.issues.push_back({FanFailure::MissingIntersection, i, j, meet.to_string()});
    }
  return rep;
}

FanReport validate_fan_of_monoids(const FanOfMonoids& f) {
  FanReport rep = validate_fan(f.fan());
  const auto& es = f.entries;
  bool ranks_ok = !rep.has(FanFailure::RankMismatch);
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].monoid.ambient_rank() != f.rank) {
      rep.issues.push_back({FanFailure::RankMismatch, i, i, es[i].monoid.to_string()});
      ranks_ok = false;
    } else if (!full_gp(es[i].monoid)) {
      rep.issues.push_back({FanFailure::GpNotFull, i, i, es[i].monoid.to_string()});
    }
  }
  if (!ranks_ok) return rep;
  for (std::size_t i = 0; i < es.size(); ++i)
    if (!(es[i].monoid.weight_cone() == es[i].cone))
      rep.issues.push_back({FanFailure::WeightConeMismatch, i, i, es[i].monoid.to_string()});
  for (std::size_t s = 0; s < es.size(); ++s)
    for (std::size_t t = 0; t < es.size(); ++t) {
      if (s == t || !es[t].cone.is_face_of(es[s].cone)) continue;
      const ToricMonoid& gs = es[s].monoid;
      if (!gs.weight_cone().contains(es[t].cone)) continue;  // reported above
      const MonoidFace phi = face_from_indices(gs, perp_indices(gs, es[t].cone));
      if (!monoid_equal(es[t].monoid, localize(gs, phi)))
        rep.issues.push_back({FanFailure::FaceIncompatible, t, s, es[t].monoid.to_string()});
    }
  return rep;
}

FanOfMonoids affine_atlas(const ToricMonoid& g) {
  const std::size_t n = g.ambient_rank();
  if (!full_gp(g))
    throw Error(ErrorCode::InvalidInput, "affine atlas needs a monoid generating Z^n");
  FanOfMonoids out{n, {}};
  for (const auto& phi : faces(g)) {
    RationalCone c = RationalCone::from_inequalities(n, g.generators(), phi.monoid.generators());
    out.entries.push_back({std::move(c), localize(g, phi)});
  }
  return out;
}

FanOfMonoids normal_fan_of_monoids(const Fan& f) {
  const FanReport rep = validate_fan(f);
  if (!rep.passed()) throw Error(ErrorCode::InvalidFan, std::string(to_string(rep.issues[0].code)));
  const IntMatrix m = IntMatrix::identity(f.ambient_rank);
  FanOfMonoids out{f.ambient_rank, {}};
  for (const auto& c : f.cones)
    out.entries.push_back({c, ToricMonoid(f.ambient_rank, hilbert_basis(c.dual(), m))});
  return out;
}

std::vector<Stratum> strata(const FanOfMonoids& f) {
  const FanReport rep = validate_fan_of_monoids(f);
  if (!rep.passed()) throw Error(ErrorCode::InvalidFan, std::string(to_string(rep.issues[0].code)));
  const auto& es = f.entries;
  std::vector<bool> maximal(es.size(), true);
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j)
      if (i != j && es[i].cone.dim() < es[j].cone.dim() && es[i].cone.is_face_of(es[j].cone))
        maximal[i] = false;
  std::vector<Stratum> out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::optional<Stratum> st;
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (!maximal[j] || !es[i].cone.is_face_of(es[j].cone)) continue;
      const ToricMonoid& g = es[j].monoid;
      GhostReport gr = ghost(g, face_from_indices(g, perp_indices(g, es[i].cone)));
      if (!st) {
        st = Stratum{i, es[i].cone, f.rank - es[i].cone.dim(), j, std::move(gr)};
      } else if (!(st->ghost.quotient_invariants == gr.quotient_invariants)) {
        throw Error(ErrorCode::InvalidFan, "charts disagree on the ghost of a stratum");
      }
    }
    out.push_back(std::move(*st));
  }
  return out;
}

}  // namespace torolog
