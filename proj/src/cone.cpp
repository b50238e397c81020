#include "torolog/cone.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "double_description.hpp"
#include "torolog/error.hpp"

namespace torolog {

using detail::dot;

namespace {

std::vector<IntVector> unit_vectors(std::size_t n) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<IntVector> negated(const std::vector<IntVector>& vs) {
  std::vector<IntVector> out = vs;
  for (auto& v : out)
    for (auto& x : v) x = -x;
  return out;
}

// Rays made canonical relative to a subspace: projected onto its orthogonal
// complement, primitive, deduplicated and sorted.
std::vector<IntVector> canonical_rays(const std::vector<IntVector>& rays,
                                      const std::vector<IntVector>& subspace) {
  std::vector<IntVector> out;
  for (const auto& r : rays) {
    IntVector p = project_out(r, subspace);
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_rank(std::size_t n, const std::vector<IntVector>& vs) {
  for (const auto& v : vs)
    if (v.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "vector length differs from cone ambient rank");
}

}  // namespace

RationalCone::RationalCone(std::size_t n) : n_(n), equations_(unit_vectors(n)) {}

RationalCone::RationalCone(std::size_t n, std::vector<IntVector> lineality,
                           std::vector<IntVector> rays, std::vector<IntVector> equations,
                           std::vector<IntVector> facets)
    : n_(n),
      lineality_(std::move(lineality)),
      rays_(std::move(rays)),
      equations_(std::move(equations)),
      facets_(std::move(facets)) {}

RationalCone RationalCone::build(std::size_t n, const std::vector<IntVector>& lines,
                                 const std::vector<IntVector>& rays) {
  // Dual description first: its lineality is the orthogonal complement of the
  // cone, its rays are the facet normals.
  std::vector<IntVector> gens = rays;
  gens.insert(gens.end(), lines.begin(), lines.end());
  const auto neg = negated(lines);
  gens.insert(gens.end(), neg.begin(), neg.end());
  const detail::GeneratorSystem dual = detail::double_description(n, gens);

  std::vector<IntVector> ineqs = dual.rays;
  ineqs.insert(ineqs.end(), dual.lineality.begin(), dual.lineality.end());
  const auto neg_eq = negated(dual.lineality);
  ineqs.insert(ineqs.end(), neg_eq.begin(), neg_eq.end());
  const detail::GeneratorSystem primal = detail::double_description(n, ineqs);

  auto lineality = canonical_span_basis(primal.lineality, n);
  auto equations = canonical_span_basis(dual.lineality, n);
  auto canon_rays = canonical_rays(primal.rays, lineality);
  auto canon_facets = canonical_rays(dual.rays, equations);
  return RationalCone(n, std::move(lineality), std::move(canon_rays), std::move(equations),
                      std::move(canon_facets));
}

RationalCone RationalCone::from_generators(std::size_t n,
                                           const std::vector<IntVector>& gens) {
  return from_generators(n, {}, gens);
}

RationalCone RationalCone::from_generators(std::size_t n, const std::vector<IntVector>& lines,
                                           const std::vector<IntVector>& rays) {
  check_rank(n, lines);
  check_rank(n, rays);
  return build(n, lines, rays);
}

RationalCone RationalCone::from_inequalities(std::size_t n,
                                             const std::vector<IntVector>& inequalities,
                                             const std::vector<IntVector>& equations) {
  check_rank(n, inequalities);
  check_rank(n, equations);
  std::vector<IntVector> ineqs = inequalities;
  ineqs.insert(ineqs.end(), equations.begin(), equations.end());
  const auto neg = negated(equations);
  ineqs.insert(ineqs.end(), neg.begin(), neg.end());
  const detail::GeneratorSystem g = detail::double_description(n, ineqs);
  return build(n, g.lineality, g.rays);
}

RationalCone RationalCone::full_space(std::size_t n) {
  return RationalCone(n, unit_vectors(n), {}, {}, {});
}

std::vector<IntVector> RationalCone::generators() const {
  std::vector<IntVector> out = rays_;
  out.insert(out.end(), lineality_.begin(), lineality_.end());
  const auto neg = negated(lineality_);
  out.insert(out.end(), neg.begin(), neg.end());
  return out;
}

bool RationalCone::contains(const IntVector& v) const {
  if (v.size() != n_)
    throw Error(ErrorCode::DimensionMismatch, "point and cone have different ranks");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) < 0) return false;
  return true;
}

bool RationalCone::contains(const RatVector& v) const {
  if (v.size() != n_)
    throw Error(ErrorCode::DimensionMismatch, "point and cone have different ranks");
  auto eval = [&](const IntVector& a) {
    Rational s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += a[i] * v[i];
    return s;
  };
  for (const auto& e : equations_)
    if (eval(e) != 0) return false;
  for (const auto& f : facets_)
    if (eval(f) < 0) return false;
  return true;
}

bool RationalCone::contains(const RationalCone& other) const {
  if (other.n_ != n_)
    throw Error(ErrorCode::DimensionMismatch, "cones have different ranks");
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

RationalCone RationalCone::dual() const {
  return RationalCone(n_, equations_, facets_, lineality_, rays_);
}

std::vector<RationalCone> RationalCone::faces() const {
  // A face is cut out by a set of facet hyperplanes and is generated by the
  // lineality space plus the rays it contains; index sets of rays identify it.
  std::vector<std::vector<std::size_t>> tight;
  for (const auto& f : facets_) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (dot(f, rays_[i]) == 0) t.push_back(i);
    tight.push_back(std::move(t));
  }
  std::vector<std::size_t> all(rays_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> queue{all};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& t : tight) {
      std::vector<std::size_t> meet;
      std::set_intersection(queue[q].begin(), queue[q].end(), t.begin(), t.end(),
                            std::back_inserter(meet));
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }

  std::vector<RationalCone> out;
  out.reserve(seen.size());
  for (const auto& idx : seen) {
    if (idx.size() == rays_.size()) {
      out.push_back(*this);
      continue;
    }
    std::vector<IntVector> rs;
    for (auto i : idx) rs.push_back(rays_[i]);
    out.push_back(build(n_, lineality_, rs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RationalCone RationalCone::intersect(const RationalCone& other) const {
  if (other.n_ != n_)
    throw Error(ErrorCode::DimensionMismatch, "cones have different ranks");
  std::vector<IntVector> ineqs = facets_;
  ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
  std::vector<IntVector> eqs = equations_;
  eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
  return from_inequalities(n_, ineqs, eqs);
}

bool RationalCone::is_face_of(const RationalCone& other) const {
  if (other.n_ != n_)
    throw Error(ErrorCode::DimensionMismatch, "cones have different ranks");
  if (!other.contains(*this)) return false;
  const auto fs = other.faces();
  return std::find(fs.begin(), fs.end(), *this) != fs.end();
}

RationalCone RationalCone::edge() const {
  std::vector<IntVector> eqs = equations_;
  eqs.insert(eqs.end(), facets_.begin(), facets_.end());
  return RationalCone(n_, lineality_, {}, canonical_span_basis(eqs, n_), {});
}

std::string RationalCone::to_string() const {
  std::ostringstream os;
  os << "cone[";
  bool first = true;
  for (const auto& r : rays_) {
    os << (first ? "" : " ") << torolog::to_string(r);
    first = false;
  }
  for (const auto& l : lineality_) {
    os << (first ? "" : " ") << "+-" << torolog::to_string(l);
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace torolog
