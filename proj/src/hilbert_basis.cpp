#include <algorithm>

#include "double_description.hpp"
#include "torolog/error.hpp"
#include "torolog/monoid.hpp"

namespace torolog {

using detail::dot;

namespace {

IntMatrix rows_matrix(std::size_t cols, const std::vector<IntVector>& rows) {
  return IntMatrix::from_rows(cols, rows);
}

// Pulling triangulation of a pointed cone by its extreme rays: cone the first
// ray over the triangulations of the facets that avoid it.
void triangulate(std::size_t p, const std::vector<IntVector>& rays,
                 const std::vector<std::size_t>& idx, std::size_t d,
                 std::vector<std::vector<std::size_t>>& out) {
  if (idx.size() == d) {
    out.push_back(idx);
    return;
  }
  std::vector<IntVector> face_rays;
  for (auto i : idx) face_rays.push_back(rays[i]);
  const RationalCone face = RationalCone::from_generators(p, face_rays);
  const IntVector& apex = rays[idx.front()];
  for (const auto& f : face.facets()) {
    if (dot(f, apex) == 0) continue;
    std::vector<std::size_t> sub;
    for (auto i : idx)
      if (dot(f, rays[i]) == 0) sub.push_back(i);
    std::vector<std::vector<std::size_t>> pieces;
    triangulate(p, rays, sub, d - 1, pieces);
    for (auto& s : pieces) {
      s.push_back(idx.front());
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
}

// Nonzero lattice points of the half-open parallelepiped spanned by the
// columns of a square nonsingular integer matrix.
std::vector<IntVector> parallelepiped_points(const IntMatrix& m) {
  const std::size_t p = m.rows();
  const SmithForm s = snf(m);
  const IntMatrix uinv = unimodular_inverse(s.u);
  RatMatrix rm(p, RatVector(p));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) rm[i][j] = m(i, j);
  const RatMatrix minv = *inverse(rm);

  std::vector<IntVector> out;
  IntVector k(p);
  while (true) {
    const IntVector x = uinv * k;
    RatVector lambda(p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) lambda[i] += minv[i][j] * x[j];
    RatVector yr(p);
    for (std::size_t i = 0; i < p; ++i) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), lambda[i].get_num_mpz_t(), lambda[i].get_den_mpz_t());
      const Rational frac = lambda[i] - Rational(fl);
      for (std::size_t r = 0; r < p; ++r) yr[r] += frac * m(r, i);
    }
    IntVector y(p);
    for (std::size_t r = 0; r < p; ++r) y[r] = yr[r].get_num();
    if (!is_zero(y)) out.push_back(y);

    std::size_t i = 0;
    for (; i < p; ++i) {
      const Integer d = s.s(i, i);
      if (++k[i] < d) break;
      k[i] = 0;
    }
    if (i == p) break;
  }
  return out;
}

std::vector<IntVector> pointed_hilbert_basis(const RationalCone& c) {
  const std::size_t p = c.ambient_rank();
  if (p == 0) return {};
  const auto& rays = c.rays();
  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> simplices;
  triangulate(p, rays, all, p, simplices);

  std::vector<IntVector> cand = rays;
  for (const auto& s : simplices) {
    std::vector<IntVector> cols;
    for (auto i : s) cols.push_back(rays[i]);
    const auto pts = parallelepiped_points(IntMatrix::from_columns(p, cols));
    cand.insert(cand.end(), pts.begin(), pts.end());
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  // x is reducible iff x - y lies in the cone for another candidate y.
  std::vector<IntVector> out;
  for (const auto& x : cand) {
    bool reducible = false;
    for (const auto& y : cand) {
      if (y == x) continue;
      IntVector d = x;
      for (std::size_t i = 0; i < p; ++i) d[i] -= y[i];
      if (c.contains(d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<IntVector> hilbert_basis(const RationalCone& c, const IntMatrix& lattice) {
  const std::size_t n = c.ambient_rank();
  if (lattice.rows() != n)
    throw Error(ErrorCode::DimensionMismatch, "lattice and cone have different ranks");
  const IntMatrix basis = lattice_basis(lattice);
  const std::size_t k = basis.cols();
  if (k == 0) return {};

  // The cone in lattice coordinates, then restricted to its own span so that
  // it becomes full-dimensional.
  const IntMatrix bt = basis.transpose();
  std::vector<IntVector> ineqs, eqs;
  for (const auto& f : c.facets()) ineqs.push_back(bt * f);
  for (const auto& e : c.equations()) eqs.push_back(bt * e);
  const RationalCone in_lattice = RationalCone::from_inequalities(k, ineqs, eqs);

  IntMatrix span_basis = IntMatrix::identity(k);
  if (!in_lattice.equations().empty())
    span_basis = kernel_basis(rows_matrix(k, in_lattice.equations()));
  const std::size_t w = span_basis.cols();
  if (w == 0) return {};
  const IntMatrix to_ambient = basis * span_basis;
  const IntMatrix st = span_basis.transpose();
  std::vector<IntVector> full_ineqs;
  for (const auto& f : in_lattice.facets()) full_ineqs.push_back(st * f);
  const RationalCone full = RationalCone::from_inequalities(w, full_ineqs);

  // Units: the saturated lattice in the lineality space.
  const std::size_t l = full.lineality().size();
  IntMatrix units(w, 0);
  if (l > 0) {
    const IntMatrix perp = kernel_basis(rows_matrix(w, full.lineality()));
    units = perp.cols() == 0 ? IntMatrix::identity(w) : kernel_basis(perp.transpose());
  }
  std::vector<IntVector> out;
  for (const auto& u : units.columns()) {
    IntVector v = to_ambient * u;
    out.push_back(v);
    for (auto& x : v) x = -x;
    out.push_back(std::move(v));
  }

  const std::size_t p = w - l;
  if (p > 0) {
    IntMatrix proj, section;
    if (l == 0) {
      proj = IntMatrix::identity(w);
      section = IntMatrix::identity(w);
    } else {
      const SmithForm s = snf(units);
      const IntMatrix uinv = unimodular_inverse(s.u);
      proj = IntMatrix(p, w);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < w; ++j) proj(i, j) = s.u(l + i, j);
      std::vector<std::size_t> keep;
      for (std::size_t j = l; j < w; ++j) keep.push_back(j);
      section = uinv.select_columns(keep);
    }
    std::vector<IntVector> pointed_rays;
    for (const auto& r : full.rays()) pointed_rays.push_back(proj * r);
    const RationalCone pointed = RationalCone::from_generators(p, pointed_rays);
    for (const auto& h : pointed_hilbert_basis(pointed)) out.push_back(to_ambient * (section * h));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace torolog
