#include "torolog/monoid.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "double_description.hpp"
#include "torolog/error.hpp"

namespace torolog {

using detail::dot;

ToricMonoid::ToricMonoid(std::size_t ambient_rank, std::vector<IntVector> generators)
    : n_(ambient_rank), cone_(ambient_rank) {
  for (auto& g : generators) {
    if (g.size() != n_)
      throw Error(ErrorCode::DimensionMismatch, "generator length differs from ambient rank");
    if (is_zero(g)) continue;
    if (std::find(gens_.begin(), gens_.end(), g) != gens_.end()) continue;
    gens_.push_back(std::move(g));
  }
  cone_ = RationalCone::from_generators(n_, gens_);
  gp_ = lattice_basis(generator_matrix());
}

ToricMonoid ToricMonoid::free_monoid(std::size_t n) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return ToricMonoid(n, std::move(gens));
}

ToricMonoid ToricMonoid::lattice(std::size_t n) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    gens.push_back(e);
    e[i] = -1;
    gens.push_back(std::move(e));
  }
  return ToricMonoid(n, std::move(gens));
}

IntMatrix ToricMonoid::generator_matrix() const {
  return IntMatrix::from_columns(n_, gens_);
}

std::string ToricMonoid::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i)
    os << (i ? " " : "") << torolog::to_string(gens_[i]);
  os << ">";
  return os.str();
}

bool GhostElement::is_zero() const {
  return torolog::is_zero(free) && torolog::is_zero(torsion);
}

namespace {

void check_element(const ToricMonoid& g, const IntVector& m) {
  if (m.size() != g.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "element length differs from ambient rank");
}

bool in_lineality(const RationalCone& c, const IntVector& v) {
  for (const auto& f : c.facets())
    if (dot(f, v) != 0) return false;
  for (const auto& e : c.equations())
    if (dot(e, v) != 0) return false;
  return true;
}

// A strictly positive integer relation sum k_i e_i = 0 among generators of a
// group. Exists because the cone they span is a linear space.
IntVector positive_relation(const std::vector<IntVector>& gens, std::size_t n) {
  const std::size_t k = gens.size();
  std::vector<IntVector> ineqs;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector e(k);
    e[i] = 1;
    ineqs.push_back(std::move(e));
  }
  for (std::size_t r = 0; r < n; ++r) {
    IntVector row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = gens[i][r];
    ineqs.push_back(row);
    for (auto& x : row) x = -x;
    ineqs.push_back(std::move(row));
  }
  const auto sys = detail::double_description(k, ineqs);
  IntVector sum(k);
  for (const auto& r : sys.rays)
    for (std::size_t i = 0; i < k; ++i) sum[i] += r[i];
  return sum;
}

}  // namespace

IntVector gp_coordinates(const ToricMonoid& g, const IntVector& m) {
  check_element(g, m);
  auto c = lattice_coordinates(g.gp(), m);
  if (!c) throw Error(ErrorCode::NotInMonoid, "element is not in the group generated by the monoid");
  return *c;
}

namespace {

std::optional<IntVector> search_member(const ToricMonoid& g, const IntVector& m, bool fix_units) {
  check_element(g, m);
  const auto& gens = g.generators();
  IntVector witness(gens.size());
  if (is_zero(m)) return witness;
  const RationalCone& cone = g.exponent_cone();
  if (!cone.contains(m)) return std::nullopt;
  if (!lattice_coordinates(g.gp(), m)) return std::nullopt;

  // Units are split off; the sharp part is searched with coefficients bounded
  // by a functional that is positive on every non-unit generator.
  std::vector<std::size_t> unit_idx, sharp_idx;
  for (std::size_t i = 0; i < gens.size(); ++i)
    (in_lineality(cone, gens[i]) ? unit_idx : sharp_idx).push_back(i);
  std::vector<IntVector> unit_gens;
  for (auto i : unit_idx) unit_gens.push_back(gens[i]);
  const IntMatrix unit_matrix = IntMatrix::from_columns(g.ambient_rank(), unit_gens);

  IntVector phi(g.ambient_rank());
  for (const auto& f : cone.facets())
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] += f[i];
  std::vector<Integer> weight;
  for (auto i : sharp_idx) weight.push_back(dot(phi, gens[i]));

  std::set<std::pair<std::size_t, IntVector>> dead;
  std::optional<IntVector> unit_coords;

  std::function<bool(std::size_t, const IntVector&)> search =
      [&](std::size_t j, const IntVector& rest) -> bool {
    if (j == sharp_idx.size()) {
      unit_coords = lattice_coordinates(unit_matrix, rest);
      return unit_coords.has_value();
    }
    if (dead.count({j, rest})) return false;
    const Integer budget = dot(phi, rest);
    const IntVector& h = gens[sharp_idx[j]];
    Integer hi = budget / weight[j];
    Integer lo = 0;
    if (j + 1 == sharp_idx.size()) {
      if (budget % weight[j] != 0) {
        dead.insert({j, rest});
        return false;
      }
      lo = hi;
    }
    for (Integer a = hi; a >= lo; --a) {
      IntVector next = rest;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] -= a * h[i];
      if (!cone.contains(next)) continue;
      witness[sharp_idx[j]] = a;
      if (search(j + 1, next)) return true;
    }
    witness[sharp_idx[j]] = 0;
    dead.insert({j, rest});
    return false;
  };

  if (!search(0, m)) return std::nullopt;

  if (fix_units && !unit_idx.empty()) {
    IntVector c = *unit_coords;
    const IntVector k = positive_relation(unit_gens, g.ambient_rank());
    Integer shift = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= 0) continue;
      Integer need;
      mpz_cdiv_q(need.get_mpz_t(), Integer(-c[i]).get_mpz_t(), k[i].get_mpz_t());
      shift = std::max(shift, need);
    }
    for (std::size_t i = 0; i < c.size(); ++i) witness[unit_idx[i]] = c[i] + shift * k[i];
  }
  return witness;
}

}  // namespace

std::optional<IntVector> membership(const ToricMonoid& g, const IntVector& m) {
  return search_member(g, m, true);
}

bool contains(const ToricMonoid& g, const IntVector& m) { return search_member(g, m, false).has_value(); }

bool monoid_equal(const ToricMonoid& a, const ToricMonoid& b) {
  if (a.ambient_rank() != b.ambient_rank()) return false;
  for (const auto& x : a.generators())
    if (!contains(b, x)) return false;
  for (const auto& x : b.generators())
    if (!contains(a, x)) return false;
  return true;
}

namespace {

MonoidFace make_face(const ToricMonoid& g, std::vector<std::size_t> indices) {
  std::vector<IntVector> gens;
  for (auto i : indices) gens.push_back(g.generators()[i]);
  return MonoidFace{std::move(indices), ToricMonoid(g.ambient_rank(), std::move(gens))};
}

std::vector<std::size_t> indices_in(const ToricMonoid& g, const RationalCone& c) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (c.contains(g.generators()[i])) idx.push_back(i);
  return idx;
}

}  // namespace

MonoidFace edge(const ToricMonoid& g) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (in_lineality(g.exponent_cone(), g.generators()[i])) idx.push_back(i);
  return make_face(g, std::move(idx));
}

std::vector<MonoidFace> faces(const ToricMonoid& g) {
  std::vector<MonoidFace> out;
  for (const auto& c : g.exponent_cone().faces()) out.push_back(make_face(g, indices_in(g, c)));
  return out;
}

std::vector<PrimeIdeal> prime_ideals(const ToricMonoid& g) {
  std::vector<PrimeIdeal> out;
  for (auto& f : faces(g)) {
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (!std::binary_search(f.indices.begin(), f.indices.end(), i)) comp.push_back(i);
    out.push_back(PrimeIdeal{std::move(f), std::move(comp)});
  }
  return out;
}

MonoidFace face_from_indices(const ToricMonoid& g, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (auto i : indices)
    if (i >= g.size()) throw Error(ErrorCode::NotAFace, "face index out of range");
  MonoidFace f = make_face(g, std::move(indices));
  if (!is_face(g, f)) throw Error(ErrorCode::NotAFace, "generator subset is not a face");
  return f;
}

bool is_face(const ToricMonoid& g, const MonoidFace& f) {
  // The generators on the smallest cone face containing the candidate must be
  // exactly the candidate's generators.
  RationalCone hull = g.exponent_cone();
  for (const auto& c : g.exponent_cone().faces()) {
    bool holds_all = true;
    for (auto i : f.indices) holds_all = holds_all && c.contains(g.generators()[i]);
    if (holds_all && c.dim() < hull.dim()) hull = c;
  }
  return indices_in(g, hull) == f.indices;
}

RationalCone face_cone(const ToricMonoid& g, const MonoidFace& f) {
  return RationalCone::from_generators(g.ambient_rank(), f.monoid.generators());
}

bool face_contains(const ToricMonoid& g, const MonoidFace& f, const IntVector& m) {
  check_element(g, m);
  if (!contains(g, m)) return false;
  return rank_of(f.monoid.generators(), g.ambient_rank()) ==
         [&] {
           auto vs = f.monoid.generators();
           vs.push_back(m);
           return rank_of(vs, g.ambient_rank());
         }();
}

bool saturation_membership(const ToricMonoid& g, const IntVector& m) {
  check_element(g, m);
  return g.exponent_cone().contains(m) && lattice_coordinates(g.gp(), m).has_value();
}

ToricMonoid saturate(const ToricMonoid& g) {
  if (g.size() == 0) return g;
  return ToricMonoid(g.ambient_rank(), hilbert_basis(g.exponent_cone(), g.gp()));
}

bool is_saturated(const ToricMonoid& g) {
  const ToricMonoid sat = saturate(g);
  for (const auto& h : sat.generators())
    if (!contains(g, h)) return false;
  return true;
}

ToricMonoid localize(const ToricMonoid& g, const MonoidFace& f) {
  if (!is_face(g, f)) throw Error(ErrorCode::NotAFace, "localization at a non-face");
  std::vector<IntVector> gens = g.generators();
  for (auto i : f.indices) {
    IntVector neg = g.generators()[i];
    for (auto& x : neg) x = -x;
    gens.push_back(std::move(neg));
  }
  return ToricMonoid(g.ambient_rank(), std::move(gens));
}

GhostElement GhostReport::image(const ToricMonoid& g, const IntVector& m) const {
  const IntVector y = projection * gp_coordinates(g, m);
  GhostElement e;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), y[pivot_count - moduli.size() + i].get_mpz_t(),
               moduli[i].get_mpz_t());
    e.torsion.push_back(r);
  }
  for (std::size_t i = pivot_count; i < y.size(); ++i) e.free.push_back(y[i]);
  return e;
}

GhostReport ghost(const ToricMonoid& g, const MonoidFace& f) {
  if (!is_face(g, f)) throw Error(ErrorCode::NotAFace, "ghost requested at a non-face");
  const std::size_t r = g.gp_rank();
  std::vector<IntVector> coords;
  for (const auto& x : f.monoid.generators()) coords.push_back(gp_coordinates(g, x));
  const IntMatrix a = IntMatrix::from_columns(r, coords);
  const SmithForm s = snf(a);

  GhostReport out;
  out.face = f;
  out.quotient_invariants = quotient_invariants(r, a);
  out.projection = s.u;
  for (std::size_t i = 0; i < std::min(s.s.rows(), s.s.cols()); ++i) {
    if (s.s(i, i) == 0) break;
    ++out.pivot_count;
  }
  out.face_rank = out.pivot_count;
  // Units come first on the diagonal, so the nontrivial moduli are a suffix
  // of the pivot block.
  out.moduli = out.quotient_invariants.torsion;
  for (const auto& x : g.generators()) out.sharp_generators.push_back(out.image(g, x));
  return out;
}

}  // namespace torolog
