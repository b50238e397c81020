// Acceptance run: one PASS/FAIL line per criterion, each with a time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "torolog/error.hpp"
#include "torolog/fan.hpp"
#include "torolog/log_structure.hpp"
#include "torolog/morphism.hpp"
#include "torolog/rounding.hpp"
#include "torolog/snc.hpp"

using namespace torolog;
using fixtures::cone;
using oracle::iv;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void expect(bool c, const std::string& what) {
    if (!c && ok) note = what;
    ok = ok && c;
  }
};

int failures = 0;

void criterion(const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && s >= budget_s) {
    o.ok = false;
    o.note = "over the time budget";
  }
  if (!o.ok) ++failures;
  std::printf("%s  %-38s %8.3fs / %.0fs%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), s, budget_s,
              o.note.empty() ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
}

std::vector<Rational> rat(const IntVector& v) {
  std::vector<Rational> r;
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

// Rank by rational elimination.
std::size_t rank_of(const std::vector<IntVector>& vs, std::size_t n) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vs) rows.push_back(rat(v));
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

RationalCone random_cone(std::mt19937& rng, std::vector<IntVector>& gens) {
  const std::size_t n = 1 + rng() % 4;
  gens = oracle::random_vectors(rng, n, rng() % 6, -3, 3);
  return RationalCone::from_generators(n, gens);
}

bool in_lattice_span(const std::vector<IntVector>& basis, const IntVector& v, long bound) {
  if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
  bool found = false;
  std::vector<long> c(basis.size(), -bound);
  while (!found) {
    IntVector s(v.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) s[j] += c[i] * basis[i][j];
    found = s == v;
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound) c[i++] = -bound;
    if (i == c.size()) break;
    ++c[i];
  }
  return found;
}

// Number of torsion classes of Z^n / span(face generators), by enumerating a
// box of candidates and grouping them modulo the span.
long brute_torsion_classes(std::size_t n, const std::vector<IntVector>& span, long box, long kmax, long cbound) {
  std::vector<IntVector> reps;
  oracle::for_each_box(n, 2 * box, [&](const std::vector<long>& raw) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = raw[i] - box;
    bool torsion = false;
    for (long k = 1; k <= kmax && !torsion; ++k) {
      IntVector kv = v;
      for (auto& x : kv) x *= k;
      torsion = in_lattice_span(span, kv, cbound);
    }
    if (!torsion) return;
    for (const auto& r : reps) {
      IntVector d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = v[i] - r[i];
      if (in_lattice_span(span, d, cbound)) return;
    }
    reps.push_back(v);
  });
  return static_cast<long>(reps.size());
}

bool has_code(const FanReport& r, FanFailure c) { return r.has(c); }

}  // namespace

int main() {
  const ToricMonoid n2 = ToricMonoid::free_monoid(2);
  const ToricMonoid zn(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})});
  const ToricMonoid nz(2, {iv({1, 0}), iv({0, 1}), iv({0, -1})});
  const ToricMonoid z2 = ToricMonoid::lattice(2);
  const ToricMonoid cusp(1, {iv({2}), iv({3})});
  const ToricMonoid torsion_ex(2, {iv({2, 0}), iv({0, 1}), iv({1, 1})});

  criterion("dual cones of the four C^2 charts", 1, [&](Outcome& o) {
    const RationalCone quadrant = cone(2, {iv({1, 0}), iv({0, 1})});
    struct Row {
      const ToricMonoid* g;
      RationalCone exponent, weight;
    };
    const std::vector<Row> rows = {
        {&n2, quadrant, quadrant},
        {&zn, RationalCone::from_generators(2, {iv({1, 0})}, {iv({0, 1})}), cone(2, {iv({0, 1})})},
        {&nz, RationalCone::from_generators(2, {iv({0, 1})}, {iv({1, 0})}), cone(2, {iv({1, 0})})},
        {&z2, RationalCone::full_space(2), RationalCone(2)},
    };
    for (const auto& r : rows) {
      o.expect(r.g->exponent_cone() == r.exponent, "exponent cone");
      o.expect(r.g->weight_cone() == r.weight, "weight cone");
      o.expect(r.exponent.dual() == r.weight && r.weight.dual() == r.exponent, "duality");
    }
    // literal rays, independent of the cone constructors
    o.expect(zn.weight_cone().rays() == std::vector<IntVector>{iv({0, 1})}, "rays of {0} x R>=0");
    o.expect(zn.weight_cone().lineality().empty(), "weight cone is sharp");
    o.expect(z2.exponent_cone().lineality().size() == 2, "R^2 lineality");
  });

  criterion("faces and localizations of N^2", 1, [&](Outcome& o) {
    const auto fs = faces(n2);
    std::set<std::vector<std::size_t>> got;
    for (const auto& f : fs) got.insert(f.indices);
    o.expect(fs.size() == 4, "four faces");
    o.expect(got == std::set<std::vector<std::size_t>>{{}, {0}, {1}, {0, 1}}, "face index sets");
    const std::vector<const ToricMonoid*> expected{&n2, &zn, &nz, &z2};
    std::vector<bool> hit(4, false);
    for (const auto& f : fs) {
      const ToricMonoid l = localize(n2, f);
      std::size_t matches = 0;
      for (std::size_t i = 0; i < 4; ++i)
        if (monoid_equal(l, *expected[i])) {
          hit[i] = true;
          ++matches;
        }
      o.expect(matches == 1, "each localization is one of the four charts");
    }
    o.expect(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }), "all four charts occur");
  });

  criterion("normalization of the cusp", 1, [&](Outcome& o) {
    const ToricMonoid s = saturate(cusp);
    o.expect(s.generators() == std::vector<IntVector>{iv({1})}, "saturation generated by 1");
    o.expect(monoid_equal(s, ToricMonoid::free_monoid(1)), "saturation is N");
    o.expect(!is_saturated(cusp), "cusp is not saturated");
    o.expect(check_morphism(normalization_morphism(cusp)).passed(), "normalization is a morphism");
  });

  criterion("dual of dual on 100 random cones", 30, [&](Outcome& o) {
    std::mt19937 rng(101);
    for (int t = 0; t < 100; ++t) {
      std::vector<IntVector> gens;
      const RationalCone c = random_cone(rng, gens);
      const RationalCone dd = c.dual().dual();
      const std::size_t n = c.ambient_rank();
      std::vector<IntVector> dg = dd.generators();
      // equal member sets: each generating set lies in the other cone
      for (const auto& g : gens) o.expect(oracle::cone_contains(dg, rat(g)), "input generator lost");
      for (const auto& g : dg) o.expect(oracle::cone_contains(gens, rat(g)), "spurious generator");
      oracle::for_each_box(n, 4, [&](const std::vector<long>& raw) {
        IntVector p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = raw[i] - 2;
        o.expect(oracle::cone_contains(gens, rat(p)) == dd.contains(p), "membership differs");
      });
    }
  });

  criterion("dim + dim edge of dual = rank", 30, [&](Outcome& o) {
    std::mt19937 rng(101);
    for (int t = 0; t < 100; ++t) {
      std::vector<IntVector> gens;
      const RationalCone c = random_cone(rng, gens);
      const std::size_t n = c.ambient_rank();
      o.expect(c.dim() == rank_of(gens, n), "dimension");
      o.expect(c.dim() + c.dual().edge().dim() == n, "dimension duality");
    }
  });

  criterion("fan-of-monoids mutation suite", 5, [&](Outcome& o) {
    // candidate charts: every localization of the charts, plus a non-normal one
    const std::vector<FanOfMonoids> fans{fixtures::c2_atlas(), fixtures::p1()};
    for (const auto& fm : fans) {
      o.expect(validate_fan_of_monoids(fm).passed(), "reference fan passes");
      std::vector<ToricMonoid> candidates;
      std::vector<ToricMonoid> sources;
      for (const auto& e : fm.entries) sources.push_back(e.monoid);
      if (fm.rank == 2) sources.push_back(torsion_ex);
      for (const auto& g : sources)
        for (const auto& f : faces(g)) candidates.push_back(localize(g, f));
      std::size_t mutations = 0;
      for (std::size_t i = 0; i < fm.entries.size(); ++i) {
        // drop a cone that is a proper face of another
        bool proper_face = false;
        for (std::size_t j = 0; j < fm.entries.size(); ++j)
          proper_face = proper_face || (j != i && fm.entries[i].cone.is_face_of(fm.entries[j].cone));
        if (proper_face) {
          FanOfMonoids cut = fm;
          cut.entries.erase(cut.entries.begin() + static_cast<std::ptrdiff_t>(i));
          o.expect(has_code(validate_fan_of_monoids(cut), FanFailure::MissingFace), "dropped face");
          ++mutations;
        }
        for (const auto& cand : candidates) {
          if (monoid_equal(cand, fm.entries[i].monoid)) continue;
          FanOfMonoids bad = fm;
          bad.entries[i].monoid = cand;
          const FanReport r = validate_fan_of_monoids(bad);
          const bool full_gp = cand.gp_rank() == fm.rank && abs(determinant(cand.gp())) == 1;
          FanFailure want = FanFailure::FaceIncompatible;
          if (!full_gp)
            want = FanFailure::GpNotFull;
          else if (!(cand.weight_cone() == fm.entries[i].cone))
            want = FanFailure::WeightConeMismatch;
          o.expect(!r.passed(), "mutation accepted");
          o.expect(r.has(want), "wrong failure code for " + std::string(to_string(want)));
          ++mutations;
        }
      }
      o.expect(mutations > 0, "no mutations generated");
    }
  });

  criterion("rounding fibers of N^n and torsion", 2, [&](Outcome& o) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const ToricMonoid g = ToricMonoid::free_monoid(n);
      const FiberReport r = fiber_structure(g, face_from_indices(g, {}));
      o.expect(r.torus_rank == n && r.components == 1, "N^n over the origin");
    }
    const MonoidFace f = face_from_indices(torsion_ex, {0});
    const FiberReport r = fiber_structure(torsion_ex, f);
    o.expect(r.torus_rank == 1 && r.components == 2, "torsion example");
    o.expect(r.torus_rank == 2 - rank_of(f.monoid.generators(), 2), "rank of the quotient");
    o.expect(brute_torsion_classes(2, f.monoid.generators(), 3, 4, 8) == 2, "brute-force cosets");
    for (const auto& ff : faces(torsion_ex)) {
      const FiberReport x = fiber_structure(torsion_ex, ff);
      o.expect(x.components == brute_torsion_classes(2, ff.monoid.generators(), 3, 4, 8),
               "cosets on every face");
    }
  });

  criterion("torsor count for denominators 2,3,4,6", 30, [&](Outcome& o) {
    std::mt19937 rng(103);
    std::vector<ToricMonoid> gs{torsion_ex, cusp, n2, ToricMonoid(2, {iv({2, 0}), iv({0, 2}), iv({1, 1})})};
    while (gs.size() < 16) {
      const std::size_t n = 1 + rng() % 2;
      gs.emplace_back(n, oracle::random_vectors(rng, n, 1 + rng() % 3, -3, 3));
    }
    std::size_t checked = 0;
    for (const auto& g : gs) {
      for (const auto& f : faces(g)) {
        const FiberReport rep = fiber_structure(g, f);
        for (long L : {2L, 3L, 4L, 6L}) {
          bool annihilates = true;
          for (const auto& e : rep.invariants.torsion) annihilates = annihilates && L % e.get_si() == 0;
          if (!annihilates) continue;
          std::vector<Angle> base;
          for (std::size_t i = 0; i < g.gp_rank(); ++i) base.emplace_back(Rational(static_cast<long>(rng() % L), L));
          std::vector<double> logs(f.monoid.gp_rank(), -0.5);
          const ComplexPoint x = tau(RoundingPoint(g, f, logs, base));
          long count = 0;
          oracle::for_each_box(g.gp_rank(), L - 1, [&](const std::vector<long>& a) {
            std::vector<Angle> angles;
            for (long ai : a) angles.emplace_back(Rational(ai, L));
            // the point lies over x iff every generator has the same value
            const RoundingPoint p(g, f, logs, angles);
            bool over = true;
            for (const auto& m : g.generators())
              over = over && std::abs(p.evaluate(m).complex() - x.evaluate(m)) < 1e-9;
            if (over) ++count;
          });
          Integer want = rep.components;
          for (std::size_t i = 0; i < rep.torus_rank; ++i) want *= L;
          o.expect(Integer(count) == want, "torsor size");
          ++checked;
        }
      }
    }
    o.expect(checked > 50, "too few cases");
  });

  criterion("Milnor fibers are gcd covers", 5, [&](Outcome& o) {
    std::mt19937 rng(107);
    for (int t = 0; t < 200; ++t) {
      const std::size_t k = 1 + rng() % 4;
      std::vector<Integer> m;
      Integer g = 0;
      IntMatrix a(k, 1);
      for (std::size_t i = 0; i < k; ++i) {
        m.emplace_back(static_cast<long>(1 + rng() % 9));
        a(i, 0) = m.back();
        g = oracle::euclid(g, m.back());
      }
      const FiberReport r = milnor_stratum_fiber(m);
      o.expect(r.components == g, "gcd");
      o.expect(r.torus_rank == k - 1, "rank");
      const ToricMonoid nk = ToricMonoid::free_monoid(k);
      const MonoidMorphism mu(a, ToricMonoid::free_monoid(1), nk);
      o.expect(r == relative_fiber(mu, face_from_indices(nk, {})), "relative fiber");
    }
    // row for row on a complete complex
    const DualComplex dc(3, 3, {Simplex{{0, 1, 2}, std::nullopt}},
                         std::vector<Integer>{Integer(6), Integer(4), Integer(9)}, true);
    for (const auto& row : milnor_report(dc).rows) {
      const std::size_t k = row.simplex.vertices.size();
      IntMatrix a(k, 1);
      for (std::size_t i = 0; i < k; ++i) a(i, 0) = (*dc.multiplicities())[row.simplex.vertices[i]];
      const ToricMonoid nk = ToricMonoid::free_monoid(k);
      o.expect(*row.milnor == relative_fiber(MonoidMorphism(a, ToricMonoid::free_monoid(1), nk),
                                             face_from_indices(nk, {})),
               "report row");
    }
  });

  criterion("polar points match the rounding", 10, [&](Outcome& o) {
    std::mt19937 rng(109);
    for (int t = 0; t < 10; ++t) {
      const ToricMonoid g = oracle::random_full_monoid(rng, 1 + rng() % 3, rng() % 3, -2, 3);
      const auto pts = points_of(g, LogPointKind::Polar);
      const FanOfMonoids atlas = affine_atlas(g);
      const auto rows = rounding_report(atlas);
      o.expect(pts.size() == rows.size(), "stratum count");
      for (std::size_t i = 0; i < pts.size() && i < atlas.entries.size(); ++i) {
        const auto it = std::find_if(rows.begin(), rows.end(),
                                     [&](const RoundingRow& r) { return r.cone == atlas.entries[i].cone; });
        o.expect(it != rows.end(), "missing stratum");
        if (it == rows.end()) continue;
        o.expect(it->orbit_dimension == pts[i].orbit_dimension, "orbit dimension");
        o.expect(it->fiber == pts[i].fiber, "fiber");
      }
    }
  });

  criterion("membership vs brute force, 500", 60, [&](Outcome& o) {
    std::mt19937 rng(113);
    std::uniform_int_distribution<long> d(-6, 6);
    long disagreements = 0;
    for (int t = 0; t < 500; ++t) {
      const std::size_t n = 1 + rng() % 3;
      const ToricMonoid g(n, oracle::random_vectors(rng, n, 1 + rng() % 3, -2, 3));
      IntVector m(n);
      for (auto& x : m) x = d(rng);
      const auto w = membership(g, m);
      const bool brute = oracle::brute_member(g.generators(), m, 12);
      if (contains(g, m) != w.has_value()) ++disagreements;
      if (!w) {
        if (brute) ++disagreements;
        continue;
      }
      // a positive answer must carry an exact witness
      IntVector s(n, 0);
      for (std::size_t i = 0; i < g.size(); ++i) {
        if ((*w)[i] < 0) ++disagreements;
        for (std::size_t j = 0; j < n; ++j) s[j] += (*w)[i] * g.generators()[i][j];
      }
      if (s != m) ++disagreements;
      // groups can need large coefficients; widen the search before disagreeing
      if (!brute && !oracle::brute_member(g.generators(), m, 40)) ++disagreements;
    }
    o.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  });

  criterion("strict restriction on all faces", 10, [&](Outcome& o) {
    std::mt19937 rng(127);
    std::vector<ToricMonoid> gs{torsion_ex};
    while (gs.size() < 10) {
      const std::size_t n = 1 + rng() % 3;
      const ToricMonoid g(n, oracle::random_vectors(rng, n, 1 + rng() % 4, -2, 3));
      if (g.size() > 0) gs.push_back(g);
    }
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (const auto& f : faces(gs[i])) o.expect(strict_restriction_check(gs[i], f, 8, i), "cartesian");
  });

  std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
