#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "torolog/error.hpp"
#include "torolog/morphism.hpp"

using namespace torolog;
using fixtures::cone;
using oracle::iv;

namespace {

const ToricMonoid cusp(1, {iv({2}), iv({3})});
const ToricMonoid n1 = ToricMonoid::free_monoid(1);

FanOfMonoids single(std::size_t n, RationalCone c, ToricMonoid g) { return FanOfMonoids{n, {{std::move(c), std::move(g)}}}; }

ComplexPoint at(const ToricMonoid& g, std::vector<std::complex<double>> v) { return ComplexPoint::from_values(g, v); }

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(b)); }

}  // namespace

TEST_CASE("check_morphism examples") {
  const auto torus = single(1, RationalCone(1), ToricMonoid::lattice(1));
  CHECK(check_morphism(ToricMorphismData(IntMatrix::identity(1), torus, fixtures::p1())).passed());

  const auto ray = single(1, cone(1, {iv({1})}), n1);
  const MorphismReport r = check_morphism(ToricMorphismData(IntMatrix::identity(1), ray, torus));
  CHECK_FALSE(r.passed());
  REQUIRE(r.charts.size() == 1);
  CHECK_FALSE(r.charts[0].target.has_value());

  for (const auto& src : {fixtures::c2_atlas(), torus}) {
    ToricMorphismData d(IntMatrix(1, src.rank), src, fixtures::p1());
    CHECK(check_morphism(d).passed());
  }
}

TEST_CASE("check_morphism finds the minimal cone and checks monoids") {
  // projection Z^2 -> Z onto the first coordinate, from the C^2 atlas to P^1
  IntMatrix nu(1, 2);
  nu(0, 0) = 1;
  const MorphismReport r = check_morphism(ToricMorphismData(nu, fixtures::c2_atlas(), fixtures::p1()));
  CHECK(r.passed());
  REQUIRE(r.charts.size() == 4);
  CHECK(*r.charts[0].target == 0);  // quadrant -> R>=0
  CHECK(*r.charts[1].target == 2);  // y-ray -> {0}
  CHECK(*r.charts[2].target == 0);
  CHECK(*r.charts[3].target == 2);
  // same map, but with a monoid on the target that is too big for the charts
  FanOfMonoids wrong = fixtures::p1();
  wrong.entries[0].monoid = ToricMonoid::lattice(1);
  CHECK_FALSE(check_morphism(ToricMorphismData(nu, fixtures::c2_atlas(), wrong)).passed());
  // rank mismatch
  CHECK_FALSE(check_morphism(ToricMorphismData(IntMatrix::identity(2), fixtures::c2_atlas(), fixtures::p1())).passed());
}

TEST_CASE("normalization morphisms") {
  const ToricMorphismData d = normalization_morphism(cusp);
  CHECK(check_morphism(d).passed());
  CHECK(monoid_equal(d.source.entries[0].monoid, n1));
  CHECK(monoid_equal(d.target.entries[0].monoid, cusp));
  CHECK(check_morphism(normalization_morphism(ToricMonoid::free_monoid(2))).passed());
  const ToricMonoid t(2, {iv({2, 0}), iv({0, 1}), iv({1, 1})});
  const ToricMorphismData e = normalization_morphism(t);
  CHECK(check_morphism(e).passed());
  CHECK(monoid_equal(e.source.entries[0].monoid, ToricMonoid::free_monoid(2)));
}

TEST_CASE("normalization morphisms pass on random monoids") {
  std::mt19937 rng(67);
  for (int t = 0; t < 20; ++t) {
    const ToricMonoid g = oracle::random_full_monoid(rng, 1 + rng() % 3, rng() % 3, -2, 3);
    CHECK(check_morphism(normalization_morphism(g)).passed());
  }
}

TEST_CASE("monoid morphisms are verified") {
  CHECK_NOTHROW(MonoidMorphism(IntMatrix::identity(1), cusp, n1));
  try {
    MonoidMorphism(IntMatrix::identity(1), n1, cusp);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAMorphism);
  }
}

TEST_CASE("apply_to_point on the cusp normalization") {
  const MonoidMorphism mu(IntMatrix::identity(1), cusp, n1);
  const ComplexPoint q = apply_to_point(mu, at(n1, {2.0}));
  CHECK(close(q.evaluate(iv({2})), 4.0));
  CHECK(close(q.evaluate(iv({3})), 8.0));
  const ComplexPoint b = apply_to_point(mu, ComplexPoint::base_point(n1));
  CHECK(approx_equal(b, ComplexPoint::base_point(cusp)));
  const ComplexPoint o = apply_to_point(mu, at(n1, {0.0}));
  CHECK(o.face().indices.empty());
  CHECK(close(o.evaluate(iv({5})), 0.0));
  CHECK(close(o.evaluate(iv({0})), 1.0));
}

namespace {

// Random monoid morphism N^a -> N^b given by a nonnegative matrix, followed
// by one N^b -> N^c.
IntMatrix nonneg(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> d(0, 2);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

ComplexPoint random_point(std::mt19937& rng, const ToricMonoid& g, bool allow_zero) {
  std::uniform_real_distribution<double> r(0.3, 2.0), a(0.0, 6.28);
  std::vector<std::complex<double>> v;
  for (std::size_t i = 0; i < g.size(); ++i)
    v.push_back(allow_zero && rng() % 3 == 0 ? 0.0 : std::polar(r(rng), a(rng)));
  return ComplexPoint::from_values(g, v);
}

}  // namespace

TEST_CASE("apply_to_point is functorial") {
  std::mt19937 rng(71);
  for (int t = 0; t < 40; ++t) {
    const std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3;
    const ToricMonoid na = ToricMonoid::free_monoid(a), nb = ToricMonoid::free_monoid(b),
                      nc = ToricMonoid::free_monoid(c);
    const MonoidMorphism inner(nonneg(rng, b, a), na, nb);
    const MonoidMorphism outer(nonneg(rng, c, b), nb, nc);
    const ComplexPoint p = random_point(rng, nc, true);
    const ComplexPoint lhs = apply_to_point(compose(outer, inner), p);
    const ComplexPoint rhs = apply_to_point(inner, apply_to_point(outer, p));
    CHECK(approx_equal(lhs, rhs, 1e-8));
    for (const auto& g : na.generators()) {
      IntVector img = outer(inner(g));
      CHECK(close(lhs.evaluate(g), p.evaluate(img)));
    }
  }
}

TEST_CASE("apply_to_point commutes with the torus action") {
  std::mt19937 rng(73);
  for (int t = 0; t < 40; ++t) {
    const std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3;
    const ToricMonoid na = ToricMonoid::free_monoid(a), nb = ToricMonoid::free_monoid(b);
    const MonoidMorphism mu(nonneg(rng, b, a), na, nb);
    const ComplexPoint torus = random_point(rng, nb, false);
    const ComplexPoint p = random_point(rng, nb, true);
    const ComplexPoint lhs = apply_to_point(mu, torus_act(torus, p));
    const ComplexPoint rhs = torus_act(apply_to_point(mu, torus), apply_to_point(mu, p));
    CHECK(approx_equal(lhs, rhs, 1e-8));
  }
}
