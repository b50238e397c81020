#include "torolog/log_structure.hpp"

#include <random>
#include <sstream>

#include "torolog/error.hpp"

namespace torolog {

LogStalk::LogStalk(ComplexPoint x) : x_(std::move(x)), ghost_(torolog::ghost(x_.monoid(), x_.face())) {}

IntVector LogStalk::reduce(const IntVector& m) const {
  IntVector r = m;
  const IntMatrix& h = x_.face_basis();
  for (std::size_t j = 0; j < h.cols(); ++j) {
    std::size_t p = 0;
    while (h(p, j) == 0) ++p;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r[p].get_mpz_t(), h(p, j).get_mpz_t());
    if (q == 0) continue;
    for (std::size_t i = p; i < r.size(); ++i) r[i] -= q * h(i, j);
  }
  return r;
}

std::complex<double> LogStalk::twist(const IntVector& d) const {
  const auto [lr, a] = x_.character(d);
  return std::exp(lr) * a.unit();
}

StalkElement LogStalk::element(std::complex<double> unit, const IntVector& m) const {
  IntVector rep = reduce(m);
  IntVector d(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) d[i] = m[i] - rep[i];
  return {unit * twist(d), std::move(rep)};
}

StalkElement LogStalk::multiply(const StalkElement& a, const StalkElement& b) const {
  IntVector sum(a.representative.size());
  for (std::size_t i = 0; i < sum.size(); ++i)
    sum[i] = a.representative[i] + b.representative[i];
  return element(a.unit * b.unit, sum);
}

std::complex<double> LogStalk::structure_value(const StalkElement& e) const {
  return is_zero(e.representative) ? e.unit : std::complex<double>(0.0, 0.0);
}

std::string LogStalk::describe() const {
  if (trivial()) return "C*";
  std::ostringstream os;
  os << "C* (+) Gamma/Phi, ghost group " << ghost_.quotient_invariants.to_string();
  return os.str();
}

LogStalk associated_log_stalk(const ToricMonoid& g, const MonoidFace& f) {
  if (!is_face(g, f)) throw Error(ErrorCode::NotAFace, "not a face of the monoid");
  const std::size_t r = lattice_basis(IntMatrix::from_columns(g.ambient_rank(), f.monoid.generators())).cols();
  return LogStalk(ComplexPoint(g, f, std::vector<double>(r, 0.0), std::vector<Angle>(r)));
}

std::string_view to_string(LogPointKind k) {
  switch (k) {
    case LogPointKind::Empty: return "empty";
    case LogPointKind::Trivial: return "trivial";
    case LogPointKind::Standard: return "standard";
    case LogPointKind::Polar: return "polar";
  }
  return "unknown";
}

LogPointDescriptor log_point(LogPointKind kind) {
  switch (kind) {
    case LogPointKind::Empty: return {kind, "(C, *)", "identity"};
    case LogPointKind::Trivial: return {kind, "(C*, *)", "inclusion into (C, *)"};
    case LogPointKind::Standard: return {kind, "(C*, *) (+) (N, +)", "(lambda, m) -> lambda * delta_0^m"};
    case LogPointKind::Polar: return {kind, "(R>=0 x S^1, *)", "(r, u) -> r * u"};
  }
  throw Error(ErrorCode::InvalidInput, "unknown log point kind");
}

std::complex<double> standard_log_point_map(std::complex<double> lambda, const Integer& m) {
  if (m < 0) throw Error(ErrorCode::InvalidInput, "exponent must be in N");
  return m == 0 ? lambda : std::complex<double>(0.0, 0.0);
}

std::complex<double> polar_log_point_map(const PolarValue& v) { return v.complex(); }

std::vector<PointStratum> points_of(const ToricMonoid& g, LogPointKind kind) {
  std::vector<PointStratum> out;
  for (auto& f : faces(g)) {
    const bool full = f.indices.size() == g.size();
    if (kind == LogPointKind::Trivial && !full) continue;
    PointStratum s;
    s.orbit_dimension = lattice_basis(IntMatrix::from_columns(g.ambient_rank(), f.monoid.generators())).cols();
    if (kind == LogPointKind::Polar || kind == LogPointKind::Standard)
      s.fiber = fiber_structure(g, f);
    s.face = std::move(f);
    out.push_back(std::move(s));
  }
  return out;
}

bool strict_restriction_check(const ToricMonoid& g, const MonoidFace& f, std::size_t samples,
                              std::uint64_t seed) {
  const FiberReport direct = fiber_structure(g, f);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radial(-1.0, 1.0);
  std::uniform_int_distribution<int> num(0, 11);
  const std::size_t r = lattice_basis(IntMatrix::from_columns(g.ambient_rank(), f.monoid.generators())).cols();
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<double> rho(r);
    std::vector<Angle> theta(r);
    for (std::size_t i = 0; i < r; ++i) {
      rho[i] = radial(rng);
      theta[i] = Angle(Rational(num(rng), 12));
    }
    const ComplexPoint x(g, f, rho, theta);
    // Restrict: read the support off the point's values, then take the stalk there.
    std::vector<std::complex<double>> values;
    for (const auto& m : g.generators()) values.push_back(x.evaluate(m));
    const ComplexPoint y = ComplexPoint::from_values(g, values);
    if (!(y.face() == f) || !approx_equal(x, y, 1e-9)) return false;
    const LogStalk stalk(y);
    if (!(FiberReport::from_invariants(stalk.ghost().quotient_invariants) == direct)) return false;
    std::vector<IntVector> units;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (std::abs(values[i]) > 0.0) units.push_back(gp_coordinates(g, g.generators()[i]));
    const std::size_t rk = g.gp_rank();
    const auto restricted = quotient_invariants(rk, IntMatrix::from_columns(rk, units));
    if (!(FiberReport::from_invariants(restricted) == direct)) return false;
    const RoundingPoint p = lift(x);
    if (!approx_equal(tau(p), x, 1e-9)) return false;
  }
  return true;
}

}  // namespace torolog
