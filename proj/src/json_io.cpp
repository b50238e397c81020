#include "torolog/json_io.hpp"

#include <limits>

#include "torolog/error.hpp"

namespace torolog::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t to_count(const Json& j) {
  const Integer x = to_integer(j);
  if (x < 0 || !x.fits_ulong_p()) bad("expected a nonnegative count");
  return x.get_ui();
}

std::vector<IntVector> to_vectors(const Json& j) {
  if (!j.is_array()) bad("expected a list of vectors");
  std::vector<IntVector> out;
  for (const auto& e : j) out.push_back(e.is_array() ? to_vector(e) : IntVector{to_integer(e)});
  return out;
}

std::size_t infer_rank(const Json& j, const char* rank_key, const std::vector<IntVector>& vs) {
  if (j.contains(rank_key)) return to_count(j.at(rank_key));
  if (vs.empty()) bad(std::string("missing field \"") + rank_key + "\"");
  return vs.front().size();
}

void check_lengths(const std::vector<IntVector>& vs, std::size_t n) {
  for (const auto& v : vs)
    if (v.size() != n) bad("vector " + to_string(v) + " does not have length " + std::to_string(n));
}

}  // namespace

Integer to_integer(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer x;
    const std::string s = j.get<std::string>();
    if (s.empty() || x.set_str(s, 10) != 0) bad("not an integer: \"" + s + "\"");
    return x;
  }
  bad("expected an integer, got " + j.dump());
}

IntVector to_vector(const Json& j) {
  if (!j.is_array()) bad("expected an integer vector, got " + j.dump());
  IntVector v;
  for (const auto& e : j) v.push_back(to_integer(e));
  return v;
}

IntMatrix to_matrix(const Json& j) {
  const auto rows = to_vectors(j);
  if (rows.empty()) bad("empty matrix");
  check_lengths(rows, rows.front().size());
  return IntMatrix::from_rows(rows.front().size(), rows);
}

RationalCone cone_from_json(const Json& j) {
  auto rays = j.contains("rays") ? to_vectors(j.at("rays")) : std::vector<IntVector>{};
  auto lines = j.contains("lineality") ? to_vectors(j.at("lineality")) : std::vector<IntVector>{};
  const std::size_t n = infer_rank(j, "ambient_rank", rays.empty() ? lines : rays);
  check_lengths(rays, n);
  check_lengths(lines, n);
  return RationalCone::from_generators(n, lines, rays);
}

ToricMonoid monoid_from_json(const Json& j) {
  auto gens = to_vectors(field(j, "generators"));
  const std::size_t n = infer_rank(j, "ambient_rank", gens);
  check_lengths(gens, n);
  return ToricMonoid(n, std::move(gens));
}

Fan fan_from_json(const Json& j) {
  Fan f;
  f.ambient_rank = to_count(field(j, "rank"));
  const Json& cones = field(j, "cones");
  if (!cones.is_array()) bad("\"cones\" must be a list");
  for (const auto& c : cones) {
    Json cj = c.is_array() ? Json{{"rays", c}} : c;
    if (!cj.contains("ambient_rank")) cj["ambient_rank"] = f.ambient_rank;
    f.cones.push_back(cone_from_json(cj));
  }
  return f;
}

FanOfMonoids fanmon_from_json(const Json& j) {
  FanOfMonoids f;
  f.rank = to_count(field(j, "rank"));
  const Json& es = field(j, "entries");
  if (!es.is_array()) bad("\"entries\" must be a list");
  for (const auto& e : es) {
    Json cj = field(e, "cone");
    if (cj.is_array()) cj = Json{{"rays", cj}};
    if (!cj.contains("ambient_rank")) cj["ambient_rank"] = f.rank;
    Json mj = field(e, "monoid");
    if (mj.is_array()) mj = Json{{"generators", mj}};
    if (!mj.contains("ambient_rank")) mj["ambient_rank"] = f.rank;
    f.entries.push_back({cone_from_json(cj), monoid_from_json(mj)});
  }
  return f;
}

ToricMorphismData morphism_from_json(const Json& j) {
  FanOfMonoids s = fanmon_from_json(field(j, "source"));
  FanOfMonoids t = fanmon_from_json(field(j, "target"));
  const Json& nj = field(j, "nu");
  IntMatrix nu = nj.empty() ? IntMatrix(t.rank, s.rank) : to_matrix(nj);
  if (nu.rows() != t.rank || nu.cols() != s.rank)
    bad("\"nu\" must be a target-rank x source-rank matrix");
  return ToricMorphismData(std::move(nu), std::move(s), std::move(t));
}

RoundingPoint rounding_point_from_json(const Json& j, const ToricMonoid& g) {
  std::vector<std::size_t> idx;
  for (const auto& e : field(j, "face")) idx.push_back(to_count(e));
  MonoidFace face = face_from_indices(g, idx);
  std::vector<double> radial;
  for (const auto& e : field(j, "radial_log")) {
    if (!e.is_number()) bad("radial_log entries must be numbers");
    radial.push_back(e.get<double>());
  }
  std::vector<Angle> angle;
  for (const auto& e : field(j, "angle")) {
    if (e.is_string()) angle.push_back(Angle::parse(e.get<std::string>()));
    else if (e.is_number_integer()) angle.push_back(Angle(Rational(to_integer(e))));
    else if (e.is_number()) angle.push_back(Angle::from_real(e.get<double>()));
    else bad("angle entries must be strings or numbers");
  }
  return RoundingPoint(g, std::move(face), std::move(radial), std::move(angle));
}

DualComplex complex_from_json(const Json& j, bool complete) {
  const std::size_t n = to_count(field(j, "n"));
  const std::size_t k = to_count(field(j, "vertices"));
  std::vector<Simplex> simplices;
  if (j.contains("simplices")) {
    for (const auto& s : j.at("simplices")) {
      Simplex sx;
      const Json& vs = s.is_object() ? field(s, "vertices") : s;
      if (!vs.is_array()) bad("a simplex is a list of vertices");
      for (const auto& v : vs) sx.vertices.push_back(to_count(v));
      if (s.is_object() && s.contains("id")) sx.id = to_count(s.at("id"));
      simplices.push_back(std::move(sx));
    }
  }
  std::optional<std::vector<Integer>> mult;
  if (j.contains("multiplicities")) mult = to_vector(j.at("multiplicities"));
  return DualComplex(n, k, std::move(simplices), std::move(mult), complete);
}

std::vector<Integer> multiplicities_from_json(const Json& j) {
  return to_vector(j.is_object() ? field(j, "multiplicities") : j);
}

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

namespace {

Json vectors(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

}  // namespace

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    a.push_back(row);
  }
  return a;
}

Json to_json(const AbelianGroupInvariants& inv) {
  Json t = Json::array();
  for (const auto& d : inv.torsion) t.push_back(to_json(d));
  return Json{{"rank", inv.rank}, {"torsion", t}};
}

Json to_json(const RationalCone& c) {
  return Json{{"ambient_rank", c.ambient_rank()},
              {"dim", c.dim()},
              {"rays", vectors(c.rays())},
              {"lineality", vectors(c.lineality())},
              {"facets", vectors(c.facets())},
              {"equations", vectors(c.equations())}};
}

Json to_json(const ToricMonoid& g) {
  return Json{{"ambient_rank", g.ambient_rank()}, {"generators", vectors(g.generators())}};
}

Json to_json(const MonoidFace& f) {
  return Json{{"indices", f.indices}, {"generators", vectors(f.monoid.generators())}};
}

Json to_json(const GhostReport& g) {
  Json gens = Json::array();
  for (const auto& e : g.sharp_generators)
    gens.push_back(Json{{"free", to_json(e.free)}, {"torsion", to_json(e.torsion)}});
  return Json{{"face", to_json(g.face)},
              {"face_rank", g.face_rank},
              {"quotient", to_json(g.quotient_invariants)},
              {"sharp_generators", gens}};
}

Json to_json(const Fan& f) {
  Json cones = Json::array();
  for (const auto& c : f.cones) cones.push_back(to_json(c));
  return Json{{"rank", f.ambient_rank}, {"cones", cones}};
}

Json to_json(const FanOfMonoids& f) {
  Json es = Json::array();
  for (const auto& e : f.entries)
    es.push_back(Json{{"cone", Json{{"ambient_rank", f.rank}, {"rays", vectors(e.cone.rays())}}},
                      {"monoid", to_json(e.monoid)}});
  return Json{{"rank", f.rank}, {"entries", es}};
}

Json to_json(const FanReport& r) {
  Json issues = Json::array();
  for (const auto& i : r.issues)
    issues.push_back(Json{{"code", std::string(to_string(i.code))},
                          {"first", i.first},
                          {"second", i.second},
                          {"detail", i.detail}});
  return Json{{"passed", r.passed()}, {"issues", issues}};
}

Json to_json(const MorphismReport& r) {
  Json charts = Json::array();
  for (const auto& c : r.charts) {
    Json cj{{"source", c.source}, {"target", nullptr}, {"ok", c.ok}, {"detail", c.detail}};
    if (c.target) cj["target"] = *c.target;
    charts.push_back(cj);
  }
  return Json{{"passed", r.passed()}, {"rank_ok", r.rank_ok}, {"charts", charts}};
}

Json to_json(const ToricMorphismData& d) {
  return Json{{"nu", to_json(d.nu)}, {"source", to_json(d.source)}, {"target", to_json(d.target)}};
}

Json to_json(const RoundingPoint& p) {
  Json angle = Json::array();
  for (const auto& a : p.angle()) angle.push_back(a.to_string());
  return Json{{"face", p.face().indices}, {"radial_log", p.radial_log()}, {"angle", angle}};
}

Json to_json(const FiberReport& f) {
  return Json{{"torus_rank", f.torus_rank},
              {"components", to_json(f.components)},
              {"invariants", to_json(f.invariants)}};
}

Json to_json(const DualComplex& dc) {
  Json ss = Json::array();
  for (const auto& s : dc.simplices()) {
    if (s.id) ss.push_back(Json{{"id", *s.id}, {"vertices", s.vertices}});
    else ss.push_back(s.vertices);
  }
  Json j{{"n", dc.ambient_dim()}, {"vertices", dc.vertex_count()}, {"simplices", ss}};
  if (dc.multiplicities()) j["multiplicities"] = to_json(*dc.multiplicities());
  return j;
}

Json to_json(const StratumRow& row) {
  Json j{{"simplex", row.simplex.vertices},
         {"depth", row.depth},
         {"stratum_dim", row.stratum_dim},
         {"link", to_json(row.link)}};
  if (row.simplex.id) j["id"] = *row.simplex.id;
  if (row.milnor) j["milnor"] = to_json(*row.milnor);
  return j;
}

}  // namespace torolog::json
