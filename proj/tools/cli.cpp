#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "torolog/error.hpp"
#include "torolog/json_io.hpp"

namespace torolog::cli {

namespace {

using json::Json;

struct Context {
  const Json& in;
  bool as_json;
  bool complete;
  std::ostream& out;
};

using Handler = int (*)(Context&);

struct Verb {
  VerbInfo info;
  Handler handler;
};

class Table {
 public:
  explicit Table(std::vector<std::string> headers) : rows_{std::move(headers)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> w(rows_[0].size(), 0);
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string text(const Json& j) { return j.dump(); }
std::string text(const IntVector& v) { return json::to_json(v).dump(); }
std::string text(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(json::to_json(v));
  return a.dump();
}
std::string text(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}
std::string text(std::complex<double> z) { return "(" + text(z.real()) + ", " + text(z.imag()) + ")"; }

int emit(Context& c, const Json& j) {
  c.out << j.dump(2) << "\n";
  return 0;
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

MonoidFace read_face(const Json& j, const ToricMonoid& g) {
  std::vector<std::size_t> idx;
  for (const auto& e : need(j, "face")) {
    const Integer i = json::to_integer(e);
    if (i < 0 || !i.fits_ulong_p()) bad("face indices must be nonnegative");
    idx.push_back(i.get_ui());
  }
  return face_from_indices(g, idx);
}

std::string face_text(const MonoidFace& f) {
  Json a = f.indices;
  return a.dump();
}

std::string fiber_text(const FiberReport& f) {
  return "rank " + std::to_string(f.torus_rank) + ", components " + f.components.get_str();
}

std::complex<double> read_complex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  bad("complex values are numbers or [re, im] pairs");
}

Angle read_angle(const Json& j) {
  if (j.is_string()) return Angle::parse(j.get<std::string>());
  if (j.is_number_integer()) return Angle(Rational(json::to_integer(j)));
  if (j.is_number()) return Angle::from_real(j.get<double>());
  bad("angles are \"p/q\" strings or numbers");
}

LogPointKind read_kind(const Json& j) {
  const std::string k = need(j, "kind").get<std::string>();
  if (k == "empty") return LogPointKind::Empty;
  if (k == "trivial") return LogPointKind::Trivial;
  if (k == "standard") return LogPointKind::Standard;
  if (k == "polar") return LogPointKind::Polar;
  bad("unknown log point kind \"" + k + "\"");
}

MonoidMorphism read_monoid_morphism(const Json& j) {
  return MonoidMorphism(json::to_matrix(need(j, "matrix")), json::monoid_from_json(need(j, "domain")),
                        json::monoid_from_json(need(j, "codomain")));
}

void print_cone(std::ostream& os, const RationalCone& c) {
  os << "dim: " << c.dim() << "\n";
  os << "sharp: " << (c.is_sharp() ? "yes" : "no") << "\n";
  os << "rays: " << text(c.rays()) << "\n";
  os << "lineality: " << text(c.lineality()) << "\n";
  os << "facets: " << text(c.facets()) << "\n";
  os << "equations: " << text(c.equations()) << "\n";
}

// lattice

int lattice_hnf(Context& c) {
  const IntMatrix m = json::to_matrix(need(c.in, "matrix"));
  const HermiteForm f = hnf(m);
  if (c.as_json) return emit(c, Json{{"h", json::to_json(f.h)}, {"u", json::to_json(f.u)}});
  c.out << "h: " << text(json::to_json(f.h)) << "\nu: " << text(json::to_json(f.u)) << "\n";
  return 0;
}

int lattice_snf(Context& c) {
  const IntMatrix m = json::to_matrix(need(c.in, "matrix"));
  const SmithForm f = snf(m);
  if (c.as_json)
    return emit(c, Json{{"s", json::to_json(f.s)}, {"u", json::to_json(f.u)}, {"v", json::to_json(f.v)}});
  c.out << "s: " << text(json::to_json(f.s)) << "\nu: " << text(json::to_json(f.u))
        << "\nv: " << text(json::to_json(f.v)) << "\n";
  return 0;
}

int lattice_quotient(Context& c) {
  const Integer n = json::to_integer(need(c.in, "ambient_rank"));
  if (n < 0 || !n.fits_ulong_p()) bad("bad ambient rank");
  std::vector<IntVector> gens;
  for (const auto& g : need(c.in, "generators")) gens.push_back(json::to_vector(g));
  for (const auto& g : gens)
    if (g.size() != n.get_ui()) bad("generator length differs from ambient rank");
  const auto inv = quotient_invariants(n.get_ui(), IntMatrix::from_columns(n.get_ui(), gens));
  if (c.as_json) return emit(c, json::to_json(inv));
  c.out << inv.to_string() << "\n";
  return 0;
}

int lattice_pairing(Context& c) {
  const IntVector w = json::to_vector(need(c.in, "w"));
  const IntVector m = json::to_vector(need(c.in, "m"));
  if (w.size() != m.size()) bad("w and m must have equal length");
  const Integer p = pairing(w, m);
  if (c.as_json) return emit(c, Json{{"pairing", json::to_json(p)}});
  c.out << p.get_str() << "\n";
  return 0;
}

int lattice_primitive(Context& c) {
  const IntVector v = primitive(json::to_vector(need(c.in, "vector")));
  if (c.as_json) return emit(c, Json{{"primitive", json::to_json(v)}});
  c.out << text(v) << "\n";
  return 0;
}

// cones

int cone_dual(Context& c) {
  const RationalCone d = json::cone_from_json(c.in).dual();
  if (c.as_json) return emit(c, json::to_json(d));
  print_cone(c.out, d);
  return 0;
}

int cone_faces(Context& c) {
  const auto fs = json::cone_from_json(c.in).faces();
  if (c.as_json) {
    Json a = Json::array();
    for (const auto& f : fs) a.push_back(json::to_json(f));
    return emit(c, Json{{"faces", a}});
  }
  Table t({"dim", "rays", "lineality"});
  for (const auto& f : fs) t.add({std::to_string(f.dim()), text(f.rays()), text(f.lineality())});
  t.print(c.out);
  return 0;
}

int cone_contains(Context& c) {
  const RationalCone cone = json::cone_from_json(c.in);
  RatVector v;
  for (const auto& e : need(c.in, "vector")) {
    if (e.is_string()) {
      Rational q;
      if (q.set_str(e.get<std::string>(), 10) != 0) bad("bad rational " + e.dump());
      q.canonicalize();
      v.push_back(q);
    } else {
      v.push_back(Rational(json::to_integer(e)));
    }
  }
  if (v.size() != cone.ambient_rank()) bad("vector length differs from ambient rank");
  const bool in = cone.contains(v);
  if (c.as_json) return emit(c, Json{{"contains", in}});
  c.out << (in ? "yes" : "no") << "\n";
  return 0;
}

int cone_intersect(Context& c) {
  const Json& cs = need(c.in, "cones");
  if (!cs.is_array() || cs.size() != 2) bad("\"cones\" must hold two cones");
  const RationalCone a = json::cone_from_json(cs[0]);
  const RationalCone b = json::cone_from_json(cs[1]);
  if (a.ambient_rank() != b.ambient_rank()) bad("cones live in different ranks");
  const RationalCone m = a.intersect(b);
  const bool fa = m.is_face_of(a), fb = m.is_face_of(b);
  if (c.as_json)
    return emit(c, Json{{"intersection", json::to_json(m)}, {"face_of_first", fa}, {"face_of_second", fb}});
  print_cone(c.out, m);
  c.out << "face of first: " << (fa ? "yes" : "no") << "\nface of second: " << (fb ? "yes" : "no")
        << "\n";
  return 0;
}

int cone_hilbert(Context& c) {
  const RationalCone cone = json::cone_from_json(c.in);
  const auto hb = hilbert_basis(cone, IntMatrix::identity(cone.ambient_rank()));
  if (c.as_json) {
    Json a = Json::array();
    for (const auto& v : hb) a.push_back(json::to_json(v));
    return emit(c, Json{{"hilbert_basis", a}});
  }
  c.out << "hilbert basis: " << text(hb) << "\n";
  return 0;
}

// monoids

int monoid_info(Context& c) {
  const ToricMonoid g = json::monoid_from_json(c.in);
  const MonoidFace e = edge(g);
  const bool sat = is_saturated(g);
  if (c.as_json)
    return emit(c, Json{{"monoid", json::to_json(g)},
                        {"gp", json::to_json(g.gp())},
                        {"gp_rank", g.gp_rank()},
                        {"exponent_cone", json::to_json(g.exponent_cone())},
                        {"weight_cone", json::to_json(g.weight_cone())},
                        {"edge", json::to_json(e)},
                        {"saturated", sat}});
  c.out << "generators: " << text(g.generators()) << "\n";
  c.out << "gp basis: " << text(json::to_json(g.gp().transpose())) << " (rank " << g.gp_rank() << ")\n";
  c.out << "exponent cone: " << g.exponent_cone().to_string() << "\n";
  c.out << "weight cone: " << g.weight_cone().to_string() << "\n";
  c.out << "units: " << face_text(e) << " " << e.monoid.to_string() << "\n";
  c.out << "saturated: " << (sat ? "yes" : "no") << "\n";
  return 0;
}

int monoid_contains(Context& c) {
  const ToricMonoid g = json::monoid_from_json(c.in);
  const IntVector m = json::to_vector(need(c.in, "element"));
  if (m.size() != g.ambient_rank()) bad("element length differs from ambient rank");
  const auto w = membership(g, m);
  const bool sat = saturation_membership(g, m);
  if (c.as_json) {
    Json j{{"member", w.has_value()}, {"witness", nullptr}, {"in_saturation", sat}};
    if (w) j["witness"] = json::to_json(*w);
    return emit(c, j);
  }
  c.out << "member: " << (w ? "yes" : "no") << "\n";
  if (w) c.out << "witness: " << text(*w) << "\n";
  c.out << "in saturation: " << (sat ? "yes" : "no") << "\n";
  return 0;
}

int monoid_saturate(Context& c) {
  const ToricMonoid g = json::monoid_from_json(c.in);
  const ToricMonoid s = saturate(g);
  const bool was = is_saturated(g);
  if (c.as_json) return emit(c, Json{{"saturation", json::to_json(s)}, {"was_saturated", was}});
  c.out << "generators: " << text(s.generators()) << "\n";
  c.out << "input saturated: " << (was ? "yes" : "no") << "\n";
  return 0;
}

int monoid_faces(Context& c) {
  const ToricMonoid g = json::monoid_from_json(c.in);
  const auto ps = prime_ideals(g);
  if (c.as_json) {
    Json a = Json::array();
    for (const auto& p : ps) {
      Json f = json::to_json(p.face);
      f["prime_ideal_complement_of"] = p.complement;
      a.push_back(f);
    }
    return emit(c, Json{{"faces", a}});
  }
  Table t({"face", "generators", "prime ideal generated by"});
  for (const auto& p : ps) {
    std::vector<IntVector> outside;
    for (auto i : p.complement) outside.push_back(g.generators()[i]);
    t.add({face_text(p.face), text(p.face.monoid.generators()), text(outside)});
  }
  t.print(c.out);
  return 0;
}

int monoid_localize(Context& c) {
  const ToricMonoid g = json::monoid_from_json(c.in);
  const ToricMonoid l = localize(g, read_face(c.in, g));
  if (c.as_json) return emit(c, json::to_json(l));
  c.out << "generators: " << text(l.generators()) << "\n";
  return 0;
}

int monoid_ghost(Context& c) {
  const ToricMonoid g = json::monoid_from_json(c.in);
  std::vector<MonoidFace> fs;
  if (c.in.contains("face")) fs.push_back(read_face(c.in, g));
  else fs = faces(g);
  std::vector<GhostReport> gs;
  for (const auto& f : fs) gs.push_back(ghost(g, f));
  if (c.as_json) {
    Json a = Json::array();
    for (const auto& r : gs) a.push_back(json::to_json(r));
    return emit(c, Json{{"ghosts", a}});
  }
  Table t({"face", "face rank", "ghost group"});
  for (const auto& r : gs)
    t.add({face_text(r.face), std::to_string(r.face_rank), r.quotient_invariants.to_string()});
  t.print(c.out);
  return 0;
}

int monoid_equal_verb(Context& c) {
  const Json& ms = need(c.in, "monoids");
  if (!ms.is_array() || ms.size() != 2) bad("\"monoids\" must hold two monoids");
  const bool eq = monoid_equal(json::monoid_from_json(ms[0]), json::monoid_from_json(ms[1]));
  if (c.as_json) return emit(c, Json{{"equal", eq}});
  c.out << (eq ? "equal" : "different") << "\n";
  return 0;
}

// fans

int print_fan_report(Context& c, const FanReport& r) {
  if (c.as_json) {
    emit(c, json::to_json(r));
    return r.passed() ? 0 : 1;
  }
  c.out << (r.passed() ? "PASS" : "FAIL") << "\n";
  if (!r.passed()) {
    Table t({"code", "entry", "partner", "detail"});
    for (const auto& i : r.issues)
      t.add({std::string(to_string(i.code)), std::to_string(i.first), std::to_string(i.second), i.detail});
    t.print(c.out);
  }
  return r.passed() ? 0 : 1;
}

void print_fanmon(Context& c, const FanOfMonoids& f) {
  Table t({"cone rays", "monoid generators"});
  for (const auto& e : f.entries) t.add({text(e.cone.rays()), text(e.monoid.generators())});
  t.print(c.out);
}

int fan_check(Context& c) { return print_fan_report(c, validate_fan(json::fan_from_json(c.in))); }

int fanmon_check(Context& c) {
  return print_fan_report(c, validate_fan_of_monoids(json::fanmon_from_json(c.in)));
}

int fanmon_atlas(Context& c) {
  const FanOfMonoids f = affine_atlas(json::monoid_from_json(c.in));
  if (c.as_json) return emit(c, json::to_json(f));
  print_fanmon(c, f);
  return 0;
}

int fanmon_normal(Context& c) {
  const Fan fan = json::fan_from_json(c.in);
  const FanReport r = validate_fan(fan);
  if (!r.passed()) return print_fan_report(c, r);
  const FanOfMonoids f = normal_fan_of_monoids(fan);
  if (c.as_json) return emit(c, json::to_json(f));
  print_fanmon(c, f);
  return 0;
}

int fanmon_strata(Context& c) {
  const FanOfMonoids f = json::fanmon_from_json(c.in);
  const FanReport r = validate_fan_of_monoids(f);
  if (!r.passed()) return print_fan_report(c, r);
  const auto ss = strata(f);
  if (c.as_json) {
    Json a = Json::array();
    for (const auto& s : ss)
      a.push_back(Json{{"cone", s.entry},
                       {"rays", json::to_json(s.cone).at("rays")},
                       {"orbit_dimension", s.orbit_dimension},
                       {"chart", s.chart},
                       {"ghost", json::to_json(s.ghost.quotient_invariants)}});
    return emit(c, Json{{"strata", a}});
  }
  Table t({"cone", "rays", "orbit dim", "ghost group"});
  for (const auto& s : ss)
    t.add({std::to_string(s.entry), text(s.cone.rays()), std::to_string(s.orbit_dimension),
           s.ghost.quotient_invariants.to_string()});
  t.print(c.out);
  return 0;
}

// morphisms

int print_morphism_report(Context& c, const MorphismReport& r) {
  if (c.as_json) {
    emit(c, json::to_json(r));
    return r.passed() ? 0 : 1;
  }
  c.out << (r.passed() ? "PASS" : "FAIL") << "\n";
  if (!r.rank_ok) c.out << "nu does not match the fan ranks\n";
  Table t({"source cone", "target cone", "ok", "detail"});
  for (const auto& ch : r.charts)
    t.add({std::to_string(ch.source), ch.target ? std::to_string(*ch.target) : "-", ch.ok ? "yes" : "no",
           ch.detail});
  t.print(c.out);
  return r.passed() ? 0 : 1;
}

int morphism_check(Context& c) {
  return print_morphism_report(c, check_morphism(json::morphism_from_json(c.in)));
}

int morphism_normalize(Context& c) {
  const ToricMorphismData d = normalization_morphism(json::monoid_from_json(c.in));
  const MorphismReport r = check_morphism(d);
  if (c.as_json) {
    emit(c, Json{{"morphism", json::to_json(d)}, {"check", json::to_json(r)}});
    return r.passed() ? 0 : 1;
  }
  c.out << "source (normalization):\n";
  print_fanmon(c, d.source);
  c.out << "target:\n";
  print_fanmon(c, d.target);
  return print_morphism_report(c, r);
}

int morphism_apply(Context& c) {
  const MonoidMorphism mu = read_monoid_morphism(c.in);
  std::vector<std::complex<double>> values;
  for (const auto& v : need(c.in, "values")) values.push_back(read_complex(v));
  const ComplexPoint p = ComplexPoint::from_values(mu.codomain(), values);
  const ComplexPoint q = apply_to_point(mu, p);
  std::vector<std::complex<double>> image;
  for (const auto& g : q.monoid().generators()) image.push_back(q.evaluate(g));
  if (c.as_json) {
    Json a = Json::array();
    for (auto z : image) a.push_back(Json::array({z.real(), z.imag()}));
    return emit(c, Json{{"face", q.face().indices}, {"values", a}});
  }
  Table t({"generator", "value"});
  for (std::size_t i = 0; i < image.size(); ++i)
    t.add({text(q.monoid().generators()[i]), text(image[i])});
  t.print(c.out);
  return 0;
}

// rounding

void print_polar(Context& c, const ToricMonoid& g, const std::vector<PolarValue>& vs) {
  Table t({"generator", "radius", "angle"});
  for (std::size_t i = 0; i < vs.size(); ++i)
    t.add({text(g.generators()[i]), text(vs[i].radius), vs[i].angle.to_string()});
  t.print(c.out);
}

int round_encode(Context& c) {
  const ToricMonoid g = json::monoid_from_json(c.in);
  std::vector<PolarValue> images;
  for (const auto& e : need(c.in, "images")) {
    PolarValue v;
    const Json& r = need(e, "radius");
    if (!r.is_number()) bad("radius must be a number");
    v.radius = r.get<double>();
    v.angle = read_angle(need(e, "angle"));
    images.push_back(v);
  }
  const RoundingPoint p = encode_hom(g, images);
  std::vector<PolarValue> back;
  for (const auto& m : g.generators()) back.push_back(evaluate_monomial(p, m));
  if (c.as_json) return emit(c, json::to_json(p));
  c.out << "face: " << face_text(p.face()) << "\n";
  c.out << "radial_log: " << Json(p.radial_log()).dump() << "\n";
  std::vector<std::string> as;
  for (const auto& a : p.angle()) as.push_back(a.to_string());
  c.out << "angle: " << Json(as).dump() << "\n";
  print_polar(c, g, back);
  return 0;
}

int round_tau(Context& c) {
  const ToricMonoid g = json::monoid_from_json(c.in);
  const RoundingPoint p = json::rounding_point_from_json(need(c.in, "point"), g);
  const ComplexPoint x = tau(p);
  std::vector<std::complex<double>> vals;
  for (const auto& m : g.generators()) vals.push_back(evaluate_monomial(x, m));
  if (c.as_json) {
    Json angle = Json::array();
    for (const auto& a : x.angle()) angle.push_back(a.to_string());
    Json vs = Json::array();
    for (auto z : vals) vs.push_back(Json::array({z.real(), z.imag()}));
    return emit(c, Json{{"face", x.face().indices}, {"radial_log", x.radial_log()}, {"angle", angle},
                        {"values", vs}});
  }
  c.out << "face: " << face_text(x.face()) << "\n";
  Table t({"generator", "value"});
  for (std::size_t i = 0; i < vals.size(); ++i) t.add({text(g.generators()[i]), text(vals[i])});
  t.print(c.out);
  return 0;
}

int round_fiber(Context& c) {
  const ToricMonoid g = json::monoid_from_json(c.in);
  const FiberReport f = fiber_structure(g, read_face(c.in, g));
  if (c.as_json) return emit(c, json::to_json(f));
  c.out << fiber_text(f) << "\n";
  return 0;
}

int round_report(Context& c) {
  const FanOfMonoids f = json::fanmon_from_json(c.in);
  const FanReport r = validate_fan_of_monoids(f);
  if (!r.passed()) return print_fan_report(c, r);
  const auto rows = rounding_report(f);
  if (c.as_json) {
    Json a = Json::array();
    for (const auto& row : rows)
      a.push_back(Json{{"rays", json::to_json(row.cone).at("rays")},
                       {"orbit_dimension", row.orbit_dimension},
                       {"fiber", json::to_json(row.fiber)},
                       {"boundary", row.boundary}});
    return emit(c, Json{{"strata", a}});
  }
  Table t({"cone rays", "orbit dim", "fiber rank", "components", "boundary"});
  for (const auto& row : rows)
    t.add({text(row.cone.rays()), std::to_string(row.orbit_dimension),
           std::to_string(row.fiber.torus_rank), row.fiber.components.get_str(),
           row.boundary ? "yes" : "no"});
  t.print(c.out);
  return 0;
}

int round_relative(Context& c) {
  const MonoidMorphism mu = read_monoid_morphism(c.in);
  const FiberReport f = relative_fiber(mu, read_face(c.in, mu.codomain()));
  if (c.as_json) return emit(c, json::to_json(f));
  c.out << fiber_text(f) << "\n";
  return 0;
}

int round_stalk(Context& c) {
  const ToricMonoid g = json::monoid_from_json(c.in);
  const LogStalk s = associated_log_stalk(g, read_face(c.in, g));
  if (c.as_json)
    return emit(c, Json{{"stalk", s.describe()}, {"trivial", s.trivial()}, {"ghost", json::to_json(s.ghost())}});
  c.out << "stalk: " << s.describe() << "\n";
  return 0;
}

int round_logpoint(Context& c) {
  const LogPointDescriptor d = log_point(read_kind(c.in));
  if (c.as_json)
    return emit(c, Json{{"kind", std::string(to_string(d.kind))}, {"monoid", d.monoid}, {"map", d.evaluation}});
  c.out << to_string(d.kind) << ": " << d.monoid << " -> (C, *), " << d.evaluation << "\n";
  return 0;
}

int round_points(Context& c) {
  const ToricMonoid g = json::monoid_from_json(c.in);
  const LogPointKind kind = read_kind(c.in);
  const auto ss = points_of(g, kind);
  if (c.as_json) {
    Json a = Json::array();
    for (const auto& s : ss)
      a.push_back(Json{{"face", s.face.indices}, {"orbit_dimension", s.orbit_dimension},
                       {"fiber", json::to_json(s.fiber)}});
    return emit(c, Json{{"kind", std::string(to_string(kind))}, {"strata", a}});
  }
  Table t({"face", "orbit dim", "fiber"});
  for (const auto& s : ss) t.add({face_text(s.face), std::to_string(s.orbit_dimension), fiber_text(s.fiber)});
  t.print(c.out);
  return 0;
}

int round_strict(Context& c) {
  const ToricMonoid g = json::monoid_from_json(c.in);
  std::size_t samples = 8;
  if (c.in.contains("samples")) samples = json::to_integer(c.in.at("samples")).get_ui();
  bool all = true;
  Json a = Json::array();
  Table t({"face", "cartesian"});
  for (const auto& f : faces(g)) {
    const bool ok = strict_restriction_check(g, f, samples);
    all = all && ok;
    a.push_back(Json{{"face", f.indices}, {"ok", ok}});
    t.add({face_text(f), ok ? "yes" : "no"});
  }
  if (c.as_json) {
    emit(c, Json{{"passed", all}, {"faces", a}});
  } else {
    c.out << (all ? "PASS" : "FAIL") << "\n";
    t.print(c.out);
  }
  return all ? 0 : 1;
}

int milnor_strata(Context& c) {
  const FiberReport f = milnor_stratum_fiber(json::multiplicities_from_json(c.in));
  if (c.as_json) return emit(c, json::to_json(f));
  c.out << fiber_text(f) << "\n";
  return 0;
}

// snc

int snc_link(Context& c) {
  const auto rows = link_report(json::complex_from_json(c.in, c.complete));
  if (c.as_json) {
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(json::to_json(r));
    return emit(c, Json{{"rows", a}});
  }
  Table t({"simplex", "depth", "stratum dim", "link fiber"});
  for (const auto& r : rows)
    t.add({Json(r.simplex.vertices).dump(), std::to_string(r.depth), std::to_string(r.stratum_dim),
           fiber_text(r.link)});
  t.print(c.out);
  return 0;
}

int snc_milnor(Context& c) {
  const MilnorReport rep = milnor_report(json::complex_from_json(c.in, c.complete));
  if (c.as_json) {
    Json a = Json::array();
    for (const auto& r : rep.rows) a.push_back(json::to_json(r));
    Json s = Json::array();
    for (const auto& d : rep.summary)
      s.push_back(Json{{"depth", d.depth}, {"strata", d.strata}, {"components", json::to_json(d.components)}});
    return emit(c, Json{{"rows", a}, {"summary", s}});
  }
  Table t({"simplex", "depth", "stratum dim", "milnor fiber"});
  for (const auto& r : rep.rows)
    t.add({Json(r.simplex.vertices).dump(), std::to_string(r.depth), std::to_string(r.stratum_dim),
           fiber_text(*r.milnor)});
  t.print(c.out);
  Table s({"depth", "strata", "components"});
  for (const auto& d : rep.summary)
    s.add({std::to_string(d.depth), std::to_string(d.strata), d.components.get_str()});
  c.out << "\n";
  s.print(c.out);
  return 0;
}

const std::vector<Verb>& table() {
  static const std::vector<Verb> t = {
      {{"lattice hnf", "column Hermite normal form of {matrix}", {"hnf"}}, lattice_hnf},
      {{"lattice snf", "Smith normal form of {matrix}", {"snf"}}, lattice_snf},
      {{"lattice quotient", "invariants of Z^ambient_rank / <generators>", {"quotient_invariants"}},
       lattice_quotient},
      {{"lattice pairing", "<w, m>", {"pairing"}}, lattice_pairing},
      {{"lattice primitive", "primitive vector on the ray of {vector}", {"primitive"}}, lattice_primitive},
      {{"cone dual", "dual cone", {"dual_cone", "dim", "is_sharp"}}, cone_dual},
      {{"cone faces", "all faces of a cone", {"faces(cone)", "dim"}}, cone_faces},
      {{"cone contains", "membership of a rational {vector}", {"contains(cone)"}}, cone_contains},
      {{"cone intersect", "intersection of two {cones}", {"intersect", "is_face_of"}}, cone_intersect},
      {{"cone hilbert", "Hilbert basis of Z^n ∩ cone", {"hilbert_basis"}}, cone_hilbert},
      {{"monoid info", "group, cones, units, saturation",
        {"gp", "exponent_cone", "weight_cone", "edge", "is_saturated"}},
       monoid_info},
      {{"monoid contains", "membership of {element}", {"membership", "saturation_membership"}},
       monoid_contains},
      {{"monoid saturate", "saturation", {"saturate", "is_saturated"}}, monoid_saturate},
      {{"monoid faces", "faces and prime ideals", {"faces(monoid)", "prime_ideals"}}, monoid_faces},
      {{"monoid localize", "Gamma + Phi^gp for {face}", {"localize"}}, monoid_localize},
      {{"monoid ghost", "ghost groups at {face} or at every face", {"ghost"}}, monoid_ghost},
      {{"monoid equal", "equality of two {monoids}", {"monoid_equal"}}, monoid_equal_verb},
      {{"fan check", "fan axioms", {"validate_fan"}}, fan_check},
      {{"fanmon check", "fan-of-monoids axioms", {"validate_fan_of_monoids"}}, fanmon_check},
      {{"fanmon atlas", "affine atlas of a monoid", {"affine_atlas"}}, fanmon_atlas},
      {{"fanmon normal", "normal fan of monoids of a fan", {"normal_fan_of_monoids"}}, fanmon_normal},
      {{"fanmon strata", "torus orbits with ghost groups", {"strata"}}, fanmon_strata},
      {{"morphism check", "compatibility of nu with two fans of monoids", {"check_morphism"}},
       morphism_check},
      {{"morphism normalize", "normalization morphism of a monoid", {"normalization_morphism"}},
       morphism_normalize},
      {{"morphism apply", "pull a point back along {matrix}: domain -> codomain", {"apply_to_point"}},
       morphism_apply},
      {{"round encode", "rounding point from generator {images}", {"encode_hom", "evaluate_monomial"}},
       round_encode},
      {{"round tau", "image of a rounding {point}", {"tau", "evaluate_monomial"}}, round_tau},
      {{"round fiber", "rounding fiber over the stratum of {face}", {"fiber_structure"}}, round_fiber},
      {{"round report", "rounding fibers of all strata of a fan of monoids", {"rounding_report"}},
       round_report},
      {{"round relative", "relative fiber of a morphism over {face}", {"relative_fiber"}}, round_relative},
      {{"round stalk", "stalk of the associated log structure at {face}", {"associated_log_stalk"}},
       round_stalk},
      {{"round logpoint", "log point of {kind}", {"log_point"}}, round_logpoint},
      {{"round points", "points with values in a log point of {kind}", {"points_of"}}, round_points},
      {{"round strict", "strict restriction check on every face", {"strict_restriction_check"}},
       round_strict},
      {{"milnor strata", "Milnor fiber over a stratum with {multiplicities}", {"milnor_stratum_fiber"}},
       milnor_strata},
      {{"snc link", "link strata of a dual complex", {"link_report"}}, snc_link},
      {{"snc milnor", "Milnor fibration strata of a dual complex", {"milnor_report"}}, snc_milnor},
  };
  return t;
}

Json read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return Json::parse(in);
  std::ifstream f(path);
  if (!f) bad("cannot open " + path);
  return Json::parse(f);
}

}  // namespace

const std::vector<VerbInfo>& verbs() {
  static const std::vector<VerbInfo> v = [] {
    std::vector<VerbInfo> out;
    for (const auto& e : table()) out.push_back(e.info);
    return out;
  }();
  return v;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"torolog: toric monoids, fans, log structures and their roundings"};
  app.name("torolog");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  bool strict = false;
  std::string input;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--input", input, "input JSON file (default: stdin)");
  app.add_flag("--strict-complex", strict, "reject dual complexes that are not subset-closed");

  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, Handler>> leaves;
  for (const auto& v : table()) {
    const auto sp = v.info.path.find(' ');
    const std::string group = v.info.path.substr(0, sp);
    if (!groups.contains(group)) {
      groups[group] = app.add_subcommand(group, group + " commands");
      groups[group]->require_subcommand(1);
      groups[group]->fallthrough();
    }
    CLI::App* leaf = groups[group]->add_subcommand(v.info.path.substr(sp + 1), v.info.summary);
    leaf->fallthrough();
    leaves.emplace_back(leaf, v.handler);
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  Handler handler = nullptr;
  for (const auto& [leaf, h] : leaves)
    if (leaf->parsed()) handler = h;
  if (!handler) {
    err << "error: missing verb\n" << app.help();
    return 2;
  }
  try {
    const Json doc = read_input(input, in);
    Context ctx{doc, as_json, !strict, out};
    return handler(ctx);
  } catch (const nlohmann::json::parse_error& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: unexpected JSON shape: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    const bool validation = e.code() == ErrorCode::InvalidComplex || e.code() == ErrorCode::InvalidFan ||
                            e.code() == ErrorCode::NotAMorphism ||
                            e.code() == ErrorCode::MissingMultiplicities;
    return validation ? 1 : 2;
  }
}

}  // namespace torolog::cli
