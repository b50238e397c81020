#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using torolog::cli::run;
using torolog::cli::verbs;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& path) {
  std::vector<std::string> v;
  std::istringstream s(path);
  for (std::string w; s >> w;) v.push_back(w);
  return v;
}

std::string data(const std::string& name) { return std::string(TOROLOG_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

const std::string cusp = R"({"ambient_rank": 1, "generators": [[2], [3]]})";
const std::string n2 = R"({"generators": [[1, 0], [0, 1]]})";
const std::string p1 =
    R"({"rank": 1, "entries": [{"cone": {"rays": [[1]]}, "monoid": {"generators": [[1]]}},
        {"cone": {"rays": [[-1]]}, "monoid": {"generators": [[-1]]}},
        {"cone": {"ambient_rank": 1, "rays": []}, "monoid": {"generators": [[1], [-1]]}}]})";
const std::string torus = R"({"rank": 1, "entries": [{"cone": {"ambient_rank": 1, "rays": []},
        "monoid": {"generators": [[1], [-1]]}}]})";

// One valid input for every verb.
const std::map<std::string, std::string>& inputs() {
  static const std::map<std::string, std::string> m = {
      {"lattice hnf", R"({"matrix": [[2, 4], [1, 3]]})"},
      {"lattice snf", R"({"matrix": [[2, 4], [6, 8]]})"},
      {"lattice quotient", R"({"ambient_rank": 2, "generators": [[2, 0], [0, 3]]})"},
      {"lattice pairing", R"({"w": [1, 2], "m": [3, 4]})"},
      {"lattice primitive", R"({"vector": [4, 6]})"},
      {"cone dual", R"({"rays": [[1, 0], [1, 2]]})"},
      {"cone faces", R"({"rays": [[1, 0], [0, 1]]})"},
      {"cone contains", R"({"rays": [[1, 0], [0, 1]], "vector": ["1/2", 3]})"},
      {"cone intersect", R"({"cones": [{"rays": [[1, 0], [0, 1]]}, {"rays": [[1, 0], [0, -1]]}]})"},
      {"cone hilbert", R"({"rays": [[1, 0], [1, 2]]})"},
      {"monoid info", cusp},
      {"monoid contains", R"({"generators": [[2], [3]], "element": [1]})"},
      {"monoid saturate", cusp},
      {"monoid faces", n2},
      {"monoid localize", R"({"generators": [[1, 0], [0, 1]], "face": [0]})"},
      {"monoid ghost", n2},
      {"monoid equal", R"({"monoids": [{"generators": [[1]]}, {"generators": [[1], [2]]}]})"},
      {"fan check", R"({"rank": 1, "cones": [[[1]], [[-1]], []]})"},
      {"fanmon check", slurp(data("c2_atlas.json"))},
      {"fanmon atlas", n2},
      {"fanmon normal", R"({"rank": 1, "cones": [[[1]], [[-1]], []]})"},
      {"fanmon strata", p1},
      {"morphism check", R"({"nu": [[1]], "source": )" + torus + R"(, "target": )" + p1 + "}"},
      {"morphism normalize", cusp},
      {"morphism apply",
       R"({"matrix": [[1]], "domain": {"generators": [[2], [3]]}, "codomain": {"generators": [[1]]},
           "values": [2]})"},
      {"round encode",
       R"({"generators": [[1]], "images": [{"radius": 0, "angle": "1/4"}]})"},
      {"round tau",
       R"({"generators": [[1]], "point": {"face": [], "radial_log": [], "angle": ["1/4"]}})"},
      {"round fiber", R"({"generators": [[2, 0], [0, 1], [1, 1]], "face": [0]})"},
      {"round report", p1},
      {"round relative",
       R"({"matrix": [[2], [4]], "domain": {"generators": [[1]]},
           "codomain": {"generators": [[1, 0], [0, 1]]}, "face": []})"},
      {"round stalk", R"({"generators": [[1]], "face": []})"},
      {"round logpoint", R"({"kind": "standard"})"},
      {"round points", R"({"generators": [[1]], "kind": "polar"})"},
      {"round strict", R"({"generators": [[2, 0], [0, 1], [1, 1]], "samples": 3})"},
      {"milnor strata", R"({"multiplicities": [2, 4]})"},
      {"snc link", R"({"n": 2, "vertices": 2, "simplices": [[0, 1]]})"},
      {"snc milnor", R"({"n": 2, "vertices": 2, "simplices": [[0], [1], [0, 1]], "multiplicities": [2, 4]})"},
  };
  return m;
}

}  // namespace

TEST_CASE("documented examples") {
  const Result a = call({"--input", data("cusp.json"), "monoid", "saturate"}, "");
  CHECK(a.code == 0);
  CHECK(a.out.find("generators: [[1]]") != std::string::npos);

  const Result b = call({"--input", data("c2_atlas.json"), "fanmon", "check"}, "");
  CHECK(b.code == 0);
  CHECK(b.out.rfind("PASS", 0) == 0);

  const Result c = call({"milnor", "strata"}, R"({"multiplicities": [2, 4]})");
  CHECK(c.code == 0);
  CHECK(c.out.find("rank 1, components 2") != std::string::npos);
}

TEST_CASE("every verb runs on a valid input, in both formats") {
  for (const auto& v : verbs()) {
    CAPTURE(v.path);
    const auto it = inputs().find(v.path);
    REQUIRE(it != inputs().end());
    const Result t = call(split(v.path), it->second);
    CHECK(t.code == 0);
    CHECK_FALSE(t.out.empty());
    CHECK(t.err.empty());
    std::vector<std::string> args = split(v.path);
    args.insert(args.begin(), "--json");
    const Result j = call(args, it->second);
    CHECK(j.code == 0);
    CHECK(nlohmann::ordered_json::accept(j.out));
  }
}

TEST_CASE("output is deterministic") {
  for (const auto& [path, input] : inputs()) {
    CAPTURE(path);
    for (bool js : {false, true}) {
      std::vector<std::string> args = split(path);
      if (js) args.insert(args.begin(), "--json");
      const Result a = call(args, input), b = call(args, input);
      CHECK(a.out == b.out);
      CHECK(a.code == b.code);
    }
  }
}

TEST_CASE("exit codes") {
  // validation failures
  CHECK(call({"fan", "check"}, R"({"rank": 1, "cones": [[[1]], [[-1]]]})").code == 1);
  CHECK(call({"fanmon", "check"},
             R"({"rank": 1, "entries": [{"cone": {"rays": [[1]]}, "monoid": {"generators": [[2]]}}]})")
            .code == 1);
  CHECK(call({"morphism", "check"},
             R"({"nu": [[1]], "source": {"rank": 1, "entries": [{"cone": {"rays": [[1]]},
                 "monoid": {"generators": [[1]]}}]}, "target": )" +
                 torus + "}")
            .code == 1);
  CHECK(call({"snc", "milnor"}, R"({"n": 2, "vertices": 1, "simplices": [[0]]})").code == 1);
  CHECK(call({"--strict-complex", "snc", "link"}, R"({"n": 2, "vertices": 2, "simplices": [[0, 1]]})").code == 1);
  // malformed input
  const Result bad = call({"monoid", "saturate"}, "{\"generators\": [[1],\n [2}");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(call({"monoid", "saturate"}, R"({"gens": [[1]]})").code == 2);
  CHECK(call({"monoid", "saturate"}, R"({"generators": [[1], [1, 2]]})").code == 2);
  CHECK(call({"--input", data("missing.json"), "monoid", "saturate"}, "").code == 2);
  // unknown verbs
  const Result u = call({"monoid", "frobnicate"}, cusp);
  CHECK(u.code == 2);
  CHECK(u.err.find("monoid") != std::string::npos);
  CHECK(call({"frobnicate"}, cusp).code == 2);
  CHECK(call({}, cusp).code == 2);
}

TEST_CASE("completion of complexes is on by default") {
  const Result r = call({"snc", "link"}, R"({"n": 2, "vertices": 2, "simplices": [[0, 1]]})");
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(
      call({"--json", "snc", "link"}, R"({"n": 2, "vertices": 2, "simplices": [[0, 1]]})").out);
  CHECK(j.at("rows").size() == 3);
}

TEST_CASE("every library operation is reachable from a verb") {
  std::set<std::string> covered;
  for (const auto& v : verbs())
    for (const auto& op : v.operations) covered.insert(op);
  const std::vector<std::string> ops = {
      "hnf", "snf", "quotient_invariants", "pairing", "primitive", "dual_cone", "contains(cone)",
      "faces(cone)", "is_sharp", "intersect", "is_face_of", "dim", "membership", "gp", "exponent_cone",
      "weight_cone", "edge", "faces(monoid)", "prime_ideals", "saturation_membership", "hilbert_basis",
      "saturate", "is_saturated", "localize", "ghost", "monoid_equal", "validate_fan",
      "validate_fan_of_monoids", "affine_atlas", "normal_fan_of_monoids", "strata", "check_morphism",
      "normalization_morphism", "apply_to_point", "encode_hom", "tau", "evaluate_monomial",
      "fiber_structure", "rounding_report", "relative_fiber", "milnor_stratum_fiber",
      "associated_log_stalk", "log_point", "points_of", "strict_restriction_check", "link_report",
      "milnor_report"};
  for (const auto& op : ops) {
    CAPTURE(op);
    CHECK(covered.contains(op));
  }
}

TEST_CASE("json output carries exact values") {
  const auto j = nlohmann::ordered_json::parse(call({"--json", "monoid", "saturate"}, cusp).out);
  CHECK(j.at("was_saturated") == false);
  const auto r = nlohmann::ordered_json::parse(call({"--json", "round", "fiber"},
                                                   inputs().at("round fiber")).out);
  CHECK(r.dump().find("\"components\":2") != std::string::npos);
}
