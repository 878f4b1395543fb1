#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "orichain/corpus.hpp"
#include "orichain/errors.hpp"
#include "orichain/io.hpp"

using namespace orichain;
using io::Label;
using io::LabelTable;
using io::ProblemFile;
using nlohmann::json;

namespace {

std::string canon(const char* compact) { return io::canonical_dump(json::parse(compact)); }

}  // namespace

TEST_CASE("labels intern with integers before strings") {
  ProblemFile p = io::parse_problem(
      R"({"kind": "complex",
          "complex": {"simplices": [[10, "a", "b"], ["a", "b", "c"], [2, 10]]}})");
  // Numeric order on integers, lexicographic on strings, integers first.
  CHECK(p.labels.size() == 5);
  CHECK(p.labels.id(Label::of_int(2)) == 0);
  CHECK(p.labels.id(Label::of_int(10)) == 1);
  CHECK(p.labels.id(Label::of_string("a")) == 2);
  CHECK(p.labels.id(Label::of_string("b")) == 3);
  CHECK(p.labels.id(Label::of_string("c")) == 4);
  CHECK(p.labels.label(0) == Label::of_int(2));
  CHECK(p.labels.label(4) == Label::of_string("c"));
  CHECK_THROWS_AS(p.labels.id(Label::of_int(3)), SchemaError);
  CHECK_THROWS_AS(p.labels.label(5), SchemaError);

  CHECK(io::serialize_problem(p) ==
        canon(R"({"complex": {"simplices": [[10, "a", "b"], ["a", "b", "c"], [2, 10]]},
                  "kind": "complex", "version": 1})"));
}

TEST_CASE("serialization is canonical and parse-stable per kind") {
  const char* files[] = {
      // complex, facets only (the triangle swallows its edges)
      R"({"kind": "complex", "complex": {"simplices": [[0, 1, 2], [1, 2], [3]]}})",
      // bare chain
      R"({"kind": "chain", "chain": [{"coeff": -2, "simplex": [1, 0]}]})",
      // cycle with ambient complex
      R"({"kind": "cycle",
          "chain": [{"coeff": 1, "simplex": [0, 1]}, {"coeff": 1, "simplex": [1, 2]},
                    {"coeff": 1, "simplex": [2, 0]}],
          "complex": {"simplices": [[0, 1], [1, 2], [0, 2]]}})",
      // cobordism
      R"({"kind": "cobordism",
          "filling": [{"coeff": 1, "simplex": [0, 1, 2]}],
          "end0": [{"coeff": 1, "simplex": [0, 2]}],
          "end1": [{"coeff": 1, "simplex": [0, 1]}, {"coeff": 1, "simplex": [1, 2]}]})",
      // cover
      R"({"kind": "cover",
          "complex": {"simplices": [[0, 1], [1, 2], [0, 2]]},
          "pieces": [{"simplices": [[0, 1], [1, 2]]}, {"simplices": [[0, 2]]}]})",
  };
  for (const char* text : files) {
    CAPTURE(text);
    std::string once = io::serialize_problem(io::parse_problem(text));
    std::string twice = io::serialize_problem(io::parse_problem(once));
    CHECK(once == twice);
    CHECK(once.back() == '\n');
  }

  // The complex serializer emits maximal simplices only.
  ProblemFile p = io::parse_problem(files[0]);
  CHECK(io::serialize_problem(p) ==
        canon(R"({"complex": {"simplices": [[0, 1, 2], [3]]},
                  "kind": "complex", "version": 1})"));

  // Version 1 may be written explicitly.
  ProblemFile q = io::parse_problem(R"({"version": 1, "kind": "chain", "chain": []})");
  CHECK(q.version == 1);
  CHECK(q.chain->zero());
}

TEST_CASE("schema violations are rejected") {
  auto reject = [](const char* text) {
    CAPTURE(text);
    CHECK_THROWS_AS(io::parse_problem(text), SchemaError);
  };
  reject("{ this is not json");
  reject(R"([1, 2, 3])");
  reject(R"({"complex": {"simplices": []}})");                      // missing kind
  reject(R"({"kind": "widget", "complex": {"simplices": []}})");    // unknown kind
  reject(R"({"kind": 3})");                                         // kind not a string
  reject(R"({"kind": "complex"})");                                 // missing payload
  reject(R"({"version": 2, "kind": "complex", "complex": {"simplices": []}})");
  reject(R"({"version": "1", "kind": "complex", "complex": {"simplices": []}})");
  reject(R"({"kind": "complex", "complex": {"simplices": []}, "extra": 0})");
  reject(R"({"kind": "complex", "complex": {"simplices": [], "closure": true}})");
  reject(R"({"kind": "complex", "complex": {"simplices": [[0, 0, 1]]}})");
  reject(R"({"kind": "complex", "complex": {"simplices": [[0, true]]}})");
  reject(R"({"kind": "chain", "chain": [{"coeff": 1.5, "simplex": [0, 1]}]})");
  reject(R"({"kind": "chain", "chain": [{"coeff": 1}]})");           // missing simplex
  reject(R"({"kind": "chain", "chain": [{"coeff": 1, "simplex": [0], "sign": 1}]})");
  reject(R"({"kind": "chain", "chain": [0, 1]})");
  reject(R"({"kind": "cobordism", "filling": [], "end0": []})");     // missing end1
  reject(R"({"kind": "cobordism", "filling": [], "end0": [], "end1": [], "chain": []})");
  reject(R"({"kind": "cover", "complex": {"simplices": []}, "pieces": {}})");
}

TEST_CASE("degenerate chain generators survive parsing") {
  // Chains, unlike complexes, may legitimately carry degenerate tuples.
  ProblemFile p = io::parse_problem(
      R"({"kind": "chain", "chain": [{"coeff": 3, "simplex": [0, 0]}]})");
  REQUIRE(p.chain.has_value());
  CHECK(p.chain->terms().size() == 1);
  CHECK(p.chain->terms().begin()->first.degenerate());
}

TEST_CASE("canonical dump sorts keys and ends with a newline") {
  CHECK(io::canonical_dump(json::parse(R"({"b": 1, "a": [1, 2]})")) ==
        "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n");
  CHECK(io::canonical_dump(json::array()) == "[]\n");
}

TEST_CASE("doubles format with 17 significant digits") {
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(-2.0) == "-2");
}

TEST_CASE("facets lists maximal simplices dimension-descending") {
  std::vector<Tuple> solid = io::facets(corpus::solid_tetra());
  REQUIRE(solid.size() == 1);
  CHECK(solid[0] == Tuple{{0, 1, 2, 3}});

  std::vector<Tuple> sphere = io::facets(corpus::sphere_tetra());
  REQUIRE(sphere.size() == 4);
  CHECK(sphere[0] == Tuple{{0, 1, 2}});
  CHECK(sphere[3] == Tuple{{1, 2, 3}});

  std::vector<Tuple> mixed = io::facets(SimplicialComplex({{0, 1}, {2}}));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0] == Tuple{{0, 1}});
  CHECK(mixed[1] == Tuple{{2}});

  CHECK(io::facets(SimplicialComplex{}).empty());
}

TEST_CASE("OFF export renders 2-dimensional gluings deterministically") {
  std::set<Label> label_set;
  for (long long v = 0; v < 6; ++v) label_set.insert(Label::of_int(v));
  LabelTable labels(label_set);

  Chain s = corpus::octahedron_cycle();
  GluedComplex G = glue(s, extract_face_pairing(s));
  std::string off = io::off_mesh(G, labels);
  CHECK(off.rfind("OFF\n6 8 0\n", 0) == 0);
  CHECK(off == io::off_mesh(G, labels));
  // Header line, count line, six vertex lines, eight face lines.
  CHECK(std::count(off.begin(), off.end(), '\n') == 16);

  Chain c = corpus::circle3_cycle();
  GluedComplex C = glue(c, extract_face_pairing(c));
  CHECK_THROWS_AS(io::off_mesh(C, labels), std::invalid_argument);
}
