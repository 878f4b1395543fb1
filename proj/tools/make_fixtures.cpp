// Writes the bundled problem-file fixtures (inputs for the CLI, the test
// suites, and the worked examples in the README) into a target directory.
// Every well-formed fixture is re-parsed after writing as a self-check.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "orichain/chains.hpp"
#include "orichain/corpus.hpp"
#include "orichain/io.hpp"

using nlohmann::json;
using namespace orichain;

namespace {

json simplex_json(const Tuple& t) {
  json a = json::array();
  for (VertexId v : t.v) a.push_back(v);
  return a;
}

json complex_json(const SimplicialComplex& K) {
  json simplices = json::array();
  for (const Tuple& t : io::facets(K)) simplices.push_back(simplex_json(t));
  json obj;
  obj["simplices"] = simplices;
  return obj;
}

json chain_json(const Chain& c) {
  json a = json::array();
  for (const auto& [t, coef] : c.terms()) {
    json term;
    term["coeff"] = coef;
    term["simplex"] = simplex_json(t);
    a.push_back(term);
  }
  return a;
}

json complex_file(const SimplicialComplex& K) {
  json j;
  j["version"] = 1;
  j["kind"] = "complex";
  j["complex"] = complex_json(K);
  return j;
}

json cycle_file(const Chain& c) {
  json j;
  j["version"] = 1;
  j["kind"] = "cycle";
  j["chain"] = chain_json(c);
  return j;
}

json cobordism_file(const Chain& filling, const Chain& end0, const Chain& end1) {
  json j;
  j["version"] = 1;
  j["kind"] = "cobordism";
  j["filling"] = chain_json(filling);
  j["end0"] = chain_json(end0);
  j["end1"] = chain_json(end1);
  return j;
}

json cover_file(const SimplicialComplex& K, const std::vector<SimplicialComplex>& pieces) {
  json j;
  j["version"] = 1;
  j["kind"] = "cover";
  j["complex"] = complex_json(K);
  json ps = json::array();
  for (const auto& piece : pieces) ps.push_back(complex_json(piece));
  j["pieces"] = ps;
  return j;
}

int failures = 0;

void write_raw(const std::filesystem::path& dir, const std::string& name,
               const std::string& text) {
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << (dir / name) << "\n";
    ++failures;
    return;
  }
  out << text;
}

void write_fixture(const std::filesystem::path& dir, const std::string& name, const json& j) {
  std::string text = io::canonical_dump(j);
  try {
    io::parse_problem(text);
  } catch (const std::exception& e) {
    std::cerr << name << " does not re-parse: " << e.what() << "\n";
    ++failures;
    return;
  }
  write_raw(dir, name, text);
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "cannot create " << dir << ": " << ec.message() << "\n";
    return 1;
  }

  // Complexes.
  write_fixture(dir, "complex_sphere.json", complex_file(corpus::sphere_tetra()));
  write_fixture(dir, "complex_torus.json", complex_file(corpus::torus7()));
  write_fixture(dir, "complex_projective.json", complex_file(corpus::projective_plane6()));
  write_fixture(dir, "complex_klein.json", complex_file(corpus::klein16()));
  write_fixture(dir, "complex_solid.json", complex_file(corpus::solid_tetra()));
  write_fixture(dir, "subcomplex_face.json", complex_file(corpus::disk_triangle()));

  {
    // Mixed integer and string labels; integers intern before strings.
    json j;
    j["version"] = 1;
    j["kind"] = "complex";
    json simplices = json::array();
    simplices.push_back(json::array({0, "a", "b"}));
    simplices.push_back(json::array({"a", "b", "c"}));
    json payload;
    payload["simplices"] = simplices;
    j["complex"] = payload;
    write_fixture(dir, "complex_mixed_labels.json", j);
  }

  // Cycles.
  write_fixture(dir, "cycle_circle.json", cycle_file(corpus::circle3_cycle()));
  write_fixture(dir, "cycle_sphere.json", cycle_file(corpus::sphere_cycle()));
  write_fixture(dir, "cycle_octahedron.json", cycle_file(corpus::octahedron_cycle()));
  write_fixture(dir, "cycle_torus.json", cycle_file(corpus::torus7_cycle()));

  // Cobordisms.
  {
    corpus::CobordismFixture cyl = corpus::cylinder_cobordism();
    write_fixture(dir, "cobordism_cylinder.json",
                  cobordism_file(cyl.filling, cyl.end0, cyl.end1));
    corpus::CobordismFixture tor = corpus::torus_cobordism();
    write_fixture(dir, "cobordism_torus.json",
                  cobordism_file(tor.filling, tor.end0, tor.end1));
  }
  {
    // One triangle fills the path (0,1)+(1,2) against the chord (0,2).
    Chain filling, end0, end1;
    filling.add(Tuple{{0, 1, 2}}, 1);
    end0.add(Tuple{{0, 2}}, 1);
    end1.add(Tuple{{0, 1}}, 1);
    end1.add(Tuple{{1, 2}}, 1);
    write_fixture(dir, "cobordism_triangle.json", cobordism_file(filling, end0, end1));
  }

  // Covers.
  {
    corpus::CoverFixture c = corpus::circle_two_arc_cover();
    write_fixture(dir, "cover_circle.json", cover_file(c.space, c.pieces));
    corpus::CoverFixture o = corpus::octahedron_three_piece_cover();
    write_fixture(dir, "cover_octahedron.json", cover_file(o.space, o.pieces));
  }

  // Smoothing sample points on the 2-simplex.
  {
    json points = json::array();
    points.push_back(json::array({1.0 / 3, 1.0 / 3, 1.0 / 3}));
    points.push_back(json::array({0.8, 0.1, 0.1}));
    points.push_back(json::array({0.02, 0.49, 0.49}));
    points.push_back(json::array({1.0, 0.0, 0.0}));
    points.push_back(json::array({0.5, 0.25, 0.25}));
    write_raw(dir, "points_k2.json", points.dump(2) + "\n");
  }

  // Negative fixtures, one per documented exit code.
  write_raw(dir, "malformed.json", "{ this is not a problem file\n");  // exit 2
  {
    // Not a subcomplex of any bundled complex (vertex 9); exit 3 under
    // --subcomplex, but a perfectly fine complex on its own.
    SimplicialComplex K({{0, 1, 9}});
    write_fixture(dir, "bad_subcomplex.json", complex_file(K));
  }
  {
    Chain c;
    c.add(Tuple{{0, 1, 2}}, 1);  // a lone triangle is not a cycle: exit 4
    write_fixture(dir, "cycle_not_closed.json", cycle_file(c));
  }
  {
    Chain zero;  // empty filling cannot bound a nonzero end difference: exit 5
    write_fixture(dir, "cobordism_mismatch.json",
                  cobordism_file(zero, corpus::circle3_cycle(), zero));
  }
  {
    // Pieces overlap in the whole circle, so the vanishing hypothesis fails
    // (verify --cover exits 1).
    SimplicialComplex hexagon = corpus::circle_hexagon();
    write_fixture(dir, "cover_bad_overlap.json", cover_file(hexagon, {hexagon, hexagon}));
  }
  {
    // Pieces do not union to the space: exit 3.
    SimplicialComplex hexagon = corpus::circle_hexagon();
    SimplicialComplex arc({{0, 1}, {1, 2}});
    write_fixture(dir, "cover_not_cover.json", cover_file(hexagon, {arc}));
  }

  if (failures > 0) {
    std::cerr << failures << " fixture(s) failed\n";
    return 1;
  }
  std::cout << "fixtures written to " << dir.string() << "\n";
  return 0;
}
