#include "orichain/corpus.hpp"

namespace orichain {
namespace corpus {

namespace {

using Facets = std::vector<std::vector<VertexId>>;

Chain plus_one_chain(const std::vector<std::vector<VertexId>>& tuples) {
  Chain c;
  for (const auto& t : tuples) c.add(Tuple(t), 1);
  return c;
}

VertexId wrap7(int i) { return static_cast<VertexId>((i % 7 + 7) % 7); }

Facets torus7_facets() {
  Facets f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({wrap7(i), wrap7(i + 1), wrap7(i + 3)});
    f.push_back({wrap7(i), wrap7(i + 3), wrap7(i + 2)});
  }
  return f;
}

Facets octahedron_facets() {
  return {{0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 2}, {1, 3, 2}, {1, 4, 3}, {1, 5, 4}, {1, 2, 5}};
}

}  // namespace

SimplicialComplex sphere_tetra() {
  return SimplicialComplex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex solid_tetra() { return SimplicialComplex({{0, 1, 2, 3}}); }

SimplicialComplex octahedron() { return SimplicialComplex(octahedron_facets()); }

SimplicialComplex torus7() { return SimplicialComplex(torus7_facets()); }

SimplicialComplex projective_plane6() {
  return SimplicialComplex({{1, 2, 3},
                            {1, 3, 4},
                            {1, 4, 5},
                            {1, 5, 6},
                            {1, 2, 6},
                            {2, 3, 5},
                            {2, 4, 5},
                            {2, 4, 6},
                            {3, 4, 6},
                            {3, 5, 6}});
}

SimplicialComplex klein16() {
  // Vertices of the 4x4 quotient grid are 4*y + x.  A grid point (x, y) with
  // x or y equal to 4 wraps: first x = 4 goes to (0, 4 - y), then y = 4 goes
  // to (x, 0).
  auto vertex = [](int x, int y) {
    if (x == 4) {
      x = 0;
      y = 4 - y;
    }
    if (y == 4) y = 0;
    return static_cast<VertexId>(4 * y + x);
  };
  Facets f;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      const VertexId a = vertex(x, y), b = vertex(x + 1, y), c = vertex(x + 1, y + 1),
                     d = vertex(x, y + 1);
      f.push_back({a, b, c});
      f.push_back({a, c, d});
    }
  }
  return SimplicialComplex(f);
}

SimplicialComplex disk_triangle() { return SimplicialComplex({{0, 1, 2}}); }

SimplicialComplex circle3() { return SimplicialComplex({{0, 1}, {1, 2}, {0, 2}}); }

SimplicialComplex circle_hexagon() {
  return SimplicialComplex({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

Chain circle3_cycle() { return plus_one_chain({{0, 1}, {1, 2}, {2, 0}}); }

Chain sphere_cycle() { return plus_one_chain({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}); }

Chain octahedron_cycle() {
  std::vector<std::vector<VertexId>> cells;
  for (const auto& t : octahedron_facets()) cells.push_back(t);
  return plus_one_chain(cells);
}

Chain torus7_cycle() {
  std::vector<std::vector<VertexId>> cells;
  for (const auto& t : torus7_facets()) cells.push_back(t);
  return plus_one_chain(cells);
}

std::vector<NamedComplex> all_complexes() {
  std::vector<NamedComplex> v;
  v.push_back({"sphere_tetra", sphere_tetra()});
  v.push_back({"solid_tetra", solid_tetra()});
  v.push_back({"octahedron", octahedron()});
  v.push_back({"torus7", torus7()});
  v.push_back({"projective_plane6", projective_plane6()});
  v.push_back({"klein16", klein16()});
  v.push_back({"disk_triangle", disk_triangle()});
  v.push_back({"circle3", circle3()});
  v.push_back({"circle_hexagon", circle_hexagon()});
  return v;
}

std::vector<NamedCycle> all_cycles() {
  std::vector<NamedCycle> v;
  v.push_back({"circle3", circle3_cycle(), circle3()});
  v.push_back({"sphere_tetra", sphere_cycle(), sphere_tetra()});
  v.push_back({"octahedron", octahedron_cycle(), octahedron()});
  v.push_back({"torus7", torus7_cycle(), torus7()});
  return v;
}

CobordismFixture cylinder_cobordism() {
  CobordismFixture f;
  f.name = "cylinder";
  f.filling =
      plus_one_chain({{0, 3, 4}, {1, 0, 4}, {1, 4, 5}, {2, 1, 5}, {2, 5, 3}, {0, 2, 3}});
  f.end0 = plus_one_chain({{0, 1}, {1, 2}, {2, 0}});
  f.end1 = plus_one_chain({{3, 4}, {4, 5}, {5, 3}});
  return f;
}

CobordismFixture torus_cobordism() {
  // Filling: per torus cell g the staircase prism cells
  //   (g_0..g_m, g_m+7..g_2+7) with sign (-1)^m,
  // plus, for each edge class {j, j+1} (which the two adjacent torus cells
  // traverse in opposite orders, so the neighboring staircases disagree),
  // one correction tetrahedron (j, j+1, j+1+7, j+7) closing the gap.
  CobordismFixture f;
  f.name = "torus";
  f.end0 = torus7_cycle();
  Chain filling;
  for (const auto& [g, coef] : f.end0.terms()) {
    (void)coef;
    for (int m = 0; m <= 2; ++m) {
      Tuple T;
      for (int i = 0; i <= m; ++i) T.v.push_back(g.v[static_cast<std::size_t>(i)]);
      for (int i = m; i <= 2; ++i) T.v.push_back(static_cast<VertexId>(g.v[static_cast<std::size_t>(i)] + 7));
      filling.add(T, m % 2 == 0 ? 1 : -1);
    }
  }
  for (int j = 0; j < 7; ++j) {
    const VertexId x = wrap7(j), y = wrap7(j + 1);
    filling.add(Tuple{x, y, static_cast<VertexId>(y + 7), static_cast<VertexId>(x + 7)}, 1);
  }
  f.filling = filling;
  f.end1 = apply_vertex_map(f.end0, [](VertexId v) { return static_cast<VertexId>(v + 7); });
  return f;
}

std::vector<CobordismFixture> all_cobordisms() {
  return {cylinder_cobordism(), torus_cobordism()};
}

CoverFixture circle_two_arc_cover() {
  CoverFixture f;
  f.name = "circle_two_arcs";
  f.space = circle_hexagon();
  f.pieces.push_back(SimplicialComplex({{0, 1}, {1, 2}, {2, 3}}));
  f.pieces.push_back(SimplicialComplex({{3, 4}, {4, 5}, {0, 5}}));
  return f;
}

CoverFixture octahedron_three_piece_cover() {
  CoverFixture f;
  f.name = "octahedron_three_pieces";
  f.space = octahedron();
  f.pieces.push_back(SimplicialComplex({{0, 2, 3}, {0, 3, 4}}));
  f.pieces.push_back(SimplicialComplex({{0, 4, 5}, {0, 5, 2}}));
  f.pieces.push_back(SimplicialComplex({{1, 3, 2}, {1, 4, 3}, {1, 5, 4}, {1, 2, 5}}));
  return f;
}

std::vector<CoverFixture> all_covers() {
  return {circle_two_arc_cover(), octahedron_three_piece_cover()};
}

}  // namespace corpus
}  // namespace orichain
