#pragma once

#include <string>
#include <vector>

#include "orichain/chains.hpp"

namespace orichain {
namespace corpus {

/// Boundary of the solid tetrahedron on vertices 0..3 (a 2-sphere).
SimplicialComplex sphere_tetra();
/// The solid tetrahedron itself (for relative homology and boundary solves).
SimplicialComplex solid_tetra();
/// Octahedron sphere on vertices 0..5 (poles 0 and 1).
SimplicialComplex octahedron();
/// 7-vertex torus: triangles (i, i+1, i+3) and (i, i+3, i+2) mod 7.
SimplicialComplex torus7();
/// 6-vertex projective plane on vertices 1..6.
SimplicialComplex projective_plane6();
/// 16-vertex Klein bottle: 4x4 grid with a plain wrap in y and a flipped
/// wrap in x.
SimplicialComplex klein16();
/// Single 2-simplex on vertices 0..2.
SimplicialComplex disk_triangle();
/// Its boundary circle.
SimplicialComplex circle3();
/// Hexagon circle on vertices 0..5.
SimplicialComplex circle_hexagon();

/// Oriented fundamental cycles of the closed corpus surfaces.
Chain circle3_cycle();
Chain sphere_cycle();
Chain octahedron_cycle();
Chain torus7_cycle();

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};
struct NamedCycle {
  std::string name;
  Chain cycle;
  SimplicialComplex ambient;
};
struct CobordismFixture {
  std::string name;
  Chain filling;
  Chain end0;
  Chain end1;
};
struct CoverFixture {
  std::string name;
  SimplicialComplex space;
  std::vector<SimplicialComplex> pieces;
};

std::vector<NamedComplex> all_complexes();
std::vector<NamedCycle> all_cycles();

/// Triangulated cylinder between two triangle circles.
CobordismFixture cylinder_cobordism();
/// Staircase prism over the 7-vertex torus cycle plus the correction
/// tetrahedra that repair the reversed-edge staircases.
CobordismFixture torus_cobordism();
std::vector<CobordismFixture> all_cobordisms();

/// Hexagon circle covered by two arcs meeting in two vertices.
CoverFixture circle_two_arc_cover();
/// Octahedron covered by three contractible-intersection pieces.
CoverFixture octahedron_three_piece_cover();
std::vector<CoverFixture> all_covers();

}  // namespace corpus
}  // namespace orichain
