#include <doctest.h>

#include <random>

#include "orichain/chains.hpp"
#include "orichain/corpus.hpp"

using namespace orichain;

namespace {

Chain random_chain(std::mt19937& rng, int grade, int terms) {
  std::uniform_int_distribution<int> vertex(0, 9), coef(-9, 9);
  Chain c;
  for (int t = 0; t < terms; ++t) {
    Tuple tup;
    for (int i = 0; i <= grade; ++i) tup.v.push_back(vertex(rng));
    c.add(tup, coef(rng));
  }
  return c;
}

}  // namespace

TEST_CASE("tuples know their faces and degeneracies") {
  Tuple t{{3, 1, 4, 1}};
  CHECK(t.grade() == 3);
  CHECK(t.degenerate());
  CHECK(!t.strictly_increasing());
  CHECK(t.face(0) == Tuple{{1, 4, 1}});
  CHECK(t.face(3) == Tuple{{3, 1, 4}});
  CHECK(t.support() == std::vector<VertexId>{1, 3, 4});
  CHECK(Tuple{{1, 3, 4}}.strictly_increasing());
}

TEST_CASE("sorting a tuple tracks the permutation sign") {
  CHECK(sorted_with_sign(Tuple{{2, 0, 1}}) == std::pair{Tuple{{0, 1, 2}}, 1});
  CHECK(sorted_with_sign(Tuple{{1, 0}}) == std::pair{Tuple{{0, 1}}, -1});
  CHECK(sorted_with_sign(Tuple{{1, 1, 2}}).second == 0);
  CHECK(permute_positions(Tuple{{5, 6, 7}}, Permutation({2, 0, 1})) == Tuple{{7, 5, 6}});
}

TEST_CASE("chains are a free module with zero-erasure") {
  Chain c;
  c.add(Tuple{{0, 1}}, 2);
  c.add(Tuple{{0, 1}}, -2);
  CHECK(c.zero());
  c.add(Tuple{{1, 2}}, 3);
  CHECK(c.coefficient(Tuple{{1, 2}}) == 3);
  CHECK(c.grade() == 1);
  Chain d = c * 2 - c;
  CHECK(d == c);
  CHECK((c - c).zero());
  CHECK((-c).coefficient(Tuple{{1, 2}}) == -3);
}

TEST_CASE("boundary of boundary vanishes on random chains") {
  std::mt19937 rng(7u);
  for (int trial = 0; trial < 200; ++trial) {
    int grade = 1 + trial % 5;
    Chain c = random_chain(rng, grade, 6);
    CHECK(boundary(boundary(c)).zero());
  }
}

TEST_CASE("the oriented projection is a chain map") {
  std::mt19937 rng(8u);
  for (int trial = 0; trial < 100; ++trial) {
    Chain c = random_chain(rng, 1 + trial % 4, 5);
    CHECK(project_to_oriented(boundary(c)) ==
          project_to_oriented(boundary(project_to_oriented(c))));
  }
  // Degenerate tuples and odd orderings collapse.
  Chain c;
  c.add(Tuple{{1, 1, 2}}, 5);
  CHECK(project_to_oriented(c).zero());
  c.add(Tuple{{2, 0}}, 1);
  Chain p = project_to_oriented(c);
  CHECK(p.coefficient(Tuple{{0, 2}}) == -1);
  CHECK(chain_is_oriented(p));
  CHECK(!chain_is_oriented(c));
}

TEST_CASE("cycles are recognized") {
  CHECK(is_cycle(corpus::circle3_cycle()));
  CHECK(is_cycle(corpus::sphere_cycle()));
  Chain not_cycle;
  not_cycle.add(Tuple{{0, 1, 2}}, 1);
  CHECK(!is_cycle(not_cycle));
  CHECK(is_cycle(Chain{}));
}

TEST_CASE("vertex maps act functorially") {
  std::mt19937 rng(9u);
  auto shift = [](VertexId v) { return v + 7; };
  for (int trial = 0; trial < 50; ++trial) {
    Chain c = random_chain(rng, 2, 4);
    CHECK(apply_vertex_map(boundary(c), shift) == boundary(apply_vertex_map(c, shift)));
  }
}

TEST_CASE("simplicial complexes close their facets") {
  SimplicialComplex K = corpus::sphere_tetra();
  CHECK(K.dim() == 2);
  CHECK(K.simplex_count(0) == 4);
  CHECK(K.simplex_count(1) == 6);
  CHECK(K.simplex_count(2) == 4);
  CHECK(K.contains(Tuple{{0, 3}}));
  CHECK(!K.contains(Tuple{{0, 1, 2, 3}}));
  CHECK(K.contains_support(Tuple{{3, 0}}));
  CHECK(corpus::disk_triangle().is_subcomplex_of(corpus::sphere_tetra()));
  CHECK(!corpus::sphere_tetra().is_subcomplex_of(corpus::disk_triangle()));

  SimplicialComplex empty;
  CHECK(empty.dim() == -1);
  CHECK(empty.is_subcomplex_of(K));

  // Indices enumerate each degree in sorted order.
  CHECK(K.simplex_index(1, Tuple{{0, 1}}) == 0);
  CHECK(K.simplex_index(2, Tuple{{0, 1, 2}}) == 0);
  CHECK_THROWS_AS(K.simplex_index(3, Tuple{{0, 1, 2, 3}}), std::out_of_range);

  CHECK(K.supports_chain(corpus::sphere_cycle()));
  CHECK(!corpus::disk_triangle().supports_chain(corpus::sphere_cycle()));
}

TEST_CASE("ordered generators include degeneracies up to the truncation") {
  SimplicialComplex circle = corpus::circle3();
  // Degree 1: three degenerate loops plus two orderings of each edge.
  CHECK(circle.ordered_generators(1).size() == 9);
  // Degree 0: the vertices.
  CHECK(circle.ordered_generators(0).size() == 3);

  // Derived sizes for the larger complex used by the homology agreement
  // checks (degree dim+1 is the truncation boundary).
  SimplicialComplex klein = corpus::klein16();
  CHECK(klein.ordered_generators(2).size() == 496);
  CHECK(klein.ordered_generators(3).size() == 1840);
}

TEST_CASE("complex intersection is computed facet-free") {
  SimplicialComplex a({{0, 1, 2}});
  SimplicialComplex b({{1, 2, 3}});
  SimplicialComplex both = intersect(a, b);
  CHECK(both.dim() == 1);
  CHECK(both.contains(Tuple{{1, 2}}));
  CHECK(!both.contains(Tuple{{0, 1}}));
}
