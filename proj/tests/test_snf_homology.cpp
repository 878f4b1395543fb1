#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "orichain/corpus.hpp"
#include "orichain/errors.hpp"
#include "orichain/homology.hpp"
#include "orichain/snf.hpp"

using namespace orichain;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("smith normal form on hand-checked matrices") {
  SmithResult r = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
  CHECK(r.divisors == std::vector<long long>{2, 4});

  CHECK(smith_normal_form(from_rows({{1, 0}, {0, 0}})).divisors ==
        std::vector<long long>{1});
  CHECK(smith_normal_form(from_rows({{0, 0}, {0, 0}})).divisors.empty());
  CHECK(smith_normal_form(IntMatrix(0, 3)).divisors.empty());

  // Diagonal with the divisibility repair: diag(6, 4) -> (2, 12).
  CHECK(smith_normal_form(from_rows({{6, 0}, {0, 4}})).divisors ==
        std::vector<long long>{2, 12});
}

TEST_CASE("transform matrices are unimodular and reproduce S") {
  std::mt19937 rng(11u);
  std::uniform_int_distribution<long long> entry(-12, 12);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + static_cast<std::size_t>(trial % 5);
    std::size_t cols = 1 + static_cast<std::size_t>((trial / 5) % 5);
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = entry(rng);

    SmithResult r = smith_normal_form(a, true);
    REQUIRE(r.U);
    REQUIRE(r.V);
    CHECK(verify_smith(a, r));

    BigInt du = determinant(*r.U), dv = determinant(*r.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));

    for (std::size_t i = 0; i + 1 < r.divisors.size(); ++i) {
      CHECK(r.divisors[i] > 0);
      CHECK(r.divisors[i + 1] % r.divisors[i] == 0);
    }
    CHECK(r.divisors.size() == rational_rank(a));
  }
}

TEST_CASE("verification mode re-checks every factorization") {
  SmithVerificationScope scope(true);
  std::mt19937 rng(12u);
  std::uniform_int_distribution<long long> entry(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    IntMatrix a(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) a.at(i, j) = entry(rng);
    CHECK(!smith_normal_form(a).divisors.empty());
  }
}

TEST_CASE("coefficient overflow is detected, not wrapped") {
  long long big = 1ll << 62;
  CHECK_THROWS_AS(smith_normal_form(from_rows({{big, big}, {big, -big}})),
                  std::overflow_error);
}

TEST_CASE("homology of the bundled closed surfaces") {
  auto check_groups = [](const SimplicialComplex& K,
                         const std::vector<HomologyGroup>& expect) {
    for (ChainModel model : {ChainModel::oriented, ChainModel::ordered}) {
      std::vector<HomologyGroup> got = homology_all(K, model);
      REQUIRE(got.size() == expect.size());
      for (std::size_t m = 0; m < expect.size(); ++m) CHECK(got[m] == expect[m]);
    }
  };
  check_groups(corpus::sphere_tetra(), {{1, {}}, {0, {}}, {1, {}}});
  check_groups(corpus::torus7(), {{1, {}}, {2, {}}, {1, {}}});
  check_groups(corpus::projective_plane6(), {{1, {}}, {0, {2}}, {0, {}}});
  check_groups(corpus::klein16(), {{1, {}}, {1, {2}}, {0, {}}});
}

TEST_CASE("homology of simple spaces") {
  CHECK(homology_all(corpus::solid_tetra()) ==
        std::vector<HomologyGroup>{{1, {}}, {0, {}}, {0, {}}, {0, {}}});
  CHECK(homology_all(corpus::circle3()) == std::vector<HomologyGroup>{{1, {}}, {1, {}}});
  CHECK(homology_all(corpus::disk_triangle()) ==
        std::vector<HomologyGroup>{{1, {}}, {0, {}}, {0, {}}});

  // Two disjoint spheres.
  SimplicialComplex two({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                         {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}});
  CHECK(homology(two, 0) == HomologyGroup{2, {}});
  CHECK(homology(two, 2) == HomologyGroup{2, {}});

  CHECK(to_string(HomologyGroup{2, {2}}) == "Z^2 + Z/2");
  CHECK(to_string(HomologyGroup{0, {}}) == "0");
  CHECK(to_string(HomologyGroup{1, {}}) == "Z");
}

TEST_CASE("degree-0 homology counts connected components") {
  std::mt19937 rng(13u);
  std::uniform_int_distribution<VertexId> vertex(0, 19);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<VertexId>> facets;
    for (int e = 0; e < 14; ++e) {
      VertexId a = vertex(rng), b = vertex(rng);
      if (a == b)
        facets.push_back({a});
      else
        facets.push_back({a, b});
    }
    SimplicialComplex K(facets);

    // Union-find oracle over the edges.
    std::vector<VertexId> verts = K.vertices();
    std::map<VertexId, std::size_t> idx;
    for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = i;
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Tuple& e : K.simplices(1)) {
      std::size_t a = find(idx[e.v[0]]), b = find(idx[e.v[1]]);
      if (a != b) parent[a] = b;
    }
    std::size_t components = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (find(i) == i) ++components;

    CHECK(homology(K, 0).free_rank == static_cast<long long>(components));
    CHECK(homology(K, 0).torsion.empty());
  }
}

TEST_CASE("relative homology deletes the subcomplex generators") {
  // (ball, boundary sphere): only the top degree survives.
  std::vector<HomologyGroup> rel =
      relative_homology_all(corpus::solid_tetra(), corpus::sphere_tetra());
  CHECK(rel == std::vector<HomologyGroup>{{0, {}}, {0, {}}, {0, {}}, {1, {}}});

  // Relative to itself everything dies; relative to nothing it is absolute.
  CHECK(relative_homology_all(corpus::torus7(), corpus::torus7()) ==
        std::vector<HomologyGroup>{{0, {}}, {0, {}}, {0, {}}});
  CHECK(relative_homology_all(corpus::torus7(), SimplicialComplex{}) ==
        homology_all(corpus::torus7()));

  CHECK_THROWS_AS(relative_homology(corpus::sphere_tetra(), corpus::torus7(), 1),
                  SubcomplexError);
}

TEST_CASE("boundary matrices have the expected shapes") {
  SimplicialComplex K = corpus::sphere_tetra();
  IntMatrix d1 = boundary_matrix(K, 1);
  CHECK(d1.rows() == 4);
  CHECK(d1.cols() == 6);
  IntMatrix d2 = boundary_matrix(K, 2);
  CHECK(d2.rows() == 6);
  CHECK(d2.cols() == 4);
  CHECK(boundary_matrix(K, 0).rows() == 0);
  CHECK(boundary_matrix(K, 3).cols() == 0);

  // The composite vanishes entrywise.
  IntMatrix prod(d1.rows(), d2.cols());
  for (std::size_t i = 0; i < d1.rows(); ++i)
    for (std::size_t j = 0; j < d2.cols(); ++j) {
      long long acc = 0;
      for (std::size_t l = 0; l < d1.cols(); ++l) acc += d1.at(i, l) * d2.at(l, j);
      CHECK(acc == 0);
    }

  // Ordered model: degree 1 over the circle has 9 generators.
  CHECK(boundary_matrix(corpus::circle3(), 1, ChainModel::ordered).cols() == 9);
  CHECK_THROWS_AS(homology(corpus::circle3(), 2, ChainModel::ordered),
                  std::invalid_argument);
}

TEST_CASE("euler characteristic: counts equal ranks") {
  for (const auto& named : corpus::all_complexes()) {
    CHECK(euler_characteristic_counts(named.complex) ==
          euler_characteristic_ranks(named.complex));
  }
  CHECK(euler_characteristic_counts(corpus::sphere_tetra()) == 2);
  CHECK(euler_characteristic_counts(corpus::torus7()) == 0);
  CHECK(euler_characteristic_counts(corpus::projective_plane6()) == 1);
  CHECK(euler_characteristic_counts(corpus::klein16()) == 0);
}

TEST_CASE("the cover vanishing checker accepts the bundled covers") {
  for (const auto& fixture : corpus::all_covers()) {
    MvReport r = verify_mv_vanishing(fixture.space, fixture.pieces);
    CHECK(r.hypothesis_holds);
    CHECK(r.conclusion_holds);
    CHECK(r.ok());
  }
}

TEST_CASE("the cover vanishing checker reports honest counterexamples") {
  SimplicialComplex hexagon = corpus::circle_hexagon();

  // Both pieces are the whole circle: the overlap has H_1 = Z.
  MvReport bad = verify_mv_vanishing(hexagon, {hexagon, hexagon});
  CHECK(!bad.hypothesis_holds);
  CHECK(bad.hypothesis_counterexample_degree == 1);
  CHECK(!bad.ok());

  // A single contractible piece cannot cover the circle.
  SimplicialComplex arc({{0, 1}, {1, 2}});
  CHECK_THROWS_AS(verify_mv_vanishing(hexagon, {arc}), SubcomplexError);
  // Pieces must be subcomplexes.
  CHECK_THROWS_AS(verify_mv_vanishing(hexagon, {corpus::disk_triangle()}),
                  SubcomplexError);
}
