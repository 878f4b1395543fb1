#include <doctest.h>

#include <random>
#include <thread>

#include "orichain/prism_homotopy.hpp"

using namespace orichain;

namespace {

LinearMapSimplex random_cell(std::mt19937& rng, int k, int grade) {
  std::uniform_int_distribution<int> vertex(0, k);
  std::vector<int> vs;
  for (int i = 0; i <= grade; ++i) vs.push_back(vertex(rng));
  return linear_from_vertices(k, vs);
}

Permutation random_perm(std::mt19937& rng, int n) {
  std::vector<int> images;
  for (int i = 0; i < n; ++i) images.push_back(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

LinearChain single(const LinearMapSimplex& f) {
  LinearChain c;
  c.add(f, 1);
  return c;
}

}  // namespace

TEST_CASE("linear cells evaluate affinely") {
  LinearMapSimplex f = linear_from_vertices(3, {0, 2, 3});
  CHECK(f.grade() == 2);
  CHECK(f.apply(vertex_point(2, 1)) == vertex_point(3, 2));
  BarycentricPoint mid({rat(1, 2), rat(1, 2), rat(0)});
  BarycentricPoint image = f.apply(mid);
  CHECK(image[0] == rat(1, 2));
  CHECK(image[2] == rat(1, 2));
  CHECK(image[3] == 0);

  CHECK(f.face(1) == linear_from_vertices(3, {0, 3}));
  CHECK(f.compose_positions(Permutation({2, 0, 1})) == linear_from_vertices(3, {3, 0, 2}));
  CHECK(identity_map(2) == linear_from_vertices(2, {0, 1, 2}));
}

TEST_CASE("linear boundary alternates over vertex deletions") {
  LinearMapSimplex f = linear_from_vertices(2, {0, 1, 2});
  LinearChain b = linear_boundary(f);
  CHECK(b.terms().size() == 3);
  CHECK(b.terms().at(linear_from_vertices(2, {1, 2})) == 1);
  CHECK(b.terms().at(linear_from_vertices(2, {0, 2})) == -1);
  CHECK(b.terms().at(linear_from_vertices(2, {0, 1})) == 1);
  CHECK(linear_boundary(linear_boundary(single(f))).zero());
}

TEST_CASE("the prism satisfies its boundary law in positive grade") {
  std::mt19937 rng(21u);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 1 + trial % 3;
    int grade = 1 + trial % (k + 1);
    LinearMapSimplex f = random_cell(rng, k, grade);
    LinearChain lhs = linear_boundary(prism(single(f)));
    LinearChain rhs = single(f) * ((grade + 1) % 2 == 0 ? 1 : -1) +
                      prism(linear_boundary(f));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("the prism over a point is the segment to the barycenter") {
  // In grade 0 the law picks up the cone tip: boundary(prism f) = (b_k) - f,
  // because the boundary of a point is zero rather than an augmentation term.
  for (int k = 1; k <= 3; ++k) {
    for (int v = 0; v <= k; ++v) {
      LinearChain f = single(linear_from_vertices(k, {v}));
      LinearChain tip = single(LinearMapSimplex(k, {barycenter(k)}));
      CHECK(linear_boundary(prism(f)) == tip - f);
    }
  }
}

TEST_CASE("the contraction vanishes in low grade and cones the identity") {
  LinearChain vertex = single(linear_from_vertices(2, {1}));
  CHECK(homotopy_D(vertex).zero());
  CHECK(homotopy_D(LinearChain{}).zero());

  // D(Id_1) is the single cone cell (e_0, e_1, b_1).
  const LinearChain& d1 = homotopy_on_identity(1);
  REQUIRE(d1.terms().size() == 1);
  const auto& [cell, coef] = *d1.terms().begin();
  CHECK(coef == 1);
  CHECK(cell.vertex_images ==
        std::vector<BarycentricPoint>{vertex_point(1, 0), vertex_point(1, 1), barycenter(1)});
}

TEST_CASE("the memoized identity values have the derived sizes") {
  CHECK(homotopy_on_identity(2).terms().size() == 4);
  CHECK(homotopy_on_identity(3).terms().size() == 17);
}

TEST_CASE("the memo cache is stable under concurrent access") {
  const LinearChain* a = nullptr;
  const LinearChain* b = nullptr;
  std::thread t1([&] { a = &homotopy_on_identity(4); });
  std::thread t2([&] { b = &homotopy_on_identity(4); });
  t1.join();
  t2.join();
  CHECK(a == b);
}

TEST_CASE("the contraction identity holds exactly on presentation chains") {
  std::mt19937 rng(22u);
  for (int k = 1; k <= 3; ++k) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<SPrimeTerm> presentation;
      int terms = 1 + trial % 3;
      for (int i = 0; i < terms; ++i)
        presentation.push_back(SPrimeTerm{1 + trial % 4, random_cell(rng, k, k),
                                          random_perm(rng, k + 1)});
      HomotopyIdentityReport r = verify_homotopy_identity(presentation);
      CHECK(r.holds);
      CHECK(r.defect.zero());
    }
  }
}

TEST_CASE("malformed presentations are rejected") {
  SPrimeTerm bad{1, linear_from_vertices(2, {0, 1, 2}), Permutation::identity(2)};
  CHECK_THROWS_AS(verify_homotopy_identity({bad}), std::invalid_argument);

  std::vector<SPrimeTerm> mixed = {
      SPrimeTerm{1, linear_from_vertices(2, {0, 1}), Permutation::identity(2)},
      SPrimeTerm{1, linear_from_vertices(2, {0, 1, 2}), Permutation::identity(3)}};
  CHECK_THROWS_AS(verify_homotopy_identity(mixed), std::invalid_argument);
}

TEST_CASE("pushforward respects composition with faces") {
  std::mt19937 rng(23u);
  for (int trial = 0; trial < 30; ++trial) {
    LinearMapSimplex f = random_cell(rng, 3, 2);
    LinearChain inner = single(random_cell(rng, 2, 2));
    // Pushing the boundary equals the boundary of the pushforward.
    CHECK(pushforward(f, linear_boundary(inner)) == linear_boundary(pushforward(f, inner)));
  }
}
