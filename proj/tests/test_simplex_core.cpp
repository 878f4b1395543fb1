#include <doctest.h>

#include "orichain/errors.hpp"
#include "orichain/simplex_core.hpp"

using namespace orichain;

namespace {

BarycentricPoint pt(std::vector<long long> num, long long den) {
  std::vector<Rational> cs;
  for (long long n : num) cs.emplace_back(rat(n, den));
  return BarycentricPoint(std::move(cs));
}

}  // namespace

TEST_CASE("barycentric points enforce their invariant") {
  CHECK_THROWS_AS(BarycentricPoint({rat(1, 2), rat(1, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(BarycentricPoint({rat(3, 2), rat(-1, 2)}), std::invalid_argument);
  CHECK(vertex_point(2, 1)[1] == 1);
  CHECK(vertex_point(2, 1)[0] == 0);
  CHECK(barycenter(3).dim() == 3);
  CHECK(barycenter(3)[2] == rat(1, 4));
}

TEST_CASE("barycenter family values") {
  // Face barycenter omits one vertex and spreads mass evenly.
  CHECK(face_barycenter(2, 0) == pt({0, 1, 1}, 2));
  // The apex keeps 1/(k+1)^2 at the omitted vertex and is a genuine point.
  for (int k = 1; k <= 4; ++k)
    for (int p = 0; p <= k; ++p) {
      BarycentricPoint a = face_apex(k, p);
      CHECK(a[p] == rat(1, (k + 1) * (k + 1)));
      for (int q = 0; q <= k; ++q)
        if (q != p) CHECK(a[q] == rat(k + 2, (k + 1) * (k + 1)));
    }
  BarycenterFamily fam = barycenter_points(2);
  CHECK(fam.face_centers.size() == 3);
  CHECK(fam.face_apexes.size() == 3);
  CHECK(fam.center == barycenter(2));
}

TEST_CASE("permutations compose, invert and sign correctly") {
  Permutation tau({1, 2, 0});  // 3-cycle, even
  CHECK(tau.sign() == 1);
  CHECK(Permutation::transposition(4, 1, 3).sign() == -1);
  CHECK(tau.compose(tau.inverse()) == Permutation::identity(3));
  CHECK(tau.inverse().compose(tau) == Permutation::identity(3));

  // compose means "this after other".
  Permutation sigma = Permutation::transposition(3, 0, 1);
  Permutation both = sigma.compose(tau);
  for (int i = 0; i < 3; ++i) CHECK(both(i) == sigma(tau(i)));

  std::vector<Permutation> all3 = Permutation::all(3);
  CHECK(all3.size() == 6);
  CHECK(all3.front() == Permutation::identity(3));
  for (std::size_t i = 1; i < all3.size(); ++i) CHECK(all3[i - 1] < all3[i]);

  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("coordinate permutation is a group action") {
  BarycentricPoint x = pt({1, 2, 3, 4}, 10);
  for (const Permutation& sigma : Permutation::all(4))
    for (const Permutation& tau : Permutation::all(4)) {
      BarycentricPoint lhs = permute_point(sigma.compose(tau), x);
      BarycentricPoint rhs = permute_point(sigma, permute_point(tau, x));
      CHECK(lhs == rhs);
    }
  // vertex q moves to vertex tau(q)
  Permutation tau({2, 0, 1});
  CHECK(permute_point(tau, vertex_point(2, 0)) == vertex_point(2, 2));
}

TEST_CASE("face inclusions and radial projections") {
  FaceInclusion inc(3, 1);
  CHECK(inc.vertex_images() == std::vector<int>{0, 2, 3});
  CHECK(inc.vertex_preimage(3) == 2);
  CHECK(inc.apply(barycenter(2)) == face_barycenter(3, 1));

  // Projecting the apex from its vertex lands on the face barycenter.
  for (int k = 1; k <= 4; ++k)
    for (int p = 0; p <= k; ++p)
      CHECK(project_to_face(face_apex(k, p), p) == face_barycenter(k, p));
  CHECK_THROWS_AS(project_to_face(vertex_point(2, 1), 1), UndefinedProjectionError);

  // Codim-2 projection zeroes the pair and rescales the rest.
  BarycentricPoint y = project_to_codim2(pt({1, 1, 4, 4}, 10), 0, 1);
  CHECK(y == pt({0, 0, 1, 1}, 2));
  CHECK_THROWS_AS(project_to_codim2(pt({1, 1, 0}, 2), 0, 1), UndefinedProjectionError);
}

TEST_CASE("region membership is literal about strict inequalities") {
  // The apex satisfies x_q = (k+2) x_p exactly: on the boundary, not inside.
  RegionSpec spec = RegionSpec::face_neighborhood(2, 0);
  RegionMembership at_apex = region_membership(spec, face_apex(2, 0));
  CHECK(!at_apex.inside);
  CHECK(at_apex.in_closure);
  CHECK(at_apex.in_span);

  // Strictly beyond the apex threshold the point is inside.
  CHECK(region_contains(spec, pt({1, 12, 12}, 25)));
  CHECK(!region_contains(spec, barycenter(2)));
}

TEST_CASE("region membership returns an expansion witness") {
  RegionSpec spec = RegionSpec::face_neighborhood(2, 0);
  RegionGenerators gen = region_generators(spec);
  BarycentricPoint x = pt({1, 12, 12}, 25);
  RegionMembership m = region_membership(spec, x);
  REQUIRE(m.in_span);
  REQUIRE(m.coefficients.size() == gen.points.size());
  for (int c = 0; c <= 2; ++c) {
    Rational acc = 0;
    for (std::size_t i = 0; i < gen.points.size(); ++i)
      acc += m.coefficients[i] * gen.points[i][c];
    CHECK(acc == x[c]);
  }
}

TEST_CASE("inner pair neighborhoods sit inside the outer ones") {
  for (int k = 2; k <= 3; ++k)
    for (int p = 0; p <= k; ++p)
      for (int q = p + 1; q <= k; ++q) {
        RegionSpec inner = RegionSpec::codim2_neighborhood_inner(k, p, q);
        RegionSpec outer = RegionSpec::codim2_neighborhood_outer(k, p, q);
        // A point hugging the opposite face is in both.
        std::vector<long long> num(static_cast<std::size_t>(k) + 1, 0);
        long long den = 100;
        num[static_cast<std::size_t>(p)] = 1;
        num[static_cast<std::size_t>(q)] = 1;
        long long rest = (den - 2) / (k - 1);
        long long slack = (den - 2) - rest * (k - 1);
        for (int r = 0; r <= k; ++r)
          if (r != p && r != q) num[static_cast<std::size_t>(r)] = rest;
        num[static_cast<std::size_t>(p)] += slack;  // keep the sum exact
        BarycentricPoint x = pt(num, den);
        CHECK(region_contains(inner, x));
        CHECK(region_contains(outer, x));
        CHECK(!regions_disjoint(inner, outer));
      }
}

TEST_CASE("outer pair neighborhoods are pairwise disjoint") {
  int k = 3;
  std::vector<RegionSpec> outers;
  for (int p = 0; p <= k; ++p)
    for (int q = p + 1; q <= k; ++q)
      outers.push_back(RegionSpec::codim2_neighborhood_outer(k, p, q));
  for (std::size_t a = 0; a < outers.size(); ++a)
    for (std::size_t b = a + 1; b < outers.size(); ++b)
      CHECK(regions_disjoint(outers[a], outers[b]));
}

TEST_CASE("closed faces and the interior behave as regions") {
  CHECK(region_contains(RegionSpec::face(2, 0), face_barycenter(2, 0)));
  CHECK(!region_contains(RegionSpec::face(2, 0), barycenter(2)));
  CHECK(region_contains(RegionSpec::interior(2), barycenter(2)));
  CHECK(!region_contains(RegionSpec::interior(2), vertex_point(2, 0)));
  CHECK(region_contains(RegionSpec::codim2_face(3, 0, 1), pt({0, 0, 1, 1}, 2)));
}

TEST_CASE("induced face permutations satisfy the commuting law") {
  for (const Permutation& tau : Permutation::all(4))
    for (int p = 0; p <= 3; ++p) {
      auto [tau_p, image] = induced_face_permutation(tau, p);
      CHECK(image == tau(p));
      CHECK(tau_p.sign() * tau.sign() ==
            ((p + tau(p)) % 2 == 0 ? 1 : -1));
      // tau . include(p) = include(tau(p)) . tau_p on vertices.
      FaceInclusion inc_p(3, p), inc_tp(3, tau(p));
      for (int q = 0; q <= 2; ++q)
        CHECK(tau(inc_p.vertex_image(q)) == inc_tp.vertex_image(tau_p(q)));
    }
}

TEST_CASE("the inequality toolkit decides feasibility exactly") {
  // x0 > 1/2 and x0 + x1 = 1 and x1 > 1/2 is infeasible.
  LinearConstraint a{LinearExpr{{rat(1), rat(0)}, rat(-1, 2)}, LinearConstraint::Rel::gt};
  LinearConstraint b{LinearExpr{{rat(0), rat(1)}, rat(-1, 2)}, LinearConstraint::Rel::gt};
  LinearConstraint sum{LinearExpr{{rat(1), rat(1)}, rat(-1)}, LinearConstraint::Rel::eq};
  CHECK(!system_feasible(2, {a, b, sum}));
  LinearConstraint loose{LinearExpr{{rat(0), rat(1)}, rat(-1, 4)}, LinearConstraint::Rel::ge};
  CHECK(system_feasible(2, {a, loose, sum}));
}
