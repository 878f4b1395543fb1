#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orichain/errors.hpp"
#include "orichain/rational.hpp"

namespace orichain {

/**
 * Point of the standard simplex in barycentric coordinates.
 *
 * Invariant: k+1 exact rational coordinates, every coordinate >= 0, and the
 * coordinates sum to exactly 1.  The constructor enforces both.
 */
class BarycentricPoint {
 public:
  explicit BarycentricPoint(std::vector<Rational> coords);

  int dim() const { return static_cast<int>(coords_.size()) - 1; }
  const Rational& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool operator==(const BarycentricPoint& o) const { return coords_ == o.coords_; }
  bool operator!=(const BarycentricPoint& o) const { return !(*this == o); }
  bool operator<(const BarycentricPoint& o) const;

 private:
  std::vector<Rational> coords_;
};

/// e_p in the k-simplex.
BarycentricPoint vertex_point(int k, int p);

/**
 * Permutation of {0, ..., n-1} in one-line notation.  Parity is computed by
 * inversion count.
 */
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  /// All n! permutations in lexicographic order of the image vector.
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& other) const;  // (*this) after other
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
};

/// Coordinate permutation of a point: vertex q moves to vertex tau(q).
BarycentricPoint permute_point(const Permutation& tau, const BarycentricPoint& x);

/**
 * Affine inclusion of the (k-1)-simplex as face p of the k-simplex.
 * Vertex q maps to q when q < p and to q+1 otherwise.
 */
struct FaceInclusion {
  int k;  // target simplex dimension, k >= 1
  int p;  // omitted vertex, 0 <= p <= k

  FaceInclusion(int k_, int p_);

  std::vector<int> vertex_images() const;
  int vertex_image(int q) const { return q < p ? q : q + 1; }
  /// Index in the source simplex of target vertex r (requires r != p).
  int vertex_preimage(int r) const;
  BarycentricPoint apply(const BarycentricPoint& x) const;
};

/// Radial projection from vertex p onto the opposite face; undefined at e_p.
BarycentricPoint project_to_face(const BarycentricPoint& x, int p);
/// Radial projection from the edge spanned by vertices p, q onto the opposite
/// codimension-2 face; undefined on that edge.
BarycentricPoint project_to_codim2(const BarycentricPoint& x, int p, int q);

BarycentricPoint barycenter(int k);
/// Barycenter of face p of the k-simplex (k >= 1).
BarycentricPoint face_barycenter(int k, int p);
/// Barycenter of the k-simplex spanned by the barycenter and the vertices of
/// face p; the apex of the neighborhood that retracts onto face p.
BarycentricPoint face_apex(int k, int p);

struct BarycenterFamily {
  BarycentricPoint center;
  std::vector<BarycentricPoint> face_centers;  // empty when k == 0
  std::vector<BarycentricPoint> face_apexes;   // empty when k == 0
};
BarycenterFamily barycenter_points(int k);

/**
 * Distinguished convex regions of the k-simplex used by the smoothing maps.
 *
 * Every region is given by an affinely independent generator system; a point
 * belongs to the region when its (unique) expansion over the generators has
 * nonnegative coefficients on the interior generators and strictly positive
 * coefficients on the vertex generators, matching the defining inequalities.
 */
struct RegionSpec {
  enum class Kind {
    face_neighborhood,        // collapses onto face p
    codim2_neighborhood_outer,  // wide neighborhood of the codim-2 face {p,q}
    codim2_neighborhood_inner,  // narrow neighborhood of the codim-2 face {p,q}
    face,                     // closed face p
    codim2_face,              // closed codim-2 face {p,q}
    interior                  // open simplex
  };

  Kind kind;
  int k = 0;
  int p = -1;
  int q = -1;

  static RegionSpec face_neighborhood(int k, int p);
  static RegionSpec codim2_neighborhood_outer(int k, int p, int q);
  static RegionSpec codim2_neighborhood_inner(int k, int p, int q);
  static RegionSpec face(int k, int p);
  static RegionSpec codim2_face(int k, int p, int q);
  static RegionSpec interior(int k);

  bool operator<(const RegionSpec& o) const;
};

/// Generator system of a region together with per-generator strictness: a
/// strict generator's expansion coefficient must be > 0, a non-strict one
/// only >= 0.  Generators are listed by ascending ambient vertex index.
struct RegionGenerators {
  std::vector<BarycentricPoint> points;
  std::vector<bool> strict;
  std::vector<int> vertex_index;  // ambient index each generator is attached to
};
RegionGenerators region_generators(const RegionSpec& spec);

struct RegionMembership {
  bool inside = false;      // satisfies the defining (mixed strict) inequalities
  bool in_closure = false;  // all expansion coefficients >= 0
  bool in_span = false;     // the affine expansion exists at all
  std::vector<Rational> coefficients;  // expansion witness when in_span
};

/// Decides membership by exactly solving the defining barycentric expansion;
/// the expansion in the (cached) generator system is the returned witness.
RegionMembership region_membership(const RegionSpec& spec, const BarycentricPoint& x);
bool region_contains(const RegionSpec& spec, const BarycentricPoint& x);

/// Exact emptiness test for the intersection of two regions of the same
/// simplex, by Fourier-Motzkin elimination on the defining inequalities.
bool regions_disjoint(const RegionSpec& a, const RegionSpec& b);

/**
 * Face permutation induced by a vertex permutation: for tau on {0..k} and a
 * face index p there is a unique pair (tau_p, tau(p)) with
 *     tau . include(k, p) = include(k, tau(p)) . tau_p ,
 * and its parity satisfies  sign tau_p = (-1)^(p + tau(p)) sign tau.
 * Both facts are checked before returning.
 */
std::pair<Permutation, int> induced_face_permutation(const Permutation& tau, int p);

// Small exact linear-inequality toolkit (used for the region emptiness test).
struct LinearExpr {
  std::vector<Rational> coeff;
  Rational constant;
};
struct LinearConstraint {
  enum class Rel { eq, ge, gt };
  LinearExpr expr;
  Rel rel;
};
bool system_feasible(int nvars, std::vector<LinearConstraint> constraints);
std::vector<LinearConstraint> region_constraints(const RegionSpec& spec);

}  // namespace orichain
