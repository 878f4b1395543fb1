#pragma once

#include <vector>

#include "orichain/simplex_core.hpp"

namespace orichain {

/**
 * Smooth cutoff profile: 0 at or below `lower`, 1 at or above `upper`,
 * strictly increasing in between (the standard exp(-1/u) construction).
 * This module evaluates in binary64; everything else in the library is
 * exact.
 */
struct BumpProfile {
  double lower = 0.25;
  double upper = 0.75;
};

double smooth_step(const BumpProfile& profile, double w);

/// Barycentric coordinates in binary64 (nonnegative, summing to ~1).
using FloatPoint = std::vector<double>;

FloatPoint to_float(const BarycentricPoint& x);
FloatPoint permute_float(const Permutation& tau, const FloatPoint& x);

/**
 * Pair bump: 1 on the inner pair neighborhood (x_r > (n+1)(x_p+x_q) for all
 * other r), 0 outside the outer one (some x_r <= x_p+x_q), smooth in
 * between; invariant under coordinate permutations carrying one pair to the
 * other, bit-exactly (factors are multiplied in sorted order).
 *
 * Throws std::domain_error on the excluded locus: x_p = x_q = 0 with some
 * other coordinate also 0 (the bump has no continuous extension there).
 */
double bump_value(const BumpProfile& profile, int p, int q, const FloatPoint& x);

/**
 * Collapse toward the codimension-2 skeleton on the whole simplex:
 *     x  +  sum over pairs p<q of  bump_{p,q}(x) * (proj_{p,q}(x) - x)
 * where proj zeroes the pair and rescales the rest.  The outer bump
 * supports are pairwise disjoint (this survives float comparisons), so at
 * most one term is active.  Terms are skipped coefficient-first, so the
 * map is total on the simplex.  Equals proj_{p,q} on the inner pair
 * neighborhoods and the identity outside all outer ones.
 */
FloatPoint codim2_collapse_eval(const BumpProfile& profile, const FloatPoint& x);

/**
 * Face-collapse self-map of the k-simplex, defined through the codim-2
 * collapse one dimension up: include as face p (insert a zero coordinate),
 * collapse, delete the inserted coordinate (which stays exactly 0).  The
 * result is independent of p bit-for-bit.  Equals the radial projection
 * onto face p on the face neighborhood region, and the identity outside
 * all of them.
 */
FloatPoint face_collapse_eval(const BumpProfile& profile, const FloatPoint& x, int p);

/// Self-map description used by the CLI and the identity test-suites.
struct SmoothingMap {
  enum class Kind { codim2_collapse, face_collapse };
  Kind kind = Kind::face_collapse;
  int k = 2;  // face_collapse acts on the k-simplex, codim2_collapse on the (k+1)-simplex
  BumpProfile profile{};
  int max_dim = 4;  // largest ambient simplex dimension allowed (configurable)
};

/// Evaluate the map; face_collapse uses the default face index k+1.
/// Throws DimensionLimitError when the ambient dimension k+1 exceeds
/// max_dim, std::invalid_argument when x has the wrong dimension.
FloatPoint evaluate(const SmoothingMap& map, const FloatPoint& x);
/// face_collapse only: route the construction through face p.
FloatPoint evaluate_via_face(const SmoothingMap& map, const FloatPoint& x, int p);

}  // namespace orichain
