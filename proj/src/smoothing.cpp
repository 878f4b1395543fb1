#include "orichain/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orichain/errors.hpp"

namespace orichain {

namespace {

double ramp_exp(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

void check_point(const FloatPoint& x) {
  double sum = 0.0;
  for (double c : x) {
    if (!(c >= 0.0)) throw std::invalid_argument("barycentric coordinate is negative or NaN");
    sum += c;
  }
  if (std::fabs(sum - 1.0) > 1e-6)
    throw std::invalid_argument("barycentric coordinates do not sum to 1");
}

void check_profile(const BumpProfile& profile) {
  if (!(0.0 < profile.lower && profile.lower < profile.upper && profile.upper < 1.0))
    throw std::invalid_argument("bump profile needs 0 < lower < upper < 1");
}

// Bump with the argument already reduced to the sorted off-pair coordinates
// and the pair mass sigma; requires sigma > 0.
double bump_from_parts(const BumpProfile& profile, double sigma,
                       const std::vector<double>& sorted_rest, int n) {
  double value = 1.0;
  for (double r : sorted_rest) {
    value *= smooth_step(profile, (r / sigma - 1.0) / static_cast<double>(n));
    if (value == 0.0) break;
  }
  return value;
}

}  // namespace

double smooth_step(const BumpProfile& profile, double w) {
  check_profile(profile);
  if (w <= profile.lower) return 0.0;
  if (w >= profile.upper) return 1.0;
  const double u = (w - profile.lower) / (profile.upper - profile.lower);
  const double e0 = ramp_exp(u), e1 = ramp_exp(1.0 - u);
  return e0 / (e0 + e1);
}

FloatPoint to_float(const BarycentricPoint& x) {
  FloatPoint f(static_cast<size_t>(x.dim()) + 1);
  for (int i = 0; i <= x.dim(); ++i) f[static_cast<size_t>(i)] = to_double(x[i]);
  return f;
}

FloatPoint permute_float(const Permutation& tau, const FloatPoint& x) {
  if (static_cast<size_t>(tau.size()) != x.size())
    throw std::invalid_argument("permute_float: size mismatch");
  FloatPoint y(x.size());
  for (int q = 0; q < tau.size(); ++q) y[static_cast<size_t>(tau(q))] = x[static_cast<size_t>(q)];
  return y;
}

double bump_value(const BumpProfile& profile, int p, int q, const FloatPoint& x) {
  check_profile(profile);
  check_point(x);
  const int n = static_cast<int>(x.size()) - 1;
  if (n < 2) throw std::invalid_argument("bump_value: simplex dimension must be at least 2");
  if (p < 0 || q < 0 || p > n || q > n || p == q)
    throw std::invalid_argument("bump_value: bad coordinate pair");
  const double sigma = x[static_cast<size_t>(p)] + x[static_cast<size_t>(q)];
  std::vector<double> rest;
  rest.reserve(x.size() - 2);
  for (int r = 0; r <= n; ++r)
    if (r != p && r != q) rest.push_back(x[static_cast<size_t>(r)]);
  // Sorting makes the product independent of which pair the coordinates
  // came from, so permutation equivariance is bit-exact.
  std::sort(rest.begin(), rest.end());
  if (sigma == 0.0) {
    if (rest.front() == 0.0)
      throw std::domain_error("bump_value: no continuous extension at this boundary point");
    return 1.0;
  }
  return bump_from_parts(profile, sigma, rest, n);
}

FloatPoint codim2_collapse_eval(const BumpProfile& profile, const FloatPoint& x) {
  check_profile(profile);
  check_point(x);
  const int n = static_cast<int>(x.size()) - 1;
  if (n < 2) return x;
  for (int p = 0; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      const double sigma = x[static_cast<size_t>(p)] + x[static_cast<size_t>(q)];
      // sigma = 0 makes the projection the identity, so the term is zero
      // regardless of the bump (whose extension may not even exist there).
      if (sigma == 0.0) continue;
      std::vector<double> rest;
      rest.reserve(x.size() - 2);
      for (int r = 0; r <= n; ++r)
        if (r != p && r != q) rest.push_back(x[static_cast<size_t>(r)]);
      std::sort(rest.begin(), rest.end());
      const double eta = bump_from_parts(profile, sigma, rest, n);
      if (eta == 0.0) continue;
      // At most one pair can have a nonzero bump; apply it and stop.
      const double scale = 1.0 / (1.0 - sigma);
      FloatPoint y(x.size());
      for (int j = 0; j <= n; ++j) {
        const double xj = x[static_cast<size_t>(j)];
        const double proj = (j == p || j == q) ? 0.0 : xj * scale;
        y[static_cast<size_t>(j)] = xj + eta * (proj - xj);
      }
      return y;
    }
  }
  return x;
}

FloatPoint face_collapse_eval(const BumpProfile& profile, const FloatPoint& x, int p) {
  const int k = static_cast<int>(x.size()) - 1;
  if (p < 0 || p > k + 1) throw std::invalid_argument("face_collapse_eval: bad face index");
  FloatPoint up;
  up.reserve(x.size() + 1);
  up.insert(up.end(), x.begin(), x.begin() + p);
  up.push_back(0.0);
  up.insert(up.end(), x.begin() + p, x.end());
  FloatPoint z = codim2_collapse_eval(profile, up);
  // The inserted coordinate is exactly preserved at 0 by every branch of the
  // collapse, so deleting it loses nothing.
  z.erase(z.begin() + p);
  return z;
}

FloatPoint evaluate(const SmoothingMap& map, const FloatPoint& x) {
  if (map.kind == SmoothingMap::Kind::face_collapse)
    return evaluate_via_face(map, x, map.k + 1);
  if (map.k + 1 > map.max_dim)
    throw DimensionLimitError("smoothing map dimension exceeds the configured limit");
  if (static_cast<int>(x.size()) != map.k + 2)
    throw std::invalid_argument("evaluate: point dimension must be k+1");
  return codim2_collapse_eval(map.profile, x);
}

FloatPoint evaluate_via_face(const SmoothingMap& map, const FloatPoint& x, int p) {
  if (map.kind != SmoothingMap::Kind::face_collapse)
    throw std::invalid_argument("evaluate_via_face: map is not a face collapse");
  if (map.k + 1 > map.max_dim)
    throw DimensionLimitError("smoothing map dimension exceeds the configured limit");
  if (static_cast<int>(x.size()) != map.k + 1)
    throw std::invalid_argument("evaluate: point dimension must be k");
  return face_collapse_eval(map.profile, x, p);
}

}  // namespace orichain
