#include "orichain/simplex_core.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace orichain {

BarycentricPoint::BarycentricPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("barycentric point needs at least one coordinate");
  Rational sum = 0;
  for (const auto& c : coords_) {
    if (c < 0) throw std::invalid_argument("barycentric coordinate is negative");
    sum += c;
  }
  if (sum != 1) throw std::invalid_argument("barycentric coordinates must sum to 1");
}

bool BarycentricPoint::operator<(const BarycentricPoint& o) const {
  return std::lexicographical_compare(coords_.begin(), coords_.end(), o.coords_.begin(),
                                      o.coords_.end());
}

BarycentricPoint vertex_point(int k, int p) {
  if (k < 0 || p < 0 || p > k) throw std::invalid_argument("vertex_point: bad indices");
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  c[static_cast<size_t>(p)] = 1;
  return BarycentricPoint(std::move(c));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation t = identity(n);
  std::swap(t.images_[static_cast<size_t>(i)], t.images_[static_cast<size_t>(j)]);
  return t;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("composing permutations of unequal size");
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < im.size(); ++i) im[i] = images_[static_cast<size_t>(other.images_[i])];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) im[static_cast<size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(im));
}

int Permutation::sign() const {
  int inversions = 0;
  for (size_t i = 0; i < images_.size(); ++i)
    for (size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

BarycentricPoint permute_point(const Permutation& tau, const BarycentricPoint& x) {
  if (tau.size() != x.dim() + 1)
    throw std::invalid_argument("permute_point: size mismatch");
  std::vector<Rational> c(static_cast<size_t>(tau.size()));
  for (int q = 0; q < tau.size(); ++q) c[static_cast<size_t>(tau(q))] = x[q];
  return BarycentricPoint(std::move(c));
}

FaceInclusion::FaceInclusion(int k_, int p_) : k(k_), p(p_) {
  if (k < 1 || p < 0 || p > k) throw std::invalid_argument("face inclusion: bad indices");
}

std::vector<int> FaceInclusion::vertex_images() const {
  std::vector<int> im(static_cast<size_t>(k));
  for (int q = 0; q < k; ++q) im[static_cast<size_t>(q)] = vertex_image(q);
  return im;
}

int FaceInclusion::vertex_preimage(int r) const {
  if (r == p) throw std::invalid_argument("face inclusion: omitted vertex has no preimage");
  return r < p ? r : r - 1;
}

BarycentricPoint FaceInclusion::apply(const BarycentricPoint& x) const {
  if (x.dim() != k - 1) throw std::invalid_argument("face inclusion: dimension mismatch");
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  for (int q = 0; q < k; ++q) c[static_cast<size_t>(vertex_image(q))] = x[q];
  return BarycentricPoint(std::move(c));
}

BarycentricPoint project_to_face(const BarycentricPoint& x, int p) {
  const int k = x.dim();
  if (p < 0 || p > k) throw std::invalid_argument("project_to_face: bad vertex");
  if (x[p] == 1) throw UndefinedProjectionError("projection from a vertex is undefined at that vertex");
  const Rational scale = Rational(1) / (Rational(1) - x[p]);
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  for (int j = 0; j <= k; ++j)
    if (j != p) c[static_cast<size_t>(j)] = x[j] * scale;
  return BarycentricPoint(std::move(c));
}

BarycentricPoint project_to_codim2(const BarycentricPoint& x, int p, int q) {
  const int k = x.dim();
  if (p < 0 || q < 0 || p > k || q > k || p == q)
    throw std::invalid_argument("project_to_codim2: bad vertex pair");
  const Rational sigma = x[p] + x[q];
  if (sigma == 1) throw UndefinedProjectionError("projection from an edge is undefined on that edge");
  const Rational scale = Rational(1) / (Rational(1) - sigma);
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  for (int j = 0; j <= k; ++j)
    if (j != p && j != q) c[static_cast<size_t>(j)] = x[j] * scale;
  return BarycentricPoint(std::move(c));
}

BarycentricPoint barycenter(int k) {
  if (k < 0) throw std::invalid_argument("barycenter: negative dimension");
  return BarycentricPoint(std::vector<Rational>(static_cast<size_t>(k) + 1, rat(1, k + 1)));
}

BarycentricPoint face_barycenter(int k, int p) {
  if (k < 1 || p < 0 || p > k) throw std::invalid_argument("face_barycenter: bad indices");
  std::vector<Rational> c(static_cast<size_t>(k) + 1, rat(1, k));
  c[static_cast<size_t>(p)] = 0;
  return BarycentricPoint(std::move(c));
}

BarycentricPoint face_apex(int k, int p) {
  if (k < 1 || p < 0 || p > k) throw std::invalid_argument("face_apex: bad indices");
  // Average of the barycenter with the vertices of face p: coordinate p is
  // 1/(k+1)^2 and every other coordinate is (k+2)/(k+1)^2.
  std::vector<Rational> c(static_cast<size_t>(k) + 1, rat(k + 2, (k + 1) * (k + 1)));
  c[static_cast<size_t>(p)] = rat(1, (k + 1) * (k + 1));
  return BarycentricPoint(std::move(c));
}

BarycenterFamily barycenter_points(int k) {
  BarycenterFamily fam{barycenter(k), {}, {}};
  if (k >= 1) {
    for (int p = 0; p <= k; ++p) {
      fam.face_centers.push_back(face_barycenter(k, p));
      fam.face_apexes.push_back(face_apex(k, p));
    }
  }
  return fam;
}

RegionSpec RegionSpec::face_neighborhood(int k, int p) {
  if (k < 1 || p < 0 || p > k) throw std::invalid_argument("face_neighborhood: bad indices");
  return RegionSpec{Kind::face_neighborhood, k, p, -1};
}

RegionSpec RegionSpec::codim2_neighborhood_outer(int k, int p, int q) {
  if (k < 2 || p < 0 || q < 0 || p > k || q > k || p == q)
    throw std::invalid_argument("codim2_neighborhood_outer: bad indices");
  return RegionSpec{Kind::codim2_neighborhood_outer, k, std::min(p, q), std::max(p, q)};
}

RegionSpec RegionSpec::codim2_neighborhood_inner(int k, int p, int q) {
  if (k < 2 || p < 0 || q < 0 || p > k || q > k || p == q)
    throw std::invalid_argument("codim2_neighborhood_inner: bad indices");
  return RegionSpec{Kind::codim2_neighborhood_inner, k, std::min(p, q), std::max(p, q)};
}

RegionSpec RegionSpec::face(int k, int p) {
  if (k < 1 || p < 0 || p > k) throw std::invalid_argument("face: bad indices");
  return RegionSpec{Kind::face, k, p, -1};
}

RegionSpec RegionSpec::codim2_face(int k, int p, int q) {
  if (k < 2 || p < 0 || q < 0 || p > k || q > k || p == q)
    throw std::invalid_argument("codim2_face: bad indices");
  return RegionSpec{Kind::codim2_face, k, std::min(p, q), std::max(p, q)};
}

RegionSpec RegionSpec::interior(int k) {
  if (k < 0) throw std::invalid_argument("interior: negative dimension");
  return RegionSpec{Kind::interior, k, -1, -1};
}

bool RegionSpec::operator<(const RegionSpec& o) const {
  return std::tie(kind, k, p, q) < std::tie(o.kind, o.k, o.p, o.q);
}

RegionGenerators region_generators(const RegionSpec& spec) {
  RegionGenerators g;
  const int k = spec.k;
  switch (spec.kind) {
    case RegionSpec::Kind::face_neighborhood:
      // Apex toward the omitted vertex, plus the vertices of the face.  A
      // point lies inside when each vertex coefficient is strictly positive,
      // i.e. x_q > (k+2) x_p for every q != p.
      for (int i = 0; i <= k; ++i) {
        if (i == spec.p) {
          g.points.push_back(face_apex(k, spec.p));
          g.strict.push_back(false);
        } else {
          g.points.push_back(vertex_point(k, i));
          g.strict.push_back(true);
        }
        g.vertex_index.push_back(i);
      }
      break;
    case RegionSpec::Kind::codim2_neighborhood_outer:
      // Both face barycenters opposite the pair, plus the remaining vertices.
      // Inside iff x_r > x_p + x_q for every r outside the pair.
      for (int i = 0; i <= k; ++i) {
        if (i == spec.p || i == spec.q) {
          g.points.push_back(face_barycenter(k, i));
          g.strict.push_back(false);
        } else {
          g.points.push_back(vertex_point(k, i));
          g.strict.push_back(true);
        }
        g.vertex_index.push_back(i);
      }
      break;
    case RegionSpec::Kind::codim2_neighborhood_inner:
      // The apex generators live on the two faces through the codim-2 face:
      // the generator at p is the face-p inclusion of the apex toward the
      // slot that maps to q.  Inside iff x_r > (k+1)(x_p + x_q) for all r.
      for (int i = 0; i <= k; ++i) {
        if (i == spec.p || i == spec.q) {
          const int other = (i == spec.p) ? spec.q : spec.p;
          FaceInclusion inc(k, i);
          g.points.push_back(inc.apply(face_apex(k - 1, inc.vertex_preimage(other))));
          g.strict.push_back(false);
        } else {
          g.points.push_back(vertex_point(k, i));
          g.strict.push_back(true);
        }
        g.vertex_index.push_back(i);
      }
      break;
    case RegionSpec::Kind::face:
      for (int i = 0; i <= k; ++i) {
        if (i == spec.p) continue;
        g.points.push_back(vertex_point(k, i));
        g.strict.push_back(false);
        g.vertex_index.push_back(i);
      }
      break;
    case RegionSpec::Kind::codim2_face:
      for (int i = 0; i <= k; ++i) {
        if (i == spec.p || i == spec.q) continue;
        g.points.push_back(vertex_point(k, i));
        g.strict.push_back(false);
        g.vertex_index.push_back(i);
      }
      break;
    case RegionSpec::Kind::interior:
      for (int i = 0; i <= k; ++i) {
        g.points.push_back(vertex_point(k, i));
        g.strict.push_back(true);
        g.vertex_index.push_back(i);
      }
      break;
  }
  return g;
}

namespace {

// Precomputed affine expansion of a region's generator system: each
// coefficient is a fixed affine function of the ambient coordinates, and the
// consistency rows must vanish for the point to lie in the affine span.
struct RegionExpansion {
  RegionGenerators gens;
  // Row layout: k+1 coefficients on x_0..x_k followed by one constant term.
  std::vector<std::vector<Rational>> coeff_rows;
  std::vector<std::vector<Rational>> consistency_rows;
};

Rational eval_row(const std::vector<Rational>& row, const BarycentricPoint& x) {
  Rational v = row.back();
  for (int i = 0; i <= x.dim(); ++i) v += row[static_cast<size_t>(i)] * x[i];
  return v;
}

std::shared_ptr<const RegionExpansion> expansion_for(const RegionSpec& spec) {
  static std::mutex mu;
  static std::map<RegionSpec, std::shared_ptr<const RegionExpansion>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(spec);
    if (it != cache.end()) return it->second;
  }

  auto exp = std::make_shared<RegionExpansion>();
  exp->gens = region_generators(spec);
  const int k = spec.k;
  const size_t n = exp->gens.points.size();
  const size_t rows = static_cast<size_t>(k) + 2;  // coordinate rows plus the sum row

  // Solve A t = (x, 1) symbolically: carry the right-hand side as affine rows
  // in (x_0..x_k, 1) through a full reduction of A.
  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(n, Rational(0)));
  std::vector<std::vector<Rational>> B(rows, std::vector<Rational>(static_cast<size_t>(k) + 2, Rational(0)));
  for (size_t j = 0; j < n; ++j)
    for (int i = 0; i <= k; ++i) A[static_cast<size_t>(i)][j] = exp->gens.points[j][i];
  for (size_t j = 0; j < n; ++j) A[rows - 1][j] = 1;
  for (int i = 0; i <= k; ++i) B[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  B[rows - 1][static_cast<size_t>(k) + 1] = 1;

  std::vector<size_t> pivot_row(n);
  size_t next_row = 0;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = next_row;
    while (piv < rows && A[piv][col] == 0) ++piv;
    // Generator systems are affinely independent by construction.
    assert(piv < rows && "region generators must be affinely independent");
    std::swap(A[piv], A[next_row]);
    std::swap(B[piv], B[next_row]);
    const Rational inv = Rational(1) / A[next_row][col];
    for (auto& v : A[next_row]) v *= inv;
    for (auto& v : B[next_row]) v *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == next_row || A[r][col] == 0) continue;
      const Rational f = A[r][col];
      for (size_t j = 0; j < n; ++j) A[r][j] -= f * A[next_row][j];
      for (size_t j = 0; j < B[r].size(); ++j) B[r][j] -= f * B[next_row][j];
    }
    pivot_row[col] = next_row;
    ++next_row;
  }
  for (size_t col = 0; col < n; ++col) exp->coeff_rows.push_back(B[pivot_row[col]]);
  for (size_t r = next_row; r < rows; ++r) exp->consistency_rows.push_back(B[r]);

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(spec, std::move(exp));
  (void)inserted;
  return it->second;
}

}  // namespace

RegionMembership region_membership(const RegionSpec& spec, const BarycentricPoint& x) {
  if (x.dim() != spec.k) throw std::invalid_argument("region_membership: dimension mismatch");
  auto exp = expansion_for(spec);
  RegionMembership m;
  for (const auto& row : exp->consistency_rows)
    if (eval_row(row, x) != 0) return m;
  m.in_span = true;
  m.inside = true;
  m.in_closure = true;
  m.coefficients.reserve(exp->coeff_rows.size());
  for (size_t j = 0; j < exp->coeff_rows.size(); ++j) {
    Rational t = eval_row(exp->coeff_rows[j], x);
    if (t < 0) m.in_closure = false;
    if (exp->gens.strict[j] ? !(t > 0) : !(t >= 0)) m.inside = false;
    m.coefficients.push_back(std::move(t));
  }
  if (!m.in_closure) m.inside = false;
  return m;
}

bool region_contains(const RegionSpec& spec, const BarycentricPoint& x) {
  return region_membership(spec, x).inside;
}

std::pair<Permutation, int> induced_face_permutation(const Permutation& tau, int p) {
  const int k = tau.size() - 1;
  if (k < 1 || p < 0 || p > k) throw std::invalid_argument("induced_face_permutation: bad indices");
  const int tp = tau(p);
  const FaceInclusion inc_p(k, p), inc_tp(k, tp);
  std::vector<int> im(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    im[static_cast<size_t>(i)] = inc_tp.vertex_preimage(tau(inc_p.vertex_image(i)));
  Permutation tau_p(std::move(im));
  // Parity bookkeeping used throughout the face calculus.
  const int expected = ((p + tp) % 2 == 0 ? 1 : -1) * tau.sign();
  assert(tau_p.sign() == expected);
  (void)expected;
  return {std::move(tau_p), tp};
}

std::vector<LinearConstraint> region_constraints(const RegionSpec& spec) {
  const int k = spec.k;
  const size_t width = static_cast<size_t>(k) + 1;
  std::vector<LinearConstraint> out;
  auto coord_expr = [&](int i) {
    LinearExpr e{std::vector<Rational>(width, Rational(0)), Rational(0)};
    e.coeff[static_cast<size_t>(i)] = 1;
    return e;
  };
  for (int i = 0; i <= k; ++i)
    out.push_back({coord_expr(i), LinearConstraint::Rel::ge});
  LinearExpr sum{std::vector<Rational>(width, Rational(1)), Rational(-1)};
  out.push_back({sum, LinearConstraint::Rel::eq});

  auto exp = expansion_for(spec);
  auto row_expr = [&](const std::vector<Rational>& row) {
    LinearExpr e{std::vector<Rational>(row.begin(), row.begin() + static_cast<long>(width)), row.back()};
    return e;
  };
  for (const auto& row : exp->consistency_rows)
    out.push_back({row_expr(row), LinearConstraint::Rel::eq});
  for (size_t j = 0; j < exp->coeff_rows.size(); ++j)
    out.push_back({row_expr(exp->coeff_rows[j]),
                   exp->gens.strict[j] ? LinearConstraint::Rel::gt : LinearConstraint::Rel::ge});
  return out;
}

namespace {

struct NormalizedConstraint {
  std::vector<Rational> a;
  Rational c;
  LinearConstraint::Rel rel;
  bool operator<(const NormalizedConstraint& o) const {
    if (rel != o.rel) return rel < o.rel;
    if (c != o.c) return c < o.c;
    return std::lexicographical_compare(a.begin(), a.end(), o.a.begin(), o.a.end());
  }
};

// Scale so the first nonzero entry (or the constant) has absolute value 1.
void normalize(NormalizedConstraint& nc) {
  for (const auto& v : nc.a) {
    if (v != 0) {
      Rational s = v > 0 ? v : Rational(-v);
      for (auto& w : nc.a) w /= s;
      nc.c /= s;
      return;
    }
  }
  if (nc.c != 0) {
    Rational s = nc.c > 0 ? nc.c : Rational(-nc.c);
    nc.c /= s;
  }
}

}  // namespace

bool system_feasible(int nvars, std::vector<LinearConstraint> constraints) {
  std::vector<NormalizedConstraint> work;
  for (auto& con : constraints) {
    if (static_cast<int>(con.expr.coeff.size()) != nvars)
      throw std::invalid_argument("system_feasible: constraint width mismatch");
    work.push_back({std::move(con.expr.coeff), std::move(con.expr.constant), con.rel});
  }

  // Eliminate equalities by substitution.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < work.size(); ++i) {
      if (work[i].rel != LinearConstraint::Rel::eq) continue;
      int v = -1;
      for (int j = 0; j < nvars; ++j)
        if (work[i].a[static_cast<size_t>(j)] != 0) { v = j; break; }
      if (v < 0) {
        if (work[i].c != 0) return false;
        work.erase(work.begin() + static_cast<long>(i));
      } else {
        NormalizedConstraint eq = work[i];
        work.erase(work.begin() + static_cast<long>(i));
        const Rational pivot = eq.a[static_cast<size_t>(v)];
        for (auto& other : work) {
          const Rational f = other.a[static_cast<size_t>(v)] / pivot;
          if (f == 0) continue;
          for (int j = 0; j < nvars; ++j) other.a[static_cast<size_t>(j)] -= f * eq.a[static_cast<size_t>(j)];
          other.a[static_cast<size_t>(v)] = 0;
          other.c -= f * eq.c;
        }
      }
      changed = true;
      break;
    }
  }

  // Fourier-Motzkin elimination of the remaining inequalities.
  for (int v = 0; v < nvars; ++v) {
    std::vector<NormalizedConstraint> pos, neg, rest;
    for (auto& nc : work) {
      const Rational& av = nc.a[static_cast<size_t>(v)];
      if (av > 0) pos.push_back(std::move(nc));
      else if (av < 0) neg.push_back(std::move(nc));
      else rest.push_back(std::move(nc));
    }
    std::set<NormalizedConstraint> dedup;
    for (auto& nc : rest) {
      bool constant = true;
      for (const auto& w : nc.a)
        if (w != 0) { constant = false; break; }
      if (constant) {
        if (nc.rel == LinearConstraint::Rel::gt ? !(nc.c > 0) : !(nc.c >= 0)) return false;
        continue;
      }
      normalize(nc);
      dedup.insert(std::move(nc));
    }
    if (!pos.empty() && !neg.empty()) {
      for (const auto& P : pos) {
        for (const auto& N : neg) {
          NormalizedConstraint nc;
          nc.a.assign(static_cast<size_t>(nvars), Rational(0));
          const Rational wp = -N.a[static_cast<size_t>(v)];
          const Rational wn = P.a[static_cast<size_t>(v)];
          for (int j = 0; j < nvars; ++j)
            nc.a[static_cast<size_t>(j)] = wp * P.a[static_cast<size_t>(j)] + wn * N.a[static_cast<size_t>(j)];
          nc.a[static_cast<size_t>(v)] = 0;
          nc.c = wp * P.c + wn * N.c;
          nc.rel = (P.rel == LinearConstraint::Rel::gt || N.rel == LinearConstraint::Rel::gt)
                       ? LinearConstraint::Rel::gt
                       : LinearConstraint::Rel::ge;
          bool constant = true;
          for (const auto& w : nc.a)
            if (w != 0) { constant = false; break; }
          if (constant) {
            if (nc.rel == LinearConstraint::Rel::gt ? !(nc.c > 0) : !(nc.c >= 0)) return false;
            continue;
          }
          normalize(nc);
          dedup.insert(std::move(nc));
        }
      }
    }
    // A variable bounded on one side only is freely satisfiable; those
    // constraints drop out.
    work.assign(dedup.begin(), dedup.end());
  }

  for (const auto& nc : work)
    if (nc.rel == LinearConstraint::Rel::gt ? !(nc.c > 0) : !(nc.c >= 0)) return false;
  return true;
}

bool regions_disjoint(const RegionSpec& a, const RegionSpec& b) {
  if (a.k != b.k) throw std::invalid_argument("regions_disjoint: dimension mismatch");
  auto cons = region_constraints(a);
  auto more = region_constraints(b);
  cons.insert(cons.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return !system_feasible(a.k + 1, std::move(cons));
}

}  // namespace orichain
