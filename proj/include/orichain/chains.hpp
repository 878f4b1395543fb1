#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "orichain/simplex_core.hpp"

namespace orichain {

using VertexId = std::int32_t;
using Coef = long long;

Coef checked_add(Coef a, Coef b);
Coef checked_mul(Coef a, Coef b);

/**
 * Generator of the ordered chain groups: a tuple of vertices, repeats
 * allowed.  A tuple of m+1 vertices has grade m.  Strictly increasing tuples
 * double as the generators of the oriented quotient model.
 */
struct Tuple {
  std::vector<VertexId> v;

  Tuple() = default;
  explicit Tuple(std::vector<VertexId> verts) : v(std::move(verts)) {}
  Tuple(std::initializer_list<VertexId> verts) : v(verts) {}

  int grade() const { return static_cast<int>(v.size()) - 1; }
  bool degenerate() const;
  bool strictly_increasing() const;
  /// Sorted distinct vertices.
  std::vector<VertexId> support() const;
  Tuple face(int p) const;  // drop position p

  bool operator==(const Tuple& o) const { return v == o.v; }
  bool operator!=(const Tuple& o) const { return v != o.v; }
  bool operator<(const Tuple& o) const {
    if (v.size() != o.v.size()) return v.size() < o.v.size();
    return v < o.v;
  }
};

/// Sorted copy plus the sign of the sorting permutation; sign 0 when the
/// tuple is degenerate.
std::pair<Tuple, int> sorted_with_sign(const Tuple& t);

/// Precompose with a position permutation: result[i] = t[tau(i)].
Tuple permute_positions(const Tuple& t, const Permutation& tau);

/**
 * Finitely supported integer combination of tuples.  Terms with zero
 * coefficient are never stored.  All chain arithmetic is overflow-checked.
 */
class Chain {
 public:
  Chain() = default;

  void add(const Tuple& t, Coef c);
  const std::map<Tuple, Coef>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  /// Grade of a homogeneous chain; -1 when zero.
  int grade() const;
  Coef coefficient(const Tuple& t) const;

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain operator*(Coef s) const;
  Chain operator-() const { return *this * -1; }
  friend Chain operator+(Chain a, const Chain& b) { a += b; return a; }
  friend Chain operator-(Chain a, const Chain& b) { a -= b; return a; }
  bool operator==(const Chain& o) const { return terms_ == o.terms_; }
  bool operator!=(const Chain& o) const { return !(*this == o); }

 private:
  std::map<Tuple, Coef> terms_;
};

/// Alternating sum of the faces of each term.  Works in both models: the
/// faces of a strictly increasing tuple are strictly increasing.
Chain boundary(const Chain& c);
Chain boundary(const Tuple& t);

/// Quotient projection onto the oriented model: degenerate tuples die, every
/// other tuple maps to its sorted form with the sorting sign.
Chain project_to_oriented(const Chain& c);
bool chain_is_oriented(const Chain& c);

/// True when the boundary vanishes in the oriented model, i.e. the projected
/// boundary is zero.  A chain given by odd-ordered representatives counts as a
/// cycle whenever its oriented image is one.
bool is_cycle(const Chain& c);

/// Push a chain forward along a vertex map (tuples map pointwise; the result
/// may be degenerate, so push oriented chains through project_to_oriented
/// afterwards if needed).
Chain apply_vertex_map(const Chain& c, const std::function<VertexId(VertexId)>& f);

/**
 * Finite simplicial complex, stored as the full downward closure of its
 * facets.  Simplices are kept as sorted tuples in lexicographic order per
 * dimension, which fixes the generator order of every matrix built on top.
 * The empty complex (no facets) is allowed and has dimension -1.
 */
class SimplicialComplex {
 public:
  /// The empty complex (dimension -1).
  SimplicialComplex() = default;
  explicit SimplicialComplex(const std::vector<std::vector<VertexId>>& facets);

  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  /// All m-simplices as sorted tuples; empty outside [0, dim].
  const std::vector<Tuple>& simplices(int m) const;
  std::size_t simplex_count(int m) const { return simplices(m).size(); }
  bool contains(const Tuple& sorted_simplex) const;
  /// Whether the support of an arbitrary tuple is a simplex.
  bool contains_support(const Tuple& t) const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  /// Index of a sorted m-simplex in simplices(m); throws if absent.
  std::size_t simplex_index(int m, const Tuple& sorted_simplex) const;

  /// Ordered-model generators of grade m: all tuples of m+1 vertices whose
  /// support is a simplex, in lexicographic order.
  std::vector<Tuple> ordered_generators(int m) const;

  /// Every term's support must be a simplex.
  bool supports_chain(const Chain& c) const;

 private:
  std::vector<std::vector<Tuple>> by_dim_;
  std::vector<std::map<Tuple, std::size_t>> index_;
  std::vector<VertexId> vertices_;
};

/// Common simplices of two complexes (possibly empty).
SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace orichain
