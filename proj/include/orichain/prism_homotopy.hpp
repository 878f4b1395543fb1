#pragma once

#include <map>
#include <vector>

#include "orichain/chains.hpp"
#include "orichain/simplex_core.hpp"

namespace orichain {

/**
 * Linear map of simplices recorded by its vertex images: m+1 exact rational
 * points of the target simplex.  Repeated image points are allowed; this
 * module works before the oriented quotient.
 */
struct LinearMapSimplex {
  int target_dim = 0;
  std::vector<BarycentricPoint> vertex_images;

  LinearMapSimplex(int k, std::vector<BarycentricPoint> images);

  int grade() const { return static_cast<int>(vertex_images.size()) - 1; }
  /// Affine evaluation: x in the source simplex maps to sum x_i * image_i.
  BarycentricPoint apply(const BarycentricPoint& x) const;
  /// Precompose with a position permutation: (f o tau)_i = f_{tau(i)}.
  LinearMapSimplex compose_positions(const Permutation& tau) const;
  /// Drop vertex image p.
  LinearMapSimplex face(int p) const;

  bool operator==(const LinearMapSimplex& o) const {
    return target_dim == o.target_dim && vertex_images == o.vertex_images;
  }
  bool operator<(const LinearMapSimplex& o) const;
};

/// Identity of the k-simplex: images e_0..e_k.
LinearMapSimplex identity_map(int k);
/// Vertex-tuple cell in the k-simplex: images e_{v_0}..e_{v_m}.
LinearMapSimplex linear_from_vertices(int k, const std::vector<int>& vertices);

/// Integer combination of linear cells with a common target simplex.
class LinearChain {
 public:
  LinearChain() = default;

  void add(const LinearMapSimplex& f, Coef c);
  const std::map<LinearMapSimplex, Coef>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  int grade() const;  // grade of a homogeneous chain; -1 when zero

  LinearChain& operator+=(const LinearChain& o);
  LinearChain& operator-=(const LinearChain& o);
  LinearChain operator*(Coef s) const;
  bool operator==(const LinearChain& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinearChain& o) const { return !(*this == o); }
  friend LinearChain operator+(LinearChain a, const LinearChain& b) { a += b; return a; }
  friend LinearChain operator-(LinearChain a, const LinearChain& b) { a -= b; return a; }

 private:
  std::map<LinearMapSimplex, Coef> terms_;
};

/// Alternating sum of vertex-image deletions.
LinearChain linear_boundary(const LinearChain& c);
LinearChain linear_boundary(const LinearMapSimplex& f);

/// Cone toward the target barycenter: b_k is appended as the final vertex
/// image.  For grade m >= 1 it satisfies
///     boundary(prism f) = (-1)^(m+1) f + prism(boundary f);
/// in grade 0 the boundary of a point vanishes instead of producing an
/// augmentation term, so boundary(prism f) = (b_k) - f there.
LinearMapSimplex prism(const LinearMapSimplex& f);
LinearChain prism(const LinearChain& c);

/// Push a chain of cells in the source simplex of f through f.
LinearChain pushforward(const LinearMapSimplex& f, const LinearChain& c);

/**
 * Chain homotopy contracting the antisymmetrizer subcomplex: zero on grades
 * below 1, and on a grade-m generator f it is the pushforward of the
 * memoized value on the identity,
 *     D(Id_k) = prism(Id_k + (-1)^(k+1) D(boundary Id_k)),  D(Id_0) = 0.
 */
LinearChain homotopy_D(const LinearChain& c);
/// Memoized D(Id_k); the cache is insert-once and thread-safe.
const LinearChain& homotopy_on_identity(int k);

/**
 * Presentation term of the antisymmetrizer subcomplex: contributes
 * coef * (f - sign(tau) f o tau).  tau acts on positions, so its size must
 * be grade(f) + 1.
 */
struct SPrimeTerm {
  Coef coef;
  LinearMapSimplex f;
  Permutation tau;
};

struct HomotopyIdentityReport {
  bool holds = false;
  LinearChain defect;  // boundary(D c) - (-1)^(k+1) c - D(boundary c)
};

/// Exact check of the contraction identity on a chain given in presentation
/// form; throws std::invalid_argument when the presentation is malformed
/// (mixed grades or targets, permutation size mismatch).
HomotopyIdentityReport verify_homotopy_identity(const std::vector<SPrimeTerm>& presentation);

}  // namespace orichain
