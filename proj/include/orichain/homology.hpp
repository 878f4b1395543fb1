#pragma once

#include <string>
#include <vector>

#include "orichain/chains.hpp"
#include "orichain/snf.hpp"

namespace orichain {

/// Which chain model backs the boundary matrices: one generator per simplex
/// (oriented quotient model) or all vertex tuples with simplex support
/// (ordered model, including degenerate tuples).
enum class ChainModel { oriented, ordered };

/// Finitely generated abelian group in canonical form: free rank plus the
/// divisor chain of the torsion part (each entry > 1, each dividing the next).
struct HomologyGroup {
  long long free_rank = 0;
  std::vector<long long> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const HomologyGroup& o) const { return !(*this == o); }
};

/// "0", "Z", "Z^2 + Z/2", ...
std::string to_string(const HomologyGroup& g);

/**
 * Boundary matrix of degree m: rows are generators of degree m-1, columns
 * generators of degree m, in the complex's deterministic generator order.
 * Degree 0 has no rows.  The ordered model is only available for m up to
 * dim+1 (the degeneracy truncation).
 */
IntMatrix boundary_matrix(const SimplicialComplex& K, int m,
                          ChainModel model = ChainModel::oriented);

/// Boundary matrix of the relative complex: generators supported on A are
/// deleted from both sides.  A must be a subcomplex of K.
IntMatrix relative_boundary_matrix(const SimplicialComplex& K, const SimplicialComplex& A,
                                   int m, ChainModel model = ChainModel::oriented);

/// H_m(K) from Smith normal forms of the two adjacent boundary matrices.
/// The ordered model accepts m <= dim K (agreement with the oriented model
/// in that range is exactly what the degeneracy truncation guarantees).
HomologyGroup homology(const SimplicialComplex& K, int m,
                       ChainModel model = ChainModel::oriented);
/// Degrees 0..dim.
std::vector<HomologyGroup> homology_all(const SimplicialComplex& K,
                                        ChainModel model = ChainModel::oriented);

HomologyGroup relative_homology(const SimplicialComplex& K, const SimplicialComplex& A, int m,
                                ChainModel model = ChainModel::oriented);
std::vector<HomologyGroup> relative_homology_all(const SimplicialComplex& K,
                                                 const SimplicialComplex& A,
                                                 ChainModel model = ChainModel::oriented);

/// Alternating sum of simplex counts.
long long euler_characteristic_counts(const SimplicialComplex& K);
/// Alternating sum of free homology ranks; equals the count form.
long long euler_characteristic_ranks(const SimplicialComplex& K);

/**
 * Inclusion-union vanishing checker for a cover K = U_0 .. U_k.
 *
 * Hypothesis (checked directly): every intersection of a nonempty subfamily
 * has H_l = 0 for all l > 0.  Conclusion (also checked directly): H_l(K) = 0
 * for all l > k.  The hypothesis implies the conclusion by induction on the
 * usual two-piece long exact sequence; this checker evaluates both sides
 * at desk scale and reports the first counterexample if either fails.
 */
struct MvReport {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  // First failure witnesses; degree -1 and empty subset when the side holds.
  int hypothesis_counterexample_degree = -1;
  std::vector<int> hypothesis_counterexample_subset;
  int conclusion_counterexample_degree = -1;

  bool ok() const { return hypothesis_holds && conclusion_holds; }
};

/// Throws SubcomplexError when a piece is not a subcomplex of K or the
/// pieces do not union to K.
MvReport verify_mv_vanishing(const SimplicialComplex& K,
                             const std::vector<SimplicialComplex>& cover);

}  // namespace orichain
