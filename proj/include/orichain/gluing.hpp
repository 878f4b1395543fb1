#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orichain/chains.hpp"
#include "orichain/errors.hpp"

namespace orichain {

/// One codimension-1 face of one top cell: cell index plus face position.
struct FaceSlot {
  std::size_t cell = 0;
  int face = 0;

  bool operator==(const FaceSlot& o) const { return cell == o.cell && face == o.face; }
  bool operator!=(const FaceSlot& o) const { return !(*this == o); }
  bool operator<(const FaceSlot& o) const {
    return cell != o.cell ? cell < o.cell : face < o.face;
  }
};

/// The chain is not usable as a multiset of simplices with matched faces;
/// residue is the oriented chain witnessing the failure.
struct NotACycleError : std::runtime_error {
  NotACycleError(const std::string& msg, Chain r) : std::runtime_error(msg), residue(std::move(r)) {}
  Chain residue;
};

/// The boundary relation between a filling chain and its two ends fails;
/// residue is the oriented difference.
struct BoundaryMismatchError : std::runtime_error {
  BoundaryMismatchError(const std::string& msg, Chain r)
      : std::runtime_error(msg), residue(std::move(r)) {}
  Chain residue;
};

enum class PairingMode { strict_cycle, allow_boundary };

/**
 * Involutive matching of face slots.  Each key maps to its partner and the
 * aligning position permutation tau with
 *     face(partner)[i] = face(slot)[tau(i)]   for all i,
 * so perm(partner) is the inverse of perm(slot), and for a matching
 * extracted from a cycle, sign tau = -(-1)^(p1+p2).
 */
struct FacePairing {
  std::map<FaceSlot, std::pair<FaceSlot, Permutation>> matches;
  std::vector<FaceSlot> unmatched;  // empty in strict mode

  bool is_matched(const FaceSlot& s) const { return matches.count(s) > 0; }
  const FaceSlot& partner(const FaceSlot& s) const { return matches.at(s).first; }
  const Permutation& perm(const FaceSlot& s) const { return matches.at(s).second; }
};

/// Top cell of a glued object: the vertex tuple it maps to (possibly
/// degenerate for collar cells, whose interval direction collapses) and a
/// +-1 orientation sign.
struct Cell {
  Tuple map;
  Coef sign = 1;
};

/**
 * Expansion of an integer cycle into a multiset of sign +1 cells: |a| copies
 * per term, with the first two vertices swapped when a < 0.  Throws
 * NotACycleError on degenerate tuples (they cannot serve as cells).
 */
std::vector<Cell> expand_cycle_cells(const Chain& s);

/**
 * Extract a face pairing from a top-grade chain: slots are grouped by the
 * sorted face tuple and matched in (cell, face)-lexicographic order so that
 * induced oriented face signs are opposite; the sign condition follows.
 * In strict mode an unbalanced group throws NotACycleError with the oriented
 * residue; allow_boundary mode records leftovers in `unmatched`.
 */
FacePairing extract_face_pairing(const Chain& s, PairingMode mode = PairingMode::strict_cycle);

/**
 * Quotient cell structure of a chain glued along a pairing.  The quotient is
 * purely combinatorial: a class is a set of (cell, vertex-position-subset)
 * pairs merged through the pairing's position bijections.
 */
struct GluedComplex {
  using SubFace = std::pair<std::size_t, std::vector<int>>;  // cell, sorted positions

  int top_dim = 0;
  std::vector<Cell> cells;
  FacePairing identifications;
  std::vector<FaceSlot> boundary_slots;                       // unmatched codim-1 slots
  std::vector<std::vector<std::vector<SubFace>>> quotient_cells;  // [dim][class][member]
  bool orientation_compatible = false;  // generalized sign condition on every pair
  bool pseudomanifold = false;          // every codim-1 class has exactly two slots
  bool closed = false;                  // no boundary slots
  long long euler_characteristic = 0;

  std::size_t class_count(int dim) const;
  /// Classes of dimension top_dim - 2: the locus whose removal leaves the
  /// manifold-like part.
  const std::vector<std::vector<SubFace>>& codim2_skeleton() const;
};

/// Build the quotient; throws GluingMismatchError when the pairing does not
/// fit the chain (bad indices, broken involution, misaligned face tuples).
GluedComplex glue(const Chain& s, const FacePairing& pairing);

/// Signed sum of the top cells.  Requires a closed, orientation-compatible
/// complex (GluingMismatchError otherwise).
Chain fundamental_cycle(const GluedComplex& G);

/// Oriented chain carried by the unmatched slots (with induced signs).
Chain oriented_boundary_chain(const GluedComplex& G);

/// Exact integer decision of "c is the boundary of some (k+1)-chain of K in
/// the oriented model", via the Smith normal form of the boundary matrix.
bool is_oriented_boundary(const SimplicialComplex& K, const Chain& c);

/// Desk-scale round-trip identity: gluing a cycle and reading its
/// fundamental cycle back lands in the same oriented homology class of K.
bool check_glued_class_identity(const Chain& s, const SimplicialComplex& K);

/// One boundary cell attached to one slot of the filling chain;
/// face(slot) = cell_tuple o tau positionwise.
struct BoundaryAttachment {
  std::size_t boundary_cell = 0;
  FaceSlot slot;
  Permutation tau = Permutation::identity(0);
};

/**
 * Partition of the face slots of a filling chain: interior pairs, slots
 * realizing the outgoing end (c1), and slots realizing the incoming end
 * (c0).  Cells of the two ends whose oriented classes cancel between the
 * ends receive no attachment and are listed as unattached.
 */
struct CobordismData {
  int k = 0;  // dimension of the ends; the filling cells have dimension k+1
  std::vector<Cell> cells;  // expanded filling cells
  std::vector<Cell> s0_cells;
  std::vector<Cell> s1_cells;
  FacePairing interior;
  std::vector<BoundaryAttachment> c0;
  std::vector<BoundaryAttachment> c1;
  std::vector<std::size_t> unattached_s0;
  std::vector<std::size_t> unattached_s1;
  // sign tau = -(-1)^(i + slot.face) for every attachment on end i.
  bool sign_conditions_hold = false;
};

/**
 * Partition the slots of s_tilde against the two ends.  Precondition checked
 * first: the oriented boundary of s_tilde equals oriented(s1) - oriented(s0)
 * (BoundaryMismatchError with residue otherwise).  Ties are broken in
 * (cell, face)-lexicographic order.
 */
CobordismData extract_cobordism(const Chain& s_tilde, const Chain& s0, const Chain& s1);

/**
 * The glued cobordism: filling cells plus one prism collar per end cell.
 * Collar prisms are the staircase cells
 *     T_m = (g_0..g_m, g'_m..g'_k),  sign (-1)^m,
 * whose vertex maps collapse the primed copies back onto the originals (so
 * collar cells carry degenerate tuples and vanish orientedly).  End 1
 * attaches prism bottoms to c1 slots, end 0 attaches prism tops to c0
 * slots; the free opposite faces realize the two ends with signs +1 and -1.
 * Side faces of neighboring prisms are identified when the end pairing
 * aligns them with the identity permutation, and stay boundary slots
 * otherwise (they cancel orientedly either way).
 */
struct CobordismComplex {
  GluedComplex complex;
  bool boundary_matches = false;  // oriented boundary chain == oriented(s1) - oriented(s0)
  bool closed_boundary = false;   // both ends are oriented cycles
  std::size_t collar0_cells = 0;
  std::size_t collar1_cells = 0;
};

/// M0, M1 must be gluings of the data's end cells (their pairings drive the
/// collar side identifications); GluingMismatchError otherwise.
CobordismComplex build_cobordism(const CobordismData& data, const GluedComplex& M0,
                                 const GluedComplex& M1);

}  // namespace orichain
