#include "orichain/gluing.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <set>

#include "orichain/homology.hpp"
#include "orichain/snf.hpp"

namespace orichain {

namespace {

int pow_sign(int p) { return p % 2 == 0 ? 1 : -1; }

/// Rank permutation of a nondegenerate tuple: t[i] = sorted(t)[rank(i)].
/// Its sign is the sorting sign of t.
Permutation rank_perm(const Tuple& t) {
  const int n = static_cast<int>(t.v.size());
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return t.v[static_cast<std::size_t>(a)] < t.v[static_cast<std::size_t>(b)];
  });
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] = r;
  return Permutation(rank);
}

Tuple slot_face(const std::vector<Cell>& cells, const FaceSlot& s) {
  return cells[s.cell].map.face(s.face);
}

/// Aligning permutation tau with b[i] = a[tau(i)]; both tuples must be
/// nondegenerate with equal support.
Permutation aligning_perm(const Tuple& a, const Tuple& b) {
  return rank_perm(a).inverse().compose(rank_perm(b));
}

/// Record the matched pair x ~ y with the stored convention
/// face(y) = face(x) o tau_x; throws when either slot is already matched.
void add_pair_with(FacePairing& P, const FaceSlot& x, const FaceSlot& y, const Permutation& tx) {
  if (!P.matches.emplace(x, std::make_pair(y, tx)).second ||
      !P.matches.emplace(y, std::make_pair(x, tx.inverse())).second)
    throw GluingMismatchError("face slot matched twice");
}

void add_pair(FacePairing& P, const std::vector<Cell>& cells, const FaceSlot& x,
              const FaceSlot& y) {
  add_pair_with(P, x, y, aligning_perm(slot_face(cells, x), slot_face(cells, y)));
}

void validate_pairing(const std::vector<Cell>& cells, int top_dim, const FacePairing& P) {
  for (const Cell& c : cells) {
    if (c.map.grade() != top_dim) throw GluingMismatchError("cell dimension mismatch");
    if (c.sign != 1 && c.sign != -1) throw GluingMismatchError("cell signs must be +-1");
  }
  for (const auto& [x, py] : P.matches) {
    const auto& [y, tau] = py;
    if (x.cell >= cells.size() || y.cell >= cells.size() || x.face < 0 || x.face > top_dim ||
        y.face < 0 || y.face > top_dim)
      throw GluingMismatchError("pairing references a slot outside the complex");
    if (x == y) throw GluingMismatchError("pairing has a fixed point");
    auto it = P.matches.find(y);
    if (it == P.matches.end() || it->second.first != x)
      throw GluingMismatchError("pairing is not an involution");
    if (tau.size() != top_dim || it->second.second != tau.inverse())
      throw GluingMismatchError("pairing permutations are not mutually inverse");
    if (slot_face(cells, y) != permute_positions(slot_face(cells, x), tau))
      throw GluingMismatchError("pairing does not align the face tuples");
  }
}

std::size_t uf_find(std::vector<std::size_t>& parent, std::size_t a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

/// Quotient assembly shared by glue and build_cobordism: cells plus a
/// validated pairing determine everything else combinatorially.
GluedComplex assemble(int top_dim, std::vector<Cell> cells, FacePairing pairing) {
  validate_pairing(cells, top_dim, pairing);
  GluedComplex G;
  G.top_dim = top_dim;
  G.cells = std::move(cells);
  G.identifications = std::move(pairing);

  const std::size_t n = G.cells.size();
  for (std::size_t j = 0; j < n; ++j)
    for (int p = 0; p <= top_dim; ++p)
      if (!G.identifications.is_matched(FaceSlot{j, p})) G.boundary_slots.push_back(FaceSlot{j, p});
  G.closed = G.boundary_slots.empty();

  // Union-find over (cell, nonempty vertex-position subset); each matched
  // pair identifies every sub-face of the shared face through its position
  // bijection.  With face(y) = face(x) o tau, face position i of y sits at
  // cell position ins_{y.face}(i) and corresponds to cell position
  // ins_{x.face}(tau(i)) of x.
  const std::size_t masks = std::size_t{1} << (top_dim + 1);
  std::vector<std::size_t> parent(n * masks);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](std::size_t a, std::size_t b) {
    a = uf_find(parent, a);
    b = uf_find(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  auto ins = [](int drop, int i) { return i < drop ? i : i + 1; };
  for (const auto& [x, py] : G.identifications.matches) {
    const auto& [y, tau] = py;
    for (std::size_t T = 1; T < (std::size_t{1} << top_dim); ++T) {
      std::size_t sx = 0, sy = 0;
      for (int i = 0; i < top_dim; ++i) {
        if (!(T >> i & 1)) continue;
        sy |= std::size_t{1} << ins(y.face, i);
        sx |= std::size_t{1} << ins(x.face, tau(i));
      }
      unite(y.cell * masks + sy, x.cell * masks + sx);
    }
  }

  G.quotient_cells.assign(static_cast<std::size_t>(top_dim) + 1, {});
  std::map<std::size_t, std::pair<int, std::size_t>> class_of_root;  // root -> (dim, index)
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t mask = 1; mask < masks; ++mask) {
      const int d = std::popcount(mask) - 1;
      auto& level = G.quotient_cells[static_cast<std::size_t>(d)];
      const std::size_t root = uf_find(parent, j * masks + mask);
      auto [it, fresh] = class_of_root.emplace(root, std::make_pair(d, level.size()));
      if (fresh) level.emplace_back();
      std::vector<int> positions;
      for (int i = 0; i <= top_dim; ++i)
        if (mask >> i & 1) positions.push_back(i);
      level[it->second.second].emplace_back(j, std::move(positions));
    }
  }

  long long chi = 0;
  for (int d = 0; d <= top_dim; ++d)
    chi += pow_sign(d) * static_cast<long long>(G.quotient_cells[static_cast<std::size_t>(d)].size());
  G.euler_characteristic = chi;

  // Generalized sign condition, uniform over degenerate and nondegenerate
  // shared faces: sign(tau) * sign(cell_x) * sign(cell_y) = -(-1)^(p_x+p_y).
  // For nondegenerate faces this is exactly "induced oriented face signs are
  // opposite".
  bool oriented = true;
  for (const auto& [x, py] : G.identifications.matches) {
    const auto& [y, tau] = py;
    const long long lhs = tau.sign() * G.cells[x.cell].sign * G.cells[y.cell].sign;
    if (lhs != -pow_sign(x.face + y.face)) {
      oriented = false;
      break;
    }
  }
  G.orientation_compatible = oriented;

  bool pseudo = !G.cells.empty() && top_dim >= 1;
  if (pseudo)
    for (const auto& cls : G.quotient_cells[static_cast<std::size_t>(top_dim - 1)])
      if (cls.size() != 2) pseudo = false;
  G.pseudomanifold = pseudo;
  return G;
}

}  // namespace

std::vector<Cell> expand_cycle_cells(const Chain& s) {
  std::vector<Cell> cells;
  if (s.zero()) return cells;
  if (s.grade() < 1)
    throw std::invalid_argument("cells of a gluing must have dimension at least 1");
  for (const auto& [t, a] : s.terms()) {
    if (t.degenerate()) {
      Chain residue;
      residue.add(t, a);
      throw NotACycleError("chain contains a degenerate tuple, which cannot serve as a cell",
                           residue);
    }
    Tuple flipped = t;
    std::swap(flipped.v[0], flipped.v[1]);
    const Coef copies = a > 0 ? a : -a;
    for (Coef i = 0; i < copies; ++i) cells.push_back(Cell{a > 0 ? t : flipped, 1});
  }
  return cells;
}

FacePairing extract_face_pairing(const Chain& s, PairingMode mode) {
  const std::vector<Cell> cells = expand_cycle_cells(s);
  const int k = cells.empty() ? 0 : s.grade();
  FacePairing P;

  // Slots grouped by sorted face tuple and split by induced oriented sign
  // (-1)^p * sortsign(face); generation order is already lexicographic.
  std::map<Tuple, std::pair<std::vector<FaceSlot>, std::vector<FaceSlot>>> groups;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    for (int p = 0; p <= k; ++p) {
      const auto [sorted, sgn] = sorted_with_sign(cells[j].map.face(p));
      auto& g = groups[sorted];
      (pow_sign(p) * sgn > 0 ? g.first : g.second).push_back(FaceSlot{j, p});
    }
  }

  Chain residue;
  for (const auto& [cls, g] : groups) {
    const std::size_t matched = std::min(g.first.size(), g.second.size());
    for (std::size_t i = 0; i < matched; ++i) add_pair(P, cells, g.first[i], g.second[i]);
    const long long extra =
        static_cast<long long>(g.first.size()) - static_cast<long long>(g.second.size());
    if (extra != 0) {
      residue.add(cls, extra);
      const auto& rest = extra > 0 ? g.first : g.second;
      for (std::size_t i = matched; i < rest.size(); ++i) P.unmatched.push_back(rest[i]);
    }
  }
  std::sort(P.unmatched.begin(), P.unmatched.end());
  if (mode == PairingMode::strict_cycle && !residue.zero())
    throw NotACycleError("chain is not a cycle: its oriented boundary is nonzero", residue);
  return P;
}

std::size_t GluedComplex::class_count(int dim) const {
  if (dim < 0 || dim > top_dim) return 0;
  return quotient_cells[static_cast<std::size_t>(dim)].size();
}

const std::vector<std::vector<GluedComplex::SubFace>>& GluedComplex::codim2_skeleton() const {
  static const std::vector<std::vector<SubFace>> none;
  if (top_dim < 2) return none;
  return quotient_cells[static_cast<std::size_t>(top_dim - 2)];
}

GluedComplex glue(const Chain& s, const FacePairing& pairing) {
  std::vector<Cell> cells = expand_cycle_cells(s);
  const int k = cells.empty() ? 0 : s.grade();
  return assemble(k, std::move(cells), pairing);
}

Chain fundamental_cycle(const GluedComplex& G) {
  if (!G.closed || !G.orientation_compatible)
    throw GluingMismatchError(
        "fundamental cycle requires a closed, orientation-compatible gluing");
  Chain c;
  for (const Cell& cell : G.cells) c.add(cell.map, cell.sign);
  return c;
}

Chain oriented_boundary_chain(const GluedComplex& G) {
  Chain c;
  for (const FaceSlot& s : G.boundary_slots)
    c.add(slot_face(G.cells, s), G.cells[s.cell].sign * pow_sign(s.face));
  return project_to_oriented(c);
}

bool is_oriented_boundary(const SimplicialComplex& K, const Chain& c) {
  if (c.zero()) return true;
  if (!chain_is_oriented(c))
    throw std::invalid_argument("boundary decision expects an oriented chain");
  if (!K.supports_chain(c)) throw SubcomplexError("chain is not supported on the complex");
  const int k = c.grade();

  const std::vector<Tuple>& rows = K.simplices(k);
  std::vector<long long> b(rows.size(), 0);
  for (const auto& [t, a] : c.terms()) b[K.simplex_index(k, t)] = a;

  // Solve A x = b exactly over the integers: with S = U A V, the system is
  // solvable iff (U b)_i is divisible by the i-th divisor on the pivot rows
  // and zero on the rest.
  const IntMatrix A = boundary_matrix(K, k + 1, ChainModel::oriented);
  const SmithResult r = smith_normal_form(A, true);
  const IntMatrix& U = *r.U;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    BigInt ub = 0;
    for (std::size_t j = 0; j < A.rows(); ++j)
      ub += BigInt(U.at(i, j)) * b[j];
    if (i < r.divisors.size()) {
      if (ub % r.divisors[i] != 0) return false;
    } else if (ub != 0) {
      return false;
    }
  }
  return true;
}

bool check_glued_class_identity(const Chain& s, const SimplicialComplex& K) {
  if (s.zero()) return true;
  if (!K.supports_chain(s)) throw SubcomplexError("cycle is not supported on the complex");
  const FacePairing pairing = extract_face_pairing(s);
  const GluedComplex G = glue(s, pairing);
  const Chain diff = project_to_oriented(fundamental_cycle(G)) - project_to_oriented(s);
  return is_oriented_boundary(K, diff);
}

CobordismData extract_cobordism(const Chain& s_tilde, const Chain& s0, const Chain& s1) {
  const Chain lhs = project_to_oriented(boundary(s_tilde));
  const Chain rhs = project_to_oriented(s1) - project_to_oriented(s0);
  if (lhs != rhs)
    throw BoundaryMismatchError(
        "oriented boundary of the filling chain does not equal the difference of the ends",
        lhs - rhs);

  const int g0 = s0.zero() ? -1 : s0.grade();
  const int g1 = s1.zero() ? -1 : s1.grade();
  const int gt = s_tilde.zero() ? -1 : s_tilde.grade();
  const int ge = std::max(g0, g1);
  if (ge >= 0 && ge < 1)
    throw std::invalid_argument("end cycles must have dimension at least 1");
  if (ge < 0 && gt >= 0 && gt < 2)
    throw std::invalid_argument("a filling chain with empty ends must have dimension at least 2");

  CobordismData D;
  D.k = ge >= 0 ? ge : (gt >= 0 ? gt - 1 : 1);
  D.cells = expand_cycle_cells(s_tilde);
  D.s0_cells = expand_cycle_cells(s0);
  D.s1_cells = expand_cycle_cells(s1);

  struct SlotGroup {
    std::vector<FaceSlot> pos, neg;
  };
  struct EndGroup {
    std::vector<std::size_t> pos, neg;
  };
  std::map<Tuple, SlotGroup> slots;
  std::map<Tuple, EndGroup> end0, end1;
  std::set<Tuple> keys;

  for (std::size_t j = 0; j < D.cells.size(); ++j) {
    for (int p = 0; p <= D.k + 1; ++p) {
      const auto [sorted, sgn] = sorted_with_sign(D.cells[j].map.face(p));
      auto& g = slots[sorted];
      (pow_sign(p) * sgn > 0 ? g.pos : g.neg).push_back(FaceSlot{j, p});
      keys.insert(sorted);
    }
  }
  auto group_end = [&keys](const std::vector<Cell>& cells, std::map<Tuple, EndGroup>& out) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto [sorted, sgn] = sorted_with_sign(cells[i].map);
      (sgn > 0 ? out[sorted].pos : out[sorted].neg).push_back(i);
      keys.insert(sorted);
    }
  };
  group_end(D.s0_cells, end0);
  group_end(D.s1_cells, end1);

  std::vector<char> attached0(D.s0_cells.size(), 0), attached1(D.s1_cells.size(), 0);
  for (const Tuple& cls : keys) {
    SlotGroup sg = slots.count(cls) ? slots[cls] : SlotGroup{};
    // Within each end, oppositely oriented copies of the same class cancel
    // in the oriented chain and receive no attachment.
    auto survivors = [](std::map<Tuple, EndGroup>& m, const Tuple& c) {
      std::vector<std::size_t> surv;
      int sig = 0;
      if (!m.count(c)) return std::make_pair(surv, sig);
      EndGroup& g = m[c];
      const std::size_t cancel = std::min(g.pos.size(), g.neg.size());
      const auto& longer = g.pos.size() >= g.neg.size() ? g.pos : g.neg;
      sig = g.pos.size() >= g.neg.size() ? 1 : -1;
      surv.assign(longer.begin() + static_cast<std::ptrdiff_t>(cancel), longer.end());
      if (surv.empty()) sig = 0;
      return std::make_pair(surv, sig);
    };
    auto [surv0, sig0] = survivors(end0, cls);
    auto [surv1, sig1] = survivors(end1, cls);
    // Classes appearing in both ends with the same sign cancel between them.
    if (sig0 != 0 && sig0 == sig1) {
      const std::size_t cancel = std::min(surv0.size(), surv1.size());
      surv0.erase(surv0.begin(), surv0.begin() + static_cast<std::ptrdiff_t>(cancel));
      surv1.erase(surv1.begin(), surv1.begin() + static_cast<std::ptrdiff_t>(cancel));
    }

    std::size_t next_pos = 0, next_neg = 0;
    auto take = [&](int want) -> FaceSlot {
      if (want > 0) {
        assert(next_pos < sg.pos.size());
        return sg.pos[next_pos++];
      }
      assert(next_neg < sg.neg.size());
      return sg.neg[next_neg++];
    };
    for (const std::size_t idx : surv1) {
      const FaceSlot slot = take(sig1);  // slot sign matches the end-1 cell sign
      const Tuple u = slot_face(D.cells, slot);
      D.c1.push_back(BoundaryAttachment{idx, slot, aligning_perm(D.s1_cells[idx].map, u)});
      attached1[idx] = 1;
    }
    for (const std::size_t idx : surv0) {
      const FaceSlot slot = take(-sig0);  // slot sign opposes the end-0 cell sign
      const Tuple u = slot_face(D.cells, slot);
      D.c0.push_back(BoundaryAttachment{idx, slot, aligning_perm(D.s0_cells[idx].map, u)});
      attached0[idx] = 1;
    }
    assert(sg.pos.size() - next_pos == sg.neg.size() - next_neg);
    for (std::size_t i = next_pos, j = next_neg; i < sg.pos.size(); ++i, ++j)
      add_pair(D.interior, D.cells, sg.pos[i], sg.neg[j]);
  }

  for (std::size_t i = 0; i < attached0.size(); ++i)
    if (!attached0[i]) D.unattached_s0.push_back(i);
  for (std::size_t i = 0; i < attached1.size(); ++i)
    if (!attached1[i]) D.unattached_s1.push_back(i);
  assert(D.interior.matches.size() + D.c0.size() + D.c1.size() ==
         D.cells.size() * (static_cast<std::size_t>(D.k) + 2));

  bool signs_ok = true;
  for (const BoundaryAttachment& a : D.c1)
    if (a.tau.sign() != pow_sign(a.slot.face)) signs_ok = false;
  for (const BoundaryAttachment& a : D.c0)
    if (a.tau.sign() != -pow_sign(a.slot.face)) signs_ok = false;
  D.sign_conditions_hold = signs_ok;
  return D;
}

CobordismComplex build_cobordism(const CobordismData& data, const GluedComplex& M0,
                                 const GluedComplex& M1) {
  const int k = data.k;
  auto check_end = [k](const GluedComplex& M, const std::vector<Cell>& end_cells) {
    if (M.cells.size() != end_cells.size())
      throw GluingMismatchError("end gluing does not match the cobordism data");
    if (!end_cells.empty() && M.top_dim != k)
      throw GluingMismatchError("end gluing has the wrong dimension");
    for (std::size_t i = 0; i < end_cells.size(); ++i)
      if (M.cells[i].map != end_cells[i].map || M.cells[i].sign != end_cells[i].sign)
        throw GluingMismatchError("end gluing does not match the cobordism data");
  };
  check_end(M0, data.s0_cells);
  check_end(M1, data.s1_cells);

  std::vector<Cell> cells = data.cells;
  FacePairing P = data.interior;

  // One prism collar per end cell g: staircase cells
  //   T_m = (g_0..g_m, g'_m..g'_k),  sign (-1)^m,
  // whose vertex maps send both copies of g_i to g_i, so every collar cell
  // tuple is degenerate.  Consecutive staircase cells share the face that
  // drops the level-change vertex.
  auto add_collar = [&cells, &P, k](const std::vector<Cell>& end_cells) {
    std::vector<std::size_t> base(end_cells.size());
    for (std::size_t j = 0; j < end_cells.size(); ++j) {
      base[j] = cells.size();
      const Tuple& g = end_cells[j].map;
      for (int m = 0; m <= k; ++m) {
        Tuple T;
        T.v.reserve(static_cast<std::size_t>(k) + 2);
        for (int i = 0; i <= m; ++i) T.v.push_back(g.v[static_cast<std::size_t>(i)]);
        for (int i = m; i <= k; ++i) T.v.push_back(g.v[static_cast<std::size_t>(i)]);
        cells.push_back(Cell{T, pow_sign(m)});
      }
      for (int m = 1; m <= k; ++m)
        add_pair_with(P, FaceSlot{base[j] + static_cast<std::size_t>(m) - 1, m},
                      FaceSlot{base[j] + static_cast<std::size_t>(m), m},
                      Permutation::identity(k + 1));
    }
    return base;
  };
  const std::vector<std::size_t> base1 = add_collar(data.s1_cells);
  const std::vector<std::size_t> base0 = add_collar(data.s0_cells);

  // End 1 collars attach their bottom (face k+1 of the last staircase cell),
  // end 0 collars their top (face 0 of the first); the opposite faces stay
  // free and realize the ends with signs +1 and -1.
  for (const BoundaryAttachment& a : data.c1)
    add_pair_with(P, a.slot,
                  FaceSlot{base1[a.boundary_cell] + static_cast<std::size_t>(k), k + 1},
                  a.tau.inverse());
  for (const BoundaryAttachment& a : data.c0)
    add_pair_with(P, a.slot, FaceSlot{base0[a.boundary_cell], 0}, a.tau.inverse());

  // Side faces of prisms over cells matched in the end gluing: when the
  // aligning permutation is the identity the two staircases agree level by
  // level and are identified; otherwise the triangulations are incompatible
  // and the (degenerate, orientedly invisible) faces stay free.
  auto add_sides = [&P, k](const GluedComplex& M, const std::vector<std::size_t>& base) {
    for (const auto& [x, py] : M.identifications.matches) {
      const auto& [y, tau] = py;
      if (!(x < y) || !tau.is_identity()) continue;
      for (int l = 0; l < k; ++l) {
        auto side = [&base, l](const FaceSlot& s) {
          return s.face <= l
                     ? FaceSlot{base[s.cell] + static_cast<std::size_t>(l) + 1, s.face}
                     : FaceSlot{base[s.cell] + static_cast<std::size_t>(l), s.face + 1};
        };
        add_pair_with(P, side(x), side(y), Permutation::identity(k + 1));
      }
    }
  };
  add_sides(M1, base1);
  add_sides(M0, base0);

  CobordismComplex R;
  R.collar1_cells = data.s1_cells.size() * (static_cast<std::size_t>(k) + 1);
  R.collar0_cells = data.s0_cells.size() * (static_cast<std::size_t>(k) + 1);
  R.complex = assemble(k + 1, std::move(cells), std::move(P));

  Chain end1_chain, end0_chain;
  for (const Cell& c : data.s1_cells) end1_chain.add(c.map, c.sign);
  for (const Cell& c : data.s0_cells) end0_chain.add(c.map, c.sign);
  const Chain s1bar = project_to_oriented(end1_chain);
  const Chain s0bar = project_to_oriented(end0_chain);
  R.boundary_matches = oriented_boundary_chain(R.complex) == s1bar - s0bar;
  R.closed_boundary = is_cycle(s1bar) && is_cycle(s0bar);
  return R;
}

}  // namespace orichain
