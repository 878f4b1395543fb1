#include "orichain/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "orichain/errors.hpp"

namespace orichain {

std::string to_string(const HomologyGroup& g) {
  if (g.is_zero()) return "0";
  std::string s;
  if (g.free_rank == 1) s = "Z";
  else if (g.free_rank > 1) s = "Z^" + std::to_string(g.free_rank);
  for (long long d : g.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(d);
  }
  return s;
}

namespace {

// Generator lists for one degree of the chosen model, with optional deletion
// of generators supported on a subcomplex.
std::vector<Tuple> generators(const SimplicialComplex& K, const SimplicialComplex* A, int m,
                              ChainModel model) {
  std::vector<Tuple> gens;
  if (m < 0) return gens;
  if (model == ChainModel::oriented) {
    gens = K.simplices(m);
  } else {
    if (m > K.dim() + 1)
      throw std::invalid_argument(
          "ordered model generators are truncated above dim+1; requested degree " +
          std::to_string(m));
    gens = K.ordered_generators(m);
  }
  if (A != nullptr) {
    std::vector<Tuple> kept;
    kept.reserve(gens.size());
    for (auto& t : gens)
      if (!A->contains(Tuple(t.support()))) kept.push_back(std::move(t));
    gens = std::move(kept);
  }
  return gens;
}

IntMatrix boundary_matrix_of(const SimplicialComplex& K, const SimplicialComplex* A, int m,
                             ChainModel model) {
  const auto cols = generators(K, A, m, model);
  const auto rows = generators(K, A, m - 1, model);
  std::map<Tuple, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
  IntMatrix M(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Tuple& t = cols[j];
    for (int p = 0; p <= t.grade(); ++p) {
      const Tuple f = t.face(p);
      auto it = row_index.find(f);
      // Faces supported on the deleted subcomplex vanish in the quotient.
      if (it == row_index.end()) continue;
      M.at(it->second, j) = checked_add(M.at(it->second, j), p % 2 == 0 ? 1 : -1);
    }
  }
  return M;
}

HomologyGroup homology_of(const SimplicialComplex& K, const SimplicialComplex* A, int m,
                          ChainModel model) {
  HomologyGroup g;
  if (m < 0) return g;
  if (model == ChainModel::oriented && m > K.dim()) return g;
  if (model == ChainModel::ordered && m > K.dim()) {
    // The ordered model is truncated above dim+1; the trailing degree would
    // need generators past the truncation to be meaningful.
    throw std::invalid_argument("ordered-model homology is supported for degrees <= dim");
  }
  const auto gens_m = generators(K, A, m, model);
  const long long n_m = static_cast<long long>(gens_m.size());
  if (n_m == 0) return g;
  const auto d_m = boundary_matrix_of(K, A, m, model);
  const auto d_next = boundary_matrix_of(K, A, m + 1, model);
  const auto snf_m = smith_normal_form(d_m);
  const auto snf_next = smith_normal_form(d_next);
  const long long r_m = static_cast<long long>(snf_m.divisors.size());
  const long long r_next = static_cast<long long>(snf_next.divisors.size());
  g.free_rank = n_m - r_m - r_next;
  for (long long d : snf_next.divisors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

void require_subcomplex(const SimplicialComplex& K, const SimplicialComplex& A,
                        const char* what) {
  if (!A.is_subcomplex_of(K)) throw SubcomplexError(what);
}

}  // namespace

IntMatrix boundary_matrix(const SimplicialComplex& K, int m, ChainModel model) {
  return boundary_matrix_of(K, nullptr, m, model);
}

IntMatrix relative_boundary_matrix(const SimplicialComplex& K, const SimplicialComplex& A,
                                   int m, ChainModel model) {
  require_subcomplex(K, A, "relative boundary matrix needs a subcomplex");
  return boundary_matrix_of(K, &A, m, model);
}

HomologyGroup homology(const SimplicialComplex& K, int m, ChainModel model) {
  return homology_of(K, nullptr, m, model);
}

std::vector<HomologyGroup> homology_all(const SimplicialComplex& K, ChainModel model) {
  std::vector<HomologyGroup> out;
  for (int m = 0; m <= K.dim(); ++m) out.push_back(homology_of(K, nullptr, m, model));
  return out;
}

HomologyGroup relative_homology(const SimplicialComplex& K, const SimplicialComplex& A, int m,
                                ChainModel model) {
  require_subcomplex(K, A, "relative homology needs a subcomplex");
  return homology_of(K, &A, m, model);
}

std::vector<HomologyGroup> relative_homology_all(const SimplicialComplex& K,
                                                 const SimplicialComplex& A, ChainModel model) {
  require_subcomplex(K, A, "relative homology needs a subcomplex");
  std::vector<HomologyGroup> out;
  for (int m = 0; m <= K.dim(); ++m) out.push_back(homology_of(K, &A, m, model));
  return out;
}

long long euler_characteristic_counts(const SimplicialComplex& K) {
  long long chi = 0;
  for (int m = 0; m <= K.dim(); ++m) {
    const long long n = static_cast<long long>(K.simplex_count(m));
    chi += (m % 2 == 0) ? n : -n;
  }
  return chi;
}

long long euler_characteristic_ranks(const SimplicialComplex& K) {
  long long chi = 0;
  for (int m = 0; m <= K.dim(); ++m) {
    const long long r = homology(K, m).free_rank;
    chi += (m % 2 == 0) ? r : -r;
  }
  return chi;
}

MvReport verify_mv_vanishing(const SimplicialComplex& K,
                             const std::vector<SimplicialComplex>& cover) {
  if (cover.empty()) throw SubcomplexError("cover is empty");
  for (const auto& piece : cover)
    if (!piece.is_subcomplex_of(K)) throw SubcomplexError("cover piece is not a subcomplex");
  for (int m = 0; m <= K.dim(); ++m)
    for (const auto& s : K.simplices(m)) {
      bool found = false;
      for (const auto& piece : cover)
        if (piece.contains(s)) { found = true; break; }
      if (!found) throw SubcomplexError("cover does not union to the whole complex");
    }

  MvReport report;
  report.hypothesis_holds = true;
  const int n = static_cast<int>(cover.size());
  for (std::size_t mask = 1; mask < (std::size_t{1} << n) && report.hypothesis_holds; ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    SimplicialComplex inter = cover[static_cast<std::size_t>(subset[0])];
    for (std::size_t i = 1; i < subset.size(); ++i)
      inter = intersect(inter, cover[static_cast<std::size_t>(subset[i])]);
    for (int l = 1; l <= inter.dim(); ++l) {
      if (!homology(inter, l).is_zero()) {
        report.hypothesis_holds = false;
        report.hypothesis_counterexample_degree = l;
        report.hypothesis_counterexample_subset = subset;
        break;
      }
    }
  }

  report.conclusion_holds = true;
  const int k = n - 1;
  for (int l = k + 1; l <= K.dim(); ++l) {
    if (!homology(K, l).is_zero()) {
      report.conclusion_holds = false;
      report.conclusion_counterexample_degree = l;
      break;
    }
  }
  return report;
}

}  // namespace orichain
