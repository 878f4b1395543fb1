// Python module exposing the main operations: boundaries and the oriented
// quotient, Smith normal form, homology, the contraction homotopy check,
// cycle gluing, cobordism assembly, and the smoothing evaluators.
//
// Chains cross the boundary as lists of ([vertices], coefficient) pairs;
// complexes as lists of maximal simplices.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orichain/chains.hpp"
#include "orichain/gluing.hpp"
#include "orichain/homology.hpp"
#include "orichain/prism_homotopy.hpp"
#include "orichain/smoothing.hpp"
#include "orichain/snf.hpp"

namespace py = pybind11;
using namespace orichain;

namespace {

using PyChain = std::vector<std::pair<std::vector<VertexId>, Coef>>;

Chain chain_from_py(const PyChain& terms) {
  Chain c;
  for (const auto& [vs, coef] : terms) c.add(Tuple{vs}, coef);
  return c;
}

PyChain chain_to_py(const Chain& c) {
  PyChain out;
  for (const auto& [t, coef] : c.terms()) out.emplace_back(t.v, coef);
  return out;
}

ChainModel model_from_name(const std::string& name) {
  if (name == "oriented") return ChainModel::oriented;
  if (name == "ordered") return ChainModel::ordered;
  throw std::invalid_argument("model must be \"oriented\" or \"ordered\"");
}

py::dict group_to_py(int degree, const HomologyGroup& g) {
  py::dict d;
  d["degree"] = degree;
  d["free_rank"] = g.free_rank;
  d["torsion"] = g.torsion;
  d["group"] = to_string(g);
  return d;
}

py::list groups_to_py(const std::vector<HomologyGroup>& gs) {
  py::list out;
  for (std::size_t m = 0; m < gs.size(); ++m)
    out.append(group_to_py(static_cast<int>(m), gs[m]));
  return out;
}

IntMatrix matrix_from_py(const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  for (const auto& row : rows)
    if (row.size() != c) throw std::invalid_argument("matrix rows must have equal length");
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<std::vector<long long>> matrix_to_py(const IntMatrix& m) {
  std::vector<std::vector<long long>> rows(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

py::dict glue_summary(const PyChain& cycle) {
  Chain s = chain_from_py(cycle);
  GluedComplex G = glue(s, extract_face_pairing(s, PairingMode::strict_cycle));
  py::dict d;
  d["cell_count"] = G.cells.size();
  std::vector<std::size_t> counts;
  for (int dim = 0; dim <= G.top_dim; ++dim) counts.push_back(G.class_count(dim));
  d["class_counts"] = counts;
  d["euler_characteristic"] = G.euler_characteristic;
  d["closed"] = G.closed;
  d["orientation_compatible"] = G.orientation_compatible;
  d["pseudomanifold"] = G.pseudomanifold;
  return d;
}

py::dict cobordism_summary(const PyChain& filling, const PyChain& end0, const PyChain& end1) {
  Chain st = chain_from_py(filling), s0 = chain_from_py(end0), s1 = chain_from_py(end1);
  CobordismData data = extract_cobordism(st, s0, s1);
  GluedComplex M0 = glue(s0, extract_face_pairing(s0, PairingMode::allow_boundary));
  GluedComplex M1 = glue(s1, extract_face_pairing(s1, PairingMode::allow_boundary));
  CobordismComplex W = build_cobordism(data, M0, M1);
  py::dict d;
  d["end_dimension"] = data.k;
  d["filling_cells"] = data.cells.size();
  d["end0_attachments"] = data.c0.size();
  d["end1_attachments"] = data.c1.size();
  d["interior_pairs"] = data.interior.matches.size() / 2;
  d["unattached_end0"] = data.unattached_s0.size();
  d["unattached_end1"] = data.unattached_s1.size();
  d["sign_conditions_hold"] = data.sign_conditions_hold;
  d["boundary_matches"] = W.boundary_matches;
  d["closed_boundary"] = W.closed_boundary;
  d["euler_characteristic"] = W.complex.euler_characteristic;
  return d;
}

bool homotopy_identity(int k, const std::vector<std::vector<int>>& cells,
                       const std::vector<std::vector<int>>& perms,
                       const std::vector<Coef>& coefs) {
  if (cells.size() != perms.size() || cells.size() != coefs.size())
    throw std::invalid_argument("cells, perms and coefs must have equal length");
  std::vector<SPrimeTerm> presentation;
  for (std::size_t i = 0; i < cells.size(); ++i)
    presentation.push_back(
        SPrimeTerm{coefs[i], linear_from_vertices(k, cells[i]), Permutation(perms[i])});
  return verify_homotopy_identity(presentation).holds;
}

}  // namespace

PYBIND11_MODULE(orichain, m) {
  m.doc() = "oriented chain complex toolkit";
  m.attr("__version__") = "0.1.0";

  m.def(
      "boundary",
      [](const PyChain& c) { return chain_to_py(boundary(chain_from_py(c))); },
      py::arg("chain"), "Alternating-sum boundary of a chain of vertex tuples.");
  m.def(
      "project_to_oriented",
      [](const PyChain& c) { return chain_to_py(project_to_oriented(chain_from_py(c))); },
      py::arg("chain"),
      "Quotient by degenerate tuples and odd permutations: sort each tuple, "
      "keep the sign, drop repeats.");
  m.def(
      "is_cycle", [](const PyChain& c) { return is_cycle(chain_from_py(c)); },
      py::arg("chain"), "Whether the oriented boundary vanishes.");

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<long long>>& rows, bool with_transforms) {
        SmithResult r = smith_normal_form(matrix_from_py(rows), with_transforms);
        py::dict d;
        d["S"] = matrix_to_py(r.S);
        d["divisors"] = r.divisors;
        if (r.U) d["U"] = matrix_to_py(*r.U);
        if (r.V) d["V"] = matrix_to_py(*r.V);
        return d;
      },
      py::arg("matrix"), py::arg("with_transforms") = false,
      "Smith normal form over the integers; divisors is the diagonal chain.");

  m.def(
      "homology",
      [](const std::vector<std::vector<VertexId>>& facets, const std::string& model) {
        return groups_to_py(homology_all(SimplicialComplex(facets), model_from_name(model)));
      },
      py::arg("facets"), py::arg("model") = "oriented",
      "Integral homology in degrees 0..dim, from maximal simplices.");
  m.def(
      "relative_homology",
      [](const std::vector<std::vector<VertexId>>& facets,
         const std::vector<std::vector<VertexId>>& subfacets, const std::string& model) {
        return groups_to_py(relative_homology_all(
            SimplicialComplex(facets), SimplicialComplex(subfacets), model_from_name(model)));
      },
      py::arg("facets"), py::arg("subfacets"), py::arg("model") = "oriented");
  m.def(
      "euler_characteristic",
      [](const std::vector<std::vector<VertexId>>& facets) {
        return euler_characteristic_counts(SimplicialComplex(facets));
      },
      py::arg("facets"));
  m.def(
      "verify_mv",
      [](const std::vector<std::vector<VertexId>>& facets,
         const std::vector<std::vector<std::vector<VertexId>>>& pieces) {
        std::vector<SimplicialComplex> cover;
        for (const auto& piece : pieces) cover.emplace_back(piece);
        MvReport r = verify_mv_vanishing(SimplicialComplex(facets), cover);
        py::dict d;
        d["ok"] = r.ok();
        d["hypothesis_holds"] = r.hypothesis_holds;
        d["conclusion_holds"] = r.conclusion_holds;
        return d;
      },
      py::arg("facets"), py::arg("pieces"),
      "Check the inclusion-union vanishing statement for a concrete cover.");

  m.def("glue_summary", &glue_summary, py::arg("cycle"),
        "Glue a cycle along matched faces and summarize the quotient.");
  m.def(
      "check_identity",
      [](const PyChain& cycle, const std::vector<std::vector<VertexId>>& facets) {
        Chain s = chain_from_py(cycle);
        SimplicialComplex K = facets.empty() ? [&] {
          std::vector<std::vector<VertexId>> fs;
          for (const auto& [t, coef] : s.terms()) {
            (void)coef;
            fs.push_back(sorted_with_sign(t).first.v);
          }
          return SimplicialComplex(fs);
        }() : SimplicialComplex(facets);
        return check_glued_class_identity(s, K);
      },
      py::arg("cycle"), py::arg("facets") = std::vector<std::vector<VertexId>>{},
      "Glue a cycle and verify its fundamental class maps back to the input "
      "class in the ambient complex (the cycle's own support by default).");
  m.def("cobordism_summary", &cobordism_summary, py::arg("filling"), py::arg("end0"),
        py::arg("end1"),
        "Partition a filling chain against its two ends, attach collars, and "
        "summarize the result.");

  m.def(
      "bump_value",
      [](int p, int q, const FloatPoint& x) { return bump_value(BumpProfile{}, p, q, x); },
      py::arg("p"), py::arg("q"), py::arg("x"),
      "Pair bump: 1 on the inner pair neighborhood, 0 outside the outer one.");
  m.def(
      "codim2_collapse",
      [](const FloatPoint& x) { return codim2_collapse_eval(BumpProfile{}, x); },
      py::arg("x"), "Collapse toward the codimension-2 skeleton.");
  m.def(
      "face_collapse",
      [](const FloatPoint& x, int p) { return face_collapse_eval(BumpProfile{}, x, p); },
      py::arg("x"), py::arg("p"),
      "Face-collapse self-map of the simplex, built through face p (the "
      "result is independent of p).");
  m.def("homotopy_identity", &homotopy_identity, py::arg("k"), py::arg("cells"),
        py::arg("perms"), py::arg("coefs"),
        "Exact check of the contraction identity on an antisymmetrizer "
        "presentation: cells are vertex tuples in the k-simplex, perms act on "
        "positions.");
}
