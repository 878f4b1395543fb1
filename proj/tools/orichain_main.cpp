// orichain: command line front end for the oriented chain complex toolkit.
//
// Subcommands: homology, glue, cobordism, smoothing, verify.  Input is a
// JSON problem file (path or "-" for stdin); reports are canonical JSON on
// stdout (sorted keys, fixed number formatting), byte-identical across runs.
//
// Exit codes:
//   0 success
//   1 verification failure (or unexpected internal error)
//   2 schema violation / malformed input / usage error
//   3 claimed subcomplex or cover is not one
//   4 chain is not a cycle (oriented residue reported)
//   5 filling boundary does not match the ends (oriented residue reported)
//   6 dimension exceeds the configured bound (ORICHAIN_MAX_DIM, default 6)

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orichain/chains.hpp"
#include "orichain/corpus.hpp"
#include "orichain/errors.hpp"
#include "orichain/gluing.hpp"
#include "orichain/homology.hpp"
#include "orichain/io.hpp"
#include "orichain/prism_homotopy.hpp"
#include "orichain/smoothing.hpp"

using nlohmann::json;
using namespace orichain;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int max_dim_from_env() {
  const char* raw = std::getenv("ORICHAIN_MAX_DIM");
  if (raw == nullptr || *raw == '\0') return 6;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1 || v > 64)
    throw SchemaError("ORICHAIN_MAX_DIM must be a positive integer");
  return static_cast<int>(v);
}

void check_dim_cap(int dim, const char* what) {
  int cap = max_dim_from_env();
  if (dim > cap)
    throw DimensionLimitError(std::string(what) + " dimension " + std::to_string(dim) +
                              " exceeds the configured bound " + std::to_string(cap));
}

void emit(const json& j) { std::cout << io::canonical_dump(j); }

json group_json(int degree, const HomologyGroup& g) {
  json torsion = json::array();
  for (long long t : g.torsion) torsion.push_back(t);
  json row;
  row["degree"] = degree;
  row["free_rank"] = g.free_rank;
  row["group"] = to_string(g);
  row["torsion"] = torsion;
  return row;
}

json groups_json(const std::vector<HomologyGroup>& gs) {
  json rows = json::array();
  for (std::size_t m = 0; m < gs.size(); ++m)
    rows.push_back(group_json(static_cast<int>(m), gs[m]));
  return rows;
}

io::ProblemKind expect_kind(const io::ProblemFile& p, io::ProblemKind want) {
  if (p.kind != want)
    throw SchemaError("this command needs a problem file of kind \"" +
                      io::to_string(want) + "\", got \"" + io::to_string(p.kind) + "\"");
  return p.kind;
}

// ---------------------------------------------------------------- homology

int run_homology(const std::string& file, const std::string& model_name,
                 const std::string& subcomplex_file) {
  io::ProblemFile p = io::parse_problem(read_input(file));
  expect_kind(p, io::ProblemKind::complex);
  const SimplicialComplex& K = *p.space;
  check_dim_cap(K.dim(), "complex");
  ChainModel model = model_name == "ordered" ? ChainModel::ordered : ChainModel::oriented;

  json report;
  report["command"] = "homology";
  report["model"] = model_name;
  report["dimension"] = K.dim();
  report["euler_characteristic"] = euler_characteristic_counts(K);
  report["groups"] = groups_json(homology_all(K, model));

  if (!subcomplex_file.empty()) {
    io::ProblemFile ps = io::parse_problem(read_input(subcomplex_file));
    expect_kind(ps, io::ProblemKind::complex);
    // Re-express the subcomplex over the ambient file's labels.
    std::vector<std::vector<VertexId>> facet_lists;
    for (const Tuple& t : io::facets(*ps.space)) {
      std::vector<VertexId> vs;
      for (VertexId v : t.v) {
        try {
          vs.push_back(p.labels.id(ps.labels.label(v)));
        } catch (const SchemaError&) {
          throw SubcomplexError(
              "the --subcomplex file uses vertex labels absent from the input complex");
        }
      }
      facet_lists.push_back(vs);
    }
    SimplicialComplex A(facet_lists);
    if (!A.is_subcomplex_of(K))
      throw SubcomplexError("the --subcomplex file is not a subcomplex of the input complex");
    report["relative_groups"] = groups_json(relative_homology_all(K, A, model));
  }

  emit(report);
  return 0;
}

// -------------------------------------------------------------------- glue

json pairing_json(const GluedComplex& G) {
  json rows = json::array();
  for (const auto& [x, py] : G.identifications.matches) {
    const auto& [y, tau] = py;
    if (y < x) continue;  // one row per unordered pair
    json row;
    row["cell"] = x.cell;
    row["face"] = x.face;
    row["partner_cell"] = y.cell;
    row["partner_face"] = y.face;
    json images = json::array();
    for (int i = 0; i < tau.size(); ++i) images.push_back(tau(i));
    row["perm"] = images;
    row["sign"] = tau.sign();
    rows.push_back(row);
  }
  return rows;
}

json class_counts_json(const GluedComplex& G) {
  json counts = json::array();
  for (int d = 0; d <= G.top_dim; ++d) counts.push_back(G.class_count(d));
  return counts;
}

int run_glue(const std::string& file, const std::string& off_path, bool check_identity) {
  io::ProblemFile p = io::parse_problem(read_input(file));
  expect_kind(p, io::ProblemKind::cycle);
  const Chain& s = *p.chain;
  if (!s.zero()) check_dim_cap(s.grade(), "cycle");

  FacePairing pairing = extract_face_pairing(s, PairingMode::strict_cycle);
  GluedComplex G = glue(s, pairing);

  json report;
  report["command"] = "glue";
  report["cell_count"] = G.cells.size();
  report["face_count"] = G.top_dim >= 1 ? G.class_count(G.top_dim - 1) : 0;
  report["vertex_count"] = G.class_count(0);
  report["class_counts"] = class_counts_json(G);
  report["euler_characteristic"] = G.euler_characteristic;
  report["closed"] = G.closed;
  report["pseudomanifold"] = G.pseudomanifold;
  report["orientation_compatible"] = G.orientation_compatible;
  report["pairing"] = pairing_json(G);

  if (check_identity) {
    SimplicialComplex K = p.space ? *p.space : [&] {
      std::vector<std::vector<VertexId>> facet_lists;
      for (const auto& [t, coef] : s.terms()) {
        (void)coef;
        facet_lists.push_back(sorted_with_sign(t).first.v);
      }
      return SimplicialComplex(facet_lists);
    }();
    if (p.space && !K.supports_chain(s))
      throw SubcomplexError("the cycle is not supported on the ambient complex");
    report["identity_check"] = check_glued_class_identity(s, K);
  }

  if (!off_path.empty()) {
    json off;
    if (G.top_dim == 2) {
      std::ofstream out(off_path, std::ios::binary);
      if (!out) throw SchemaError("cannot write OFF file: " + off_path);
      out << io::off_mesh(G, p.labels);
      off["written"] = true;
      off["path"] = off_path;
    } else {
      off["written"] = false;
      off["warning"] = "OFF export skipped: the gluing has dimension " +
                       std::to_string(G.top_dim) + " and OFF carries 2-cells only";
    }
    report["off"] = off;
  }

  emit(report);
  return 0;
}

// --------------------------------------------------------------- cobordism

int run_cobordism(const std::string& file) {
  io::ProblemFile p = io::parse_problem(read_input(file));
  expect_kind(p, io::ProblemKind::cobordism);
  if (!p.filling->zero()) check_dim_cap(p.filling->grade(), "filling");

  CobordismData data = extract_cobordism(*p.filling, *p.end0, *p.end1);
  GluedComplex M0 = glue(*p.end0, extract_face_pairing(*p.end0, PairingMode::allow_boundary));
  GluedComplex M1 = glue(*p.end1, extract_face_pairing(*p.end1, PairingMode::allow_boundary));
  CobordismComplex W = build_cobordism(data, M0, M1);

  json partition;
  partition["end0_attachments"] = data.c0.size();
  partition["end1_attachments"] = data.c1.size();
  partition["interior_pairs"] = data.interior.matches.size() / 2;
  partition["unattached_end0"] = data.unattached_s0.size();
  partition["unattached_end1"] = data.unattached_s1.size();

  json report;
  report["command"] = "cobordism";
  report["end_dimension"] = data.k;
  report["filling_cells"] = data.cells.size();
  report["collar_cells"] = json::array({W.collar0_cells, W.collar1_cells});
  report["partition"] = partition;
  report["sign_conditions_hold"] = data.sign_conditions_hold;
  report["boundary_matches"] = W.boundary_matches;
  report["closed_boundary"] = W.closed_boundary;
  report["euler_characteristic"] = W.complex.euler_characteristic;
  report["class_counts"] = class_counts_json(W.complex);

  emit(report);
  return 0;
}

// --------------------------------------------------------------- smoothing

std::vector<FloatPoint> grid_points(int k, int n) {
  std::vector<FloatPoint> out;
  std::vector<int> part(static_cast<std::size_t>(k) + 1, 0);
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == k) {
      part[static_cast<std::size_t>(slot)] = left;
      FloatPoint x;
      for (int c : part) x.push_back(static_cast<double>(c) / static_cast<double>(n));
      out.push_back(x);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      part[static_cast<std::size_t>(slot)] = c;
      self(self, slot + 1, left - c);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<FloatPoint> points_from_file(const std::string& path, int k) {
  json j;
  try {
    j = json::parse(read_input(path));
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON in points file: ") + e.what());
  }
  if (!j.is_array()) throw SchemaError("a points file must be a JSON array of points");
  std::vector<FloatPoint> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(k) + 1)
      throw SchemaError("each point must be an array of k+1 barycentric coordinates");
    FloatPoint x;
    double sum = 0;
    for (const auto& c : row) {
      if (!c.is_number()) throw SchemaError("point coordinates must be numbers");
      double v = c.get<double>();
      if (v < 0) throw SchemaError("point coordinates must be nonnegative");
      x.push_back(v);
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw SchemaError("point coordinates must sum to 1");
    out.push_back(x);
  }
  return out;
}

std::string region_tag(const FloatPoint& x, int k) {
  for (int p = 0; p <= k; ++p) {
    bool inside = true;
    for (int q = 0; q <= k && inside; ++q)
      if (q != p) inside = x[static_cast<std::size_t>(q)] >
                           static_cast<double>(k + 2) * x[static_cast<std::size_t>(p)];
    if (inside) return "face_neighborhood:" + std::to_string(p);
  }
  return "generic";
}

json floats_json(const FloatPoint& x) {
  json a = json::array();
  for (double v : x) a.push_back(io::format_double(v));
  return a;
}

int run_smoothing(int k, const std::string& points_file, int grid_n) {
  if (k < 1) throw SchemaError("--k must be at least 1");
  if (grid_n < 1) throw SchemaError("--grid must be at least 1");
  check_dim_cap(k + 1, "smoothing ambient");
  SmoothingMap map;
  map.kind = SmoothingMap::Kind::face_collapse;
  map.k = k;
  map.max_dim = max_dim_from_env();

  std::vector<FloatPoint> points = points_file.empty()
                                       ? grid_points(k, grid_n)
                                       : points_from_file(points_file, k);

  std::vector<Permutation> perms;
  for (int i = 0; i < k; ++i) perms.push_back(Permutation::transposition(k + 1, i, i + 1));
  {
    std::vector<int> rev;
    for (int i = k; i >= 0; --i) rev.push_back(i);
    perms.push_back(Permutation(rev));
  }

  double dev_equiv = 0, dev_face = 0, dev_proj = 0;
  json rows = json::array();
  for (const FloatPoint& x : points) {
    FloatPoint y = evaluate(map, x);

    for (const Permutation& tau : perms) {
      FloatPoint lhs = evaluate(map, permute_float(tau, x));
      FloatPoint rhs = permute_float(tau, y);
      for (std::size_t j = 0; j < lhs.size(); ++j)
        dev_equiv = std::max(dev_equiv, std::abs(lhs[j] - rhs[j]));
    }
    for (int p = 0; p <= k + 1; ++p) {
      FloatPoint alt = evaluate_via_face(map, x, p);
      for (std::size_t j = 0; j < alt.size(); ++j)
        dev_face = std::max(dev_face, std::abs(alt[j] - y[j]));
    }
    std::string tag = region_tag(x, k);
    if (tag != "generic") {
      int p = std::stoi(tag.substr(tag.find(':') + 1));
      double scale = 1.0 - x[static_cast<std::size_t>(p)];
      for (int q = 0; q <= k; ++q) {
        double want = q == p ? 0.0 : x[static_cast<std::size_t>(q)] / scale;
        dev_proj = std::max(dev_proj, std::abs(y[static_cast<std::size_t>(q)] - want));
      }
    }

    bool moved = false;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != x[j]) moved = true;
    json row;
    row["input"] = floats_json(x);
    row["output"] = floats_json(y);
    row["region"] = tag;
    row["moved"] = moved;
    rows.push_back(row);
  }

  json devs;
  devs["equivariance"] = io::format_double(dev_equiv);
  devs["face_compatibility"] = io::format_double(dev_face);
  devs["projection"] = io::format_double(dev_proj);

  json report;
  report["command"] = "smoothing";
  report["k"] = k;
  report["map"] = "face_collapse";
  report["max_dimension"] = map.max_dim;
  report["point_count"] = points.size();
  report["points"] = rows;
  report["deviations"] = devs;
  emit(report);
  return 0;
}

// ------------------------------------------------------------------ verify

json mv_result(const std::string& name, const MvReport& r) {
  json row;
  row["name"] = name;
  row["pass"] = r.ok();
  if (!r.ok()) {
    json dump;
    dump["hypothesis_holds"] = r.hypothesis_holds;
    dump["conclusion_holds"] = r.conclusion_holds;
    if (!r.hypothesis_holds) {
      dump["hypothesis_counterexample_degree"] = r.hypothesis_counterexample_degree;
      dump["hypothesis_counterexample_subset"] = r.hypothesis_counterexample_subset;
    }
    if (!r.conclusion_holds)
      dump["conclusion_counterexample_degree"] = r.conclusion_counterexample_degree;
    row["defect"] = dump;
  }
  return row;
}

int run_verify(const std::string& suite, const std::string& cover_file) {
  json results = json::array();
  bool pass = true;

  if (suite == "homotopy" || suite == "all") {
    std::mt19937 rng(20260816u);
    for (int k = 1; k <= 3; ++k) {
      bool ok = true;
      std::size_t defect_terms = 0;
      for (int trial = 0; trial < 25 && ok; ++trial) {
        std::vector<int> vs;
        std::uniform_int_distribution<int> pick(0, k);
        for (int i = 0; i <= k; ++i) vs.push_back(pick(rng));
        std::vector<int> images;
        for (int i = 0; i <= k; ++i) images.push_back(i);
        std::shuffle(images.begin(), images.end(), rng);
        SPrimeTerm term{1, linear_from_vertices(k, vs), Permutation(images)};
        HomotopyIdentityReport r = verify_homotopy_identity({term});
        if (!r.holds) {
          ok = false;
          defect_terms = r.defect.terms().size();
        }
      }
      json row;
      row["name"] = "homotopy:k=" + std::to_string(k);
      row["pass"] = ok;
      if (!ok) row["defect"] = json{{"terms", defect_terms}};
      results.push_back(row);
      pass = pass && ok;
    }
  }

  if (suite == "mv" || suite == "all") {
    for (const auto& fixture : corpus::all_covers()) {
      MvReport r = verify_mv_vanishing(fixture.space, fixture.pieces);
      results.push_back(mv_result("mv:" + fixture.name, r));
      pass = pass && r.ok();
    }
    if (!cover_file.empty()) {
      io::ProblemFile p = io::parse_problem(read_input(cover_file));
      expect_kind(p, io::ProblemKind::cover);
      check_dim_cap(p.space->dim(), "cover space");
      MvReport r = verify_mv_vanishing(*p.space, p.pieces);
      results.push_back(mv_result("mv:" + cover_file, r));
      pass = pass && r.ok();
    }
  }

  json report;
  report["command"] = "verify";
  report["suite"] = suite;
  report["results"] = results;
  report["pass"] = pass;
  emit(report);
  return pass ? 0 : 1;
}

// ------------------------------------------------------------- error paths

json residue_json(const Chain& residue, const io::LabelTable& labels) {
  try {
    return io::chain_to_json(residue, labels);
  } catch (const SchemaError&) {
    // Labels were not recoverable (e.g. stdin input); fall back to raw ids.
    json a = json::array();
    for (const auto& [t, coef] : residue.terms()) {
      json term;
      term["coeff"] = coef;
      json simplex = json::array();
      for (VertexId v : t.v) simplex.push_back(v);
      term["simplex"] = simplex;
      a.push_back(term);
    }
    return a;
  }
}

int emit_error(const std::string& command, int code, const std::string& kind,
               const std::string& message, const json& extra = json()) {
  json err;
  err["code"] = code;
  err["kind"] = kind;
  err["message"] = message;
  if (!extra.is_null()) err["residue"] = extra;
  json report;
  report["command"] = command;
  report["error"] = err;
  emit(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"oriented chain complex toolkit"};
  app.require_subcommand(1);

  std::string file, model = "oriented", subcomplex_file;
  auto* homology_cmd = app.add_subcommand("homology", "integral homology of a complex");
  homology_cmd->add_option("file", file, "problem file of kind complex, or - for stdin")
      ->required();
  homology_cmd->add_option("--model", model, "chain model")
      ->check(CLI::IsMember({"oriented", "ordered"}));
  homology_cmd->add_option("--subcomplex", subcomplex_file,
                           "complex file; adds relative homology to the report");

  std::string off_path;
  bool check_identity = false;
  auto* glue_cmd = app.add_subcommand("glue", "glue a cycle along matched faces");
  glue_cmd->add_option("file", file, "problem file of kind cycle, or - for stdin")->required();
  glue_cmd->add_option("--export-off", off_path, "write an OFF mesh (2-dimensional gluings)");
  glue_cmd->add_flag("--check-identity", check_identity,
                     "verify the glued fundamental class against the input cycle");

  auto* cobordism_cmd =
      app.add_subcommand("cobordism", "assemble a filling chain and its two ends");
  cobordism_cmd->add_option("file", file, "problem file of kind cobordism, or - for stdin")
      ->required();

  int k = 2, grid_n = 10;
  std::string points_file;
  auto* smoothing_cmd =
      app.add_subcommand("smoothing", "evaluate the face-collapse smoothing map");
  smoothing_cmd->add_option("--k", k, "simplex dimension the map acts on")->required();
  auto* points_opt =
      smoothing_cmd->add_option("--points", points_file, "JSON array of barycentric points");
  smoothing_cmd->add_option("--grid", grid_n, "evaluate on the barycentric n-grid")
      ->excludes(points_opt);

  std::string suite = "all", cover_file;
  auto* verify_cmd = app.add_subcommand("verify", "run the built-in identity suites");
  verify_cmd->add_option("--suite", suite, "which suite to run")
      ->check(CLI::IsMember({"homotopy", "mv", "all"}));
  verify_cmd->add_option("--cover", cover_file,
                         "also verify a cover problem file with the mv suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*homology_cmd) return run_homology(file, model, subcomplex_file);
    if (*glue_cmd) return run_glue(file, off_path, check_identity);
    if (*cobordism_cmd) return run_cobordism(file);
    if (*smoothing_cmd) return run_smoothing(k, points_file, grid_n);
    if (*verify_cmd) return run_verify(suite, cover_file);
    return 2;
  } catch (const NotACycleError& e) {
    io::LabelTable labels;
    try {
      labels = io::parse_problem(read_input(file)).labels;
    } catch (...) {
    }
    return emit_error(command, 4, "not_a_cycle", e.what(), residue_json(e.residue, labels));
  } catch (const BoundaryMismatchError& e) {
    io::LabelTable labels;
    try {
      labels = io::parse_problem(read_input(file)).labels;
    } catch (...) {
    }
    return emit_error(command, 5, "boundary_mismatch", e.what(),
                      residue_json(e.residue, labels));
  } catch (const SchemaError& e) {
    return emit_error(command, 2, "schema", e.what());
  } catch (const SubcomplexError& e) {
    return emit_error(command, 3, "not_a_subcomplex", e.what());
  } catch (const DimensionLimitError& e) {
    return emit_error(command, 6, "dimension_limit", e.what());
  } catch (const std::exception& e) {
    return emit_error(command, 1, "internal", e.what());
  }
}
