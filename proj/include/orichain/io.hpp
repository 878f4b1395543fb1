#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "orichain/chains.hpp"
#include "orichain/gluing.hpp"

namespace orichain {
namespace io {

/// External vertex label: an integer or a string.  Integers order
/// numerically before all strings; strings order lexicographically.
struct Label {
  bool is_string = false;
  long long num = 0;
  std::string str;

  static Label of_int(long long n) { return Label{false, n, {}}; }
  static Label of_string(std::string s) { return Label{true, 0, std::move(s)}; }

  bool operator<(const Label& o) const {
    if (is_string != o.is_string) return !is_string;
    return is_string ? str < o.str : num < o.num;
  }
  bool operator==(const Label& o) const {
    return is_string == o.is_string && (is_string ? str == o.str : num == o.num);
  }
};

/// Dense interning of the labels appearing in one problem file, in label
/// order, so vertex ids are stable across runs.
class LabelTable {
 public:
  LabelTable() = default;
  explicit LabelTable(const std::set<Label>& labels);

  VertexId id(const Label& l) const;  // throws SchemaError when absent
  const Label& label(VertexId v) const;
  std::size_t size() const { return labels_.size(); }

 private:
  std::vector<Label> labels_;
  std::map<Label, VertexId> ids_;
};

enum class ProblemKind { complex, chain, cycle, cobordism, cover };

std::string to_string(ProblemKind k);

/**
 * Parsed problem file.  Complexes are given by their maximal simplices
 * (closure is computed on load); chains are (simplex, coefficient) lists.
 * Which optional payloads are present depends on the kind.
 */
struct ProblemFile {
  int version = 1;
  ProblemKind kind = ProblemKind::complex;
  LabelTable labels;
  std::optional<SimplicialComplex> space;          // complex / cycle ambient / cover space
  std::optional<Chain> chain;                      // chain, cycle
  std::optional<Chain> filling, end0, end1;        // cobordism
  std::vector<SimplicialComplex> pieces;           // cover
};

/// Throws SchemaError on malformed input of any sort.
ProblemFile parse_problem(const std::string& text);
/// Canonical form: sorted keys, fixed formatting, trailing newline.
/// parse(serialize(parse(text))) equals parse(text).
std::string serialize_problem(const ProblemFile& p);

/// Canonical report rendering: nlohmann's std::map backing already sorts
/// keys; this fixes indentation and the trailing newline.
std::string canonical_dump(const nlohmann::json& j);

/// 17 significant digits, locale-independent; reports carry floats as
/// strings so the byte output is stable.
std::string format_double(double x);

nlohmann::json label_to_json(const Label& l);
nlohmann::json chain_to_json(const Chain& c, const LabelTable& labels);
nlohmann::json complex_to_json(const SimplicialComplex& K, const LabelTable& labels);

/// Maximal simplices of K, dimension-descending then lexicographic.
std::vector<Tuple> facets(const SimplicialComplex& K);

/// OFF mesh of a 2-dimensional glued complex.  Quotient vertices take the
/// average of a fixed circular embedding of their member labels; faces are
/// listed with cell orientation (reversed for sign -1 cells).
std::string off_mesh(const GluedComplex& G, const LabelTable& labels);

}  // namespace io
}  // namespace orichain
