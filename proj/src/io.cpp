#include "orichain/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "orichain/errors.hpp"

namespace orichain {
namespace io {

using nlohmann::json;

LabelTable::LabelTable(const std::set<Label>& labels)
    : labels_(labels.begin(), labels.end()) {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    ids_.emplace(labels_[i], static_cast<VertexId>(i));
}

VertexId LabelTable::id(const Label& l) const {
  auto it = ids_.find(l);
  if (it == ids_.end()) throw SchemaError("vertex label not declared in this file");
  return it->second;
}

const Label& LabelTable::label(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= labels_.size())
    throw SchemaError("vertex id out of range for the label table");
  return labels_[static_cast<std::size_t>(v)];
}

std::string to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::complex: return "complex";
    case ProblemKind::chain: return "chain";
    case ProblemKind::cycle: return "cycle";
    case ProblemKind::cobordism: return "cobordism";
    case ProblemKind::cover: return "cover";
  }
  return "complex";
}

namespace {

ProblemKind kind_from_string(const std::string& s) {
  if (s == "complex") return ProblemKind::complex;
  if (s == "chain") return ProblemKind::chain;
  if (s == "cycle") return ProblemKind::cycle;
  if (s == "cobordism") return ProblemKind::cobordism;
  if (s == "cover") return ProblemKind::cover;
  throw SchemaError("unknown problem kind: " + s);
}

Label parse_label(const json& j) {
  if (j.is_number_integer()) return Label::of_int(j.get<long long>());
  if (j.is_string()) return Label::of_string(j.get<std::string>());
  throw SchemaError("vertex labels must be integers or strings");
}

void collect_simplex_labels(const json& j, std::set<Label>& out) {
  if (!j.is_array()) throw SchemaError("a simplex must be an array of vertex labels");
  for (const auto& v : j) out.insert(parse_label(v));
}

void collect_complex_labels(const json& j, std::set<Label>& out) {
  if (!j.is_object() || !j.contains("simplices") || !j["simplices"].is_array())
    throw SchemaError("a complex must be an object with a \"simplices\" array");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "simplices") throw SchemaError("unknown key in complex payload: " + key);
  }
  for (const auto& s : j["simplices"]) collect_simplex_labels(s, out);
}

void collect_chain_labels(const json& j, std::set<Label>& out) {
  if (!j.is_array()) throw SchemaError("a chain must be an array of terms");
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("simplex") || !t.contains("coeff"))
      throw SchemaError("a chain term must be an object with \"simplex\" and \"coeff\"");
    for (const auto& [key, value] : t.items()) {
      (void)value;
      if (key != "simplex" && key != "coeff")
        throw SchemaError("unknown key in chain term: " + key);
    }
    if (!t["coeff"].is_number_integer())
      throw SchemaError("chain coefficients must be integers");
    collect_simplex_labels(t["simplex"], out);
  }
}

Tuple parse_simplex(const json& j, const LabelTable& labels) {
  Tuple t;
  for (const auto& v : j) t.v.push_back(labels.id(parse_label(v)));
  return t;
}

SimplicialComplex parse_complex(const json& j, const LabelTable& labels) {
  std::vector<std::vector<VertexId>> facet_lists;
  for (const auto& s : j["simplices"]) {
    Tuple t = parse_simplex(s, labels);
    auto [sorted, sign] = sorted_with_sign(t);
    if (sign == 0 && !t.v.empty())
      throw SchemaError("complex simplices must have distinct vertices");
    facet_lists.push_back(sorted.v);
  }
  return SimplicialComplex(facet_lists);
}

Chain parse_chain(const json& j, const LabelTable& labels) {
  Chain c;
  for (const auto& t : j)
    c.add(parse_simplex(t["simplex"], labels), t["coeff"].get<long long>());
  return c;
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key))
    throw SchemaError(std::string("missing required key: ") + key);
  return j[key];
}

json simplex_to_json(const Tuple& t, const LabelTable& labels) {
  json a = json::array();
  for (VertexId v : t.v) a.push_back(label_to_json(labels.label(v)));
  return a;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("a problem file must be a JSON object");

  ProblemFile p;
  if (j.contains("version")) {
    if (!j["version"].is_number_integer())
      throw SchemaError("\"version\" must be an integer");
    p.version = j["version"].get<int>();
    if (p.version != 1) throw SchemaError("unsupported problem file version");
  }
  p.kind = kind_from_string(require(j, "kind").is_string()
                                ? j["kind"].get<std::string>()
                                : throw SchemaError("\"kind\" must be a string"));

  std::set<std::string> allowed = {"version", "kind"};
  switch (p.kind) {
    case ProblemKind::complex: allowed.insert("complex"); break;
    case ProblemKind::chain:
    case ProblemKind::cycle: allowed.insert({"chain", "complex"}); break;
    case ProblemKind::cobordism: allowed.insert({"filling", "end0", "end1"}); break;
    case ProblemKind::cover: allowed.insert({"complex", "pieces"}); break;
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key))
      throw SchemaError("unknown key for kind " + to_string(p.kind) + ": " + key);
  }

  // Pass 1: collect every referenced label so ids are dense and ordered.
  std::set<Label> labels;
  switch (p.kind) {
    case ProblemKind::complex:
      collect_complex_labels(require(j, "complex"), labels);
      break;
    case ProblemKind::chain:
    case ProblemKind::cycle:
      collect_chain_labels(require(j, "chain"), labels);
      if (j.contains("complex")) collect_complex_labels(j["complex"], labels);
      break;
    case ProblemKind::cobordism:
      collect_chain_labels(require(j, "filling"), labels);
      collect_chain_labels(require(j, "end0"), labels);
      collect_chain_labels(require(j, "end1"), labels);
      break;
    case ProblemKind::cover: {
      collect_complex_labels(require(j, "complex"), labels);
      const json& pieces = require(j, "pieces");
      if (!pieces.is_array()) throw SchemaError("\"pieces\" must be an array");
      for (const auto& piece : pieces) collect_complex_labels(piece, labels);
      break;
    }
  }
  p.labels = LabelTable(labels);

  // Pass 2: build the payloads over interned vertex ids.
  switch (p.kind) {
    case ProblemKind::complex:
      p.space = parse_complex(j["complex"], p.labels);
      break;
    case ProblemKind::chain:
    case ProblemKind::cycle:
      p.chain = parse_chain(j["chain"], p.labels);
      if (j.contains("complex")) p.space = parse_complex(j["complex"], p.labels);
      break;
    case ProblemKind::cobordism:
      p.filling = parse_chain(j["filling"], p.labels);
      p.end0 = parse_chain(j["end0"], p.labels);
      p.end1 = parse_chain(j["end1"], p.labels);
      break;
    case ProblemKind::cover:
      p.space = parse_complex(j["complex"], p.labels);
      for (const auto& piece : j["pieces"])
        p.pieces.push_back(parse_complex(piece, p.labels));
      break;
  }
  return p;
}

json label_to_json(const Label& l) {
  return l.is_string ? json(l.str) : json(l.num);
}

json chain_to_json(const Chain& c, const LabelTable& labels) {
  json a = json::array();
  for (const auto& [t, coef] : c.terms()) {
    json term;
    term["coeff"] = coef;
    term["simplex"] = simplex_to_json(t, labels);
    a.push_back(term);
  }
  return a;
}

json complex_to_json(const SimplicialComplex& K, const LabelTable& labels) {
  json simplices = json::array();
  for (const Tuple& t : facets(K)) simplices.push_back(simplex_to_json(t, labels));
  json obj;
  obj["simplices"] = simplices;
  return obj;
}

std::vector<Tuple> facets(const SimplicialComplex& K) {
  std::vector<Tuple> out;
  for (int d = K.dim(); d >= 0; --d) {
    std::set<Tuple> covered;
    if (d < K.dim())
      for (const Tuple& t : K.simplices(d + 1))
        for (int p = 0; p <= d + 1; ++p) covered.insert(t.face(p));
    for (const Tuple& t : K.simplices(d))
      if (!covered.count(t)) out.push_back(t);
  }
  return out;
}

std::string serialize_problem(const ProblemFile& p) {
  json j;
  j["version"] = p.version;
  j["kind"] = to_string(p.kind);
  switch (p.kind) {
    case ProblemKind::complex:
      j["complex"] = complex_to_json(*p.space, p.labels);
      break;
    case ProblemKind::chain:
    case ProblemKind::cycle:
      j["chain"] = chain_to_json(*p.chain, p.labels);
      if (p.space) j["complex"] = complex_to_json(*p.space, p.labels);
      break;
    case ProblemKind::cobordism:
      j["filling"] = chain_to_json(*p.filling, p.labels);
      j["end0"] = chain_to_json(*p.end0, p.labels);
      j["end1"] = chain_to_json(*p.end1, p.labels);
      break;
    case ProblemKind::cover: {
      j["complex"] = complex_to_json(*p.space, p.labels);
      json pieces = json::array();
      for (const auto& piece : p.pieces)
        pieces.push_back(complex_to_json(piece, p.labels));
      j["pieces"] = pieces;
      break;
    }
  }
  return canonical_dump(j);
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string off_mesh(const GluedComplex& G, const LabelTable& labels) {
  if (G.top_dim != 2)
    throw std::invalid_argument("OFF export is defined for 2-dimensional gluings only");

  const auto& vertex_classes = G.quotient_cells.at(0);
  std::map<std::pair<std::size_t, int>, std::size_t> vertex_index;
  for (std::size_t c = 0; c < vertex_classes.size(); ++c)
    for (const auto& member : vertex_classes[c])
      vertex_index[{member.first, member.second.at(0)}] = c;

  // Fixed circular embedding of the label set; a quotient vertex takes the
  // average over its members.  Visualization aid only.
  const double two_pi = 6.28318530717958648;
  std::size_t n = labels.size() == 0 ? 1 : labels.size();
  std::ostringstream body;
  for (const auto& members : vertex_classes) {
    double x = 0, y = 0;
    for (const auto& member : members) {
      VertexId v = G.cells[member.first].map.v[member.second.at(0)];
      double angle = two_pi * static_cast<double>(v) / static_cast<double>(n);
      x += std::cos(angle);
      y += std::sin(angle);
    }
    x /= static_cast<double>(members.size());
    y /= static_cast<double>(members.size());
    body << format_double(x) << ' ' << format_double(y) << " 0\n";
  }
  for (std::size_t j = 0; j < G.cells.size(); ++j) {
    std::size_t a = vertex_index.at({j, 0});
    std::size_t b = vertex_index.at({j, 1});
    std::size_t c = vertex_index.at({j, 2});
    if (G.cells[j].sign < 0) std::swap(b, c);
    body << "3 " << a << ' ' << b << ' ' << c << '\n';
  }

  std::ostringstream out;
  out << "OFF\n" << vertex_classes.size() << ' ' << G.cells.size() << " 0\n"
      << body.str();
  return out.str();
}

}  // namespace io
}  // namespace orichain
