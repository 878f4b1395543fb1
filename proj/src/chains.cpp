#include "orichain/chains.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace orichain {

Coef checked_add(Coef a, Coef b) {
  Coef r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("chain coefficient overflow");
  return r;
}

Coef checked_mul(Coef a, Coef b) {
  Coef r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("chain coefficient overflow");
  return r;
}

bool Tuple::degenerate() const {
  std::vector<VertexId> s = v;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

bool Tuple::strictly_increasing() const {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

std::vector<VertexId> Tuple::support() const {
  std::vector<VertexId> s = v;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Tuple Tuple::face(int p) const {
  if (p < 0 || p > grade()) throw std::invalid_argument("face: bad position");
  Tuple f;
  f.v.reserve(v.size() - 1);
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (i != p) f.v.push_back(v[static_cast<size_t>(i)]);
  return f;
}

std::pair<Tuple, int> sorted_with_sign(const Tuple& t) {
  Tuple s = t;
  // Insertion sort with transposition count; tuples are short.
  int sign = 1;
  for (size_t i = 1; i < s.v.size(); ++i) {
    for (size_t j = i; j > 0 && s.v[j - 1] > s.v[j]; --j) {
      std::swap(s.v[j - 1], s.v[j]);
      sign = -sign;
    }
  }
  for (size_t i = 1; i < s.v.size(); ++i)
    if (s.v[i - 1] == s.v[i]) return {std::move(s), 0};
  return {std::move(s), sign};
}

Tuple permute_positions(const Tuple& t, const Permutation& tau) {
  if (tau.size() != static_cast<int>(t.v.size()))
    throw std::invalid_argument("permute_positions: size mismatch");
  Tuple r;
  r.v.resize(t.v.size());
  for (size_t i = 0; i < t.v.size(); ++i) r.v[i] = t.v[static_cast<size_t>(tau(static_cast<int>(i)))];
  return r;
}

void Chain::add(const Tuple& t, Coef c) {
  if (c == 0) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

int Chain::grade() const {
  if (terms_.empty()) return -1;
  const int g = terms_.begin()->first.grade();
  assert(terms_.rbegin()->first.grade() == g && "chain is not homogeneous");
  return g;
}

Coef Chain::coefficient(const Tuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

Chain& Chain::operator+=(const Chain& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  for (const auto& [t, c] : o.terms_) add(t, checked_mul(c, -1));
  return *this;
}

Chain Chain::operator*(Coef s) const {
  Chain r;
  if (s == 0) return r;
  for (const auto& [t, c] : terms_) r.terms_.emplace(t, checked_mul(c, s));
  return r;
}

Chain boundary(const Tuple& t) {
  Chain b;
  if (t.grade() <= 0) return b;
  for (int p = 0; p <= t.grade(); ++p) b.add(t.face(p), p % 2 == 0 ? 1 : -1);
  return b;
}

Chain boundary(const Chain& c) {
  Chain b;
  for (const auto& [t, coef] : c.terms()) {
    if (t.grade() <= 0) continue;
    for (int p = 0; p <= t.grade(); ++p)
      b.add(t.face(p), checked_mul(coef, p % 2 == 0 ? 1 : -1));
  }
  return b;
}

Chain project_to_oriented(const Chain& c) {
  Chain r;
  for (const auto& [t, coef] : c.terms()) {
    auto [s, sign] = sorted_with_sign(t);
    if (sign == 0) continue;
    r.add(s, checked_mul(coef, sign));
  }
  return r;
}

bool chain_is_oriented(const Chain& c) {
  for (const auto& [t, coef] : c.terms()) {
    (void)coef;
    if (!t.strictly_increasing()) return false;
  }
  return true;
}

bool is_cycle(const Chain& c) { return project_to_oriented(boundary(c)).zero(); }

Chain apply_vertex_map(const Chain& c, const std::function<VertexId(VertexId)>& f) {
  Chain r;
  for (const auto& [t, coef] : c.terms()) {
    Tuple img;
    img.v.reserve(t.v.size());
    for (VertexId w : t.v) img.v.push_back(f(w));
    r.add(img, coef);
  }
  return r;
}

SimplicialComplex::SimplicialComplex(const std::vector<std::vector<VertexId>>& facets) {
  std::set<Tuple> seen;
  for (const auto& facet : facets) {
    std::vector<VertexId> f = facet;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) throw std::invalid_argument("complex facet is empty");
    // Downward closure: every nonempty subset of the facet.
    const size_t n = f.size();
    for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
      Tuple s;
      for (size_t i = 0; i < n; ++i)
        if (mask & (size_t{1} << i)) s.v.push_back(f[i]);
      seen.insert(std::move(s));
    }
  }
  for (const auto& s : seen) {
    const int m = s.grade();
    if (m >= static_cast<int>(by_dim_.size())) {
      by_dim_.resize(static_cast<size_t>(m) + 1);
      index_.resize(static_cast<size_t>(m) + 1);
    }
    index_[static_cast<size_t>(m)].emplace(s, by_dim_[static_cast<size_t>(m)].size());
    by_dim_[static_cast<size_t>(m)].push_back(s);
  }
  if (!by_dim_.empty())
    for (const auto& s : by_dim_[0]) vertices_.push_back(s.v[0]);
}

const std::vector<Tuple>& SimplicialComplex::simplices(int m) const {
  static const std::vector<Tuple> none;
  if (m < 0 || m > dim()) return none;
  return by_dim_[static_cast<size_t>(m)];
}

bool SimplicialComplex::contains(const Tuple& sorted_simplex) const {
  const int m = sorted_simplex.grade();
  if (m < 0 || m > dim()) return false;
  return index_[static_cast<size_t>(m)].count(sorted_simplex) > 0;
}

bool SimplicialComplex::contains_support(const Tuple& t) const {
  return contains(Tuple(t.support()));
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  // Facets suffice, but checking everything is cheap and direct.
  for (int m = 0; m <= dim(); ++m)
    for (const auto& s : simplices(m))
      if (!other.contains(s)) return false;
  return true;
}

std::size_t SimplicialComplex::simplex_index(int m, const Tuple& sorted_simplex) const {
  if (m < 0 || m > dim()) throw std::out_of_range("simplex_index: no such dimension");
  auto it = index_[static_cast<size_t>(m)].find(sorted_simplex);
  if (it == index_[static_cast<size_t>(m)].end())
    throw std::out_of_range("simplex_index: simplex not in complex");
  return it->second;
}

std::vector<Tuple> SimplicialComplex::ordered_generators(int m) const {
  std::vector<Tuple> out;
  if (m < 0) return out;
  // Tuples with support in a given d-simplex are the surjections onto its
  // vertex set; enumerate per simplex and merge.
  for (int d = 0; d <= std::min(m, dim()); ++d) {
    for (const auto& s : simplices(d)) {
      const int nv = d + 1;
      std::vector<int> slot(static_cast<size_t>(m) + 1, 0);
      while (true) {
        std::vector<bool> hit(static_cast<size_t>(nv), false);
        for (int i : slot) hit[static_cast<size_t>(i)] = true;
        bool onto = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
        if (onto) {
          Tuple t;
          t.v.reserve(slot.size());
          for (int i : slot) t.v.push_back(s.v[static_cast<size_t>(i)]);
          out.push_back(std::move(t));
        }
        int pos = m;
        while (pos >= 0 && slot[static_cast<size_t>(pos)] == nv - 1) {
          slot[static_cast<size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++slot[static_cast<size_t>(pos)];
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::supports_chain(const Chain& c) const {
  for (const auto& [t, coef] : c.terms()) {
    (void)coef;
    if (!contains_support(t)) return false;
  }
  return true;
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::vector<VertexId>> common;
  for (int m = 0; m <= a.dim(); ++m)
    for (const auto& s : a.simplices(m))
      if (b.contains(s)) common.push_back(s.v);
  return SimplicialComplex(common);
}

}  // namespace orichain
