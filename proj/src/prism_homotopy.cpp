#include "orichain/prism_homotopy.hpp"

#include <cassert>
#include <mutex>
#include <stdexcept>

namespace orichain {

LinearMapSimplex::LinearMapSimplex(int k, std::vector<BarycentricPoint> images)
    : target_dim(k), vertex_images(std::move(images)) {
  if (target_dim < 0) throw std::invalid_argument("linear map: negative target dimension");
  if (vertex_images.empty()) throw std::invalid_argument("linear map: no vertex images");
  for (const auto& pt : vertex_images)
    if (pt.dim() != target_dim)
      throw std::invalid_argument("linear map: image point outside the target simplex");
}

BarycentricPoint LinearMapSimplex::apply(const BarycentricPoint& x) const {
  if (x.dim() != grade()) throw std::invalid_argument("linear map: argument grade mismatch");
  std::vector<Rational> c(static_cast<size_t>(target_dim) + 1, Rational(0));
  for (int i = 0; i <= grade(); ++i) {
    const auto& img = vertex_images[static_cast<size_t>(i)];
    if (x[i] == 0) continue;
    for (int j = 0; j <= target_dim; ++j) c[static_cast<size_t>(j)] += x[i] * img[j];
  }
  return BarycentricPoint(std::move(c));
}

LinearMapSimplex LinearMapSimplex::compose_positions(const Permutation& tau) const {
  if (tau.size() != grade() + 1)
    throw std::invalid_argument("linear map: permutation size mismatch");
  std::vector<BarycentricPoint> images;
  images.reserve(vertex_images.size());
  for (int i = 0; i <= grade(); ++i) images.push_back(vertex_images[static_cast<size_t>(tau(i))]);
  return LinearMapSimplex(target_dim, std::move(images));
}

LinearMapSimplex LinearMapSimplex::face(int p) const {
  if (p < 0 || p > grade()) throw std::invalid_argument("linear map face: bad position");
  std::vector<BarycentricPoint> images;
  images.reserve(vertex_images.size() - 1);
  for (int i = 0; i <= grade(); ++i)
    if (i != p) images.push_back(vertex_images[static_cast<size_t>(i)]);
  return LinearMapSimplex(target_dim, std::move(images));
}

bool LinearMapSimplex::operator<(const LinearMapSimplex& o) const {
  if (target_dim != o.target_dim) return target_dim < o.target_dim;
  if (vertex_images.size() != o.vertex_images.size())
    return vertex_images.size() < o.vertex_images.size();
  for (size_t i = 0; i < vertex_images.size(); ++i) {
    if (vertex_images[i] < o.vertex_images[i]) return true;
    if (o.vertex_images[i] < vertex_images[i]) return false;
  }
  return false;
}

LinearMapSimplex identity_map(int k) {
  std::vector<BarycentricPoint> images;
  for (int i = 0; i <= k; ++i) images.push_back(vertex_point(k, i));
  return LinearMapSimplex(k, std::move(images));
}

LinearMapSimplex linear_from_vertices(int k, const std::vector<int>& vertices) {
  std::vector<BarycentricPoint> images;
  images.reserve(vertices.size());
  for (int v : vertices) images.push_back(vertex_point(k, v));
  return LinearMapSimplex(k, std::move(images));
}

void LinearChain::add(const LinearMapSimplex& f, Coef c) {
  if (c == 0) return;
  auto it = terms_.find(f);
  if (it == terms_.end()) {
    terms_.emplace(f, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

int LinearChain::grade() const {
  if (terms_.empty()) return -1;
  const int g = terms_.begin()->first.grade();
#ifndef NDEBUG
  for (const auto& [f, c] : terms_) {
    (void)c;
    assert(f.grade() == g && "linear chain is not homogeneous");
  }
#endif
  return g;
}

LinearChain& LinearChain::operator+=(const LinearChain& o) {
  for (const auto& [f, c] : o.terms_) add(f, c);
  return *this;
}

LinearChain& LinearChain::operator-=(const LinearChain& o) {
  for (const auto& [f, c] : o.terms_) add(f, checked_mul(c, -1));
  return *this;
}

LinearChain LinearChain::operator*(Coef s) const {
  LinearChain r;
  if (s == 0) return r;
  for (const auto& [f, c] : terms_) r.add(f, checked_mul(c, s));
  return r;
}

LinearChain linear_boundary(const LinearMapSimplex& f) {
  LinearChain b;
  if (f.grade() == 0) return b;
  for (int p = 0; p <= f.grade(); ++p) b.add(f.face(p), p % 2 == 0 ? 1 : -1);
  return b;
}

LinearChain linear_boundary(const LinearChain& c) {
  LinearChain b;
  for (const auto& [f, coef] : c.terms()) {
    if (f.grade() == 0) continue;
    for (int p = 0; p <= f.grade(); ++p)
      b.add(f.face(p), checked_mul(coef, p % 2 == 0 ? 1 : -1));
  }
  return b;
}

LinearMapSimplex prism(const LinearMapSimplex& f) {
  std::vector<BarycentricPoint> images = f.vertex_images;
  images.push_back(barycenter(f.target_dim));
  return LinearMapSimplex(f.target_dim, std::move(images));
}

LinearChain prism(const LinearChain& c) {
  LinearChain r;
  for (const auto& [f, coef] : c.terms()) r.add(prism(f), coef);
  return r;
}

LinearChain pushforward(const LinearMapSimplex& f, const LinearChain& c) {
  LinearChain r;
  for (const auto& [cell, coef] : c.terms()) {
    if (cell.target_dim != f.grade())
      throw std::invalid_argument("pushforward: cell does not live in the source simplex");
    std::vector<BarycentricPoint> images;
    images.reserve(cell.vertex_images.size());
    for (const auto& pt : cell.vertex_images) images.push_back(f.apply(pt));
    r.add(LinearMapSimplex(f.target_dim, std::move(images)), coef);
  }
  return r;
}

const LinearChain& homotopy_on_identity(int k) {
  if (k < 0) throw std::invalid_argument("homotopy_on_identity: negative dimension");
  static std::mutex mu;
  static std::map<int, LinearChain> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  LinearChain value;
  if (k >= 1) {
    // D(Id_k) = prism(Id_k + (-1)^(k+1) D(boundary Id_k)); the recursion
    // bottoms out because D vanishes on grade 0.
    LinearChain arg;
    arg.add(identity_map(k), 1);
    LinearChain d_boundary = homotopy_D(linear_boundary(identity_map(k)));
    if (k % 2 == 0) arg -= d_boundary;
    else arg += d_boundary;
    value = prism(arg);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(k, std::move(value));
  (void)inserted;  // a concurrent computation of the same value may have won
  return it->second;
}

LinearChain homotopy_D(const LinearChain& c) {
  LinearChain r;
  for (const auto& [f, coef] : c.terms()) {
    if (f.grade() < 1) continue;
    r += pushforward(f, homotopy_on_identity(f.grade())) * coef;
  }
  return r;
}

HomotopyIdentityReport verify_homotopy_identity(const std::vector<SPrimeTerm>& presentation) {
  LinearChain c;
  int grade = -1;
  for (const auto& term : presentation) {
    if (term.tau.size() != term.f.grade() + 1)
      throw std::invalid_argument("presentation permutation size does not match the generator");
    if (grade == -1) grade = term.f.grade();
    else if (term.f.grade() != grade)
      throw std::invalid_argument("presentation mixes grades");
    c.add(term.f, term.coef);
    c.add(term.f.compose_positions(term.tau),
          checked_mul(term.coef, -term.tau.sign()));
  }
  HomotopyIdentityReport report;
  if (c.zero()) {
    report.holds = true;
    return report;
  }
  const int k = c.grade();
  LinearChain defect = linear_boundary(homotopy_D(c));
  defect -= c * ((k + 1) % 2 == 0 ? 1 : -1);
  defect -= homotopy_D(linear_boundary(c));
  report.defect = std::move(defect);
  report.holds = report.defect.zero();
  return report;
}

}  // namespace orichain
