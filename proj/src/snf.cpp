#include "orichain/snf.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace orichain {

namespace {

long long add_ck(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
  return r;
}

long long mul_ck(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
  return r;
}

long long neg_ck(long long a) { return mul_ck(a, -1); }

// g = gcd(a, b) >= 0 with x*a + y*b = g.
long long egcd(long long a, long long b, long long& x, long long& y) {
  long long old_r = a, r = b;
  long long old_x = 1, xx = 0;
  long long old_y = 0, yy = 1;
  while (r != 0) {
    const long long q = old_r / r;
    long long t = old_r - q * r;
    old_r = r; r = t;
    t = add_ck(old_x, neg_ck(mul_ck(q, xx)));
    old_x = xx; xx = t;
    t = add_ck(old_y, neg_ck(mul_ck(q, yy)));
    old_y = yy; yy = t;
  }
  if (old_r < 0) { old_r = -old_r; old_x = neg_ck(old_x); old_y = neg_ck(old_y); }
  x = old_x; y = old_y;
  return old_r;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {
std::atomic<bool> g_verify_smith{false};
SmithResult smith_normal_form_impl(IntMatrix A, bool with_transforms);
}  // namespace

void set_smith_verification(bool enabled) { g_verify_smith.store(enabled); }
bool smith_verification_enabled() { return g_verify_smith.load(); }

SmithResult smith_normal_form(IntMatrix A, bool with_transforms) {
  if (!g_verify_smith.load()) return smith_normal_form_impl(std::move(A), with_transforms);
  const IntMatrix original = A;
  SmithResult r = smith_normal_form_impl(std::move(A), true);
  if (!verify_smith(original, r))
    throw std::logic_error("Smith normal form postcondition failed");
  if (!with_transforms) {
    r.U.reset();
    r.V.reset();
  }
  return r;
}

namespace {
SmithResult smith_normal_form_impl(IntMatrix A, bool with_transforms) {
  const std::size_t R = A.rows(), C = A.cols();
  SmithResult res;
  if (with_transforms) {
    res.U = IntMatrix::identity(R);
    res.V = IntMatrix::identity(C);
  }

  // (row r1, row r2) <- (a*r1 + b*r2, c*r1 + d*r2); the 2x2 block is always
  // unimodular.  Columns before `from` are already zero in both rows.
  auto row_combine = [&](std::size_t r1, std::size_t r2, long long a, long long b,
                         long long c, long long d, std::size_t from) {
    for (std::size_t j = from; j < C; ++j) {
      const long long x = A.at(r1, j), y = A.at(r2, j);
      A.at(r1, j) = add_ck(mul_ck(a, x), mul_ck(b, y));
      A.at(r2, j) = add_ck(mul_ck(c, x), mul_ck(d, y));
    }
    if (res.U) {
      for (std::size_t j = 0; j < R; ++j) {
        const long long x = res.U->at(r1, j), y = res.U->at(r2, j);
        res.U->at(r1, j) = add_ck(mul_ck(a, x), mul_ck(b, y));
        res.U->at(r2, j) = add_ck(mul_ck(c, x), mul_ck(d, y));
      }
    }
  };
  auto col_combine = [&](std::size_t c1, std::size_t c2, long long a, long long b,
                         long long c, long long d, std::size_t from) {
    for (std::size_t i = from; i < R; ++i) {
      const long long x = A.at(i, c1), y = A.at(i, c2);
      A.at(i, c1) = add_ck(mul_ck(a, x), mul_ck(c, y));
      A.at(i, c2) = add_ck(mul_ck(b, x), mul_ck(d, y));
    }
    if (res.V) {
      for (std::size_t i = 0; i < C; ++i) {
        const long long x = res.V->at(i, c1), y = res.V->at(i, c2);
        res.V->at(i, c1) = add_ck(mul_ck(a, x), mul_ck(c, y));
        res.V->at(i, c2) = add_ck(mul_ck(b, x), mul_ck(d, y));
      }
    }
  };
  auto row_swap = [&](std::size_t r1, std::size_t r2, std::size_t from) {
    if (r1 == r2) return;
    for (std::size_t j = from; j < C; ++j) std::swap(A.at(r1, j), A.at(r2, j));
    if (res.U)
      for (std::size_t j = 0; j < R; ++j) std::swap(res.U->at(r1, j), res.U->at(r2, j));
  };
  auto col_swap = [&](std::size_t c1, std::size_t c2, std::size_t from) {
    if (c1 == c2) return;
    for (std::size_t i = from; i < R; ++i) std::swap(A.at(i, c1), A.at(i, c2));
    if (res.V)
      for (std::size_t i = 0; i < C; ++i) std::swap(res.V->at(i, c1), res.V->at(i, c2));
  };
  auto row_negate = [&](std::size_t r, std::size_t from) {
    for (std::size_t j = from; j < C; ++j) A.at(r, j) = neg_ck(A.at(r, j));
    if (res.U)
      for (std::size_t j = 0; j < R; ++j) res.U->at(r, j) = neg_ck(res.U->at(r, j));
  };

  // Zero A[i][t] against the pivot A[t][t] with a unimodular row pair.
  auto clear_row_entry = [&](std::size_t t, std::size_t i) {
    const long long att = A.at(t, t), ait = A.at(i, t);
    if (ait % att == 0) {
      row_combine(t, i, 1, 0, neg_ck(ait / att), 1, t);
    } else {
      long long x, y;
      const long long g = egcd(att, ait, x, y);
      row_combine(t, i, x, y, neg_ck(ait / g), att / g, t);
    }
  };
  auto clear_col_entry = [&](std::size_t t, std::size_t j) {
    const long long att = A.at(t, t), atj = A.at(t, j);
    if (atj % att == 0) {
      col_combine(t, j, 1, neg_ck(atj / att), 0, 1, t);
    } else {
      long long x, y;
      const long long g = egcd(att, atj, x, y);
      col_combine(t, j, x, neg_ck(atj / g), y, att / g, t);
    }
  };

  const std::size_t steps = std::min(R, C);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    // Least-absolute-value pivot in the trailing block; entries of +-1 win
    // immediately, which is the common case for boundary matrices.
    std::size_t pi = 0, pj = 0;
    long long best = 0;
    for (std::size_t i = t; i < R && best != 1; ++i) {
      for (std::size_t j = t; j < C; ++j) {
        const long long v = std::llabs(A.at(i, j));
        if (v != 0 && (best == 0 || v < best)) {
          best = v; pi = i; pj = j;
          if (best == 1) break;
        }
      }
    }
    if (best == 0) break;
    row_swap(t, pi, t);
    col_swap(t, pj, t);

    while (true) {
      // Alternate row and column cleaning until both stay clean.
      while (true) {
        for (std::size_t i = t + 1; i < R; ++i)
          if (A.at(i, t) != 0) clear_row_entry(t, i);
        for (std::size_t j = t + 1; j < C; ++j)
          if (A.at(t, j) != 0) clear_col_entry(t, j);
        bool col_clean = true;
        for (std::size_t i = t + 1; i < R; ++i)
          if (A.at(i, t) != 0) { col_clean = false; break; }
        if (col_clean) break;
      }
      // The pivot must divide the whole trailing block for the divisor
      // chain; folding an offending row into the pivot row restarts the
      // cleaning with a smaller pivot gcd.
      const long long d = A.at(t, t);
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (A.at(i, j) % d != 0) {
            row_combine(t, i, 1, 1, 0, 1, t);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (A.at(t, t) < 0) row_negate(t, t);
  }

  for (std::size_t i = 0; i < steps; ++i) {
    const long long d = A.at(i, i);
    if (d == 0) break;
    res.divisors.push_back(d);
  }
#ifndef NDEBUG
  for (std::size_t i = 1; i < res.divisors.size(); ++i)
    assert(res.divisors[i] % res.divisors[i - 1] == 0);
#endif
  res.S = std::move(A);
  return res;
}
}  // namespace

namespace {

std::vector<std::vector<BigInt>> to_big(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> b(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b[i][j] = m.at(i, j);
  return b;
}

std::vector<std::vector<BigInt>> big_mul(const std::vector<std::vector<BigInt>>& a,
                                         const std::vector<std::vector<BigInt>>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<BigInt>> r(n, std::vector<BigInt>(m, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

}  // namespace

bool verify_smith(const IntMatrix& A, const SmithResult& r) {
  if (!r.U || !r.V) return false;
  if (r.S.rows() != A.rows() || r.S.cols() != A.cols()) return false;
  const auto prod = big_mul(big_mul(to_big(*r.U), to_big(A)), to_big(*r.V));
  for (std::size_t i = 0; i < r.S.rows(); ++i)
    for (std::size_t j = 0; j < r.S.cols(); ++j)
      if (prod[i][j] != r.S.at(i, j)) return false;
  for (std::size_t i = 0; i < r.S.rows(); ++i)
    for (std::size_t j = 0; j < r.S.cols(); ++j) {
      if (i != j && r.S.at(i, j) != 0) return false;
      if (i == j && r.S.at(i, j) < 0) return false;
    }
  for (std::size_t i = 0; i + 1 < std::min(r.S.rows(), r.S.cols()); ++i) {
    const long long d0 = r.S.at(i, i), d1 = r.S.at(i + 1, i + 1);
    if (d0 == 0 && d1 != 0) return false;
    if (d0 != 0 && d1 % d0 != 0) return false;
  }
  const BigInt du = determinant(*r.U), dv = determinant(*r.V);
  return (du == 1 || du == -1) && (dv == 1 || dv == -1);
}

BigInt determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = M.rows();
  if (n == 0) return BigInt(1);
  auto a = to_big(M);
  BigInt prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return BigInt(0);
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::size_t rational_rank(const IntMatrix& M) {
  std::vector<std::vector<Rational>> a(M.rows(), std::vector<Rational>(M.cols()));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) a[i][j] = M.at(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < M.cols() && rank < M.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < M.rows() && a[piv][col] == 0) ++piv;
    if (piv == M.rows()) continue;
    std::swap(a[rank], a[piv]);
    const Rational inv = Rational(1) / a[rank][col];
    for (std::size_t j = col; j < M.cols(); ++j) a[rank][j] *= inv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < M.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace orichain
