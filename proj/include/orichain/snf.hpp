#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orichain/rational.hpp"

namespace orichain {

/// Dense row-major integer matrix with overflow-checked arithmetic helpers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long long& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const long long& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long long> data_;
};

/**
 * Smith normal form over the integers.  S is diagonal with nonnegative
 * entries, each dividing the next; when transforms are requested, U and V are
 * unimodular with U * A * V = S.  All arithmetic is overflow-checked and
 * throws std::overflow_error instead of wrapping.
 */
struct SmithResult {
  IntMatrix S;
  std::optional<IntMatrix> U;
  std::optional<IntMatrix> V;
  std::vector<long long> divisors;  // nonzero diagonal entries, in order
};

SmithResult smith_normal_form(IntMatrix A, bool with_transforms = false);

/// While enabled (typically scoped inside tests), every smith_normal_form
/// call computes transforms and checks its own postcondition exactly,
/// throwing std::logic_error on failure.  Off by default: the check is
/// cubic in big integers and meant for desk-scale matrices.
void set_smith_verification(bool enabled);
bool smith_verification_enabled();
struct SmithVerificationScope {
  explicit SmithVerificationScope(bool on) : prev(smith_verification_enabled()) {
    set_smith_verification(on);
  }
  ~SmithVerificationScope() { set_smith_verification(prev); }
  bool prev;
};

/// Exact check of a transformed result: U*A*V == S (big-integer product),
/// the divisor chain holds, and both transforms have determinant +-1.
/// Intended for small matrices; the determinant check is cubic in big ints.
bool verify_smith(const IntMatrix& A, const SmithResult& r);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& M);

std::size_t rational_rank(const IntMatrix& M);

}  // namespace orichain
