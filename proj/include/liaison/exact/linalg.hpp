#pragma once

#include <gmpxx.h>

#include <vector>

// Exact linear algebra over Q, carried on integer matrices via fraction-free
// (Bareiss) Gaussian elimination.  No floating point anywhere.  Rows may be
// rescaled freely by callers: rank and kernels are invariant under it.

namespace liaison::exact {

using ZRow = std::vector<mpz_class>;
using ZMat = std::vector<ZRow>;  // row-major, all rows the same length

// Divide a row by the gcd of its entries (no-op on zero rows).
void normalize_row(ZRow& row);

// Row echelon form produced by one-step fraction-free elimination, with
// column pivoting; pivot rows are kept, everything else is discarded.
class Echelon {
 public:
  Echelon() = default;
  explicit Echelon(ZMat rows, size_t cols);

  int rank() const { return static_cast<int>(rows_.size()); }
  size_t cols() const { return cols_; }
  const ZMat& rows() const { return rows_; }
  const std::vector<size_t>& pivot_cols() const { return pivots_; }

  // Eliminates v against the echelon rows.  The result is a nonzero-scalar
  // multiple of the projection of v away from the row space; it is the zero
  // vector exactly when v lies in the span.  `scale`, when requested, is the
  // net factor by which v was multiplied (so result = scale * projection
  // component-wise after the row-space part is removed).
  ZRow residual(ZRow v, mpq_class* scale = nullptr) const;
  bool contains(const ZRow& v) const;

 private:
  ZMat rows_;
  std::vector<size_t> pivots_;
  size_t cols_ = 0;
};

int rank(const ZMat& m, size_t cols);

// Integer basis of the right kernel { x : M x = 0 }.  Each basis vector is
// primitive (content 1).
ZMat kernel_basis(const ZMat& m, size_t cols);

// Clears denominators row by row and divides out content.
ZMat scale_rows(const std::vector<std::vector<mpq_class>>& m);

bool is_zero(const ZRow& v);

}  // namespace liaison::exact
