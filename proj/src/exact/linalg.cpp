#include "liaison/exact/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace liaison::exact {

bool is_zero(const ZRow& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void normalize_row(ZRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Echelon::Echelon(ZMat rows, size_t cols) : cols_(cols) {
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("Echelon: ragged matrix");

  const size_t nrows = rows.size();
  size_t top = 0;
  mpz_class prev = 1;
  for (size_t col = 0; col < cols_ && top < nrows; ++col) {
    // Pivot choice: smallest nonzero magnitude, ties to the lowest row.
    size_t pivot = nrows;
    for (size_t i = top; i < nrows; ++i) {
      if (rows[i][col] == 0) continue;
      if (pivot == nrows ||
          mpz_cmpabs(rows[i][col].get_mpz_t(), rows[pivot][col].get_mpz_t()) < 0)
        pivot = i;
    }
    if (pivot == nrows) continue;
    std::swap(rows[top], rows[pivot]);

    for (size_t i = top + 1; i < nrows; ++i) {
      // Every row below is updated, zero pivot entry or not: entries must
      // stay minors of the input for the divisions to remain exact.
      for (size_t j = col + 1; j < cols_; ++j) {
        mpz_class t = rows[i][j] * rows[top][col] - rows[i][col] * rows[top][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = std::move(t);
      }
      rows[i][col] = 0;
    }
    prev = rows[top][col];
    pivots_.push_back(col);
    ++top;
  }
  rows.resize(top);
  rows_ = std::move(rows);
}

ZRow Echelon::residual(ZRow v, mpq_class* scale) const {
  if (v.size() != cols_) throw std::invalid_argument("Echelon::residual: size mismatch");
  mpq_class net = 1;
  for (size_t t = 0; t < rows_.size(); ++t) {
    const size_t p = pivots_[t];
    if (v[p] == 0) continue;
    const mpz_class& piv = rows_[t][p];
    const mpz_class coef = v[p];
    for (size_t j = 0; j < cols_; ++j) v[j] = v[j] * piv - coef * rows_[t][j];
    net *= piv;
    if (!scale) {
      // Dimension-only callers let us shrink freely.
      normalize_row(v);
    } else {
      mpz_class g = 0;
      for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
      }
      if (g > 1) {
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        net /= g;
      }
    }
  }
  if (scale) *scale = net;
  return v;
}

bool Echelon::contains(const ZRow& v) const { return is_zero(residual(v)); }

int rank(const ZMat& m, size_t cols) { return Echelon(m, cols).rank(); }

ZMat kernel_basis(const ZMat& m, size_t cols) {
  Echelon e(m, cols);
  const auto& rows = e.rows();
  const auto& pivots = e.pivot_cols();
  const size_t rk = pivots.size();

  std::vector<bool> is_pivot(cols, false);
  for (size_t p : pivots) is_pivot[p] = true;

  ZMat basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<mpq_class> x(cols, mpq_class(0));
    x[free_col] = 1;
    for (size_t ti = rk; ti-- > 0;) {
      const size_t p = pivots[ti];
      mpq_class acc = 0;
      for (size_t j = p + 1; j < cols; ++j) {
        if (x[j] != 0 && rows[ti][j] != 0) acc += mpq_class(rows[ti][j]) * x[j];
      }
      x[p] = -acc / mpq_class(rows[ti][p]);
      x[p].canonicalize();
    }
    // Clear denominators and content.
    mpz_class den = 1;
    for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    ZRow row(cols);
    for (size_t j = 0; j < cols; ++j) {
      mpq_class scaled = x[j] * den;
      scaled.canonicalize();
      row[j] = scaled.get_num();
    }
    normalize_row(row);
    basis.push_back(std::move(row));
  }
  return basis;
}

ZMat scale_rows(const std::vector<std::vector<mpq_class>>& m) {
  ZMat out;
  out.reserve(m.size());
  for (const auto& row : m) {
    mpz_class den = 1;
    for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    ZRow zrow(row.size());
    for (size_t j = 0; j < row.size(); ++j) {
      mpq_class scaled = row[j] * den;
      scaled.canonicalize();
      zrow[j] = scaled.get_num();
    }
    normalize_row(zrow);
    out.push_back(std::move(zrow));
  }
  return out;
}

}  // namespace liaison::exact
