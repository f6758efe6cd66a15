#include "eddeg/linalg.hpp"

#include "eddeg/errors.hpp"

namespace eddeg {

QMat identity_matrix(std::size_t n) {
  QMat m(n, QVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

QMat matrix_product(const QMat& a, const QMat& b) {
  const std::size_t r = a.size(), k = b.size(), c = b[0].size();
  QMat out(r, QVec(c, Rational(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Rational s(0);
      for (std::size_t l = 0; l < k; ++l) s += a[i][l] * b[l][j];
      out[i][j] = s;
    }
  return out;
}

QVec matrix_vector(const QMat& a, const QVec& v) {
  QVec out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < v.size(); ++j) s += a[i][j] * v[j];
    out[i] = s;
  }
  return out;
}

std::size_t matrix_rank(QMat a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    Rational inv = a[rank][col].inverse();
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

QMat matrix_inverse(const QMat& a) {
  const std::size_t n = a.size();
  QMat work = a;
  QMat inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw DivisionByZero("matrix is singular");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    Rational f = work[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work[i][col].is_zero()) continue;
      Rational g = work[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[i][j] -= g * work[col][j];
        inv[i][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

QVec kernel_vector_3x4(const QMat& a) {
  // Row reduce, then back-substitute the single free column.
  QMat m = a;
  const std::size_t rows = 3, cols = 4;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    Rational inv = m[rank][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank != 3) throw InternalError("kernel_vector_3x4 expects a rank-3 matrix");
  std::size_t free_col = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    bool is_pivot = false;
    for (auto pc : pivot_col) is_pivot = is_pivot || pc == col;
    if (!is_pivot) free_col = col;
  }
  QVec v(cols, Rational(0));
  v[free_col] = Rational(1);
  for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free_col];
  return v;
}

bool proportional(const QVec& a, const QVec& b) {
  // Cross-ratios: a_i b_j == a_j b_i for all i < j.
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace eddeg
