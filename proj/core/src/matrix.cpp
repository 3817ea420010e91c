#include "curvelim/matrix.hpp"

#include <stdexcept>
#include <string>

namespace curvelim {

Matrix::Matrix(int64_t p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {
  if (p < 2) throw std::invalid_argument("Matrix: modulus must be at least 2");
  if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
}

size_t Matrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::out_of_range("Matrix: index (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (p_ != o.p_) throw std::invalid_argument("Matrix: mixed moduli");
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
  Matrix r(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      int64_t a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        r.set(i, j, r.at(i, j) + a * o.at(k, j));
      }
    }
  }
  return r;
}

Echelon row_reduce(const Matrix& m) {
  Matrix a = m;
  int64_t p = a.modulus();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot_row = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (a.at(r, col) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != row) {
      for (int c = 0; c < a.cols(); ++c) {
        int64_t t = a.at(row, c);
        a.set(row, c, a.at(pivot_row, c));
        a.set(pivot_row, c, t);
      }
    }
    int64_t inv = inv_mod(a.at(row, col), p);
    for (int c = 0; c < a.cols(); ++c) a.set(row, c, mul_mod(a.at(row, c), inv, p));
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      int64_t factor = a.at(r, col);
      if (factor == 0) continue;
      for (int c = 0; c < a.cols(); ++c) {
        a.set(r, c, sub_mod(a.at(r, c), mul_mod(factor, a.at(row, c), p), p));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {a, pivots};
}

int matrix_rank(const Matrix& m) { return static_cast<int>(row_reduce(m).pivot_cols.size()); }

std::vector<std::vector<int64_t>> kernel_basis(const Matrix& m) {
  Echelon e = row_reduce(m);
  int64_t p = m.modulus();
  int n = m.cols();

  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<std::vector<int64_t>> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    std::vector<int64_t> v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(free_col)] = 1;
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
      int pc = e.pivot_cols[i];
      v[static_cast<size_t>(pc)] = neg_mod(e.rref.at(static_cast<int>(i), free_col), p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace curvelim
