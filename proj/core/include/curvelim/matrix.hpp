#pragma once

#include <cstdint>
#include <vector>

#include "curvelim/field.hpp"

namespace curvelim {

// Dense matrix over F_p with exact Gaussian elimination.  Row-major storage.
class Matrix {
 public:
  Matrix(int64_t p, int rows, int cols);  // zero-filled

  int64_t modulus() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int64_t at(int r, int c) const { return e_[index(r, c)]; }
  void set(int r, int c, int64_t v) { e_[index(r, c)] = mod_reduce(v, p_); }

  Matrix operator*(const Matrix& o) const;

  bool operator==(const Matrix& o) const = default;

 private:
  size_t index(int r, int c) const;

  int64_t p_;
  int rows_;
  int cols_;
  std::vector<int64_t> e_;
};

// Reduced row echelon form together with the pivot columns.
struct Echelon {
  Matrix rref;
  std::vector<int> pivot_cols;
};
Echelon row_reduce(const Matrix& m);

int matrix_rank(const Matrix& m);

// Basis of the right kernel {v : m v = 0}, one vector per free column of the
// reduced form (unit coordinate at that column), so the result is canonical.
std::vector<std::vector<int64_t>> kernel_basis(const Matrix& m);

}  // namespace curvelim
