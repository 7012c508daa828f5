#pragma once

#include <vector>

#include "detrs/gf.hpp"

namespace detrs {

// Dense row-major matrix over a field.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Fe> a;
  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Fe{0}) {}
  Fe& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  Fe at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Reduced row echelon form, columns processed left to right; the pivot row
// for a column is the first remaining row (top-down) with a nonzero entry.
struct Rref {
  Matrix m;
  std::vector<int> pivot_cols;  // pivot column of row i, for i < rank
};
Rref rref(const Field& f, Matrix m);

// Kernel vector with the first free column set to 1 and every other free
// column 0. Throws TrivialKernel when the matrix has full column rank.
std::vector<Fe> solve_nullspace(const Field& f, const Matrix& m);

// One kernel vector per free column, in free-column order.
std::vector<std::vector<Fe>> kernel_basis(const Field& f, const Matrix& m);

}  // namespace detrs
