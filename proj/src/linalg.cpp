#include "detrs/linalg.hpp"

#include <utility>

namespace detrs {

Rref rref(const Field& f, Matrix m) {
  Rref out;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != Fe{0}) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Fe inv = f.inv(m.at(r, c));
    Fe* pr = &m.at(r, 0);
    for (int j = c; j < m.cols; ++j) pr[j] = f.mul(pr[j], inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      Fe* ri = &m.at(i, 0);
      Fe s = ri[c];
      if (s == Fe{0}) continue;
      for (int j = c; j < m.cols; ++j)
        if (pr[j] != Fe{0}) ri[j] = f.sub(ri[j], f.mul(s, pr[j]));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

namespace {

std::vector<Fe> kernel_vector(const Field& f, const Rref& e, int free_col) {
  const Matrix& m = e.m;
  std::vector<Fe> v(m.cols, Fe{0});
  v[free_col] = f.one();
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = f.neg(m.at(static_cast<int>(i), free_col));
  return v;
}

std::vector<int> free_columns(const Rref& e, int cols) {
  std::vector<int> fc;
  std::size_t p = 0;
  for (int c = 0; c < cols; ++c) {
    if (p < e.pivot_cols.size() && e.pivot_cols[p] == c) {
      ++p;
      continue;
    }
    fc.push_back(c);
  }
  return fc;
}

}  // namespace

std::vector<Fe> solve_nullspace(const Field& f, const Matrix& m) {
  Rref e = rref(f, m);
  std::vector<int> fc = free_columns(e, m.cols);
  if (fc.empty()) fail(ErrorKind::TrivialKernel, "matrix has full column rank");
  return kernel_vector(f, e, fc.front());
}

std::vector<std::vector<Fe>> kernel_basis(const Field& f, const Matrix& m) {
  Rref e = rref(f, m);
  std::vector<std::vector<Fe>> out;
  for (int c : free_columns(e, m.cols)) out.push_back(kernel_vector(f, e, c));
  return out;
}

}  // namespace detrs
