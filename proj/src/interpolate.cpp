#include "detrs/interpolate.hpp"

#include <algorithm>
#include <cmath>

namespace detrs {

namespace {

long isqrt(long v) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void check_nk(int n, int k) {
  if (k < 1 || n < k) fail(ErrorKind::PreconditionViolated, "need n >= k >= 1");
}

// Least D with monomial_count(D, k) > need.
int least_degree(long need, int k) {
  int D = 0;
  while (monomial_count(D, k) <= need) ++D;
  return D;
}

}  // namespace

long monomial_count(int D, int k) {
  if (D < 0) return 0;
  if (k == 1) return D + 1;
  long total = 0;
  for (int b = 0; b <= D / (k - 1); ++b) total += D - (k - 1) * b + 1;
  return total;
}

int johnson_threshold(int n, int k) { return static_cast<int>(isqrt(static_cast<long>(k - 1) * n)) + 1; }
int sudan_threshold(int n, int k) { return static_cast<int>(isqrt(2L * (k - 1) * n)) + 1; }

DecodeParams gs_params(int n, int k, int t) {
  check_nk(n, k);
  if (t < 1) fail(ErrorKind::Infeasible, "threshold must be positive");
  long s = static_cast<long>(n) * (k - 1);
  long root = isqrt(s);
  if (root * root < s) ++root;
  // The 2*ceil(sqrt(n(k-1)))+1 cap is too small when t sits just above the
  // bound (n=63, k=2, t=8 needs m=56); (k-1)n+1 covers every case seen.
  int mmax = static_cast<int>(std::max(2 * root + 1, s + 1));
  for (int m = 1; m <= mmax; ++m) {
    long need = static_cast<long>(n) * m * (m + 1) / 2;
    int D = least_degree(need, k);
    bool contains = k == 1 ? true : static_cast<long>(t) * m > D;
    if (contains) return DecodeParams{n, k, t, m, D};
  }
  fail(ErrorKind::Infeasible, "agreement " + std::to_string(t) + " is not above the Johnson bound for n=" +
                                  std::to_string(n) + " k=" + std::to_string(k));
}

DecodeParams sudan_params(int n, int k) {
  check_nk(n, k);
  return DecodeParams{n, k, sudan_threshold(n, k), 1, least_degree(n, k)};
}

ParamMargins param_margins(const DecodeParams& p) {
  long kernel = monomial_count(p.D, p.k) - static_cast<long>(p.n) * p.m * (p.m + 1) / 2;
  long root = p.k == 1 ? static_cast<long>(p.t) * p.m : static_cast<long>(p.t) * p.m - p.D;
  return {kernel, root};
}

std::vector<kernels::Monomial> interpolation_monomials(int D, int k) {
  std::vector<kernels::Monomial> cols;
  if (k == 1) {
    for (int b = 0; b <= D; ++b) cols.push_back({0, b});
    return cols;
  }
  int w = k - 1;
  for (int b = 0; b <= D / w; ++b)
    for (int a = 0; a + w * b <= D; ++a) cols.push_back({a, b});
  std::stable_sort(cols.begin(), cols.end(), [w](const kernels::Monomial& x, const kernels::Monomial& y) {
    int dx = x.a + w * x.b, dy = y.a + w * y.b;
    return dx != dy ? dx < dy : x.b < y.b;
  });
  return cols;
}

Matrix interpolation_matrix(const ReceivedWord& w, const DecodeParams& p) {
  if (static_cast<int>(w.size()) != p.n) fail(ErrorKind::PreconditionViolated, "word length differs from n");
  auto cols = interpolation_monomials(p.D, p.k);
  Matrix m;
  m.rows = p.n * p.m * (p.m + 1) / 2;
  m.cols = static_cast<int>(cols.size());
  m.a = kernels::interp_rows(w.field(), w.alphas(), w.betas(), p.m, cols);
  return m;
}

BiPoly build_interpolation(const ReceivedWord& w, const DecodeParams& p) {
  auto cols = interpolation_monomials(p.D, p.k);
  Matrix m = interpolation_matrix(w, p);
  std::vector<Fe> v;
  try {
    v = solve_nullspace(w.field(), m);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::TrivialKernel) fail(ErrorKind::NoKernel, "interpolation system has no nonzero solution");
    throw;
  }
  int nx = 0, ny = 0;
  for (const auto& c : cols) {
    nx = std::max(nx, c.a + 1);
    ny = std::max(ny, c.b + 1);
  }
  std::vector<Fe> grid(static_cast<std::size_t>(nx) * ny, Fe{0});
  for (std::size_t i = 0; i < cols.size(); ++i) grid[static_cast<std::size_t>(cols[i].b) * nx + cols[i].a] = v[i];
  return BiPoly(w.field_ptr(), nx, ny, std::move(grid));
}

}  // namespace detrs
