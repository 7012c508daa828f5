#include "detrs/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace detrs::kernels {

namespace {

// Product terms below this count are not worth a parallel region.
constexpr long kParallelWork = 1L << 16;

inline void mul_one_output(const Field& f, const GridView& A, const GridView& B, int a, int b, Fe* out, int xcap) {
  int b1lo = std::max(0, b - (B.ny - 1)), b1hi = std::min(b, A.ny - 1);
  int a1lo = std::max(0, a - (B.nx - 1)), a1hi = std::min(a, A.nx - 1);
  if (f.is_prime_field()) {
    u128 acc = 0;
    u64 batch = f.lazy_batch(), cnt = 0;
    for (int b1 = b1lo; b1 <= b1hi; ++b1) {
      const Fe* ra = A.c + static_cast<std::size_t>(b1) * A.nx;
      const Fe* rb = B.c + static_cast<std::size_t>(b - b1) * B.nx;
      for (int a1 = a1lo; a1 <= a1hi; ++a1) {
        acc += static_cast<u128>(ra[a1].v) * rb[a - a1].v;
        if (++cnt == batch) {
          acc = f.reduce_wide(acc);
          cnt = 1;
        }
      }
    }
    out[static_cast<std::size_t>(b) * xcap + a] = Fe{f.reduce_wide(acc)};
    return;
  }
  Fe acc{0};
  for (int b1 = b1lo; b1 <= b1hi; ++b1) {
    const Fe* ra = A.c + static_cast<std::size_t>(b1) * A.nx;
    const Fe* rb = B.c + static_cast<std::size_t>(b - b1) * B.nx;
    for (int a1 = a1lo; a1 <= a1hi; ++a1) acc = f.add(acc, f.mul(ra[a1], rb[a - a1]));
  }
  out[static_cast<std::size_t>(b) * xcap + a] = acc;
}

long mul_work(GridView a, GridView b, int xcap, int ycap) {
  long x = std::min<long>(xcap, a.nx + b.nx - 1), y = std::min<long>(ycap, a.ny + b.ny - 1);
  return x * y * std::min(a.nx, b.nx) * std::min(a.ny, b.ny);
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

void mul_serial(const Field& f, GridView a, GridView b, int xcap, int ycap, Fe* out) {
  for (int y = 0; y < ycap; ++y)
    for (int x = 0; x < xcap; ++x) mul_one_output(f, a, b, x, y, out, xcap);
}

void mul_omp(const Field& f, GridView a, GridView b, int xcap, int ycap, Fe* out) {
  long total = static_cast<long>(xcap) * ycap;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < total; ++i) {
    int y = static_cast<int>(i / xcap), x = static_cast<int>(i % xcap);
    mul_one_output(f, a, b, x, y, out, xcap);
  }
}

void mul(const Field& f, GridView a, GridView b, int xcap, int ycap, Fe* out) {
  if (max_threads() > 1 && mul_work(a, b, xcap, ycap) >= kParallelWork)
    mul_omp(f, a, b, xcap, ycap, out);
  else
    mul_serial(f, a, b, xcap, ycap, out);
}

namespace {

// Row block for one point: powers of alpha and beta, then one row per (e1,e2).
void fill_point_rows(const Field& f, Fe alpha, Fe beta, const std::vector<Monomial>& cols,
                     const BinomTable& bin, const std::vector<std::pair<int, int>>& orders, Fe* rows) {
  int amax = 0, bmax = 0;
  for (const Monomial& c : cols) {
    amax = std::max(amax, c.a);
    bmax = std::max(bmax, c.b);
  }
  std::vector<Fe> pa(amax + 1), pb(bmax + 1);
  pa[0] = pb[0] = f.one();
  for (int i = 1; i <= amax; ++i) pa[i] = f.mul(pa[i - 1], alpha);
  for (int i = 1; i <= bmax; ++i) pb[i] = f.mul(pb[i - 1], beta);
  std::size_t ncol = cols.size();
  for (std::size_t r = 0; r < orders.size(); ++r) {
    auto [e1, e2] = orders[r];
    Fe* row = rows + r * ncol;
    for (std::size_t c = 0; c < ncol; ++c) {
      int a = cols[c].a, b = cols[c].b;
      if (a < e1 || b < e2) {
        row[c] = f.zero();
        continue;
      }
      Fe v = f.mul(bin(a, e1), bin(b, e2));
      row[c] = f.mul(v, f.mul(pa[a - e1], pb[b - e2]));
    }
  }
}

std::vector<std::pair<int, int>> derivative_orders(int m) {
  std::vector<std::pair<int, int>> o;
  for (int s = 0; s < m; ++s)
    for (int e1 = s; e1 >= 0; --e1) o.emplace_back(e1, s - e1);
  return o;
}

unsigned binom_limit(const std::vector<Monomial>& cols) {
  int mx = 0;
  for (const Monomial& c : cols) mx = std::max({mx, c.a, c.b});
  return static_cast<unsigned>(mx);
}

}  // namespace

std::vector<Fe> interp_rows_serial(const Field& f, const std::vector<Fe>& alphas, const std::vector<Fe>& betas, int m,
                                   const std::vector<Monomial>& cols) {
  auto orders = derivative_orders(m);
  BinomTable bin(f, binom_limit(cols));
  std::size_t per = orders.size() * cols.size();
  std::vector<Fe> out(alphas.size() * per);
  for (std::size_t j = 0; j < alphas.size(); ++j)
    fill_point_rows(f, alphas[j], betas[j], cols, bin, orders, out.data() + j * per);
  return out;
}

std::vector<Fe> interp_rows_omp(const Field& f, const std::vector<Fe>& alphas, const std::vector<Fe>& betas, int m,
                                const std::vector<Monomial>& cols) {
  auto orders = derivative_orders(m);
  BinomTable bin(f, binom_limit(cols));
  std::size_t per = orders.size() * cols.size();
  std::vector<Fe> out(alphas.size() * per);
  long n = static_cast<long>(alphas.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n; ++j)
    fill_point_rows(f, alphas[j], betas[j], cols, bin, orders, out.data() + j * per);
  return out;
}

std::vector<Fe> interp_rows(const Field& f, const std::vector<Fe>& alphas, const std::vector<Fe>& betas, int m,
                            const std::vector<Monomial>& cols) {
  long work = static_cast<long>(alphas.size()) * m * (m + 1) / 2 * static_cast<long>(cols.size());
  if (max_threads() > 1 && work >= kParallelWork) return interp_rows_omp(f, alphas, betas, m, cols);
  return interp_rows_serial(f, alphas, betas, m, cols);
}

namespace {

int agreement_of(const Field& f, u64 index, const std::vector<Fe>& alphas, const std::vector<Fe>& betas, int k,
                 std::vector<Fe>& coef) {
  u64 q = f.order();
  for (int i = 0; i < k; ++i) {
    coef[i] = f.element(index % q);
    index /= q;
  }
  int agree = 0;
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    Fe acc{0};
    for (int i = k; i-- > 0;) acc = f.add(f.mul(acc, alphas[j]), coef[i]);
    if (acc == betas[j]) ++agree;
  }
  return agree;
}

u64 candidate_count(const Field& f, int k) {
  u128 total = 1;
  for (int i = 0; i < k; ++i) {
    total *= f.order();
    if (total > (u128{1} << 40)) fail(ErrorKind::TooLarge, "candidate space too large");
  }
  return static_cast<u64>(total);
}

}  // namespace

std::vector<int> agreement_table_serial(const Field& f, const std::vector<Fe>& alphas, const std::vector<Fe>& betas,
                                        int k) {
  u64 total = candidate_count(f, k);
  std::vector<int> out(total);
  std::vector<Fe> coef(k);
  for (u64 i = 0; i < total; ++i) out[i] = agreement_of(f, i, alphas, betas, k, coef);
  return out;
}

std::vector<int> agreement_table_omp(const Field& f, const std::vector<Fe>& alphas, const std::vector<Fe>& betas,
                                     int k) {
  u64 total = candidate_count(f, k);
  std::vector<int> out(total);
#pragma omp parallel
  {
    std::vector<Fe> coef(k);
#pragma omp for schedule(static)
    for (long i = 0; i < static_cast<long>(total); ++i)
      out[i] = agreement_of(f, static_cast<u64>(i), alphas, betas, k, coef);
  }
  return out;
}

std::vector<int> agreement_table(const Field& f, const std::vector<Fe>& alphas, const std::vector<Fe>& betas, int k) {
  u64 total = candidate_count(f, k);
  if (max_threads() > 1 && total * alphas.size() >= static_cast<u64>(kParallelWork))
    return agreement_table_omp(f, alphas, betas, k);
  return agreement_table_serial(f, alphas, betas, k);
}

}  // namespace detrs::kernels
