#include "detrs/split.hpp"

#include <algorithm>
#include <bit>

#include "detrs/hensel.hpp"
#include "detrs/linalg.hpp"

namespace detrs {

bool is_useless(const BiPoly& g, std::span<const Fe> alphas) {
  for (Fe a : alphas)
    if (g.eval_x(a).degree() == 0) return true;
  return false;
}

StabilityVerdict is_stable(const BiPoly& p, Fe alpha, Fe beta) {
  StabilityVerdict v;
  UniPoly s = p.eval_x(alpha);
  if (s.degree() < 1) return v;
  if (up_root_multiplicity(s, beta) == s.degree()) {
    v.stable = true;
    v.mode = StableMode::ALike;
  } else if (s.eval(beta) != Fe{0}) {
    v.stable = true;
    v.mode = StableMode::BLike;
  }
  return v;
}

StabilityVerdict is_stable(const BiPoly& p, const ReceivedWord& w) {
  for (std::size_t j = 0; j < w.size(); ++j)
    if (!is_stable(p, w[j].x, w[j].y).stable) return {false, j, std::nullopt};
  return {true, std::nullopt, std::nullopt};
}

int split_lift_depth(const BiPoly& p) {
  u64 d = static_cast<u64>(std::max({p.deg_x(), p.deg_y(), 2}));
  u64 bound = 2 * d * d + 1;
  return static_cast<int>(std::bit_width(bound - 1)) + 1;  // ceil(log2(bound)) + 1
}

namespace {

BiPoly unit(const FieldPtr& f) { return BiPoly::constant(f, f->one()); }

// Y^b rem u modulo X^n for b < count.
std::vector<BiPoly> y_power_residues(const BiPoly& u, int n, int count) {
  const FieldPtr& f = u.field_ptr();
  BiPoly y = BiPoly::monomial(f, f->one(), 0, 1);
  std::vector<BiPoly> out;
  BiPoly cur = unit(f);
  for (int b = 0; b < count; ++b) {
    out.push_back(cur);
    cur = series_divmod_monic(cur * y, u, n).rem;
  }
  return out;
}

// Monomials X^a Y^b allowed in V: a <= deg_X P, b < deg_Y P and total
// degree below that of P. Every P/g with deg_Y g >= 1 fits.
std::vector<std::pair<int, int>> membership_box(const BiPoly& p) {
  std::vector<std::pair<int, int>> box;
  int td = p.total_degree();
  for (int b = 0; b < p.deg_y(); ++b)
    for (int a = 0; a <= std::min(p.deg_x(), td - 1 - b); ++a) box.push_back({a, b});
  return box;
}

// Nonzero V supported on the box with V rem u = 0 modulo X^n, from the
// canonical kernel vector; nothing if there is none.
std::optional<BiPoly> member_of_ideal(const BiPoly& p, const BiPoly& u, int n) {
  const FieldPtr& f = p.field_ptr();
  int du = u.deg_y();
  std::vector<std::pair<int, int>> box = membership_box(p);
  std::vector<BiPoly> res = y_power_residues(u, n, p.deg_y());
  Matrix m(n * du, static_cast<int>(box.size()));
  for (std::size_t col = 0; col < box.size(); ++col) {
    auto [a, b] = box[col];
    const BiPoly& r = res[b];
    for (int j = 0; j < r.ny(); ++j)
      for (int i = 0; i < r.nx() && i + a < n; ++i) m.at(j * n + i + a, static_cast<int>(col)) = r.coeff(i, j);
  }
  std::vector<Fe> v;
  try {
    v = solve_nullspace(*f, m);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TrivialKernel) throw;
    return std::nullopt;
  }
  std::vector<Fe> g(static_cast<std::size_t>(p.deg_x() + 1) * p.deg_y(), Fe{0});
  for (std::size_t col = 0; col < box.size(); ++col) g[box[col].second * (p.deg_x() + 1) + box[col].first] = v[col];
  return BiPoly(f, p.deg_x() + 1, p.deg_y(), std::move(g));
}

// Slices are probed at a few abscissae other than the point itself.
constexpr u64 kIrreducibilityProbes = 4;

// P(a, Y) irreducible of full degree deg_Y P, for a probed a != 0, means P
// has no factor with 1 <= deg_Y < deg_Y P (leading coefficients multiply,
// so such a factor would split that slice). P is content-free here.
bool has_irreducible_slice(const BiPoly& p) {
  const Field& f = p.field();
  for (u64 i = 1; i < f.order() && i <= kIrreducibilityProbes; ++i) {
    UniPoly s = p.eval_x(f.element(i));
    if (s.degree() == p.deg_y() && up_is_irreducible(s)) return true;
  }
  return false;
}

struct Splitter {
  SplitStats* stats;

  SplitOutcome finish(BiPoly p1, BiPoly p2) { return {p1.normalized(), p2.normalized()}; }

  // Factor of P with 1 <= deg_Y < deg_Y P visible through the lift, or
  // nothing when the ideal contains no admissible V at full precision.
  std::optional<BiPoly> factor_via(const BiPoly& p, MonicLifter& lift) {
    int cap = 1 << split_lift_depth(p);
    int du = lift.monic().deg_y();
    int unknowns = static_cast<int>(membership_box(p).size());
    int n = static_cast<int>(std::bit_ceil(static_cast<unsigned>(std::max(2, (unknowns + du - 1) / du))));
    n = std::min(n, cap);
    for (;; n *= 2) {
      lift.lift_to(n);
      if (stats) {
        ++stats->systems;
        stats->max_precision = std::max(stats->max_precision, n);
      }
      std::optional<BiPoly> v = member_of_ideal(p, lift.monic(), n);
      if (!v) return std::nullopt;
      BiPoly g = bp_gcd(p, *v);
      if (g.deg_y() >= 1) return g;
      if (n >= cap) fail(ErrorKind::PreconditionViolated, "membership solution without a common factor");
    }
  }

  // P is shifted so the point is (0, beta).
  SplitOutcome run(const BiPoly& p0, Fe beta) {
    if (stats) ++stats->splits;
    const FieldPtr& f = p0.field_ptr();
    BiPoly p = bp_x_content(p0).primitive;
    UniPoly s = p.eval_x(Fe{0});
    if (s.is_zero()) fail(ErrorKind::XSliceZero, "slice vanishes after content removal");
    if (s.degree() == 0) return {unit(f), unit(f)};
    int m = up_root_multiplicity(s, beta);
    if (m == s.degree()) return finish(p, unit(f));
    if (m == 0) return finish(unit(f), p);

    if (has_irreducible_slice(p)) return {unit(f), unit(f)};
    if (stats) ++stats->lifts;
    UniPoly g0 = UniPoly::constant(f, f->one());
    for (int i = 0; i < m; ++i) g0 = g0 * UniPoly::linear(f, beta);
    UniPoly h0 = up_divmod(s, g0).quot;
    {
      Fe lc = h0.lc();
      MonicLifter lift(p, g0.scaled(lc), h0.monic());
      if (auto r = factor_via(p, lift)) return combine(p, *r, beta);
    }
    {
      MonicLifter lift(p, h0, g0);
      if (auto r = factor_via(p, lift)) return combine(p, *r, beta);
    }
    return {unit(f), unit(f)};
  }

  SplitOutcome combine(const BiPoly& p, const BiPoly& g, Fe beta) {
    if (g.deg_y() < 1 || g.deg_y() >= p.deg_y())
      fail(ErrorKind::PreconditionViolated, "combine needs 1 <= deg_Y g < deg_Y P");
    std::optional<BiPoly> rest = bp_try_div(p, g);
    if (!rest) fail(ErrorKind::NotDivisible, "g does not divide P");
    SplitOutcome a = run(g, beta), b = run(*rest, beta);
    return finish(a.p1 * b.p1, a.p2 * b.p2);
  }
};

SplitOutcome unshift(SplitOutcome o, Fe alpha, const Field& f) {
  Fe back = f.neg(alpha);
  return {bp_shift_x(o.p1, back).normalized(), bp_shift_x(o.p2, back).normalized()};
}

}  // namespace

SplitOutcome split(const BiPoly& p, Fe alpha, Fe beta, SplitStats* stats) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "split of zero");
  Splitter s{stats};
  return unshift(s.run(bp_shift_x(p, alpha), beta), alpha, p.field());
}

SplitOutcome combine_splits(const BiPoly& p, const BiPoly& g, Fe alpha, Fe beta, SplitStats* stats) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "split of zero");
  Splitter s{stats};
  return unshift(s.combine(bp_shift_x(p, alpha), bp_shift_x(g, alpha), beta), alpha, p.field());
}

std::optional<BiPoly> solve_factor_system(const BiPoly& known, const BiPoly& p, int t, int ycap) {
  const FieldPtr& f = p.field_ptr();
  if (ycap < p.deg_y()) fail(ErrorKind::PreconditionViolated, "ycap below deg_Y P");
  long n = 1L << t;
  long res_bound = static_cast<long>(p.deg_x()) * (2L * p.deg_y() - 1);
  if (n <= res_bound) fail(ErrorKind::PreconditionViolated, "2^t does not exceed the resultant degree bound");
  int nxv = p.deg_x() + 1, nyv = p.deg_y();
  int ncv = nxv * nyv;
  long ncu = n * (ycap + 1);
  int rows_y = ycap + known.ny();
  long cols = ncv + ncu;
  if (n * rows_y * cols > (1L << 28)) fail(ErrorKind::TooLarge, "factor system too large");
  Matrix m(static_cast<int>(n * rows_y), static_cast<int>(cols));
  auto row = [&](long i, int j) { return static_cast<int>(j * n + i); };
  // -V columns
  for (int b = 0; b < nyv; ++b)
    for (int a = 0; a < nxv; ++a) m.at(row(a, b), b * nxv + a) = f->neg(f->one());
  // U columns: X^a Y^b * known
  for (int b = 0; b <= ycap; ++b)
    for (long a = 0; a < n; ++a) {
      int col = static_cast<int>(ncv + b * n + a);
      for (int kb = 0; kb < known.ny(); ++kb)
        for (int ka = 0; ka < known.nx() && a + ka < n; ++ka) m.at(row(a + ka, b + kb), col) = known.coeff(ka, kb);
    }
  std::vector<Fe> v;
  try {
    v = solve_nullspace(*f, m);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TrivialKernel) throw;
    return std::nullopt;
  }
  // A nonzero kernel vector always has V != 0: U*known = 0 mod X^n forces
  // U = 0 because known has a nonzero X^0 part and deg_X U < n.
  v.resize(ncv);
  return BiPoly(f, nxv, nyv, std::move(v));
}

}  // namespace detrs
