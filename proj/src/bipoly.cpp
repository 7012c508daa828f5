#include "detrs/bipoly.hpp"

#include <algorithm>

#include "detrs/kernels.hpp"

namespace detrs {

BiPoly::BiPoly(FieldPtr f, int nx, int ny, std::vector<Fe> grid) : f_(std::move(f)), nx_(nx), ny_(ny), c_(std::move(grid)) {
  if (static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) != c_.size())
    fail(ErrorKind::DegreeMismatch, "grid size does not match its box");
  trim();
}

void BiPoly::trim() {
  // Shrink Y first (drop zero top slices), then X (drop zero columns).
  while (ny_ > 0) {
    bool zero = true;
    for (int a = 0; a < nx_ && zero; ++a) zero = c_[static_cast<std::size_t>(ny_ - 1) * nx_ + a] == Fe{0};
    if (!zero) break;
    --ny_;
  }
  int newnx = 0;
  for (int b = 0; b < ny_; ++b)
    for (int a = nx_; a-- > newnx;)
      if (c_[static_cast<std::size_t>(b) * nx_ + a] != Fe{0}) {
        newnx = a + 1;
        break;
      }
  if (ny_ == 0 || newnx == 0) {
    nx_ = ny_ = 0;
    c_.clear();
    return;
  }
  if (newnx != nx_) {
    std::vector<Fe> g(static_cast<std::size_t>(newnx) * ny_);
    for (int b = 0; b < ny_; ++b)
      std::copy_n(c_.begin() + static_cast<std::ptrdiff_t>(b) * nx_, newnx, g.begin() + static_cast<std::ptrdiff_t>(b) * newnx);
    c_ = std::move(g);
    nx_ = newnx;
  } else {
    c_.resize(static_cast<std::size_t>(nx_) * ny_);
  }
}

BiPoly BiPoly::constant(FieldPtr f, Fe c) { return BiPoly(std::move(f), 1, 1, {c}); }

BiPoly BiPoly::from_slices(FieldPtr f, const std::vector<UniPoly>& slices) {
  int nx = 0;
  for (const UniPoly& s : slices) nx = std::max(nx, static_cast<int>(s.size()));
  int ny = static_cast<int>(slices.size());
  std::vector<Fe> g(static_cast<std::size_t>(nx) * ny, Fe{0});
  for (int b = 0; b < ny; ++b)
    for (std::size_t a = 0; a < slices[b].size(); ++a) g[static_cast<std::size_t>(b) * nx + a] = slices[b].coeff(a);
  return BiPoly(std::move(f), nx, ny, std::move(g));
}

BiPoly BiPoly::from_x(const UniPoly& p) { return from_slices(p.field_ptr(), {p}); }

BiPoly BiPoly::from_y(const UniPoly& p) {
  std::vector<Fe> g = p.coeffs();
  int ny = static_cast<int>(g.size());
  return BiPoly(p.field_ptr(), ny ? 1 : 0, ny, std::move(g));
}

BiPoly BiPoly::monomial(FieldPtr f, Fe c, int a, int b) {
  std::vector<Fe> g(static_cast<std::size_t>(a + 1) * (b + 1), Fe{0});
  g.back() = c;
  return BiPoly(std::move(f), a + 1, b + 1, std::move(g));
}

BiPoly BiPoly::y_minus(const UniPoly& f) {
  return from_slices(f.field_ptr(), {-f, UniPoly::constant(f.field_ptr(), Fe{1})});
}

int BiPoly::total_degree() const {
  int best = -1;
  for (int b = 0; b < ny_; ++b)
    for (int a = nx_; a-- > 0;)
      if (c_[static_cast<std::size_t>(b) * nx_ + a] != Fe{0}) {
        best = std::max(best, a + b);
        break;
      }
  return best;
}

UniPoly BiPoly::slice(int b) const {
  if (b < 0 || b >= ny_) return UniPoly(f_);
  auto first = c_.begin() + static_cast<std::ptrdiff_t>(b) * nx_;
  return UniPoly(f_, std::vector<Fe>(first, first + nx_));
}

std::vector<UniPoly> BiPoly::slices() const {
  std::vector<UniPoly> out;
  out.reserve(ny_);
  for (int b = 0; b < ny_; ++b) out.push_back(slice(b));
  return out;
}

UniPoly BiPoly::eval_x(Fe alpha) const {
  const Field& f = *f_;
  std::vector<Fe> out(ny_);
  for (int b = 0; b < ny_; ++b) {
    Fe acc{0};
    const Fe* row = c_.data() + static_cast<std::size_t>(b) * nx_;
    for (int a = nx_; a-- > 0;) acc = f.add(f.mul(acc, alpha), row[a]);
    out[b] = acc;
  }
  return UniPoly(f_, std::move(out));
}

Fe BiPoly::eval(Fe alpha, Fe beta) const {
  if (is_zero()) return Fe{0};
  return eval_x(alpha).eval(beta);
}

UniPoly BiPoly::substitute_y(const UniPoly& g) const {
  UniPoly acc(f_);
  for (int b = ny_; b-- > 0;) acc = acc * g + slice(b);
  return acc;
}

BiPoly BiPoly::scaled(Fe s) const {
  std::vector<Fe> g(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) g[i] = f_->mul(c_[i], s);
  return BiPoly(f_, nx_, ny_, std::move(g));
}

BiPoly BiPoly::normalized() const {
  if (is_zero()) return *this;
  Fe lead = lc_y().lc();
  if (lead == Fe{1}) return *this;
  return scaled(f_->inv(lead));
}

namespace {

const FieldPtr& pick(const BiPoly& a, const BiPoly& b) {
  if (a.field_ptr() && b.field_ptr() && !same_field(a.field_ptr(), b.field_ptr()))
    fail(ErrorKind::FieldMismatch, "polynomials over different fields");
  return a.field_ptr() ? a.field_ptr() : b.field_ptr();
}

template <class Op>
BiPoly combine(const BiPoly& a, const BiPoly& b, Op op) {
  const FieldPtr& f = pick(a, b);
  int nx = std::max(a.nx(), b.nx()), ny = std::max(a.ny(), b.ny());
  std::vector<Fe> g(static_cast<std::size_t>(nx) * ny);
  for (int y = 0; y < ny; ++y)
    for (int x = 0; x < nx; ++x) g[static_cast<std::size_t>(y) * nx + x] = op(*f, a.coeff(x, y), b.coeff(x, y));
  return BiPoly(f, nx, ny, std::move(g));
}

kernels::GridView view(const BiPoly& p) { return {p.grid().data(), p.nx(), p.ny()}; }

}  // namespace

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  return combine(a, b, [](const Field& f, Fe x, Fe y) { return f.add(x, y); });
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  return combine(a, b, [](const Field& f, Fe x, Fe y) { return f.sub(x, y); });
}

BiPoly operator-(const BiPoly& a) {
  std::vector<Fe> g(a.grid().size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = a.field().neg(a.grid()[i]);
  return BiPoly(a.field_ptr(), a.nx(), a.ny(), std::move(g));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  const FieldPtr& f = pick(a, b);
  if (a.is_zero() || b.is_zero()) return BiPoly(f);
  return bp_mul_trunc(a, b, a.nx() + b.nx() - 1);
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  if (a.field_ptr() && b.field_ptr() && !same_field(a.field_ptr(), b.field_ptr())) return false;
  return a.nx() == b.nx() && a.ny() == b.ny() && a.grid() == b.grid();
}

BiPoly bp_mul_trunc(const BiPoly& a, const BiPoly& b, int xcap) {
  const FieldPtr& f = pick(a, b);
  if (a.is_zero() || b.is_zero() || xcap <= 0) return BiPoly(f);
  int nx = std::min(xcap, a.nx() + b.nx() - 1), ny = a.ny() + b.ny() - 1;
  std::vector<Fe> out(static_cast<std::size_t>(nx) * ny);
  kernels::mul(*f, view(a), view(b), nx, ny, out.data());
  return BiPoly(f, nx, ny, std::move(out));
}

BiPoly bp_pow(const BiPoly& p, int e) {
  BiPoly r = BiPoly::constant(p.field_ptr(), Fe{1});
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

int bp_wdeg(const BiPoly& p, WDeg w) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "weighted degree of zero");
  int best = 0;
  for (int b = 0; b < p.ny(); ++b)
    for (int a = p.nx(); a-- > 0;)
      if (p.coeff(a, b) != Fe{0}) {
        best = std::max(best, a * w.a_weight + b * w.b_weight);
        break;
      }
  return best;
}

BiPoly bp_hasse(const BiPoly& p, int e1, int e2) {
  if (e1 < 0 || e2 < 0) fail(ErrorKind::PreconditionViolated, "negative derivative order");
  if (p.is_zero() || e1 >= p.nx() || e2 >= p.ny()) return BiPoly(p.field_ptr());
  const Field& f = p.field();
  BinomTable bin(f, static_cast<unsigned>(std::max(p.nx(), p.ny())));
  int nx = p.nx() - e1, ny = p.ny() - e2;
  std::vector<Fe> g(static_cast<std::size_t>(nx) * ny);
  for (int b = 0; b < ny; ++b) {
    Fe cb = bin(b + e2, e2);
    for (int a = 0; a < nx; ++a)
      g[static_cast<std::size_t>(b) * nx + a] = f.mul(f.mul(bin(a + e1, e1), cb), p.coeff(a + e1, b + e2));
  }
  return BiPoly(p.field_ptr(), nx, ny, std::move(g));
}

UniPoly bp_eval(const BiPoly& p, Fe alpha) { return p.eval_x(alpha); }
Fe bp_eval(const BiPoly& p, Fe alpha, Fe beta) { return p.eval(alpha, beta); }

ContentSplit bp_x_content(const BiPoly& p) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "content of zero");
  std::vector<UniPoly> sl = p.slices();
  UniPoly c = up_gcd_many(sl);
  if (c.degree() == 0) return {c, p};
  for (UniPoly& s : sl) s = up_divmod(s, c).quot;
  return {c, BiPoly::from_slices(p.field_ptr(), sl)};
}

namespace {

// F[X][Y] as a vector of X-polynomials, used by the division and gcd code.
using YPoly = std::vector<UniPoly>;

void ytrim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int ydeg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

// Exact division of univariates, nullopt when b does not divide a.
std::optional<UniPoly> udiv_exact(const UniPoly& a, const UniPoly& b) {
  DivMod qr = up_divmod(a, b);
  if (!qr.rem.is_zero()) return std::nullopt;
  return qr.quot;
}

std::optional<YPoly> ydiv_exact(YPoly r, const YPoly& d) {
  const FieldPtr& f = d.back().field_ptr();
  int dd = ydeg(d);
  ytrim(r);
  if (ydeg(r) < dd) {
    if (r.empty()) return YPoly{};
    return std::nullopt;
  }
  YPoly q(static_cast<std::size_t>(ydeg(r) - dd + 1), UniPoly(f));
  for (int i = ydeg(r); i >= dd; --i) {
    if (r[i].is_zero()) continue;
    auto qi = udiv_exact(r[i], d.back());
    if (!qi) return std::nullopt;
    q[i - dd] = *qi;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] = r[i - dd + j] - *qi * d[j];
  }
  for (int i = 0; i < dd; ++i)
    if (!r[i].is_zero()) return std::nullopt;
  ytrim(q);
  return q;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
YPoly prem(YPoly a, const YPoly& b) {
  int db = ydeg(b);
  const UniPoly& lb = b.back();
  int steps = ydeg(a) - db + 1;
  ytrim(a);
  while (ydeg(a) >= db) {
    int da = ydeg(a);
    UniPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - la * b[j];
    ytrim(a);
    --steps;
  }
  if (steps > 0) {
    UniPoly scale = UniPoly::constant(lb.field_ptr(), Fe{1});
    for (int i = 0; i < steps; ++i) scale = scale * lb;
    for (auto& c : a) c = c * scale;
  }
  return a;
}

UniPoly upow(const UniPoly& a, int e) {
  UniPoly r = UniPoly::constant(a.field_ptr(), Fe{1});
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

YPoly to_y(const BiPoly& p) { return p.slices(); }

BiPoly from_y(const FieldPtr& f, const YPoly& p) { return BiPoly::from_slices(f, p); }

YPoly primitive_part(const YPoly& p) {
  UniPoly c = up_gcd_many(p);
  if (c.degree() == 0) return p;
  YPoly out;
  for (const UniPoly& s : p) out.push_back(up_divmod(s, c).quot);
  return out;
}

}  // namespace

std::optional<BiPoly> bp_try_div(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) fail(ErrorKind::DivisionByZero, "bivariate division by zero");
  const FieldPtr& f = pick(p, q);
  if (p.is_zero()) return BiPoly(f);
  if (q.nx() == 1 && q.ny() == 1) return p.scaled(f->inv(q.coeff(0, 0)));
  if (p.deg_y() < q.deg_y() || p.deg_x() < q.deg_x()) return std::nullopt;
  auto r = ydiv_exact(to_y(p), to_y(q));
  if (!r) return std::nullopt;
  return from_y(f, *r);
}

BiPoly bp_exact_div(const BiPoly& p, const BiPoly& q) {
  auto r = bp_try_div(p, q);
  if (!r) fail(ErrorKind::NotDivisible, "divisor does not divide the dividend");
  return *r;
}

BiPoly bp_gcd(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() && q.is_zero()) fail(ErrorKind::BothZero, "gcd of two zero polynomials");
  const FieldPtr& f = pick(p, q);
  if (p.is_zero()) return q.normalized();
  if (q.is_zero()) return p.normalized();

  ContentSplit cp = bp_x_content(p), cq = bp_x_content(q);
  UniPoly d = up_gcd(cp.content, cq.content);
  BiPoly dpoly = BiPoly::from_x(d);
  if (p.deg_y() == 0 || q.deg_y() == 0) return dpoly;

  YPoly a = to_y(cp.primitive), b = to_y(cq.primitive);
  if (ydeg(a) < ydeg(b)) std::swap(a, b);
  if (a == b) return (dpoly * from_y(f, a)).normalized();

  // Subresultant PRS over F[X].
  UniPoly g = UniPoly::constant(f, Fe{1}), h = g;
  YPoly result;
  while (true) {
    int delta = ydeg(a) - ydeg(b);
    YPoly r = prem(a, b);
    if (r.empty()) {
      result = b;
      break;
    }
    if (ydeg(r) == 0) {
      result = {UniPoly::constant(f, Fe{1})};
      break;
    }
    a = std::move(b);
    UniPoly den = g * upow(h, delta);
    for (auto& c : r) c = *udiv_exact(c, den);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      h = *udiv_exact(upow(g, delta), upow(h, delta - 1));
    }
  }
  BiPoly prim = from_y(f, primitive_part(result)).normalized();
  return (dpoly * prim).normalized();
}

UniPoly bp_resultant_y(const BiPoly& p, const BiPoly& q) {
  if (p.deg_y() < 1 || q.deg_y() < 1) fail(ErrorKind::YDegreeZero, "resultant needs positive Y-degree");
  const FieldPtr& f = pick(p, q);
  int m = p.deg_y(), n = q.deg_y(), N = m + n;
  // Sylvester rows: n shifted copies of p, then m shifted copies of q, each
  // written from the highest Y-power down.
  std::vector<std::vector<UniPoly>> M(N, std::vector<UniPoly>(N, UniPoly(f)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = p.slice(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = q.slice(n - j);

  // Bareiss fraction-free elimination; row swaps flip the sign.
  bool negate = false;
  UniPoly prev = UniPoly::constant(f, Fe{1});
  for (int k = 0; k < N - 1; ++k) {
    if (M[k][k].is_zero()) {
      int s = -1;
      for (int i = k + 1; i < N; ++i)
        if (!M[i][k].is_zero()) {
          s = i;
          break;
        }
      if (s < 0) return UniPoly(f);
      std::swap(M[k], M[s]);
      negate = !negate;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        UniPoly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        M[i][j] = up_divmod(num, prev).quot;
      }
      M[i][k] = UniPoly(f);
    }
    prev = M[k][k];
  }
  UniPoly det = M[N - 1][N - 1];
  return negate ? -det : det;
}

BiPoly bp_shift_x(const BiPoly& p, Fe alpha) {
  if (p.is_zero() || alpha == Fe{0}) return p;
  std::vector<UniPoly> sl = p.slices();
  for (UniPoly& s : sl) s = s.shifted(alpha);
  return BiPoly::from_slices(p.field_ptr(), sl);
}

BiPoly bp_mod_xpow(const BiPoly& p, int s) {
  if (s <= 0 || p.is_zero()) return BiPoly(p.field_ptr());
  if (s >= p.nx()) return p;
  std::vector<Fe> g(static_cast<std::size_t>(s) * p.ny());
  for (int b = 0; b < p.ny(); ++b)
    for (int a = 0; a < s; ++a) g[static_cast<std::size_t>(b) * s + a] = p.coeff(a, b);
  return BiPoly(p.field_ptr(), s, p.ny(), std::move(g));
}

bool bp_canonical_less(const BiPoly& a, const BiPoly& b) {
  if (a.deg_y() != b.deg_y()) return a.deg_y() < b.deg_y();
  if (a.deg_x() != b.deg_x()) return a.deg_x() < b.deg_x();
  return a.grid() < b.grid();
}

}  // namespace detrs
