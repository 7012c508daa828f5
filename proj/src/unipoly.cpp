#include "detrs/unipoly.hpp"

#include <algorithm>
#include <set>

#include "detrs/kernels.hpp"

namespace detrs {

UniPoly::UniPoly(FieldPtr f, std::vector<Fe> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(FieldPtr f, Fe c) { return UniPoly(std::move(f), std::vector<Fe>{c}); }

UniPoly UniPoly::monomial(FieldPtr f, Fe c, std::size_t deg) {
  std::vector<Fe> v(deg + 1, Fe{0});
  v[deg] = c;
  return UniPoly(std::move(f), std::move(v));
}

UniPoly UniPoly::linear(FieldPtr f, Fe a) {
  Fe na = f->neg(a);
  return UniPoly(std::move(f), std::vector<Fe>{na, Fe{1}});
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == Fe{0}) c_.pop_back();
}

Fe UniPoly::eval(Fe x) const {
  Fe acc{0};
  for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(f_);
  std::vector<Fe> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = f_->mul(f_->from_u64(i), c_[i]);
  return UniPoly(f_, std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(f_->inv(c_.back()));
}

UniPoly UniPoly::scaled(Fe s) const {
  std::vector<Fe> d(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) d[i] = f_->mul(c_[i], s);
  return UniPoly(f_, std::move(d));
}

UniPoly UniPoly::truncated(std::size_t n) const {
  if (c_.size() <= n) return *this;
  return UniPoly(f_, std::vector<Fe>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
}

UniPoly UniPoly::shifted(Fe a) const {
  // Horner with (X + a): out = out*(X+a) + c_i.
  std::vector<Fe> out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    out.push_back(Fe{0});
    for (std::size_t j = out.size() - 1; j > 0; --j) out[j] = f_->add(out[j - 1], f_->mul(out[j], a));
    out[0] = f_->add(f_->mul(out[0], a), c_[i]);
  }
  return UniPoly(f_, std::move(out));
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  UniPoly acc(f_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(f_, c_[i]);
  return acc;
}

static const FieldPtr& pick_field(const UniPoly& a, const UniPoly& b) {
  if (a.has_field() && b.has_field() && !same_field(a.field_ptr(), b.field_ptr()))
    fail(ErrorKind::FieldMismatch, "polynomials over different fields");
  return a.has_field() ? a.field_ptr() : b.field_ptr();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  const FieldPtr& f = pick_field(a, b);
  std::vector<Fe> c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f->add(a.coeff(i), b.coeff(i));
  return UniPoly(f, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  const FieldPtr& f = pick_field(a, b);
  std::vector<Fe> c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f->sub(a.coeff(i), b.coeff(i));
  return UniPoly(f, std::move(c));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Fe> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field().neg(a.coeff(i));
  return UniPoly(a.field_ptr(), std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  const FieldPtr& f = pick_field(a, b);
  if (a.is_zero() || b.is_zero()) return UniPoly(f);
  return up_mul_trunc(a, b, a.size() + b.size() - 1);
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.has_field() && b.has_field() && !same_field(a.field_ptr(), b.field_ptr())) return false;
  return a.coeffs() == b.coeffs();
}

UniPoly up_mul_trunc(const UniPoly& a, const UniPoly& b, std::size_t n) {
  const FieldPtr& f = pick_field(a, b);
  if (a.is_zero() || b.is_zero() || n == 0) return UniPoly(f);
  int len = static_cast<int>(std::min(n, a.size() + b.size() - 1));
  std::vector<Fe> out(len);
  kernels::mul(*f, {a.coeffs().data(), static_cast<int>(a.size()), 1}, {b.coeffs().data(), static_cast<int>(b.size()), 1},
               len, 1, out.data());
  return UniPoly(f, std::move(out));
}

bool up_lex_less(const UniPoly& a, const UniPoly& b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

DivMod up_divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const FieldPtr& f = pick_field(a, b);
  if (a.degree() < b.degree()) return {UniPoly(f), a};
  std::vector<Fe> r = a.coeffs();
  std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Fe> q(r.size() - db, Fe{0});
  Fe il = f->inv(b.lc());
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == Fe{0}) continue;
    Fe c = f->mul(r[i], il);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f->sub(r[i - db + j], f->mul(c, b.coeff(j)));
  }
  r.resize(db);
  return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

Xgcd up_xgcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::BothZero, "gcd of two zero polynomials");
  const FieldPtr& f = pick_field(a, b);
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(f, f->one()), s1(f);
  UniPoly t0(f), t1 = UniPoly::constant(f, f->one());
  while (!r1.is_zero()) {
    DivMod qr = up_divmod(r0, r1);
    UniPoly s2 = s0 - qr.quot * s1;
    UniPoly t2 = t0 - qr.quot * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Fe il = f->inv(r0.lc());
  return {r0.scaled(il), s0.scaled(il), t0.scaled(il)};
}

UniPoly up_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::BothZero, "gcd of two zero polynomials");
  UniPoly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    UniPoly r = up_divmod(r0, r1).rem;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return r0.monic();
}

namespace {

UniPoly powmod(UniPoly base, u64 e, const UniPoly& m) {
  UniPoly r = UniPoly::constant(m.field_ptr(), Fe{1});
  for (; e; e >>= 1) {
    if (e & 1) r = up_divmod(r * base, m).rem;
    base = up_divmod(base * base, m).rem;
  }
  return r;
}

}  // namespace

bool up_is_irreducible(const UniPoly& p) {
  int d = p.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const FieldPtr& f = p.field_ptr();
  UniPoly x = UniPoly::x(f), h = x;
  // No irreducible factor of degree i <= d/2 means gcd(X^(q^i) - X, p) = 1.
  for (int i = 1; 2 * i <= d; ++i) {
    h = powmod(h, f->order(), p);
    if (up_gcd(h - x, p).degree() > 0) return false;
  }
  return true;
}

UniPoly up_gcd_many(std::span<const UniPoly> polys) {
  std::optional<UniPoly> acc;
  for (const UniPoly& p : polys) {
    if (p.is_zero()) continue;
    acc = acc ? up_gcd(*acc, p) : p.monic();
    if (acc->degree() == 0) break;
  }
  if (!acc) fail(ErrorKind::AllZero, "gcd of an all-zero list");
  return *acc;
}

int up_root_multiplicity(const UniPoly& p, Fe b) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "root multiplicity of zero");
  // Synthetic division by (X - b) until the remainder is nonzero.
  const Field& f = p.field();
  std::vector<Fe> c = p.coeffs();
  int m = 0;
  while (c.size() > 1) {
    std::vector<Fe> q(c.size() - 1);
    Fe acc{0};
    for (std::size_t i = c.size(); i-- > 1;) {
      acc = f.add(f.mul(acc, b), c[i]);
      q[i - 1] = acc;
    }
    Fe rem = f.add(f.mul(acc, b), c[0]);
    if (rem != Fe{0}) break;
    c = std::move(q);
    ++m;
  }
  return m;
}

std::optional<UniPoly> up_interpolate(const FieldPtr& f, std::span<const Point> pts, int k) {
  if (pts.empty()) fail(ErrorKind::PreconditionViolated, "interpolation needs at least one point");
  if (k < 1) fail(ErrorKind::PreconditionViolated, "k must be positive");
  {
    std::set<u64> seen;
    for (const Point& p : pts)
      if (!seen.insert(p.x.v).second) fail(ErrorKind::DuplicateAbscissa, "repeated abscissa");
  }
  std::size_t use = std::min(pts.size(), static_cast<std::size_t>(k));
  // Newton divided differences on the first `use` points.
  std::vector<Fe> dd(use);
  for (std::size_t i = 0; i < use; ++i) dd[i] = pts[i].y;
  for (std::size_t lvl = 1; lvl < use; ++lvl)
    for (std::size_t i = use - 1; i >= lvl; --i) {
      Fe num = f->sub(dd[i], dd[i - 1]);
      Fe den = f->sub(pts[i].x, pts[i - lvl].x);
      dd[i] = f->div(num, den);
      if (i == lvl) break;
    }
  UniPoly acc(f);
  for (std::size_t i = use; i-- > 0;) acc = acc * UniPoly::linear(f, pts[i].x) + UniPoly::constant(f, dd[i]);
  if (acc.degree() > k - 1) return std::nullopt;
  for (std::size_t i = use; i < pts.size(); ++i)
    if (acc.eval(pts[i].x) != pts[i].y) return std::nullopt;
  return acc;
}

}  // namespace detrs
