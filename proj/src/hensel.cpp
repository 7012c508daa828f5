#include "detrs/hensel.hpp"

namespace detrs {

HenselSeed hensel_init(const BiPoly& p, Fe alpha, Fe beta) {
  UniPoly s = p.eval_x(alpha);
  if (s.is_zero()) fail(ErrorKind::XSliceZero, "P(alpha, Y) is zero");
  const FieldPtr& f = p.field_ptr();
  HenselSeed seed;
  seed.m = up_root_multiplicity(s, beta);
  UniPoly g = UniPoly::constant(f, f->one());
  UniPoly lin = UniPoly::linear(f, beta);
  for (int i = 0; i < seed.m; ++i) g = g * lin;
  seed.g0 = g;
  seed.h0 = up_divmod(s, g).quot;
  if (seed.m > 0 && seed.m < s.degree()) {
    Xgcd x = up_xgcd(seed.g0, seed.h0);
    seed.a0 = x.u;
    seed.b0 = x.v;
  }
  return seed;
}

namespace {

BiPoly one_like(const BiPoly& p) { return BiPoly::constant(p.field_ptr(), p.field().one()); }

bool zero_mod(const BiPoly& p, int n) { return bp_mod_xpow(p, n).is_zero(); }

void require_invariants(const BiPoly& ps, const HenselState& st, const char* when) {
  if (!hensel_invariants_hold(ps, st))
    fail(ErrorKind::CongruenceBroken, std::string("Hensel congruences fail ") + when);
}

}  // namespace

bool hensel_invariants_hold(const BiPoly& ps, const HenselState& st) {
  int n = 1 << st.level;
  if (!zero_mod(ps - bp_mul_trunc(st.g, st.h, n), n)) return false;
  BiPoly bez = bp_mul_trunc(st.a, st.g, n) + bp_mul_trunc(st.b, st.h, n) - one_like(ps);
  return zero_mod(bez, n);
}

HenselState hensel_start(const BiPoly& p, Fe alpha, Fe beta) {
  HenselSeed seed = hensel_init(p, alpha, beta);
  if (!seed.a0) fail(ErrorKind::PreconditionViolated, "lift needs 0 < m < deg P(alpha, Y)");
  return {alpha, BiPoly::from_y(seed.g0), BiPoly::from_y(seed.h0), BiPoly::from_y(*seed.a0),
          BiPoly::from_y(*seed.b0), 0};
}

HenselState hensel_step(const BiPoly& ps, const HenselState& st, bool truncate) {
  require_invariants(ps, st, "before the step");
  int n = 1 << (st.level + 1);
  auto mul = [&](const BiPoly& x, const BiPoly& y) { return truncate ? bp_mul_trunc(x, y, n) : x * y; };
  auto cut = [&](const BiPoly& x) { return truncate ? bp_mod_xpow(x, n) : x; };
  HenselState nx = st;
  BiPoly e = cut(ps - mul(st.g, st.h));
  nx.g = cut(st.g + mul(st.b, e));
  nx.h = cut(st.h + mul(st.a, e));
  BiPoly q = cut(mul(st.a, nx.g) + mul(st.b, nx.h) - one_like(ps));
  nx.a = cut(st.a - mul(st.a, q));
  nx.b = cut(st.b - mul(st.b, q));
  nx.level = st.level + 1;
  require_invariants(ps, nx, "after the step");
  return nx;
}

HenselLift hensel_lift(const BiPoly& p, Fe alpha, Fe beta, int t) {
  HenselState st = hensel_start(p, alpha, beta);
  BiPoly ps = bp_shift_x(p, alpha);
  for (int i = 0; i < t; ++i) st = hensel_step(ps, st);
  return {st.g, st.h};
}

SeriesDivMod series_divmod_monic(const BiPoly& a, const BiPoly& u, int n) {
  const FieldPtr& f = u.field_ptr();
  int du = u.deg_y();
  if (u.is_zero() || u.slice(du) != UniPoly::constant(f, f->one()))
    fail(ErrorKind::PreconditionViolated, "divisor is not monic in Y");
  std::vector<UniPoly> r = a.slices(), us = u.slices();
  for (UniPoly& s : r) s = s.truncated(n);
  if (static_cast<int>(r.size()) <= du) return {BiPoly(f), BiPoly::from_slices(f, r)};
  std::vector<UniPoly> q(r.size() - du, UniPoly(f));
  for (int j = static_cast<int>(r.size()) - 1; j >= du; --j) {
    if (r[j].is_zero()) continue;
    q[j - du] = r[j];
    for (int i = 0; i < du; ++i) r[j - du + i] = r[j - du + i] - up_mul_trunc(q[j - du], us[i], n);
    r[j] = UniPoly(f);
  }
  r.resize(du);
  return {BiPoly::from_slices(f, q), BiPoly::from_slices(f, r)};
}

MonicLifter::MonicLifter(BiPoly p_shifted, const UniPoly& c0, const UniPoly& u0) : p_(std::move(p_shifted)) {
  if (u0.degree() < 1 || u0.lc() != p_.field().one())
    fail(ErrorKind::PreconditionViolated, "monic factor must be monic of positive degree");
  Xgcd x = up_xgcd(c0, u0);
  if (x.g.degree() != 0) fail(ErrorKind::PreconditionViolated, "seed factors are not coprime");
  c_ = BiPoly::from_y(c0);
  u_ = BiPoly::from_y(u0);
  s_ = BiPoly::from_y(up_divmod(x.u, u0).rem);
}

void MonicLifter::lift_to(int precision) {
  while (prec_ < precision) step();
}

void MonicLifter::step() {
  if (s_stale_) {
    // Newton step for the inverse of c modulo (u, X^prec).
    int m = prec_;
    BiPoly w = series_divmod_monic(bp_mul_trunc(s_, c_, m) - one_like(p_), u_, m).rem;
    s_ = series_divmod_monic(s_ - bp_mul_trunc(s_, w, m), u_, m).rem;
    s_stale_ = false;
  }
  int n = 2 * prec_;
  BiPoly pn = bp_mod_xpow(p_, n);
  BiPoly e = pn - bp_mul_trunc(c_, u_, n);
  u_ = u_ + series_divmod_monic(bp_mul_trunc(s_, e, n), u_, n).rem;
  SeriesDivMod cd = series_divmod_monic(pn, u_, n);
  if (!cd.rem.is_zero()) fail(ErrorKind::CongruenceBroken, "monic lift lost divisibility");
  c_ = cd.quot;
  s_stale_ = true;
  prec_ = n;
}

}  // namespace detrs
