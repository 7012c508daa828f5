#include "detrs/newton_sudan.hpp"

#include <algorithm>

namespace detrs {

namespace {

// Q(X, phi(X)) mod X^n for Q already shifted to the lift center.
UniPoly eval_series(const BiPoly& qs, const UniPoly& phi, std::size_t n) {
  UniPoly acc(qs.field_ptr());
  for (int b = qs.deg_y(); b >= 0; --b) acc = ((acc * phi).truncated(n) + qs.slice(b).truncated(n));
  return acc.truncated(n);
}

LiftState step_shifted(const BiPoly& qs, const LiftState& st) {
  const Field& f = qs.field();
  std::size_t s = static_cast<std::size_t>(st.precision);
  UniPoly r = eval_series(qs, st.phi, s + 1);
  for (std::size_t i = 0; i < s; ++i)
    if (r.coeff(i) != Fe{0}) fail(ErrorKind::PreconditionViolated, "lift congruence does not hold");
  // Only the X^s coefficient of the residual is new; the rest vanished.
  Fe corr = f.div(r.coeff(s), st.denom);
  UniPoly next = st.phi - UniPoly::monomial(qs.field_ptr(), corr, s);
  return LiftState{st.alpha, next.truncated(s + 1), st.precision + 1, st.denom};
}

}  // namespace

LiftState newton_init(const BiPoly& q, Fe alpha, Fe beta) {
  if (q.eval(alpha, beta) != Fe{0}) fail(ErrorKind::BadSeed, "seed is not a zero of Q");
  Fe d = bp_hasse(q, 0, 1).eval(alpha, beta);
  if (d == Fe{0}) fail(ErrorKind::BadSeed, "Y-derivative vanishes at the seed");
  return LiftState{alpha, UniPoly::constant(q.field_ptr(), beta), 1, d};
}

LiftState newton_step(const BiPoly& q, const LiftState& st) {
  if (st.denom == Fe{0}) fail(ErrorKind::PreconditionViolated, "zero denominator");
  return step_shifted(bp_shift_x(q, st.alpha), st);
}

std::optional<UniPoly> newton_recover(const BiPoly& q, Fe alpha, Fe beta, int k) {
  LiftState st = newton_init(q, alpha, beta);
  BiPoly qs = bp_shift_x(q, alpha);
  try {
    for (int i = 1; i <= k - 1; ++i) st = step_shifted(qs, st);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PreconditionViolated) return std::nullopt;
    throw;
  }
  return st.phi.truncated(static_cast<std::size_t>(k)).shifted(q.field().neg(alpha));
}

void canonical_sort(std::vector<UniPoly>& list) {
  std::sort(list.begin(), list.end(), up_lex_less);
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

namespace {

struct SudanRun {
  const ReceivedWord& original;
  int k;
  int threshold;
  SudanReport& rep;

  bool acceptable(const UniPoly& f) const { return f.degree() <= k - 1 && agreement(f, original) >= threshold; }

  // One call of the recursive procedure; `active` lists the surviving
  // indices of the original word.
  void run(const BiPoly& q, std::vector<std::size_t> active, int level) {
    rep.depth = std::max(rep.depth, level + 1);
    if (active.empty() || q.is_zero()) return;
    const FieldPtr& fp = original.field_ptr();

    std::vector<Point> pts;
    for (std::size_t j : active) pts.push_back(original[j]);
    if (auto f = up_interpolate(fp, pts, k)) {
      if (level == 0) rep.shortcut = true;
      if (acceptable(*f)) rep.list.push_back(*f);
      return;
    }
    if (q.deg_y() < 1) return;
    if (q.deg_y() == 1) {
      DivMod qr = up_divmod(-q.slice(0), q.slice(1));
      if (qr.rem.is_zero() && acceptable(qr.quot)) rep.list.push_back(qr.quot);
      return;
    }

    BiPoly p = bp_hasse(q, 0, 1);
    std::vector<std::size_t> rest;
    for (std::size_t j : active) {
      const Point& pt = original[j];
      if (p.eval(pt.x, pt.y) == Fe{0}) {
        rest.push_back(j);
        continue;
      }
      std::optional<UniPoly> cand = newton_recover(q, pt.x, pt.y, k);
      bool ok = cand && acceptable(*cand);
      if (ok) rep.list.push_back(*cand);
      rep.trace.push_back(SudanEvent{level, j, cand, ok});
    }
    run(p, std::move(rest), level + 1);
  }
};

}  // namespace

SudanReport sudan_decode_report(const ReceivedWord& w, int k) {
  int n = static_cast<int>(w.size());
  SudanReport rep;
  if (k < 1) fail(ErrorKind::PreconditionViolated, "k must be positive");
  int t = sudan_threshold(n, k);
  if (t > n) {
    // No polynomial can reach the threshold; nothing to interpolate.
    rep.params = DecodeParams{n, k, t, 1, 0};
    return rep;
  }
  rep.params = sudan_params(n, k);
  if (k >= 2 && rep.params.t <= rep.params.D)
    fail(ErrorKind::Infeasible, "agreement threshold does not exceed the interpolation degree");
  std::vector<std::size_t> all(w.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;

  std::vector<Point> pts = w.points();
  if (auto f = up_interpolate(w.field_ptr(), pts, k)) {
    rep.shortcut = true;
    if (agreement(*f, w) >= rep.params.t) rep.list.push_back(*f);
    return rep;
  }
  rep.q = build_interpolation(w, rep.params);
  SudanRun run{w, k, rep.params.t, rep};
  run.run(rep.q, all, 0);
  canonical_sort(rep.list);
  return rep;
}

std::vector<UniPoly> sudan_decode(const ReceivedWord& w, int k) { return sudan_decode_report(w, k).list; }

}  // namespace detrs
