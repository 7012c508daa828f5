#include "detrs/reference_oracle.hpp"

#include <algorithm>

#include "detrs/kernels.hpp"
#include "detrs/newton_sudan.hpp"

namespace detrs::oracle {

namespace {

u64 space_size(const Field& f, int k, u64 bound) {
  u128 total = 1;
  for (int i = 0; i < k; ++i) {
    total *= f.order();
    if (total > bound) fail(ErrorKind::TooLarge, "candidate space exceeds the brute-force bound");
  }
  return static_cast<u64>(total);
}

UniPoly candidate(const FieldPtr& f, u64 index, int k) {
  std::vector<Fe> c(k);
  for (int i = 0; i < k; ++i) {
    c[i] = f->element(index % f->order());
    index /= f->order();
  }
  return UniPoly(f, std::move(c));
}

}  // namespace

std::vector<UniPoly> brute_list_decode(const ReceivedWord& w, int k, int t, u64 bound) {
  const FieldPtr& f = w.field_ptr();
  space_size(*f, k, bound);
  std::vector<int> agree = kernels::agreement_table(*f, w.alphas(), w.betas(), k);
  std::vector<UniPoly> out;
  for (u64 i = 0; i < agree.size(); ++i)
    if (agree[i] >= t) out.push_back(candidate(f, i, k));
  canonical_sort(out);
  return out;
}

std::vector<UniPoly> brute_linear_factors(const BiPoly& q, int k, u64 bound) {
  const FieldPtr& f = q.field_ptr();
  u64 total = space_size(*f, k, bound);
  std::vector<UniPoly> out;
  for (u64 i = 0; i < total; ++i) {
    UniPoly c = candidate(f, i, k);
    if (q.substitute_y(c).is_zero()) out.push_back(c);
  }
  canonical_sort(out);
  return out;
}

namespace {

// Smallest-total-degree normalized divisor of p of total degree d, if any.
std::optional<BiPoly> divisor_of_degree(const BiPoly& p, int d) {
  const FieldPtr& f = p.field_ptr();
  std::vector<std::pair<int, int>> mons;
  for (int b = 0; b <= d; ++b)
    for (int a = 0; a + b <= d; ++a) mons.emplace_back(a, b);
  u64 q = f->order();
  u128 total = 1;
  for (std::size_t i = 0; i < mons.size(); ++i) total *= q;
  for (u64 idx = 0; idx < static_cast<u64>(total); ++idx) {
    std::vector<Fe> grid((d + 1) * (d + 1), Fe{0});
    u64 r = idx;
    for (auto [a, b] : mons) {
      grid[b * (d + 1) + a] = f->element(r % q);
      r /= q;
    }
    BiPoly c(f, d + 1, d + 1, std::move(grid));
    if (c.is_zero() || c.total_degree() != d || !(c.normalized() == c)) continue;
    if (bp_try_div(p, c)) return c;
  }
  return std::nullopt;
}

}  // namespace

Factorization brute_factor(const BiPoly& p) {
  const FieldPtr& f = p.field_ptr();
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "factorization of zero");
  if (f->order() > 7 || p.total_degree() > 4) fail(ErrorKind::TooLarge, "brute factorization needs q <= 7, degree <= 4");
  Factorization fz;
  fz.unit = p.coeff(p.lc_y().degree(), p.deg_y());
  BiPoly rest = p.normalized();
  while (rest.total_degree() > 0) {
    std::optional<BiPoly> div;
    for (int d = 1; d <= rest.total_degree() / 2 && !div; ++d) div = divisor_of_degree(rest, d);
    if (!div) div = rest;
    fz.factors.push_back(*div);
    rest = bp_exact_div(rest, *div).normalized();
  }
  std::sort(fz.factors.begin(), fz.factors.end(), bp_canonical_less);
  if (!(multiply_out(fz, f) == p)) fail(ErrorKind::PreconditionViolated, "factorization does not multiply back");
  return fz;
}

BiPoly multiply_out(const Factorization& fz, const FieldPtr& f) {
  BiPoly acc = BiPoly::constant(f, fz.unit);
  for (const BiPoly& g : fz.factors) acc = acc * g;
  return acc;
}

FactorClass classify(const BiPoly& g, Fe alpha, Fe beta) {
  UniPoly s = g.eval_x(alpha);
  if (s.is_zero()) return FactorClass::PureX;
  if (s.degree() == 0) return FactorClass::D;
  if (up_root_multiplicity(s, beta) == s.degree()) return FactorClass::A;
  if (s.eval(beta) != Fe{0}) return FactorClass::B;
  return FactorClass::C;
}

ClassParts class_parts(const Factorization& fz, const FieldPtr& f, Fe alpha, Fe beta) {
  BiPoly one = BiPoly::constant(f, f->one());
  ClassParts parts{one, one, one, one};
  for (const BiPoly& g : fz.factors) {
    switch (classify(g, alpha, beta)) {
      case FactorClass::A: parts.a = parts.a * g; break;
      case FactorClass::B: parts.b = parts.b * g; break;
      case FactorClass::C: parts.c = parts.c * g; break;
      case FactorClass::D: parts.d = parts.d * g; break;
      case FactorClass::PureX: fail(ErrorKind::PreconditionViolated, "pure-X factor in a content-free input");
    }
  }
  return parts;
}

bool split_matches(const SplitOutcome& out, const ClassParts& parts) {
  if (out.p1.is_zero() || out.p2.is_zero()) return false;
  std::optional<BiPoly> r1 = bp_try_div(out.p1, parts.a);
  std::optional<BiPoly> r2 = bp_try_div(out.p2, parts.b);
  if (!r1 || !r2) return false;
  return bp_try_div(parts.d, *r1 * *r2).has_value();
}

namespace {

UniPoly series_inverse(const UniPoly& d, int n) {
  const Field& f = d.field();
  Fe i0 = f.inv(d.coeff(0));
  std::vector<Fe> g(n, Fe{0});
  g[0] = i0;
  for (int i = 1; i < n; ++i) {
    Fe acc{0};
    for (int j = 1; j <= i; ++j) acc = f.add(acc, f.mul(d.coeff(j), g[i - j]));
    g[i] = f.neg(f.mul(acc, i0));
  }
  return UniPoly(d.field_ptr(), std::move(g));
}

}  // namespace

std::optional<UniPoly> newton_quadratic(const BiPoly& q, Fe alpha, Fe beta, int s) {
  const FieldPtr& f = q.field_ptr();
  BiPoly qs = bp_shift_x(q, alpha);
  BiPoly dq = bp_hasse(qs, 0, 1);
  if (qs.eval(Fe{0}, beta) != Fe{0} || dq.eval(Fe{0}, beta) == Fe{0}) return std::nullopt;
  UniPoly phi = UniPoly::constant(f, beta);
  for (int prec = 1; prec < s;) {
    int next = std::min(2 * prec, s);
    UniPoly num = qs.substitute_y(phi).truncated(next);
    UniPoly den = dq.substitute_y(phi).truncated(next);
    phi = (phi - up_mul_trunc(num, series_inverse(den, next), next)).truncated(next);
    prec = next;
  }
  return phi.truncated(s);
}

}  // namespace detrs::oracle
