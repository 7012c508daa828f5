#include "detrs/rs_model.hpp"

#include <algorithm>
#include <set>

namespace detrs {

RSCode make_code(FieldPtr f, std::vector<Fe> points, int k) {
  std::set<u64> seen;
  for (Fe a : points) {
    if (a.v >= f->order()) fail(ErrorKind::InvalidWord, "evaluation point outside the field");
    if (!seen.insert(a.v).second) fail(ErrorKind::InvalidWord, "repeated evaluation point");
  }
  if (k < 1 || static_cast<std::size_t>(k) > points.size())
    fail(ErrorKind::InvalidWord, "need 1 <= k <= n");
  return RSCode{std::move(f), std::move(points), k};
}

std::vector<Fe> first_points(const Field& f, std::size_t n) {
  if (n > f.order()) fail(ErrorKind::InvalidWord, "more points than field elements");
  std::vector<Fe> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = f.element(i);
  return pts;
}

std::vector<Fe> rs_encode(const RSCode& code, const UniPoly& f) {
  if (f.degree() >= code.k) fail(ErrorKind::DegreeTooHigh, "message degree must be below k");
  std::vector<Fe> cw;
  cw.reserve(code.points.size());
  for (Fe a : code.points) cw.push_back(f.is_zero() ? Fe{0} : f.eval(a));
  return cw;
}

ReceivedWord corrupt(const RSCode& code, const std::vector<Fe>& codeword, const std::map<std::size_t, Fe>& edits) {
  if (codeword.size() != code.points.size()) fail(ErrorKind::InvalidWord, "codeword length differs from n");
  std::vector<Point> pts;
  for (std::size_t j = 0; j < codeword.size(); ++j) pts.push_back({code.points[j], codeword[j]});
  for (auto [j, v] : edits) {
    if (j >= pts.size()) fail(ErrorKind::OutOfRange, "edit position " + std::to_string(j) + " out of range");
    if (v.v >= code.field->order()) fail(ErrorKind::OutOfRange, "edit value outside the field");
    if (pts[j].y == v) fail(ErrorKind::NoOpEdit, "edit at " + std::to_string(j) + " keeps the symbol");
    pts[j].y = v;
  }
  return ReceivedWord(code.field, std::move(pts));
}

Fe random_element(const Field& f, CounterRng& rng) { return f.element(rng.below(f.order())); }

std::map<std::size_t, Fe> derive_edits(const Field& f, const std::vector<Fe>& codeword, std::size_t count, u64 seed) {
  if (count > codeword.size()) fail(ErrorKind::OutOfRange, "more edits than positions");
  if (count > 0 && f.order() < 2) fail(ErrorKind::OutOfRange, "field too small to edit");
  CounterRng rng(seed);
  std::map<std::size_t, Fe> edits;
  while (edits.size() < count) {
    std::size_t j = rng.below(codeword.size());
    if (edits.count(j)) continue;
    // Shift by a nonzero offset so the symbol always changes.
    Fe delta = f.element(1 + rng.below(f.order() - 1));
    edits[j] = f.add(codeword[j], delta);
  }
  return edits;
}

UniPoly random_message(const FieldPtr& f, int k, CounterRng& rng) {
  std::vector<Fe> c(k);
  for (Fe& x : c) x = random_element(*f, rng);
  return UniPoly(f, std::move(c));
}

ReceivedWord random_instance(const FieldPtr& f, int n, int k, CounterRng& rng) {
  if (static_cast<u64>(n) > f->order()) fail(ErrorKind::InvalidWord, "more points than field elements");
  // Partial Fisher-Yates over a bounded prefix of the field keeps this cheap
  // for huge fields; small fields are covered entirely.
  u64 pool = std::min<u64>(f->order(), std::max<u64>(4096, n));
  std::vector<u64> idx(pool);
  for (u64 i = 0; i < pool; ++i) idx[i] = i;
  for (int i = 0; i < n; ++i) std::swap(idx[i], idx[i + rng.below(pool - i)]);
  std::vector<Point> pts;
  UniPoly msg = random_message(f, k, rng);
  for (int i = 0; i < n; ++i) {
    Fe x = f->element(idx[i]);
    pts.push_back({x, msg.eval(x)});
  }
  std::size_t errors = rng.below(n + 1);
  for (std::size_t e = 0; e < errors; ++e) pts[rng.below(n)].y = random_element(*f, rng);
  return ReceivedWord(f, std::move(pts));
}

}  // namespace detrs
