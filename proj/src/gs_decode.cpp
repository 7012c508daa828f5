#include "detrs/gs_decode.hpp"

#include <algorithm>

#include "detrs/newton_sudan.hpp"

namespace detrs {

long potential(const std::vector<BiPoly>& members) {
  long phi = 0;
  for (const BiPoly& g : members) phi += std::max(0, g.deg_y() - 1);
  return phi;
}

namespace {

void insert_member(std::vector<BiPoly>& set, const BiPoly& g) {
  auto it = std::lower_bound(set.begin(), set.end(), g, bp_canonical_less);
  if (it != set.end() && *it == g) return;
  set.insert(it, g);
}

}  // namespace

RefinementSet refine(const BiPoly& qprime, const ReceivedWord& w, SplitStats* stats) {
  RefinementSet s;
  std::vector<Fe> alphas = w.alphas();
  s.members.push_back(qprime.normalized());
  for (;;) {
    std::optional<std::size_t> pick, witness;
    for (std::size_t i = 0; i < s.members.size() && !pick; ++i) {
      if (s.members[i].deg_y() < 2) continue;
      StabilityVerdict v = is_stable(s.members[i], w);
      if (!v.stable) {
        pick = i;
        witness = v.witness;
      }
    }
    if (!pick) return s;
    long before = potential(s.members);
    BiPoly chosen = s.members[*pick];
    s.members.erase(s.members.begin() + static_cast<std::ptrdiff_t>(*pick));
    const Point& pt = w[*witness];
    SplitOutcome out = split(chosen, pt.x, pt.y, stats);
    for (const BiPoly& part : {out.p1, out.p2}) {
      BiPoly g = bp_x_content(part).primitive.normalized();
      if (!is_useless(g, alphas)) insert_member(s.members, g);
    }
    long after = potential(s.members);
    s.trace.push_back({chosen, *witness, out, before, after});
    if (after >= before) fail(ErrorKind::PotentialNotDecreasing, "refinement did not lower the potential");
  }
}

std::vector<UniPoly> extract(const RefinementSet& s, const ReceivedWord& w, int k, int t) {
  const FieldPtr& f = w.field_ptr();
  std::vector<UniPoly> out;
  for (const BiPoly& g : s.members) {
    if (g.deg_y() == 1 && g.slice(1).degree() == 0) {
      // g = c (Y - f)
      UniPoly cand = (-g.slice(0)).scaled(f->inv(g.slice(1).lc()));
      if (cand.degree() < k && agreement(cand, w) >= t) out.push_back(cand);
      continue;
    }
    std::vector<Point> zeros;
    for (const Point& p : w.points())
      if (g.eval(p.x, p.y) == Fe{0}) zeros.push_back(p);
    if (static_cast<int>(zeros.size()) < k) continue;
    std::optional<UniPoly> cand = up_interpolate(f, zeros, k);
    if (cand && agreement(*cand, w) >= t) out.push_back(*cand);
  }
  canonical_sort(out);
  return out;
}

GsReport gs_decode_report(const ReceivedWord& w, int k, std::optional<int> t) {
  int n = static_cast<int>(w.size());
  if (k < 1) fail(ErrorKind::PreconditionViolated, "k must be positive");
  GsReport rep;
  int tt = t ? *t : johnson_threshold(n, k);
  if (tt > n) {
    rep.params = DecodeParams{n, k, tt, 1, 0};
    rep.below_threshold = true;
    return rep;
  }
  rep.params = gs_params(n, k, tt);
  rep.q = build_interpolation(w, rep.params);
  ContentSplit cs = bp_x_content(rep.q);
  rep.content = cs.content;
  rep.qprime = cs.primitive.normalized();
  std::vector<Fe> alphas = w.alphas();
  if (is_useless(rep.qprime, alphas)) {
    rep.useless = true;
    return rep;
  }
  rep.set = refine(rep.qprime, w, &rep.stats);
  rep.list = extract(rep.set, w, k, tt);
  return rep;
}

std::vector<UniPoly> gs_decode(const ReceivedWord& w, int k, std::optional<int> t) {
  return gs_decode_report(w, k, t).list;
}

}  // namespace detrs
