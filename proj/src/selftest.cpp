#include "detrs/selftest.hpp"

#include "detrs/gs_decode.hpp"
#include "detrs/hensel.hpp"
#include "detrs/newton_sudan.hpp"
#include "detrs/reference_oracle.hpp"
#include "detrs/rs_model.hpp"

namespace detrs {

namespace {

SelftestLine field_axioms() {
  for (auto [p, r] : {std::pair<u64, unsigned>{5, 1}, {2, 2}, {3, 2}}) {
    FieldPtr f = Field::make(p, r);
    for (u64 i = 0; i < f->order(); ++i)
      for (u64 j = 0; j < f->order(); ++j) {
        Fe a = f->element(i), b = f->element(j);
        if (f->sub(f->add(a, b), b) != a) return {"field", false, "add/sub at q=" + std::to_string(f->order())};
        if (b != Fe{0} && f->mul(f->div(a, b), b) != a)
          return {"field", false, "mul/div at q=" + std::to_string(f->order())};
      }
  }
  return {"field", true, "GF(5), GF(4), GF(9) exhaustive"};
}

SelftestLine decoders_vs_brute(bool gs) {
  std::string name = gs ? "gs_vs_brute" : "sudan_vs_brute";
  long count = 0;
  for (u64 p : {3, 5}) {
    FieldPtr f = Field::make(p);
    for (int k = 1; k <= 2; ++k)
      for (int n = 1; n <= static_cast<int>(p); ++n) {
        CounterRng rng(p * 1000 + k * 100 + n);
        for (int rep = 0; rep < 10; ++rep) {
          ReceivedWord w = random_instance(f, n, k, rng);
          int t = gs ? johnson_threshold(n, k) : sudan_threshold(n, k);
          std::vector<UniPoly> got = gs ? gs_decode(w, k) : sudan_decode(w, k);
          if (got != oracle::brute_list_decode(w, k, t))
            return {name, false, "mismatch at p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                     " k=" + std::to_string(k)};
          ++count;
        }
      }
  }
  return {name, true, std::to_string(count) + " instances"};
}

SelftestLine split_classification() {
  FieldPtr f = Field::make(3);
  long checked = 0;
  // All normalized content-free P of total degree <= 2 over GF(3).
  for (u64 idx = 1; idx < 729; ++idx) {
    std::vector<Fe> grid(9, Fe{0});
    u64 r = idx;
    for (int b = 0; b <= 2; ++b)
      for (int a = 0; a + b <= 2; ++a) {
        grid[b * 3 + a] = Fe{r % 3};
        r /= 3;
      }
    BiPoly p(f, 3, 3, grid);
    if (!(p.normalized() == p) || bp_x_content(p).content.degree() > 0) continue;
    oracle::Factorization fz = oracle::brute_factor(p);
    for (u64 a = 0; a < 3; ++a)
      for (u64 b = 0; b < 3; ++b) {
        SplitOutcome out = split(p, Fe{a}, Fe{b});
        if (!oracle::split_matches(out, oracle::class_parts(fz, f, Fe{a}, Fe{b})))
          return {"split", false, "classification mismatch"};
        ++checked;
      }
  }
  return {"split", true, std::to_string(checked) + " (P, point) pairs over GF(3)"};
}

SelftestLine hensel_chains() {
  FieldPtr f = Field::make(7);
  CounterRng rng(7);
  long chains = 0;
  for (int rep = 0; rep < 200 && chains < 40; ++rep) {
    std::vector<Fe> grid(16);
    for (Fe& c : grid) c = random_element(*f, rng);
    BiPoly p(f, 4, 4, grid);
    Fe a = random_element(*f, rng), b = random_element(*f, rng);
    if (p.eval_x(a).is_zero()) continue;
    HenselSeed seed = hensel_init(p, a, b);
    if (!seed.a0) continue;
    HenselState st = hensel_start(p, a, b);
    BiPoly ps = bp_shift_x(p, a);
    for (int i = 0; i < 4; ++i) st = hensel_step(ps, st);
    if (!hensel_invariants_hold(ps, st)) return {"hensel", false, "invariants broken"};
    ++chains;
  }
  return {"hensel", true, std::to_string(chains) + " chains to level 4"};
}

}  // namespace

std::vector<SelftestLine> run_selftest() {
  std::vector<SelftestLine> out;
  auto guarded = [&](const char* name, SelftestLine (*fn)()) {
    try {
      out.push_back(fn());
    } catch (const Error& e) {
      out.push_back({name, false, std::string(error_kind_name(e.kind())) + ": " + e.what()});
    }
  };
  guarded("field", field_axioms);
  guarded("sudan_vs_brute", [] { return decoders_vs_brute(false); });
  guarded("gs_vs_brute", [] { return decoders_vs_brute(true); });
  guarded("split", split_classification);
  guarded("hensel", hensel_chains);
  return out;
}

}  // namespace detrs
