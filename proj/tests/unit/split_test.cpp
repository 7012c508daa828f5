#include "detrs/split.hpp"

#include "helpers.hpp"
#include "detrs/hensel.hpp"
#include "detrs/reference_oracle.hpp"
#include "detrs/rs_model.hpp"

using namespace th;

TEST_CASE("uselessness") {
  FieldPtr f = Field::make(7);
  std::vector<Fe> zero{fe(0)}, all{fe(0), fe(1), fe(2), fe(3)};
  CHECK(is_useless(bp(f, "1;0,1"), zero));
  CHECK(!is_useless(bp(f, "0,6;1"), all));
  CHECK(!is_useless(bp(f, "0,1"), zero));
}

TEST_CASE("point stability") {
  FieldPtr f = Field::make(7);
  BiPoly p = bp(f, "0,6;1") * bp(f, "0,5;1");
  StabilityVerdict v = is_stable(p, fe(0), fe(0));
  CHECK(v.stable);
  CHECK(v.mode == StableMode::ALike);
  CHECK(!is_stable(p, fe(1), fe(1)).stable);
  v = is_stable(bp(f, "1;1"), fe(0), fe(0));
  CHECK(v.stable);
  CHECK(v.mode == StableMode::BLike);
  ReceivedWord w(f, {{fe(0), fe(0)}, {fe(2), fe(5)}, {fe(1), fe(1)}});
  v = is_stable(p, w);
  CHECK(!v.stable);
  CHECK(v.witness == 2u);
}

TEST_CASE("split examples") {
  FieldPtr f = Field::make(7);
  BiPoly a = bp(f, "0,6;1"), b = bp(f, "0,1;1"), c = bp(f, "0,6;0;1");
  SplitOutcome o = split(a * b, fe(1), fe(1));
  CHECK(o.p1 == a);
  CHECK(o.p2 == b);
  o = split(c, fe(1), fe(1));
  CHECK(o.p1.is_one());
  CHECK(o.p2.is_one());
  o = split(a * a, fe(1), fe(1));
  CHECK(o.p1 == a * a);
  CHECK(o.p2.is_one());
  o = split(b, fe(1), fe(1));
  CHECK(o.p1.is_one());
  CHECK(o.p2 == b);
}

TEST_CASE("combine splits") {
  FieldPtr f = Field::make(7);
  BiPoly a = bp(f, "0,6;1"), b = bp(f, "0,1;1"), c = bp(f, "0,6;0;1");
  SplitOutcome o = combine_splits(a * b * c, c, fe(1), fe(1));
  CHECK(o.p1 == a);
  CHECK(o.p2 == b);
  o = combine_splits(a * b * a * b, a * b, fe(1), fe(1));
  CHECK(o.p1 == a * a);
  CHECK(o.p2 == b * b);
  CHECK_THROWS_AS(combine_splits(a * b, a * b, fe(1), fe(1)), Error);
}

TEST_CASE("factor system on the shifted lift") {
  FieldPtr f = Field::make(7);
  BiPoly p = bp(f, "0,6;1") * bp(f, "0,1;1");
  int t = split_lift_depth(p);
  HenselLift l = hensel_lift(p, fe(1), fe(1), t);
  BiPoly ps = bp_shift_x(p, fe(1));
  std::optional<BiPoly> v = solve_factor_system(l.h, ps, t, ps.deg_y());
  REQUIRE(v);
  CHECK(bp_gcd(ps, *v) == bp(f, "1,1;1"));  // Y + X, shifted by 1

  BiPoly c = bp(f, "0,6;0;1");
  BiPoly cs = bp_shift_x(c, fe(1));
  int tc = split_lift_depth(c);
  HenselLift lc = hensel_lift(c, fe(1), fe(1), tc);
  for (int ycap = cs.deg_y(); ycap <= 4 * cs.deg_y(); ycap *= 2) {
    CHECK(!solve_factor_system(lc.h, cs, tc, ycap));
    CHECK(!solve_factor_system(lc.g, cs, tc, ycap));
  }
  CHECK_THROWS_AS(solve_factor_system(l.h, ps, 1, 2), Error);
}

TEST_CASE("linear factors land on the side their value at alpha dictates") {
  FieldPtr f = Field::make(11);
  CounterRng rng(12);
  for (int rep = 0; rep < 150; ++rep) {
    std::vector<UniPoly> fs;
    BiPoly p = BiPoly::constant(f, fe(1));
    int nf = 2 + static_cast<int>(rng.below(3));
    for (int i = 0; i < nf; ++i) {
      fs.push_back(random_message(f, 3, rng));
      p = p * BiPoly::y_minus(fs.back());
    }
    Fe a = random_element(*f, rng), b = fs[rng.below(nf)].eval(a);
    SplitOutcome o = split(p, a, b);
    REQUIRE(bp_try_div(p, o.p1 * o.p2));
    REQUIRE(is_stable(o.p1, a, b).stable);
    REQUIRE(o.p2.eval(a, b) != fe(0));
    for (const UniPoly& g : fs) {
      BiPoly lin = BiPoly::y_minus(g);
      REQUIRE(bp_try_div(g.eval(a) == b ? o.p1 : o.p2, lin));
    }
    if (!is_stable(p, a, b).stable) {
      REQUIRE(o.p1.deg_y() < p.deg_y());
      REQUIRE(o.p2.deg_y() < p.deg_y());
    }
  }
}

TEST_CASE("split matches the oracle classification over GF(5), degree <= 2") {
  FieldPtr f = Field::make(5);
  long checked = 0;
  for (u64 idx = 1; idx < 15625; idx += 7) {
    std::vector<Fe> grid(9, fe(0));
    u64 r = idx;
    for (int b = 0; b <= 2; ++b)
      for (int a = 0; a + b <= 2; ++a) grid[b * 3 + a] = fe(r % 5), r /= 5;
    BiPoly p(f, 3, 3, grid);
    if (!(p.normalized() == p) || bp_x_content(p).content.degree() > 0) continue;
    oracle::Factorization fz = oracle::brute_factor(p);
    for (u64 a = 0; a < 5; ++a)
      for (u64 b = 0; b < 5; ++b) {
        REQUIRE(oracle::split_matches(split(p, fe(a), fe(b)), oracle::class_parts(fz, f, fe(a), fe(b))));
        ++checked;
      }
  }
  CHECK(checked > 1000);
}

TEST_CASE("an irreducible slice elsewhere settles split without lifting") {
  FieldPtr f = Field::make(5);
  // Y^2 - X - 1: slice (Y-1)(Y+1) at X = 0, irreducible Y^2 - 2 at X = 1.
  BiPoly p = bp(f, "4,4;0;1");
  SplitStats st;
  SplitOutcome out = split(p, fe(0), fe(1), &st);
  CHECK(out.p1 == bp(f, "1"));
  CHECK(out.p2 == bp(f, "1"));
  CHECK(st.lifts == 0);
  CHECK(oracle::split_matches(out, oracle::class_parts(oracle::brute_factor(p), f, fe(0), fe(1))));
}
