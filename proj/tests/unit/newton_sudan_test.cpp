#include "detrs/newton_sudan.hpp"

#include "helpers.hpp"
#include "detrs/reference_oracle.hpp"
#include "detrs/rs_model.hpp"

using namespace th;

TEST_CASE("one Newton step on Y^2 - X - 1") {
  FieldPtr f = Field::make(7);
  BiPoly q = bp(f, "6,6;0;1");
  LiftState s = newton_init(q, fe(0), fe(1));
  CHECK(s.denom == fe(2));
  s = newton_step(q, s);
  CHECK(s.phi == up(f, "1,4"));
  CHECK(s.precision == 2);
  CHECK(bp_mod_xpow(BiPoly::from_x(q.substitute_y(s.phi)), 2).is_zero());
  CHECK(newton_recover(q, fe(0), fe(1), 2) == up(f, "1,4"));
}

TEST_CASE("exact roots are fixed points") {
  FieldPtr f = Field::make(7);
  BiPoly q = bp(f, "4;1");  // Y - 3
  LiftState s = newton_init(q, fe(2), fe(3));
  for (int i = 0; i < 4; ++i) {
    s = newton_step(q, s);
    CHECK(s.phi == up(f, "3"));
  }
  CHECK(newton_recover(bp(f, "5,4;1"), fe(0), fe(2), 2) == up(f, "2,3"));
}

TEST_CASE("Newton errors") {
  FieldPtr f = Field::make(7);
  CHECK(kind_of([&] { newton_init(bp(f, "0;0;1"), fe(0), fe(0)); }) == ErrorKind::BadSeed);
  BiPoly q = bp(f, "6,6;0;1");
  LiftState s = newton_init(q, fe(0), fe(1));
  s.phi = up(f, "2");
  CHECK(kind_of([&] { newton_step(q, s); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("Sudan on a GF(13) word with five agreements") {
  FieldPtr f = Field::make(13);
  // f = X on abscissae 0..4; the other three points are off every line
  // through two of them that could reach agreement 5.
  std::vector<Point> pts;
  for (u64 a = 0; a < 5; ++a) pts.push_back({fe(a), fe(a)});
  pts.push_back({fe(5), fe(9)});
  pts.push_back({fe(6), fe(2)});
  pts.push_back({fe(7), fe(11)});
  ReceivedWord w(f, pts);
  CHECK(sudan_threshold(8, 2) == 5);
  std::vector<UniPoly> got = sudan_decode(w, 2);
  CHECK(got == oracle::brute_list_decode(w, 2, 5));
  CHECK(got == std::vector<UniPoly>{up(f, "0,1")});
}

TEST_CASE("Sudan shortcut and empty lists") {
  FieldPtr f = Field::make(13);
  UniPoly m = up(f, "3,1,2");
  std::vector<Point> pts;
  for (u64 a = 0; a < 9; ++a) pts.push_back({fe(a), m.eval(fe(a))});
  SudanReport r = sudan_decode_report(ReceivedWord(f, pts), 3);
  CHECK(r.shortcut);
  CHECK(r.list == std::vector<UniPoly>{m});

  // Points on no common low-degree curve: every candidate misses the threshold.
  std::vector<Point> junk{{fe(0), fe(1)}, {fe(1), fe(5)}, {fe(2), fe(2)}, {fe(3), fe(12)},
                          {fe(4), fe(7)}, {fe(5), fe(3)}, {fe(6), fe(8)}, {fe(7), fe(0)}};
  ReceivedWord w(f, junk);
  CHECK(oracle::brute_list_decode(w, 2, sudan_threshold(8, 2)).empty());
  CHECK(sudan_decode(w, 2).empty());
}

TEST_CASE("Sudan outputs are roots of the interpolation polynomial") {
  CounterRng rng(77);
  FieldPtr f = Field::make(31);
  for (int rep = 0; rep < 40; ++rep) {
    ReceivedWord w = random_instance(f, 12, 3, rng);
    SudanReport r = sudan_decode_report(w, 3);
    if (r.shortcut) continue;
    for (const UniPoly& g : r.list) REQUIRE(r.q.substitute_y(g).is_zero());
    REQUIRE(r.depth <= std::max(1, r.q.deg_y()));
  }
}

TEST_CASE("independent step chains agree") {
  // Linear Newton against the quadratic oracle at every precision.
  CounterRng rng(5);
  FieldPtr f = Field::make(101);
  int done = 0;
  for (int rep = 0; rep < 200 && done < 30; ++rep) {
    BiPoly q = BiPoly::y_minus(random_message(f, 3, rng)) * BiPoly::y_minus(random_message(f, 3, rng));
    Fe a = random_element(*f, rng);
    UniPoly slice = q.eval_x(a);
    Fe b = fe(0);
    bool found = false;
    for (u64 y = 0; y < 101 && !found; ++y)
      if (slice.eval(fe(y)) == fe(0) && bp_eval(bp_hasse(q, 0, 1), a, fe(y)) != fe(0)) b = fe(y), found = true;
    if (!found) continue;
    LiftState s = newton_init(q, a, b);
    for (int prec = 2; prec <= 6; ++prec) {
      s = newton_step(q, s);
      REQUIRE(oracle::newton_quadratic(q, a, b, prec) == s.phi);
    }
    ++done;
  }
  CHECK(done == 30);
}
