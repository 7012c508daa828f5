#include "detrs/gs_decode.hpp"

#include "helpers.hpp"
#include "detrs/reference_oracle.hpp"
#include "detrs/rs_model.hpp"

using namespace th;

TEST_CASE("potential") {
  FieldPtr f = Field::make(7);
  CHECK(potential({bp(f, "1;0;0;0;0;1")}) == 4);
  CHECK(potential({bp(f, "0,6;1"), bp(f, "0;0;1")}) == 1);
}

TEST_CASE("refinement splits the product of two lines") {
  FieldPtr f = Field::make(7);
  BiPoly q = bp(f, "0,6;1") * bp(f, "0,5;1");
  ReceivedWord w(f, {{fe(0), fe(3)}, {fe(1), fe(1)}, {fe(2), fe(4)}});
  RefinementSet s = refine(q, w);
  REQUIRE(s.trace.size() == 1);
  CHECK(s.trace[0].witness == 1u);
  CHECK(s.trace[0].phi_before == 1);
  CHECK(s.trace[0].phi_after == 0);
  CHECK(s.members == std::vector<BiPoly>{bp(f, "0,5;1"), bp(f, "0,6;1")});

  RefinementSet one = refine(bp(f, "0,6;1"), w);
  CHECK(one.trace.empty());
  CHECK(one.members == std::vector<BiPoly>{bp(f, "0,6;1")});
}

TEST_CASE("extraction") {
  FieldPtr f = Field::make(7);
  ReceivedWord w(f, {{fe(0), fe(0)}, {fe(1), fe(1)}, {fe(2), fe(5)}});
  CHECK(extract({{bp(f, "0,6;1")}, {}}, w, 2, 2) == std::vector<UniPoly>{up(f, "0,1")});

  // (Y - X^2)(Y - X^2 - X(X-1)(X-2)): both roots meet exactly at X = 0, 1, 2,
  // so the member is stable with zero set {0,1,2}, which lies on X^2 only.
  BiPoly g = BiPoly::y_minus(up(f, "0,0,1")) * BiPoly::y_minus(up(f, "0,2,5,1"));
  ReceivedWord w2(f, {{fe(0), fe(0)}, {fe(1), fe(1)}, {fe(2), fe(4)}, {fe(3), fe(0)}});
  REQUIRE(is_stable(g, w2).stable);
  CHECK(extract({{g}, {}}, w2, 2, 2).empty());
  // Fewer than k zeros: nothing to interpolate.
  ReceivedWord w3(f, {{fe(0), fe(0)}, {fe(3), fe(0)}, {fe(4), fe(0)}});
  CHECK(extract({{g}, {}}, w3, 2, 1).empty());
}

TEST_CASE("two planted lines over GF(101)") {
  FieldPtr f = Field::make(101);
  UniPoly f1 = up(f, "7,3"), f2 = up(f, "68,13");  // agree at X = 4
  std::vector<Point> pts;
  for (u64 a = 0; a <= 4; ++a) pts.push_back({fe(a), f1.eval(fe(a))});
  for (u64 a = 5; a <= 7; ++a) pts.push_back({fe(a), f2.eval(fe(a))});
  pts.push_back({fe(8), fe(50)});
  ReceivedWord w(f, pts);
  CHECK(agreement(f1, w) == 5);
  CHECK(agreement(f2, w) == 4);
  std::vector<UniPoly> got = gs_decode(w, 2, 4);
  CHECK(got == std::vector<UniPoly>{f1, f2});
  CHECK(got == oracle::brute_list_decode(w, 2, 4));
}

TEST_CASE("a single codeword decodes to itself") {
  FieldPtr f = Field::make(13);
  UniPoly m = up(f, "5,0,9");
  std::vector<Point> pts;
  for (u64 a = 1; a <= 10; ++a) pts.push_back({fe(a), m.eval(fe(a))});
  CHECK(gs_decode(ReceivedWord(f, pts), 3) == std::vector<UniPoly>{m});
}

TEST_CASE("useless interpolant gives an empty list") {
  // Frozen from a deterministic scan for words whose content-free
  // interpolant has a constant slice at some abscissa.
  FieldPtr f = Field::make(7);
  ReceivedWord w(f, {{fe(5), fe(0)}, {fe(3), fe(5)}, {fe(1), fe(2)}, {fe(6), fe(0)},
                     {fe(0), fe(2)}, {fe(2), fe(2)}, {fe(4), fe(6)}});
  GsReport r = gs_decode_report(w, 3, 5);
  CHECK(r.content == up(f, "3,1"));
  CHECK(r.qprime == bp(f, "1,6,2,4;3,1"));
  CHECK(r.useless);
  CHECK(r.list.empty());
  CHECK(oracle::brute_list_decode(w, 3, 5).empty());
}

TEST_CASE("threshold above n") {
  FieldPtr f = Field::make(7);
  ReceivedWord w(f, {{fe(0), fe(0)}, {fe(1), fe(1)}});
  GsReport r = gs_decode_report(w, 2, 3);
  CHECK(r.below_threshold);
  CHECK(r.list.empty());
}

TEST_CASE("survival and zero/agreement match on random words") {
  CounterRng rng(99);
  for (u64 p : {7, 13}) {
    FieldPtr f = Field::make(p);
    for (int rep = 0; rep < 60; ++rep) {
      int n = 3 + static_cast<int>(rng.below(std::min<u64>(p, 10) - 2));
      int k = 1 + static_cast<int>(rng.below(3));
      if (k > n) continue;
      ReceivedWord w = random_instance(f, n, k, rng);
      GsReport r = gs_decode_report(w, k);
      REQUIRE(r.list == oracle::brute_list_decode(w, k, r.params.t));
      if (r.useless || r.below_threshold) continue;
      for (const UniPoly& g : r.list) {
        BiPoly lin = BiPoly::y_minus(g);
        const BiPoly* home = nullptr;
        for (const BiPoly& m : r.set.members)
          if (bp_try_div(m, lin)) home = &m;
        REQUIRE(home);
        for (const Point& pt : w.points()) REQUIRE((home->eval(pt.x, pt.y) == fe(0)) == (g.eval(pt.x) == pt.y));
      }
    }
  }
}
