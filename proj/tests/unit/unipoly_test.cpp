#include "detrs/unipoly.hpp"

#include "helpers.hpp"
#include "detrs/rs_model.hpp"

using namespace th;

TEST_CASE("divmod examples") {
  FieldPtr f7 = Field::make(7), f2 = Field::make(2);
  DivMod d = up_divmod(up(f7, "6,0,1"), up(f7, "6,1"));
  CHECK(d.quot == up(f7, "1,1"));
  CHECK(d.rem.is_zero());
  d = up_divmod(up(f7, "0,1"), up(f7, "0,0,1"));
  CHECK(d.quot.is_zero());
  CHECK(d.rem == up(f7, "0,1"));
  d = up_divmod(up(f2, "1,0,1"), up(f2, "1,1"));
  CHECK(d.quot == up(f2, "1,1"));
  CHECK(d.rem.is_zero());
  CHECK(kind_of([&] { up_divmod(up(f7, "1"), UniPoly(f7)); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("divmod round-trip on random pairs") {
  FieldPtr f = Field::make(1'000'000'007);
  CounterRng rng(5);
  for (int i = 0; i < 300; ++i) {
    UniPoly a = random_message(f, 1 + static_cast<int>(rng.below(20)), rng);
    UniPoly b = random_message(f, 1 + static_cast<int>(rng.below(10)), rng);
    if (b.is_zero()) continue;
    DivMod d = up_divmod(a, b);
    REQUIRE(d.quot * b + d.rem == a);
    REQUIRE(d.rem.degree() < b.degree());
  }
}

TEST_CASE("xgcd examples") {
  FieldPtr f = Field::make(7);
  UniPoly a = up(f, "6,1"), b = up(f, "1,1");
  Xgcd x = up_xgcd(a, b);
  CHECK(x.g.is_one());
  CHECK(x.u * a + x.v * b == x.g);

  UniPoly g = up(f, "3,0,2");
  x = up_xgcd(g, g);
  CHECK(x.g == g.monic());
  CHECK(x.u.is_zero());
  CHECK(x.v == UniPoly::constant(f, f->inv(fe(2))));

  x = up_xgcd(up(f, "1,5,1"), up(f, "6,0,1"));  // (Y-1)^2 and (Y-1)(Y+1)
  CHECK(x.g == up(f, "6,1"));
  CHECK(kind_of([&] { up_xgcd(UniPoly(f), UniPoly(f)); }) == ErrorKind::BothZero);
}

TEST_CASE("xgcd Bezout identity and divisibility on random pairs") {
  FieldPtr f = Field::make(13);
  CounterRng rng(9);
  for (int i = 0; i < 300; ++i) {
    UniPoly a = random_message(f, 1 + static_cast<int>(rng.below(8)), rng);
    UniPoly b = random_message(f, 1 + static_cast<int>(rng.below(8)), rng);
    if (a.is_zero() && b.is_zero()) continue;
    Xgcd x = up_xgcd(a, b);
    REQUIRE(x.u * a + x.v * b == x.g);
    REQUIRE(x.g.lc() == fe(1));
    REQUIRE(up_divmod(a, x.g).rem.is_zero());
    REQUIRE(up_divmod(b, x.g).rem.is_zero());
  }
}

TEST_CASE("gcd of many") {
  FieldPtr f = Field::make(7);
  std::vector<UniPoly> v{up(f, "0,0,1"), up(f, "0,0,0,1"), up(f, "0,1")};
  CHECK(up_gcd_many(v) == up(f, "0,1"));
  v = {up(f, "6,1"), up(f, "1")};
  CHECK(up_gcd_many(v).is_one());
  v = {up(f, "2,2"), up(f, "4,4")};
  CHECK(up_gcd_many(v) == up(f, "1,1"));
  v = {UniPoly(f), UniPoly(f)};
  CHECK(kind_of([&] { up_gcd_many(v); }) == ErrorKind::AllZero);
}

TEST_CASE("interpolation examples") {
  FieldPtr f = Field::make(7);
  std::vector<Point> pts{{fe(0), fe(1)}, {fe(1), fe(2)}, {fe(2), fe(3)}};
  CHECK(up_interpolate(f, pts, 2) == up(f, "1,1"));
  pts = {{fe(0), fe(0)}, {fe(1), fe(1)}, {fe(2), fe(5)}};
  CHECK(!up_interpolate(f, pts, 2));
  pts = {{fe(3), fe(4)}};
  CHECK(up_interpolate(f, pts, 1) == up(f, "4"));
  pts = {{fe(3), fe(4)}, {fe(3), fe(5)}};
  CHECK(kind_of([&] { up_interpolate(f, pts, 2); }) == ErrorKind::DuplicateAbscissa);
}

TEST_CASE("interpolate after evaluate is the identity") {
  FieldPtr f = Field::make(101);
  CounterRng rng(21);
  for (int k = 1; k <= 6; ++k)
    for (int rep = 0; rep < 20; ++rep) {
      UniPoly m = random_message(f, k, rng);
      std::vector<Point> pts;
      for (int j = 0; j < k + static_cast<int>(rng.below(4)); ++j) pts.push_back({fe(j * 3 + 1), m.eval(fe(j * 3 + 1))});
      REQUIRE(up_interpolate(f, pts, k) == m);
    }
}

TEST_CASE("root multiplicity and shifts") {
  FieldPtr f = Field::make(7);
  UniPoly p = up(f, "6,1") * up(f, "6,1") * up(f, "1,1");
  CHECK(up_root_multiplicity(p, fe(1)) == 2);
  CHECK(up_root_multiplicity(p, fe(6)) == 1);
  CHECK(up_root_multiplicity(p, fe(0)) == 0);
  CHECK(p.shifted(fe(3)).shifted(fe(4)) == p);
  CHECK(up_mul_trunc(p, p, 2) == (p * p).truncated(2));
}

TEST_CASE("irreducibility") {
  FieldPtr f = Field::make(5);
  CHECK(up_is_irreducible(up(f, "3,1")));
  CHECK(up_is_irreducible(up(f, "3,0,1")));
  CHECK(up_is_irreducible(up(f, "1,1,1")));
  CHECK(up_is_irreducible(up(f, "1,1,0,1")));
  CHECK(!up_is_irreducible(up(f, "1,3,1")));
  CHECK(!up_is_irreducible(up(f, "3,0,1") * up(f, "1,1,1")));
  CHECK(!up_is_irreducible(up(f, "2")));
  // X^2+X+1 has no root in GF(8), which does not contain GF(4).
  CHECK(up_is_irreducible(up(Field::make(2, 3), "1,1,1")));
}
