#include "detrs/gf.hpp"

#include "helpers.hpp"
#include "detrs/rs_model.hpp"

using namespace th;

TEST_CASE("prime field construction") {
  FieldPtr f = Field::make(7);
  CHECK(f->p() == 7);
  CHECK(f->order() == 7);
  CHECK(f->is_prime_field());
  CHECK(kind_of([] { Field::make(6); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { Field::make(1); }) == ErrorKind::NotPrime);
}

TEST_CASE("large primes need the trusted flag") {
  CHECK(kind_of([] { Field::make(kMersenne61); }) == ErrorKind::NotPrime);
  FieldPtr f = Field::make(kMersenne61, 1, {}, FieldOptions{true});
  CHECK(f->trusted_prime());
  // Below 2^42 trial division still runs.
  CHECK(Field::make(1'000'003)->p() == 1'000'003);
}

TEST_CASE("GF(8) modulus auto-search picks X^3+X+1") {
  FieldPtr f = Field::make(2, 3);
  CHECK(f->modulus() == std::vector<u64>{1, 1, 0, 1});
  CHECK(f->order() == 8);
  // X * X^2 = X^3 = X + 1
  Fe x = f->from_coords({0, 1, 0}), x2 = f->from_coords({0, 0, 1});
  CHECK(f->coords(f->mul(x, x2)) == std::vector<u64>{1, 1, 0});
}

TEST_CASE("explicit moduli are validated") {
  CHECK(kind_of([] { Field::make(2, 2, {1, 0, 1}); }) == ErrorKind::ReducibleModulus);
  CHECK(kind_of([] { Field::make(2, 3, {1, 1, 1}); }) == ErrorKind::DegreeMismatch);
  CHECK(Field::make(3, 2, {1, 0, 1})->order() == 9);
}

TEST_CASE("GF(7) arithmetic examples") {
  FieldPtr f = Field::make(7);
  CHECK(f->mul(fe(3), fe(5)) == fe(1));
  CHECK(f->add(fe(6), fe(1)) == fe(0));
  CHECK(f->inv(fe(1)) == fe(1));
  CHECK(f->inv(fe(3)) == fe(5));
  CHECK(kind_of([&] { f->inv(fe(0)); }) == ErrorKind::DivisionByZero);
  CHECK(f->from_int(-1) == fe(6));
}

TEST_CASE("fe_arith checks the fields match") {
  FieldPtr f7 = Field::make(7), f5 = Field::make(5);
  CHECK(fe_arith(Elem(f7, fe(3)), Elem(f7, fe(5)), FeOp::Mul).value() == fe(1));
  CHECK(fe_arith(Elem(f7, fe(3)), Elem(f7, fe(0)), FeOp::Neg).value() == fe(4));
  CHECK(fe_inv(Elem(f7, fe(3))).value() == fe(5));
  CHECK(kind_of([&] { fe_arith(Elem(f7, fe(1)), Elem(f5, fe(1)), FeOp::Add); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("inverse and Frobenius exhaustively for small fields") {
  for (auto [p, r] : {std::pair<u64, unsigned>{2, 1}, {13, 1}, {2, 4}, {3, 3}, {5, 2}, {2, 10}, {31, 2}}) {
    FieldPtr f = Field::make(p, r);
    CAPTURE(f->order());
    for (u64 i = 0; i < f->order(); ++i) {
      Fe a = f->element(i);
      if (a != Fe{0}) REQUIRE(f->mul(a, f->inv(a)) == f->one());
      REQUIRE(f->pow(a, f->order()) == a);
    }
  }
}

TEST_CASE("ring axioms on sampled triples") {
  CounterRng rng(11);
  for (u64 p : {u64{101}, u64{1'000'000'007}, kMersenne61}) {
    FieldPtr f = Field::make(p, 1, {}, FieldOptions{p > 1'000'000'007});
    for (int i = 0; i < 2000; ++i) {
      Fe a = random_element(*f, rng), b = random_element(*f, rng), c = random_element(*f, rng);
      REQUIRE(f->mul(a, b) == f->mul(b, a));
      REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    }
  }
}

TEST_CASE("Mersenne reduction handles full 128-bit inputs") {
  FieldPtr f = Field::make(kMersenne61, 1, {}, FieldOptions{true});
  u128 x = ~u128{0};
  CHECK(f->reduce_wide(x) == static_cast<u64>(x % kMersenne61));
  x = (u128{1} << 125) + 12345;
  CHECK(f->reduce_wide(x) == static_cast<u64>(x % kMersenne61));
  CounterRng rng(3);
  for (int i = 0; i < 10000; ++i) {
    u128 y = (static_cast<u128>(rng.next()) << 64) | rng.next();
    REQUIRE(f->reduce_wide(y) == static_cast<u64>(y % kMersenne61));
  }
}

TEST_CASE("binomials reduce modulo p") {
  FieldPtr f = Field::make(2);
  CHECK(binom(*f, 3, 2) == fe(1));
  CHECK(binom(*f, 2, 1) == fe(0));
  BinomTable t(*Field::make(7), 10);
  CHECK(t(7, 3) == fe(0));
  CHECK(t(6, 3) == fe(6));
  CHECK(t(2, 5) == fe(0));
}
