#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "detrs/error.hpp"

namespace detrs {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// A field element is an index into its field. For r = 1 the index is the
// residue itself; for r > 1 it packs coordinates base p, low coordinate in the
// least significant digit. Which field it belongs to is tracked by the
// containers (UniPoly, BiPoly, Elem), not by Fe itself, to keep hot loops flat.
struct Fe {
  u64 v = 0;
  friend bool operator==(Fe, Fe) = default;
  friend auto operator<=>(Fe, Fe) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

struct FieldOptions {
  bool trusted_prime = false;  // skip the trial-division check for p >= 2^42
};

class Field {
 public:
  using Options = FieldOptions;

  // modulus: coefficients low to high, including the leading 1. Empty with
  // r > 1 requests the lexicographic auto-search.
  static FieldPtr make(u64 p, unsigned r = 1, std::vector<u64> modulus = {}, Options opt = {});

  u64 p() const { return p_; }
  unsigned r() const { return r_; }
  const std::vector<u64>& modulus() const { return mod_; }
  bool trusted_prime() const { return trusted_; }
  bool is_prime_field() const { return r_ == 1; }
  // q = p^r when it fits in 64 bits (always true for extension fields, which
  // are limited to q < 2^64).
  u64 order() const { return q_; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  Fe from_int(i64 x) const;
  Fe from_u64(u64 x) const { return Fe{x % p_}; }
  Fe from_coords(const std::vector<u64>& c) const;
  std::vector<u64> coords(Fe a) const;
  // Element by enumeration index in [0, q). Identity on the packed encoding.
  Fe element(u64 index) const;

  Fe add(Fe a, Fe b) const {
    if (r_ == 1) {
      u64 s = a.v + b.v;
      return Fe{s >= p_ ? s - p_ : s};
    }
    return add_ext(a, b);
  }
  Fe sub(Fe a, Fe b) const {
    if (r_ == 1) return Fe{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
    return sub_ext(a, b);
  }
  Fe neg(Fe a) const {
    if (r_ == 1) return Fe{a.v == 0 ? 0 : p_ - a.v};
    return sub_ext(Fe{0}, a);
  }
  Fe mul(Fe a, Fe b) const {
    if (r_ == 1) return Fe{reduce_wide(static_cast<u128>(a.v) * b.v)};
    return mul_ext(a, b);
  }
  Fe inv(Fe a) const;  // extended Euclid; DivisionByZero on 0
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, u128 e) const;

  // Prime-field reduction of a double-width value. Mersenne fast path for
  // 2^61 - 1, 64-bit remainder whenever the value fits.
  u64 reduce_wide(u128 x) const {
    if (mersenne_) {
      // Three 61-bit limbs; 2^61 = 1 so they simply add.
      u64 s = (static_cast<u64>(x) & kMersenne61) + (static_cast<u64>(x >> 61) & kMersenne61) +
              static_cast<u64>(x >> 122);
      s = (s & kMersenne61) + (s >> 61);
      return s >= kMersenne61 ? s - kMersenne61 : s;
    }
    if ((x >> 64) == 0) return static_cast<u64>(x) % p_;
    return static_cast<u64>(x % p_);
  }
  // How many products of reduced residues can be summed in a u128 before a
  // reduction is needed (prime fields only).
  u64 lazy_batch() const { return lazy_batch_; }

  bool same_as(const Field& o) const { return this == &o || (p_ == o.p_ && r_ == o.r_ && mod_ == o.mod_); }

 private:
  Field() = default;
  Fe add_ext(Fe a, Fe b) const;
  Fe sub_ext(Fe a, Fe b) const;
  Fe mul_ext(Fe a, Fe b) const;
  Fe mul_ext_slow(Fe a, Fe b) const;
  void build_tables();

  u64 p_ = 2;
  unsigned r_ = 1;
  std::vector<u64> mod_;
  u64 q_ = 2;
  bool trusted_ = false;
  bool mersenne_ = false;
  u64 lazy_batch_ = 1;
  std::vector<u64> pw_;  // p^i for i < r
  // log/exp tables for small extension fields
  std::vector<std::uint32_t> log_;
  std::vector<u64> exp_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || a->same_as(*b); }

// Deterministic trial-division primality (valid for any p, used up to 2^42).
bool is_prime_trial(u64 p);

// Field-checked element handle used at API boundaries.
class Elem {
 public:
  Elem(FieldPtr f, Fe v) : f_(std::move(f)), v_(v) {}
  const FieldPtr& field() const { return f_; }
  Fe value() const { return v_; }
  friend bool operator==(const Elem& a, const Elem& b) { return same_field(a.f_, b.f_) && a.v_ == b.v_; }

 private:
  FieldPtr f_;
  Fe v_;
};

enum class FeOp { Add, Sub, Mul, Neg };

Elem fe_arith(const Elem& a, const Elem& b, FeOp op);
Elem fe_inv(const Elem& a);

// Binomial coefficients reduced into the prime subfield, built row by row
// with Pascal's rule so no integer ever exceeds p.
class BinomTable {
 public:
  BinomTable(const Field& f, unsigned nmax);
  Fe operator()(unsigned n, unsigned k) const {
    return k > n ? Fe{0} : rows_[static_cast<std::size_t>(n) * (n + 1) / 2 + k];
  }
  unsigned nmax() const { return nmax_; }

 private:
  unsigned nmax_;
  std::vector<Fe> rows_;
};

Fe binom(const Field& f, unsigned n, unsigned k);

}  // namespace detrs
