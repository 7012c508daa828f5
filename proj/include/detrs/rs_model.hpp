#pragma once

#include <map>
#include <vector>

#include "detrs/received_word.hpp"

namespace detrs {

// Counter-mode SplitMix64: value i is mix(seed + (i+1)*gamma), so any draw
// can be reproduced from (seed, index) alone.
class CounterRng {
 public:
  explicit CounterRng(u64 seed) : seed_(seed) {}
  u64 next() { return at(counter_++); }
  u64 at(u64 i) const {
    u64 z = seed_ + (i + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Value in [0, n); multiply-high mapping.
  u64 below(u64 n) { return static_cast<u64>((static_cast<u128>(next()) * n) >> 64); }
  u64 counter() const { return counter_; }

 private:
  u64 seed_;
  u64 counter_ = 0;
};

struct RSCode {
  FieldPtr field;
  std::vector<Fe> points;
  int k = 1;
};

// Validates distinct points and 1 <= k <= n <= q (InvalidWord otherwise).
RSCode make_code(FieldPtr f, std::vector<Fe> points, int k);
// The first n field elements in enumeration order.
std::vector<Fe> first_points(const Field& f, std::size_t n);

std::vector<Fe> rs_encode(const RSCode& code, const UniPoly& f);  // DegreeTooHigh

// Edits are (position -> new value); each must change the symbol.
ReceivedWord corrupt(const RSCode& code, const std::vector<Fe>& codeword, const std::map<std::size_t, Fe>& edits);

// `count` distinct positions with new values, drawn from the seeded sequence.
std::map<std::size_t, Fe> derive_edits(const Field& f, const std::vector<Fe>& codeword, std::size_t count, u64 seed);

// Test instance: n distinct random abscissae, a random message of degree < k,
// and a random number of corrupted positions (possibly all of them).
ReceivedWord random_instance(const FieldPtr& f, int n, int k, CounterRng& rng);

UniPoly random_message(const FieldPtr& f, int k, CounterRng& rng);
Fe random_element(const Field& f, CounterRng& rng);

}  // namespace detrs
