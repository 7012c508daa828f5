#pragma once

#include <optional>
#include <span>

#include "detrs/bipoly.hpp"
#include "detrs/received_word.hpp"

namespace detrs {

// p1 collects the factors whose slice at alpha is a power of (Y - beta),
// p2 those with positive slice degree not vanishing at beta. Either may also
// carry factors with a constant slice. Both are in canonical scalar form.
struct SplitOutcome {
  BiPoly p1, p2;
};

enum class StableMode { ALike, BLike };

struct StabilityVerdict {
  bool stable = false;
  std::optional<std::size_t> witness;  // first unstable word index
  std::optional<StableMode> mode;      // point-level only
};

bool is_useless(const BiPoly& g, std::span<const Fe> alphas);
StabilityVerdict is_stable(const BiPoly& p, Fe alpha, Fe beta);
StabilityVerdict is_stable(const BiPoly& p, const ReceivedWord& w);

// Work counters, accumulated across calls when the same object is passed.
struct SplitStats {
  long splits = 0;   // split invocations, recursive ones included
  long lifts = 0;    // Hensel lifts started
  long systems = 0;  // membership systems solved
  int max_precision = 0;
};

SplitOutcome split(const BiPoly& p, Fe alpha, Fe beta, SplitStats* stats = nullptr);
// Requires g | P and 1 <= deg_Y g < deg_Y P.
SplitOutcome combine_splits(const BiPoly& p, const BiPoly& g, Fe alpha, Fe beta, SplitStats* stats = nullptr);

// Lift depth: ceil(log2(2 max(deg_X, deg_Y, 2)^2 + 1)) + 1. Precision 2^depth
// exceeds the X-degree of Res_Y(P, V) for any V the systems can produce.
int split_lift_depth(const BiPoly& p);

// The direct system U*known = V mod X^(2^t) with deg_Y U <= ycap,
// deg_X U < 2^t, deg_Y V < deg_Y P, deg_X V <= deg_X P. Returns V from the
// canonical kernel vector (V columns ordered first), or nothing if the kernel
// is trivial. Only meant for small instances.
std::optional<BiPoly> solve_factor_system(const BiPoly& known, const BiPoly& p, int t, int ycap);

}  // namespace detrs
