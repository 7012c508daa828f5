#pragma once

#include <optional>
#include <vector>

#include "detrs/bipoly.hpp"
#include "detrs/interpolate.hpp"
#include "detrs/received_word.hpp"

namespace detrs {

// Root lift of Q(X + alpha, Y) around the seed: Q(X + alpha, phi) = 0 mod X^precision.
struct LiftState {
  Fe alpha;
  UniPoly phi;
  int precision = 1;
  Fe denom;  // Q^(0,1)(alpha, phi(alpha)), fixed at the seed
};

LiftState newton_init(const BiPoly& q, Fe alpha, Fe beta);  // BadSeed
LiftState newton_step(const BiPoly& q, const LiftState& st);  // PreconditionViolated
// k-1 steps from the seed, shifted back to the original coordinates.
std::optional<UniPoly> newton_recover(const BiPoly& q, Fe alpha, Fe beta, int k);

struct SudanEvent {
  int level;
  std::size_t point;  // index into the original word
  std::optional<UniPoly> candidate;
  bool accepted;
};

struct SudanReport {
  DecodeParams params;
  BiPoly q;
  bool shortcut = false;  // the whole word lies on one codeword
  int depth = 0;          // recursion levels entered
  std::vector<SudanEvent> trace;
  std::vector<UniPoly> list;
};

SudanReport sudan_decode_report(const ReceivedWord& w, int k);
std::vector<UniPoly> sudan_decode(const ReceivedWord& w, int k);

// Sorts into canonical coefficient-lex order and drops duplicates.
void canonical_sort(std::vector<UniPoly>& list);

}  // namespace detrs
