#pragma once

#include <optional>
#include <vector>

#include "detrs/bipoly.hpp"
#include "detrs/received_word.hpp"
#include "detrs/split.hpp"

// Deliberately naive ground truth for tests. Nothing here is used by the
// decoders except the explicit brute-force fallback.
namespace detrs::oracle {

inline constexpr u64 kDefaultBound = 1'000'000;

// Every polynomial of degree < k with agreement >= t, canonical order.
std::vector<UniPoly> brute_list_decode(const ReceivedWord& w, int k, int t, u64 bound = kDefaultBound);

// Every f of degree < k with Q(X, f(X)) = 0.
std::vector<UniPoly> brute_linear_factors(const BiPoly& q, int k, u64 bound = kDefaultBound);

struct Factorization {
  Fe unit;
  std::vector<BiPoly> factors;  // normalized irreducibles with multiplicity, canonical order
};
// Exhaustive divisor search. Requires q <= 7 and total degree <= 4.
Factorization brute_factor(const BiPoly& p);
BiPoly multiply_out(const Factorization& fz, const FieldPtr& f);

enum class FactorClass { A, B, C, D, PureX };
FactorClass classify(const BiPoly& irreducible, Fe alpha, Fe beta);

struct ClassParts {
  BiPoly a, b, c, d;
};
ClassParts class_parts(const Factorization& fz, const FieldPtr& f, Fe alpha, Fe beta);

// p1 = P_A R1 and p2 = P_B R2 with R1 R2 | P_D, all up to scalars.
bool split_matches(const SplitOutcome& out, const ClassParts& parts);

// Root lift of Q(X + alpha, Y) from beta by quadratic Newton iteration,
// returned modulo X^s in shifted coordinates; nothing if Q_Y vanishes at the seed
// or the seed is not a root.
std::optional<UniPoly> newton_quadratic(const BiPoly& q, Fe alpha, Fe beta, int s);

}  // namespace detrs::oracle
