#pragma once

#include <optional>

#include "detrs/bipoly.hpp"

namespace detrs {

// Seed of a lift: P(alpha, Y) = g0 * h0 with g0 = (Y - beta)^m, h0(beta) != 0.
struct HenselSeed {
  int m = 0;
  UniPoly g0, h0;
  std::optional<UniPoly> a0, b0;  // Bezout pair a0*g0 + b0*h0 = 1, only when 0 < m < deg
};

HenselSeed hensel_init(const BiPoly& p, Fe alpha, Fe beta);  // XSliceZero

// Lift state in coordinates shifted so that alpha sits at X = 0.
struct HenselState {
  Fe alpha;
  BiPoly g, h, a, b;
  int level = 0;
};

// Level-0 state of the shifted polynomial. Requires 0 < m < deg P(alpha, Y).
HenselState hensel_start(const BiPoly& p, Fe alpha, Fe beta);

// One quadratic step on the shifted polynomial. With truncate = false the
// recurrences run on full polynomials (debug mode, degrees grow like 5^i).
// Throws CongruenceBroken if the state invariants fail before or after.
HenselState hensel_step(const BiPoly& p_shifted, const HenselState& st, bool truncate = true);

// True iff P = g h and a g + b h = 1 modulo X^(2^level).
bool hensel_invariants_hold(const BiPoly& p_shifted, const HenselState& st);

struct HenselLift {
  BiPoly g, h;  // shifted coordinates
};
HenselLift hensel_lift(const BiPoly& p, Fe alpha, Fe beta, int t);

// Lift of P = c * u with u monic in Y, over F[[X]] truncated at a precision
// that doubles on demand. The input is already shifted so the ideal is (X),
// and c0, u0 are coprime with u0 monic. Keeps s = c^-1 mod (u, X^prec) as the
// Bezout certificate, so no second cofactor inverse is needed.
class MonicLifter {
 public:
  MonicLifter(BiPoly p_shifted, const UniPoly& c0, const UniPoly& u0);

  void lift_to(int precision);
  int precision() const { return prec_; }
  const BiPoly& monic() const { return u_; }
  const BiPoly& cofactor() const { return c_; }

 private:
  void step();
  BiPoly p_, c_, u_, s_;
  int prec_ = 1;
  bool s_stale_ = false;  // s lags one Newton step until the next lift needs it
};

// Quotient and remainder of a by the monic-in-Y u, all modulo X^n.
struct SeriesDivMod {
  BiPoly quot, rem;
};
SeriesDivMod series_divmod_monic(const BiPoly& a, const BiPoly& u, int n);

}  // namespace detrs
