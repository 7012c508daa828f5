#pragma once

#include <vector>

#include "detrs/bipoly.hpp"
#include "detrs/kernels.hpp"
#include "detrs/linalg.hpp"
#include "detrs/received_word.hpp"

namespace detrs {

struct DecodeParams {
  int n = 0, k = 0, t = 0;
  int m = 1;  // multiplicity
  int D = 0;  // (1, k-1)-weighted degree bound
  friend bool operator==(const DecodeParams&, const DecodeParams&) = default;
};

// Number of monomials of (1,k-1)-weighted degree <= D. For k = 1 only the
// pure Y-powers up to D are counted (X carries no information there).
long monomial_count(int D, int k);

// floor(sqrt((k-1)n)) + 1, the default agreement threshold.
int johnson_threshold(int n, int k);
// floor(sqrt(2(k-1)n)) + 1, the agreement the m = 1 decoder guarantees.
int sudan_threshold(int n, int k);

// Smallest m, then smallest D, meeting the nonzero-kernel and root-containment
// conditions. Throws Infeasible when no m up to max(2*ceil(sqrt(n(k-1)))+1, (k-1)n+1) works.
DecodeParams gs_params(int n, int k, int t);
// m = 1 parameters with the least D that guarantees a nonzero Q.
DecodeParams sudan_params(int n, int k);

// Margins of the two invariants: count - n*m(m+1)/2 and t*m - D (k >= 2) or
// t*m (k = 1). Both are positive for feasible parameters.
struct ParamMargins {
  long kernel_margin;
  long root_margin;
};
ParamMargins param_margins(const DecodeParams& p);

// Interpolation columns ordered by (weighted degree, Y-exponent).
std::vector<kernels::Monomial> interpolation_monomials(int D, int k);
Matrix interpolation_matrix(const ReceivedWord& w, const DecodeParams& p);
BiPoly build_interpolation(const ReceivedWord& w, const DecodeParams& p);

}  // namespace detrs
