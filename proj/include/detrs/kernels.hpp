#pragma once

#include <cstddef>
#include <vector>

#include "detrs/gf.hpp"

// Inner loops that dominate decoding time. Each kernel has a plain serial
// version, kept as the reference the tests compare against, and an OpenMP
// version. The dispatching entry points pick the parallel one only when the
// work is large enough and more than one thread is available.
namespace detrs::kernels {

// Read-only view of a slice-major coefficient grid.
struct GridView {
  const Fe* c = nullptr;
  int nx = 0, ny = 0;
};

// out[b*xcap + a] = coefficient of X^a Y^b in A*B for a < xcap, b < ycap.
// out must hold xcap*ycap entries; it is overwritten.
void mul_serial(const Field& f, GridView a, GridView b, int xcap, int ycap, Fe* out);
void mul_omp(const Field& f, GridView a, GridView b, int xcap, int ycap, Fe* out);
void mul(const Field& f, GridView a, GridView b, int xcap, int ycap, Fe* out);

// Hasse-expansion rows of the interpolation system. For each point j and each
// (e1, e2) with e1 + e2 < m (ordered by e1 + e2, then e1), one row with entry
// C(a,e1) C(b,e2) alpha^(a-e1) beta^(b-e2) in the column of monomial (a, b).
struct Monomial {
  int a, b;
};
std::vector<Fe> interp_rows_serial(const Field& f, const std::vector<Fe>& alphas, const std::vector<Fe>& betas,
                                   int m, const std::vector<Monomial>& cols);
std::vector<Fe> interp_rows_omp(const Field& f, const std::vector<Fe>& alphas, const std::vector<Fe>& betas, int m,
                                const std::vector<Monomial>& cols);
std::vector<Fe> interp_rows(const Field& f, const std::vector<Fe>& alphas, const std::vector<Fe>& betas, int m,
                            const std::vector<Monomial>& cols);

// Agreement counts of every polynomial of degree < k (enumerated by index,
// coefficient c_i = digit i of the index in base q) against the word.
std::vector<int> agreement_table_serial(const Field& f, const std::vector<Fe>& alphas, const std::vector<Fe>& betas,
                                        int k);
std::vector<int> agreement_table_omp(const Field& f, const std::vector<Fe>& alphas, const std::vector<Fe>& betas,
                                     int k);
std::vector<int> agreement_table(const Field& f, const std::vector<Fe>& alphas, const std::vector<Fe>& betas, int k);

int max_threads();

}  // namespace detrs::kernels
