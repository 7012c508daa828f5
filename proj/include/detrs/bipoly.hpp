#pragma once

#include <optional>
#include <vector>

#include "detrs/unipoly.hpp"

namespace detrs {

// Dense bivariate polynomial with a tight bounding box. Coefficients are
// stored slice-major: the coefficient of X^a Y^b lives at index b*nx + a, so
// each Y-slice (a polynomial in X) is contiguous.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(FieldPtr f) : f_(std::move(f)) {}
  // Grid of size nx*ny in slice-major order; trimmed on construction.
  BiPoly(FieldPtr f, int nx, int ny, std::vector<Fe> grid);

  static BiPoly constant(FieldPtr f, Fe c);
  static BiPoly from_slices(FieldPtr f, const std::vector<UniPoly>& slices);
  static BiPoly from_x(const UniPoly& p);  // p(X)
  static BiPoly from_y(const UniPoly& p);  // p(Y)
  static BiPoly monomial(FieldPtr f, Fe c, int a, int b);
  // Y - f(X)
  static BiPoly y_minus(const UniPoly& f);

  const FieldPtr& field_ptr() const { return f_; }
  const Field& field() const { return *f_; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return nx_ == 1 && ny_ == 1 && c_[0] == Fe{1}; }
  int deg_x() const { return nx_ - 1; }
  int deg_y() const { return ny_ - 1; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int total_degree() const;
  Fe coeff(int a, int b) const {
    return (a < 0 || b < 0 || a >= nx_ || b >= ny_) ? Fe{0} : c_[static_cast<std::size_t>(b) * nx_ + a];
  }
  const std::vector<Fe>& grid() const { return c_; }

  UniPoly slice(int b) const;  // coefficient of Y^b, a polynomial in X
  std::vector<UniPoly> slices() const;
  UniPoly lc_y() const { return slice(deg_y()); }

  UniPoly eval_x(Fe alpha) const;  // P(alpha, Y)
  Fe eval(Fe alpha, Fe beta) const;
  UniPoly substitute_y(const UniPoly& g) const;  // P(X, g(X))

  BiPoly scaled(Fe s) const;
  // Canonical scalar: leading X-coefficient of the leading Y-slice is 1.
  BiPoly normalized() const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b);

 private:
  void trim();
  FieldPtr f_;
  int nx_ = 0, ny_ = 0;
  std::vector<Fe> c_;
};

struct WDeg {
  int a_weight = 1;
  int b_weight = 0;  // k - 1
};

int bp_wdeg(const BiPoly& p, WDeg w);
BiPoly bp_hasse(const BiPoly& p, int e1, int e2);
UniPoly bp_eval(const BiPoly& p, Fe alpha);
Fe bp_eval(const BiPoly& p, Fe alpha, Fe beta);

struct ContentSplit {
  UniPoly content;
  BiPoly primitive;
};
ContentSplit bp_x_content(const BiPoly& p);

BiPoly bp_exact_div(const BiPoly& p, const BiPoly& q);
std::optional<BiPoly> bp_try_div(const BiPoly& p, const BiPoly& q);
BiPoly bp_gcd(const BiPoly& p, const BiPoly& q);
UniPoly bp_resultant_y(const BiPoly& p, const BiPoly& q);
BiPoly bp_shift_x(const BiPoly& p, Fe alpha);
BiPoly bp_mod_xpow(const BiPoly& p, int s);
// Product with every monomial of X-degree >= xcap dropped.
BiPoly bp_mul_trunc(const BiPoly& a, const BiPoly& b, int xcap);
BiPoly bp_pow(const BiPoly& p, int e);

// Canonical order: Y-degree, then X-degree, then coefficients slice-major.
bool bp_canonical_less(const BiPoly& a, const BiPoly& b);

}  // namespace detrs
