#pragma once

#include <optional>
#include <span>
#include <vector>

#include "detrs/gf.hpp"

namespace detrs {

struct Point {
  Fe x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Dense univariate polynomial, low degree first, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(FieldPtr f) : f_(std::move(f)) {}
  UniPoly(FieldPtr f, std::vector<Fe> coeffs);
  static UniPoly constant(FieldPtr f, Fe c);
  static UniPoly monomial(FieldPtr f, Fe c, std::size_t deg);
  static UniPoly x(FieldPtr f) { return monomial(std::move(f), Fe{1}, 1); }
  // Linear factor X - a.
  static UniPoly linear(FieldPtr f, Fe a);

  const FieldPtr& field_ptr() const { return f_; }
  const Field& field() const { return *f_; }
  bool has_field() const { return static_cast<bool>(f_); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == Fe{1}; }
  std::size_t size() const { return c_.size(); }
  Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fe{0}; }
  Fe lc() const { return c_.empty() ? Fe{0} : c_.back(); }
  const std::vector<Fe>& coeffs() const { return c_; }

  Fe eval(Fe x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly scaled(Fe s) const;
  UniPoly truncated(std::size_t n) const;  // mod X^n
  UniPoly shifted(Fe a) const;              // p(X + a)
  UniPoly compose(const UniPoly& g) const;  // p(g(X))

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b);

 private:
  void trim();
  FieldPtr f_;
  std::vector<Fe> c_;
};

// Product truncated mod X^n.
UniPoly up_mul_trunc(const UniPoly& a, const UniPoly& b, std::size_t n);

// Lexicographic order on coefficients, low degree first, shorter padded with 0.
bool up_lex_less(const UniPoly& a, const UniPoly& b);

struct DivMod {
  UniPoly quot, rem;
};
DivMod up_divmod(const UniPoly& a, const UniPoly& b);

struct Xgcd {
  UniPoly g, u, v;
};
Xgcd up_xgcd(const UniPoly& a, const UniPoly& b);
UniPoly up_gcd(const UniPoly& a, const UniPoly& b);
UniPoly up_gcd_many(std::span<const UniPoly> polys);

// Irreducibility over the coefficient field (distinct-degree test).
// Constants are not irreducible.
bool up_is_irreducible(const UniPoly& p);

// Multiplicity of the root b, i.e. the largest m with (X-b)^m | p.
int up_root_multiplicity(const UniPoly& p, Fe b);

// Unique polynomial of degree <= k-1 through every point, if one exists.
std::optional<UniPoly> up_interpolate(const FieldPtr& f, std::span<const Point> pts, int k);

}  // namespace detrs
