#include "detrs/gf.hpp"

#include <algorithm>

namespace detrs {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::YDegreeZero: return "YDegreeZero";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NoKernel: return "NoKernel";
    case ErrorKind::TrivialKernel: return "TrivialKernel";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BadSeed: return "BadSeed";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::XSliceZero: return "XSliceZero";
    case ErrorKind::CongruenceBroken: return "CongruenceBroken";
    case ErrorKind::PotentialNotDecreasing: return "PotentialNotDecreasing";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::NoOpEdit: return "NoOpEdit";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime_trial(u64 p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (u64 d = 5; d <= p / d; d += 6) {
    if (p % d == 0 || p % (d + 2) == 0) return false;
  }
  return true;
}

namespace {

// Polynomials over GF(p) as plain residue vectors, low degree first. Only the
// field constructor and extension-field inversion need these.
using Vec = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 invmod(u64 a, u64 p) {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  // Extended Euclid on integers; signed 128-bit keeps the cofactors exact.
  __int128 r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1; r0 = r1; r1 = t;
    t = s0 - q * s1; s0 = s1; s1 = t;
  }
  __int128 m = s0 % static_cast<__int128>(p);
  if (m < 0) m += p;
  return static_cast<u64>(m);
}

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec vmod(Vec a, const Vec& m, u64 p) {
  trim(a);
  std::size_t dm = m.size() - 1;
  u64 il = invmod(m.back(), p);
  while (a.size() > dm) {
    u64 c = mulmod(a.back(), il, p);
    std::size_t sh = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[sh + i] = submod(a[sh + i], mulmod(c, m[i], p), p);
    trim(a);
  }
  return a;
}

Vec vmul(const Vec& a, const Vec& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Vec c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
  trim(c);
  return c;
}

Vec vsub(Vec a, const Vec& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

Vec vgcd(Vec a, Vec b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = vmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Vec vpowmod(Vec base, u64 e, const Vec& m, u64 p) {
  Vec result{1};
  base = vmod(base, m, p);
  while (e) {
    if (e & 1) result = vmod(vmul(result, base, p), m, p);
    e >>= 1;
    if (e) base = vmod(vmul(base, base, p), m, p);
  }
  return result;
}

bool irreducible(const Vec& m, u64 p) {
  unsigned r = static_cast<unsigned>(m.size() - 1);
  Vec x{0, 1};
  Vec cur = x;
  for (unsigned i = 1; i <= r / 2; ++i) {
    cur = vpowmod(cur, p, m, p);  // X^{p^i} mod m
    Vec g = vgcd(vsub(cur, x, p), m, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

FieldPtr Field::make(u64 p, unsigned r, std::vector<u64> modulus, Options opt) {
  if (p < 2) fail(ErrorKind::NotPrime, "characteristic must be at least 2");
  if (r < 1) fail(ErrorKind::DegreeMismatch, "extension degree must be at least 1");
  if (p > kMersenne61) fail(ErrorKind::Unsupported, "characteristic above 2^61-1");
  if (p < (u64{1} << 42)) {
    if (!is_prime_trial(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  } else if (!opt.trusted_prime) {
    fail(ErrorKind::NotPrime, std::to_string(p) + " is too large for trial division; mark it trusted");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->r_ = r;
  f->trusted_ = p >= (u64{1} << 42) && opt.trusted_prime;
  f->mersenne_ = p == kMersenne61;
  u128 sq = static_cast<u128>(p - 1) * (p - 1);
  u128 cap = ~u128{0} / (sq == 0 ? 1 : sq);
  f->lazy_batch_ = cap > (u128{1} << 62) ? (u64{1} << 62) : static_cast<u64>(cap);

  // q and the digit weights; extension fields must pack into 64 bits.
  u128 q = 1;
  f->pw_.clear();
  for (unsigned i = 0; i < r; ++i) {
    f->pw_.push_back(static_cast<u64>(q));
    q *= p;
    if (r > 1 && q > ~u64{0}) fail(ErrorKind::TooLarge, "field order exceeds 2^64");
  }
  f->q_ = r == 1 ? p : static_cast<u64>(q);

  if (r == 1) {
    if (!modulus.empty() && !(modulus.size() == 2 && modulus[1] == 1))
      fail(ErrorKind::DegreeMismatch, "prime field takes no modulus");
    return f;
  }

  if (modulus.empty()) {
    // Scan monic degree-r polynomials; the index reads (c0,...,c_{r-1}) as a
    // base-p number with c0 least significant.
    Vec cand(r + 1, 0);
    cand[r] = 1;
    bool found = false;
    for (u64 idx = 0; idx < f->q_ && !found; ++idx) {
      u64 t = idx;
      for (unsigned i = 0; i < r; ++i) { cand[i] = t % p; t /= p; }
      if (cand[0] != 0 && irreducible(cand, p)) found = true;
    }
    if (!found) fail(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
    modulus = cand;
  } else {
    if (modulus.size() != r + 1) fail(ErrorKind::DegreeMismatch, "modulus degree differs from r");
    for (u64 c : modulus)
      if (c >= p) fail(ErrorKind::DegreeMismatch, "modulus coefficient out of range");
    if (modulus.back() != 1) fail(ErrorKind::DegreeMismatch, "modulus must be monic");
    if (!irreducible(modulus, p)) fail(ErrorKind::ReducibleModulus, "modulus is reducible");
  }
  f->mod_ = modulus;
  f->build_tables();
  return f;
}

void Field::build_tables() {
  if (r_ == 1 || q_ > (u64{1} << 16)) return;
  // Multiplicative generator: the least index whose order is q-1.
  u64 n = q_ - 1;
  std::vector<u64> primes;
  for (u64 d = 2, m = n; m > 1; ++d) {
    if (d * d > m) { primes.push_back(m); break; }
    if (m % d == 0) { primes.push_back(d); while (m % d == 0) m /= d; }
  }
  auto slow_pow = [&](Fe a, u64 e) {
    Fe r{1};
    while (e) {
      if (e & 1) r = mul_ext_slow(r, a);
      a = mul_ext_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  u64 gen = 0;
  for (u64 g = 1; g < q_ && gen == 0; ++g) {
    bool ok = true;
    for (u64 l : primes)
      if (slow_pow(Fe{g}, n / l) == Fe{1}) { ok = false; break; }
    if (ok) gen = g;
  }
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  Fe x{1};
  for (u64 i = 0; i < n; ++i) {
    exp_[i] = exp_[i + n] = x.v;
    log_[x.v] = static_cast<std::uint32_t>(i);
    x = mul_ext_slow(x, Fe{gen});
  }
}

Fe Field::from_int(i64 x) const {
  i64 m = x % static_cast<i64>(p_);  // p <= 2^61-1 fits in i64
  if (m < 0) m += static_cast<i64>(p_);
  return Fe{static_cast<u64>(m)};
}

Fe Field::from_coords(const std::vector<u64>& c) const {
  if (c.size() > r_) fail(ErrorKind::DegreeMismatch, "too many coordinates");
  u64 v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) fail(ErrorKind::OutOfRange, "coordinate out of range");
    v += c[i] * pw_[i];
  }
  return Fe{v};
}

std::vector<u64> Field::coords(Fe a) const {
  std::vector<u64> c(r_);
  u64 v = a.v;
  for (unsigned i = 0; i < r_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Fe Field::element(u64 index) const {
  if (index >= q_) fail(ErrorKind::OutOfRange, "element index beyond field order");
  return Fe{index};
}

Fe Field::add_ext(Fe a, Fe b) const {
  if (p_ == 2) return Fe{a.v ^ b.v};
  u64 out = 0, x = a.v, y = b.v;
  for (unsigned i = 0; i < r_; ++i) {
    u64 s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    out += s * pw_[i];
    x /= p_;
    y /= p_;
  }
  return Fe{out};
}

Fe Field::sub_ext(Fe a, Fe b) const {
  if (p_ == 2) return Fe{a.v ^ b.v};
  u64 out = 0, x = a.v, y = b.v;
  for (unsigned i = 0; i < r_; ++i) {
    u64 s = submod(x % p_, y % p_, p_);
    out += s * pw_[i];
    x /= p_;
    y /= p_;
  }
  return Fe{out};
}

Fe Field::mul_ext(Fe a, Fe b) const {
  if (!exp_.empty()) {
    if (a.v == 0 || b.v == 0) return Fe{0};
    return Fe{exp_[log_[a.v] + log_[b.v]]};
  }
  return mul_ext_slow(a, b);
}

Fe Field::mul_ext_slow(Fe a, Fe b) const {
  Vec x = coords(a), y = coords(b);
  Vec prod = vmod(vmul(x, y, p_), mod_, p_);
  prod.resize(r_, 0);
  return from_coords(prod);
}

Fe Field::inv(Fe a) const {
  if (a.v == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (r_ == 1) return Fe{invmod(a.v, p_)};
  // Extended Euclid in GF(p)[X] against the modulus: s*a + t*mod = g.
  Vec r0 = mod_, r1 = coords(a), s0{}, s1{1};
  trim(r1);
  while (!r1.empty()) {
    // one division step r0 = qt*r1 + rem
    Vec rem = r0, qt;
    u64 il = invmod(r1.back(), p_);
    trim(rem);
    if (rem.size() >= r1.size()) qt.assign(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size() && !rem.empty()) {
      u64 c = mulmod(rem.back(), il, p_);
      std::size_t sh = rem.size() - r1.size();
      qt[sh] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[sh + i] = submod(rem[sh + i], mulmod(c, r1[i], p_), p_);
      trim(rem);
    }
    Vec s2 = vsub(s0, vmul(qt, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because the modulus is irreducible.
  u64 ic = invmod(r0[0], p_);
  Vec out(r_, 0);
  for (std::size_t i = 0; i < s0.size() && i < r_; ++i) out[i] = mulmod(s0[i], ic, p_);
  return from_coords(out);
}

Fe Field::pow(Fe a, u128 e) const {
  Fe r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

Elem fe_arith(const Elem& a, const Elem& b, FeOp op) {
  if (!same_field(a.field(), b.field())) fail(ErrorKind::FieldMismatch, "operands from different fields");
  const Field& f = *a.field();
  switch (op) {
    case FeOp::Add: return Elem(a.field(), f.add(a.value(), b.value()));
    case FeOp::Sub: return Elem(a.field(), f.sub(a.value(), b.value()));
    case FeOp::Mul: return Elem(a.field(), f.mul(a.value(), b.value()));
    case FeOp::Neg: return Elem(a.field(), f.neg(a.value()));
  }
  return a;
}

Elem fe_inv(const Elem& a) { return Elem(a.field(), a.field()->inv(a.value())); }

BinomTable::BinomTable(const Field& f, unsigned nmax) : nmax_(nmax) {
  rows_.resize(static_cast<std::size_t>(nmax + 1) * (nmax + 2) / 2);
  for (unsigned n = 0; n <= nmax; ++n) {
    std::size_t base = static_cast<std::size_t>(n) * (n + 1) / 2;
    std::size_t prev = n == 0 ? 0 : static_cast<std::size_t>(n - 1) * n / 2;
    rows_[base] = f.one();
    rows_[base + n] = f.one();
    for (unsigned k = 1; k < n; ++k) rows_[base + k] = f.add(rows_[prev + k - 1], rows_[prev + k]);
  }
}

Fe binom(const Field& f, unsigned n, unsigned k) {
  if (k > n) return f.zero();
  k = std::min(k, n - k);
  std::vector<Fe> row(k + 1, f.zero());
  row[0] = f.one();
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = f.add(row[j], row[j - 1]);
  return row[k];
}

}  // namespace detrs
