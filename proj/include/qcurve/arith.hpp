#pragma once
// Exact integer and modular arithmetic, deterministic primality, congruence
// scans, and small finite-field construction.
//
// Determinism conventions (fixed so results are reproducible everywhere):
//  - field modulus = first irreducible monic polynomial in ascending
//    lexicographic order of the coefficient vector (c0,...,c_{k-1});
//  - generator = first element of full multiplicative order in index order,
//    where the index of an element with coefficients (c0,...,c_{k-1}) is
//    c0 + c1*p + ... + c_{k-1}*p^{k-1}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace qcurve {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

// Error taxonomy, mirrored by the CLI exit codes:
//   UsageError -> 2 (bad flags / parse), ConstraintError -> 3 (valid syntax,
//   invalid mathematical input), InvariantError -> 1 (internal inconsistency).
struct ConstraintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

inline i64 imod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return (u64)((unsigned __int128)a * b % m);
}

inline u64 powmod_u64(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin; the fixed base set decides correctly for all
// n < 2^64.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) n /= d, ++e;
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline i64 egcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  i64 x1, y1;
  i64 g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline i64 invmod(i64 a, i64 m) {
  i64 x, y;
  i64 g = egcd(imod(a, m), m, x, y);
  if (g != 1) throw ConstraintError("invmod: element not invertible");
  return imod(x, m);
}

// Residue: an integer reduced mod m, with closed arithmetic.
struct Residue {
  i64 v{};
  i64 m{};

  Residue() = default;
  Residue(i64 value, i64 modulus) : v(imod(value, modulus)), m(modulus) {
    if (modulus <= 0) throw ConstraintError("Residue: modulus must be positive");
  }

  Residue operator+(const Residue& o) const { check(o); return {v + o.v, m}; }
  Residue operator-(const Residue& o) const { check(o); return {v - o.v, m}; }
  Residue operator*(const Residue& o) const {
    check(o);
    return {(i64)mulmod_u64((u64)v, (u64)o.v, (u64)m), m};
  }
  Residue operator-() const { return {-v, m}; }
  Residue inverse() const { return {invmod(v, m), m}; }
  Residue pow(i64 e) const {
    if (e < 0) return inverse().pow(-e);
    return {(i64)powmod_u64((u64)v, (u64)e, (u64)m), m};
  }
  bool operator==(const Residue& o) const { return v == o.v && m == o.m; }
  bool operator<(const Residue& o) const {
    return std::tie(m, v) < std::tie(o.m, o.v);
  }

 private:
  void check(const Residue& o) const {
    if (m != o.m) throw InvariantError("Residue: modulus mismatch");
  }
};

// All x in [1, q-1] with A x^2 + B x + C == 0 mod q, by exhaustive scan.
// The scan is the definition; q stays desk-sized.
inline std::set<i64> solve_unit_congruence(i64 A, i64 B, i64 C, i64 q) {
  if (q <= 0 || !is_prime((u64)q))
    throw ConstraintError("solve_unit_congruence: q must be prime");
  i64 a = imod(A, q), b = imod(B, q), c = imod(C, q);
  std::set<i64> out;
  for (i64 x = 1; x < q; ++x) {
    i64 val = imod(imod(a * x, q) * x + b * x + c, q);
    if (val == 0) out.insert(x);
  }
  return out;
}

namespace detail {

// Dense univariate polynomials over F_p, little-endian coefficients.
using Poly = std::vector<i64>;

inline void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly padd(const Poly& a, const Poly& b, i64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    i64 s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = imod(s, p);
  }
  ptrim(r);
  return r;
}

inline Poly psub(const Poly& a, const Poly& b, i64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    i64 s = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    r[i] = imod(s, p);
  }
  ptrim(r);
  return r;
}

inline Poly pmul(const Poly& a, const Poly& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = imod(r[i + j] + a[i] * b[j], p);
  }
  ptrim(r);
  return r;
}

// Remainder of a by monic f.
inline Poly pmod(Poly a, const Poly& f, i64 p) {
  ptrim(a);
  size_t k = f.size() - 1;
  while (a.size() > k) {
    i64 lead = a.back();
    size_t shift = a.size() - 1 - k;
    if (lead) {
      for (size_t i = 0; i < f.size(); ++i)
        a[shift + i] = imod(a[shift + i] - lead * f[i], p);
    }
    a.pop_back();
    ptrim(a);
    if (a.size() <= k) break;
  }
  return a;
}

inline Poly ppowmod(Poly base, u64 e, const Poly& f, i64 p) {
  Poly r = {1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pmod(pmul(r, base, p), f, p);
    base = pmod(pmul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

inline Poly pgcd(Poly a, Poly b, i64 p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    i64 lead_inv = invmod(b.back(), p);
    Poly bm = b;
    for (auto& c : bm) c = imod(c * lead_inv, p);
    a = pmod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

// f monic of degree k >= 1.  Irreducible iff x^{p^k} == x mod f and, for
// every prime t | k, gcd(x^{p^{k/t}} - x, f) is constant.
inline bool poly_irreducible(const Poly& f, i64 p) {
  size_t k = f.size() - 1;
  Poly x = {0, 1};
  if (k == 1) return true;
  Poly t = x;
  std::vector<Poly> frob(k + 1);  // frob[i] = x^{p^i} mod f
  frob[0] = x;
  for (size_t i = 1; i <= k; ++i) {
    t = ppowmod(t, (u64)p, f, p);
    frob[i] = t;
  }
  if (psub(frob[k], x, p) != Poly{}) return false;
  for (auto [q, e] : factorize((u64)k)) {
    (void)e;
    Poly d = psub(frob[k / q], x, p);
    Poly g = pgcd(f, d, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace detail

// A finite field F_{p^k}.  Elements are indices in [0, Q): the element with
// coefficient vector (c0,...,c_{k-1}) has index c0 + c1 p + ... .
struct FqField {
  i64 p{}, k{}, Q{};
  detail::Poly modpoly;  // monic, size k+1
  i64 gen{};
  std::vector<i64> exptab;  // exptab[i] = index of gen^i, i in [0, Q-1)
  std::vector<i64> logtab;  // logtab[exptab[i]] = i

  std::vector<i64> coeffs(i64 idx) const {
    std::vector<i64> c(k, 0);
    for (i64 i = 0; i < k; ++i) {
      c[i] = idx % p;
      idx /= p;
    }
    return c;
  }

  i64 index_of(const std::vector<i64>& c) const {
    i64 idx = 0;
    for (i64 i = (i64)c.size() - 1; i >= 0; --i) idx = idx * p + imod(c[i], p);
    return idx;
  }

  i64 from_int(i64 v) const { return imod(v, p); }

  i64 add(i64 a, i64 b) const {
    i64 r = 0, mul = 1;
    for (i64 i = 0; i < k; ++i) {
      r += ((a + b) % p) * mul;
      a /= p;
      b /= p;
      mul *= p;
    }
    return r;
  }

  i64 neg(i64 a) const {
    i64 r = 0, mul = 1;
    for (i64 i = 0; i < k; ++i) {
      r += ((p - a % p) % p) * mul;
      a /= p;
      mul *= p;
    }
    return r;
  }

  i64 sub(i64 a, i64 b) const { return add(a, neg(b)); }

  i64 mul(i64 a, i64 b) const {
    if (a == 0 || b == 0) return 0;
    if (!exptab.empty())
      return exptab[(size_t)((logtab[a] + logtab[b]) % (Q - 1))];
    return mul_slow(a, b);
  }

  i64 mul_slow(i64 a, i64 b) const {
    auto pa = coeffs(a), pb = coeffs(b);
    auto prod = detail::pmod(detail::pmul(pa, pb, p), modpoly, p);
    prod.resize(k, 0);
    return index_of(prod);
  }

  i64 pow(i64 a, i64 e) const {
    if (a == 0) {
      if (e < 0) throw ConstraintError("FqField: inverse of zero");
      return e == 0 ? 1 : 0;
    }
    if (!exptab.empty()) {
      i64 L = logtab[a];
      i64 m = Q - 1;
      i64 le = imod((i64)(((__int128)L * (e % m)) % m), m);
      return exptab[(size_t)le];
    }
    if (e < 0) return pow(inv(a), -e);
    i64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  i64 inv(i64 a) const {
    if (a == 0) throw ConstraintError("FqField: inverse of zero");
    if (!exptab.empty()) return exptab[(size_t)((Q - 1 - logtab[a]) % (Q - 1))];
    i64 r = 1, b = a;
    i64 e = Q - 2;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  bool element_has_full_order(i64 a,
                              const std::vector<std::pair<u64, int>>& fac) const {
    if (a == 0) return false;
    for (auto [q, e] : fac) {
      (void)e;
      if (pow(a, (Q - 1) / (i64)q) == 1) return false;
    }
    return true;
  }
};

using Field = std::shared_ptr<const FqField>;

inline Field build_field(i64 p, i64 k) {
  if (p <= 1 || !is_prime((u64)p))
    throw ConstraintError("build_field: characteristic must be prime");
  if (k < 1 || k > 12)
    throw ConstraintError("build_field: extension degree out of range [1,12]");
  i64 Q = 1;
  for (i64 i = 0; i < k; ++i) {
    if (Q > (i64(1) << 48) / p)
      throw ConstraintError("build_field: field too large for desk scale");
    Q *= p;
  }

  auto F = std::make_shared<FqField>();
  F->p = p;
  F->k = k;
  F->Q = Q;

  // Lex-first irreducible modulus: iterate (c0,...,c_{k-1}) with c0 most
  // significant.
  bool found = false;
  for (i64 J = 0; J < Q && !found; ++J) {
    detail::Poly f(k + 1, 0);
    f[k] = 1;
    i64 t = J;
    for (i64 i = 0; i < k; ++i) {
      f[k - 1 - i] = t % p;  // c_{k-1} varies fastest
      t /= p;
    }
    if (detail::poly_irreducible(f, p)) {
      F->modpoly = f;
      found = true;
    }
  }
  if (!found) throw InvariantError("build_field: no irreducible polynomial found");

  if (Q <= (i64(1) << 20)) {
    // First find the generator with table-free arithmetic, then build tables.
    auto fac = factorize((u64)(Q - 1));
    i64 g = 0;
    for (i64 a = 1; a < Q; ++a) {
      if (F->element_has_full_order(a, fac)) {
        g = a;
        break;
      }
    }
    if (!g) throw InvariantError("build_field: no generator found");
    F->gen = g;
    F->exptab.resize((size_t)(Q - 1));
    F->logtab.assign((size_t)Q, 0);
    i64 cur = 1;
    for (i64 i = 0; i < Q - 1; ++i) {
      F->exptab[(size_t)i] = cur;
      F->logtab[(size_t)cur] = i;
      cur = F->mul_slow(cur, g);
    }
    if (cur != 1) throw InvariantError("build_field: generator order mismatch");
  } else {
    auto fac = factorize((u64)(Q - 1));
    i64 g = 0;
    for (i64 a = 1; a < Q; ++a) {
      if (F->element_has_full_order(a, fac)) {
        g = a;
        break;
      }
    }
    if (!g) throw InvariantError("build_field: no generator found");
    F->gen = g;
  }
  return F;
}

struct FqElement {
  Field F;
  i64 idx{};

  std::vector<i64> coeffs() const { return F->coeffs(idx); }
  bool operator==(const FqElement& o) const {
    return F->p == o.F->p && F->k == o.F->k && idx == o.idx;
  }
};

// Element of exact multiplicative order n: the least power of the generator,
// which is gen^{(Q-1)/n}.
inline FqElement nth_root_of_unity(const Field& F, i64 n) {
  if (n <= 0) throw ConstraintError("nth_root_of_unity: n must be positive");
  if ((F->Q - 1) % n != 0)
    throw ConstraintError("nth_root_of_unity: n does not divide Q-1");
  return {F, F->pow(F->gen, (F->Q - 1) / n)};
}

// First root (index order) in sup of sub's modulus polynomial; defines the
// standard embedding of sub into sup.  Requires same p and sub.k | sup.k.
inline i64 subfield_root(const FqField& sub, const FqField& sup) {
  if (sub.p != sup.p || sup.k % sub.k != 0)
    throw ConstraintError("subfield_root: not a subfield pair");
  for (i64 c = 0; c < sup.Q; ++c) {
    i64 acc = 0;
    for (i64 i = (i64)sub.modpoly.size() - 1; i >= 0; --i)
      acc = sup.add(sup.mul(acc, c), sup.from_int(sub.modpoly[i]));
    if (acc == 0) return c;
  }
  throw InvariantError("subfield_root: no root found");
}

// Image in sup of the sub element with the given index, through the standard
// embedding.
inline i64 embed_element(const FqField& sub, const FqField& sup, i64 subroot,
                         i64 idx) {
  auto c = sub.coeffs(idx);
  i64 acc = 0;
  for (i64 i = (i64)c.size() - 1; i >= 0; --i)
    acc = sup.add(sup.mul(acc, subroot), sup.from_int(c[i]));
  return acc;
}

inline bool fits_i64(const BigInt& v) {
  return v >= std::numeric_limits<i64>::min() &&
         v <= std::numeric_limits<i64>::max();
}

inline BigInt bigpow(BigInt base, u64 e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat rat(i64 n, i64 d = 1) { return Rat(BigInt(n), BigInt(d)); }

inline std::string rat_str(const Rat& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

}  // namespace qcurve
