#pragma once
// Curve families and their normal forms.
//
// Three-branch covers y^q = x^{e0}(x-1)^{e1} are normalized through the
// six-element exponent orbit coming from permuting {0, 1, inf} and rescaling
// the exponent vector.  Four-branch covers carry a cross-ratio parameter a;
// permutations of the branch points are realizable by Möbius maps exactly
// when they preserve the cross ratio, which the code checks by exact
// cross-multiplication over Q, F_p, or a quadratic algebra K[a]/(m).
//
// Wild one-pole covers y^p - y = B(x) with cubic B are normalized by the
// root multiset of B: triple root, double root, or three distinct roots with
// a canonical cross-ratio lambda (possibly in an extension field).

#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <qcurve/funcfield.hpp>

namespace qcurve {

// ---------------------------------------------------------------------------
// Three-branch exponent orbits.

// Orbit of r under the six substitutions induced by permuting the branch
// points of (1, r, -(1+r)) and rescaling:
// {r, 1/r, -(1+r), -1/(1+r), -r/(1+r), -(1+r)/r} mod q.
inline std::set<i64> exponent_orbit_3(i64 r, i64 q) {
  if (q < 2 || !is_prime((u64)q))
    throw ConstraintError("exponent_orbit_3: q must be prime");
  r = imod(r, q);
  if (r == 0 || r == q - 1)
    throw ConstraintError("exponent_orbit_3: degenerate r (0 or -1 mod q)");
  i64 rinv = invmod(r, q);
  i64 s = imod(-(1 + r), q);  // nonzero since r != -1
  i64 sinv = invmod(s, q);
  std::set<i64> out;
  out.insert(r);
  out.insert(rinv);
  out.insert(s);
  out.insert(sinv);
  out.insert(imod(r * sinv, q));
  out.insert(imod(rinv * s, q));
  return out;
}

// Canonical representative for the cover y^q = x^{m-n}(x-1)^n: scale the
// exponent triple (m-n, n, -m) so the first slot is 1, then take the orbit
// minimum.
inline i64 normalize_3branch(i64 m, i64 n, i64 q) {
  if (q < 2 || !is_prime((u64)q))
    throw ConstraintError("normalize_3branch: q must be prime");
  if (!(1 <= n && n < m && m <= (q + 1) / 2))
    throw ConstraintError("normalize_3branch: need 1 <= n < m <= (q+1)/2");
  i64 r = imod(n * invmod(m - n, q), q);
  if (r == 0 || r == q - 1)
    throw ConstraintError("normalize_3branch: exponent degenerates mod q");
  return *exponent_orbit_3(r, q).begin();
}

// The orbit of r = 1, i.e. the two-equal-exponent class {1, g, 2g-1} for
// q = 2g+1 >= 5.  Membership is the hyperellipticity criterion for
// three-branch covers.
inline std::set<i64> hyperelliptic_orbit_3(i64 q) {
  return exponent_orbit_3(1, q);
}

inline bool three_branch_hyperelliptic(i64 r, i64 q) {
  return *exponent_orbit_3(r, q).begin() == 1;
}

// ---------------------------------------------------------------------------
// Cross-ratio machinery over an exact coefficient kernel.

struct RatKernel {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_i64(i64 v) const { return rat(v); }
  Elem from_rat(const Rat& v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw ConstraintError("rational inverse of zero");
    return Rat(1) / a;
  }
  bool is_zero(const Elem& a) const { return a.numerator() == 0; }
  bool less(const Elem& a, const Elem& b) const { return a < b; }
  std::string str(const Elem& a) const { return rat_str(a); }
};

struct FqKernel {
  Field F;
  using Elem = i64;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_i64(i64 v) const { return F->from_int(v); }
  Elem from_rat(const Rat& v) const {
    BigInt den = v.denominator() % F->p;
    if (den == 0)
      throw ConstraintError("rational parameter has vanishing denominator mod p");
    i64 n = (i64)(BigInt(v.numerator() % F->p));
    i64 d = (i64)(BigInt(den));
    return F->mul(F->from_int(n), F->inv(F->from_int(d)));
  }
  Elem add(Elem a, Elem b) const { return F->add(a, b); }
  Elem sub(Elem a, Elem b) const { return F->sub(a, b); }
  Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
  Elem neg(Elem a) const { return F->neg(a); }
  Elem inv(Elem a) const { return F->inv(a); }
  bool is_zero(Elem a) const { return a == 0; }
  bool less(Elem a, Elem b) const { return a < b; }
  std::string str(Elem a) const { return std::to_string(a); }
};

// Polynomials in one symbol over the kernel, optionally reduced modulo a
// monic quadratic minimal polynomial a^2 + m1 a + m0.  Projective pairs
// (num, den) represent points of P^1 including infinity; equality is tested
// by cross-multiplication so no inversion is ever required (the quadratic
// algebra may have zero divisors when the minimal polynomial splits mod p).
template <class K>
struct SymCtx {
  K ker;
  std::optional<std::array<typename K::Elem, 2>> minpoly;  // {m0, m1}

  using E = typename K::Elem;
  using P = std::vector<E>;

  P reduce(P v) const {
    if (minpoly) {
      while (v.size() > 2) {
        E lead = v.back();
        v.pop_back();
        if (!ker.is_zero(lead)) {
          v[v.size() - 1] = ker.sub(v[v.size() - 1], ker.mul(lead, (*minpoly)[1]));
          v[v.size() - 2] = ker.sub(v[v.size() - 2], ker.mul(lead, (*minpoly)[0]));
        }
      }
    }
    while (!v.empty() && ker.is_zero(v.back())) v.pop_back();
    return v;
  }

  P con(const E& c) const { return reduce({c}); }
  P sym() const { return reduce({ker.zero(), ker.one()}); }

  P add(const P& a, const P& b) const {
    P r(std::max(a.size(), b.size()), ker.zero());
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.size()) r[i] = ker.add(r[i], a[i]);
      if (i < b.size()) r[i] = ker.add(r[i], b[i]);
    }
    return reduce(std::move(r));
  }

  P sub(const P& a, const P& b) const {
    P r(std::max(a.size(), b.size()), ker.zero());
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.size()) r[i] = ker.add(r[i], a[i]);
      if (i < b.size()) r[i] = ker.sub(r[i], b[i]);
    }
    return reduce(std::move(r));
  }

  P mul(const P& a, const P& b) const {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1, ker.zero());
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j)
        r[i + j] = ker.add(r[i + j], ker.mul(a[i], b[j]));
    return reduce(std::move(r));
  }

  bool is_zero(const P& a) const { return reduce(a).empty(); }
  bool eq(const P& a, const P& b) const { return is_zero(sub(a, b)); }

  std::string str(const P& a) const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) {
      if (i) os << ",";
      os << ker.str(a[i]);
    }
    os << ")";
    return os.str();
  }

  struct PV {
    P num, den;
  };

  PV pt_const(const E& c) const { return {con(c), con(ker.one())}; }
  PV pt_sym() const { return {sym(), con(ker.one())}; }
  PV pt_inf() const { return {con(ker.one()), {}}; }

  // d(u, v) = u.num v.den - v.num u.den; vanishes iff u == v in P^1.
  P det(const PV& u, const PV& v) const {
    return sub(mul(u.num, v.den), mul(v.num, u.den));
  }

  bool pv_eq(const PV& u, const PV& v) const { return is_zero(det(u, v)); }

  bool pv_defined(const PV& u) const {
    return !(is_zero(u.num) && is_zero(u.den));
  }

  // Image of y under the Möbius map sending (w, x, z) to (0, 1, inf):
  // the cross ratio of the ordered tuple.
  PV cross_ratio(const PV& w, const PV& x, const PV& y, const PV& z) const {
    PV r{mul(det(y, w), det(x, z)), mul(det(y, z), det(x, w))};
    if (!pv_defined(r))
      throw InvariantError("cross_ratio: indeterminate (coincident points)");
    return r;
  }

  // Deterministic key for a projective value: divide out the denominator
  // when it is invertible (constants always; nonconstant denominators
  // through the extended Euclidean inverse mod the minimal polynomial),
  // otherwise normalize the denominator monic.
  std::string pv_key(const PV& u) const {
    P num = reduce(u.num), den = reduce(u.den);
    if (den.empty()) return "inf";
    if (den.size() == 1) {
      E dinv = ker.inv(den[0]);
      P scaled = num;
      for (auto& c : scaled) c = ker.mul(c, dinv);
      return str(reduce(scaled));
    }
    if (minpoly) {
      auto inv = try_invert(den);
      if (inv) return str(mul(num, *inv));
    }
    E lead = den.back();
    E linv = ker.inv(lead);
    P n2 = num, d2 = den;
    for (auto& c : n2) c = ker.mul(c, linv);
    for (auto& c : d2) c = ker.mul(c, linv);
    return str(n2) + "/" + str(d2);
  }

  // Inverse of a linear polynomial modulo the quadratic minimal polynomial,
  // when it exists (fails on zero divisors of a split algebra).
  std::optional<P> try_invert(const P& v) const {
    if (!minpoly) return std::nullopt;
    P r = reduce(v);
    if (r.empty()) return std::nullopt;
    if (r.size() == 1) return con(ker.inv(r[0]));
    // gcd(c1 a + c0, a^2 + m1 a + m0): remainder of the quadratic by the
    // linear polynomial is m(-c0/c1).
    E c0 = r[0], c1 = r[1];
    E c1inv = ker.inv(c1);
    E root = ker.neg(ker.mul(c0, c1inv));
    E rem = ker.add(ker.mul(root, ker.add(root, (*minpoly)[1])), (*minpoly)[0]);
    if (ker.is_zero(rem)) return std::nullopt;  // zero divisor
    // 1/(c1 a + c0) = (a - root) * c1inv / rem  since
    // (c1 a + c0)(a - root) = c1 (a^2 - root^2 - (c0/c1)(...)) == c1 * rem
    // modulo the minimal polynomial; verified below.
    E s = ker.mul(c1inv, ker.inv(rem));
    P cand = reduce({ker.mul(ker.neg(root), s), s});
    if (!eq(mul(cand, r), con(ker.one())))
      throw InvariantError("try_invert: verification failed");
    return cand;
  }
};

// ---------------------------------------------------------------------------
// Cross-ratio orbits and realizable branch permutations.

enum class CrossRatioClass { Generic, Harmonic, Equianharmonic, Char3Special };

inline std::string cross_ratio_class_str(CrossRatioClass c) {
  switch (c) {
    case CrossRatioClass::Generic: return "generic";
    case CrossRatioClass::Harmonic: return "harmonic";
    case CrossRatioClass::Equianharmonic: return "equianharmonic";
    case CrossRatioClass::Char3Special: return "char3-special";
  }
  return "?";
}

struct CrossRatioOrbit {
  CrossRatioClass cls{};
  int size{};
  std::vector<std::string> values;  // deduplicated canonical keys, sorted
  std::string canonical;            // minimal member's key
};

namespace detail {

// The six projective values {a, 1-a, 1/a, 1/(1-a), (a-1)/a, a/(a-1)}.
template <class K>
std::vector<typename SymCtx<K>::PV> six_cross_ratios(const SymCtx<K>& C,
                                                     const typename SymCtx<K>::P& a) {
  auto one = C.con(C.ker.one());
  auto am1 = C.sub(a, one);
  auto onema = C.sub(one, a);
  using PV = typename SymCtx<K>::PV;
  return {PV{a, one},   PV{onema, one}, PV{one, a},
          PV{one, onema}, PV{am1, a},    PV{a, am1}};
}

template <class K>
CrossRatioOrbit orbit_impl(const SymCtx<K>& C, const typename SymCtx<K>::P& a,
                           bool constant, i64 p) {
  auto one = C.con(C.ker.one());
  if (C.is_zero(a) || C.eq(a, one))
    throw ConstraintError("cross_ratio_orbit: degenerate a in {0,1}");

  auto vals = six_cross_ratios(C, a);
  std::vector<typename SymCtx<K>::PV> kept;
  for (auto& v : vals) {
    bool dup = false;
    for (auto& k : kept)
      if (C.pv_eq(v, k)) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(v);
  }

  CrossRatioOrbit out;
  out.size = (int)kept.size();
  for (auto& v : kept) out.values.push_back(C.pv_key(v));
  if (constant) {
    // value order: compare as kernel elements
    size_t best = 0;
    std::vector<typename K::Elem> as_elems;
    for (auto& v : kept) {
      auto num = C.reduce(v.num), den = C.reduce(v.den);
      as_elems.push_back(C.ker.mul(num.empty() ? C.ker.zero() : num[0],
                                   C.ker.inv(den[0])));
    }
    for (size_t i = 1; i < kept.size(); ++i)
      if (C.ker.less(as_elems[i], as_elems[best])) best = i;
    out.canonical = C.pv_key(kept[best]);
  } else {
    out.canonical = *std::min_element(out.values.begin(), out.values.end());
  }
  std::sort(out.values.begin(), out.values.end());

  // class: special char-3 value, then equianharmonic a^2-a+1=0, then
  // harmonic {-1, 2, 1/2}, else generic
  auto a2 = C.mul(a, a);
  bool equi = C.is_zero(C.add(C.sub(a2, a), one));
  auto harm_poly = C.mul(C.mul(C.add(a, one), C.sub(a, C.con(C.ker.from_i64(2)))),
                         C.sub(C.add(a, a), one));
  bool harm = C.is_zero(harm_poly);
  bool char3 = (p == 3) && C.is_zero(C.add(a, one));
  if (char3)
    out.cls = CrossRatioClass::Char3Special;
  else if (equi)
    out.cls = CrossRatioClass::Equianharmonic;
  else if (harm)
    out.cls = CrossRatioClass::Harmonic;
  else
    out.cls = CrossRatioClass::Generic;

  int expect = out.cls == CrossRatioClass::Char3Special ? 1
               : out.cls == CrossRatioClass::Equianharmonic ? 2
               : out.cls == CrossRatioClass::Harmonic ? 3
                                                      : 6;
  if (constant || C.minpoly || out.cls == CrossRatioClass::Generic) {
    if (out.size != expect)
      throw InvariantError("cross_ratio_orbit: size does not match class");
  }
  return out;
}

// Build a context plus the projective points for a branch tuple.  At most one
// symbolic location is supported; its optional minimal polynomial becomes the
// context modulus.
template <class K>
struct PointSetup {
  SymCtx<K> C;
  std::vector<typename SymCtx<K>::PV> pts;
};

template <class K>
PointSetup<K> setup_points(K ker, const std::vector<Location>& locs) {
  PointSetup<K> S{SymCtx<K>{std::move(ker), std::nullopt}, {}};
  const Symbol* sym = nullptr;
  for (auto& L : locs)
    if (L.index() == 2) {
      if (sym && !(std::get<Symbol>(L) == *sym))
        throw ConstraintError("branch tuple: at most one symbolic point supported");
      sym = &std::get<Symbol>(L);
    }
  if (sym && sym->minpoly) {
    S.C.minpoly = std::array<typename K::Elem, 2>{
        S.C.ker.from_rat(sym->minpoly->first),
        S.C.ker.from_rat(sym->minpoly->second)};
  }
  for (auto& L : locs) {
    if (L.index() == 0)
      S.pts.push_back(S.C.pt_const(S.C.ker.from_rat(std::get<Rat>(L))));
    else if (L.index() == 1)
      S.pts.push_back(S.C.pt_inf());
    else
      S.pts.push_back(S.C.pt_sym());
  }
  for (size_t i = 0; i < S.pts.size(); ++i)
    for (size_t j = i + 1; j < S.pts.size(); ++j)
      if (S.C.pv_eq(S.pts[i], S.pts[j]))
        throw ConstraintError("branch tuple: coincident points");
  return S;
}

template <class K>
std::vector<std::vector<int>> realizable_impl(K ker,
                                              const std::vector<Location>& locs) {
  auto S = setup_points(std::move(ker), locs);
  int n = (int)locs.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  if (n == 3) {
    // PGL(2) is sharply 3-transitive: every permutation of 3 points lifts
    do {
      out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }
  auto base = S.C.cross_ratio(S.pts[0], S.pts[1], S.pts[2], S.pts[3]);
  do {
    auto cr = S.C.cross_ratio(S.pts[perm[0]], S.pts[perm[1]], S.pts[perm[2]],
                              S.pts[perm[3]]);
    if (S.C.pv_eq(cr, base)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace detail

// Orbit of the fourth-point parameter under the 24 reparametrizations of a
// 4-point branch tuple.  p = 0 computes over Q, otherwise over F_p (or the
// quadratic algebra F_p[a]/(minpoly) for a symbolic pinned parameter).
inline CrossRatioOrbit cross_ratio_orbit(const Location& a, i64 p = 0) {
  if (is_infinity(a))
    throw ConstraintError("cross_ratio_orbit: a must be finite or symbolic");
  if (p != 0 && !is_prime((u64)p))
    throw ConstraintError("cross_ratio_orbit: characteristic must be 0 or prime");
  if (a.index() == 0) {
    const Rat& v = std::get<Rat>(a);
    if (p == 0) {
      RatKernel k;
      SymCtx<RatKernel> C{k, std::nullopt};
      return detail::orbit_impl(C, C.con(v), true, 0);
    }
    FqKernel k{build_field(p, 1)};
    SymCtx<FqKernel> C{k, std::nullopt};
    return detail::orbit_impl(C, C.con(k.from_rat(v)), true, p);
  }
  const Symbol& s = std::get<Symbol>(a);
  if (p == 0) {
    RatKernel k;
    SymCtx<RatKernel> C{k, std::nullopt};
    if (s.minpoly)
      C.minpoly = std::array<Rat, 2>{s.minpoly->first, s.minpoly->second};
    return detail::orbit_impl(C, C.sym(), false, 0);
  }
  FqKernel k{build_field(p, 1)};
  SymCtx<FqKernel> C{k, std::nullopt};
  if (s.minpoly)
    C.minpoly = std::array<i64, 2>{k.from_rat(s.minpoly->first),
                                   k.from_rat(s.minpoly->second)};
  return detail::orbit_impl(C, C.sym(), false, p);
}

// Permutations of an ordered branch tuple (3 or 4 distinct points of P^1)
// realizable by Möbius maps.  Each entry maps slot i to slot perm[i].
inline std::vector<std::vector<int>> realizable_point_perms(
    const std::vector<Location>& locs, i64 p = 0) {
  if (locs.size() != 3 && locs.size() != 4)
    throw ConstraintError("realizable_point_perms: need 3 or 4 points");
  if (p != 0 && !is_prime((u64)p))
    throw ConstraintError("realizable_point_perms: characteristic must be 0 or prime");
  if (p == 0) return detail::realizable_impl(RatKernel{}, locs);
  return detail::realizable_impl(FqKernel{build_field(p, 1)}, locs);
}

// ---------------------------------------------------------------------------
// Canonical form of a 4-branch tuple under reparametrization and exponent
// scaling.

struct Canon4 {
  std::string a_key;
  std::array<i64, 4> exps{};
  std::string key;  // "a_key|e0,e1,e2,e3"
};

namespace detail {

template <class K>
Canon4 canonical_4branch_impl(K ker, i64 q, std::array<i64, 4> e,
                              const std::vector<Location>& locs) {
  auto S = setup_points(std::move(ker), locs);
  bool constant = true;
  for (auto& L : locs)
    if (L.index() == 2) constant = false;

  struct Cand {
    std::string akey;
    bool aconst{};
    typename K::Elem aval{};
    std::array<i64, 4> ex{};
  };
  std::optional<Cand> best;
  auto better = [&](const Cand& x, const Cand& y) {
    if (x.aconst && y.aconst) {
      if (S.C.ker.less(x.aval, y.aval)) return true;
      if (S.C.ker.less(y.aval, x.aval)) return false;
    } else if (x.akey != y.akey) {
      return x.akey < y.akey;
    }
    return x.ex < y.ex;
  };

  std::vector<int> perm{0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    auto cr = S.C.cross_ratio(S.pts[perm[0]], S.pts[perm[1]], S.pts[perm[2]],
                              S.pts[perm[3]]);
    Cand c;
    c.akey = S.C.pv_key(cr);
    c.aconst = false;
    if (constant) {
      auto num = S.C.reduce(cr.num), den = S.C.reduce(cr.den);
      if (den.size() == 1 && num.size() <= 1) {
        c.aconst = true;
        c.aval = S.C.ker.mul(num.empty() ? S.C.ker.zero() : num[0],
                             S.C.ker.inv(den[0]));
      }
    }
    std::array<i64, 4> pe{e[perm[0]], e[perm[1]], e[perm[2]], e[perm[3]]};
    for (i64 w = 1; w < q; ++w) {
      c.ex = {imod(pe[0] * w, q), imod(pe[1] * w, q), imod(pe[2] * w, q),
              imod(pe[3] * w, q)};
      if (!best || better(c, *best)) best = c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  Canon4 out;
  out.a_key = best->akey;
  out.exps = best->ex;
  std::ostringstream os;
  os << out.a_key << "|" << out.exps[0] << "," << out.exps[1] << ","
     << out.exps[2] << "," << out.exps[3];
  out.key = os.str();
  return out;
}

}  // namespace detail

// Minimal representative of a 4-branch cover (exponents e at the ordered
// points locs, cyclic degree q) under the action of all 24 Möbius
// reparametrizations combined with exponent scaling by units mod q.
inline Canon4 canonical_4branch(i64 q, std::array<i64, 4> e,
                                const std::vector<Location>& locs, i64 p = 0) {
  if (locs.size() != 4)
    throw ConstraintError("canonical_4branch: need 4 points");
  if (q < 2 || !is_prime((u64)q))
    throw ConstraintError("canonical_4branch: q must be prime");
  for (auto& x : e) {
    x = imod(x, q);
    if (x == 0) throw ConstraintError("canonical_4branch: zero exponent");
  }
  if (p == 0)
    return detail::canonical_4branch_impl(RatKernel{}, q, e, locs);
  if (!is_prime((u64)p))
    throw ConstraintError("canonical_4branch: characteristic must be 0 or prime");
  return detail::canonical_4branch_impl(FqKernel{build_field(p, 1)}, q, e, locs);
}

// ---------------------------------------------------------------------------
// Wild cubic normal forms: y^p - y = B(x), B monic cubic.

struct WildCubicClass {
  char kind{};          // 'C' triple root, 'D' double root, 'E' three distinct
  i64 ext{1};           // extension degree of lambda over F_p (1, 2, or 3)
  i64 lambda{};         // index of lambda in the canonical F_{p^ext} (kind E)
  std::vector<i64> lambda_minpoly;  // monic, little-endian, size ext+1
  CrossRatioClass cr_class{CrossRatioClass::Generic};  // class of lambda
  std::string note;
};

namespace detail {

// roots of the monic cubic with coefficients lifted into F, by scan
inline std::vector<i64> cubic_roots_in(const FqField& F, i64 d, i64 e, i64 l) {
  std::vector<i64> roots;
  i64 dd = F.from_int(d), ee = F.from_int(e), ll = F.from_int(l);
  for (i64 x = 0; x < F.Q; ++x) {
    i64 v = F.add(F.mul(F.add(F.mul(F.add(x, dd), x), ee), x), ll);
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace detail

inline WildCubicClass normalize_wild_cubic(i64 p, i64 d, i64 e, i64 l) {
  if (p < 5 || !is_prime((u64)p))
    throw ConstraintError("normalize_wild_cubic: p must be prime >= 5");
  if (p > 127)
    throw ConstraintError("normalize_wild_cubic: p too large for the extension scan");
  d = imod(d, p);
  e = imod(e, p);
  l = imod(l, p);

  auto Fp = build_field(p, 1);
  auto rational_roots = detail::cubic_roots_in(*Fp, d, e, l);

  // multiplicity via derivatives (2, 3 invertible since p >= 5)
  auto mult = [&](const FqField& F, i64 dd, i64 ee, i64 r) {
    // B' = 3x^2 + 2dx + e, B'' = 6x + 2d
    i64 b1 = F.add(F.add(F.mul(F.from_int(3), F.mul(r, r)),
                         F.mul(F.from_int(2), F.mul(dd, r))),
                   ee);
    if (b1 != 0) return 1;
    i64 b2 = F.add(F.mul(F.from_int(6), r), F.mul(F.from_int(2), dd));
    return b2 != 0 ? 2 : 3;
  };

  WildCubicClass out;
  for (i64 r : rational_roots) {
    int m = mult(*Fp, Fp->from_int(d), Fp->from_int(e), r);
    if (m == 3) {
      out.kind = 'C';
      out.note = "triple root; additive normal form x^3";
      return out;
    }
    if (m == 2) {
      out.kind = 'D';
      out.note = "double root; normal form x(x-1)^2";
      return out;
    }
  }

  // three distinct roots; find the splitting field
  Field F;
  std::vector<i64> roots;
  if (rational_roots.size() == 3) {
    F = Fp;
    roots = rational_roots;
  } else {
    i64 ext = rational_roots.size() == 1 ? 2 : 3;
    F = build_field(p, ext);
    roots = detail::cubic_roots_in(*F, d, e, l);
    if ((i64)roots.size() != 3)
      throw InvariantError("normalize_wild_cubic: splitting scan failed");
  }

  // lambda orbit: all ratios (r_k - r_i)/(r_j - r_i) over orderings
  i64 best = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      int k = 3 - i - j;
      i64 lam = F->mul(F->sub(roots[k], roots[i]),
                       F->inv(F->sub(roots[j], roots[i])));
      if (best < 0 || lam < best) best = lam;
    }
  out.kind = 'E';
  out.lambda = best;
  out.ext = F->k;

  // minimal polynomial of lambda: product of (X - lambda^{p^i}) over the
  // distinct Frobenius conjugates
  std::vector<i64> conj{best};
  i64 cur = F->pow(best, p);
  while (cur != best) {
    conj.push_back(cur);
    cur = F->pow(cur, p);
  }
  detail::Poly mp{F->neg(conj[0]), 1};
  for (size_t i = 1; i < conj.size(); ++i) {
    detail::Poly nxt(mp.size() + 1, 0);
    for (size_t j = 0; j < mp.size(); ++j) {
      nxt[j + 1] = F->add(nxt[j + 1], mp[j]);
      nxt[j] = F->add(nxt[j], F->mul(mp[j], F->neg(conj[i])));
    }
    mp = nxt;
  }
  out.lambda_minpoly.clear();
  for (i64 c : mp) {
    if (c >= F->p) throw InvariantError("normalize_wild_cubic: minpoly not rational");
    out.lambda_minpoly.push_back(c);
  }
  if ((i64)conj.size() != (i64)out.lambda_minpoly.size() - 1)
    throw InvariantError("normalize_wild_cubic: degree mismatch");
  // lambda may generate a smaller field than the splitting field
  out.ext = (i64)conj.size();

  // classify lambda
  i64 lam = best;
  i64 l2 = F->mul(lam, lam);
  bool equi = F->add(F->sub(l2, lam), 1) == 0;
  bool harm = lam == F->from_int(-1) || lam == F->from_int(2) ||
              lam == F->mul(F->from_int(1), F->inv(F->from_int(2)));
  if (equi) {
    out.cr_class = CrossRatioClass::Equianharmonic;
    out.note =
        "three distinct roots; cubic is an affine translate of x^3 - c "
        "(order-3 root symmetry)";
  } else if (harm) {
    out.cr_class = CrossRatioClass::Harmonic;
    out.note = "three distinct roots; harmonic configuration";
  } else {
    out.cr_class = CrossRatioClass::Generic;
    out.note = "three distinct roots";
  }
  return out;
}

// ---------------------------------------------------------------------------
// The curve family catalog.

struct Homma3Branch {
  i64 q, r;
};
struct HommaRaw {
  i64 q, m, n;
};
struct WildHyperelliptic2g1 {
  i64 g;
};
struct Tame4Branch {
  i64 q;
  i64 r, s, t;
  Location a;
  i64 p{0};
};
struct WildTwoPole {
  i64 p;
  i64 a, b, c;
};
struct WildOnePole {
  i64 p;
  i64 d, e, l;
};
struct WildC {
  i64 p;
};
struct WildD {
  i64 p;
};
struct WildE {
  i64 p;
  i64 lambda;
  i64 ext{1};  // lambda lives in F_{p^ext}
};
struct FermatLike {
  i64 q;
};
struct Char3G {
  i64 q;
};
struct DoubleCoverFamily {
  i64 q, r, s;
};
struct HyperellipticTame {
  i64 q;
  Rat a0, a1;
};
struct HermitianFamily {
  i64 q0;
};
struct KleinQuarticFamily {};
struct GenusFourQFamily {};

using CurveFamily =
    std::variant<Homma3Branch, HommaRaw, WildHyperelliptic2g1, Tame4Branch,
                 WildTwoPole, WildOnePole, WildC, WildD, WildE, FermatLike,
                 Char3G, DoubleCoverFamily, HyperellipticTame, HermitianFamily,
                 KleinQuarticFamily, GenusFourQFamily>;

using CoverModel = std::variant<CyclicCoverModel, ASCoverModel>;

inline i64 cover_model_genus(const CoverModel& M) {
  if (M.index() == 0) return std::get<CyclicCoverModel>(M).genus();
  return std::get<ASCoverModel>(M).genus();
}

namespace detail {

inline void need_prime(i64 v, const char* what) {
  if (v < 2 || !is_prime((u64)v))
    throw ConstraintError(std::string(what) + " must be prime");
}

inline void check_tame4(const Tame4Branch& f) {
  need_prime(f.q, "Tame4Branch: q");
  if (f.q < 3) throw ConstraintError("Tame4Branch: q must be >= 3");
  i64 r = imod(f.r, f.q), s = imod(f.s, f.q), t = imod(f.t, f.q);
  if (r == 0 || s == 0 || t == 0)
    throw ConstraintError("Tame4Branch: exponent 0 mod q");
  if (imod(r + s + t, f.q) == 0)
    throw ConstraintError("Tame4Branch: r+s+t == 0 mod q");
  if (f.p != 0) {
    need_prime(f.p, "Tame4Branch: p");
    if (f.p == f.q) throw ConstraintError("Tame4Branch: p == q is wild");
  }
  if (is_infinity(f.a))
    throw ConstraintError("Tame4Branch: a must be finite or symbolic");
  if (f.a.index() == 0) {
    const Rat& v = std::get<Rat>(f.a);
    if (f.p == 0) {
      if (v == Rat(0) || v == Rat(1))
        throw ConstraintError("Tame4Branch: a in {0,1}");
    } else {
      FqKernel k{build_field(f.p, 1)};
      i64 av = k.from_rat(v);
      if (av == 0 || av == 1)
        throw ConstraintError("Tame4Branch: a in {0,1} mod p");
    }
  }
}

}  // namespace detail

// Validates parameter constraints; throws ConstraintError on violation.
inline void validate_family(const CurveFamily& fam);

// Genus advertised by the family (exact formulas).
inline i64 family_genus(const CurveFamily& fam);

// Short tag and parameter strings for reports.
inline std::string family_tag(const CurveFamily& fam);
inline std::string family_params(const CurveFamily& fam);

// Multiplicative orders that must divide Q-1 for a faithful specialization.
inline std::vector<i64> family_unity_orders(const CurveFamily& fam);

// The cover model, with an optional characteristic override for families
// that leave it free.
inline CoverModel to_cover_model(const CurveFamily& fam,
                                 std::optional<i64> char_override = std::nullopt);

inline void validate_family(const CurveFamily& fam) {
  std::visit(
      [](auto&& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Homma3Branch>) {
          detail::need_prime(f.q, "Homma3Branch: q");
          if (f.q < 3) throw ConstraintError("Homma3Branch: q must be >= 3");
          i64 r = imod(f.r, f.q);
          if (r == 0 || r == f.q - 1)
            throw ConstraintError("Homma3Branch: degenerate r");
        } else if constexpr (std::is_same_v<T, HommaRaw>) {
          detail::need_prime(f.q, "HommaRaw: q");
          if (!(1 <= f.n && f.n < f.m && f.m <= (f.q + 1) / 2))
            throw ConstraintError("HommaRaw: need 1 <= n < m <= (q+1)/2");
        } else if constexpr (std::is_same_v<T, WildHyperelliptic2g1>) {
          if (f.g < 2) throw ConstraintError("WildHyperelliptic2g1: g must be >= 2");
          detail::need_prime(2 * f.g + 1, "WildHyperelliptic2g1: 2g+1");
        } else if constexpr (std::is_same_v<T, Tame4Branch>) {
          detail::check_tame4(f);
        } else if constexpr (std::is_same_v<T, WildTwoPole>) {
          detail::need_prime(f.p, "WildTwoPole: p");
          if (f.p < 3) throw ConstraintError("WildTwoPole: p must be >= 3");
          i64 a = imod(f.a, f.p), b = imod(f.b, f.p), c = imod(f.c, f.p);
          if (c == 0)
            throw ConstraintError("WildTwoPole: c == 0 (numerator vanishes at 0)");
          if (imod(a + b + c, f.p) == 0)
            throw ConstraintError("WildTwoPole: a+b+c == 0 (numerator vanishes at 1)");
        } else if constexpr (std::is_same_v<T, WildOnePole>) {
          detail::need_prime(f.p, "WildOnePole: p");
          if (f.p < 5) throw ConstraintError("WildOnePole: p must be >= 5");
        } else if constexpr (std::is_same_v<T, WildC>) {
          detail::need_prime(f.p, "WildC: p");
          if (f.p < 5) throw ConstraintError("WildC: p must be >= 5");
        } else if constexpr (std::is_same_v<T, WildD>) {
          detail::need_prime(f.p, "WildD: p");
          if (f.p < 5) throw ConstraintError("WildD: p must be >= 5");
        } else if constexpr (std::is_same_v<T, WildE>) {
          detail::need_prime(f.p, "WildE: p");
          if (f.p < 5) throw ConstraintError("WildE: p must be >= 5");
          if (f.ext != 1 && f.ext != 2)
            throw ConstraintError("WildE: lambda extension degree must be 1 or 2");
          i64 Q = f.ext == 1 ? f.p : f.p * f.p;
          if (f.lambda < 0 || f.lambda >= Q)
            throw ConstraintError("WildE: lambda index out of range");
          if (f.lambda == 0 || f.lambda == 1)
            throw ConstraintError("WildE: lambda in {0,1}");
        } else if constexpr (std::is_same_v<T, FermatLike>) {
          detail::need_prime(f.q, "FermatLike: q");
          if (f.q < 5) throw ConstraintError("FermatLike: q must be >= 5");
        } else if constexpr (std::is_same_v<T, Char3G>) {
          detail::need_prime(f.q, "Char3G: q");
          if (f.q < 5) throw ConstraintError("Char3G: q must be >= 5");
        } else if constexpr (std::is_same_v<T, DoubleCoverFamily>) {
          detail::need_prime(f.q, "DoubleCover: q");
          if (f.q < 3) throw ConstraintError("DoubleCover: q must be >= 3");
          i64 r = imod(f.r, f.q), s = imod(f.s, f.q);
          if (f.r % 2 == 0)
            throw ConstraintError("DoubleCover: r must be odd");
          if (r == 0 || s == 0)
            throw ConstraintError("DoubleCover: exponent 0 mod q");
          if (imod(r + 2 * s, f.q) == 0)
            throw ConstraintError("DoubleCover: r+2s == 0 mod q");
        } else if constexpr (std::is_same_v<T, HyperellipticTame>) {
          detail::need_prime(f.q, "HyperellipticTame: q");
          if (f.q < 3) throw ConstraintError("HyperellipticTame: q must be >= 3");
          if (f.a0 == f.a1)
            throw ConstraintError("HyperellipticTame: a0 == a1");
          if (f.a0 == Rat(0) || f.a1 == Rat(0))
            throw ConstraintError("HyperellipticTame: a0, a1 must be nonzero");
        } else if constexpr (std::is_same_v<T, HermitianFamily>) {
          auto fac = factorize((u64)f.q0);
          if (f.q0 < 3 || fac.size() != 1)
            throw ConstraintError("Hermitian: q0 must be a prime power >= 3");
        } else {
          // KleinQuartic / GenusFourQ: no parameters
        }
      },
      fam);
}

inline i64 family_genus(const CurveFamily& fam) {
  validate_family(fam);
  return std::visit(
      [](auto&& f) -> i64 {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Homma3Branch>) return (f.q - 1) / 2;
        else if constexpr (std::is_same_v<T, HommaRaw>) return (f.q - 1) / 2;
        else if constexpr (std::is_same_v<T, WildHyperelliptic2g1>) return f.g;
        else if constexpr (std::is_same_v<T, Tame4Branch>) return f.q - 1;
        else if constexpr (std::is_same_v<T, WildTwoPole>) return f.p - 1;
        else if constexpr (std::is_same_v<T, WildOnePole>) return f.p - 1;
        else if constexpr (std::is_same_v<T, WildC>) return f.p - 1;
        else if constexpr (std::is_same_v<T, WildD>) return f.p - 1;
        else if constexpr (std::is_same_v<T, WildE>) return f.p - 1;
        else if constexpr (std::is_same_v<T, FermatLike>) return f.q - 1;
        else if constexpr (std::is_same_v<T, Char3G>) return f.q - 1;
        else if constexpr (std::is_same_v<T, DoubleCoverFamily>) return f.q - 1;
        else if constexpr (std::is_same_v<T, HyperellipticTame>) return f.q - 1;
        else if constexpr (std::is_same_v<T, HermitianFamily>)
          return f.q0 * (f.q0 - 1) / 2;
        else if constexpr (std::is_same_v<T, KleinQuarticFamily>) return 3;
        else return 4;
      },
      fam);
}

inline std::string family_tag(const CurveFamily& fam) {
  return std::visit(
      [](auto&& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Homma3Branch>) return "Homma3Branch";
        else if constexpr (std::is_same_v<T, HommaRaw>) return "HommaRaw";
        else if constexpr (std::is_same_v<T, WildHyperelliptic2g1>)
          return "WildHyperelliptic2g1";
        else if constexpr (std::is_same_v<T, Tame4Branch>) return "Tame4Branch";
        else if constexpr (std::is_same_v<T, WildTwoPole>) return "WildTwoPole";
        else if constexpr (std::is_same_v<T, WildOnePole>) return "WildOnePole";
        else if constexpr (std::is_same_v<T, WildC>) return "WildC";
        else if constexpr (std::is_same_v<T, WildD>) return "WildD";
        else if constexpr (std::is_same_v<T, WildE>) return "WildE";
        else if constexpr (std::is_same_v<T, FermatLike>) return "FermatLike";
        else if constexpr (std::is_same_v<T, Char3G>) return "Char3G";
        else if constexpr (std::is_same_v<T, DoubleCoverFamily>) return "DoubleCover";
        else if constexpr (std::is_same_v<T, HyperellipticTame>)
          return "HyperellipticTame";
        else if constexpr (std::is_same_v<T, HermitianFamily>) return "Hermitian";
        else if constexpr (std::is_same_v<T, KleinQuarticFamily>)
          return "KleinQuartic";
        else return "GenusFourQ";
      },
      fam);
}

inline std::string family_params(const CurveFamily& fam) {
  std::ostringstream os;
  std::visit(
      [&](auto&& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Homma3Branch>)
          os << "q=" << f.q << ",r=" << f.r;
        else if constexpr (std::is_same_v<T, HommaRaw>)
          os << "q=" << f.q << ",m=" << f.m << ",n=" << f.n;
        else if constexpr (std::is_same_v<T, WildHyperelliptic2g1>)
          os << "g=" << f.g;
        else if constexpr (std::is_same_v<T, Tame4Branch>)
          os << "q=" << f.q << ",r=" << f.r << ",s=" << f.s << ",t=" << f.t
             << ",a=" << loc_str(f.a) << (f.p ? ",p=" + std::to_string(f.p) : "");
        else if constexpr (std::is_same_v<T, WildTwoPole>)
          os << "p=" << f.p << ",a=" << f.a << ",b=" << f.b << ",c=" << f.c;
        else if constexpr (std::is_same_v<T, WildOnePole>)
          os << "p=" << f.p << ",d=" << f.d << ",e=" << f.e << ",l=" << f.l;
        else if constexpr (std::is_same_v<T, WildC>)
          os << "p=" << f.p;
        else if constexpr (std::is_same_v<T, WildD>)
          os << "p=" << f.p;
        else if constexpr (std::is_same_v<T, WildE>)
          os << "p=" << f.p << ",lambda=" << f.lambda
             << (f.ext > 1 ? ",ext=" + std::to_string(f.ext) : "");
        else if constexpr (std::is_same_v<T, FermatLike>)
          os << "q=" << f.q;
        else if constexpr (std::is_same_v<T, Char3G>)
          os << "q=" << f.q;
        else if constexpr (std::is_same_v<T, DoubleCoverFamily>)
          os << "q=" << f.q << ",r=" << f.r << ",s=" << f.s;
        else if constexpr (std::is_same_v<T, HyperellipticTame>)
          os << "q=" << f.q << ",a0=" << rat_str(f.a0) << ",a1=" << rat_str(f.a1);
        else if constexpr (std::is_same_v<T, HermitianFamily>)
          os << "q0=" << f.q0;
        else
          os << "";
      },
      fam);
  return os.str();
}

inline std::vector<i64> family_unity_orders(const CurveFamily& fam) {
  return std::visit(
      [](auto&& f) -> std::vector<i64> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Homma3Branch>) return {f.q};
        else if constexpr (std::is_same_v<T, HommaRaw>) return {f.q};
        else if constexpr (std::is_same_v<T, Tame4Branch>) return {f.q};
        else if constexpr (std::is_same_v<T, FermatLike>) return {f.q, 3};
        else if constexpr (std::is_same_v<T, Char3G>) return {f.q};
        else if constexpr (std::is_same_v<T, DoubleCoverFamily>) return {f.q};
        else if constexpr (std::is_same_v<T, HyperellipticTame>) return {f.q};
        else if constexpr (std::is_same_v<T, KleinQuarticFamily>) return {7};
        else if constexpr (std::is_same_v<T, GenusFourQFamily>) return {5};
        else return {};
      },
      fam);
}

inline CoverModel to_cover_model(const CurveFamily& fam,
                                 std::optional<i64> char_override) {
  validate_family(fam);
  auto fixed_char = [&](i64 required) {
    if (char_override && *char_override != required)
      throw ConstraintError("to_cover_model: family fixes the characteristic");
    return required;
  };
  auto free_char = [&](i64 fam_p, i64 n) {
    i64 p = char_override ? *char_override : fam_p;
    if (p != 0) {
      if (!is_prime((u64)p))
        throw ConstraintError("to_cover_model: characteristic must be 0 or prime");
      if (p == n)
        throw ConstraintError("to_cover_model: characteristic divides the degree");
    }
    return p;
  };
  return std::visit(
      [&](auto&& f) -> CoverModel {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Homma3Branch>) {
          i64 p = free_char(0, f.q);
          return CyclicCoverModel(
              f.q, p,
              {{loc_rat(0), 1}, {loc_rat(1), f.r}, {loc_inf(), -(1 + f.r)}});
        } else if constexpr (std::is_same_v<T, HommaRaw>) {
          i64 p = free_char(0, f.q);
          return CyclicCoverModel(f.q, p,
                                  {{loc_rat(0), f.m - f.n},
                                   {loc_rat(1), f.n},
                                   {loc_inf(), -f.m}});
        } else if constexpr (std::is_same_v<T, WildHyperelliptic2g1>) {
          i64 p = fixed_char(2 * f.g + 1);
          return ASCoverModel(p, {{loc_inf(), 2}});
        } else if constexpr (std::is_same_v<T, Tame4Branch>) {
          i64 p = free_char(f.p, f.q);
          Tame4Branch g = f;
          g.p = p;
          detail::check_tame4(g);
          return CyclicCoverModel(f.q, p,
                                  {{loc_rat(0), f.r},
                                   {loc_rat(1), f.s},
                                   {f.a, f.t},
                                   {loc_inf(), -(f.r + f.s + f.t)}});
        } else if constexpr (std::is_same_v<T, WildTwoPole>) {
          i64 p = fixed_char(f.p);
          return ASCoverModel(p, {{loc_rat(0), 1}, {loc_rat(1), 1}});
        } else if constexpr (std::is_same_v<T, WildOnePole>) {
          i64 p = fixed_char(f.p);
          return ASCoverModel(p, {{loc_inf(), 3}});
        } else if constexpr (std::is_same_v<T, WildC>) {
          i64 p = fixed_char(f.p);
          return ASCoverModel(p, {{loc_inf(), 3}});
        } else if constexpr (std::is_same_v<T, WildD>) {
          i64 p = fixed_char(f.p);
          return ASCoverModel(p, {{loc_inf(), 3}});
        } else if constexpr (std::is_same_v<T, WildE>) {
          i64 p = fixed_char(f.p);
          return ASCoverModel(p, {{loc_inf(), 3}});
        } else if constexpr (std::is_same_v<T, FermatLike>) {
          i64 p = free_char(0, f.q);
          if (p == 3)
            throw ConstraintError("FermatLike: characteristic 3 degenerates x^3+1");
          Symbol a{"a", {Rat(0), Rat(1)}, std::make_pair(Rat(1), Rat(-1))};
          return CyclicCoverModel(f.q, p,
                                  {{loc_rat(0), 1},
                                   {loc_rat(1), 1},
                                   {Location{a}, 1},
                                   {loc_inf(), -3}});
        } else if constexpr (std::is_same_v<T, Char3G>) {
          i64 p = fixed_char(3);
          return CyclicCoverModel(f.q, p,
                                  {{loc_rat(0), 1},
                                   {loc_rat(1), 1},
                                   {loc_rat(2), 1},
                                   {loc_inf(), -3}});
        } else if constexpr (std::is_same_v<T, DoubleCoverFamily>) {
          i64 p = free_char(0, f.q);
          if (p == 2)
            throw ConstraintError("DoubleCover: characteristic 2 not supported");
          return CyclicCoverModel(f.q, p,
                                  {{loc_rat(0), f.r},
                                   {loc_rat(1), f.s},
                                   {loc_rat(-1), f.s},
                                   {loc_inf(), -(f.r + 2 * f.s)}});
        } else if constexpr (std::is_same_v<T, HyperellipticTame>) {
          i64 p = free_char(0, 2);
          if (p == f.q)
            throw ConstraintError("HyperellipticTame: p == q makes x^q - a inseparable");
          std::vector<BranchPoint> br;
          for (i64 j = 0; j < f.q; ++j)
            br.push_back({loc_sym("u0." + std::to_string(j)), 1});
          for (i64 j = 0; j < f.q; ++j)
            br.push_back({loc_sym("u1." + std::to_string(j)), 1});
          return CyclicCoverModel(2, p, std::move(br));
        } else if constexpr (std::is_same_v<T, HermitianFamily>) {
          throw ConstraintError(
              "Hermitian: data-only family, no cyclic-cover presentation here");
        } else if constexpr (std::is_same_v<T, KleinQuarticFamily>) {
          return to_cover_model(CurveFamily{Homma3Branch{7, 2}}, char_override);
        } else {
          return to_cover_model(
              CurveFamily{Tame4Branch{5, 1, 4, 2, loc_rat(1, 2), 0}},
              char_override);
        }
      },
      fam);
}

}  // namespace qcurve
