#pragma once
// Places, divisors, and ramification bookkeeping for cyclic covers of the
// projective line: Kummer covers y^n = c * prod (x - b_i)^{e_i} with n prime
// not dividing the characteristic, and Artin-Schreier covers y^p - y = f with
// pole orders prime to p.
//
// Base points are exact rationals, the point at infinity, or named symbols
// (generic parameters with a finite exclusion list).  All genus computations
// are exact integer arithmetic with invariant checks, never floats.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <qcurve/arith.hpp>

namespace qcurve {

struct Infinity {
  bool operator==(const Infinity&) const { return true; }
  bool operator<(const Infinity&) const { return false; }
};

// A generic parameter point ("a", "lambda").  Two symbols are the same point
// iff they carry the same name.  excluded lists rational values the symbol is
// assumed to avoid; minpoly optionally pins the symbol to a monic quadratic
// t^2 + c1 t + c0 = 0.
struct Symbol {
  std::string name;
  std::vector<Rat> excluded;
  std::optional<std::pair<Rat, Rat>> minpoly;  // (c0, c1)

  bool operator==(const Symbol& o) const { return name == o.name; }
  bool operator<(const Symbol& o) const { return name < o.name; }
};

using Location = std::variant<Rat, Infinity, Symbol>;

inline Location loc_rat(i64 n, i64 d = 1) { return Location{rat(n, d)}; }
inline Location loc_inf() { return Location{Infinity{}}; }
inline Location loc_sym(std::string name, std::vector<Rat> excluded = {},
                        std::optional<std::pair<Rat, Rat>> minpoly = std::nullopt) {
  return Location{Symbol{std::move(name), std::move(excluded), std::move(minpoly)}};
}

inline bool loc_less(const Location& a, const Location& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (a.index() == 0) return std::get<Rat>(a) < std::get<Rat>(b);
  if (a.index() == 1) return false;
  return std::get<Symbol>(a) < std::get<Symbol>(b);
}

inline bool loc_eq(const Location& a, const Location& b) {
  return !loc_less(a, b) && !loc_less(b, a);
}

inline bool is_infinity(const Location& a) { return a.index() == 1; }

inline std::string loc_str(const Location& a) {
  if (a.index() == 0) return rat_str(std::get<Rat>(a));
  if (a.index() == 1) return "inf";
  return std::get<Symbol>(a).name;
}

// A geometric place on the cover, identified by the base point below it and a
// sheet number within the fiber.  e records the ramification index.
struct Place {
  Location base;
  i64 sheet{};
  i64 e{1};

  bool operator<(const Place& o) const {
    if (!loc_eq(base, o.base)) return loc_less(base, o.base);
    return sheet < o.sheet;
  }
  bool operator==(const Place& o) const {
    return loc_eq(base, o.base) && sheet == o.sheet;
  }
};

// Divisor with integer coefficients on geometric (degree-one) places.
struct Divisor {
  std::map<Place, i64> coeff;

  void add(const Place& P, i64 v) {
    if (v == 0) return;
    auto it = coeff.find(P);
    if (it == coeff.end()) {
      coeff.emplace(P, v);
    } else {
      it->second += v;
      if (it->second == 0) coeff.erase(it);
    }
  }

  i64 degree() const {
    i64 d = 0;
    for (auto& [P, v] : coeff) d += v;
    return d;
  }

  bool is_zero() const { return coeff.empty(); }

  i64 at(const Place& P) const {
    auto it = coeff.find(P);
    return it == coeff.end() ? 0 : it->second;
  }

  bool operator==(const Divisor& o) const { return coeff == o.coeff; }

  std::string str() const {
    if (coeff.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [P, v] : coeff) {
      if (!first) os << (v > 0 ? " + " : " - ");
      else if (v < 0) os << "-";
      first = false;
      i64 av = v > 0 ? v : -v;
      if (av != 1) os << av << "*";
      os << "P(" << loc_str(P.base);
      if (P.e == 1) os << ";" << P.sheet;
      os << ")";
    }
    return os.str();
  }
};

// ---------------------------------------------------------------------------
// Kummer covers  y^n = c * prod (x - b_i)^{e_i},  n prime, p not dividing n.

struct BranchPoint {
  Location loc;
  i64 e;  // exponent reduced to [1, n-1]
};

struct CyclicCoverModel {
  i64 n{};                          // prime degree of the cover
  i64 p{};                          // characteristic, 0 for char 0
  std::vector<BranchPoint> branches;  // complete branch list, exponent sum == 0 mod n

  CyclicCoverModel(i64 n_, i64 p_, std::vector<BranchPoint> br)
      : n(n_), p(p_), branches(std::move(br)) {
    if (n < 2 || !is_prime((u64)n))
      throw ConstraintError("CyclicCoverModel: n must be prime");
    if (p != 0 && !is_prime((u64)p))
      throw ConstraintError("CyclicCoverModel: characteristic must be 0 or prime");
    if (p == n)
      throw ConstraintError("CyclicCoverModel: characteristic divides n (wild case)");
    i64 total = 0;
    for (auto& b : branches) {
      b.e = imod(b.e, n);
      if (b.e == 0)
        throw ConstraintError("CyclicCoverModel: branch exponent is 0 mod n");
      total += b.e;
      for (auto& c : branches)
        if (&b != &c && loc_eq(b.loc, c.loc))
          throw ConstraintError("CyclicCoverModel: duplicate branch point");
    }
    if (imod(total, n) != 0)
      throw ConstraintError("CyclicCoverModel: exponent sum not 0 mod n");
    if (branches.size() < 2)
      throw ConstraintError("CyclicCoverModel: needs at least two branch points");
  }

  bool is_branch(const Location& L, i64* e_out = nullptr) const {
    for (auto& b : branches)
      if (loc_eq(b.loc, L)) {
        if (e_out) *e_out = b.e;
        return true;
      }
    return false;
  }

  bool infinity_branched() const { return is_branch(loc_inf()); }

  // Sum of exponents at finite branch points.
  i64 finite_exponent_sum() const {
    i64 s = 0;
    for (auto& b : branches)
      if (!is_infinity(b.loc)) s += b.e;
    return s;
  }

  // Every branch point is totally ramified (n prime, e nonzero mod n), so
  // g = (n-1)(B-2)/2 with B the number of branch points.
  i64 genus() const {
    i64 B = (i64)branches.size();
    i64 num = (n - 1) * (B - 2);
    if (num % 2 != 0) throw InvariantError("kummer genus not integral");
    return num / 2;
  }
};

// Fiber of the cover above a base point: one totally ramified place over a
// branch point, n unramified sheets otherwise.
inline std::vector<Place> kummer_fiber(const CyclicCoverModel& M,
                                       const Location& L) {
  if (M.is_branch(L)) return {Place{L, 0, M.n}};
  std::vector<Place> out;
  for (i64 j = 0; j < M.n; ++j) out.push_back(Place{L, j, 1});
  return out;
}

// Divisor of  y^ym * prod (x - c_j)^{k_j}  on the cover.  Factor locations
// must be finite or symbolic; infinity contributions come out automatically.
inline Divisor divisor_of_monomial(
    const CyclicCoverModel& M, i64 ym,
    const std::vector<std::pair<Location, i64>>& factors) {
  for (auto& [c, k] : factors) {
    (void)k;
    if (is_infinity(c))
      throw ConstraintError("divisor_of_monomial: factor location must be finite");
  }
  auto factor_exp = [&](const Location& L) {
    i64 s = 0;
    for (auto& [c, k] : factors)
      if (loc_eq(c, L)) s += k;
    return s;
  };
  i64 sum_k = 0;
  for (auto& [c, k] : factors) {
    (void)c;
    sum_k += k;
  }
  i64 sfin = M.finite_exponent_sum();

  Divisor D;
  // Finite branch points: single place, v(y) = e_i, v(x - b_i) = n.
  for (auto& b : M.branches) {
    if (is_infinity(b.loc)) continue;
    i64 v = ym * b.e + M.n * factor_exp(b.loc);
    D.add(Place{b.loc, 0, M.n}, v);
  }
  // Non-branch factor locations: n unramified places, v(x - c) = 1 on each.
  for (auto& [c, k] : factors) {
    (void)k;
    if (M.is_branch(c)) continue;
    i64 v = factor_exp(c);
    for (i64 j = 0; j < M.n; ++j) D.add(Place{c, j, 1}, v);
  }
  // Infinity: v(y) = -sfin on the ramified place (or -sfin/n per sheet),
  // v(x - c) = -n there (or -1 per sheet).
  if (M.infinity_branched()) {
    i64 v = ym * (-sfin) + (-M.n) * sum_k;
    D.add(Place{loc_inf(), 0, M.n}, v);
  } else {
    if (sfin % M.n != 0)
      throw InvariantError("divisor_of_monomial: unbranched infinity with bad sum");
    i64 t = sfin / M.n;
    i64 v = ym * (-t) + (-1) * sum_k;
    for (i64 j = 0; j < M.n; ++j) D.add(Place{loc_inf(), j, 1}, v);
  }
  if (D.degree() != 0)
    throw InvariantError("divisor_of_monomial: nonzero degree");
  return D;
}

// ---------------------------------------------------------------------------
// Artin-Schreier covers  y^p - y = f,  f with poles of order m_P prime to p.

struct ASPole {
  Location loc;
  i64 m;  // pole order of f, >= 1, prime to p
};

struct ASCoverModel {
  i64 p{};
  std::vector<ASPole> poles;

  ASCoverModel(i64 p_, std::vector<ASPole> ps) : p(p_), poles(std::move(ps)) {
    if (p < 2 || !is_prime((u64)p))
      throw ConstraintError("ASCoverModel: p must be prime");
    if (poles.empty())
      throw ConstraintError("ASCoverModel: needs at least one pole");
    for (auto& P : poles) {
      if (P.m < 1) throw ConstraintError("ASCoverModel: pole order must be >= 1");
      if (P.m % p == 0)
        throw ConstraintError("ASCoverModel: pole order divisible by p");
      for (auto& Q : poles)
        if (&P != &Q && loc_eq(P.loc, Q.loc))
          throw ConstraintError("ASCoverModel: duplicate pole");
    }
  }

  // Each pole is totally (wildly) ramified with different d_P = (p-1)(m_P+1);
  // 2g - 2 = -2p + sum d_P.
  i64 genus() const {
    i64 s = 0;
    for (auto& P : poles) s += (p - 1) * (P.m + 1);
    i64 num = -2 * p + s + 2;
    if (num % 2 != 0 || num < 0) throw InvariantError("as genus not valid");
    return num / 2;
  }

  i64 different_exponent(const Location& L) const {
    for (auto& P : poles)
      if (loc_eq(P.loc, L)) return (p - 1) * (P.m + 1);
    return 0;
  }
};

// Orders of the higher ramification groups G^(0), G^(1), ... at a pole of
// order m: the group Z/p persists through the jump at m, then collapses.
inline std::vector<i64> as_filtration(i64 p, i64 m) {
  if (p < 2 || !is_prime((u64)p))
    throw ConstraintError("as_filtration: p must be prime");
  if (m < 1 || m % p == 0)
    throw ConstraintError("as_filtration: pole order invalid");
  std::vector<i64> out((size_t)(m + 1), p);
  out.push_back(1);
  return out;
}

// ---------------------------------------------------------------------------
// Generic genus bookkeeping.

// Solve 2g - 2 = N (2 gbar - 2) + sum s_i d_i for g, where N is the covering
// group order and each contribution is (number of places, different exponent).
inline i64 rh_genus(i64 N, i64 gbar,
                    const std::vector<std::pair<i64, i64>>& contributions) {
  if (N < 1) throw ConstraintError("rh_genus: group order must be positive");
  if (gbar < 0) throw ConstraintError("rh_genus: base genus must be >= 0");
  i64 rhs = N * (2 * gbar - 2);
  for (auto& [s, d] : contributions) {
    if (s < 0 || d < 0) throw ConstraintError("rh_genus: negative contribution");
    rhs += s * d;
  }
  if ((rhs + 2) % 2 != 0) throw InvariantError("rh_genus: odd degree sum");
  i64 g = (rhs + 2) / 2;
  if (g < 0) throw InvariantError("rh_genus: negative genus");
  return g;
}

// 2g - 2 >= N (2 gbar - 2) + sum (N - l_nu) over short orbits of lengths
// l_nu; the tame lower bound on ramification from each orbit.
inline bool orbit_inequality_check(i64 g, i64 N, i64 gbar,
                                   const std::vector<i64>& orbit_lengths) {
  i64 rhs = N * (2 * gbar - 2);
  for (i64 l : orbit_lengths) {
    if (l < 1 || N % l != 0)
      throw ConstraintError("orbit_inequality_check: orbit length must divide N");
    rhs += N - l;
  }
  return 2 * g - 2 >= rhs;
}

// ---------------------------------------------------------------------------
// Towers: a further Kummer extension y^n = f of a curve, described by the
// divisor of f on that curve.

struct TowerStep {
  std::vector<Place> ramified;  // places of the base curve that ramify
  i64 genus;                    // genus of the extension
};

inline TowerStep kummer_tower_ramification(const Divisor& D, i64 n, i64 gbar,
                                           i64 p) {
  if (n < 2 || !is_prime((u64)n))
    throw ConstraintError("kummer_tower_ramification: n must be prime");
  if (p != 0 && !is_prime((u64)p))
    throw ConstraintError("kummer_tower_ramification: characteristic must be 0 or prime");
  if (p == n)
    throw ConstraintError("kummer_tower_ramification: wild tower (p divides n)");
  if (D.is_zero())
    throw ConstraintError("kummer_tower_ramification: divisor of a constant");
  if (D.degree() != 0)
    throw ConstraintError("kummer_tower_ramification: divisor must have degree 0");
  TowerStep out;
  for (auto& [P, v] : D.coeff)
    if (imod(v, n) != 0) out.ramified.push_back(P);
  i64 R = (i64)out.ramified.size();
  i64 rhs = n * (2 * gbar - 2) + R * (n - 1);
  if ((rhs + 2) % 2 != 0)
    throw InvariantError("kummer_tower_ramification: odd degree sum");
  out.genus = (rhs + 2) / 2;
  if (out.genus < 0)
    throw InvariantError("kummer_tower_ramification: negative genus");
  return out;
}

}  // namespace qcurve
