#pragma once
// Text front end: the model-spec mini-grammar shared by the CLI commands and
// a small rational-expression parser for map candidates.
//
//   model   := "kummer(" "n=" INT ";" branch ("," branch)* ")"
//            | "as(" "p=" INT ";" poles ")"
//            | FAMILY "(" args ")"
//   branch  := point ":" INT
//   point   := RAT | "inf" | "a" | "lambda"
//   poles   := point ":" INT ("," point ":" INT)*
//   FAMILY  := X | Xr | R | Y | Z | C | D | E | F | G3 | Q | hermitian | klein
//
// Whitespace-insensitive; integers decimal; RAT = INT or INT "/" INT.
// Parse errors report the byte offset and the expected token set.

#include <cctype>

#include <qcurve/oracle.hpp>

namespace qcurve {

struct ParsedModel {
  std::optional<CurveFamily> family;
  std::optional<i64> kummer_n;
  std::vector<std::pair<Location, i64>> kummer_branches;
  std::optional<i64> as_p;
  std::vector<std::pair<Location, i64>> as_poles;
  std::string text;

  bool is_family() const { return family.has_value(); }
  bool is_kummer() const { return kummer_n.has_value(); }
  bool is_as() const { return as_p.has_value(); }
};

namespace detail {

struct SpecCursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& expected) {
    skip_ws();
    throw UsageError("parse error at byte " + std::to_string(pos) +
                     ": expected " + expected);
  }
  bool peek_char(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  void expect_char(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) fail(std::string("'") + c + "'");
    ++pos;
  }
  bool try_char(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("identifier");
    return s.substr(start, pos - start);
  }
  i64 integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == digits) {
      pos = start;
      fail("integer");
    }
    return std::stoll(s.substr(start, pos - start));
  }
  Rat rational() {
    i64 n = integer();
    if (try_char('/')) {
      i64 d = integer();
      if (d == 0) fail("nonzero denominator");
      return rat(n, d);
    }
    return rat(n);
  }
};

inline Location parse_point(SpecCursor& c) {
  c.skip_ws();
  if (c.pos < c.s.size() && (std::isdigit((unsigned char)c.s[c.pos]) ||
                             c.s[c.pos] == '-' || c.s[c.pos] == '+'))
    return Location{c.rational()};
  std::string w = c.ident();
  if (w == "inf") return loc_inf();
  if (w == "a") return loc_sym("a", {rat(0), rat(1)});
  if (w == "lambda") return loc_sym("lambda", {rat(0), rat(1)});
  c.fail("point (RAT, inf, a, lambda)");
}

struct FamilyArgs {
  std::map<std::string, Rat> kv;
  std::set<std::string> bare;
  std::map<std::string, size_t> at;  // byte offsets for error reporting
};

inline FamilyArgs parse_family_args(SpecCursor& c) {
  FamilyArgs out;
  if (c.peek_char(')')) return out;
  while (true) {
    c.skip_ws();
    size_t here = c.pos;
    std::string key = c.ident();
    if (c.try_char('=')) {
      out.kv[key] = c.rational();
    } else {
      out.bare.insert(key);
    }
    out.at[key] = here;
    if (c.try_char(',') || c.try_char(';')) continue;
    break;
  }
  return out;
}

inline i64 arg_int(const FamilyArgs& a, const std::string& key) {
  auto it = a.kv.find(key);
  if (it == a.kv.end())
    throw UsageError("parse error: missing argument '" + key + "'");
  if (it->second.denominator() != 1)
    throw UsageError("parse error at byte " + std::to_string(a.at.at(key)) +
                     ": expected integer for '" + key + "'");
  return (i64)(BigInt(it->second.numerator()));
}

inline void reject_extra(const FamilyArgs& a, std::set<std::string> allowed) {
  for (auto& [k, v] : a.kv)
    if (!allowed.count(k))
      throw UsageError("parse error at byte " + std::to_string(a.at.at(k)) +
                       ": unexpected argument '" + k + "'");
  for (auto& k : a.bare)
    if (!allowed.count(k))
      throw UsageError("parse error at byte " + std::to_string(a.at.at(k)) +
                       ": unexpected argument '" + k + "'");
}

inline CurveFamily family_from_args(const std::string& name,
                                    const FamilyArgs& a, SpecCursor& c) {
  auto has = [&](const std::string& k) { return a.kv.count(k) > 0; };
  if (name == "X") {
    if (has("m") || has("n")) {
      reject_extra(a, {"q", "m", "n"});
      return HommaRaw{arg_int(a, "q"), arg_int(a, "m"), arg_int(a, "n")};
    }
    reject_extra(a, {"q", "r", "s", "t", "a"});
    Location loc = a.bare.count("a") ? loc_sym("a", {rat(0), rat(1)})
                                     : Location{rat(0)};
    if (has("a")) loc = Location{a.kv.at("a")};
    if (!a.bare.count("a") && !has("a"))
      throw UsageError("parse error: X needs 'a' (free or a=RAT)");
    return Tame4Branch{arg_int(a, "q"), arg_int(a, "r"), arg_int(a, "s"),
                       arg_int(a, "t"), loc};
  }
  if (name == "Xr") {
    reject_extra(a, {"q", "r"});
    return Homma3Branch{arg_int(a, "q"), arg_int(a, "r")};
  }
  if (name == "R") {
    reject_extra(a, {"g"});
    return WildHyperelliptic2g1{arg_int(a, "g")};
  }
  if (name == "Y") {
    reject_extra(a, {"p", "a", "b", "c"});
    return WildTwoPole{arg_int(a, "p"), arg_int(a, "a"), arg_int(a, "b"),
                       arg_int(a, "c")};
  }
  if (name == "Z") {
    reject_extra(a, {"p", "d", "e", "l"});
    return WildOnePole{arg_int(a, "p"), arg_int(a, "d"), arg_int(a, "e"),
                       arg_int(a, "l")};
  }
  if (name == "C") {
    reject_extra(a, {"p"});
    return WildC{arg_int(a, "p")};
  }
  if (name == "D") {
    reject_extra(a, {"p"});
    return WildD{arg_int(a, "p")};
  }
  if (name == "E") {
    reject_extra(a, {"p", "lambda", "ext"});
    i64 ext = a.kv.count("ext") ? arg_int(a, "ext") : 1;
    i64 p = arg_int(a, "p");
    i64 lam = arg_int(a, "lambda");
    // lambda is an element index; integers reduce into the prime field
    if (ext == 1 && p > 1) lam = imod(lam, p);
    return WildE{p, lam, ext};
  }
  if (name == "F") {
    reject_extra(a, {"q"});
    return FermatLike{arg_int(a, "q")};
  }
  if (name == "G3") {
    reject_extra(a, {"q"});
    return Char3G{arg_int(a, "q")};
  }
  if (name == "Q") {
    reject_extra(a, {});
    return GenusFourQFamily{};
  }
  if (name == "hermitian") {
    reject_extra(a, {"q0"});
    return HermitianFamily{arg_int(a, "q0")};
  }
  if (name == "klein") {
    reject_extra(a, {});
    return KleinQuarticFamily{};
  }
  c.fail("FAMILY (X, Xr, R, Y, Z, C, D, E, F, G3, Q, hermitian, klein)");
}

}  // namespace detail

inline ParsedModel parse_model(const std::string& text) {
  detail::SpecCursor c{text};
  ParsedModel out;
  out.text = text;
  std::string head = c.ident();
  c.expect_char('(');
  if (head == "kummer") {
    c.skip_ws();
    std::string key = c.ident();
    if (key != "n") c.fail("'n='");
    c.expect_char('=');
    out.kummer_n = c.integer();
    c.expect_char(';');
    while (true) {
      Location loc = detail::parse_point(c);
      c.expect_char(':');
      i64 e = c.integer();
      out.kummer_branches.push_back({loc, e});
      if (!c.try_char(',')) break;
    }
  } else if (head == "as") {
    c.skip_ws();
    std::string key = c.ident();
    if (key != "p") c.fail("'p='");
    c.expect_char('=');
    out.as_p = c.integer();
    c.expect_char(';');
    while (true) {
      Location loc = detail::parse_point(c);
      c.expect_char(':');
      i64 m = c.integer();
      out.as_poles.push_back({loc, m});
      if (!c.try_char(',')) break;
    }
  } else {
    auto args = detail::parse_family_args(c);
    out.family = detail::family_from_args(head, args, c);
  }
  c.expect_char(')');
  if (!c.eof()) c.fail("end of input");
  return out;
}

// Build the ramification model for a parsed spec at the given characteristic
// (0 for characteristic zero).
inline CoverModel realize_model(const ParsedModel& pm, i64 char_p) {
  if (pm.is_family()) {
    std::optional<i64> ov;
    if (char_p != 0) ov = char_p;
    return to_cover_model(*pm.family, ov);
  }
  if (pm.is_kummer()) {
    std::vector<BranchPoint> br;
    for (auto& [loc, e] : pm.kummer_branches) br.push_back({loc, e});
    return CyclicCoverModel(*pm.kummer_n, char_p, br);
  }
  std::vector<ASPole> poles;
  for (auto& [loc, m] : pm.as_poles) poles.push_back({loc, m});
  if (char_p != 0 && char_p != *pm.as_p)
    throw ConstraintError("realize_model: --char conflicts with as(p=...)");
  return ASCoverModel(*pm.as_p, poles);
}

inline i64 model_genus(const CoverModel& M) {
  if (auto* k = std::get_if<CyclicCoverModel>(&M)) return k->genus();
  return std::get<ASCoverModel>(M).genus();
}

// ---------------------------------------------------------------------------
// Rational-expression parser in x and y over a finite field, for CLI-supplied
// map candidates.  Grammar:
//   expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)*
//   unary := '-' unary | power ; power := atom ('^' INT)?
//   atom := '(' expr ')' | 'x' | 'y' | INT

namespace detail {

inline RatFunc rf_const(const Field& F, i64 v) {
  return {PlanePoly::constant(F, F->from_int(v)), PlanePoly::constant(F, 1)};
}
inline RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
  return {a.num.mul(b.den).add(b.num.mul(a.den)), a.den.mul(b.den)};
}
inline RatFunc rf_sub(const RatFunc& a, const RatFunc& b) {
  return {a.num.mul(b.den).sub(b.num.mul(a.den)), a.den.mul(b.den)};
}
inline RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
  return {a.num.mul(b.num), a.den.mul(b.den)};
}
inline RatFunc rf_div(const RatFunc& a, const RatFunc& b) {
  if (b.num.is_zero()) throw UsageError("map expression divides by zero");
  return {a.num.mul(b.den), a.den.mul(b.num)};
}
inline RatFunc rf_neg(const RatFunc& a) { return {a.num.neg(), a.den}; }
inline RatFunc rf_pow(const RatFunc& a, i64 e) {
  if (e < 0) return rf_pow(rf_div(rf_const(a.num.F, 1), a), -e);
  return {a.num.pow((int)e), a.den.pow((int)e)};
}

struct ExprParser {
  SpecCursor c;
  Field F;

  RatFunc expr() {
    RatFunc v = term();
    while (true) {
      if (c.try_char('+'))
        v = rf_add(v, term());
      else if (c.try_char('-'))
        v = rf_sub(v, term());
      else
        return v;
    }
  }
  RatFunc term() {
    RatFunc v = unary();
    while (true) {
      if (c.try_char('*'))
        v = rf_mul(v, unary());
      else if (c.try_char('/'))
        v = rf_div(v, unary());
      else
        return v;
    }
  }
  RatFunc unary() {
    if (c.try_char('-')) return rf_neg(unary());
    return power();
  }
  RatFunc power() {
    RatFunc v = atom();
    if (c.try_char('^')) return rf_pow(v, c.integer());
    return v;
  }
  RatFunc atom() {
    c.skip_ws();
    if (c.try_char('(')) {
      RatFunc v = expr();
      c.expect_char(')');
      return v;
    }
    if (c.pos < c.s.size() && std::isdigit((unsigned char)c.s[c.pos]))
      return rf_const(F, c.integer());
    if (c.pos < c.s.size() && (c.s[c.pos] == 'x' || c.s[c.pos] == 'y')) {
      char v = c.s[c.pos++];
      return {v == 'x' ? PlanePoly::var_x(F) : PlanePoly::var_y(F),
              PlanePoly::constant(F, 1)};
    }
    c.fail("expression atom ('(', x, y, or integer)");
  }
};

}  // namespace detail

inline RatFunc parse_rat_expr(const std::string& s, const Field& F) {
  detail::ExprParser p{{s}, F};
  RatFunc v = p.expr();
  if (!p.c.eof()) p.c.fail("end of expression");
  if (v.den.is_zero()) throw UsageError("map expression has zero denominator");
  return v;
}

// Two components separated by ';'
inline MapCandidate parse_map(const std::string& s, const Field& F) {
  auto cut = s.find(';');
  if (cut == std::string::npos)
    throw UsageError("map needs two components separated by ';'");
  MapCandidate m{parse_rat_expr(s.substr(0, cut), F),
                 parse_rat_expr(s.substr(cut + 1), F), s};
  return m;
}

}  // namespace qcurve
