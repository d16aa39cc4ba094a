// qcurve: classification and verification tool for curves with a large
// prime-order automorphism.
//
// Exit codes: 0 success, 1 invariant violation (or failed verify battery),
// 2 usage/parse error, 3 constraint violation.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <qcurve/verify.hpp>

using namespace qcurve;

namespace {

struct CommonOpts {
  i64 char_p = 0;
  std::string format = "table";
  std::string out;
};

void emit(const CommonOpts& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw UsageError("cannot open output file '" + opt.out + "'");
  f << text;
}

void add_common(CLI::App* cmd, CommonOpts& opt, bool with_char = true) {
  if (with_char)
    cmd->add_option("--char", opt.char_p,
                    "characteristic p (0 for characteristic zero)");
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
}

void require_prime_char(i64 p) {
  if (p != 0 && (p < 2 || !is_prime((u64)p)))
    throw UsageError("--char must be 0 or a prime");
}

std::map<std::string, i64> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, i64> out;
  for (auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("--param expects name=value, got '" + kv + "'");
    std::string val = kv.substr(eq + 1);
    if (val.empty() ||
        val.find_first_not_of("0123456789-") != std::string::npos)
      throw UsageError("--param value must be an integer, got '" + kv + "'");
    out[kv.substr(0, eq)] = std::stoll(val);
  }
  return out;
}

Json notes_json(const std::vector<std::string>& notes) {
  Json a = Json::array();
  for (auto& n : notes) a.push_back(n);
  return a;
}

// ---------------------------------------------------------------------------
// aut: one report per supported family, reusing the classification paths.

AutReport aut_for_model(const CurveFamily& fam, i64 p) {
  validate_family(fam);
  return std::visit(
      [&](auto&& f) -> AutReport {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Homma3Branch>) {
          return aut_order_2g1(f.r, f.q, p);
        } else if constexpr (std::is_same_v<T, HommaRaw>) {
          return aut_order_2g1(normalize_3branch(f.m, f.n, f.q), f.q, p);
        } else if constexpr (std::is_same_v<T, KleinQuarticFamily>) {
          return aut_order_2g1(2, 7, p);
        } else if constexpr (std::is_same_v<T, HermitianFamily>) {
          i64 q = f.q0 * f.q0 - f.q0 + 1;
          i64 base = (i64)factorize((u64)f.q0)[0].first;
          auto roots = solve_unit_congruence(1, 1, 1, q);
          return aut_order_2g1(*roots.begin(), q, p == 0 ? base : p);
        } else if constexpr (std::is_same_v<T, Tame4Branch>) {
          return aut_order_g1_tame(f, p);
        } else if constexpr (std::is_same_v<T, GenusFourQFamily>) {
          return aut_order_g1_tame(Tame4Branch{5, 1, 4, 2, loc_rat(1, 2)}, p);
        } else if constexpr (std::is_same_v<T, FermatLike>) {
          if (p == 3)
            throw ConstraintError(
                "aut: characteristic 3 changes the symmetry count; use G3");
          auto M = to_cover_model(fam, p == 0 ? std::nullopt
                                              : std::optional<i64>(p));
          auto& CM = std::get<CyclicCoverModel>(M);
          return aut_order_g1_tame(Tame4Branch{f.q, 1, 1, 1,
                                               CM.branches[2].loc, p}, p);
        } else if constexpr (std::is_same_v<T, Char3G>) {
          if (p != 0 && p != 3)
            throw ConstraintError("aut: G3 lives in characteristic 3");
          auto M = to_cover_model(fam, std::nullopt);
          auto syms = lifted_branch_symmetries(std::get<CyclicCoverModel>(M));
          AutReport rep;
          rep.c = (i64)syms.size();
          if (rep.c != 6)
            throw InvariantError("aut: char-3 sextic symmetry count mismatch");
          rep.exceptional = "Char3Sextic";
          rep.order = 6 * f.q;
          rep.notes.push_back("six lifted symmetries exactly in characteristic 3");
          return rep;
        } else if constexpr (std::is_same_v<T, WildHyperelliptic2g1>) {
          i64 p0 = 2 * f.g + 1;
          if (p != 0 && p != p0)
            throw ConstraintError("aut: R lives in characteristic 2g+1");
          AutReport rep;
          rep.exceptional = "WildPGL";
          rep.order = 2 * p0 * (p0 * p0 - 1);
          rep.notes.push_back(
              "y^2 = x^p - x carries the full projective group action of the "
              "line over F_p, order 2p(p^2-1)");
          return rep;
        } else if constexpr (std::is_same_v<T, WildC> ||
                             std::is_same_v<T, WildD> ||
                             std::is_same_v<T, WildE> ||
                             std::is_same_v<T, WildOnePole>) {
          if (p != 0 && p != f.p)
            throw ConstraintError("aut: --char conflicts with the family's p");
          return aut_order_g1_wild(fam);
        } else if constexpr (std::is_same_v<T, WildTwoPole>) {
          if (p != 0 && p != f.p)
            throw ConstraintError("aut: --char conflicts with the family's p");
          AutReport rep;
          rep.notes.push_back(
              "hyperelliptic family with an order-p subgroup; the full order "
              "is not derived here");
          return rep;
        } else {
          throw ConstraintError("aut: unsupported family " + family_tag(fam));
        }
      },
      fam);
}

// ---------------------------------------------------------------------------
// normalize: canonical forms for the three normalizable shapes.

std::string normalize_text(const ParsedModel& pm, i64 p, const CommonOpts& opt) {
  if (!pm.is_family())
    throw ConstraintError(
        "normalize supports named families (3-branch, 4-branch, wild cubic)");
  std::ostringstream os;
  Json j;
  j["command"] = "normalize";
  j["model"] = pm.text;

  auto three_branch = [&](i64 q, i64 r) {
    auto orbit = exponent_orbit_3(r, q);
    i64 canon = *orbit.begin();
    bool hyp = orbit.count(1) > 0;
    os << "canonical r = " << canon << "\norbit = {";
    bool first = true;
    for (i64 m : orbit) {
      if (!first) os << ", ";
      first = false;
      os << m;
    }
    os << "}\nhyperelliptic orbit: " << (hyp ? "yes" : "no") << "\n";
    j["kind"] = "3-branch";
    j["canonical_r"] = canon;
    j["orbit"] = orbit;
    j["hyperelliptic_orbit"] = hyp;
  };
  auto four_branch = [&](const Tame4Branch& f) {
    if (f.a.index() != 0)
      throw ConstraintError("normalize: the branch point a must be a number");
    std::vector<Location> locs{loc_rat(0), loc_rat(1), f.a, loc_inf()};
    std::array<i64, 4> e{f.r, f.s, f.t, -(f.r + f.s + f.t)};
    auto canon = canonical_4branch(f.q, e, locs, p);
    os << "canonical key = " << canon.key << "\nexponents = (";
    for (size_t i = 0; i < 4; ++i) os << (i ? "," : "") << canon.exps[i];
    os << ")\na-class = " << canon.a_key << "\n";
    j["kind"] = "4-branch";
    j["key"] = canon.key;
    j["exponents"] = canon.exps;
    j["a_class"] = canon.a_key;
  };
  auto wild_cubic = [&](i64 pp, i64 d, i64 e, i64 l) {
    auto w = normalize_wild_cubic(pp, imod(d, pp), imod(e, pp), imod(l, pp));
    os << "kind = " << w.kind << "\nextension degree = " << w.ext
       << "\ncross-ratio class = " << cross_ratio_class_str(w.cr_class)
       << "\n";
    if (w.kind == 'E') {
      os << "lambda index = " << w.lambda << "\nlambda minimal polynomial = [";
      for (size_t i = 0; i < w.lambda_minpoly.size(); ++i)
        os << (i ? "," : "") << w.lambda_minpoly[i];
      os << "]\n";
    }
    if (!w.note.empty()) os << "note: " << w.note << "\n";
    j["kind"] = std::string(1, w.kind);
    j["ext"] = w.ext;
    j["cross_ratio_class"] = cross_ratio_class_str(w.cr_class);
    j["lambda"] = w.lambda;
    j["lambda_minpoly"] = w.lambda_minpoly;
    j["note"] = w.note;
  };

  std::visit(
      [&](auto&& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Homma3Branch>) {
          three_branch(f.q, f.r);
        } else if constexpr (std::is_same_v<T, HommaRaw>) {
          three_branch(f.q, normalize_3branch(f.m, f.n, f.q));
        } else if constexpr (std::is_same_v<T, KleinQuarticFamily>) {
          three_branch(7, 2);
        } else if constexpr (std::is_same_v<T, Tame4Branch>) {
          four_branch(f);
        } else if constexpr (std::is_same_v<T, GenusFourQFamily>) {
          four_branch(Tame4Branch{5, 1, 4, 2, loc_rat(1, 2)});
        } else if constexpr (std::is_same_v<T, WildOnePole>) {
          wild_cubic(f.p, f.d, f.e, f.l);
        } else if constexpr (std::is_same_v<T, WildC>) {
          wild_cubic(f.p, 0, 0, 0);
        } else if constexpr (std::is_same_v<T, WildD>) {
          wild_cubic(f.p, -2, 1, 0);
        } else if constexpr (std::is_same_v<T, WildE>) {
          if (f.ext != 1)
            throw ConstraintError(
                "normalize: lambda outside the prime field has no integral "
                "cubic coefficients; it is already classified by its "
                "cross-ratio class");
          wild_cubic(f.p, imod(-(1 + f.lambda), f.p), imod(f.lambda, f.p), 0);
        } else {
          throw ConstraintError("normalize: unsupported family " +
                                family_tag(CurveFamily{f}));
        }
      },
      *pm.family);
  return opt.format == "json" ? j.dump(2) + "\n" : os.str();
}

// ---------------------------------------------------------------------------
// Shape parsing for oracle-auts.

std::set<ShapeTag> parse_shapes(const std::string& list) {
  std::set<ShapeTag> tags;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur == "diagonal")
      tags.insert(ShapeTag::DiagonalMonomial);
    else if (cur == "affine")
      tags.insert(ShapeTag::AffineTwist);
    else if (cur == "mobius")
      tags.insert(ShapeTag::MobiusTwist);
    else if (cur == "translation")
      tags.insert(ShapeTag::TranslationY);
    else
      throw UsageError("unknown shape '" + cur +
                       "' (expected diagonal, affine, mobius, translation)");
    cur.clear();
  };
  for (char c : list) {
    if (c == ',')
      flush();
    else if (!std::isspace((unsigned char)c))
      cur += c;
  }
  flush();
  if (tags.empty()) throw UsageError("--shapes must name at least one shape");
  return tags;
}

const char* shape_name(ShapeTag t) {
  switch (t) {
    case ShapeTag::DiagonalMonomial: return "diagonal";
    case ShapeTag::AffineTwist: return "affine";
    case ShapeTag::MobiusTwist: return "mobius";
    case ShapeTag::TranslationY: return "translation";
  }
  return "?";
}

CurveFamily family_of(const ParsedModel& pm, const char* cmd) {
  if (!pm.is_family())
    throw ConstraintError(std::string(cmd) +
                          " needs a named family, not a raw cover spec");
  return *pm.family;
}

// ---------------------------------------------------------------------------
// Command bodies.

int cmd_classify(i64 gmin, i64 gmax, const CommonOpts& opt) {
  if (gmin < 2 || gmax < gmin)
    throw UsageError("need 2 <= genus-min <= genus-max");
  require_prime_char(opt.char_p);
  CatalogDocument doc;
  doc.invocation = Json{{"command", "classify"},
                        {"genus_min", gmin},
                        {"genus_max", gmax},
                        {"char", opt.char_p},
                        {"format", opt.format}};
  for (i64 g = gmin; g <= gmax; ++g)
    for (auto& rec : classify_genus(g, opt.char_p))
      doc.records.push_back(std::move(rec));
  if (opt.format == "json") {
    Json j = catalog_to_json(doc);
    auto errs = validate_catalog(j);
    if (!errs.empty())
      throw InvariantError("catalog fails its own schema: " + errs[0]);
    emit(opt, j.dump(2) + "\n");
  } else if (opt.format == "csv") {
    emit(opt, catalog_to_csv(doc.records));
  } else {
    emit(opt, catalog_to_table(doc.records));
  }
  return 0;
}

int cmd_genus(const std::string& model, const CommonOpts& opt) {
  require_prime_char(opt.char_p);
  auto pm = parse_model(model);
  i64 g;
  if (pm.is_family()) {
    validate_family(*pm.family);
    g = family_genus(*pm.family);
  } else {
    g = model_genus(realize_model(pm, opt.char_p));
  }
  if (opt.format == "json") {
    Json j{{"command", "genus"}, {"model", model}, {"genus", g}};
    emit(opt, j.dump(2) + "\n");
  } else {
    emit(opt, std::to_string(g) + "\n");
  }
  return 0;
}

int cmd_hyperelliptic(const std::string& model, const CommonOpts& opt) {
  require_prime_char(opt.char_p);
  auto pm = parse_model(model);
  auto rep = is_hyperelliptic(family_of(pm, "hyperelliptic"));
  if (opt.format == "json") {
    Json j{{"command", "hyperelliptic"},
           {"model", model},
           {"hyperelliptic", rep.verdict},
           {"reason", rep.reason},
           {"witness", rep.witness}};
    j["witness_divisor"] =
        rep.witness_divisor ? Json(rep.witness_divisor->str()) : Json(nullptr);
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << (rep.verdict ? "true" : "false") << "\n";
    if (!rep.reason.empty()) os << "reason: " << rep.reason << "\n";
    if (!rep.witness.empty()) os << "witness: " << rep.witness << "\n";
    if (rep.witness_divisor)
      os << "witness divisor: " << rep.witness_divisor->str() << "\n";
    emit(opt, os.str());
  }
  return 0;
}

int cmd_aut(const std::string& model, const CommonOpts& opt) {
  require_prime_char(opt.char_p);
  auto pm = parse_model(model);
  auto rep = aut_for_model(family_of(pm, "aut"), opt.char_p);
  if (opt.format == "json") {
    Json j{{"command", "aut"}, {"model", model}};
    j["aut"] = aut_to_json(rep);
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << (rep.order ? std::to_string(*rep.order) : "unknown") << "\n";
    if (rep.c) os << "c: " << *rep.c << "\n";
    if (!rep.exceptional.empty()) os << "exceptional: " << rep.exceptional << "\n";
    if (rep.outside_hypotheses) os << "outside hypotheses\n";
    for (auto& n : rep.notes) os << "note: " << n << "\n";
    emit(opt, os.str());
  }
  return 0;
}

int cmd_normalize(const std::string& model, const CommonOpts& opt) {
  require_prime_char(opt.char_p);
  auto pm = parse_model(model);
  emit(opt, normalize_text(pm, opt.char_p, opt));
  return 0;
}

int cmd_oracle_auts(const std::string& model, const std::string& field,
                    const std::string& shapes, const std::string& marks,
                    int exp_bound, const std::vector<std::string>& params,
                    const CommonOpts& opt) {
  auto pm = parse_model(model);
  auto fam = family_of(pm, "oracle-auts");
  Field F = detail::resolve_field(field, fam);
  auto C = specialize(fam, F, parse_params(params));

  ShapeSearch search;
  search.tags = parse_shapes(shapes);
  search.exp_bound = exp_bound;
  if (!marks.empty()) {
    std::istringstream ms(marks);
    std::string tok;
    while (std::getline(ms, tok, ',')) {
      if (tok.empty()) continue;
      if (tok.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("--marks expects field element indices");
      i64 v = std::stoll(tok);
      if (v < 0 || v >= F->Q)
        throw UsageError("--marks value out of range for F_" +
                         std::to_string(F->Q));
      search.xmarks.push_back(v);
    }
  }
  auto found = enumerate_shape_automorphisms(C, search);

  if (opt.format == "json") {
    Json j{{"command", "oracle-auts"},
           {"model", model},
           {"field", F->Q},
           {"count", (i64)found.size()}};
    j["maps"] = Json::array();
    for (auto& m : found) {
      Json e{{"shape", shape_name(m.tag)}, {"desc", m.map.desc}};
      e["par"] = m.par;
      j["maps"].push_back(e);
    }
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "field: F_" << F->Q << "\ncurve: " << C.str() << "\ncount: "
       << found.size() << "\n";
    for (auto& m : found)
      os << shape_name(m.tag) << "  " << m.map.desc << "\n";
    emit(opt, os.str());
  }
  return 0;
}

int cmd_oracle_map(const std::string& src, const std::string& dst,
                   const std::string& map_text, const std::string& inverse_text,
                   const std::string& field,
                   const std::vector<std::string>& params,
                   const CommonOpts& opt) {
  auto ps = parse_model(src);
  auto pd = parse_model(dst);
  auto fs = family_of(ps, "oracle-map");
  auto fd = family_of(pd, "oracle-map");
  Field F = detail::resolve_field(field, fs);
  auto bound = parse_params(params);
  auto S = specialize(fs, F, bound);
  auto D = specialize(fd, F, bound);
  auto fwd = parse_map(map_text, F);
  std::optional<MapCandidate> inv;
  if (!inverse_text.empty()) inv = parse_map(inverse_text, F);
  auto v = verify_map(S, D, fwd, inv);

  std::string bir = v.birational ? (*v.birational ? "true" : "false")
                                 : "unknown (no inverse supplied)";
  if (opt.format == "json") {
    Json j{{"command", "oracle-map"},
           {"src", src},
           {"dst", dst},
           {"field", F->Q},
           {"homomorphism", v.homomorphism}};
    j["birational"] = v.birational ? Json(*v.birational) : Json(nullptr);
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "field: F_" << F->Q << "\nhomomorphism: "
       << (v.homomorphism ? "true" : "false") << "\nbirational: " << bir
       << "\n";
    emit(opt, os.str());
  }
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& vopt,
               const CommonOpts& opt) {
  auto res = run_verify_suite(suite, vopt);
  size_t passed = 0;
  for (auto& c : res.checks) passed += c.pass ? 1 : 0;
  if (opt.format == "json") {
    Json j{{"command", "verify"}, {"suite", suite}};
    j["checks"] = Json::array();
    for (auto& c : res.checks)
      j["checks"].push_back(
          Json{{"name", c.name}, {"pass", c.pass}, {"note", c.note}});
    j["passed"] = passed;
    j["total"] = res.checks.size();
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (auto& c : res.checks)
      os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.note
         << "\n";
    os << "suite " << suite << ": " << passed << "/" << res.checks.size()
       << " passed\n";
    emit(opt, os.str());
  }
  return res.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curves with an automorphism of large prime order: "
               "classification, normal forms, and finite-field oracles"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  // classify
  auto* classify = app.add_subcommand("classify", "emit the catalog for a genus range");
  i64 genus = 0, gmin = 0, gmax = 0;
  CommonOpts classify_opt;
  auto* og = classify->add_option("--genus", genus, "single genus");
  auto* omin = classify->add_option("--genus-min", gmin, "range start");
  auto* omax = classify->add_option("--genus-max", gmax, "range end");
  og->excludes(omin)->excludes(omax);
  omin->needs(omax);
  omax->needs(omin);
  add_common(classify, classify_opt);

  // model commands
  std::string model;
  CommonOpts genus_opt, hyp_opt, aut_opt, norm_opt;
  auto* genus_cmd = app.add_subcommand("genus", "genus of a model spec");
  genus_cmd->add_option("model", model, "model spec")->required();
  add_common(genus_cmd, genus_opt);
  auto* hyp_cmd = app.add_subcommand("hyperelliptic", "hyperellipticity verdict");
  hyp_cmd->add_option("model", model, "model spec")->required();
  add_common(hyp_cmd, hyp_opt);
  auto* aut_cmd = app.add_subcommand("aut", "automorphism-order report");
  aut_cmd->add_option("model", model, "model spec")->required();
  add_common(aut_cmd, aut_opt);
  auto* norm_cmd = app.add_subcommand("normalize", "canonical form of a model");
  norm_cmd->add_option("model", model, "model spec")->required();
  add_common(norm_cmd, norm_opt);

  // oracle-auts
  auto* oa = app.add_subcommand("oracle-auts",
                                "shape-constrained automorphism enumeration");
  std::string oa_field = "auto", oa_shapes = "affine,translation", oa_marks;
  int oa_bound = 1;
  std::vector<std::string> oa_params;
  CommonOpts oa_opt;
  oa->add_option("model", model, "model spec")->required();
  oa->add_option("--field", oa_field, "prime power or 'auto'");
  oa->add_option("--shapes", oa_shapes,
                 "comma list of diagonal, affine, mobius, translation");
  oa->add_option("--marks", oa_marks, "marked x-values for mobius (comma list)");
  oa->add_option("--exp-bound", oa_bound, "exponent bound for mobius factors");
  oa->add_option("--param", oa_params, "bind a free symbol, name=value");
  add_common(oa, oa_opt, /*with_char=*/false);

  // oracle-map
  auto* om = app.add_subcommand("oracle-map", "verify a map between models");
  std::string om_src, om_dst, om_map, om_inv, om_field = "auto";
  std::vector<std::string> om_params;
  CommonOpts om_opt;
  om->add_option("--src", om_src, "source model spec")->required();
  om->add_option("--dst", om_dst, "target model spec")->required();
  om->add_option("--map", om_map, "components 'X; Y' in x and y")->required();
  om->add_option("--inverse", om_inv, "candidate inverse 'X; Y'");
  om->add_option("--field", om_field, "prime power or 'auto'");
  om->add_option("--param", om_params, "bind a free symbol, name=value");
  add_common(om, om_opt, /*with_char=*/false);

  // verify
  auto* vf = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  VerifyOptions vopt;
  CommonOpts vf_opt;
  vf->add_option("suite", suite,
                 "homma, seyama, tame-g1, wild-g1, section5, example53")
      ->required();
  vf->add_option("--gmax", vopt.gmax, "genus bound for scans");
  vf->add_option("--q", vopt.q, "prime order for the tame-g1 suite");
  vf->add_option("--field", vopt.field, "prime power or 'auto'");
  add_common(vf, vf_opt, /*with_char=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) {
      if (*og) return cmd_classify(genus, genus, classify_opt);
      if (*omin) return cmd_classify(gmin, gmax, classify_opt);
      throw UsageError("classify needs --genus or --genus-min/--genus-max");
    }
    if (genus_cmd->parsed()) return cmd_genus(model, genus_opt);
    if (hyp_cmd->parsed()) return cmd_hyperelliptic(model, hyp_opt);
    if (aut_cmd->parsed()) return cmd_aut(model, aut_opt);
    if (norm_cmd->parsed()) return cmd_normalize(model, norm_opt);
    if (oa->parsed())
      return cmd_oracle_auts(model, oa_field, oa_shapes, oa_marks, oa_bound,
                             oa_params, oa_opt);
    if (om->parsed())
      return cmd_oracle_map(om_src, om_dst, om_map, om_inv, om_field,
                            om_params, om_opt);
    if (vf->parsed()) return cmd_verify(suite, vopt, vf_opt);
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConstraintError& e) {
    std::cerr << "constraint violated: " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
