#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qcurve/oracle.hpp>

using namespace qcurve;

namespace {

PlanePoly lin(const Field& F, i64 root) {
  // x - root
  return PlanePoly::var_x(F).sub(PlanePoly::constant(F, F->from_int(root)));
}

PlanePoly one(const Field& F) { return PlanePoly::constant(F, 1); }

// y^5 - x^r (x-1)^s (x-h)^t with h = 1/2
PlanePoly qcurve_poly(const Field& F, i64 r, i64 s, i64 t) {
  i64 h = F->mul(F->from_int(1), F->inv(F->from_int(2)));
  PlanePoly rhs = PlanePoly::var_x(F)
                      .pow((int)r)
                      .mul(lin(F, 1).pow((int)s))
                      .mul(PlanePoly::var_x(F)
                               .sub(PlanePoly::constant(F, h))
                               .pow((int)t));
  return PlanePoly::monomial(F, 0, 5, 1).sub(rhs);
}

PlanePoly half_lin(const Field& F) {
  // x - 1/2
  i64 h = F->mul(F->from_int(1), F->inv(F->from_int(2)));
  return PlanePoly::var_x(F).sub(PlanePoly::constant(F, h));
}

PlanePoly one_minus_x(const Field& F) {
  return PlanePoly::constant(F, F->from_int(1)).sub(PlanePoly::var_x(F));
}

// the four pairwise-equivalent genus-four curves and the maps between them
struct QMapKit {
  Field F;
  std::array<PlanePoly, 4> Q;
  std::array<MapCandidate, 4> from1;  // Q1 -> Qi
  std::array<MapCandidate, 4> to1;    // Qi -> Q1

  explicit QMapKit(Field f) : F(std::move(f)) {
    Q[0] = qcurve_poly(F, 1, 4, 2);
    Q[1] = qcurve_poly(F, 1, 4, 3);
    Q[2] = qcurve_poly(F, 2, 3, 1);
    Q[3] = qcurve_poly(F, 2, 3, 4);
    auto y = [&](int j) { return PlanePoly::monomial(F, 0, j, 1); };
    from1[0] = identity_map(F);
    to1[0] = identity_map(F);
    // Q1 -> Q2: (1-x, y^4 / ((x-1)^3 (x-1/2)))
    from1[1] = {{one_minus_x(F), one(F)},
                {y(4), lin(F, 1).pow(3).mul(half_lin(F))},
                "Q1->Q2"};
    // Q2 -> Q1: (1-x, y^4 / ((1-x)^3 (1/2-x)^2))
    to1[1] = {{one_minus_x(F), one(F)},
              {y(4), one_minus_x(F).pow(3).mul(half_lin(F).neg().pow(2))},
              "Q2->Q1"};
    // Q1 -> Q3: (1-x, y^3 / ((x-1)^2 (x-1/2)))
    from1[2] = {{one_minus_x(F), one(F)},
                {y(3), lin(F, 1).pow(2).mul(half_lin(F))},
                "Q1->Q3"};
    // Q3 -> Q1: (1-x, y^2 / (1-x))
    to1[2] = {{one_minus_x(F), one(F)}, {y(2), one_minus_x(F)}, "Q3->Q1"};
    // Q1 -> Q4: (x, y^2 / (x-1))
    from1[3] = {{PlanePoly::var_x(F), one(F)}, {y(2), lin(F, 1)}, "Q1->Q4"};
    // Q4 -> Q1: (x, y^3 / (x (x-1) (x-1/2)^2))
    to1[3] = {{PlanePoly::var_x(F), one(F)},
              {y(3),
               PlanePoly::var_x(F).mul(lin(F, 1)).mul(half_lin(F).pow(2))},
              "Q4->Q1"};
  }
};

}  // namespace

TEST_CASE("plane polynomial arithmetic and reduction") {
  auto F = build_field(7, 1);
  PlanePoly x = PlanePoly::var_x(F), y = PlanePoly::var_y(F);
  PlanePoly f = x.mul(y).add(PlanePoly::constant(F, 3));
  CHECK(f.eval(2, 5) == F->add(F->mul(2, 5), 3));
  CHECK(f.degx() == 1);
  CHECK(f.degy() == 1);
  CHECK(f.sub(f).is_zero());

  PlanePoly rel = PlanePoly::monomial(F, 0, 2, 1).sub(x);  // y^2 - x
  PlanePoly y4 = PlanePoly::monomial(F, 0, 4, 1);
  CHECK(reduce_mod(y4, rel) == x.mul(x));  // y^4 == x^2
  PlanePoly y5 = PlanePoly::monomial(F, 0, 5, 1);
  CHECK(reduce_mod(y5, rel) == x.mul(x).mul(y));

  auto u = f.scale(4).unit_multiple_of(f);
  REQUIRE(u.has_value());
  CHECK(*u == 4);
  CHECK(!f.unit_multiple_of(f.add(one(F))).has_value());

  // non-monic relation rejected
  PlanePoly bad = x.mul(PlanePoly::monomial(F, 0, 2, 1)).sub(one(F));
  CHECK_THROWS_AS(reduce_mod(y4, bad), ConstraintError);
}

TEST_CASE("specialize: tame families") {
  auto F7 = build_field(7, 1);
  auto C = specialize(CurveFamily{GenusFourQFamily{}}, F7);
  // y^5 - x (x-1)^4 (x-4)^2 since 1/2 = 4 mod 7
  PlanePoly expect =
      PlanePoly::monomial(F7, 0, 5, 1)
          .sub(PlanePoly::var_x(F7).mul(lin(F7, 1).pow(4)).mul(
              lin(F7, 4).pow(2)));
  CHECK(C == expect);

  // Klein quartic model y^7 - x (x-1)^2 over F_29
  auto F29 = build_field(29, 1);
  auto K = specialize(CurveFamily{Homma3Branch{7, 2}}, F29);
  PlanePoly kexp = PlanePoly::monomial(F29, 0, 7, 1)
                       .sub(PlanePoly::var_x(F29).mul(lin(F29, 1).pow(2)));
  CHECK(K == kexp);

  // unity-complete mode needs all the listed root orders; the plain
  // specialization only needs the equation to make sense
  CHECK_THROWS_AS(specialize(CurveFamily{FermatLike{5}}, F7, {}, true),
                  ConstraintError);
  CHECK_NOTHROW(specialize(CurveFamily{FermatLike{5}}, F7));

  // free parameters must be bound, and bindings are checked
  CurveFamily tf{Tame4Branch{5, 1, 1, 1, loc_sym("a", {rat(0), rat(1)})}};
  auto F11 = build_field(11, 1);
  CHECK_THROWS_AS(specialize(tf, F11), ConstraintError);
  CHECK_NOTHROW(specialize(tf, F11, {{"a", 3}}));
  CHECK_THROWS_AS(specialize(tf, F11, {{"a", 0}}), ConstraintError);
  CHECK_THROWS_AS(specialize(tf, F11, {{"a", 37}}), ConstraintError);

  // branch points must stay distinct in the field
  CurveFamily clash{Tame4Branch{5, 1, 1, 1, loc_rat(8)}};
  auto F7b = build_field(7, 1);
  CHECK_THROWS_AS(specialize(clash, F7b), ConstraintError);

  // characteristic clash
  auto F5 = build_field(5, 1);
  CHECK_THROWS_AS(specialize(CurveFamily{GenusFourQFamily{}}, F5),
                  ConstraintError);
}

TEST_CASE("specialize: wild families") {
  auto F5 = build_field(5, 1);
  auto D = specialize(CurveFamily{WildD{5}}, F5);
  // y^5 - y - x (x-1)^2
  PlanePoly expect = PlanePoly::monomial(F5, 0, 5, 1);
  expect.set(0, 1, F5->neg(1));
  expect = expect.sub(PlanePoly::var_x(F5).mul(lin(F5, 1).pow(2)));
  CHECK(D == expect);

  auto Cc = specialize(CurveFamily{WildC{5}}, F5);
  PlanePoly cexp = PlanePoly::monomial(F5, 0, 5, 1);
  cexp.set(0, 1, F5->neg(1));
  cexp.set(3, 0, F5->neg(1));
  CHECK(Cc == cexp);

  auto F7 = build_field(7, 1);
  auto E = specialize(CurveFamily{WildE{7, 3, 1}}, F7);
  // y^7 - y - x(x-1)(x-3)
  PlanePoly eexp = PlanePoly::monomial(F7, 0, 7, 1);
  eexp.set(0, 1, F7->neg(1));
  eexp = eexp.sub(
      PlanePoly::var_x(F7).mul(lin(F7, 1)).mul(lin(F7, 3)));
  CHECK(E == eexp);

  // two-pole family clears its denominator x(x-1)
  auto Y = specialize(CurveFamily{WildTwoPole{5, 1, 1, 1}}, F5);
  CHECK(Y.degy() == 5);
  CHECK(Y.get(0, 0) == F5->neg(1));  // -(a x^2 + b x + c) at x = 0
  // (y^5 - y) x (x-1) term present
  CHECK(Y.get(2, 5) == 1);
  CHECK(Y.get(1, 5) == F5->neg(1));

  CHECK_THROWS_AS(specialize(CurveFamily{WildC{5}}, build_field(7, 1)),
                  ConstraintError);

  // lambda from an extension needs a containing field
  CurveFamily e2{WildE{5, 5, 2}};  // lambda outside the prime field
  CHECK_THROWS_AS(specialize(e2, F5), ConstraintError);
  CHECK_NOTHROW(specialize(e2, build_field(5, 2)));

  // extension coefficients embed consistently
  auto F25 = build_field(5, 2);
  auto C25 = specialize(CurveFamily{WildC{5}}, F25);
  i64 root = subfield_root(*F5, *F25);
  CHECK(C25 == Cc.embedded(F25, root));
}

TEST_CASE("choose_field finds the smallest unity-complete field") {
  CHECK(choose_field(CurveFamily{GenusFourQFamily{}})->Q == 11);
  CHECK(choose_field(CurveFamily{FermatLike{5}})->Q == 16);
  CHECK(choose_field(CurveFamily{Homma3Branch{7, 2}})->Q == 8);
  CHECK(choose_field(CurveFamily{WildC{5}})->Q == 5);
  CHECK_THROWS_AS(
      choose_field(CurveFamily{Tame4Branch{5, 1, 1, 1, loc_sym("a")}}),
      ConstraintError);
}

TEST_CASE("verify_map: companion maps between the four genus-four curves") {
  for (i64 p : {7, 11}) {
    CAPTURE(p);
    QMapKit kit(build_field(p, 1));

    // direct maps out of Q1 and back, all birational
    for (int i = 1; i < 4; ++i) {
      CAPTURE(i);
      auto v = verify_map(kit.Q[0], kit.Q[i], kit.from1[i], kit.to1[i]);
      CHECK(v.homomorphism);
      REQUIRE(v.birational.has_value());
      CHECK(*v.birational);
      // symmetric direction
      auto w = verify_map(kit.Q[i], kit.Q[0], kit.to1[i], kit.from1[i]);
      CHECK(w.homomorphism);
      CHECK(*w.birational);
    }

    // identity
    auto idv = verify_map(kit.Q[0], kit.Q[0], identity_map(kit.F),
                          identity_map(kit.F));
    CHECK(idv.homomorphism);
    CHECK(*idv.birational);

    // all ordered pairs via composition
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        auto fwd = compose_maps(kit.from1[j], kit.to1[i]);
        auto bwd = compose_maps(kit.from1[i], kit.to1[j]);
        auto v = verify_map(kit.Q[i], kit.Q[j], fwd, bwd);
        CHECK(v.homomorphism);
        CHECK(*v.birational);
      }

    // sign-flipped mutant is not a morphism
    MapCandidate bad = kit.from1[2];
    bad.X.num = PlanePoly::var_x(kit.F).sub(
        PlanePoly::constant(kit.F, kit.F->from_int(1)));
    CHECK(!verify_map(kit.Q[0], kit.Q[2], bad).homomorphism);

    // wrong inverse shows up as non-birational
    auto vv = verify_map(kit.Q[0], kit.Q[2], kit.from1[2], kit.to1[1]);
    CHECK(vv.homomorphism);
    CHECK(!*vv.birational);

    // denominator inside the curve ideal is rejected
    MapCandidate bad2 = kit.from1[2];
    bad2.Y.den = kit.Q[0];
    CHECK_THROWS_AS(verify_map(kit.Q[0], kit.Q[2], bad2), ConstraintError);
  }
}

TEST_CASE("shape enumeration: diagonal maps") {
  // x^5 y^10 - 2 y^5 - 1 over F_11 (the tower's plane model)
  auto F11 = build_field(11, 1);
  PlanePoly T = PlanePoly::monomial(F11, 5, 10, 1);
  T.set(0, 5, F11->neg(F11->from_int(2)));
  T.set(0, 0, F11->neg(1));
  auto maps = enumerate_shape_automorphisms(
      T, {{ShapeTag::DiagonalMonomial}, {}, 1});
  CHECK(maps.size() == 25);
  for (auto& m : maps) {
    CHECK(m.par[1] == 0);
    CHECK(m.par[3] == 0);
    CHECK(F11->pow(m.par[2], 5) == 1);  // y-scale is a 5th root of unity
  }

  // y^5 + x^3 + 1 over F_31
  auto F31 = build_field(31, 1);
  PlanePoly G = PlanePoly::monomial(F31, 0, 5, 1);
  G.set(3, 0, 1);
  G.set(0, 0, 1);
  auto gm = enumerate_shape_automorphisms(
      G, {{ShapeTag::DiagonalMonomial}, {}, 1});
  CHECK(gm.size() == 15);
  // every enumerated map is a verified self-map
  for (auto& m : gm) CHECK(verify_map(G, G, m.map).homomorphism);
}

TEST_CASE("shape enumeration: affine and translation maps for wild curves") {
  auto F5 = build_field(5, 1);
  auto D = specialize(CurveFamily{WildD{5}}, F5);
  auto dm = enumerate_shape_automorphisms(
      D, {{ShapeTag::AffineTwist, ShapeTag::TranslationY}, {}, 1});
  CHECK(dm.size() == 5);
  for (auto& m : dm) {
    CHECK(m.par[0] == 1);  // x fixed
    CHECK(m.par[1] == 0);
    CHECK(m.par[2] == 1);  // y -> y + d only
  }

  // nonsplit one-pole curve over F_25 picks up the x-scalings too
  auto F25 = build_field(5, 2);
  auto C25 = specialize(CurveFamily{WildC{5}}, F25);
  auto cm = enumerate_shape_automorphisms(
      C25, {{ShapeTag::AffineTwist}, {}, 1});
  CHECK(cm.size() == 60);
  // structure: u^12 = 1, y-scale = u^3, y-shift in the prime field
  for (auto& m : cm) {
    CHECK(m.par[1] == 0);
    CHECK(F25->pow(m.par[0], 12) == 1);
    CHECK(m.par[2] == F25->pow(m.par[0], 3));
    CHECK(F25->pow(m.par[3], 5) == m.par[3]);
  }
}

TEST_CASE("shape enumeration: mobius twists on a small hyperelliptic curve") {
  // y^5 = x (x-1) over F_11: the twist stabilizer has order 2 * 5
  auto F11 = build_field(11, 1);
  auto H = specialize(CurveFamily{Homma3Branch{5, 1}}, F11);
  ShapeSearch s;
  s.tags = {ShapeTag::MobiusTwist};
  s.xmarks = {0, 1};
  s.exp_bound = 2;
  auto hm = enumerate_shape_automorphisms(H, s);
  CHECK(hm.size() == 10);
  i64 ident = 0, swaps = 0;
  for (auto& m : hm) {
    CHECK(verify_map(H, H, m.map).homomorphism);
    if (m.par[2] == 0 && m.par[0] == 1 && m.par[1] == 0) ++ident;
    if (m.par[2] == 0 && m.par[0] == F11->neg(1)) ++swaps;  // x -> 1 - x
  }
  CHECK(ident == 5);
  CHECK(swaps == 5);
}

TEST_CASE("shape enumeration: search-space guard") {
  auto F29 = build_field(29, 1);
  auto K = specialize(CurveFamily{Homma3Branch{7, 2}}, F29);
  ShapeSearch s;
  s.tags = {ShapeTag::MobiusTwist};
  s.xmarks = {0, 1, 2};
  s.exp_bound = 2;
  CHECK_THROWS_AS(enumerate_shape_automorphisms(K, s), ConstraintError);
}

TEST_CASE("fixed points of order-q and order-p generators") {
  // y^7 = x (x-1)^2 over F_29, map (x, zeta_7 y): places over x = 0, 1
  // are fixed, plus the place at infinity supplied by the caller
  auto F29 = build_field(29, 1);
  auto K = specialize(CurveFamily{Homma3Branch{7, 2}}, F29);
  i64 z7 = nth_root_of_unity(F29, 7).idx;
  MapCandidate zmap{{PlanePoly::var_x(F29), one(F29)},
                    {PlanePoly::var_y(F29).scale(z7), one(F29)},
                    "(x, zeta7 y)"};
  CHECK(count_fixed_points(K, zmap, 2, 1) == 3);

  // genus-four curve over F_11, map (x, zeta_5 y): three finite branch
  // points plus infinity
  auto F11 = build_field(11, 1);
  auto Q1 = specialize(CurveFamily{GenusFourQFamily{}}, F11);
  i64 z5 = nth_root_of_unity(F11, 5).idx;
  MapCandidate z5map{{PlanePoly::var_x(F11), one(F11)},
                     {PlanePoly::var_y(F11).scale(z5), one(F11)},
                     "(x, zeta5 y)"};
  CHECK(count_fixed_points(Q1, z5map, 2, 1) == 4);

  // wild curves: y -> y + 1 fixes nothing affine; the fixed places are the
  // poles the caller reports
  auto F5 = build_field(5, 1);
  auto Cc = specialize(CurveFamily{WildC{5}}, F5);
  MapCandidate tr{{PlanePoly::var_x(F5), one(F5)},
                  {PlanePoly::var_y(F5).add(one(F5)), one(F5)},
                  "(x, y+1)"};
  CHECK(count_fixed_points(Cc, tr, 2, 1) == 1);

  auto Y = specialize(CurveFamily{WildTwoPole{5, 1, 1, 1}}, F5);
  CHECK(count_fixed_points(Y, tr, 1, 2) == 2);

  // the candidate must actually be an automorphism
  MapCandidate tr11{{PlanePoly::var_x(F11), one(F11)},
                    {PlanePoly::var_y(F11).add(one(F11)), one(F11)},
                    "(x, y+1)"};
  CHECK_THROWS_AS(count_fixed_points(Q1, tr11, 2, 1), ConstraintError);
  CHECK_THROWS_AS(count_fixed_points(Q1, z5map, 0, 1), ConstraintError);
  CHECK_THROWS_AS(count_fixed_points(Q1, z5map, 5, 1), ConstraintError);
}

TEST_CASE("five-cover tower audit over a genus-two base") {
  for (i64 p : {11, 31}) {
    CAPTURE(p);
    auto rep = audit_example_tower(build_field(p, 1));
    CHECK(rep.plus_base.unramified);
    CHECK(rep.plus_base.ramified_places == 0);
    CHECK(rep.plus_base.tower_genus == 6);
    CHECK(!rep.minus_base.unramified);
    CHECK(rep.minus_base.ramified_places == 5);
    CHECK(rep.minus_base.tower_genus == 16);
    CHECK(rep.plane_model_matches);
    CHECK(rep.cited_aut_order == 150);
  }
  CHECK_THROWS_AS(audit_example_tower(build_field(5, 1)), ConstraintError);
  CHECK_THROWS_AS(audit_example_tower(build_field(13, 1)), ConstraintError);
}

TEST_CASE("tower plane model carries the expected diagonal action") {
  // the unramified degree-5 cover of y^2 = x^5 + 1 has a plane model
  // x^5 z^10 = 2 z^5 + 1 whose diagonal stabilizer already shows 25 maps
  auto F11 = build_field(11, 1);
  PlanePoly T = PlanePoly::monomial(F11, 5, 10, 1);
  T.set(0, 5, F11->neg(F11->from_int(2)));
  T.set(0, 0, F11->neg(1));
  auto maps =
      enumerate_shape_automorphisms(T, {{ShapeTag::DiagonalMonomial}, {}, 1});
  CHECK(maps.size() == 25);
}
