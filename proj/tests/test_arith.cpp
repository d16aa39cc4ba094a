#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qcurve/arith.hpp>

using namespace qcurve;

TEST_CASE("primality is deterministic and exact") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(7919));
  CHECK(is_prime(2147483647ull));          // 2^31 - 1
  CHECK(is_prime(9223372036854775783ull)); // largest prime < 2^63
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));   // Carmichael
  CHECK_FALSE(is_prime(41041)); // Carmichael
  CHECK_FALSE(is_prime(3215031751ull)); // strong pseudoprime to 2,3,5,7

  // cross-check against a sieve
  std::vector<bool> comp(2000, false);
  for (u64 i = 2; i < 2000; ++i)
    for (u64 j = 2 * i; j < 2000; j += i) comp[j] = true;
  for (u64 n = 0; n < 2000; ++n) CHECK(is_prime(n) == (n >= 2 && !comp[n]));
}

TEST_CASE("factorize recovers prime powers") {
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<u64, int>{2, 3});
  CHECK(f[1] == std::pair<u64, int>{3, 2});
  CHECK(f[2] == std::pair<u64, int>{5, 1});
  CHECK(factorize(1).empty());
  CHECK(factorize(97).size() == 1);
}

TEST_CASE("modular inverse and residues") {
  CHECK(invmod(3, 7) == 5);
  CHECK(invmod(10, 17) == 12);
  CHECK_THROWS_AS(invmod(6, 9), ConstraintError);

  Residue a(3, 7), b(5, 7);
  CHECK((a * b).v == 1);
  CHECK((a + b).v == 1);
  CHECK((a - b).v == 5);
  CHECK(a.inverse().v == 5);
  CHECK(a.pow(-1).v == 5);
  CHECK(a.pow(6).v == 1);
  CHECK((-a).v == 4);
}

TEST_CASE("solve_unit_congruence scans the unit interval") {
  // x^2 + x + 1 mod 7: roots 2 and 4
  CHECK(solve_unit_congruence(1, 1, 1, 7) == std::set<i64>{2, 4});
  // x^2 + x + 1 mod 11: no roots
  CHECK(solve_unit_congruence(1, 1, 1, 11).empty());
  // x^2 + 1 mod 5: roots 2 and 3
  CHECK(solve_unit_congruence(1, 0, 1, 5) == std::set<i64>{2, 3});
  CHECK_THROWS_AS(solve_unit_congruence(1, 0, 1, 8), ConstraintError);

  // order-3 congruence x^2+x+1 == 0 has a unit root iff q == 1 mod 3,
  // for primes q > 3 (and x=1 is the root when q == 3)
  for (i64 q = 2; q <= 200; ++q) {
    if (!is_prime((u64)q)) continue;
    bool has = !solve_unit_congruence(1, 1, 1, q).empty();
    if (q == 3)
      CHECK(has);
    else
      CHECK(has == (q % 3 == 1));
  }
  // x^2 + 1 == 0 has a unit root iff q == 1 mod 4, for odd primes
  for (i64 q = 3; q <= 200; ++q) {
    if (!is_prime((u64)q)) continue;
    bool has = !solve_unit_congruence(1, 0, 1, q).empty();
    CHECK(has == (q % 4 == 1));
  }
}

TEST_CASE("prime fields") {
  auto F7 = build_field(7, 1);
  CHECK(F7->Q == 7);
  CHECK(F7->gen == 3);
  CHECK(F7->mul(3, 5) == 1);
  CHECK(F7->add(4, 5) == 2);
  CHECK(F7->inv(3) == 5);
  CHECK(F7->pow(3, 6) == 1);
  CHECK(F7->pow(3, -1) == 5);

  auto F11 = build_field(11, 1);
  CHECK(F11->gen == 2);

  auto F5 = build_field(5, 1);
  CHECK(F5->gen == 2);

  CHECK_THROWS_AS(build_field(6, 1), ConstraintError);
  CHECK_THROWS_AS(build_field(5, 0), ConstraintError);
  CHECK_THROWS_AS(build_field(5, 13), ConstraintError);
}

TEST_CASE("extension field modulus is the lex-first irreducible") {
  // F_16: x^4 + x^3 + 1 comes before x^4 + x^2 + ... in lex order on
  // (c0, c1, c2, c3) and is irreducible
  auto F16 = build_field(2, 4);
  CHECK(F16->Q == 16);
  CHECK(F16->modpoly == detail::Poly{1, 0, 0, 1, 1});

  // F_4: x^2 + x + 1 is the only irreducible quadratic
  auto F4 = build_field(2, 2);
  CHECK(F4->modpoly == detail::Poly{1, 1, 1});

  // F_9: c0=1 candidates: x^2+1 = (x- ...) has no root mod 3? 0->1,1->2,2->2:
  // irreducible, and lex-first (c0,c1)=(1,0)
  auto F9 = build_field(3, 2);
  CHECK(F9->modpoly == detail::Poly{1, 0, 1});

  // F_25: x^2 + c1 x + c0; (c0,c1)=(1,0): x^2+1 has root 2 mod 5.
  // (1,1): x^2+x+1 has root? 0->1,1->3,2->2,3->3,4->1: irreducible.
  auto F25 = build_field(5, 2);
  CHECK(F25->modpoly == detail::Poly{1, 1, 1});
}

TEST_CASE("field axioms hold on every element of small fields") {
  for (auto [p, k] : std::vector<std::pair<i64, i64>>{
           {2, 1}, {3, 1}, {7, 1}, {2, 4}, {3, 2}, {5, 2}, {2, 3}}) {
    auto F = build_field(p, k);
    for (i64 a = 0; a < F->Q; ++a) {
      CHECK(F->add(a, F->neg(a)) == 0);
      CHECK(F->mul(a, 1) == a);
      if (a != 0) {
        CHECK(F->mul(a, F->inv(a)) == 1);
        CHECK(F->pow(a, F->Q - 1) == 1);
      }
      for (i64 b = 0; b < F->Q; ++b) {
        CHECK(F->mul(a, b) == F->mul_slow(a, b));
        CHECK(F->add(a, b) == F->add(b, a));
      }
    }
    // generator has full multiplicative order
    std::set<i64> powers;
    i64 cur = 1;
    for (i64 i = 0; i < F->Q - 1; ++i) {
      powers.insert(cur);
      cur = F->mul(cur, F->gen);
    }
    CHECK((i64)powers.size() == F->Q - 1);
  }
}

TEST_CASE("roots of unity") {
  auto F7 = build_field(7, 1);
  auto z2 = nth_root_of_unity(F7, 2);
  CHECK(z2.idx == 6);
  auto z3 = nth_root_of_unity(F7, 3);
  CHECK(F7->pow(z3.idx, 3) == 1);
  CHECK(z3.idx != 1);
  CHECK_THROWS_AS(nth_root_of_unity(F7, 5), ConstraintError);

  auto F11 = build_field(11, 1);
  auto z5 = nth_root_of_unity(F11, 5);
  CHECK(z5.idx == 4); // 2^2 = 4, gen 2, (11-1)/5 = 2
  CHECK(F11->pow(4, 5) == 1);

  // exact order in an extension: 3 | 25 - 1? no; 3 | 24 yes -> order 3 in F_25
  auto F25 = build_field(5, 2);
  auto z3e = nth_root_of_unity(F25, 3);
  CHECK(F25->pow(z3e.idx, 3) == 1);
  CHECK(z3e.idx != 1);
}

TEST_CASE("subfield embedding") {
  auto F5 = build_field(5, 1);
  auto F25 = build_field(5, 2);
  i64 r = subfield_root(*F5, *F25);
  // embedding of F_5 constants is the identity on indices 0..4
  for (i64 c = 0; c < 5; ++c) CHECK(embed_element(*F5, *F25, r, c) == c);

  auto F2 = build_field(2, 2);
  auto F16 = build_field(2, 4);
  i64 r2 = subfield_root(*F2, *F16);
  // the image of the F_4 generator-root satisfies x^2 + x + 1 = 0 in F_16
  i64 img = embed_element(*F2, *F16, r2, F2->index_of({0, 1}));
  i64 val = F16->add(F16->add(F16->mul(img, img), img), 1);
  CHECK(val == 0);
  // embeddings preserve multiplication
  for (i64 a = 0; a < 4; ++a)
    for (i64 b = 0; b < 4; ++b)
      CHECK(embed_element(*F2, *F16, r2, F2->mul(a, b)) ==
            F16->mul(embed_element(*F2, *F16, r2, a),
                     embed_element(*F2, *F16, r2, b)));

  CHECK_THROWS_AS(subfield_root(*F5, *F16), ConstraintError);
}

TEST_CASE("bigint and rational helpers") {
  CHECK(bigpow(2, 10) == 1024);
  CHECK(bigpow(3, 0) == 1);
  CHECK(fits_i64(BigInt("9223372036854775807")));
  CHECK_FALSE(fits_i64(BigInt("9223372036854775808")));
  CHECK(rat_str(rat(3, 6)) == "1/2");
  CHECK(rat_str(rat(-4, 2)) == "-2");
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
}
