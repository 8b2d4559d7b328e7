#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncgdih/cyclic.hpp"

using namespace ncgdih;

namespace {
const Word S1 = DihedralWord::s();
const Word E = DihedralWord::e();
}  // namespace

TEST_CASE("distinguished 0-cocycles evaluate as the dual basis") {
  CHECK(psi0()(DihedralRing::one()) == CRat(1));
  CHECK(psi1()(proj_p1()) == CRat(1));  // (a0 + b0)/2 = (0 + 2)/2
  CHECK(psi2()(proj_p1()) == CRat(0));  // b0 = 0 for psi2
  CHECK(psi2()(proj_p2()) == CRat(1));
  CHECK(psi0()(proj_p1()) == CRat(0));
  CHECK(psi0()(proj_p2()) == CRat(0));
}

TEST_CASE("0-cocycles are constant on conjugacy classes") {
  for (const auto& psi : {psi0(), psi1(), psi2(), psi_k(3)}) {
    // psi(S^n) = psi(S^-n) and psi(S^{m+2n} e) = psi(S^m e)
    for (long n = -12; n <= 12; ++n) {
      CHECK(psi(Word{n, 0}) == psi(Word{-n, 0}));
      CHECK(psi(Word{n, 1}) == psi(Word{n + 2, 1}));
    }
    CHECK(verify_trace(psi, 10).ok());
  }
}

TEST_CASE("boundary of a linear functional") {
  WordFunctional psi;
  psi.on_power = {{1, CRat(3)}, {-2, CRat{Rational(1, 2)}}};
  psi.on_flip = {{0, CRat(5)}, {1, CRat(-1)}, {3, CRat(7)}};
  auto b = boundary_b0(psi);
  // b psi(S^m, S^n) = 0
  for (long m = -6; m <= 6; ++m)
    for (long n = -6; n <= 6; ++n)
      CHECK(b(Word{m, 0}, Word{n, 0}).is_zero());
  // b psi(S^m, S^n e) = b_{m+n} - b_{n-m}
  auto bv = [&](long k) { return psi(Word{k, 1}); };
  for (long m = -6; m <= 6; ++m)
    for (long n = -6; n <= 6; ++n)
      CHECK(b(Word{m, 0}, Word{n, 1}) == bv(m + n) - bv(n - m));
  // b psi(S^m e, S^n e) = a_{m-n} - a_{n-m}
  auto av = [&](long k) { return psi(Word{k, 0}); };
  for (long m = -6; m <= 6; ++m)
    for (long n = -6; n <= 6; ++n)
      CHECK(b(Word{m, 1}, Word{n, 1}) == av(m - n) - av(n - m));

  WordFunctional zero;
  auto bz = boundary_b0(zero);
  for (long m = -4; m <= 4; ++m) CHECK(bz(Word{m, 0}, Word{m, 1}).is_zero());
}

TEST_CASE("b of a trace vanishes; b o b = 0 on raw functionals") {
  std::mt19937_64 rng(31);
  // traces: b psi = 0 on all pairs with exponents <= 24 (hence b(b psi) = 0
  // on all triples <= 12, every term being a pair of products)
  for (int i = 0; i < 100; ++i) {
    Cochain0 psi = random_cochain0(rng, 6);
    auto b = boundary_b0(psi);
    for (const auto& x : words_within(24))
      for (const auto& y : words_within(24)) CHECK(b(x, y).is_zero());
  }
  // raw functionals: the full b o b identity, directly on triples
  for (int i = 0; i < 5; ++i) {
    CheckReport r = verify_bb_zero(random_functional(rng, 6), 12);
    CHECK(r.ok());
    CHECK(r.tuples_checked == 50ull * 50 * 50);
  }
}

TEST_CASE("cocycle form: antisymmetry and the cocycle identity") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 3; ++i) {
    CocycleForm1 phi = random_cocycle1(rng, 6);
    CheckReport r = verify_cocycle1(phi, 12);
    CHECK(r.ok());
  }
  for (int i = 0; i < 10; ++i) {
    CocycleForm1 phi = random_cocycle1(rng, 4);
    CHECK(is_cyclic1(
        [&phi](const Word& x, const Word& y) { return phi(x, y); }, 8));
  }
}

TEST_CASE("is_cyclic rejects a non-cyclic explicit cochain") {
  ExplicitCochain1 bad;
  bad.table[{S1, E}] = CRat(1);  // phi(S,e) = 1 but phi(e,S) = 0
  CHECK_FALSE(is_cyclic1(
      [&bad](const Word& x, const Word& y) { return bad(x, y); }, 2));
}

TEST_CASE("is_cyclic accepts traces and S-images") {
  CHECK(is_cyclic0([psi = psi1()](const Word& w) { return psi(w); }, 8));
  SCochain2 s = periodicity_s(psi_k(2));
  CHECK(is_cyclic2(
      [&s](const Word& x, const Word& y, const Word& z) { return s(x, y, z); },
      5));
}

TEST_CASE("periodicity operator on 0-cocycles") {
  SCochain2 s0 = periodicity_s(psi0());
  CHECK(s0(Word{}, Word{}, Word{}) == CRat(1));

  SCochain2 sk = periodicity_s(psi_k(4));
  for (long p = -4; p <= 4; ++p)
    for (long q = -4; q <= 4; ++q)
      for (long r = -4; r <= 4; ++r)
        CHECK(sk(Word{p, 0}, Word{q, 0}, Word{r, 0}) ==
              CRat(std::labs(p + q + r) == 4 ? 1 : 0));

  // S psi(p,p,p) = psi(p^3) = psi(p) on idempotents
  for (const auto& psi : {psi0(), psi1(), psi2()})
    for (const auto& p : {proj_one(), proj_p1(), proj_p2()})
      CHECK(eval_trilinear(periodicity_s(psi), p, p, p) == psi(p));
}

TEST_CASE("cochains from data enforce the symmetry constraints") {
  Cochain0 c = Cochain0::from_data({{2, CRat(5)}, {-2, CRat(5)}}, CRat(1),
                                   CRat(2));
  CHECK(c(Word{2, 0}) == CRat(5));
  CHECK(c(Word{0, 1}) == CRat(1));
  CHECK(c(Word{5, 1}) == CRat(2));
  CHECK_THROWS_AS(Cochain0::from_data({{2, CRat(5)}}, CRat(), CRat()),
                  SymmetryViolation);
  CHECK_THROWS_AS(
      CocycleForm1::from_data({}, {{1, CRat(1)}, {-1, CRat(1)}}),
      SymmetryViolation);

  // (b1 = 2) is psi2
  Cochain0 like_psi2 = Cochain0::from_data({}, CRat(), CRat(2));
  for (const auto& w : words_within(6)) CHECK(like_psi2(w) == psi2()(w));

  // zero data gives the zero 1-cocycle
  CocycleForm1 zero = CocycleForm1::from_data({}, {});
  for (const auto& x : words_within(4))
    for (const auto& y : words_within(4)) CHECK(zero(x, y).is_zero());
}

TEST_CASE("solve_1_coboundary: worked values") {
  // phi = 0 -> psi = 0
  CoboundaryPotential z = solve_1_coboundary(CocycleForm1::from_data({}, {}));
  for (const auto& w : words_within(8)) CHECK(z(w).is_zero());

  // c_1 = 1, all else 0: b_2 = 1, b_0 = 0
  CocycleForm1 phi = CocycleForm1::from_data({{1, CRat(1)}}, {});
  CoboundaryPotential psi = solve_1_coboundary(phi);
  CHECK(psi.value_flip(2) == CRat(1));
  CHECK(psi.value_flip(0) == CRat(0));
  CHECK(psi.value_flip(-2) == CRat(0));
  CHECK(psi.value_flip(4) == CRat(1));  // prefix sums stay constant

  // d-data moves to the a-values with a sign, positive side only
  CocycleForm1 phid =
      CocycleForm1::from_data({}, {{3, CRat(7)}, {-3, CRat(-7)}});
  CoboundaryPotential psid = solve_1_coboundary(phid);
  CHECK(psid.value_power(3) == CRat(-7));
  CHECK(psid.value_power(-3) == CRat(0));
}

TEST_CASE("constructive 1-coboundary theorem on random cocycles") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 30; ++i) {
    CocycleForm1 phi = random_cocycle1(rng, 8);
    CheckReport r = verify_solve1(phi, 16);
    CHECK(r.ok());
  }
}

TEST_CASE("solve_2_coboundary: formula values") {
  SPotential1 phi2 = solve_2_coboundary(2, CRat());
  CHECK(phi2.alpha(3, -1) == CRat(2));  // (3 - (-1))/2
  CHECK(phi2.alpha(1, 1) == CRat(0));
  CHECK(phi2.alpha(5, 2) == CRat(0));   // m + n != +-2

  SPotential1 phi1 = solve_2_coboundary(1, CRat());
  CHECK(phi1.gamma(1, 0) == CRat(0));   // branch m - n = k: 2n/k - ck = 0
  CHECK(phi1.gamma(3, 2) == CRat(4));
  CHECK(phi1.gamma(2, 3) == CRat(-4));  // antisymmetry
  CHECK(phi1.gamma(0, 1) == CRat(0));

  SPotential1 phic = solve_2_coboundary(2, CRat{Rational(-3, 2)});
  CHECK(phic.gamma(3, 1) == CRat(1) + CRat{Rational(3, 2)});  // 2/2 + 3/2

  CHECK_THROWS_AS(solve_2_coboundary(0, CRat()), std::domain_error);
}

TEST_CASE("b(solve_2(k, ck)) = S psi_k for several k and free scalars") {
  for (long k : {1L, 2L, 3L, -2L})
    for (const CRat& ck :
         {CRat(), CRat(1), CRat{Rational(-3, 2)}}) {
      CheckReport r = verify_solve2(k, ck, 6);
      INFO("k = ", k);
      CHECK(r.ok());
    }
}

TEST_CASE("pairings with the standard projections") {
  auto m = duality_matrix();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m[i][j] == CRat(i == j ? 1 : 0));

  // S-compatibility through the degree-2 pairing
  for (const auto& psi : {psi0(), psi1(), psi2()})
    for (const auto& p : {proj_one(), proj_p1(), proj_p2()})
      CHECK(pair_with_projection(periodicity_s(psi), p) ==
            pair_with_projection(psi, p));

  // and for the higher cocycles psi_k, whose S-image is a coboundary
  for (long k : {1L, 2L})
    for (const auto& p : {proj_one(), proj_p1(), proj_p2()})
      CHECK(pair_with_projection(periodicity_s(psi_k(k)), p) ==
            pair_with_projection(psi_k(k), p));

  DihedralRing not_idem{{DihedralWord::s(), CRat(1)}};
  CHECK_THROWS_AS(pair_with_projection(psi0(), not_idem), std::domain_error);
}
