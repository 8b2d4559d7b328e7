#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncgdih/kclasses.hpp"

using namespace ncgdih;

TEST_CASE("standard class lists and validity") {
  auto a_classes = standard_classes(AlgebraTag::A);
  REQUIRE(a_classes.size() == 3);
  CHECK(a_classes[2].label == "[P2]");
  CHECK(a_classes[2].dihedral == proj_p2());  // (1 + Se)/2
  for (const auto& c : a_classes) {
    CHECK(c.kind == ClassKind::Projection);
    CHECK(c.valid());
  }

  auto b_classes = standard_classes(AlgebraTag::B);
  REQUIRE(b_classes.size() == 3);
  CHECK(b_classes[1].label == "[V]");
  CHECK(b_classes[1].kind == ClassKind::Unitary);
  CHECK(b_classes[1].semidirect == SemidirectRing(SemidirectPair::v()));
  for (const auto& c : b_classes) CHECK(c.valid());

  auto ct_classes = standard_classes(AlgebraTag::CT);
  REQUIRE(ct_classes.size() == 2);
  for (const auto& c : ct_classes) CHECK(c.valid());
}

TEST_CASE("kind checks are exact algebraic identities") {
  CHECK(is_projection(proj_p1()));
  CHECK(is_unitary(DihedralRing(DihedralWord{1, 1})));  // Se
  DihedralRing half_one_plus_s{{DihedralWord::one(), CRat{Rational(1, 2)}},
                               {DihedralWord::s(), CRat{Rational(1, 2)}}};
  CHECK_FALSE(is_projection(half_one_plus_s));  // the S^2 term survives
}

TEST_CASE("pairing table for A reproduces the paper's table") {
  PairingTable t = pairing_table(AlgebraTag::A, 32, 2);
  CHECK(t.all_stabilized());
  CHECK(t.matrix() == std::vector<std::vector<long long>>{
                          {1, 1, 1}, {0, 1, 0}, {0, 0, 1}});
  CHECK(t.cells.size() == 9);
}

TEST_CASE("pairing table for B: one even cell, two odd cells") {
  PairingTable t = pairing_table(AlgebraTag::B, 32, 2);
  REQUIRE(t.cells.size() == 3);
  CHECK(t.cells[0].module == "w0_B");
  CHECK(t.cells[0].label == "[1]");
  CHECK(t.cells[0].result.value == 1);
  CHECK(t.cells[1].module == "w1_B");
  CHECK(t.cells[1].label == "[V]");
  CHECK(t.cells[1].result.value == 1);
  // [U] is 2-torsion: the Chern pairing must annihilate it
  CHECK(t.cells[2].label == "[U]");
  CHECK(t.cells[2].result.value == 0);
}

TEST_CASE("pairing table for C(T)") {
  PairingTable t = pairing_table(AlgebraTag::CT, 32, 2);
  REQUIRE(t.cells.size() == 2);
  CHECK(t.cells[0].result.value == 1);  // <z0, [1]>
  CHECK(t.cells[1].result.value == 1);  // <z1, [U]>
}

TEST_CASE("alpha_{-1} permutes the pairing columns") {
  DihedralRing a_p2 = alpha_minus_one(proj_p2());  // = P1
  DihedralRing a_p1 = alpha_minus_one(proj_p1());  // = (1 + S^-1 e)/2 ~ P2
  CHECK(is_projection(a_p1));
  for (auto name : {ModuleName::w0_A, ModuleName::w1_A, ModuleName::w2_A}) {
    FredholmModule m = catalog(name);
    CHECK(even_pairing(m, a_p2, 2, 32).value ==
          even_pairing(m, proj_p1(), 2, 32).value);
    CHECK(even_pairing(m, a_p1, 2, 32).value ==
          even_pairing(m, proj_p2(), 2, 32).value);
  }
}

TEST_CASE("quotient compatibility on the class of the identity") {
  SemidirectRing one_b = SemidirectRing::one();
  auto over_b = even_pairing(catalog(ModuleName::w0_B), one_b, 2, 32);
  auto over_a =
      even_pairing(catalog(ModuleName::w0_A), quotient_hom(one_b), 2, 32);
  CHECK(over_b.value == over_a.value);
  CHECK(over_b.value == 1);
}
