#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ncgdih/fredholm.hpp"
#include "ncgdih/operators.hpp"
#include "ncgdih/represent.hpp"

using namespace ncgdih;

namespace {

const DihedralRing S{DihedralWord::s()};
const DihedralRing E{DihedralWord::e()};

ExactOperator pi1(const DihedralRing& a, Window w) {
  return represent_dihedral_block(RepName::pi1_dihedral, a, w);
}

}  // namespace

TEST_CASE("generator actions on basis vectors") {
  Window w = Window::interval(8);
  ExactOperator e1 = pi1(E, w);
  CHECK(e1.at(w.flat(-3L), w.flat(3L)) == CRat(1));  // e e_3 = e_{-3}

  ExactOperator e2 = represent_dihedral_block(RepName::pi2_dihedral, E, w);
  CHECK(e2.at(w.flat(-4L), w.flat(3L)) == CRat(1));  // e e_3 = e_{-(3+1)}

  CHECK(pi1(DihedralRing::one(), w) == ExactOperator::identity(w, 1));
}

TEST_CASE("representation respects products inside the window interior") {
  Window w = Window::interval(24);
  std::vector<DihedralRing> gens = {S, E, DihedralRing(DihedralWord{2, 1})};
  for (const auto& a : gens)
    for (const auto& b : gens) {
      ExactOperator lhs = pi1(a * b, w);
      ExactOperator rhs = pi1(a, w) * pi1(b, w);
      // interior columns agree (boundary columns may differ by truncation)
      for (long j = -16; j <= 16; ++j)
        for (long i = -24; i <= 24; ++i)
          CHECK(lhs.at(w.flat(i), w.flat(j)) == rhs.at(w.flat(i), w.flat(j)));
    }
}

TEST_CASE("sign operator") {
  Window w = Window::interval(8);
  ExactOperator f = sign_operator(w);
  CHECK(f.at(w.flat(0L), w.flat(0L)) == CRat(1));
  CHECK(f.at(w.flat(-1L), w.flat(-1L)) == CRat(-1));
  CHECK(f * f == ExactOperator::identity(w, 1));
  CHECK(f == f.adjoint());
}

TEST_CASE("phase operator F0") {
  Window w = Window::box(4);
  FloatOperator f0 = phase_operator_f0(w);
  CHECK(f0.at(w.flat(0, 0), w.flat(0, 0)) == CFloat(1.0));
  CHECK(f0.at(w.flat(1, 0), w.flat(1, 0)) == CFloat(1.0));
  CHECK(std::abs(f0.at(w.flat(0, 1), w.flat(0, 1)) - CFloat(0.0, 1.0)) <
        1e-15);
}

TEST_CASE("homotopy operator F_t") {
  Window w = Window::box(8);
  CHECK(max_abs_diff(homotopy_operator_ft(w, Rational(0)),
                     phase_operator_f0(w)) == 0.0);

  FloatOperator f1 = homotopy_operator_ft(w, Rational(1));
  CHECK(f1.at(w.flat(3, 5), w.flat(3, 5)) == CFloat(1.0));
  for (const Rational& t : {Rational(0), Rational(1, 3), Rational(1)}) {
    FloatOperator ft = homotopy_operator_ft(w, t);
    CHECK(ft.at(w.flat(-2, 0), w.flat(-2, 0)) == CFloat(-1.0));
  }

  FloatOperator fh = homotopy_operator_ft(w, Rational(1, 2));
  CFloat expect = CFloat(3.0, 2.0) / std::sqrt(13.0);
  CHECK(std::abs(fh.at(w.flat(3, 4), w.flat(3, 4)) - expect) < 1e-15);
}

TEST_CASE("commutators and anticommutators with the sign operator") {
  Window w = Window::interval(8);
  ExactOperator f = sign_operator(w);

  // {F, pi(e)} = 2 P_{0,0}
  ExactOperator ac = anticommutator(f, pi1(E, w));
  ExactOperator two_p00(w, 1);
  two_p00.add(w.flat(0L), w.flat(0L), 0, 0, CRat(2));
  CHECK(ac.entries == two_p00.entries);

  // [F, pi(S)] = 2 P_{0,-1}
  ExactOperator c = commutator(f, pi1(S, w));
  ExactOperator two_p0m1(w, 1);
  two_p0m1.add(w.flat(0L), w.flat(-1L), 0, 0, CRat(2));
  CHECK(c.entries == two_p0m1.entries);
  CHECK(rank(c) == 1);

  CHECK(commutator(f, pi1(DihedralRing::one(), w)).is_zero());
}

TEST_CASE("block commutator ranks for the graded dihedral module") {
  for (int n : {4, 8, 16}) {
    Window w = Window::interval(n);
    FredholmModule w1 = catalog(ModuleName::w1_A);
    ExactOperator f1 = module_f_exact(w1, w);
    CHECK(rank(commutator(f1, module_rep(w1, S, w))) == 2);
    CHECK(rank(commutator(f1, module_rep(w1, E, w))) == 2);
    // FeS + eSF = 0: the (1+eS)/2 representative has vanishing commutator
    CHECK(rank(commutator(f1, module_rep(w1, proj_p2_alt(), w))) == 0);
    // while the table representative (1+Se)/2 does not
    CHECK(rank(commutator(f1, module_rep(w1, proj_p2(), w))) == 2);
  }
}

TEST_CASE("trace of the w1/P1 pairing integrand at k = 1") {
  Window w = Window::interval(8);
  FredholmModule w1 = catalog(ModuleName::w1_A);
  ExactOperator rep = module_rep(w1, proj_p1(), w);
  ExactOperator f1 = module_f_exact(w1, w);
  ExactOperator g = module_gamma_exact(w1, w);
  ExactOperator c = commutator(f1, rep);
  CHECK((g * rep * c * c).trace() == CRat(-1));
}

TEST_CASE("rank and trace basics") {
  Window w = Window::interval(6);
  ExactOperator a(w, 1);
  a.add(w.flat(0L), w.flat(-1L), 0, 0, CRat(2));
  CHECK(rank(a) == 1);
  CHECK(a.trace() == CRat(0));
  a.add(w.flat(2L), w.flat(2L), 0, 0, CRat{Rational(1, 3)});
  CHECK(rank(a) == 2);
  CHECK(a.trace() == CRat{Rational(1, 3)});
}

TEST_CASE("interior unitarity of the catalog representations") {
  Window w = Window::interval(10);
  FredholmModule mods[] = {catalog(ModuleName::w1_A),
                           catalog(ModuleName::w2_A)};
  for (const auto& m : mods) {
    for (const auto& g : dihedral_generators(AlgebraTag::A)) {
      ExactOperator img = module_rep(m, g, w);
      ExactOperator p = img.adjoint() * img;
      for (int b = 0; b < img.blocks; ++b)
        for (long j = -w.n; j <= w.n; ++j) {
          // column j of pi(g) nonempty <=> e_j not mapped out of the window
          bool inside = false;
          for (long i = -w.n; i <= w.n && !inside; ++i)
            inside = !img.at(w.flat(i), w.flat(j), b, b).is_zero();
          if (!inside) continue;
          for (long i = -w.n; i <= w.n; ++i)
            CHECK(p.at(w.flat(i), w.flat(j), b, b) ==
                  CRat(i == j ? 1 : 0));
        }
    }
  }

  // semidirect shift representation
  FredholmModule w1b = catalog(ModuleName::w1_B);
  for (const auto& g : semidirect_generators()) {
    ExactOperator img = module_rep(w1b, g, w);
    ExactOperator p = img.adjoint() * img;
    for (long j = -w.n; j <= w.n; ++j) {
      bool inside = false;
      for (long i = -w.n; i <= w.n && !inside; ++i)
        inside = !img.at(w.flat(i), w.flat(j)).is_zero();
      if (!inside) continue;
      for (long i = -w.n; i <= w.n; ++i)
        CHECK(p.at(w.flat(i), w.flat(j)) == CRat(i == j ? 1 : 0));
    }
  }

  // pi0: the essential corner
  FredholmModule w0 = catalog(ModuleName::w0_A);
  for (const auto& g : dihedral_generators(AlgebraTag::A)) {
    ExactOperator img = module_rep(w0, g, w);
    ExactOperator p = img.adjoint() * img;
    CHECK(p.at(w.flat(0L), w.flat(0L), 0, 0) == CRat(1));
  }
}

TEST_CASE("F^2 = 1 and grading relations for every catalog module") {
  for (const auto& m : full_catalog()) {
    int n = 8;
    Window w = module_window(m, n);
    if (m.backend == Backend::Exact) {
      ExactOperator f = module_f_exact(m, w);
      CHECK(f == f.adjoint());
      CHECK(f * f == ExactOperator::identity(w, m.blocks));
      if (m.parity == Parity::Even) {
        ExactOperator g = module_gamma_exact(m, w);
        CHECK(g == g.adjoint());
        CHECK(g * g == ExactOperator::identity(w, m.blocks));
        CHECK(anticommutator(g, f).is_zero());
      }
    } else {
      FloatOperator f = module_f_float(m, w);
      CHECK(max_abs_diff(f, f.adjoint()) <= 1e-12);
      CHECK(max_abs_diff(f * f, FloatOperator::identity(w, m.blocks)) <=
            1e-12);
      FloatOperator g = module_gamma_float(m, w);
      CHECK(max_abs(anticommutator(g, f)) <= 1e-12);
      for (const auto& gen : semidirect_generators())
        CHECK(max_abs(commutator(g, module_rep_float(m, gen, w))) == 0.0);
    }
  }
}

TEST_CASE("shell norms of [F~0, pi(V)] decay like 1/R") {
  FredholmModule m = catalog(ModuleName::d1z1_B);
  Window w = Window::box(66);
  FloatOperator f = module_f_float(m, w);
  FloatOperator comm =
      commutator(f, module_rep_float(m, SemidirectRing(SemidirectPair::v()), w));
  double prev = 1e9;
  for (int r : {8, 16, 32}) {
    double norm = shell_max_norm(comm, r);
    CHECK(norm < prev);
    CHECK(norm <= 4.0 / r);
    prev = norm;
  }
}

TEST_CASE("window truncation is recorded") {
  Window w = Window::interval(8);
  CHECK(pi1(DihedralRing::one(), w).interior_exact());
  CHECK_FALSE(pi1(S, w).interior_exact());  // S e_8 leaves the window
  CHECK_FALSE(commutator(sign_operator(w), pi1(S, w)).interior_exact());
  CHECK(sign_operator(w).interior_exact());

  CHECK_THROWS_AS(represent_dihedral_block(RepName::pi1_dihedral,
                                           DihedralRing(DihedralWord::s(5)),
                                           Window::interval(8), 4),
                  WindowTooSmall);
}

TEST_CASE("operator dump is the sorted coordinate list") {
  Window w = Window::interval(2);
  ExactOperator a(w, 2);
  a.add(1, 0, 0, 1, CRat{Rational(1, 2), Rational(-3, 4)});
  a.add(0, 2, 1, 0, CRat(1));
  CHECK(a.dump() == "0 2 1 0 1/1 0/1\n1 0 0 1 1/2 -3/4\n");
}
