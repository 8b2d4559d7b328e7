#ifndef NCGDIH_CYCLIC_HPP
#define NCGDIH_CYCLIC_HPP

#include <array>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncgdih/group_ring.hpp"
#include "ncgdih/scalars.hpp"

namespace ncgdih {

struct SymmetryViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Word = DihedralWord;

/// Cyclic 0-cocycle (trace) on C Gamma: determined by a_n = psi(S^n) with
/// a_{-n} = a_n, b0 = psi(S^{2n}e), b1 = psi(S^{2n+1}e).
class Cochain0 {
 public:
  Cochain0() = default;

  /// Throws SymmetryViolation unless a_{-n} = a_n.
  static Cochain0 from_data(std::map<long, CRat> a, CRat b0, CRat b1);

  const std::map<long, CRat>& a() const { return a_; }
  const CRat& b0() const { return b0_; }
  const CRat& b1() const { return b1_; }

  CRat operator()(const Word& w) const;
  CRat operator()(const DihedralRing& x) const;

 private:
  std::map<long, CRat> a_;
  CRat b0_;
  CRat b1_;
};

// The distinguished cocycles dual to {[1], [P1], [P2]}: psi_i(P_j) = delta_ij.
Cochain0 psi0();  // a0 = 1, b0 = b1 = -1
Cochain0 psi1();  // b0 = 2
Cochain0 psi2();  // b1 = 2

/// psi_k for k != 0: psi(S^m) = delta_{k,m} + delta_{-k,m}, zero on flips.
Cochain0 psi_k(long k);

/// Arbitrary linear functional on C Gamma given by value tables (no cocycle
/// condition assumed). Missing entries evaluate to zero.
struct WordFunctional {
  std::map<long, CRat> on_power;  // psi(S^m)
  std::map<long, CRat> on_flip;   // psi(S^m e)

  CRat operator()(const Word& w) const;
  CRat operator()(const DihedralRing& x) const;
};

/// General cyclic 1-cocycle in the classified form: phi(S^m, S^n) = 0,
/// phi(S^m, S^n e) = c_{n-m+1} + c_{n-m+3} + ... + c_{n+m-1},
/// phi(S^m e, S^n e) = d_{n-m}, with d odd.
class CocycleForm1 {
 public:
  /// Throws SymmetryViolation unless d_{-n} = -d_n.
  static CocycleForm1 from_data(std::map<long, CRat> c,
                                std::map<long, CRat> d);

  const std::map<long, CRat>& c() const { return c_; }
  const std::map<long, CRat>& d() const { return d_; }

  CRat operator()(const Word& x, const Word& y) const;

 private:
  std::map<long, CRat> c_;
  std::map<long, CRat> d_;

  CRat c_range_sum(long lo, long hi) const;  // step 2, inclusive
};

/// Explicit 1-cochain given by a value table on word pairs (used for
/// negative controls; no structure assumed).
struct ExplicitCochain1 {
  std::map<std::pair<Word, Word>, CRat> table;

  CRat operator()(const Word& x, const Word& y) const {
    auto it = table.find({x, y});
    return it == table.end() ? CRat() : it->second;
  }
};

/// The linear functional psi with b psi = phi produced by the constructive
/// 1-coboundary proof. Values come from the closed-form prefix sums, so the
/// guarantee holds on all of Gamma, not just a window.
class CoboundaryPotential {
 public:
  CoboundaryPotential(std::map<long, CRat> c, std::map<long, CRat> d)
      : c_(std::move(c)), d_(std::move(d)) {}

  CRat value_power(long m) const;  // psi(S^m) = -d_m for m > 0, else 0
  CRat value_flip(long m) const;   // psi(S^m e): alternating prefix sums of c

  CRat operator()(const Word& w) const {
    return w.flip ? value_flip(w.power) : value_power(w.power);
  }
  CRat operator()(const DihedralRing& x) const;

 private:
  std::map<long, CRat> c_;
  std::map<long, CRat> d_;
};

CoboundaryPotential solve_1_coboundary(const CocycleForm1& phi);

/// The 1-cochain phi with b phi = S psi_k, from the explicit alpha/gamma
/// solution; beta vanishes. ck is the free scalar of the gamma branch.
class SPotential1 {
 public:
  SPotential1(long k, CRat ck);

  long k() const { return k_; }
  CRat alpha(long m, long n) const;  // (m-n)/(m+n) on m+n = +-k
  CRat gamma(long m, long n) const;  // 2n/k - ck on m-n = k, odd in (m,n)

  CRat operator()(const Word& x, const Word& y) const;

 private:
  long k_;
  CRat ck_;
};

/// Throws std::domain_error for k = 0: S psi_0 is cohomologically nontrivial
/// and no solution exists.
SPotential1 solve_2_coboundary(long k, const CRat& ck);

/// The periodicity operator on traces: (S psi)(x, y, z) = psi(xyz).
struct SCochain2 {
  Cochain0 psi;
  CRat operator()(const Word& x, const Word& y, const Word& z) const {
    return psi(x * y * z);
  }
};

inline SCochain2 periodicity_s(const Cochain0& psi) { return {psi}; }

// Type-erased cochain evaluators for the generic boundary/cyclicity
// machinery.
using Fn0 = std::function<CRat(const Word&)>;
using Fn1 = std::function<CRat(const Word&, const Word&)>;
using Fn2 = std::function<CRat(const Word&, const Word&, const Word&)>;

/// (b psi)(x, y) = psi(xy) - psi(yx).
template <class Psi>
Fn1 boundary_b0(Psi psi) {
  return [psi](const Word& x, const Word& y) {
    return psi(x * y) - psi(y * x);
  };
}

/// (b phi)(x, y, z) = phi(xy, z) - phi(x, yz) + phi(zx, y).
template <class Phi>
Fn2 boundary_b1(Phi phi) {
  return [phi](const Word& x, const Word& y, const Word& z) {
    return phi(x * y, z) - phi(x, y * z) + phi(z * x, y);
  };
}

/// All words S^m e^eps with |m| <= bound.
std::vector<Word> words_within(long bound);

bool is_cyclic0(const Fn0& psi, long bound);  // psi(xy) = psi(yx)
bool is_cyclic1(const Fn1& phi, long bound);  // phi(x,y) = -phi(y,x)
bool is_cyclic2(const Fn2& phi, long bound);  // phi(x,y,z) = phi(z,x,y)

/// Multilinear extension to ring elements.
template <class F>
CRat eval_bilinear(const F& f, const DihedralRing& x, const DihedralRing& y) {
  CRat s;
  for (const auto& [g, cg] : x.terms())
    for (const auto& [h, ch] : y.terms()) s += cg * ch * f(g, h);
  return s;
}

template <class F>
CRat eval_trilinear(const F& f, const DihedralRing& x, const DihedralRing& y,
                    const DihedralRing& z) {
  CRat s;
  for (const auto& [g, cg] : x.terms())
    for (const auto& [h, ch] : y.terms())
      for (const auto& [k, ck] : z.terms()) s += cg * ch * ck * f(g, h, k);
  return s;
}

/// <psi, [p]> = psi(p) for a 0-cocycle; throws NotIdempotent via
/// std::domain_error when p^2 != p.
CRat pair_with_projection(const Cochain0& psi, const DihedralRing& p);

/// Degree-2 pairing (n = 1): (1!)^{-1} c(p, p, p).
CRat pair_with_projection(const SCochain2& c, const DihedralRing& p);

/// The 3x3 matrix [pair(psi_i, P_j)] over {1, P1, P2}.
std::array<std::array<CRat, 3>, 3> duality_matrix();

struct CheckReport {
  std::string identity;
  long bound = 0;
  unsigned long long tuples_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// b phi = 0 and antisymmetry for a cocycle-form 1-cochain, exhaustively on
/// the bounded window.
CheckReport verify_cocycle1(const CocycleForm1& phi, long bound);

/// b(solve_1_coboundary(phi)) = phi on all word pairs within the bound.
CheckReport verify_solve1(const CocycleForm1& phi, long bound);

/// b(solve_2_coboundary(k, ck)) = S psi_k on all word triples within the
/// bound.
CheckReport verify_solve2(long k, const CRat& ck, long bound);

/// b(b psi) = 0 for a raw functional psi, exhaustively on triples.
CheckReport verify_bb_zero(const WordFunctional& psi, long bound);

/// Trace property psi(xy) = psi(yx) for a Cochain0, exhaustively on pairs.
CheckReport verify_trace(const Cochain0& psi, long bound);

// Seeded random data for the verification suites (shared by tests and CLI).
CRat random_small_scalar(std::mt19937_64& rng);
Cochain0 random_cochain0(std::mt19937_64& rng, long support);
WordFunctional random_functional(std::mt19937_64& rng, long support);
CocycleForm1 random_cocycle1(std::mt19937_64& rng, long support);

}  // namespace ncgdih

#endif  // NCGDIH_CYCLIC_HPP
