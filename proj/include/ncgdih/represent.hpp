#ifndef NCGDIH_REPRESENT_HPP
#define NCGDIH_REPRESENT_HPP

#include <string>

#include "ncgdih/group_ring.hpp"
#include "ncgdih/operators.hpp"
#include "ncgdih/window.hpp"

namespace ncgdih {

/// The catalog of generator-image tables.
///
///   pi0_dihedral            phi + 0 corner representation (w0-type modules)
///   pi1_dihedral            S e_n = e_{n+1},  e e_n = e_{-n}
///   pi2_dihedral            S e_n = e_{n+1},  e e_n = e_{-(n+1)}
///   pi1_semidirect_induced  U = I, V e_n = e_{n+1}
///   pi_l2Z2                 V e_{p,q} = e_{p+1,q},  U e_{p,q} = e_{p,q+(-1)^p}
///   phi_scalar              the coefficient-sum homomorphism into C
enum class RepName {
  pi0_dihedral,
  pi1_dihedral,
  pi2_dihedral,
  pi1_semidirect_induced,
  pi_l2Z2,
  phi_scalar,
};

std::string to_string(RepName r);

/// Length of a word as the paper's length function: L(S^m) = |m|,
/// L(S^m e) = |m| + 1. Bounds how far the representation moves a basis index.
long word_radius(const DihedralWord& w);
long word_radius(const SemidirectPair& g);

template <class G>
long support_radius(const RingElement<G>& a) {
  long r = 0;
  for (const auto& [g, c] : a.terms()) r = std::max(r, word_radius(g));
  return r;
}

/// pi1/pi2 on a single l^2(Z) block. Entries whose target leaves the window
/// are dropped and flagged on the result.
ExactOperator represent_dihedral_block(RepName rep, const DihedralRing& a,
                                       Window w, long margin = 0);

/// pi1' of w1_B: (m,n) acts as the shift by n. Single block.
ExactOperator represent_semidirect_shift(const SemidirectRing& a, Window w,
                                         long margin = 0);

/// The l^2(Z^2) action of C*(G). Float backend; the 0/1 permutation entries
/// are still exact in binary64.
FloatOperator represent_l2z2(const SemidirectRing& a, Window w,
                             long margin = 0);

/// phi + 0: phi(a) in the (0,0) corner of block (0,0) of H + H, zero block
/// (1,1). The C^2 modules of the catalog live on the essential corner.
template <class G>
ExactOperator represent_phi_corner(const RingElement<G>& a, Window w) {
  ExactOperator r(w, 2);
  r.add(w.flat(0L), w.flat(0L), 0, 0, scalar_hom(a));
  return r;
}

/// Diagonal sign(n), with sign(0) = +1. Every downstream kernel and index
/// convention depends on that choice.
ExactOperator sign_operator(Window w);

inline int sign_convention(long n) { return n >= 0 ? 1 : -1; }

/// Diagonal phase (p+iq)/sqrt(p^2+q^2) on the Z^2 window, with 1 at the
/// origin.
FloatOperator phase_operator_f0(Window w);

/// The homotopy family: sign(p) on the q = 0 line (and everywhere at t = 1,
/// where the written formula degenerates at p = 0), otherwise
/// (p + i(1-t)q)/sqrt(p^2 + (1-t)^2 q^2).
FloatOperator homotopy_operator_ft(Window w, const Rational& t);

}  // namespace ncgdih

#endif  // NCGDIH_REPRESENT_HPP
