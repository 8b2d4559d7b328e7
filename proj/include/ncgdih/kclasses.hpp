#ifndef NCGDIH_KCLASSES_HPP
#define NCGDIH_KCLASSES_HPP

#include <string>
#include <vector>

#include "ncgdih/fredholm.hpp"
#include "ncgdih/group_ring.hpp"

namespace ncgdih {

enum class ClassKind { Projection, Unitary };

/// A K-theory class representative the pairing tables run against. Exactly
/// one of the element fields is meaningful, per the algebra tag.
struct KClassRep {
  ClassKind kind;
  std::string label;  // "[1]", "[P1]", "[P2]", "[U]", "[V]"
  AlgebraTag algebra;
  DihedralRing dihedral;      // A and C(T)
  SemidirectRing semidirect;  // B

  /// Exact validity check for the declared kind.
  bool valid() const;
};

/// A  -> projections {[1], [P1], [P2]};
/// B  -> projection {[1]}, unitaries {[V], [U]} ([U] is 2-torsion);
/// CT -> projection {[1]}, unitary {[U]}.
std::vector<KClassRep> standard_classes(AlgebraTag t);

struct PairingTable {
  struct Cell {
    std::string module;
    std::string label;
    Parity parity;
    PairingResult result;
  };

  AlgebraTag algebra;
  int window = 0;
  int n_max = 0;
  std::vector<Cell> cells;

  bool all_stabilized() const {
    for (const auto& c : cells)
      if (!c.result.stabilized) return false;
    return true;
  }

  /// Row-major values; for A this is the 3x3 table over {w0,w1,w2} x
  /// {1, P1, P2}.
  std::vector<std::vector<long long>> matrix() const;
};

/// Assemble the pairing table of the generating Fredholm modules against the
/// standard classes of the algebra.
PairingTable pairing_table(AlgebraTag t, int window_n, int n_max = 2);

}  // namespace ncgdih

#endif  // NCGDIH_KCLASSES_HPP
