"""Exact noncommutative-geometry computations over C*(Z⋊Z₂) and C*(Z⋊Z).

Group-ring arithmetic, the generating Fredholm modules with their
Chern-character pairings, and the cyclic cohomology calculus on the
dihedral group ring. All exact-backend values are computed in rational
arithmetic; rationals cross the boundary as "p/q" strings.
"""

from ._core import (
    Cochain0,
    DihedralRing,
    DihedralWord,
    NotAProjectionError,
    NotAUnitaryError,
    SemidirectPair,
    SemidirectRing,
    SymmetryViolationError,
    TagMismatchError,
    WindowTooSmallError,
    alpha_minus_one,
    catalog_names,
    conjugacy_class,
    dihedral_ring_from_json,
    duality_matrix,
    even_pairing,
    homotopy_check,
    is_projection,
    is_unitary,
    odd_pairing,
    pair_s_with_projection,
    pair_with_projection,
    pairing_table,
    proj_one,
    proj_p1,
    proj_p2,
    proj_p2_alt,
    psi0,
    psi1,
    psi2,
    psi_k,
    quotient_hom,
    semidirect_ring_from_json,
    verify_module,
    verify_solve1,
    verify_solve2,
)

__all__ = [
    "Cochain0",
    "DihedralRing",
    "DihedralWord",
    "NotAProjectionError",
    "NotAUnitaryError",
    "SemidirectPair",
    "SemidirectRing",
    "SymmetryViolationError",
    "TagMismatchError",
    "WindowTooSmallError",
    "alpha_minus_one",
    "catalog_names",
    "conjugacy_class",
    "dihedral_ring_from_json",
    "duality_matrix",
    "even_pairing",
    "homotopy_check",
    "is_projection",
    "is_unitary",
    "odd_pairing",
    "pair_s_with_projection",
    "pair_with_projection",
    "pairing_table",
    "proj_one",
    "proj_p1",
    "proj_p2",
    "proj_p2_alt",
    "psi0",
    "psi1",
    "psi2",
    "psi_k",
    "quotient_hom",
    "semidirect_ring_from_json",
    "verify_module",
    "verify_solve1",
    "verify_solve2",
]
