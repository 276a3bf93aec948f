"""(Co)homology engines.

Integral homology is the kernel-image quotient of the boundary matrices;
cohomology with coefficients in a finitely generated abelian group G is
computed by dualizing the chain complex per cyclic factor of G (never via
universal coefficients): the Z factors go through integer kernel-image
quotients of the transposed boundaries, the Z/d factors through the mod-d
quotient engine.

The reduced variants use the augmented complex: at dimension 0 the
all-ones augmentation row (for chains) or column (for cochains) is fed to
the quotient engines, which is the one place where reduced and unreduced
bookkeeping differ.

Every group is returned together with a presentation: explicit cocycle
(or cycle) lifts for the canonical generators and a coordinate map back,
which is what induced homomorphisms are written against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .abgroups import AbHom, FgAbGroup, direct_sum
from .complexes import CwComplex, require_valid
from .intmat import (
    GroupWithPresentation,
    IntMatrix,
    mod_d_quotient,
    kernel_basis,
    quotient_group,
)

__all__ = [
    "CoeffPresentation",
    "chain_group",
    "integral_homology",
    "cohomology",
    "all_groups",
    "cells_presentation",
    "induced_hom",
]


def _ones(rows: int, cols: int) -> IntMatrix:
    return IntMatrix(rows, cols, (1,) * (rows * cols))


def coeff_factors(g: FgAbGroup) -> tuple:
    """Cyclic factor moduli of G, free factors (0) first."""
    return (0,) * g.rank + g.torsion


def _factor_presentation(out_map: IntMatrix, in_map: IntMatrix, modulus: int) -> GroupWithPresentation:
    if modulus == 0:
        return quotient_group(out_map.cols, kernel_basis(out_map), in_map)
    return mod_d_quotient(out_map, in_map, modulus)


@dataclass
class CoeffPresentation:
    """A (co)homology group with coefficients in G, with presentations.

    ``factors`` holds one presentation per cyclic factor of G, all living
    in the same ambient chain/cochain space.  ``glue`` canonicalizes the
    concatenated factor generators into the invariant-factor form of the
    whole group; its lifts/coords translate between the two.
    """

    group: FgAbGroup
    coeff: FgAbGroup
    ambient_dim: int
    factors: tuple        # ((modulus, GroupWithPresentation), ...)
    glue: GroupWithPresentation

    @property
    def num_generators(self) -> int:
        return self.group.num_generators


def _glue(factor_groups) -> GroupWithPresentation:
    orders = []
    for g in factor_groups:
        orders.extend(g.generator_orders())
    n = len(orders)
    rel_cols = []
    for i, o in enumerate(orders):
        if o:
            col = [0] * n
            col[i] = o
            rel_cols.append(col)
    rel = IntMatrix.from_columns(rel_cols, rows=n)
    return quotient_group(n, IntMatrix.identity(n), rel)


def _assemble(coeff: FgAbGroup, ambient_dim: int, factor_pres) -> CoeffPresentation:
    glue = _glue([p.group for _, p in factor_pres])
    return CoeffPresentation(glue.group, coeff, ambient_dim, tuple(factor_pres), glue)


def _graded_maps(x: CwComplex, n: int, variant: str, reduced: bool):
    """(outgoing map, incoming map) at dimension n; ambient is c_n."""
    if variant == "homology":
        if n == 0:
            out = _ones(1, x.cells[0]) if reduced else IntMatrix.zeros(0, x.cells[0])
        else:
            out = x.boundary(n)
        inc = x.boundary(n + 1)
    elif variant == "cohomology":
        out = x.boundary(n + 1).transpose()
        if n == 0:
            inc = _ones(x.cells[0], 1) if reduced else IntMatrix.zeros(x.cells[0], 0)
        else:
            inc = x.boundary(n).transpose()
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return out, inc


@lru_cache(maxsize=None)
def chain_group(x: CwComplex, n: int, coeff: FgAbGroup, variant: str, reduced: bool) -> CoeffPresentation:
    """The n-th (co)homology of x with coefficients in ``coeff``.

    Out-of-range dimensions yield the trivial group (the long-exact-
    sequence machinery indexes beyond the complex dimension).
    """
    require_valid(x)
    if n < 0 or n > x.dim:
        return cells_presentation(0, coeff)
    out, inc = _graded_maps(x, n, variant, reduced)
    pres = [(m, _factor_presentation(out, inc, m)) if m else (0, _factor_presentation(out, inc, 0))
            for m in coeff_factors(coeff)]
    return _assemble(coeff, x.cells[n], pres)


@lru_cache(maxsize=None)
def cells_presentation(c: int, coeff: FgAbGroup) -> CoeffPresentation:
    """G^c presented on the standard basis of a rank-c cell space."""
    out = IntMatrix.zeros(0, c)
    inc = IntMatrix.zeros(c, 0)
    pres = [(m, _factor_presentation(out, inc, m)) for m in coeff_factors(coeff)]
    return _assemble(coeff, c, pres)


def integral_homology(x: CwComplex, n: int, reduced: bool = False) -> GroupWithPresentation:
    """H_n(x; Z) as a presented group (single integral factor)."""
    cp = chain_group(x, n, FgAbGroup.free(1), "homology", reduced)
    return cp.factors[0][1]


def cohomology(x: CwComplex, n: int, coeff: FgAbGroup, reduced: bool = False) -> CoeffPresentation:
    return chain_group(x, n, coeff, "cohomology", reduced)


def all_groups(x: CwComplex, coeff: FgAbGroup, variant: str = "homology", reduced: bool = False) -> dict:
    """Table of groups for -1 <= n <= dim + 1."""
    return {
        n: chain_group(x, n, coeff, variant, reduced).group
        for n in range(-1, x.dim + 2)
    }


def induced_hom(src: CoeffPresentation, tgt: CoeffPresentation, chain_matrix: IntMatrix) -> AbHom:
    """The homomorphism src.group -> tgt.group induced by an ambient
    integer matrix acting factor-by-factor on representatives.

    ``chain_matrix`` must send the source's representative lattice into
    the target's in every factor (a NotInLattice escape here means the
    matrix is not a chain-level map for these presentations).
    """
    if src.coeff != tgt.coeff:
        raise ValueError("coefficient groups differ")
    if chain_matrix.shape != (tgt.ambient_dim, src.ambient_dim):
        raise ValueError(
            f"chain matrix shape {chain_matrix.shape} != "
            f"({tgt.ambient_dim}, {src.ambient_dim})"
        )
    # block-diagonal action on concatenated factor generators
    concat_cols = []
    tgt_sizes = [p.group.num_generators for _, p in tgt.factors]
    for fi, (modulus, sp) in enumerate(src.factors):
        tp = tgt.factors[fi][1]
        for lift in sp.lifts:
            img = chain_matrix.apply(lift)
            fc = tp.coords(img)
            col = []
            for fj, size in enumerate(tgt_sizes):
                col.extend(fc if fj == fi else (0,) * size)
            concat_cols.append(col)
    total_tgt = sum(tgt_sizes)
    mconcat = IntMatrix.from_columns(concat_cols, rows=total_tgt)
    # conjugate through the canonicalizations
    cols = []
    for lift in src.glue.lifts:
        cols.append(tgt.glue.coords(mconcat.apply(lift)))
    mat = IntMatrix.from_columns(cols, rows=tgt.group.num_generators)
    return AbHom(src.group, tgt.group, mat)
