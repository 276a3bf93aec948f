"""Mechanical verification of the axioms on concrete complexes.

Each check returns a CheckReport; `run_battery` sweeps a standard corpus
of complexes against a spread of coefficient groups.  All comparisons
are exact: group identities go through presented isomorphisms (invert_iso)
and exactness goes through mutual lattice containment, never cardinality.

The skeletal check rebuilds the cellular cochain complex from axiomatic
ingredients alone: for each k it forms the filtration quotients
Q_k = X_k/X_{k-1} (with a disjoint basepoint glued at the bottom so that
h^0(Q_0) is G to the number of vertices), produces the composite
connecting map h^k(Q_k) -> h^{k+1}(Q_{k+1}) through the mapping cone of
Q_k -> X_{k+1}/X_{k-1}, and then verifies that (a) the subquotients of
the resulting cochain complex agree with reduced cohomology, (b) each
h^k(Q_k) is free of rank c_k over G on cell generators, and (c) written
in cell coordinates the composite maps are the transposed boundary
matrices up to a consistent choice of generator signs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abgroups import (
    AbHom,
    FgAbGroup,
    NotAnIsomorphism,
    compose_hom,
    direct_sum,
    hom_subquotient,
    invert_iso,
    is_exact_pair,
    zero_hom,
)
from .chainmaps import (
    ChainMap,
    MappingCone,
    connecting_map,
    identity_map,
    inclusion_map,
    induced_map,
    mapping_cone,
    require_valid_map,
    shift_iso,
    sphere_self_map,
)
from .complexes import (
    CwComplex,
    add_disjoint_basepoint,
    quotient_by_skeleton,
    require_valid,
    skeleton,
    suspension,
    wedge,
    zoo,
)
from .homology import _glue, cells_presentation, chain_group, cohomology, induced_hom
from .intmat import IntMatrix

__all__ = [
    "CheckReport",
    "IsoTransportFailure",
    "check_dimension",
    "check_suspension",
    "check_wedge",
    "check_les_exactness",
    "check_skeletal_reformulation",
    "equal_up_to_generator_signs",
    "standard_corpus",
    "standard_coefficients",
    "run_battery",
]


class IsoTransportFailure(ValueError):
    """An identification that the axioms promise to be invertible was not."""


@dataclass
class CheckReport:
    check: str
    subject: str
    coeff: FgAbGroup
    dims: range
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def render(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        head = (
            f"{verdict} {self.check} {self.subject} "
            f"G={self.coeff} dims={self.dims.start}..{self.dims.stop - 1}"
        )
        lines = [head]
        lines.extend(f"    {w}" for w in self.witnesses)
        return "\n".join(lines)


def _subject(x: CwComplex) -> str:
    return x.name or str(x)


# ---------------------------------------------------------------------------
# dimension axiom


def check_dimension(coeff: FgAbGroup, span: int = 3) -> CheckReport:
    """h^n(point) is G at n = 0 and trivial elsewhere; reduced, trivial
    everywhere."""
    pt = zoo("point")
    rep = CheckReport("dimension", "point", coeff, range(-span, span + 1))
    for n in rep.dims:
        g = cohomology(pt, n, coeff, reduced=False).group
        want = coeff if n == 0 else FgAbGroup.trivial()
        if g != want:
            rep.witnesses.append(f"h^{n}(point) = {g}, expected {want}")
        gr = cohomology(pt, n, coeff, reduced=True).group
        if not gr.is_trivial:
            rep.witnesses.append(f"reduced h^{n}(point) = {gr}, expected 0")
    return rep


# ---------------------------------------------------------------------------
# suspension axiom


def check_suspension(x: CwComplex, coeff: FgAbGroup, dims: range | None = None) -> CheckReport:
    """shift h^n(X) -> h^{n+1}(susp X) is an isomorphism of presented
    groups in every dimension."""
    require_valid(x)
    rep = CheckReport("suspension", _subject(x), coeff, dims or range(0, x.dim + 2))
    for n in rep.dims:
        s = shift_iso(x, n, coeff)
        try:
            invert_iso(s)
        except NotAnIsomorphism as e:
            rep.witnesses.append(f"dimension {n}: shift is not invertible ({e})")
    return rep


# ---------------------------------------------------------------------------
# additivity on wedges


def _wedge_inclusions(xs) -> list[ChainMap]:
    """The evident pointed inclusions X_k -> wedge(xs), mirroring the
    cell bookkeeping of `wedge`."""
    w = wedge(xs)
    incs = []
    v_off = 1
    c_off = [0] * (w.dim + 1)
    for x in xs:
        maps = []
        cols0 = []
        for v in range(x.cells[0]):
            col = [0] * w.cells[0]
            if v == x.basepoint:
                col[0] = 1
            else:
                col[v_off] = 1
                v_off += 1
            cols0.append(col)
        maps.append(IntMatrix.from_columns(cols0, rows=w.cells[0]))
        for n in range(1, w.dim + 1):
            cols = []
            for j in range(x.cells_at(n)):
                col = [0] * w.cells[n]
                col[c_off[n] + j] = 1
                cols.append(col)
            maps.append(IntMatrix.from_columns(cols, rows=w.cells[n]))
            c_off[n] += x.cells_at(n)
        incs.append(require_valid_map(ChainMap(x, w, tuple(maps)), pointed=True))
    return incs


def _stack_homs(homs) -> AbHom:
    """Combine maps with a common source into one map to the canonical
    direct sum of the targets."""
    glue = _glue([h.target for h in homs])
    src = homs[0].source
    cols = []
    for j in range(src.num_generators):
        vec = []
        for h in homs:
            vec.extend(h.matrix.col(j))
        cols.append(glue.coords(vec))
    mat = IntMatrix.from_columns(cols, rows=glue.group.num_generators)
    return AbHom(src, glue.group, mat)


def check_wedge(xs, coeff: FgAbGroup) -> CheckReport:
    """Restriction along the inclusions identifies reduced h^n of a wedge
    with the direct sum over the factors."""
    xs = list(xs)
    w = wedge(xs)
    incs = _wedge_inclusions(xs)
    rep = CheckReport("wedge", _subject(w), coeff, range(0, w.dim + 2))
    for n in rep.dims:
        restricted = _stack_homs(
            [induced_map(i, n, coeff, "cohomology", reduced=True) for i in incs]
        )
        expected = FgAbGroup.trivial()
        for x in xs:
            expected = direct_sum(expected, cohomology(x, n, coeff, reduced=True).group)
        if restricted.target != expected:
            rep.witnesses.append(
                f"dimension {n}: factor sum is {restricted.target}, expected {expected}"
            )
            continue
        try:
            invert_iso(restricted)
        except NotAnIsomorphism as e:
            rep.witnesses.append(f"dimension {n}: restriction is not invertible ({e})")
    return rep


# ---------------------------------------------------------------------------
# exactness


def check_les_exactness(f: ChainMap, coeff: FgAbGroup, dims: range | None = None) -> CheckReport:
    """Exactness of  h^n(Cf) -> h^n(Y) -> h^n(X) -> h^{n+1}(Cf)  at all
    three kinds of node, over the full dimension range of the cone."""
    require_valid_map(f, pointed=True)
    cone = mapping_cone(f)
    top = cone.cone.dim
    name = f.name or f"{_subject(f.source)}->{_subject(f.target)}"
    rep = CheckReport("les-exactness", name, coeff, dims or range(-1, top + 3))

    def iota_star(n):
        return induced_map(cone.inclusion, n, coeff, "cohomology", reduced=True)

    def f_star(n):
        return induced_map(f, n, coeff, "cohomology", reduced=True)

    def gamma(n):
        return connecting_map(f, n, coeff, cone)

    for n in rep.dims:
        if not is_exact_pair(gamma(n - 1), iota_star(n)):
            rep.witnesses.append(f"not exact at h^{n}(cone)")
        if not is_exact_pair(iota_star(n), f_star(n)):
            rep.witnesses.append(f"not exact at h^{n}(target)")
        if not is_exact_pair(f_star(n), gamma(n)):
            rep.witnesses.append(f"not exact at h^{n}(source)")
    return rep


# ---------------------------------------------------------------------------
# skeletal reformulation


class _SignSolver:
    """Union-find with parity: nodes are generators, an edge asserts that
    two generator signs agree (parity 0) or differ (parity 1)."""

    def __init__(self):
        self.parent = {}
        self.parity = {}

    def _find(self, a):
        if a not in self.parent:
            self.parent[a] = a
            self.parity[a] = 0
            return a, 0
        if self.parent[a] == a:
            return a, self.parity[a]
        root, p = self._find(self.parent[a])
        self.parent[a] = root
        self.parity[a] ^= p
        return root, self.parity[a]

    def relate(self, a, b, rel: int) -> bool:
        """Record sign(a) = sign(b) * (-1)^rel; False on contradiction."""
        ra, pa = self._find(a)
        rb, pb = self._find(b)
        if ra == rb:
            return (pa ^ pb) == rel
        self.parent[ra] = rb
        self.parity[ra] = pa ^ pb ^ rel
        return True


def equal_up_to_generator_signs(pairs) -> str | None:
    """Given ((tag, M, N, row_orders), ...) decide whether a single
    assignment of signs to generators makes every M equal to its N with
    row i scaled by sign(tag+1, i) and column j by sign(tag, j).

    Torsion rows are compared modulo the generator order.  Returns None
    on success, otherwise a human-readable witness.
    """
    solver = _SignSolver()
    for tag, m, n_mat, row_orders in pairs:
        if m.shape != n_mat.shape:
            return f"level {tag}: shape {m.shape} != {n_mat.shape}"
        for i in range(m.rows):
            o = row_orders[i]
            for j in range(m.cols):
                a, b = m.entry(i, j), n_mat.entry(i, j)
                ok = [
                    s for s in (1, -1)
                    if (a - s * b) == 0 or (o and (a - s * b) % o == 0)
                ]
                if not ok:
                    return (
                        f"level {tag}: entry ({i},{j}) is {a}, "
                        f"expected +-{b}" + (f" mod {o}" if o else "")
                    )
                if len(ok) == 1:
                    rel = 0 if ok[0] == 1 else 1
                    if not solver.relate((tag + 1, i), (tag, j), rel):
                        return (
                            f"level {tag}: entry ({i},{j}) forces an "
                            f"inconsistent sign for generator ({tag}, {j})"
                        )
    return None


def _filtration_quotient(x: CwComplex, k: int) -> CwComplex:
    """Q_k = X_k / X_{k-1} for k >= 1; Q_0 = X_0 with a disjoint basepoint."""
    if k == 0:
        return add_disjoint_basepoint(skeleton(x, 0))
    return quotient_by_skeleton(skeleton(x, k), k - 1)


def _double_quotient(x: CwComplex, k: int) -> CwComplex:
    """W_k = X_{k+1} / X_{k-1} (with the same bottom convention as Q_k),
    so that W_k / Q_k is Q_{k+1}."""
    if k == 0:
        return add_disjoint_basepoint(skeleton(x, 1))
    return quotient_by_skeleton(skeleton(x, k + 1), k - 1)


def _collapse_comparison(cone: MappingCone, q_next: CwComplex) -> ChainMap:
    """cone(Q_k -> W_k) -> Q_{k+1}: identity on the top cells of W_k,
    everything else to the basepoint."""
    c = cone.cone
    top = max(c.dim, q_next.dim)
    maps = [IntMatrix(1, c.cells[0], (1,) * c.cells[0])]
    for n in range(1, top + 1):
        rows = []
        for i in range(q_next.cells_at(n)):
            row = [0] * c.cells_at(n)
            row[i] = 1
            rows.append(row)
        maps.append(IntMatrix.from_rows(rows, cols=c.cells_at(n)))
    return require_valid_map(ChainMap(c, q_next, tuple(maps)), pointed=True)


def _cell_basis_iso(q: CwComplex, k: int, coeff: FgAbGroup) -> AbHom:
    """k_k : h^k(Q_k; G) -> G^{c_k} on cell generators."""
    tgt = cells_presentation(q.cells_at(k) if k >= 1 else q.cells[0] - 1, coeff)
    src = chain_group(q, k, coeff, "cohomology", True)
    if k >= 1:
        t = IntMatrix.identity(q.cells_at(k))
    else:
        rows = []
        for v in range(q.cells[0]):
            if v == q.basepoint:
                continue
            row = [0] * q.cells[0]
            row[v] = 1
            row[q.basepoint] -= 1
            rows.append(row)
        t = IntMatrix.from_rows(rows, cols=q.cells[0])
    return induced_hom(src, tgt, t)


def check_skeletal_reformulation(x: CwComplex, coeff: FgAbGroup) -> CheckReport:
    require_valid(x)
    rep = CheckReport("skeletal", _subject(x), coeff, range(0, x.dim + 1))
    dim = x.dim

    quotients = [_filtration_quotient(x, k) for k in range(dim + 1)]

    # (b) h^n(Q_k) is G^{c_k} at n = k and trivial elsewhere; keep the
    # cell-basis isomorphisms for later.
    cell_isos = []
    for k, q in enumerate(quotients):
        for n in range(q.dim + 1):
            if n == k:
                continue
            g = cohomology(q, n, coeff, reduced=True).group
            if not g.is_trivial:
                rep.witnesses.append(f"h^{n}(Q_{k}) = {g}, expected 0")
        try:
            iso = _cell_basis_iso(q, k, coeff)
            inv = invert_iso(iso)
        except NotAnIsomorphism as e:
            raise IsoTransportFailure(f"h^{k}(Q_{k}) is not free on cells: {e}")
        cell_isos.append((iso, inv))

    # the connecting composites h^k(Q_k) -> h^{k+1}(Q_{k+1})
    deltas = []
    for k in range(dim):
        w = _double_quotient(x, k)
        j = inclusion_map(quotients[k], w)
        cone = mapping_cone(j)
        collapse = _collapse_comparison(cone, quotients[k + 1])
        q_star = induced_map(collapse, k + 1, coeff, "cohomology", reduced=True)
        try:
            q_inv = invert_iso(q_star)
        except NotAnIsomorphism as e:
            raise IsoTransportFailure(
                f"collapse comparison at level {k} is not invertible: {e}"
            )
        deltas.append(compose_hom(q_inv, connecting_map(j, k, coeff, cone)))

    top_group = chain_group(quotients[dim], dim, coeff, "cohomology", True).group
    deltas.append(zero_hom(top_group, FgAbGroup.trivial()))

    # the augmentation G -> h^0(Q_0): the cocycle with value g on every
    # original vertex and 0 on the added basepoint
    q0 = quotients[0]
    col = [[1] for _ in range(q0.cells[0])]
    col[q0.basepoint] = [0]
    aug = induced_hom(
        cells_presentation(1, coeff),
        chain_group(q0, 0, coeff, "cohomology", True),
        IntMatrix.from_rows(col, cols=1),
    )

    # (a) subquotients of the rebuilt cochain complex = reduced cohomology
    for n in range(dim + 1):
        lower = aug if n == 0 else deltas[n - 1]
        try:
            got = hom_subquotient(lower, deltas[n])
        except ValueError as e:
            rep.witnesses.append(f"dimension {n}: {e}")
            continue
        want = cohomology(x, n, coeff, reduced=True).group
        if got != want:
            rep.witnesses.append(
                f"dimension {n}: rebuilt group {got}, cellular group {want}"
            )

    # (c) in cell coordinates every composite is the transposed boundary
    # matrix, up to one global sign per generator
    comparisons = []
    for k in range(dim):
        iso_next = cell_isos[k + 1][0]
        inv_here = cell_isos[k][1]
        cellwise = compose_hom(iso_next, compose_hom(deltas[k], inv_here))
        expected = induced_hom(
            cells_presentation(x.cells_at(k), coeff),
            cells_presentation(x.cells_at(k + 1), coeff),
            x.boundary(k + 1).transpose(),
        )
        orders = cellwise.target.generator_orders()
        comparisons.append((k, cellwise.matrix, expected.matrix, orders))
    witness = equal_up_to_generator_signs(comparisons)
    if witness is not None:
        rep.witnesses.append("composite != transposed boundary: " + witness)
    return rep


# ---------------------------------------------------------------------------
# battery


def standard_corpus() -> list[CwComplex]:
    out = [zoo("point")]
    out.extend(zoo("sphere", n) for n in range(5))
    out.extend([zoo("torus"), zoo("klein"), zoo("surface", 2)])
    out.extend(zoo("rp", n) for n in range(1, 5))
    out.extend(zoo("cp", n) for n in (1, 2))
    out.extend(zoo("moore", q, n) for q in (2, 3, 5) for n in (1, 2))
    out.extend(zoo("lens", p) for p in (2, 3))
    return out


def standard_coefficients() -> list[FgAbGroup]:
    return [
        FgAbGroup.free(1),
        FgAbGroup.cyclic(2),
        FgAbGroup.cyclic(3),
        FgAbGroup.cyclic(4),
        FgAbGroup(1, (2,)),
    ]


SUITES = ("dimension", "suspension", "wedge", "les", "reformulation")


def run_battery(complexes=None, coefficients=None, suites=None) -> list[CheckReport]:
    """The default verification sweep; every report should pass."""
    complexes = standard_corpus() if complexes is None else list(complexes)
    coefficients = standard_coefficients() if coefficients is None else list(coefficients)
    if suites is None or "all" in suites:
        suites = set(SUITES)
    else:
        suites = set(suites)
    reports = []
    if "dimension" in suites:
        for g in coefficients:
            reports.append(check_dimension(g))
    for x in complexes:
        for g in coefficients:
            if "suspension" in suites:
                reports.append(check_suspension(x, g))
            if "reformulation" in suites:
                reports.append(check_skeletal_reformulation(x, g))
    if "wedge" in suites:
        pairs = [
            (zoo("sphere", 1), zoo("sphere", 2)),
            (zoo("torus"), zoo("rp", 2)),
            (zoo("moore", 2, 1), zoo("sphere", 1)),
        ]
        for a, b in pairs:
            for g in coefficients:
                reports.append(check_wedge([a, b], g))
    if "les" in suites:
        maps = [sphere_self_map(1, d) for d in (0, 1, 2, 6)]
        maps.append(sphere_self_map(2, 3))
        maps.append(identity_map(zoo("torus")))
        t = zoo("torus")
        maps.append(inclusion_map(skeleton(t, 1), t))
        r = zoo("rp", 3)
        maps.append(inclusion_map(skeleton(r, 2), r))
        for f in maps:
            for g in coefficients:
                reports.append(check_les_exactness(f, g))
    return reports
