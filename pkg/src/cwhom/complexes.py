"""Combinatorial finite CW complexes.

A complex is a list of cell counts per dimension together with integer
boundary matrices; column b of the n-th boundary matrix is the boundary
of the n-cell b, expressed in (n-1)-cells.  Attaching data above
dimension 2 enters only through these integer degree matrices; 2-cells
can alternatively be described by edge words, whose exponent sums become
the boundary coefficients (the winding numbers of the attaching loops).

Sign convention for 1-cells: an edge from x to y contributes +1 at x and
-1 at y; a self-loop contributes the zero column.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .intmat import IntMatrix

__all__ = [
    "CwComplex",
    "EdgePresentation",
    "MalformedWord",
    "InvalidComplex",
    "validate",
    "require_valid",
    "from_presentation",
    "euler_characteristic",
    "skeleton",
    "quotient_by_skeleton",
    "suspension",
    "wedge",
    "add_disjoint_basepoint",
    "zoo",
    "ZOO_NAMES",
]


class MalformedWord(ValueError):
    pass


class InvalidComplex(ValueError):
    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


@dataclass(frozen=True)
class CwComplex:
    cells: tuple          # cell counts per dimension, c0 >= 1
    boundaries: tuple     # IntMatrix B_1 .. B_N; B_n is c_{n-1} x c_n
    basepoint: int = 0
    name: str = field(default="", compare=False)

    @property
    def dim(self) -> int:
        return len(self.cells) - 1

    def cells_at(self, n: int) -> int:
        return self.cells[n] if 0 <= n <= self.dim else 0

    def boundary(self, n: int) -> IntMatrix:
        """B_n, with correctly-shaped zero matrices outside 1..dim."""
        if 1 <= n <= self.dim:
            return self.boundaries[n - 1]
        return IntMatrix.zeros(self.cells_at(n - 1), self.cells_at(n))

    def with_name(self, name: str) -> "CwComplex":
        return CwComplex(self.cells, self.boundaries, self.basepoint, name)

    def __str__(self) -> str:
        label = self.name or "complex"
        return f"{label}{list(self.cells)}"


@dataclass(frozen=True)
class EdgePresentation:
    vertices: int
    edges: tuple          # (source, target) pairs, 0-based vertices
    faces: tuple = ()     # attaching words: nonzero signed 1-based edge indices
    basepoint: int = 0


def validate(x: CwComplex) -> list[str]:
    """Violation report; the empty list means the complex is valid."""
    out = []
    if not x.cells:
        return ["no dimensions: cells list is empty"]
    if x.cells[0] < 1:
        out.append("dimension 0: at least one 0-cell required")
    if any(c < 0 for c in x.cells):
        out.append("negative cell count")
    if not (0 <= x.basepoint < max(x.cells[0], 1)):
        out.append(f"basepoint {x.basepoint} out of range for {x.cells[0]} vertices")
    if len(x.boundaries) != x.dim:
        out.append(
            f"expected {x.dim} boundary matrices, found {len(x.boundaries)}"
        )
        return out
    for n in range(1, x.dim + 1):
        b = x.boundaries[n - 1]
        if b.shape != (x.cells[n - 1], x.cells[n]):
            out.append(
                f"dimension {n}: boundary shape {b.shape} != "
                f"({x.cells[n - 1]}, {x.cells[n]})"
            )
    if out:
        return out
    b1 = x.boundary(1)
    for j in range(b1.cols):
        s = sum(b1.col(j))
        if s != 0:
            out.append(f"dimension 1: column {j} has entry sum {s}, not 0")
    for n in range(2, x.dim + 1):
        if not (x.boundary(n - 1) @ x.boundary(n)).is_zero():
            out.append(f"dimension {n}: chain condition B_{n-1} @ B_{n} != 0")
    return out


def require_valid(x: CwComplex) -> CwComplex:
    violations = validate(x)
    if violations:
        raise InvalidComplex(violations)
    return x


def from_presentation(p: EdgePresentation) -> CwComplex:
    """Build a complex of dimension <= 2 from vertices, edges and words.

    Each word must be a closed composable edge loop; the 2-cell boundary
    coefficient for an edge is the word's exponent sum on that edge.
    """
    nv = len(p.edges) and max(max(e) for e in p.edges) + 1
    if p.vertices < 1:
        raise MalformedWord("at least one vertex required")
    if nv > p.vertices:
        raise MalformedWord("edge endpoint out of range")
    if not (0 <= p.basepoint < p.vertices):
        raise MalformedWord("basepoint out of range")
    ne = len(p.edges)

    b1_cols = []
    for (s, t) in p.edges:
        col = [0] * p.vertices
        if s != t:
            col[s] += 1
            col[t] -= 1
        b1_cols.append(col)
    b1 = IntMatrix.from_columns(b1_cols, rows=p.vertices)

    b2_cols = []
    for w, word in enumerate(p.faces):
        if not word:
            raise MalformedWord(f"face {w}: empty word")
        col = [0] * ne
        at = None
        start = None
        for letter in word:
            if letter == 0 or abs(letter) > ne:
                raise MalformedWord(f"face {w}: edge index {letter} out of range")
            e = abs(letter) - 1
            s, t = p.edges[e]
            if letter < 0:
                s, t = t, s
            if at is None:
                start = s
            elif at != s:
                raise MalformedWord(f"face {w}: edges do not compose")
            at = t
            col[e] += 1 if letter > 0 else -1
        if at != start:
            raise MalformedWord(f"face {w}: loop does not close")
        b2_cols.append(col)

    if p.faces:
        cells = (p.vertices, ne, len(p.faces))
        bnds = (b1, IntMatrix.from_columns(b2_cols, rows=ne))
    elif p.edges:
        cells = (p.vertices, ne)
        bnds = (b1,)
    else:
        cells = (p.vertices,)
        bnds = ()
    return require_valid(CwComplex(cells, bnds, p.basepoint))


def euler_characteristic(x: CwComplex) -> int:
    return sum((-1) ** n * c for n, c in enumerate(x.cells))


def skeleton(x: CwComplex, n: int) -> CwComplex:
    if not (0 <= n <= x.dim):
        raise ValueError(f"skeleton dimension {n} out of range 0..{x.dim}")
    return CwComplex(
        x.cells[: n + 1], x.boundaries[:n], x.basepoint,
        f"{x.name}_skel{n}" if x.name else "",
    )


def quotient_by_skeleton(x: CwComplex, m: int) -> CwComplex:
    """Collapse the m-skeleton to the basepoint.

    Cells become [1, 0, ..., 0, c_{m+1}, ..., c_N]; the first surviving
    boundary is replaced by the zero matrix into the single base vertex
    and everything above is unchanged.
    """
    if not (0 <= m < x.dim):
        raise ValueError(f"quotient dimension {m} out of range 0..{x.dim - 1}")
    cells = (1,) + (0,) * m + x.cells[m + 1:]
    bnds = []
    for n in range(1, m + 1):
        bnds.append(IntMatrix.zeros(cells[n - 1], cells[n]))
    bnds.append(IntMatrix.zeros(cells[m], cells[m + 1]))
    bnds.extend(x.boundaries[m + 1:])
    name = f"{x.name}/skel{m}" if x.name else ""
    return require_valid(CwComplex(cells, tuple(bnds), 0, name))


def suspension(x: CwComplex) -> CwComplex:
    """Reduced suspension: one new vertex, each non-basepoint 0-cell
    becomes a loop 1-cell, each n-cell becomes an (n+1)-cell."""
    require_valid(x)
    c0 = x.cells[0]
    cells = (1, c0 - 1) + x.cells[1:]
    bnds = [IntMatrix.zeros(1, c0 - 1)]
    if x.dim >= 1:
        bnds.append(x.boundary(1).delete_row(x.basepoint))
        bnds.extend(x.boundaries[1:])
    name = f"susp({x.name})" if x.name else ""
    return require_valid(CwComplex(tuple(cells), tuple(bnds), 0, name))


def add_disjoint_basepoint(x: CwComplex) -> CwComplex:
    """X_+ : the same complex with one extra vertex, which becomes the
    basepoint (appended as the last 0-cell)."""
    require_valid(x)
    c0 = x.cells[0]
    cells = (c0 + 1,) + x.cells[1:]
    bnds = list(x.boundaries)
    if x.dim >= 1:
        rows = x.boundary(1).to_rows() + [[0] * x.cells[1]]
        bnds[0] = IntMatrix.from_rows(rows, cols=x.cells[1])
    name = f"{x.name}+" if x.name else ""
    return require_valid(CwComplex(cells, tuple(bnds), c0, name))


def wedge(xs) -> CwComplex:
    """One-point union: basepoints merged into vertex 0, all other cells
    concatenated in input order, boundaries assembled blockwise with each
    basepoint row folded onto the shared row."""
    xs = list(xs)
    if not xs:
        raise ValueError("wedge of nothing")
    for x in xs:
        require_valid(x)
    dim = max(x.dim for x in xs)
    cells = [1 + sum(x.cells[0] - 1 for x in xs)]
    for n in range(1, dim + 1):
        cells.append(sum(x.cells_at(n) for x in xs))

    # vertex i of input k lands at v_offset[k] + (index among non-basepoint
    # vertices), with every basepoint going to 0
    v_maps = []
    off = 1
    for x in xs:
        vm = {}
        for v in range(x.cells[0]):
            if v == x.basepoint:
                vm[v] = 0
            else:
                vm[v] = off
                off += 1
        v_maps.append(vm)

    bnds = []
    for n in range(1, dim + 1):
        rows_total = cells[n - 1]
        cols_total = cells[n]
        grid = [[0] * cols_total for _ in range(rows_total)]
        coff = 0
        roff = 0
        for k, x in enumerate(xs):
            b = x.boundary(n)
            if n == 1:
                for j in range(b.cols):
                    for v in range(b.rows):
                        grid[v_maps[k][v]][coff + j] += b.entry(v, j)
            else:
                for i in range(b.rows):
                    for j in range(b.cols):
                        grid[roff + i][coff + j] = b.entry(i, j)
            coff += b.cols
            if n > 1:
                roff += b.rows
        bnds.append(IntMatrix.from_rows(grid, cols=cols_total))
    name = "wedge(" + ", ".join(x.name or "?" for x in xs) + ")"
    return require_valid(CwComplex(tuple(cells), tuple(bnds), 0, name))


def _sphere(n: int) -> CwComplex:
    if n == 0:
        return CwComplex((2,), (), 0, "S0")
    cells = (1,) + (0,) * (n - 1) + (1,)
    bnds = tuple(IntMatrix.zeros(cells[k - 1], cells[k]) for k in range(1, n + 1))
    return CwComplex(cells, bnds, 0, f"S{n}")


def _surface_word(g: int):
    word = []
    for i in range(g):
        a, b = 2 * i + 1, 2 * i + 2
        word.extend([a, b, -a, -b])
    return tuple(word)


def _rp(n: int) -> CwComplex:
    cells = (1,) * (n + 1)
    bnds = tuple(IntMatrix.from_rows([[1 + (-1) ** k]]) for k in range(1, n + 1))
    return CwComplex(cells, bnds, 0, f"RP{n}")


def _cp(n: int) -> CwComplex:
    cells = tuple(1 if k % 2 == 0 else 0 for k in range(2 * n + 1))
    bnds = tuple(IntMatrix.zeros(cells[k - 1], cells[k]) for k in range(1, 2 * n + 1))
    return CwComplex(cells, bnds, 0, f"CP{n}")


def _moore(q: int, n: int) -> CwComplex:
    if q < 2 or n < 1:
        raise ValueError("moore requires q >= 2 and n >= 1")
    cells = (1,) + (0,) * (n - 1) + (1, 1)
    bnds = [IntMatrix.zeros(cells[k - 1], cells[k]) for k in range(1, n + 1)]
    bnds.append(IntMatrix.from_rows([[q]]))
    return CwComplex(cells, tuple(bnds), 0, f"M(Z/{q},{n})")


def _lens(p: int) -> CwComplex:
    if p < 2:
        raise ValueError("lens requires p >= 2")
    bnds = (
        IntMatrix.from_rows([[0]]),
        IntMatrix.from_rows([[p]]),
        IntMatrix.from_rows([[0]]),
    )
    return CwComplex((1, 1, 1, 1), bnds, 0, f"L({p})")


ZOO_NAMES = ("point", "sphere", "torus", "klein", "rp", "cp", "moore", "surface", "lens")


def zoo(name: str, *params: int) -> CwComplex:
    """Standard complexes by name; every output passes validate."""
    def arity(k):
        if len(params) != k:
            raise ValueError(f"zoo {name!r} takes {k} parameter(s)")

    if name == "point":
        arity(0)
        return CwComplex((1,), (), 0, "point")
    if name == "sphere":
        arity(1)
        n = params[0]
        if n < 0:
            raise ValueError("sphere dimension must be >= 0")
        return require_valid(_sphere(n))
    if name == "torus":
        arity(0)
        return from_presentation(
            EdgePresentation(1, ((0, 0), (0, 0)), ((1, 2, -1, -2),))
        ).with_name("torus")
    if name == "klein":
        arity(0)
        return from_presentation(
            EdgePresentation(1, ((0, 0), (0, 0)), ((1, 2, 1, -2),))
        ).with_name("klein")
    if name == "surface":
        arity(1)
        g = params[0]
        if g < 1:
            raise ValueError("surface genus must be >= 1")
        edges = tuple((0, 0) for _ in range(2 * g))
        return from_presentation(
            EdgePresentation(1, edges, (_surface_word(g),))
        ).with_name(f"surface{g}")
    if name == "rp":
        arity(1)
        if params[0] < 1:
            raise ValueError("rp dimension must be >= 1")
        return require_valid(_rp(params[0]))
    if name == "cp":
        arity(1)
        if params[0] < 1:
            raise ValueError("cp dimension must be >= 1")
        return require_valid(_cp(params[0]))
    if name == "moore":
        arity(2)
        return require_valid(_moore(params[0], params[1]))
    if name == "lens":
        arity(1)
        return require_valid(_lens(params[0]))
    raise ValueError(f"unknown zoo name {name!r}")
