import random

import pytest
from hypothesis import given, settings, strategies as st

from cwhom.intmat import (
    ContainmentViolation,
    IntMatrix,
    NotInLattice,
    in_lattice,
    kernel_basis,
    lattice_basis,
    lattice_coordinates,
    mod_d_quotient,
    preimage_lattice,
    quotient_group,
    snf,
    solve_columns,
)


def bareiss_det(m):
    """Fraction-free determinant, used as an independent oracle."""
    n = m.rows
    assert m.cols == n
    a = [list(r) for r in m.to_rows()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def random_matrix(rng, max_side=8, lo=-9, hi=9):
    r = rng.randint(1, max_side)
    c = rng.randint(1, max_side)
    return IntMatrix(r, c, tuple(rng.randint(lo, hi) for _ in range(r * c)))


class TestIntMatrix:
    def test_shape_guard(self):
        with pytest.raises(ValueError):
            IntMatrix(2, 2, (1, 2, 3))

    def test_matmul_identity(self):
        m = IntMatrix.from_rows([[1, 2], [3, 4], [5, 6]])
        assert IntMatrix.identity(3) @ m == m
        assert m @ IntMatrix.identity(2) == m

    def test_transpose_involution(self):
        m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert m.transpose().transpose() == m
        assert m.transpose().shape == (3, 2)

    def test_empty_shapes(self):
        z = IntMatrix.zeros(0, 3)
        assert (z @ IntMatrix.zeros(3, 2)).shape == (0, 2)
        assert z.transpose().shape == (3, 0)

    def test_delete_row_col(self):
        m = IntMatrix.from_rows([[1, 2], [3, 4]])
        assert m.delete_row(0) == IntMatrix.from_rows([[3, 4]])
        assert m.delete_col(1) == IntMatrix.from_rows([[1], [3]])


class TestSnf:
    def test_known_form(self):
        # [TRIVIAL] 2x2 example computable by hand
        # d1 = gcd of entries = 2, d1*d2 = |det| = 8
        a = IntMatrix.from_rows([[2, 4], [6, 8]])
        res = snf(a)
        assert res.diagonal() == (2, 4)
        assert res.U @ res.S @ res.V == a

    def test_diagonal_matrix_renormalized(self):
        a = IntMatrix.diagonal([4, 6])
        assert snf(a).diagonal() == (2, 12)

    def test_zero_matrix(self):
        res = snf(IntMatrix.zeros(3, 2))
        assert res.diagonal() == (0, 0)
        assert res.rank == 0

    def test_soundness_random(self):
        rng = random.Random(5)
        for _ in range(300):
            a = random_matrix(rng)
            res = snf(a)
            assert res.U @ res.S @ res.V == a
            d = res.diagonal()
            assert all(x >= 0 for x in d)
            for i in range(len(d) - 1):
                if d[i + 1]:
                    assert d[i] != 0 and d[i + 1] % d[i] == 0
                # a zero is never followed by a nonzero
                if d[i] == 0:
                    assert d[i + 1] == 0
            assert abs(bareiss_det(res.U)) == 1
            assert abs(bareiss_det(res.V)) == 1

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 5), st.integers(1, 5), st.data())
    def test_soundness_property(self, r, c, data):
        entries = data.draw(
            st.lists(st.integers(-50, 50), min_size=r * c, max_size=r * c)
        )
        a = IntMatrix(r, c, tuple(entries))
        res = snf(a)
        assert res.U @ res.S @ res.V == a
        assert abs(bareiss_det(res.U)) == 1
        assert abs(bareiss_det(res.V)) == 1
        for i in range(min(r, c)):
            assert res.S.entry(i, i) >= 0
        # off-diagonal is zero
        for i in range(r):
            for j in range(c):
                if i != j:
                    assert res.S.entry(i, j) == 0


class TestLattices:
    def test_kernel_basis_annihilates(self):
        rng = random.Random(17)
        for _ in range(100):
            a = random_matrix(rng, max_side=6)
            k = kernel_basis(a)
            assert (a @ k).is_zero()
            # kernel basis columns are independent: their lattice has full rank
            assert lattice_basis(k).cols == k.cols

    def test_kernel_rank(self):
        a = IntMatrix.from_rows([[1, 2, 3]])
        assert kernel_basis(a).cols == 2

    def test_lattice_membership(self):
        basis = IntMatrix.from_columns([[2, 0], [0, 3]], rows=2)
        assert in_lattice(basis, (4, -3))
        assert not in_lattice(basis, (1, 0))
        assert lattice_coordinates(basis, (4, 3)) == (2, 1)
        with pytest.raises(NotInLattice):
            lattice_coordinates(basis, (1, 1))

    def test_lattice_basis_spans_same(self):
        rng = random.Random(23)
        for _ in range(60):
            a = random_matrix(rng, max_side=5)
            b = lattice_basis(a)
            for j in range(a.cols):
                assert in_lattice(b, a.col(j))
            for j in range(b.cols):
                assert in_lattice(lattice_basis(a), b.col(j))

    def test_solve_columns(self):
        a = IntMatrix.from_rows([[2, 0], [0, 2]])
        assert solve_columns(a, IntMatrix.column([4, 6])) is not None
        assert solve_columns(a, IntMatrix.column([1, 0])) is None
        x = solve_columns(a, IntMatrix.from_columns([[2, 2], [-4, 0]], rows=2))
        assert a @ x == IntMatrix.from_columns([[2, 2], [-4, 0]], rows=2)

    def test_preimage_lattice(self):
        # preimage of 3Z under multiplication by 2 on Z is 3Z
        m = IntMatrix.from_rows([[2]])
        rel = IntMatrix.from_rows([[3]])
        p = preimage_lattice(m, rel)
        b = lattice_basis(p)
        assert in_lattice(b, (3,))
        assert not in_lattice(b, (1,))

    def test_preimage_is_sound_random(self):
        rng = random.Random(31)
        for _ in range(60):
            m = random_matrix(rng, max_side=4)
            rel = random_matrix(rng, max_side=4)
            rel = IntMatrix(m.rows, rel.cols, tuple(
                rng.randint(-4, 4) for _ in range(m.rows * rel.cols)))
            p = preimage_lattice(m, rel)
            rb = lattice_basis(IntMatrix.hstack(rel, IntMatrix.zeros(m.rows, 0)))
            for j in range(p.cols):
                img = m.apply(p.col(j))
                if rel.cols:
                    assert in_lattice(rb, img) or all(v == 0 for v in img)
                else:
                    assert all(v == 0 for v in img)


class TestQuotients:
    def test_z_mod_2(self):
        q = quotient_group(1, IntMatrix.identity(1), IntMatrix.from_rows([[2]]))
        assert str(q.group) == "Z/2"
        assert q.coords((1,)) in ((1,),)
        assert q.coords((2,)) == (0,)

    def test_free_quotient(self):
        q = quotient_group(2, IntMatrix.identity(2), IntMatrix.zeros(2, 0))
        assert q.group.rank == 2 and not q.group.torsion
        # lifts actually present the generators
        for lift, want in zip(q.lifts, ((1, 0), (0, 1))):
            coords = q.coords(lift)
            assert sorted(map(abs, coords)) == [0, 1]

    def test_containment_enforced(self):
        with pytest.raises(ContainmentViolation):
            quotient_group(1, IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[3]]))

    def test_dependent_numerator(self):
        num = IntMatrix.from_columns([[1, 1], [2, 2], [1, -1]], rows=2)
        q = quotient_group(2, num, IntMatrix.zeros(2, 0))
        assert q.group.rank == 2

    def test_klein_bottle_h1(self):
        # [DERIVED] ker/im for the klein bottle middle dimension:
        # boundary in = column (0, 2), boundary out = zero row
        q = quotient_group(
            2, kernel_basis(IntMatrix.zeros(1, 2)), IntMatrix.from_columns([[0, 2]], rows=2)
        )
        assert q.group.rank == 1 and q.group.torsion == (2,)

    def test_mod_d_quotient_circle(self):
        # reduced mod-4 chain complex of the circle: everything cycles
        q = mod_d_quotient(IntMatrix.zeros(1, 1), IntMatrix.zeros(1, 0), 4)
        assert q.group.torsion == (4,)

    def test_mod_d_quotient_mult2_in_z4(self):
        # ker(2: Z/4 -> Z/4) / im(2: Z/4 -> Z/4) is trivial
        two = IntMatrix.from_rows([[2]])
        q = mod_d_quotient(two, two, 4)
        assert q.group.is_trivial

    def test_coords_invert_lifts(self):
        rng = random.Random(47)
        for _ in range(40):
            num = random_matrix(rng, max_side=4)
            den_cols = []
            for _ in range(2):
                combo = num.apply([rng.randint(-2, 2) for _ in range(num.cols)])
                k = rng.randint(0, 2)
                den_cols.append([k * v for v in combo])
            den = IntMatrix.from_columns(den_cols, rows=num.rows)
            q = quotient_group(num.rows, num, den)
            k = q.group.num_generators
            for i, lift in enumerate(q.lifts):
                e = tuple(1 if j == i else 0 for j in range(k))
                assert q.coords(lift) == e
