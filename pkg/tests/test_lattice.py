import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from dgroupoid.lattice import (MixedLattice, det, hnf, in_lattice, kernel, mat_mul, module_quotient,
                               smith, solve)

entries = st.integers(-9, 9)


def matrices(rows=(1, 4), cols=(1, 4)):
    return st.integers(*rows).flatmap(
        lambda m: st.integers(*cols).flatmap(
            lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=m, max_size=m)))


@given(matrices())
def test_smith_form_matches_sympy(a):
    d, u, v = smith(a)
    assert mat_mul(mat_mul(u, a), v) == d
    ours = sorted(abs(d[i][i]) for i in range(min(len(d), len(d[0]))) if d[i][i])
    ref = smith_normal_form(sympy.Matrix(a), domain=sympy.ZZ)
    theirs = sorted(abs(int(ref[i, i])) for i in range(min(ref.shape)) if ref[i, i])
    assert ours == theirs


@given(matrices())
def test_hnf_spans_same_lattice(a):
    h = hnf(a, len(a[0]))
    for r in a:
        assert in_lattice(h, r)
    for r in h:
        assert solve([list(c) for c in zip(*a)], r, len(a)) is not None


@given(matrices(rows=(1, 3), cols=(2, 5)))
def test_kernel_vectors(a):
    n = len(a[0])
    for k in kernel(a, n):
        assert all(sum(x * y for x, y in zip(row, k)) == 0 for row in a)


def test_det_against_sympy():
    m = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    assert det(m) == sympy.Matrix(m).det()


def test_quotient_with_torsion():
    amb = MixedLattice(2, (), ((5, 0),))
    sub = amb.with_generators([(0, 3)])
    q = module_quotient(amb, sub)
    assert q.torsion == (15,) and q.free_rank == 0  # Z/3 + Z/5 = Z/15


def test_mixed_lattice_equality_is_basis_independent():
    a = MixedLattice(2, ((2, 0), (0, 2)))
    b = MixedLattice(2, ((2, 2), (0, 2), (4, 0)))
    assert a == b
    with pytest.raises(Exception):
        MixedLattice(2, ((1, 2, 3),))
