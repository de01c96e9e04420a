from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from dgroupoid import figure_eight as F
from dgroupoid.lattice import MixedLattice


def test_f8r_identities():
    rep = F.verify_f8r()
    assert rep.ok, rep.text()


def test_commutator_normal_form():
    R = F.f8r()
    c, ci, d, w = F.f8r_constants()
    q, qi, xi = F.f8_commutator()
    assert q == (R.a * R.b).scale(d + 1) + R.a.scale(d + ci + 1) - R.b.scale(c) - c - 1
    assert q * qi == 1
    assert q + qi == w


rat = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@given(rat, rat, rat, rat, rat, rat)
def test_traces_against_matrix_oracle(a1, a2, a3, b1, b2, _):
    """2x2 rational matrices with a(a+1) = c, b(b+1) = 1/c realize R."""
    A = sympy.Matrix([[a1, a2], [a3, -1 - a1]])
    detA = A.det()
    assume(detA != 0 and b2 != 0)
    target = 1 / detA
    b3 = (b1 * (-1 - b1) - target) / b2
    B = sympy.Matrix([[b1, b2], [b3, -1 - b1]])
    c = -detA
    assert A * (A + sympy.eye(2)) == c * sympy.eye(2)
    assert B * (B + sympy.eye(2)) == sympy.eye(2) / c
    d = (A * B).trace() - 1
    w = d ** 2 + d - c - 1 / c - 2
    q = A * B * A.inv() * B.inv()
    xi = q * q - c * sympy.eye(2)
    eps = c + 1 - w
    assert sympy.simplify((q + q.inv()) - w * sympy.eye(2)) == sympy.zeros(2)
    assert sympy.simplify(xi.trace() - (-2 * eps + w ** 2 - 2 * w)) == 0
    assert sympy.simplify((xi * A).trace() - (eps + 2 * w - w ** 2)) == 0
    assert sympy.simplify((xi * B).trace() - eps) == 0
    assert sympy.simplify((xi * B * A).trace() + (1 + d) * eps) == 0


def test_trace_generators_report():
    rep = F.verify_trace_generators()
    status = {l.name: l.status for l in rep.lines}
    assert status["L(xi)=-2eps+w^2-2w"] == "PASS"
    assert status["L(xi a)=eps+2w-w^2"] == "PASS"
    assert status["L(xi b)=eps"] == "PASS"
    assert status["L(xi ba)=-(1+d)eps (computed)"] == "PASS"
    assert status["L(xi ba)=(1+d)eps"] == "FAIL"


def test_f8q_construction():
    rep = F.verify_f8q()
    assert rep.ok, rep.text()


def test_f8q_examples(f8q):
    Q = f8q
    a, b = Q.gen("a"), Q.gen("b")
    assert a * a == Q.from_dict({"eps": 1, "1": -1, "w": 1, "a": -1})
    assert Q.gen("eps") * Q.gen("ab") == 4 * Q.gen("eps")
    assert Q.gen("w") * Q.gen("d") == Q.from_dict({"eps": 1, "wa": 1, "wb": 1, "wab": 2})
    assert 5 * Q.gen("eps") == 0 and Q.gen("eps") * Q.gen("eps") == 0
    assert b * a == Q.from_dict({"d": 1, "a": -1, "b": -1, "ab": -1})


def test_matrix_mismatch_is_reported():
    ring = F.rules_ring()
    assert F.matrix_mismatches(ring) == []


def test_projection():
    rep = F.verify_projection()
    assert rep.ok, rep.text()


def test_c_minus_inverse(f8q):
    R = F.f8r()
    c, ci, _, _ = F.f8r_constants()
    assert F.f8_project(R.scalar(c - ci)) == 2 * f8q.gen("eps")


def test_ideal_elements():
    rep = F.verify_ideal_elements()
    assert rep.ok, rep.text()


def test_trace_ideal_is_eps():
    got, want = F.trace_ideal_in_f8q()
    assert got == want


def test_b_end_to_end():
    rep = F.verify_f8_b_end_to_end()
    assert rep.ok, rep.text()


def test_centers():
    rep = F.verify_centers()
    assert rep.ok, rep.text()


def test_center_of_zero_ring(f8q):
    Z = f8q.quotient([f8q.one()])
    assert Z.signature() == ((), 0)
    assert Z.center() == Z.lattice


def test_f8a():
    rep = F.verify_f8a()
    assert rep.ok, rep.text()


def test_alpha_kernel(f8q):
    rep = F.verify_alpha_kernel()
    status = {l.name: l.status for l in rep.lines}
    assert status["kernel = ideal (eps, w-d)"] == "FAIL"
    for name in ("kernel = ideal (u_x+v_x-1, u_y+v_y-1)", "kernel = ideal (eps, w-d, da-db)",
                 "(R/I)/ker alpha matches the A' model", "alpha is onto the A' model"):
        assert status[name] == "PASS", name


def test_da_minus_db_maps_to_zero(f8q):
    A = F.build_f8a()
    img = F.alpha_map(f8q, A)
    assert (img["da"] - img["db"]).is_zero()
