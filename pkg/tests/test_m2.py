import sympy
from hypothesis import given, strategies as st

from dgroupoid.m2 import (M2Ring, centrality_check, check_rep4, check_symmetric, f8_ring,
                          monomials)

R = M2Ring.generic()
mat = st.lists(st.integers(-4, 4), min_size=4, max_size=4).map(lambda v: sympy.Matrix(2, 2, v))


def _realize(A, B):
    """Parameters of R for a = A, b = B inside 2x2 integer matrices."""
    x, y = A.trace(), B.trace()
    return {"x": x, "y": y, "p": A.det(), "q": B.det(), "z": x * y - (A * B).trace()}


def _image(e, env, A, B):
    c = [sympy.Integer(k.evaluate(env, 1)) for k in e.coeffs]
    return c[0] * sympy.eye(2) + c[1] * A + c[2] * B + c[3] * A * B


@given(mat, mat, st.integers(0, 13), st.integers(0, 13))
def test_products_agree_with_matrix_oracle(A, B, i, j):
    words = monomials(R, 3)
    env = _realize(A, B)
    u, v = words[i][1], words[j][1]
    assert _image(u * v, env, A, B) == _image(u, env, A, B) * _image(v, env, A, B)
    # the trace table is the matrix trace
    assert sympy.Integer(R.trace(u).evaluate(env, 1)) == _image(u, env, A, B).trace()


def test_generic_symmetric_identities():
    assert check_symmetric(R).ok


def test_symmetric_identities_on_products():
    samples = [e for _, e in monomials(R, 2)]
    assert check_symmetric(R, samples).ok


def test_corrupted_trace_is_detected():
    K = R.K
    bad = R.with_trace((2, K.var("x") + 1, K.var("y"), K.var("x") * K.var("y") - K.var("z")))
    assert not check_symmetric(bad).ok


def test_rep4():
    rep = check_rep4(R)
    assert rep.ok, rep.text()


def test_centrality():
    assert centrality_check().ok


def test_inverse_in_f8_ring():
    F = f8_ring()
    a, b = F.a, F.b
    assert a * a.inverse() == 1 and b.inverse() * b == 1
    assert F.trace(a * b) == 1 + F.K.var("d")
