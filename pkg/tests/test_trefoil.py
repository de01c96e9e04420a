from dgroupoid.arith import EisensteinLoc
from dgroupoid.trefoil import b_assignment, phi, verify_trefoil_a, verify_trefoil_b


def test_trefoil_a_all_pass():
    rep = verify_trefoil_a()
    assert rep.ok, rep.text()


def test_trefoil_a_wrong_image_fails():
    assert not verify_trefoil_a(wy=EisensteinLoc.t()).ok


def test_trefoil_b_all_pass():
    rep = verify_trefoil_b()
    assert rep.ok, rep.text()


def test_trefoil_values():
    t = EisensteinLoc.t()
    assert t + t.inverse() == 1
    assert t ** 3 == -1
    env = b_assignment()
    assert env["u_y"] + env["v_y"] == 1
    assert phi()["w_y"] * 3 == 2 - t
