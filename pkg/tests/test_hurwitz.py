from fractions import Fraction

from dgroupoid.hurwitz import (HURWITZ_COVOLUME, Quaternion, f8a_mod_j, find_witness,
                               hurwitz_check, lattice_det, relations_hold)

h = Fraction(1, 2)


def test_quaternion_units():
    i, j, k = Quaternion.of(0, 1, 0, 0), Quaternion.of(0, 0, 1, 0), Quaternion.of(0, 0, 0, 1)
    assert i * i == -1 and i * j == k and j * i == -k and i * j * k == -1


def test_example_candidates():
    alpha = Quaternion.of(h, h, h, h)
    gamma = Quaternion.of(0, -1, -1, 0)
    assert alpha * alpha == alpha - 1
    assert relations_hold(alpha, gamma)
    assert lattice_det([Quaternion.of(1, 0, 0, 0), alpha, gamma, alpha * gamma]) == HURWITZ_COVOLUME


def test_hurwitz_order_covolume():
    gens = [Quaternion.of(h, h, h, h), Quaternion.of(0, 1, 0, 0), Quaternion.of(0, 0, 1, 0),
            Quaternion.of(0, 0, 0, 1)]
    assert lattice_det(gens) == HURWITZ_COVOLUME
    assert Quaternion.of(h, h, h, h).is_hurwitz() and not Quaternion.of(h, h, 0, 0).is_hurwitz()


def test_quotient_rank():
    assert f8a_mod_j().signature() == ((), 4)


def test_hurwitz_check():
    w, rep = hurwitz_check(2)
    assert w is not None and rep.ok, rep.text()


def test_bound_zero_finds_nothing():
    assert find_witness(0) is None
