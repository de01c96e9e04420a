import pytest

from dgroupoid.delta import (DeltaData, DeltaGroupoid, FiniteGroup, MalformedInput, ar, br,
                             build_example, check_delta, coarse, is_malnormal, k_identity_failures,
                             malnormal_examples, small_groups, triples, truncated_tetrahedron)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_triples(n):
    d = triples(range(n))
    assert check_delta(d.G, d.D).ok
    assert not k_identity_failures(d)


@pytest.mark.parametrize("g", small_groups(6), ids=lambda g: g.name)
def test_coarse(g):
    d = coarse(g)
    assert check_delta(d.G, d.D).ok and not k_identity_failures(d)


@pytest.mark.parametrize("n", range(2, 10))
@pytest.mark.parametrize("family", [ar, br])
def test_ar_br(family, n):
    d = family(n)
    assert check_delta(d.G, d.D).ok and not k_identity_failures(d)


def test_malnormal_examples():
    for d in malnormal_examples():
        assert check_delta(d.G, d.D).ok


def test_malnormality_detected():
    s3 = FiniteGroup.symmetric(3)
    assert is_malnormal(s3, s3.subgroup_generated([(1, 0, 2)]))
    a3 = s3.subgroup_generated([(1, 2, 0)])
    assert not is_malnormal(s3, a3)


def test_star_product():
    d = triples(range(3))
    x, y = (0, 1, 2), (0, 2, 1)
    # x*y = j(k(x)j(y))
    assert d.star(x, y) == d.j(d.G.compose(d.k(x), d.j(y)))


def test_identity_j_breaks_the_axioms():
    d = triples(range(3))
    bad = DeltaData(d.D.H, {x: x for x in d.D.H})
    rep = check_delta(d.G, bad)
    assert not rep.ok
    assert "j(xy)" in rep.failed()
    assert rep.witness("j(xy)") is not None


def test_truncated_tetrahedron():
    d = truncated_tetrahedron()
    assert check_delta(d.G, d.D).ok
    assert len(d.H) == 24
    assert sorted(len(o) for o in d.s3_orbits()) == [6, 6, 6, 6]


def test_h_must_be_morphisms():
    d = triples(range(2))
    with pytest.raises(MalformedInput):
        DeltaGroupoid(d.G, DeltaData(("nope",), {"nope": "nope"}))


def test_build_example_rejects_unknown():
    with pytest.raises(ValueError):
        build_example("nonsense")


def test_identity_j_on_two_point_triples():
    d = triples(range(2))
    rep = check_delta(d.G, DeltaData(d.D.H, {x: x for x in d.D.H}))
    assert set(rep.failed()) == {"iji=jij", "j(xy)"}


def test_star_and_duals():
    d = triples(range(4))
    assert d.star((0, 1, 2), (0, 2, 3)) == (1, 2, 3)
    assert d.object_dual((0, 1)) == (1, 0)
    c = coarse(FiniteGroup.cyclic(3))
    assert c.object_dual(1) == 2
    e = (0, 0)
    assert c.star(e, e) == e
