import itertools

import pytest

from dgroupoid.arith import EisensteinLoc, ModularInt
from dgroupoid.delta import br, zmod_units
from dgroupoid.rings import (MissingAtom, ParseError, RingPresentation, Sym, alpha_image, b_map,
                             b_mul, emit_a, emit_b, evaluate, format_expr, parse_expr,
                             verify_in_model)
from dgroupoid.triangulation import (DeltaPresentation, J, delta_presentation, parse_diagram,
                                     reduce_presentation)
from dgroupoid.trefoil import phi, trefoil_presentation

FIG8 = "tet x u y v\ntet y v x u\n"


def fig8(reduced=True):
    p = delta_presentation(parse_diagram(FIG8))
    return reduce_presentation(p) if reduced else p


def test_fig8_a_relation_verbatim():
    lines = emit_a(fig8()).lines()
    assert "(1-(w_xw_y)^{-1})^{-1}=(1-w_y)(1-w_x^{-1})^{-1}" in lines


def test_fig8_b_relations_verbatim():
    lines = emit_b(fig8()).lines()
    for rel in ("(u_xv_y+v_x)^{-1}u_xu_y=v_yv_x^{-1}u_x", "(u_xv_y+v_x)^{-1}=v_yv_x^{-1}+u_y",
                "(u_yv_x+v_y)^{-1}u_yu_x=v_xv_y^{-1}u_y", "(u_yv_x+v_y)^{-1}=v_xv_y^{-1}+u_x"):
        assert rel in lines


def test_empty_presentation():
    p = DeltaPresentation([], [])
    a = emit_a(p)
    assert a.atoms == [] and a.relations == []
    assert verify_in_model(a, {}, EisensteinLoc(1)).ok


def test_single_generator_b():
    b = emit_b(DeltaPresentation(["g"], []))
    assert b.atoms == ["u_g", "v_g"] and b.invertible == ["u_g", "v_g"] and not b.relations


def test_trefoil_a_in_model():
    env = phi()
    assert verify_in_model(emit_a(trefoil_presentation()), env, EisensteinLoc(1)).ok
    bad = phi(EisensteinLoc.t())
    assert not verify_in_model(emit_a(trefoil_presentation()), bad, EisensteinLoc(1)).ok


def test_missing_atom():
    with pytest.raises(MissingAtom):
        verify_in_model(emit_a(trefoil_presentation()), {"w_x": EisensteinLoc.t()}, EisensteinLoc(1))


def test_noninvertible_reported_distinctly():
    pres = RingPresentation("A'", ["w_x"], [(parse_expr("inv(w_x-1)"), parse_expr("1"))])
    rep = verify_in_model(pres, {"w_x": ModularInt(1, 7)}, ModularInt(1, 7))
    assert rep.lines[0].status == "NONINVERTIBLE"


def test_alpha_image():
    assert format_expr(alpha_image(Sym("u_x"))) == "w_x"
    e = alpha_image(parse_expr("u_x+v_x-1"))
    for t in (EisensteinLoc.t(), EisensteinLoc(5)):
        assert evaluate(e, {"w_x": t}, EisensteinLoc(1)) == 0
    assert format_expr(alpha_image(parse_expr("1"))) == "1"


def test_alpha_pushes_b_to_a_relations_in_trefoil_model():
    env = phi()
    one = EisensteinLoc(1)
    b = emit_b(trefoil_presentation())
    pushed = RingPresentation("A'", [], [(alpha_image(l), alpha_image(r)) for l, r in b.relations])
    assert verify_in_model(pushed, env, one).ok == verify_in_model(emit_a(trefoil_presentation()), env, one).ok


@pytest.mark.parametrize("n", [3, 4, 5, 7])
def test_b_rules_match_br_models(n):
    dg = br(n)
    one = ModularInt(1, n)
    u, v = Sym("u"), Sym("v")
    U2, V2 = Sym("U"), Sym("V")
    # (x, y) in R x| R* corresponds to the pair (u, v) = (y, x)
    els = [(x, y) for x in range(n) for y in zmod_units(n)]
    prod = b_mul((u, v), (U2, V2))
    for (x1, y1), (x2, y2) in itertools.product(els, repeat=2):
        env = {"u": ModularInt(y1, n), "v": ModularInt(x1, n), "U": ModularInt(y2, n), "V": ModularInt(x2, n)}
        m = dg.G.compose((x1, y1), (x2, y2))
        assert (evaluate(prod[0], env, one), evaluate(prod[1], env, one)) == (ModularInt(m[1], n), ModularInt(m[0], n))
    jp = b_map(J, (u, v))
    for x, y in dg.H:
        env = {"u": ModularInt(y, n), "v": ModularInt(x, n)}
        jx = dg.j((x, y))
        assert (evaluate(jp[0], env, one), evaluate(jp[1], env, one)) == (ModularInt(jx[1], n), ModularInt(jx[0], n))


def test_parser():
    env = {"t": EisensteinLoc.t()}
    one = EisensteinLoc(1)
    assert evaluate(parse_expr("t^-1"), env, one) == 1 - EisensteinLoc.t()
    assert evaluate(parse_expr("3 inv(2-t)"), env, one) == 1 + EisensteinLoc.t()
    assert evaluate(parse_expr("-(t^2) + t"), env, one) == 1
    for bad in ("t +", "(t", "t ^ x", "t $ 2"):
        with pytest.raises(ParseError):
            parse_expr(bad)
