import itertools

import pytest

from dgroupoid.delta import ar, br, coarse, FiniteGroup, triples
from dgroupoid.triangulation import (DiagramError, E, EliminationError, I, IJ, J, JI, K,
                                     count_models, delta_presentation, eliminate, format_term, gen,
                                     parse_diagram, reduce_presentation, s3_normalize)
from dgroupoid.trefoil import bundled

TREFOIL = "tet x u y v\ntet v y u x\n"
FIG8 = "tet x u y v\ntet y v x u\n"


def test_s3_normalize_examples():
    assert s3_normalize("jij") == K == s3_normalize("iji")
    assert s3_normalize("ii") == E
    assert s3_normalize("ijij") == JI
    assert s3_normalize("") == E


@pytest.mark.parametrize("n", range(0, 7))
def test_s3_normalize_is_a_morphism(n):
    for w in itertools.product("ij", repeat=n):
        w = "".join(w)
        for cut in range(len(w) + 1):
            assert s3_normalize(w) == s3_normalize(w[:cut]) * s3_normalize(w[cut:])


def test_s3_canonical_names():
    names = {str(s) for s in (E, I, J, K, IJ, JI)}
    assert len(names) == 6


def test_trefoil_presentation():
    p = delta_presentation(parse_diagram(TREFOIL))
    assert p.generators == ["x", "u", "y", "v"]
    assert p.format_relations() == ["u=xy", "v=x*y", "y=vu", "x=v*u"]


def test_fig8_presentation():
    p = delta_presentation(parse_diagram(FIG8))
    assert p.format_relations() == ["u=xy", "v=x*y", "v=yx", "u=y*x"]


def test_reduction_trefoil():
    p = reduce_presentation(delta_presentation(parse_diagram(TREFOIL)))
    assert p.generators == ["x", "y"]
    assert p.format_relations() == ["y=(x*y)xy", "x=(x*y)*(xy)"]


def test_reduction_fig8_relation_set():
    p = reduce_presentation(delta_presentation(parse_diagram(FIG8)))
    assert set(p.format_relations()) == {"xy=y*x", "yx=x*y"}


def test_bundled_files_match_inline_text():
    for name, text in (("trefoil.tri", TREFOIL), ("fig8.tri", FIG8)):
        a = delta_presentation(parse_diagram(bundled(name)))
        b = delta_presentation(parse_diagram(text))
        assert a.format_relations() == b.format_relations()


def test_single_tetrahedron_needs_flag():
    with pytest.raises(DiagramError):
        parse_diagram("tet a b c d")
    p = delta_presentation(parse_diagram("tet a b c d", allow_free_faces=True))
    assert len(p.generators) == 4 and len(p.relations) == 2


def test_parse_errors_carry_line_numbers():
    with pytest.raises(DiagramError, match="line 2"):
        parse_diagram("# comment\ntet x u y\n")
    with pytest.raises(DiagramError, match="line 1"):
        parse_diagram("tet x u y 9v")
    with pytest.raises(DiagramError, match="3 times"):
        parse_diagram("tet x x x v\ntet v y u y", allow_free_faces=True)


def test_eliminate_requires_defining_relation():
    p = delta_presentation(parse_diagram(TREFOIL))
    with pytest.raises(EliminationError):
        eliminate(eliminate(p, "u"), "u")


def test_renaming_is_substitution():
    p = delta_presentation(parse_diagram("tet a b c d\ntet e b c d", allow_free_faces=True))
    q = eliminate(p, "b")
    assert "b" not in q.generators
    assert all("b" not in r for r in q.format_relations())


def _models():
    return [triples(range(2)), triples(range(3)), ar(5), ar(7), br(3), br(4),
            coarse(FiniteGroup.cyclic(3))]


@pytest.mark.parametrize("text", [TREFOIL, FIG8], ids=["trefoil", "fig8"])
def test_elimination_preserves_model_counts(text):
    p = delta_presentation(parse_diagram(text))
    q = reduce_presentation(p)
    for dg in _models():
        assert count_models(p, dg) == count_models(q, dg), dg.name


def test_format_term_star_folding():
    x, y = gen("x"), gen("y")
    from dgroupoid.triangulation import prod, star
    assert format_term(star(x, y)) == "x*y"
    assert format_term(prod(star(x, y), x, y)) == "(x*y)xy"
