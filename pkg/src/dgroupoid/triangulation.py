"""Triangulation gluing data and Delta-groupoid presentations.

A diagram is a list of l.o.t. tetrahedra ``tet g1 g2 g3 g4``; each contributes
the relations g2 = g1 g3 and g4 = g1 * g3, where x * y = j(k(x) j(y)).

Words are small immutable trees: generators, products, and S3 maps applied to
a subterm. Maps applied to a generator are folded into a single atom; maps on
compound terms are kept as written so the printer can show the star product.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union


# ---------------------------------------------------------------------------
# S3 generated by the involutions i and j

class S3:
    """Element of S3 as a permutation of {0, 1, 2}; i = (0 1), j = (1 2)."""

    __slots__ = ("perm",)

    _NAMES = {}

    def __init__(self, perm: Tuple[int, int, int]):
        self.perm = tuple(perm)

    def __mul__(self, other: "S3") -> "S3":
        # composition of maps: (self * other)(x) = self(other(x))
        return S3(tuple(self.perm[other.perm[t]] for t in range(3)))

    def __eq__(self, other):
        return isinstance(other, S3) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    @property
    def name(self) -> str:
        return _S3_NAME[self.perm]

    def word(self) -> str:
        """Word in i, j (rightmost applied first); k is spelled iji."""
        return _S3_WORD[self.perm]

    def __repr__(self):
        return f"S3({self.name})"

    def inverse(self) -> "S3":
        inv = [0, 0, 0]
        for a, b in enumerate(self.perm):
            inv[b] = a
        return S3(tuple(inv))


E = S3((0, 1, 2))
I = S3((1, 0, 2))
J = S3((0, 2, 1))
K = I * J * I
IJ = I * J
JI = J * I

_S3_NAME = {E.perm: "e", I.perm: "i", J.perm: "j", K.perm: "k", IJ.perm: "ij", JI.perm: "ji"}
_S3_WORD = {E.perm: "", I.perm: "i", J.perm: "j", K.perm: "iji", IJ.perm: "ij", JI.perm: "ji"}
S3_ELEMENTS = (E, I, J, K, IJ, JI)


def s3_normalize(word: str) -> S3:
    """Evaluate a word over {i, j} (k is accepted as iji) in S3."""
    g = E
    for ch in word:
        if ch == "i":
            g = g * I
        elif ch == "j":
            g = g * J
        elif ch == "k":
            g = g * K
        elif ch in " e":
            continue
        else:
            raise ValueError(f"bad S3 letter {ch!r}")
    return g


def s3_from_name(name: str) -> S3:
    return s3_normalize(name)


# ---------------------------------------------------------------------------
# words

@dataclass(frozen=True)
class Atom:
    """sigma(g) for a generator g."""
    sigma: S3
    gen: str


@dataclass(frozen=True)
class Prod:
    factors: Tuple["Term", ...]


@dataclass(frozen=True)
class Act:
    """sigma applied to a compound term."""
    sigma: S3
    arg: "Term"


Term = Union[Atom, Prod, Act]


def gen(name: str) -> Atom:
    return Atom(E, name)


def prod(*factors: Term) -> Term:
    flat: List[Term] = []
    for f in factors:
        if isinstance(f, Prod):
            flat.extend(f.factors)
        else:
            flat.append(f)
    if len(flat) == 1:
        return flat[0]
    return Prod(tuple(flat))


def act(sigma: Union[S3, str], t: Term) -> Term:
    if isinstance(sigma, str):
        sigma = s3_normalize(sigma)
    if sigma == E:
        return t
    if isinstance(t, Atom):
        return Atom(sigma * t.sigma, t.gen)
    if isinstance(t, Prod) and sigma == I:
        return prod(*[act(I, f) for f in reversed(t.factors)])
    if isinstance(t, Act) and sigma * t.sigma == E:
        return t.arg
    return Act(sigma, t)


def star(x: Term, y: Term) -> Term:
    return act(J, prod(act(K, x), act(J, y)))


def generators_of(t: Term) -> set:
    if isinstance(t, Atom):
        return {t.gen}
    if isinstance(t, Prod):
        out = set()
        for f in t.factors:
            out |= generators_of(f)
        return out
    return generators_of(t.arg)


def substitute(t: Term, name: str, value: Term) -> Term:
    if isinstance(t, Atom):
        return act(t.sigma, value) if t.gen == name else t
    if isinstance(t, Prod):
        return prod(*[substitute(f, name, value) for f in t.factors])
    return act(t.sigma, substitute(t.arg, name, value))


def canonical(t: Term) -> Term:
    """Fold nested maps and push i through products (no Delta identities used)."""
    return _canon(E, t)


def _canon(sigma: S3, t: Term) -> Term:
    if isinstance(t, Atom):
        return Atom(sigma * t.sigma, t.gen)
    if isinstance(t, Act):
        return _canon(sigma * t.sigma, t.arg)
    # products: peel a leading i so that i(UV) = i(V) i(U)
    if sigma == E:
        return prod(*[_canon(E, f) for f in t.factors])
    if sigma == I:
        return prod(*[_canon(I, f) for f in reversed(t.factors)])
    rest = sigma * I
    if _S3_WORD[sigma.perm].endswith("i"):
        inner = prod(*[_canon(I, f) for f in reversed(t.factors)])
        return _wrap(rest, inner)
    return _wrap(sigma, prod(*[_canon(E, f) for f in t.factors]))


def _wrap(sigma: S3, t: Term) -> Term:
    if sigma == E:
        return t
    if isinstance(t, Atom):
        return Atom(sigma * t.sigma, t.gen)
    if isinstance(t, Prod) and _S3_WORD[sigma.perm].endswith("i"):
        return _canon(sigma, t)
    return Act(sigma, t)


def is_compound_map(t: Term) -> bool:
    if isinstance(t, Act):
        return True
    if isinstance(t, Prod):
        return any(is_compound_map(f) for f in t.factors)
    return False


# ---------------------------------------------------------------------------
# printing

def _star_operands(t: Term) -> Optional[Tuple[Term, Term]]:
    """(x, y) when t has the shape j(k(x) j(y))."""
    if not isinstance(t, Act) or t.sigma != J or not isinstance(t.arg, Prod):
        return None
    fs = t.arg.factors
    if len(fs) != 2:
        return None
    a, b = fs
    x = _unapply(K, a)
    y = _unapply(J, b)
    if x is None or y is None:
        return None
    return x, y


def _unapply(sigma: S3, t: Term) -> Optional[Term]:
    if isinstance(t, Atom):
        return Atom(sigma.inverse() * t.sigma, t.gen)
    if isinstance(t, Act) and t.sigma == sigma:
        return t.arg
    return None


def format_term(t: Term) -> str:
    labels = sorted(generators_of(t))
    sep = "" if all(len(g) == 1 for g in labels) else "·"
    return _fmt(t, sep)


def _fmt(t: Term, sep: str) -> str:
    if isinstance(t, Atom):
        return t.gen if t.sigma == E else f"{t.sigma.name}({t.gen})"
    st = _star_operands(t)
    if st is not None:
        return f"{_fmt_operand(st[0], sep)}*{_fmt_operand(st[1], sep)}"
    if isinstance(t, Prod):
        return sep.join(_fmt_factor(f, sep) for f in t.factors)
    return f"{t.sigma.name}({_fmt(t.arg, sep)})"


def _fmt_operand(t: Term, sep: str) -> str:
    s = _fmt(t, sep)
    if isinstance(t, Prod) or _star_operands(t) is not None:
        return f"({s})"
    return s


def _fmt_factor(t: Term, sep: str) -> str:
    s = _fmt(t, sep)
    if _star_operands(t) is not None:
        return f"({s})"
    return s


# ---------------------------------------------------------------------------
# diagrams

LABEL_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class LotTet:
    labels: Tuple[str, str, str, str]

    def relations(self) -> List[Tuple[Term, Term]]:
        g1, g2, g3, g4 = (gen(x) for x in self.labels)
        return [(g2, prod(g1, g3)), (g4, star(g1, g3))]


@dataclass
class Diagram:
    tets: List[LotTet]
    allow_free_faces: bool = False

    def labels(self) -> List[str]:
        seen = []
        for t in self.tets:
            for x in t.labels:
                if x not in seen:
                    seen.append(x)
        return seen


def parse_diagram(text: str, allow_free_faces: bool = False) -> Diagram:
    tets = []
    counts: Dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "tet" or len(parts) != 5:
            raise DiagramError(f"line {lineno}: expected 'tet L1 L2 L3 L4', got {raw!r}")
        for lab in parts[1:]:
            if not LABEL_RE.match(lab):
                raise DiagramError(f"line {lineno}: bad label {lab!r}")
            counts[lab] = counts.get(lab, 0) + 1
        tets.append(LotTet(tuple(parts[1:])))
    for lab, c in counts.items():
        if c > 2:
            raise DiagramError(f"label {lab!r} occurs {c} times")
        if c == 1 and not allow_free_faces:
            raise DiagramError(f"label {lab!r} occurs once (free face); use allow_free_faces")
    return Diagram(tets, allow_free_faces)


# ---------------------------------------------------------------------------
# presentations

@dataclass
class DeltaPresentation:
    generators: List[str]
    relations: List[Tuple[Term, Term]]
    # values of eliminated generators; they must lie in H
    constraints: List[Term] = field(default_factory=list)

    def format_relations(self) -> List[str]:
        return [f"{format_term(l)}={format_term(r)}" for l, r in self.relations]

    def __str__(self):
        head = f"generators: {', '.join(self.generators)}"
        return "\n".join([head] + self.format_relations())


def delta_presentation(d: Diagram) -> DeltaPresentation:
    rels = []
    for t in d.tets:
        rels.extend(t.relations())
    return DeltaPresentation(d.labels(), rels)


class EliminationError(ValueError):
    pass


def _defining_relation(p: DeltaPresentation, g: str) -> int:
    for n, (l, r) in enumerate(p.relations):
        if l == gen(g) and g not in generators_of(r):
            return n
        if r == gen(g) and g not in generators_of(l):
            return n
    raise EliminationError(f"no defining relation of the form {g} = W")


def eliminate(p: DeltaPresentation, g: str, expand: bool = False) -> DeltaPresentation:
    """Remove generator ``g`` using its first defining relation g = W.

    By default sigma-images of W are kept unexpanded (e.g. j(xy)). With
    ``expand=True`` the Delta identities for j and k of a product are applied;
    this is only done when W is a product of two atoms, whose product is the
    generator g and hence lies in H.
    """
    n = _defining_relation(p, g)
    l, r = p.relations[n]
    w = r if l == gen(g) else l
    rels = []
    for m, (a, b) in enumerate(p.relations):
        if m == n:
            continue
        if expand:
            a, b = expand_substitute(a, g, w), expand_substitute(b, g, w)
        else:
            a, b = substitute(a, g, w), substitute(b, g, w)
        if is_compound_map(a) and not is_compound_map(b):
            a, b = b, a
        rels.append((a, b))
    cons = [substitute(c, g, w) for c in p.constraints] + [w]
    return DeltaPresentation([x for x in p.generators if x != g], rels, cons)


def _expand_image(sigma: S3, w: Term) -> Term:
    if sigma == E:
        return w
    if isinstance(w, Atom) or sigma == I:
        return act(sigma, w)
    if isinstance(w, Act):
        return act(sigma * w.sigma, w.arg)
    if not (isinstance(w, Prod) and len(w.factors) == 2 and all(isinstance(f, Atom) for f in w.factors)):
        raise EliminationError("cannot expand a map over a product not known to be H-composable")
    u, v = w.factors
    if sigma == J:   # j(uv) = j(u) j(k(u) j(v))
        return prod(act(J, u), star(u, v))
    if sigma == K:   # k(uv) = k(k(u) j(v)) k(v)
        return prod(act(K, prod(act(K, u), act(J, v))), act(K, v))
    if sigma == IJ:
        return act(I, _expand_image(J, w))
    if sigma == JI:  # j(i(v) i(u)), the pair (i(v), i(u)) is H-composable
        return _expand_image(J, prod(act(I, v), act(I, u)))
    raise EliminationError(f"unexpected S3 element {sigma}")


def expand_substitute(t: Term, name: str, value: Term) -> Term:
    if isinstance(t, Atom):
        return _expand_image(t.sigma, value) if t.gen == name else t
    if isinstance(t, Prod):
        return prod(*[expand_substitute(f, name, value) for f in t.factors])
    return act(t.sigma, expand_substitute(t.arg, name, value))


def reduce_presentation(p: DeltaPresentation, expand: bool = False) -> DeltaPresentation:
    """Eliminate generators greedily, relation by relation, while possible."""
    changed = True
    while changed:
        changed = False
        for l, r in p.relations:
            for side, other in ((l, r), (r, l)):
                if isinstance(side, Atom) and side.sigma == E and side.gen not in generators_of(other):
                    p = eliminate(p, side.gen, expand)
                    changed = True
                    break
            if changed:
                break
    return p


# ---------------------------------------------------------------------------
# evaluation in a finite Delta-groupoid

def evaluate(t: Term, assignment: Dict[str, object], dg) -> Optional[object]:
    """Value of ``t`` in a finite Delta-groupoid or None when undefined."""
    if isinstance(t, Atom):
        x = assignment[t.gen]
        try:
            return dg.apply(t.sigma.word(), x)
        except (ValueError, KeyError):
            return None
    if isinstance(t, Prod):
        vals = [evaluate(f, assignment, dg) for f in t.factors]
        if any(v is None for v in vals):
            return None
        acc = vals[0]
        for v in vals[1:]:
            if not dg.G.composable(acc, v):
                return None
            acc = dg.G.compose(acc, v)
        return acc
    v = evaluate(t.arg, assignment, dg)
    if v is None:
        return None
    try:
        return dg.apply(t.sigma.word(), v)
    except (ValueError, KeyError):
        return None


def satisfies(p: DeltaPresentation, assignment, dg) -> bool:
    for l, r in p.relations:
        a = evaluate(l, assignment, dg)
        if a is None or a != evaluate(r, assignment, dg):
            return False
    for c in p.constraints:
        v = evaluate(c, assignment, dg)
        if v is None or v not in dg.D:
            return False
    return True


def count_models(p: DeltaPresentation, dg) -> int:
    """Number of assignments generators -> H satisfying every relation."""
    import itertools
    H = list(dg.H)
    total = 0
    for vals in itertools.product(H, repeat=len(p.generators)):
        if satisfies(p, dict(zip(p.generators, vals)), dg):
            total += 1
    return total
