"""Finite Delta-groupoids.

A groupoid is stored as explicit tables; the Delta structure is the subset H
together with the involution j on H. The maps i (inverse) and k = iji are
derived. :func:`check_delta` verifies every axiom by exhaustion and reports the
first counterexample in the fixed morphism order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Morphism = Hashable
Obj = Hashable


class MalformedInput(ValueError):
    """Input that is not a Delta-groupoid candidate at all (as opposed to a
    candidate failing an axiom)."""


# ---------------------------------------------------------------------------
# finite groups by Cayley table

class FiniteGroup:
    def __init__(self, elements: Sequence[Hashable], mul: Callable[[Hashable, Hashable], Hashable],
                 name: str = ""):
        self.elements = list(elements)
        self.name = name
        self._mul = {(a, b): mul(a, b) for a in self.elements for b in self.elements}
        es = set(self.elements)
        if any(v not in es for v in self._mul.values()):
            raise MalformedInput("multiplication is not closed")
        ids = [e for e in self.elements if all(self._mul[e, a] == a == self._mul[a, e] for a in self.elements)]
        if len(ids) != 1:
            raise MalformedInput("no unique identity")
        self.identity = ids[0]
        self._inv = {}
        for a in self.elements:
            for b in self.elements:
                if self._mul[a, b] == self.identity:
                    self._inv[a] = b
                    break
            else:
                raise MalformedInput(f"{a!r} has no inverse")

    def mul(self, a, b):
        return self._mul[a, b]

    def inv(self, a):
        return self._inv[a]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_associative(self) -> bool:
        m = self._mul
        return all(m[m[a, b], c] == m[a, m[b, c]]
                   for a in self.elements for b in self.elements for c in self.elements)

    def subgroup_generated(self, gens) -> List:
        seen = {self.identity}
        frontier = list(gens)
        seen.update(frontier)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    for b in (self.mul(a, g), self.mul(g, a)):
                        if b not in seen:
                            seen.add(b)
                            nxt.append(b)
            frontier = nxt
        return [e for e in self.elements if e in seen]

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls(range(n), lambda a, b: (a + b) % n, f"C{n}")

    @classmethod
    def product(cls, g: "FiniteGroup", h: "FiniteGroup") -> "FiniteGroup":
        els = [(a, b) for a in g for b in h]
        return cls(els, lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])), f"{g.name}x{h.name}")

    @classmethod
    def from_permutations(cls, gens: Sequence[Sequence[int]], name: str = "") -> "FiniteGroup":
        """Permutation group generated by ``gens`` (tuples of images)."""
        n = len(gens[0])
        ident = tuple(range(n))

        def compose(p, q):  # apply p first, then q
            return tuple(q[p[i]] for i in range(n))

        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    r = compose(p, tuple(g))
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        return cls(sorted(seen), compose, name)

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        if n == 1:
            return cls.from_permutations([(0,)], "S1")
        gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
        return cls.from_permutations(gens, f"S{n}")


def small_groups(max_order: int = 6) -> List[FiniteGroup]:
    """One representative of each isomorphism class of groups of order <= 6."""
    C = FiniteGroup.cyclic
    groups = [C(1), C(2), C(3), C(4), FiniteGroup.product(C(2), C(2)), C(5), C(6),
              FiniteGroup.symmetric(3)]
    return [g for g in groups if len(g) <= max_order]


# ---------------------------------------------------------------------------

class FiniteGroupoid:
    """Groupoid with composition convention (x, y) composable iff cod x == dom y."""

    def __init__(self, objects: Iterable[Obj], morphisms: Iterable[Morphism],
                 dom: Dict, cod: Dict, compose: Dict, inv: Dict, ident: Dict):
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        self.dom = dict(dom)
        self.cod = dict(cod)
        self._compose = dict(compose)
        self.inv = dict(inv)
        self.ident = dict(ident)
        self._order = {m: n for n, m in enumerate(self.morphisms)}

    @classmethod
    def from_functions(cls, objects, morphisms, dom, cod, compose, inv, ident) -> "FiniteGroupoid":
        objects = list(objects)
        morphisms = list(morphisms)
        comp = {}
        for x in morphisms:
            for y in morphisms:
                if cod(x) == dom(y):
                    comp[x, y] = compose(x, y)
        return cls(objects, morphisms, {m: dom(m) for m in morphisms}, {m: cod(m) for m in morphisms},
                   comp, {m: inv(m) for m in morphisms}, {o: ident(o) for o in objects})

    @classmethod
    def from_group(cls, group: FiniteGroup, elements: Optional[Sequence] = None) -> "FiniteGroupoid":
        els = list(group.elements if elements is None else elements)
        return cls.from_functions(["*"], els, lambda m: "*", lambda m: "*", group.mul, group.inv,
                                  lambda o: group.identity)

    def composable(self, x, y) -> bool:
        return self.cod[x] == self.dom[y]

    def compose(self, x, y):
        try:
            return self._compose[x, y]
        except KeyError:
            raise ValueError(f"{x!r} and {y!r} are not composable") from None

    def order_key(self, m) -> int:
        return self._order[m]

    def validate(self) -> List[str]:
        """Groupoid-law violations (empty when valid)."""
        errs = []
        ms = set(self.morphisms)
        for (x, y), z in self._compose.items():
            if z not in ms:
                errs.append(f"product of {x!r},{y!r} is not a morphism")
            elif self.dom[z] != self.dom[x] or self.cod[z] != self.cod[y]:
                errs.append(f"product of {x!r},{y!r} has wrong ends")
        for x in self.morphisms:
            for y in self.morphisms:
                if not self.composable(x, y):
                    continue
                if (x, y) not in self._compose:
                    errs.append(f"missing product {x!r},{y!r}")
                    continue
                for z in self.morphisms:
                    if self.composable(y, z):
                        xy = self._compose[x, y]
                        yz = self._compose[y, z]
                        if self._compose[xy, z] != self._compose[x, yz]:
                            errs.append(f"not associative at {x!r},{y!r},{z!r}")
        for x in self.morphisms:
            a, b = self.dom[x], self.cod[x]
            if self._compose.get((self.ident[a], x)) != x or self._compose.get((x, self.ident[b])) != x:
                errs.append(f"identity law fails at {x!r}")
            if self._compose.get((x, self.inv[x])) != self.ident[a]:
                errs.append(f"inverse law fails at {x!r}")
        return errs

    def components(self) -> List[List[Obj]]:
        parent = {o: o for o in self.objects}

        def find(o):
            while parent[o] != o:
                parent[o] = parent[parent[o]]
                o = parent[o]
            return o

        for m in self.morphisms:
            a, b = find(self.dom[m]), find(self.cod[m])
            if a != b:
                parent[a] = b
        groups: Dict = {}
        for o in self.objects:
            groups.setdefault(find(o), []).append(o)
        return list(groups.values())

    def hom(self, a, b) -> List[Morphism]:
        return [m for m in self.morphisms if self.dom[m] == a and self.cod[m] == b]

    def is_coarse_component(self, objs: Sequence[Obj]) -> bool:
        """True when exactly one morphism joins every ordered pair of ``objs``."""
        return all(len(self.hom(a, b)) == 1 for a in objs for b in objs)

    def generated_by(self, gens: Iterable[Morphism]) -> set:
        gens = list(gens)
        seen = set(self.ident.values())
        seen.update(gens)
        seen.update(self.inv[g] for g in gens)
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    for a, b in ((x, g), (g, x), (x, self.inv[g]), (self.inv[g], x)):
                        if self.composable(a, b):
                            z = self._compose[a, b]
                            if z not in seen:
                                seen.add(z)
                                nxt.append(z)
            frontier = nxt
        return seen


@dataclass
class DeltaData:
    H: Tuple[Morphism, ...]
    j: Dict[Morphism, Morphism]

    def __post_init__(self):
        self.H = tuple(self.H)
        self._hset = frozenset(self.H)

    def __contains__(self, x) -> bool:
        return x in self._hset


@dataclass
class AxiomReport:
    results: Dict[str, Tuple[bool, Optional[tuple]]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r[0] for r in self.results.values())

    def failed(self) -> List[str]:
        return [k for k, (ok, _) in self.results.items() if not ok]

    def witness(self, name: str):
        return self.results[name][1]

    def lines(self) -> List[str]:
        out = []
        for name, (ok, w) in self.results.items():
            s = f"{name}: {'PASS' if ok else 'FAIL'}"
            if not ok and w is not None:
                s += f" witness={w!r}"
            out.append(s)
        return out


AXIOMS = ("i(H)=H", "j^2=id", "iji=jij", "composable", "H-composable", "j(xy)", "generates")


class DeltaGroupoid:
    """A groupoid together with Delta data, exposing i, j, k and the star product."""

    def __init__(self, G: FiniteGroupoid, D: DeltaData, name: str = ""):
        self.G = G
        self.D = D
        self.name = name
        ms = set(G.morphisms)
        for x in D.H:
            if x not in ms:
                raise MalformedInput(f"{x!r} in H is not a morphism")
        for x in D.H:
            if x not in D.j:
                raise MalformedInput(f"j is undefined on {x!r}")
            if D.j[x] not in D:
                raise MalformedInput(f"j({x!r}) = {D.j[x]!r} lies outside H")

    @property
    def H(self):
        return self.D.H

    def i(self, x):
        return self.G.inv[x]

    def j(self, x):
        return self.D.j[x]

    def k(self, x):
        return self.i(self.j(self.i(x)))

    def apply(self, word: str, x):
        """Apply a word in i, j, k read as a composite of maps (rightmost first)."""
        for ch in reversed(word):
            if x not in self.D:
                raise ValueError(f"{x!r} is not in H")
            x = {"i": self.i, "j": self.j, "k": self.k}[ch](x)
        return x

    def h_composable(self, x, y) -> bool:
        return (x in self.D and y in self.D and self.G.composable(x, y)
                and self.G.compose(x, y) in self.D)

    def star(self, x, y):
        if not self.h_composable(x, y):
            raise ValueError(f"({x!r}, {y!r}) is not H-composable")
        return self.j(self.G.compose(self.k(x), self.j(y)))

    def object_dual(self, A):
        cands = [x for x in self.D.H if self.G.dom[x] == A]
        if not cands:
            raise ValueError(f"no element of H has domain {A!r}")
        duals = {self.G.dom[self.j(x)] for x in cands}
        if len(duals) != 1:
            raise ValueError(f"object dual of {A!r} depends on the witness: {duals}")
        return duals.pop()

    def s3_orbits(self) -> List[List[Morphism]]:
        seen = set()
        orbits = []
        for x in self.D.H:
            if x in seen:
                continue
            orb = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for z in (self.i(y), self.j(y)):
                    if z not in orb:
                        orb.add(z)
                        frontier.append(z)
            seen |= orb
            orbits.append(sorted(orb, key=self.G.order_key))
        return orbits


def check_delta(G: FiniteGroupoid, D: DeltaData) -> AxiomReport:
    """Exhaustive check of the Delta-groupoid axioms.

    Raises MalformedInput when j does not map H into H or when H is not closed
    under the S3 action generated by i and j.
    """
    dg = DeltaGroupoid(G, D)
    rep = AxiomReport()
    H = sorted(D.H, key=G.order_key)
    hset = D._hset

    def first(pred_fail, items):
        for it in items:
            if pred_fail(*it):
                return it
        return None

    w = first(lambda x: G.inv[x] not in hset, ((x,) for x in H))
    rep.results["i(H)=H"] = (w is None, w)
    if w is not None:
        raise MalformedInput(f"H is not closed under inversion: {w[0]!r}")
    w = first(lambda x: D.j[D.j[x]] != x, ((x,) for x in H))
    rep.results["j^2=id"] = (w is None, w)
    w = first(lambda x: dg.i(dg.j(dg.i(x))) != dg.j(dg.i(dg.j(x))), ((x,) for x in H))
    rep.results["iji=jij"] = (w is None, w)

    pairs = [(x, y) for x in H for y in H if G.composable(x, y)]

    def fails_iii(x, y):
        return not G.composable(dg.k(x), dg.j(y))

    w = first(fails_iii, pairs)
    rep.results["composable"] = (w is None, w)

    hpairs = [(x, y) for x, y in pairs if G.compose(x, y) in hset]

    def fails_iv(x, y):
        return not dg.h_composable(dg.k(x), dg.j(y))

    w = first(fails_iv, hpairs)
    rep.results["H-composable"] = (w is None, w)

    def fails_id(x, y):
        if fails_iv(x, y):
            return True
        lhs = dg.j(G.compose(x, y))
        jx = dg.j(x)
        t = dg.j(G.compose(dg.k(x), dg.j(y)))
        if not G.composable(jx, t):
            return True
        return G.compose(jx, t) != lhs

    w = first(fails_id, hpairs)
    rep.results["j(xy)"] = (w is None, w)

    gen = G.generated_by(H)
    missing = [m for m in G.morphisms if m not in gen]
    rep.results["generates"] = (not missing, (missing[0],) if missing else None)
    return rep


def k_identity_failures(dg: DeltaGroupoid) -> List[Tuple]:
    """H-composable pairs violating k(xy) = k(k(x)j(y)) k(y)."""
    G = dg.G
    bad = []
    for x in dg.H:
        for y in dg.H:
            if not dg.h_composable(x, y):
                continue
            lhs = dg.k(G.compose(x, y))
            m = G.compose(dg.k(x), dg.j(y))
            if m not in dg.D:
                bad.append((x, y))
                continue
            a, b = dg.k(m), dg.k(y)
            if not G.composable(a, b) or G.compose(a, b) != lhs:
                bad.append((x, y))
    return bad


# ---------------------------------------------------------------------------
# example families

def coarse(group: FiniteGroup) -> DeltaGroupoid:
    """Coarse groupoid G^2 with H = G^2 and j(f, g) = (f^-1, f^-1 g)."""
    els = group.elements
    morph = [(f, g) for f in els for g in els]
    G = FiniteGroupoid.from_functions(
        els, morph, lambda m: m[0], lambda m: m[1],
        lambda x, y: (x[0], y[1]), lambda m: (m[1], m[0]), lambda o: (o, o))
    inv = group.inv
    j = {(f, g): (inv(f), group.mul(inv(f), g)) for f, g in morph}
    return DeltaGroupoid(G, DeltaData(morph, j), f"coarse({group.name})")


def triples(X: Sequence) -> DeltaGroupoid:
    """X^3 with dom(a,b,c) = (a,b), cod = (a,c) and j(a,b,c) = (b,a,c)."""
    X = list(X)
    morph = list(itertools.product(X, repeat=3))
    objs = list(itertools.product(X, repeat=2))
    G = FiniteGroupoid.from_functions(
        objs, morph, lambda m: (m[0], m[1]), lambda m: (m[0], m[2]),
        lambda x, y: (x[0], x[1], y[2]), lambda m: (m[0], m[2], m[1]), lambda o: (o[0], o[1], o[1]))
    j = {(a, b, c): (b, a, c) for a, b, c in morph}
    return DeltaGroupoid(G, DeltaData(morph, j), f"triple({len(X)})")


def truncated_tetrahedron() -> DeltaGroupoid:
    """Edge-path groupoid of the four triangular faces of a truncated tetrahedron.

    Objects are the truncated vertices (v, w) lying on the triangle of vertex v
    next to the long edge vw; H is the set of the 24 oriented short edges.
    """
    V = range(4)
    objs = [(v, w) for v in V for w in V if w != v]
    morph = [(v, a, b) for v in V for a in V for b in V if v not in (a, b)]
    G = FiniteGroupoid.from_functions(
        objs, morph, lambda m: (m[0], m[1]), lambda m: (m[0], m[2]),
        lambda x, y: (x[0], x[1], y[2]), lambda m: (m[0], m[2], m[1]), lambda o: (o[0], o[1], o[1]))
    H = [m for m in morph if m[1] != m[2]]
    j = {(v, a, b): (a, v, b) for v, a, b in H}
    return DeltaGroupoid(G, DeltaData(H, j), "truncated-tetrahedron")


def zmod_units(n: int) -> List[int]:
    from math import gcd
    return [a for a in range(n) if gcd(a, n) == 1 and (n > 1 or a == 0)]


def ar(n: int) -> DeltaGroupoid:
    """Delta-group AR for R = Z/n: H = (1 - R*) & R*, k(x) = 1 - x, j = iki."""
    units = zmod_units(n)
    uset = set(units)
    H = [x for x in units if (1 - x) % n in uset]
    grp = FiniteGroup(units, lambda a, b: (a * b) % n, f"(Z/{n})*")
    sub = grp.subgroup_generated(H)
    G = FiniteGroupoid.from_group(grp, sub)

    def j(x):  # (1 - x^-1)^-1
        return pow((1 - pow(x, -1, n)) % n, -1, n)

    D = DeltaData(H, {x: j(x) for x in H})
    return DeltaGroupoid(G, D, f"AR(Z/{n})")


def br(n: int) -> DeltaGroupoid:
    """Delta-group BR for R = Z/n inside R x| R*: H = R* x R*, k(x,y) = (y,x)."""
    units = zmod_units(n)
    els = [(x, y) for x in range(n) for y in units]
    grp = FiniteGroup(els, lambda p, q: ((p[0] + p[1] * q[0]) % n, (p[1] * q[1]) % n), f"BR(Z/{n})")
    H = [(x, y) for x in units for y in units]
    sub = grp.subgroup_generated(H)
    G = FiniteGroupoid.from_group(grp, sub)

    def j(m):  # iki(x, y) = (x^-1, -x^-1 y)
        x, y = m
        xi = pow(x, -1, n)
        return (xi, (-xi * y) % n)

    D = DeltaData(H, {m: j(m) for m in H})
    return DeltaGroupoid(G, D, f"BR(Z/{n})")


def is_malnormal(A: FiniteGroup, B: Sequence) -> bool:
    Bs = set(B)
    for a in A.elements:
        if a in Bs:
            continue
        conj = {A.mul(A.mul(a, b), A.inv(a)) for b in B}
        if conj & Bs != {A.identity}:
            return False
    return True


def malnormal(A: FiniteGroup, B: Sequence) -> DeltaGroupoid:
    """Groupoid of the free B-action on the non-trivial left cosets of B."""
    B = list(B)
    if set(A.subgroup_generated(B)) != set(B):
        raise MalformedInput("B is not a subgroup")
    if not is_malnormal(A, B):
        raise MalformedInput("B is not malnormal in A")

    def coset(a):
        return frozenset(A.mul(a, b) for b in B)

    Bset = frozenset(B)
    cosets = []
    for a in A.elements:
        c = coset(a)
        if c != Bset and c not in cosets:
            cosets.append(c)

    def act(b, c):
        return frozenset(A.mul(b, x) for x in c)

    def orbit(pair):
        return frozenset((act(b, pair[0]), act(b, pair[1])) for b in B)

    objs, seen = [], set()
    for c in cosets:
        o = frozenset(act(b, c) for b in B)
        if o not in seen:
            seen.add(o)
            objs.append(o)
    morph, seenm = [], set()
    for c1 in cosets:
        for c2 in cosets:
            o = orbit((c1, c2))
            if o not in seenm:
                seenm.add(o)
                morph.append(o)

    def dom(m):
        c1 = next(iter(m))[0]
        return next(o for o in objs if c1 in o)

    def cod(m):
        c2 = next(iter(m))[1]
        return next(o for o in objs if c2 in o)

    def compose(x, y):
        for p in x:
            for q in y:
                if p[1] == q[0]:
                    return orbit((p[0], q[1]))
        raise ValueError("not composable")

    def inv(m):
        p = next(iter(m))
        return orbit((p[1], p[0]))

    def ident(o):
        c = next(iter(o))
        return orbit((c, c))

    G = FiniteGroupoid.from_functions(objs, morph, dom, cod, compose, inv, ident)
    ids = set(G.ident.values())
    H = [m for m in morph if m not in ids]
    j = {}
    for m in H:
        images = set()
        for c1, c2 in m:
            for a in c1:
                ai = A.inv(a)
                images.add(orbit((coset(ai), act(ai, c2))))
        if len(images) != 1:
            raise MalformedInput("j is not well defined on B-orbits")
        j[m] = images.pop()
    return DeltaGroupoid(G, DeltaData(H, j), f"malnormal({A.name},{len(B)})")


def frobenius_20() -> Tuple[FiniteGroup, List]:
    """Z/5 x| Z/4 (affine maps x -> ax + b of Z/5) with its malnormal subgroup Z/4."""
    els = [(a, b) for a in range(1, 5) for b in range(5)]
    # (a, b) . (c, d): apply (c, d) first then (a, b)
    grp = FiniteGroup(els, lambda p, q: ((p[0] * q[0]) % 5, (p[0] * q[1] + p[1]) % 5), "F20")
    B = [(a, 0) for a in range(1, 5)]
    return grp, B


def alternating_4() -> Tuple[FiniteGroup, List]:
    A = FiniteGroup.from_permutations([(1, 2, 0, 3), (0, 2, 3, 1)], "A4")
    B = A.subgroup_generated([(1, 2, 0, 3)])
    return A, B


def build_example(kind: str, size: int = 2) -> DeltaGroupoid:
    """Example family by name: coarse, triple, ar, br, malnormal, truncated.

    ``size`` is the group order index for coarse (into :func:`small_groups`
    when it names an order with one group, else cyclic), |X| for triple, n
    for ar/br (R = Z/n) and an example index for malnormal.
    """
    if kind == "coarse":
        return coarse(FiniteGroup.cyclic(size))
    if kind == "triple":
        return triples(range(size))
    if kind == "ar":
        return ar(size)
    if kind == "br":
        return br(size)
    if kind == "malnormal":
        examples = malnormal_examples()
        return examples[size % len(examples)]
    if kind == "truncated":
        return truncated_tetrahedron()
    raise ValueError(f"unknown example family {kind!r}")


def malnormal_examples() -> List[DeltaGroupoid]:
    S3 = FiniteGroup.symmetric(3)
    out = [malnormal(S3, S3.subgroup_generated([(1, 0, 2)])),
           malnormal(S3, [S3.identity])]
    A4, B = alternating_4()
    out.append(malnormal(A4, B))
    F20, B20 = frobenius_20()
    out.append(malnormal(F20, B20))
    return out
