"""The A' figure-eight model modulo J = Z(s-1) + Zz and the Hurwitz order.

Quaternions are stored with Fraction coordinates (1, i, j, k). A witness is a
pair of quaternions (alpha, gamma) with

    alpha^2 = alpha - 1,   gamma^2 = -2,   alpha gamma + gamma alpha = 2 + gamma,

found by bounded search over half-integer coordinates. The Z-span of
1, alpha, gamma, alpha gamma is then compared with the Hurwitz order by
containment plus covolume.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from .algebra import LatticeRing
from .lattice import det
from .report import Report


@dataclass(frozen=True, eq=False)
class Quaternion:
    w: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    @classmethod
    def of(cls, *coords) -> "Quaternion":
        return cls(*(Fraction(c) for c in coords))

    def __add__(self, o):
        o = _q(o)
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, o):
        return self + (-_q(o))

    def __rsub__(self, o):
        return _q(o) - self

    def __mul__(self, o):
        o = _q(o)
        a1, b1, c1, d1 = self.coords()
        a2, b2, c2, d2 = o.coords()
        return Quaternion(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                          a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                          a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    def __rmul__(self, o):
        return _q(o) * self

    def __eq__(self, o):
        if not isinstance(o, (Quaternion, int, Fraction)):
            return NotImplemented
        return self.coords() == _q(o).coords()

    def __hash__(self):
        return hash(self.coords())

    def coords(self) -> Tuple[Fraction, ...]:
        return (self.w, self.x, self.y, self.z)

    def norm(self) -> Fraction:
        return sum(c * c for c in self.coords())

    def doubled(self) -> Tuple[int, ...]:
        out = []
        for c in self.coords():
            d = 2 * c
            if d.denominator != 1:
                raise ValueError(f"{self} is not in (1/2)Z^4")
            out.append(int(d))
        return tuple(out)

    def is_hurwitz(self) -> bool:
        try:
            v = self.doubled()
        except ValueError:
            return False
        return len({c % 2 for c in v}) == 1

    def __str__(self):
        parts = []
        for c, u in zip(self.coords(), ("", "i", "j", "k")):
            if c:
                parts.append(f"{c}{u}" if u else str(c))
        return " + ".join(parts) or "0"


def _q(o) -> Quaternion:
    return o if isinstance(o, Quaternion) else Quaternion.of(o, 0, 0, 0)


def half_integer_quaternions(bound: int = 2) -> Iterator[Quaternion]:
    """All quaternions with coordinates in {k/2 : |k/2| <= bound}."""
    vals = [Fraction(k, 2) for k in range(-2 * bound, 2 * bound + 1)]
    for c in itertools.product(vals, repeat=4):
        yield Quaternion(*c)


HURWITZ_COVOLUME = 8  # determinant of the Hurwitz order in doubled coordinates


def lattice_det(gens: List[Quaternion]) -> int:
    return abs(det([list(q.doubled()) for q in gens]))


@dataclass
class HurwitzWitness:
    alpha: Quaternion
    gamma: Quaternion

    def images(self) -> Dict[str, Quaternion]:
        return {"1": Quaternion.of(1, 0, 0, 0), "a": self.alpha, "g": self.gamma,
                "ag": self.alpha * self.gamma}


def relations_hold(alpha: Quaternion, gamma: Quaternion) -> bool:
    return (alpha * alpha == alpha - 1 and gamma * gamma == -2
            and alpha * gamma + gamma * alpha == 2 + gamma)


def find_witness(bound: int = 2) -> Optional[HurwitzWitness]:
    """First pair (alpha, gamma) in search order whose span is the Hurwitz order."""
    cands = list(half_integer_quaternions(bound))
    alphas = [q for q in cands if q * q == q - 1]
    gammas = [q for q in cands if q * q == -2]
    for alpha in alphas:
        for gamma in gammas:
            if alpha * gamma + gamma * alpha != 2 + gamma:
                continue
            w = HurwitzWitness(alpha, gamma)
            gens = list(w.images().values())
            if all(q.is_hurwitz() for q in gens) and lattice_det(gens) == HURWITZ_COVOLUME:
                return w
    return None


def f8a_mod_j() -> LatticeRing:
    from .figure_eight import build_f8a
    A = build_f8a()
    return A.quotient([A.gen("s") - 1, A.gen("z")])


def hurwitz_check(bound: int = 2) -> Tuple[Optional[HurwitzWitness], Report]:
    rep = Report("A' model modulo J and the Hurwitz order")
    from .figure_eight import build_f8a
    A = build_f8a()
    s, z = A.gen("s"), A.gen("z")
    J = A.lattice.with_generators([(s - 1).vec, z.vec])
    ideal = A.two_sided_ideal([(s - 1).vec, z.vec])
    rep.add("J = Z(s-1) + Zz is a two-sided ideal", ideal == J)
    P = f8a_mod_j()
    rep.add("quotient is free of rank 4", P.signature() == ((), 4), str(P.signature()))
    a, g = P.gen("a"), P.gen("g")
    rep.add("a^2=a-1, g^2=-2, ag+ga=2+g in the quotient",
            a * a == a - 1 and g * g == -2 and a * g + g * a == 2 + g)
    w = find_witness(bound)
    rep.add(f"witness found with search bound {bound}", w is not None)
    if w is None:
        return None, rep
    rep.add("witness satisfies the relations", relations_hold(w.alpha, w.gamma),
            f"alpha={w.alpha}, gamma={w.gamma}")
    img = w.images()
    gens = list(img.values())
    rep.add("images lie in the Hurwitz order", all(q.is_hurwitz() for q in gens))
    rep.add("covolume equals that of the Hurwitz order", lattice_det(gens) == HURWITZ_COVOLUME,
            str(lattice_det(gens)))
    # multiplication on all basis pairs of the quotient, written in 1, a, g, ag
    basis = {n: P.gen(n) if n != "1" else P.one() for n in img}
    fb = ["1", "a", "g", "ag"]
    ok = True
    for x in fb:
        for y in fb:
            prod = basis[x] * basis[y]
            coords = P_coords(P, prod, fb)
            lhs = sum((img[n] * k for n, k in zip(fb, coords) if k), Quaternion.of(0, 0, 0, 0))
            ok = ok and lhs == img[x] * img[y]
    rep.add("multiplication preserved on all 16 basis pairs", ok)
    return w, rep


def P_coords(P: LatticeRing, x, fb) -> List[int]:
    """Coordinates of x in the Z-basis ``fb`` of P, solved modulo the relations."""
    from .lattice import solve, transpose
    cols = [P.gen(n).vec if n != "1" else P.one().vec for n in fb] + list(P.lattice.basis)
    sol = solve(transpose(cols), list(x.vec), len(cols))
    if sol is None:
        raise ValueError(f"{x} is not in the span of {fb}")
    return list(sol[:len(fb)])
