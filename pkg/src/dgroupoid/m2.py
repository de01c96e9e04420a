"""Formal M2-rings of the form R(K, x, y, p, q).

R(K, x, y, p, q) = K<a, b | a^2 = xa - p, b^2 = yb - q> is free over K[z] on
1, a, b, ab, where z = ya + xb - ab - ba is central. Coefficients are
:class:`~dgroupoid.arith.Poly` values in a ring that contains z as a variable
(or any expression playing its role).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import NotAUnit, Poly, PolyRing
from .report import Report

BASIS = ("1", "a", "b", "ab")


class M2Ring:
    """R(K, x, y, p, q) with all parameters and z given as elements of ``K``."""

    def __init__(self, K: PolyRing, x, y, p, q, z, trace: Optional[Sequence] = None):
        self.K = K
        c = self._c
        self.x, self.y, self.p, self.q, self.z = c(x), c(y), c(p), c(q), c(z)
        x, y, p, q, z = self.x, self.y, self.p, self.q, self.z
        zero, one = K.zero(), K.one()
        # products of basis elements; rows are (1, a, b, ab) coordinates
        self._table = {
            ("a", "a"): (-p, x, zero, zero),
            ("a", "b"): (zero, zero, zero, one),
            ("a", "ab"): (zero, zero, -p, x),
            ("b", "a"): (-z, y, x, -one),
            ("b", "b"): (-q, zero, y, zero),
            ("b", "ab"): (-x * q, q, x * y - z, zero),
            ("ab", "a"): (-y * p, x * y - z, p, zero),
            ("ab", "b"): (zero, -q, zero, y),
            ("ab", "ab"): (-p * q, zero, zero, x * y - z),
        }
        self.trace_table = tuple(c(t) for t in trace) if trace is not None else (
            c(2), x, y, x * y - z)

    def _c(self, v) -> Poly:
        return self.K.const(v) if isinstance(v, int) else v

    @classmethod
    def generic(cls) -> "M2Ring":
        K = PolyRing(["x", "y", "p", "q", "z"])
        return cls(K, *(K.var(n) for n in ("x", "y", "p", "q", "z")))

    def with_trace(self, trace: Sequence) -> "M2Ring":
        return M2Ring(self.K, self.x, self.y, self.p, self.q, self.z, trace)

    # elements
    def elem(self, c1=0, ca=0, cb=0, cab=0) -> "M2Elem":
        return M2Elem(self, tuple(self._c(v) for v in (c1, ca, cb, cab)))

    def scalar(self, u) -> "M2Elem":
        return self.elem(u)

    def one(self) -> "M2Elem":
        return self.elem(1)

    def zero(self) -> "M2Elem":
        return self.elem()

    @property
    def a(self) -> "M2Elem":
        return self.elem(0, 1)

    @property
    def b(self) -> "M2Elem":
        return self.elem(0, 0, 1)

    def basis(self) -> List["M2Elem"]:
        return [self.elem(*[int(i == k) for i in range(4)]) for k in range(4)]

    def mul_basis(self, i: int, j: int) -> Tuple[Poly, ...]:
        zero, one = self.K.zero(), self.K.one()
        if i == 0:
            return tuple(one if k == j else zero for k in range(4))
        if j == 0:
            return tuple(one if k == i else zero for k in range(4))
        return self._table[(BASIS[i], BASIS[j])]

    # trace data
    def trace(self, e: "M2Elem") -> Poly:
        return sum((c * t for c, t in zip(e.coeffs, self.trace_table)), self.K.zero())

    def qform(self, e: "M2Elem") -> "M2Elem":
        """Q(e) = L(e) e - e^2 (central when the trace is a trace function)."""
        return e.scale(self.trace(e)) - e * e

    def bilinear(self, e1: "M2Elem", e2: "M2Elem") -> "M2Elem":
        return self.qform(e1 + e2) - self.qform(e1) - self.qform(e2)

    def rep4(self, e: "M2Elem") -> List[List[Poly]]:
        """Left multiplication matrix; column k is e * basis_k."""
        cols = [(e * b).coeffs for b in self.basis()]
        return [[cols[k][r] for k in range(4)] for r in range(4)]

    def inverse(self, e: "M2Elem") -> "M2Elem":
        qe = self.qform(e)
        if not qe.is_scalar():
            raise NotAUnit("Q(e) is not central")
        u = qe.coeffs[0]
        if not u.is_unit():
            raise NotAUnit(f"Q(e) = {u} is not a unit")
        return (self.scalar(self.trace(e)) - e).scale(u.inverse())


class M2Elem:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: M2Ring, coeffs: Tuple[Poly, ...]):
        self.ring = ring
        self.coeffs = coeffs

    def _coerce(self, other) -> "M2Elem":
        if isinstance(other, M2Elem):
            return other
        if isinstance(other, (int, Poly)):
            return self.ring.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return M2Elem(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return M2Elem(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, u) -> "M2Elem":
        return M2Elem(self.ring, tuple(u * a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        R = self.ring
        out = [R.K.zero()] * 4
        for i, ci in enumerate(self.coeffs):
            if ci.is_zero():
                continue
            for j, cj in enumerate(other.coeffs):
                if cj.is_zero():
                    continue
                cij = ci * cj
                for k, t in enumerate(R.mul_basis(i, j)):
                    if not t.is_zero():
                        out[k] = out[k] + cij * t
        return M2Elem(R, tuple(out))

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        r = self.ring.one()
        for _ in range(n):
            r = r * self
        return r

    def inverse(self) -> "M2Elem":
        return self.ring.inverse(self)

    def is_scalar(self) -> bool:
        return all(c.is_zero() for c in self.coeffs[1:])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"M2Elem({self})"

    def __str__(self):
        parts = []
        for name, c in zip(BASIS, self.coeffs):
            if c.is_zero():
                continue
            s = str(c)
            if name == "1":
                parts.append(s)
            elif s == "1":
                parts.append(name)
            elif s == "-1":
                parts.append("-" + name)
            elif len(c.terms) == 1:
                parts.append(f"{s}*{name}")
            else:
                parts.append(f"({s})*{name}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def commutator(u, v):
    return u * v - v * u


def anticommutator(u, v):
    return u * v + v * u


# ---------------------------------------------------------------------------
# checks

SYMMETRIC_IDENTITIES = ("L(L(x))=2L(x)", "Q(x) central", "L(Q(x))=2Q(x)", "(x,y)=L(x)L(y)-L(xy)",
                        "L(xy)=L(yx)", "Q(xy)=Q(x)Q(y)", "xy+yx=-(x,y)+L(x)y+L(y)x")


def symmetric_identities(samples, L, is_central, one, title="symmetric formal M2-ring identities") -> Report:
    """Check the symmetric formal M2 identities on all pairs of ``samples``.

    ``L`` maps an element to its (central) trace, as a ring element.
    """
    rep = Report(title)
    rep.add("L(1)=2", L(one) == one + one)
    failures: Dict[str, Tuple] = {}

    def note(name, cond, witness):
        if not cond and name not in failures:
            failures[name] = witness

    Q = lambda x: L(x) * x - x * x
    for n, x in enumerate(samples):
        Lx, qx = L(x), Q(x)
        note("L(L(x))=2L(x)", L(Lx) == Lx + Lx, n)
        note("Q(x) central", is_central(qx), n)
        note("L(Q(x))=2Q(x)", L(qx) == qx + qx, n)
        for m, y in enumerate(samples):
            Ly, xy, yx = L(y), x * y, y * x
            form = Q(x + y) - qx - Q(y)
            note("(x,y)=L(x)L(y)-L(xy)", form == Lx * Ly - L(xy), (n, m))
            note("L(xy)=L(yx)", L(xy) == L(yx), (n, m))
            note("Q(xy)=Q(x)Q(y)", Q(xy) == qx * Q(y), (n, m))
            note("xy+yx=-(x,y)+L(x)y+L(y)x", xy + yx == -form + Lx * y + Ly * x, (n, m))
    for name in SYMMETRIC_IDENTITIES:
        rep.add(name, name not in failures, f"samples {failures.get(name)}")
    return rep


def check_symmetric(R: M2Ring, samples: Optional[Sequence[M2Elem]] = None) -> Report:
    """Symmetric formal M2 identities on all pairs of ``samples`` (default: basis)."""
    samples = list(samples) if samples is not None else R.basis()
    return symmetric_identities(samples, lambda e: R.scalar(R.trace(e)), M2Elem.is_scalar, R.one())


def monomials(R: M2Ring, max_degree: int) -> List[Tuple[str, M2Elem]]:
    """All words in a, b of length <= max_degree, reduced to normal form."""
    out = [("1", R.one())]
    frontier = [("", R.one())]
    for _ in range(max_degree):
        nxt = []
        for w, e in frontier:
            for letter, g in (("a", R.a), ("b", R.b)):
                nxt.append((w + letter, e * g))
        out.extend(nxt)
        frontier = nxt
    return out


def mat_mul(A, B):
    n = len(A)
    zero = A[0][0] * 0
    return [[sum((A[i][k] * B[k][j] for k in range(n)), zero) for j in range(n)] for i in range(n)]


def check_rep4(R: M2Ring, max_degree: int = 3) -> Report:
    """Homomorphism property and faithfulness of rep4 on low-degree words."""
    rep = Report("4x4 representation")
    B = R.basis()
    hom = all(R.rep4(x * y) == mat_mul(R.rep4(x), R.rep4(y)) for x in B for y in B)
    rep.add("rep4(xy)=rep4(x)rep4(y) on basis pairs", hom)
    assoc = all((x * y) * w == x * (y * w) for x in B for y in B for w in B)
    rep.add("associativity on basis triples", assoc)
    words = monomials(R, max_degree)
    bad = None
    for w1, e1 in words:
        for w2, e2 in words:
            if (e1 == e2) != (R.rep4(e1) == R.rep4(e2)):
                bad = (w1, w2)
                break
        if bad:
            break
    rep.add(f"rep4 faithful on words of length <= {max_degree}", bad is None, str(bad))
    # rep4 of an element is determined by its first column, which is the element
    rep.add("first column of rep4(e) is e",
            all([row[0] for row in R.rep4(e)] == list(e.coeffs) for _, e in words))
    return rep


# noncommutative polynomials over a commutative coefficient ring, for checking
# identities that hold in every ring

class FreeAlg:
    __slots__ = ("K", "terms")

    def __init__(self, K: PolyRing, terms: Dict[Tuple[str, ...], Poly]):
        self.K = K
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    @classmethod
    def letter(cls, K, name):
        return cls(K, {(name,): K.one()})

    @classmethod
    def scalar(cls, K, u):
        return cls(K, {(): u})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, self.K.zero()) + c
        return FreeAlg(self.K, out)

    def __neg__(self):
        return FreeAlg(self.K, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: Dict[Tuple[str, ...], Poly] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, self.K.zero()) + c1 * c2
        return FreeAlg(self.K, out)

    def is_zero(self):
        return not self.terms


def centrality_check(R: Optional[M2Ring] = None) -> Report:
    """The bracket identities [a,z] = [p,b] and [b,z] = [q,a].

    Checked in the free algebra over Z[x, y] (where z, p, q are the defining
    expressions) and as element identities in R(K, x, y, p, q).
    """
    rep = Report("centrality of z")
    K = PolyRing(["x", "y"])
    a, b = FreeAlg.letter(K, "a"), FreeAlg.letter(K, "b")
    x, y = FreeAlg.scalar(K, K.var("x")), FreeAlg.scalar(K, K.var("y"))
    z = y * a + x * b - a * b - b * a
    p = x * a - a * a
    q = y * b - b * b
    br = lambda u, v: u * v - v * u
    rep.add("free algebra: [a,z]-[p,b]=0", (br(a, z) - br(p, b)).is_zero())
    rep.add("free algebra: [b,z]-[q,a]=0", (br(b, z) - br(q, a)).is_zero())
    R = R or M2Ring.generic()
    a, b = R.a, R.b
    z = a.scale(R.y) + b.scale(R.x) - a * b - b * a
    p = a.scale(R.x) - a * a
    q = b.scale(R.y) - b * b
    rep.add("z = ya+xb-ab-ba reduces to the parameter z", z == R.scalar(R.z))
    rep.add("R: [a,z]-[p,b]=0", (commutator(a, z) - commutator(p, b)).is_zero())
    rep.add("R: [b,z]-[q,a]=0", (commutator(b, z) - commutator(q, a)).is_zero())
    rep.add("R: za-az=0", commutator(z, a).is_zero())
    rep.add("R: zb-bz=0", commutator(z, b).is_zero())
    return rep


# ---------------------------------------------------------------------------
# the figure-eight specialization

def f8_ring() -> M2Ring:
    """R(Z[c, c^-1], -1, -1, -c, -c^-1) with coefficients in Z[c, c^-1, d], z = -d."""
    K = PolyRing(["c", "d"], laurent=["c"])
    c, d = K.var("c"), K.var("d")
    return M2Ring(K, -1, -1, -c, -K.var("c", -1), -d)
