"""Finite-rank rings given by integer structure constants.

A :class:`LatticeRing` is Z^n modulo a relation lattice, with a bilinear
product fixed on the standard basis. Elements are kept reduced modulo the
Hermite basis of the relations, so equality is structural. Quotients simply
enlarge the relation lattice, which keeps the original basis names available
for printing and comparison.
"""
from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .arith import NotInvertible
from .lattice import (MixedLattice, Quotient, Vector, det, hnf, kernel, lattice_saturate,
                      module_quotient, solve, transpose)


class StructureError(ArithmeticError):
    """Inconsistent structure constants or an ill-defined induced product."""


class LatticeRing:
    def __init__(self, names: Sequence[str], table: Sequence[Sequence[Sequence[int]]],
                 one: Sequence[int], relations: Sequence[Sequence[int]] = (),
                 torsion: Sequence[Sequence[int]] = (), display_order: Optional[Sequence[int]] = None):
        self.names: Tuple[str, ...] = tuple(names)
        self.n = len(self.names)
        self.table = [[tuple(v) for v in row] for row in table]
        self.torsion = tuple(tuple(t) for t in torsion)
        self.lattice = MixedLattice(self.n, tuple(tuple(r) for r in relations), self.torsion)
        self._one = tuple(one)
        self.display_order = list(display_order) if display_order is not None else list(range(self.n))[::-1]
        self.trace_table: Optional[List[Vector]] = None

    # -- construction helpers ------------------------------------------------
    def __call__(self, v) -> "LElem":
        if isinstance(v, dict):
            return self.from_dict(v)
        return LElem(self, v)

    def from_dict(self, coeffs: Mapping[str, int]) -> "LElem":
        v = [0] * self.n
        for k, c in coeffs.items():
            v[self.names.index(k)] += c
        return LElem(self, v)

    def basis(self) -> List["LElem"]:
        return [self.gen(i) for i in range(self.n)]

    def gen(self, i) -> "LElem":
        if isinstance(i, str):
            i = self.names.index(i)
        v = [0] * self.n
        v[i] = 1
        return LElem(self, v)

    def one(self) -> "LElem":
        return LElem(self, self._one)

    def zero(self) -> "LElem":
        return LElem(self, (0,) * self.n)

    def from_int(self, k: int) -> "LElem":
        return LElem(self, tuple(k * a for a in self._one))

    def reduce(self, v) -> Vector:
        return self.lattice.reduce(v)

    # -- products ------------------------------------------------------------
    def mul_vec(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        out = [0] * self.n
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def left_matrix(self, x: Sequence[int]) -> List[List[int]]:
        """Matrix (columns = images of basis vectors) of y -> x*y."""
        cols = [self.mul_vec(x, e) for e in _unit_vectors(self.n)]
        return transpose(cols)

    def right_matrix(self, x: Sequence[int]) -> List[List[int]]:
        cols = [self.mul_vec(e, x) for e in _unit_vectors(self.n)]
        return transpose(cols)

    # -- ideals and quotients -----------------------------------------------
    def two_sided_ideal(self, gens: Sequence[Sequence[int]]) -> MixedLattice:
        acts = []
        for e in _unit_vectors(self.n):
            acts.append(lambda v, e=e: self.mul_vec(e, v))
            acts.append(lambda v, e=e: self.mul_vec(v, e))
        start = self.lattice.with_generators([tuple(g) for g in gens])
        return lattice_saturate(start, acts)

    def quotient(self, gens) -> "LatticeRing":
        gens = [g.vec if isinstance(g, LElem) else tuple(g) for g in gens]
        return self.quotient_by_lattice(self.two_sided_ideal(gens))

    def quotient_by_lattice(self, ideal: MixedLattice) -> "LatticeRing":
        q = LatticeRing(self.names, self.table, self._one, ideal.basis, self.torsion,
                        self.display_order)
        q.check_well_defined()
        if self.trace_table is not None:
            q.trace_table = self.trace_table
        return q

    def check_well_defined(self):
        for v in self.lattice.basis:
            for e in _unit_vectors(self.n):
                for w in (self.mul_vec(v, e), self.mul_vec(e, v)):
                    if not self.lattice.contains(w):
                        raise StructureError(f"relation {v} is not an ideal element")

    def module(self) -> Quotient:
        return module_quotient(MixedLattice(self.n, (), self.torsion), self.lattice)

    def signature(self) -> Tuple[Tuple[int, ...], int]:
        q = self.module()
        return q.torsion, q.free_rank

    # -- verification -------------------------------------------------------
    def associativity_failures(self, limit: int = 1) -> List[Tuple[int, int, int]]:
        bad = []
        es = _unit_vectors(self.n)
        prods = [[self.mul_vec(a, b) for b in es] for a in es]
        for i in range(self.n):
            for j in range(self.n):
                ij = prods[i][j]
                for k in range(self.n):
                    lhs = self.reduce(self.mul_vec(ij, es[k]))
                    rhs = self.reduce(self.mul_vec(es[i], prods[j][k]))
                    if lhs != rhs:
                        bad.append((i, j, k))
                        if len(bad) >= limit:
                            return bad
        return bad

    def center(self) -> MixedLattice:
        """Lattice of elements commuting with every basis element."""
        rows = []
        for e in _unit_vectors(self.n):
            lm = self.left_matrix(e)
            rm = self.right_matrix(e)
            rows.extend([a - b for a, b in zip(r1, r2)] for r1, r2 in zip(rm, lm))
        # x in center iff rows * x lies in the relation lattice of each copy
        rel = self.lattice.basis
        blocks = len(rows) // self.n
        nrel = len(rel)
        width = self.n + blocks * nrel
        system = []
        for bi in range(blocks):
            for r in range(self.n):
                row = list(rows[bi * self.n + r])
                extra = [0] * (blocks * nrel)
                for t, relv in enumerate(rel):
                    extra[bi * nrel + t] = -relv[r]
                system.append(row + extra)
        ker = kernel(system, width)
        vecs = [k[:self.n] for k in ker]
        return self.lattice.with_generators(vecs)

    def span_of_orbit(self, start: Sequence[int], gens: Sequence[Sequence[int]]) -> MixedLattice:
        acts = [lambda v, g=g: self.mul_vec(g, v) for g in gens]
        return lattice_saturate(self.lattice.with_generators([tuple(start)]), acts)

    def solve_left(self, x: Sequence[int], target: Sequence[int]) -> Optional[Vector]:
        """Some y with x*y = target modulo relations, or None."""
        lm = self.left_matrix(x)
        rel = self.lattice.basis
        system = [list(row) + [r[i] for r in rel] for i, row in enumerate(lm)]
        sol = solve(system, target, self.n + len(rel))
        if sol is None:
            return None
        return self.reduce(sol[:self.n])

    # -- trace ------------------------------------------------------------
    def set_trace(self, values: Mapping[str, "LElem"]):
        tbl = []
        for name in self.names:
            tbl.append(values[name].vec if name in values else (0,) * self.n)
        self.trace_table = tbl

    def trace(self, x: "LElem") -> "LElem":
        if self.trace_table is None:
            raise StructureError("ring has no trace function")
        out = [0] * self.n
        for a, t in zip(x.vec, self.trace_table):
            if a:
                for k, c in enumerate(t):
                    out[k] += a * c
        return LElem(self, out)

    def check_trace_defined(self):
        for v in self.lattice.basis:
            if any(self.trace(LElem(self, v)).vec):
                raise StructureError("trace does not vanish on the relation lattice")

    def is_central(self, x: "LElem") -> bool:
        return all(x * e == e * x for e in self.basis())

    def free_basis(self) -> List[Vector]:
        """A Z-basis of the quotient module, given as ambient vectors.

        Standard basis vectors off the Hermite pivots are used when every pivot
        is 1 (the quotient is then free with those coordinates); otherwise the
        Smith section is used.
        """
        rel = self.lattice.basis
        piv = {_pivot(r): r[_pivot(r)] for r in rel}
        if all(p == 1 for p in piv.values()):
            return [e for i, e in enumerate(_unit_vectors(self.n)) if i not in piv]
        q = self.module()
        return [q.section(e) for e in _unit_vectors(q.rank)]

    def format(self, v: Sequence[int], symmetric_torsion: bool = True) -> str:
        v = self.reduce(v)
        mods = {}
        for r in self.lattice.basis:
            p = _pivot(r)
            if all(a == 0 for k, a in enumerate(r) if k != p):
                mods[p] = r[p]
        parts = []
        for i in self.display_order:
            c = v[i]
            m = mods.get(i)
            if m and symmetric_torsion and c > m // 2:
                c -= m
            if not c:
                continue
            name = self.names[i]
            mag = abs(c)
            s = name if name != "1" and mag == 1 else (str(mag) if name == "1" else f"{mag}*{name}")
            parts.append(("-" if c < 0 else "+", s))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out


def _pivot(row):
    for i, a in enumerate(row):
        if a:
            return i
    return -1


def _unit_vectors(n: int) -> List[Vector]:
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


class LElem:
    __slots__ = ("ring", "vec")

    def __init__(self, ring: LatticeRing, vec):
        self.ring = ring
        self.vec = ring.reduce(tuple(vec))

    def _coerce(self, other):
        if isinstance(other, LElem):
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LElem(self.ring, [a + b for a, b in zip(self.vec, other.vec)])

    __radd__ = __add__

    def __neg__(self):
        return LElem(self.ring, [-a for a in self.vec])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LElem(self.ring, [a * other for a in self.vec])
        if not isinstance(other, LElem):
            return NotImplemented
        return LElem(self.ring, self.ring.mul_vec(self.vec, other.vec))

    def __rmul__(self, other):
        if isinstance(other, int):
            return LElem(self.ring, [a * other for a in self.vec])
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        r = self.ring.one()
        for _ in range(n):
            r = r * self
        return r

    def inverse(self) -> "LElem":
        one = self.ring.one().vec
        y = self.ring.solve_left(self.vec, one)
        if y is None:
            raise NotInvertible(f"{self} has no right inverse")
        inv = LElem(self.ring, y)
        if inv * self != self.ring.one():
            raise NotInvertible(f"{self} has a right inverse but no two-sided inverse")
        return inv

    def is_zero(self) -> bool:
        return not any(self.vec)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        return isinstance(other, LElem) and other.ring is self.ring and other.vec == self.vec

    def __hash__(self):
        return hash(self.vec)

    def __repr__(self):
        return f"LElem({self})"

    def __str__(self):
        return self.ring.format(self.vec)


def ring_from_rules(names: Sequence[str], product, one: str, torsion=(), display_order=None) -> LatticeRing:
    """Tabulate ``product(i, j) -> dict name->coeff`` into a LatticeRing."""
    n = len(names)
    idx = {nm: i for i, nm in enumerate(names)}
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            v = [0] * n
            for k, c in product(names[i], names[j]).items():
                v[idx[k]] += c
            row.append(tuple(v))
        table.append(row)
    onev = [0] * n
    onev[idx[one]] = 1
    return LatticeRing(names, table, onev, torsion=torsion, display_order=display_order)


def is_unimodular(m) -> bool:
    return abs(det(m)) == 1
