"""Integer lattice linear algebra.

Vectors are tuples of Python ints and matrices are lists of rows, so every
computation is exact. Sublattices of Z^n are stored by their row Hermite
normal form, which doubles as a canonical form and a membership test.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

Vector = Tuple[int, ...]
Matrix = List[List[int]]


def hnf(rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[Vector]:
    """Row Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped; pivots are positive and the entries above each pivot
    lie in ``[0, pivot)``.
    """
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return []
    n = len(mat[0]) if ncols is None else ncols
    out: List[List[int]] = []
    col = 0
    while mat and col < n:
        nz = [r for r in mat if r[col] != 0]
        if not nz:
            col += 1
            continue
        rest = [r for r in mat if r[col] == 0]
        # gcd-reduce the column by repeated Euclidean steps
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            nxt = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            nz = nxt
        piv = nz[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        out.append(piv)
        mat = rest
        col += 1
    # reduce entries above pivots
    for i in range(len(out)):
        p = _pivot(out[i])
        for k in range(i):
            q = out[k][p] // out[i][p]
            if q:
                out[k] = [a - q * b for a, b in zip(out[k], out[i])]
    return [tuple(r) for r in out]


def _pivot(row: Sequence[int]) -> int:
    for i, a in enumerate(row):
        if a:
            return i
    return -1


def reduce_vector(basis: Sequence[Vector], v: Sequence[int]) -> Vector:
    """Canonical representative of ``v`` modulo the lattice with HNF ``basis``."""
    v = list(v)
    for row in basis:
        p = _pivot(row)
        q = v[p] // row[p]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return tuple(v)


def in_lattice(basis: Sequence[Vector], v: Sequence[int]) -> bool:
    return not any(reduce_vector(basis, v))


def mat_vec(m: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    return [list(c) for c in zip(*m)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def kernel(a: Sequence[Sequence[int]], ncols: int) -> List[Vector]:
    """HNF basis of {x in Z^ncols : a x = 0}."""
    m = len(a)
    if m == 0:
        return hnf(identity(ncols))
    aug = [list(col) + row for col, row in zip(transpose(a), identity(ncols))]
    h = hnf(aug)
    ker = [r[m:] for r in h if not any(r[:m])]
    return hnf(ker, ncols)


def solve(a: Sequence[Sequence[int]], b: Sequence[int], ncols: int) -> Optional[Vector]:
    """An integer solution of ``a x = b`` or None."""
    # kernel of [a | -b] restricted to last coordinate 1; put that coordinate first
    aug = [[-bi] + list(row) for row, bi in zip(a, b)]
    ker = kernel(aug, ncols + 1)
    if not ker or ker[0][0] != 1:
        return None
    return tuple(ker[0][1:])


def smith(a: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix, Matrix]:
    """Smith normal form: returns (d, u, v) with u a v = d, u and v unimodular."""
    m = len(a)
    n = len(a[0]) if m else 0
    d = [list(r) for r in a]
    u = identity(m)
    v = identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in d:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
            if not entries:
                return d, u, v
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            p = d[t][t]
            clean = True
            for i in range(t + 1, m):
                q = d[i][t] // p
                if q:
                    add_row(i, t, -q)
                if d[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = d[t][j] // p
                if q:
                    add_col(j, t, -q)
                if d[t][j]:
                    clean = False
            if not clean:
                continue
            bad = [(i, j) for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % p]
            if bad:
                add_row(t, bad[0][0], 1)
                continue
            if d[t][t] < 0:
                d[t] = [-x for x in d[t]]
                u[t] = [-x for x in u[t]]
            break
    return d, u, v


def inverse_unimodular(m: Sequence[Sequence[int]]) -> Matrix:
    n = len(m)
    cols = []
    for k in range(n):
        e = [int(i == k) for i in range(n)]
        x = solve(m, e, n)
        if x is None:
            raise ValueError("matrix is not unimodular")
        cols.append(x)
    return transpose(cols)


def det(m: Sequence[Sequence[int]]):
    """Exact determinant by fraction-free elimination (Bareiss)."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------

class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class MixedLattice:
    """A sublattice of Z^rank given by generators, together with the ambient
    torsion relations (e.g. 5*e_0 = 0) it always contains.
    """

    rank: int
    generators: Tuple[Vector, ...] = ()
    torsion: Tuple[Vector, ...] = ()
    basis: Tuple[Vector, ...] = field(init=False, compare=False)

    def __post_init__(self):
        for v in self.generators + self.torsion:
            if len(v) != self.rank:
                raise LatticeError(f"vector {v} does not have length {self.rank}")
        object.__setattr__(self, "basis", tuple(hnf(self.generators + self.torsion, self.rank)))

    @classmethod
    def full(cls, rank: int, torsion=()):
        return cls(rank, tuple(tuple(r) for r in identity(rank)), tuple(torsion))

    def contains(self, v: Sequence[int]) -> bool:
        return in_lattice(self.basis, v)

    def contains_lattice(self, other: "MixedLattice") -> bool:
        return all(self.contains(v) for v in other.basis)

    def reduce(self, v: Sequence[int]) -> Vector:
        return reduce_vector(self.basis, v)

    def with_generators(self, vecs) -> "MixedLattice":
        return MixedLattice(self.rank, tuple(self.basis) + tuple(tuple(v) for v in vecs), self.torsion)

    def __eq__(self, other):
        return isinstance(other, MixedLattice) and self.rank == other.rank and self.basis == other.basis

    def __hash__(self):
        return hash((self.rank, self.basis))


Action = Callable[[Vector], Sequence[int]]


def lattice_saturate(start: MixedLattice, actions: Sequence[Action]) -> MixedLattice:
    """Smallest sublattice containing ``start`` and closed under ``actions``."""
    current = start
    while True:
        new = []
        for v in current.basis:
            for act in actions:
                w = tuple(act(v))
                if len(w) != start.rank:
                    raise LatticeError("action changes dimension")
                if not current.contains(w):
                    new.append(w)
        if not new:
            return current
        current = current.with_generators(new)


def matrix_action(m: Sequence[Sequence[int]]) -> Action:
    return lambda v: mat_vec(m, v)


@dataclass
class Quotient:
    """Z^rank / sub, written as (+) Z/d_i (+) Z^free via Smith normal form.

    ``project`` maps an ambient vector to quotient coordinates (torsion
    coordinates reduced into [0, d_i)); ``section`` lifts them back.
    """

    ambient_rank: int
    moduli: Tuple[int, ...]          # one per quotient coordinate; 0 = free
    _p: Matrix
    _s: Matrix

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def free_rank(self) -> int:
        return sum(1 for m in self.moduli if m == 0)

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(m for m in self.moduli if m)

    def project(self, v: Sequence[int]) -> Vector:
        y = mat_vec(self._p, v)
        return tuple(a % m if m else a for a, m in zip(y, self.moduli))

    def section(self, y: Sequence[int]) -> Vector:
        return mat_vec(self._s, y)


def module_quotient(ambient: MixedLattice, sub: MixedLattice) -> Quotient:
    """Quotient of (Z^r / ambient torsion) by ``sub``.

    ``ambient`` supplies the rank and torsion relations; ``sub`` must contain
    them.
    """
    if sub.rank != ambient.rank:
        raise LatticeError("dimension mismatch")
    for t in ambient.torsion:
        if not sub.contains(t):
            raise LatticeError("submodule does not contain the ambient torsion relations")
    r = ambient.rank
    rel = list(sub.basis)
    if not rel:
        return Quotient(r, (0,) * r, identity(r), identity(r))
    # rows of rel span the relations; u rel v = d, so in coordinates y = v^T x
    # the relation lattice is diagonal
    d, u, v = smith(rel)
    vinv = inverse_unimodular(v)
    diag = [d[i][i] if i < len(d) else 0 for i in range(r)]
    keep = [i for i in range(r) if diag[i] != 1]
    moduli = tuple(diag[i] for i in keep)
    vt = transpose(v)
    p = [vt[i] for i in keep]
    s = transpose([vinv[i] for i in keep]) if keep else [[] for _ in range(r)]
    return Quotient(r, moduli, p, s)
