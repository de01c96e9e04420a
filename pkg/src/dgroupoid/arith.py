"""Exact coefficient rings.

Only the handful of commutative rings needed downstream are provided, each as a
small immutable value type: residues mod n, sparse (Laurent) polynomials over
the integers, the Eisenstein ring Z[t, 1/3]/(t^2 - t + 1) and the rank-3 ring
Z[s, z]/((s-1)(z-2), s^2-2z-1, z^2-2z).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple


class NotInvertible(ArithmeticError):
    """Raised when an inverse is requested for a non-unit."""


class NotAUnit(NotInvertible):
    pass


class NegativeExponentError(ValueError):
    pass


def _is_power_of_3(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    while n % 3 == 0:
        n //= 3
    return n == 1


class ModularInt:
    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        self.modulus = modulus
        self.residue = residue % modulus

    def _coerce(self, other) -> "ModularInt":
        if isinstance(other, ModularInt):
            if other.modulus != self.modulus:
                raise ValueError("moduli differ")
            return other
        if isinstance(other, int):
            return ModularInt(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModularInt(self.residue + other.residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModularInt(self.residue - other.residue, self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ModularInt(-self.residue, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModularInt(self.residue * other.residue, self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "ModularInt":
        try:
            return ModularInt(pow(self.residue, -1, self.modulus), self.modulus)
        except ValueError:
            raise NotAUnit(f"{self.residue} is not a unit mod {self.modulus}") from None

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return ModularInt(pow(self.residue, n, self.modulus), self.modulus)

    def is_unit(self) -> bool:
        from math import gcd
        return gcd(self.residue, self.modulus) == 1

    def __eq__(self, other):
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return (isinstance(other, ModularInt) and other.modulus == self.modulus
                and other.residue == self.residue)

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __repr__(self):
        return f"ModularInt({self.residue}, {self.modulus})"


# ---------------------------------------------------------------------------
# sparse multivariate (Laurent) polynomials

class PolyRing:
    """Integer polynomial ring in named variables.

    Variables are kept sorted by name; `laurent` lists the variables that may
    carry negative exponents.
    """

    def __init__(self, names: Iterable[str], laurent: Iterable[str] = ()):
        self.names: Tuple[str, ...] = tuple(sorted(names))
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.laurent = frozenset(laurent)
        if not self.laurent <= set(self.names):
            raise ValueError("Laurent variables must be ring variables")
        self._index = {n: i for i, n in enumerate(self.names)}

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.names == self.names
                and other.laurent == self.laurent)

    def __hash__(self):
        return hash((self.names, self.laurent))

    def __repr__(self):
        return f"PolyRing({self.names}, laurent={sorted(self.laurent)})"

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, n: int) -> "Poly":
        return Poly(self, {(0,) * len(self.names): n})

    def var(self, name: str, power: int = 1) -> "Poly":
        e = [0] * len(self.names)
        e[self._index[name]] = power
        return Poly(self, {tuple(e): 1})

    def gens(self) -> Tuple["Poly", ...]:
        return tuple(self.var(n) for n in self.names)

    def index(self, name: str) -> int:
        return self._index[name]


class Poly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to ints."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Tuple[int, ...], int]):
        clean: Dict[Tuple[int, ...], int] = {}
        for e, c in terms.items():
            if c:
                clean[e] = c
        for e in clean:
            for name, k in zip(ring.names, e):
                if k < 0 and name not in ring.laurent:
                    raise NegativeExponentError(
                        f"negative exponent of non-Laurent variable {name}")
        self.ring = ring
        self.terms = dict(sorted(clean.items()))
        self._hash = None

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        if len(self.terms) != 1:
            return False
        (e, c), = self.terms.items()
        if c not in (1, -1):
            return False
        return all(k == 0 or name in self.ring.laurent
                   for name, k in zip(self.ring.names, e))

    def inverse(self) -> "Poly":
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a unit")
        (e, c), = self.terms.items()
        return Poly(self.ring, {tuple(-k for k in e): c})

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.ring.names), 0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def evaluate(self, values: Mapping[str, object], one):
        """Substitute ``values`` (ring elements supporting +, *) for the variables.

        Negative powers use ``.inverse()`` of the substituted value.
        """
        total = one * 0
        cache: Dict[Tuple[str, int], object] = {}

        def power(name, k):
            key = (name, k)
            if key not in cache:
                v = values[name]
                if k < 0:
                    v = v.inverse()
                    k = -k
                r = one
                for _ in range(k):
                    r = r * v
                cache[key] = r
            return cache[key]

        for e, c in self.terms.items():
            term = one * c
            for name, k in zip(self.ring.names, e):
                if k:
                    term = term * power(name, k)
            total = total + term
        return total

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return isinstance(other, Poly) and other.ring == self.ring and other.terms == self.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = []
            for name, k in zip(self.ring.names, e):
                if k == 1:
                    mono.append(name)
                elif k:
                    mono.append(f"{name}^{k}")
            body = "*".join(mono)
            mag = abs(c)
            if not body:
                s = str(mag)
            elif mag == 1:
                s = body
            else:
                s = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", s))
        sign, s = parts[0]
        out = ("-" if sign == "-" else "") + s
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out


# ---------------------------------------------------------------------------
# Z[t, 1/3]/(t^2 - t + 1)

def _check_3adic(q: Fraction) -> Fraction:
    q = Fraction(q)
    if not _is_power_of_3(q.denominator):
        raise ValueError(f"denominator of {q} is not a power of 3")
    return q


class EisensteinLoc:
    """alpha + beta*t with t^2 = t - 1 and only powers of 3 in denominators."""

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha=0, beta=0):
        self.alpha = _check_3adic(alpha)
        self.beta = _check_3adic(beta)

    @classmethod
    def t(cls) -> "EisensteinLoc":
        return cls(0, 1)

    @classmethod
    def from_int(cls, n: int) -> "EisensteinLoc":
        return cls(n, 0)

    def _coerce(self, other):
        if isinstance(other, EisensteinLoc):
            return other
        if isinstance(other, (int, Fraction)):
            return EisensteinLoc(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return EisensteinLoc(self.alpha + other.alpha, self.beta + other.beta)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinLoc(-self.alpha, -self.beta)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.alpha, self.beta, other.alpha, other.beta
        # (a + bt)(c + dt) = ac + (ad + bc)t + bd(t - 1)
        return EisensteinLoc(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        # N(a + bt) = (a + bt)(a + b(1 - t)) = a^2 + ab + b^2
        a, b = self.alpha, self.beta
        return a * a + a * b + b * b

    def conjugate(self) -> "EisensteinLoc":
        return EisensteinLoc(self.alpha + self.beta, -self.beta)

    def is_unit(self) -> bool:
        n = self.norm()
        return n != 0 and _is_power_of_3(n.numerator) and _is_power_of_3(n.denominator)

    def inverse(self) -> "EisensteinLoc":
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a unit (norm {self.norm()})")
        n = self.norm()
        c = self.conjugate()
        return EisensteinLoc(c.alpha / n, c.beta / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = EisensteinLoc(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = EisensteinLoc(other)
        return (isinstance(other, EisensteinLoc) and self.alpha == other.alpha
                and self.beta == other.beta)

    def __hash__(self):
        return hash((self.alpha, self.beta))

    def __repr__(self):
        return f"EisensteinLoc({self.alpha}, {self.beta})"

    def __str__(self):
        a, b = self.alpha, self.beta
        if b == 0:
            return str(a)
        bt = "t" if abs(b) == 1 else f"{abs(b)}*t"
        if a == 0:
            return ("-" if b < 0 else "") + bt
        return f"{a} {'-' if b < 0 else '+'} {bt}"


# ---------------------------------------------------------------------------
# Z[s, z]/((s-1)(z-2), s^2 - 2z - 1, z^2 - 2z)

class SZBase:
    """c1 + cs*s + cz*z with s^2 = 2z + 1, z^2 = 2z, sz = 2s + z - 2."""

    __slots__ = ("c1", "cs", "cz")

    def __init__(self, c1: int = 0, cs: int = 0, cz: int = 0):
        self.c1, self.cs, self.cz = int(c1), int(cs), int(cz)

    @classmethod
    def s(cls):
        return cls(0, 1, 0)

    @classmethod
    def z(cls):
        return cls(0, 0, 1)

    def _coerce(self, other):
        if isinstance(other, SZBase):
            return other
        if isinstance(other, int):
            return SZBase(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SZBase(self.c1 + other.c1, self.cs + other.cs, self.cz + other.cz)

    __radd__ = __add__

    def __neg__(self):
        return SZBase(-self.c1, -self.cs, -self.cz)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a0, a1, a2 = self.c1, self.cs, self.cz
        b0, b1, b2 = other.c1, other.cs, other.cz
        ss = a1 * b1
        sz = a1 * b2 + a2 * b1
        zz = a2 * b2
        c1 = a0 * b0 + ss - 2 * sz
        cs = a0 * b1 + a1 * b0 + 2 * sz
        cz = a0 * b2 + a2 * b0 + 2 * ss + sz + 2 * zz
        return SZBase(c1, cs, cz)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not (self.c1 or self.cs or self.cz)

    def __eq__(self, other):
        if isinstance(other, int):
            other = SZBase(other)
        return isinstance(other, SZBase) and (self.c1, self.cs, self.cz) == (other.c1, other.cs, other.cz)

    def __hash__(self):
        return hash((self.c1, self.cs, self.cz))

    def __repr__(self):
        return f"SZBase({self.c1}, {self.cs}, {self.cz})"

    def vector(self) -> Tuple[int, int, int]:
        return (self.c1, self.cs, self.cz)
