"""The ring functors A' and B' applied to Delta-groupoid presentations.

Ring expressions are noncommutative trees over integer constants and named
atoms (``w_x`` for A', ``u_x`` and ``v_x`` for B'). Emission is purely
syntactic; checking a presentation means evaluating it in a concrete model.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .arith import NotInvertible
from .report import CheckLine, Report
from .triangulation import (
    E, I, J, K, Act, Atom, DeltaPresentation, Prod, S3, Term, _star_operands,
)


# ---------------------------------------------------------------------------
# expression trees

class Expr:
    def __add__(self, other):
        return add(self, lift(other))

    def __radd__(self, other):
        return add(lift(other), self)

    def __sub__(self, other):
        return add(self, neg(lift(other)))

    def __rsub__(self, other):
        return add(lift(other), neg(self))

    def __mul__(self, other):
        return mul(self, lift(other))

    def __rmul__(self, other):
        return mul(lift(other), self)

    def __neg__(self):
        return neg(self)

    def inv(self):
        return inv(self)

    def __str__(self):
        return format_expr(self)


@dataclass(frozen=True)
class Const(Expr):
    value: int


@dataclass(frozen=True)
class Sym(Expr):
    name: str


@dataclass(frozen=True)
class Add(Expr):
    terms: Tuple[Expr, ...]


@dataclass(frozen=True)
class Mul(Expr):
    factors: Tuple[Expr, ...]


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class Inv(Expr):
    arg: Expr


ONE = Const(1)
ZERO = Const(0)


def lift(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, int):
        return Const(x)
    raise TypeError(f"cannot use {x!r} in a ring expression")


def add(*terms: Expr) -> Expr:
    flat = []
    for t in terms:
        flat.extend(t.terms if isinstance(t, Add) else (t,))
    flat = [t for t in flat if t != ZERO]
    if not flat:
        return ZERO
    return flat[0] if len(flat) == 1 else Add(tuple(flat))


def mul(*factors: Expr) -> Expr:
    flat = []
    sign = False
    for f in factors:
        if isinstance(f, Neg):      # signs are pulled out of products
            sign = not sign
            f = f.arg
        elif isinstance(f, Const) and f.value < 0:
            sign = not sign
            f = Const(-f.value)
        flat.extend(f.factors if isinstance(f, Mul) else (f,))
    if any(f == ZERO for f in flat):
        return ZERO
    flat = [f for f in flat if f != ONE]
    if not flat:
        out = ONE
    else:
        out = flat[0] if len(flat) == 1 else Mul(tuple(flat))
    return neg(out) if sign else out


def neg(x: Expr) -> Expr:
    if isinstance(x, Neg):
        return x.arg
    if isinstance(x, Const):
        return Const(-x.value)
    return Neg(x)


def inv(x: Expr) -> Expr:
    if isinstance(x, Inv):
        return x.arg
    if x == ONE:
        return ONE
    if isinstance(x, Neg):
        return neg(inv(x.arg))
    return Inv(x)


def atoms_of(e: Expr) -> List[str]:
    out: List[str] = []

    def walk(x):
        if isinstance(x, Sym):
            if x.name not in out:
                out.append(x.name)
        elif isinstance(x, (Add, Mul)):
            for y in (x.terms if isinstance(x, Add) else x.factors):
                walk(y)
        elif isinstance(x, (Neg, Inv)):
            walk(x.arg)
    walk(e)
    return out


def substitute(e: Expr, f: Callable[[str], Expr]) -> Expr:
    if isinstance(e, Sym):
        return f(e.name)
    if isinstance(e, Const):
        return e
    if isinstance(e, Add):
        return add(*[substitute(t, f) for t in e.terms])
    if isinstance(e, Mul):
        return mul(*[substitute(t, f) for t in e.factors])
    if isinstance(e, Neg):
        return neg(substitute(e.arg, f))
    return inv(substitute(e.arg, f))


# ---------------------------------------------------------------------------
# printing, close to the usual handwritten form: w_xw_y, (1-w_y)^{-1}

def format_expr(e: Expr) -> str:
    if isinstance(e, Const):
        return str(e.value)
    if isinstance(e, Sym):
        return e.name
    if isinstance(e, Add):
        out = format_expr(e.terms[0])
        for t in e.terms[1:]:
            if isinstance(t, Neg):
                out += "-" + _fmt_factor(t.arg)
            elif isinstance(t, Const) and t.value < 0:
                out += f"-{-t.value}"
            else:
                out += "+" + format_expr(t)
        return out
    if isinstance(e, Mul):
        return "".join(_fmt_factor(f) for f in e.factors)
    if isinstance(e, Neg):
        return "-" + _fmt_factor(e.arg)
    a = e.arg
    if isinstance(a, Sym):
        return f"{a.name}^{{-1}}"
    return f"({format_expr(a)})^{{-1}}"


def _fmt_factor(e: Expr) -> str:
    if isinstance(e, (Add, Neg)) or (isinstance(e, Const) and e.value < 0):
        return f"({format_expr(e)})"
    return format_expr(e)


# ---------------------------------------------------------------------------
# presentations

@dataclass
class RingPresentation:
    functor: str
    atoms: List[str]
    relations: List[Tuple[Expr, Expr]]
    invertible: List[str] = field(default_factory=list)

    def localizations(self) -> List[Expr]:
        """Compound expressions that the presentation inverts."""
        seen: List[Expr] = []

        def walk(x):
            if isinstance(x, Inv):
                if not isinstance(x.arg, Sym) and x.arg not in seen:
                    seen.append(x.arg)
                walk(x.arg)
            elif isinstance(x, Add):
                for t in x.terms:
                    walk(t)
            elif isinstance(x, Mul):
                for t in x.factors:
                    walk(t)
            elif isinstance(x, Neg):
                walk(x.arg)
        for l, r in self.relations:
            walk(l)
            walk(r)
        return seen

    def lines(self) -> List[str]:
        out = [f"functor: {self.functor}", "generators: " + ", ".join(self.atoms)]
        if self.invertible:
            out.append("invertible: " + ", ".join(self.invertible))
        for n, x in enumerate(self.localizations(), 1):
            out.append(f"localize: inv{n} = ({format_expr(x)})^{{-1}}")
        out.extend(f"{format_expr(l)}={format_expr(r)}" for l, r in self.relations)
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _peel_j(l: Term, r: Term) -> Tuple[Term, Term, bool]:
    """Rewrite L = j(T) as j(L) = T (j is an involution)."""
    if isinstance(r, Act) and r.sigma == J:
        return l, r.arg, True
    if isinstance(l, Act) and l.sigma == J:
        return r, l.arg, True
    return l, r, False


def _letters(sigma: S3) -> str:
    # e, i, j, k, ij, ji: the name is already a shortest word in i, j, k
    return "" if sigma == E else sigma.name


# A'

def a_map(sigma: S3, w: Expr) -> Expr:
    """Image of sigma(x) given the image w of x: i: W^-1, k: 1-W, j = iki."""
    for ch in reversed(_letters(sigma)):
        if ch == "i":
            w = inv(w)
        elif ch == "k":
            w = ONE - w
        else:
            w = inv(ONE - inv(w))
    return w


def a_image(t: Term) -> Expr:
    if isinstance(t, Atom):
        return a_map(t.sigma, Sym(f"w_{t.gen}"))
    if isinstance(t, Prod):
        return mul(*[a_image(f) for f in t.factors])
    return a_map(t.sigma, a_image(t.arg))


def emit_a(p: DeltaPresentation) -> RingPresentation:
    rels = []
    for l, r in p.relations:
        l, r, peeled = _peel_j(l, r)
        lhs = a_map(J, a_image(l)) if peeled else a_image(l)
        rels.append((lhs, a_image(r)))
    atoms = [f"w_{g}" for g in p.generators]
    return RingPresentation("A'", atoms, rels, list(atoms))


# B'

Pair = Tuple[Expr, Expr]


def b_map(sigma: S3, uv: Pair) -> Pair:
    u, v = uv
    for ch in reversed(_letters(sigma)):
        if ch == "i":
            u, v = inv(u), neg(mul(inv(u), v))
        elif ch == "k":
            u, v = v, u
        else:
            u, v = neg(mul(inv(v), u)), inv(v)
    return u, v


def b_mul(a: Pair, b: Pair) -> Pair:
    return mul(a[0], b[0]), add(mul(a[0], b[1]), a[1])


def b_image(t: Term) -> Pair:
    if isinstance(t, Atom):
        return b_map(t.sigma, (Sym(f"u_{t.gen}"), Sym(f"v_{t.gen}")))
    if isinstance(t, Prod):
        acc = b_image(t.factors[0])
        for f in t.factors[1:]:
            acc = b_mul(acc, b_image(f))
        return acc
    return b_map(t.sigma, b_image(t.arg))


def _cancel_sign(l: Expr, r: Expr) -> Tuple[Expr, Expr]:
    if isinstance(l, Neg) and isinstance(r, Neg):
        return l.arg, r.arg
    return l, r


def emit_b(p: DeltaPresentation) -> RingPresentation:
    rels = []
    for l, r in p.relations:
        l, r, peeled = _peel_j(l, r)
        lhs = b_map(J, b_image(l)) if peeled else b_image(l)
        rhs = b_image(r)
        for a, b in zip(lhs, rhs):
            rels.append(_cancel_sign(a, b))
    atoms = [f"{c}_{g}" for g in p.generators for c in "uv"]
    return RingPresentation("B'", atoms, rels, list(atoms))


def alpha_image(e: Expr) -> Expr:
    """The natural map B' -> A': u_g -> w_g, v_g -> 1 - w_g."""
    def f(name: str) -> Expr:
        if name.startswith("u_"):
            return Sym("w_" + name[2:])
        if name.startswith("v_"):
            return ONE - Sym("w_" + name[2:])
        return Sym(name)
    return substitute(e, f)


# ---------------------------------------------------------------------------
# evaluation in models

class MissingAtom(KeyError):
    pass


def evaluate(e: Expr, assignment: Mapping[str, object], one):
    """Evaluate in a model; inverses use ``.inverse()`` which may raise NotInvertible."""
    if isinstance(e, Const):
        return one * e.value
    if isinstance(e, Sym):
        if e.name not in assignment:
            raise MissingAtom(e.name)
        return assignment[e.name]
    if isinstance(e, Add):
        acc = evaluate(e.terms[0], assignment, one)
        for t in e.terms[1:]:
            acc = acc + evaluate(t, assignment, one)
        return acc
    if isinstance(e, Mul):
        acc = evaluate(e.factors[0], assignment, one)
        for t in e.factors[1:]:
            acc = acc * evaluate(t, assignment, one)
        return acc
    if isinstance(e, Neg):
        return -evaluate(e.arg, assignment, one)
    return evaluate(e.arg, assignment, one).inverse()


def verify_in_model(pres: RingPresentation, assignment: Mapping[str, object], one,
                    title: str = "") -> Report:
    needed = []
    for l, r in pres.relations:
        needed += [a for a in atoms_of(l) + atoms_of(r) if a not in needed]
    missing = [a for a in needed if a not in assignment]
    if missing:
        raise MissingAtom(", ".join(missing))
    rep = Report(title or f"{pres.functor} relations")
    for l, r in pres.relations:
        name = f"{format_expr(l)}={format_expr(r)}"
        try:
            ok = evaluate(l, assignment, one) == evaluate(r, assignment, one)
        except NotInvertible as exc:
            rep.lines.append(CheckLine(name, "NONINVERTIBLE", str(exc)))
            continue
        rep.add(name, ok, "sides differ")
    return rep


# ---------------------------------------------------------------------------
# expression parser: identifiers, integers, + - * ^ ( ) and inv(...)

class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokens(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, ident, op = m.groups()
        if op is not None and op not in "+-*^()":
            raise ParseError(f"unexpected character {op!r} at {m.start(3)}")
        out.append(("num", int(num)) if num else ("id", ident) if ident else ("op", op))
        pos = m.end()
    out.append(("end", None))
    return out


def parse_expr(text: str) -> Expr:
    toks = _tokens(text)
    pos = [0]

    def peek():
        return toks[pos[0]]

    def take(kind=None, val=None):
        t = toks[pos[0]]
        if (kind and t[0] != kind) or (val is not None and t[1] != val):
            raise ParseError(f"expected {val or kind}, got {t[1]!r}")
        pos[0] += 1
        return t

    def expr():
        sign = False
        if peek() == ("op", "-"):
            take()
            sign = True
        e = term()
        if sign:
            e = neg(e)
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            e = add(e, t) if op == "+" else add(e, neg(t))
        return e

    def term():
        e = power()
        while True:
            if peek() == ("op", "*"):
                take()
                e = mul(e, power())
            elif peek()[0] in ("num", "id") or peek() == ("op", "("):
                e = mul(e, power())     # juxtaposition
            else:
                return e

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            neg_exp = False
            if peek() == ("op", "-"):
                take()
                neg_exp = True
            n = take("num")[1]
            e = mul(*([base] * n)) if n else ONE
            return inv(e) if neg_exp else e
        return base

    def atom():
        t = peek()
        if t[0] == "num":
            take()
            return Const(t[1])
        if t[0] == "id":
            take()
            if t[1] == "inv" and peek() == ("op", "("):
                take()
                e = expr()
                take("op", ")")
                return inv(e)
            return Sym(t[1])
        if t == ("op", "("):
            take()
            e = expr()
            take("op", ")")
            return e
        if t == ("op", "-"):
            take()
            return neg(atom())
        raise ParseError(f"unexpected token {t[1]!r}")

    e = expr()
    if peek()[0] != "end":
        raise ParseError(f"trailing input at {peek()[1]!r}")
    return e
