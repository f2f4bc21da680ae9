"""Binary forms over cyclotomic fields and the group action on them.

A form of degree d is stored as the coefficient list of X^(d-k) Y^k for
k = 0..d.  Multiplying forms is multiplying the dehomogenised polynomials in
u = Y/X, with degree tags adding, and exact division uses the same picture.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Sequence

from .cyclofield import Cyclotomic
from .polygroup import FiniteMatrixGroup, Mat2, OrbitData, ProjPoint


class FormError(ArithmeticError):
    pass


def _c(x) -> Cyclotomic:
    return x if isinstance(x, Cyclotomic) else Cyclotomic.rational(x)


class BinaryForm:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Sequence):
        if len(coeffs) != degree + 1:
            raise FormError(f"degree {degree} needs {degree + 1} coefficients, got {len(coeffs)}")
        self.degree = degree
        self.coeffs = tuple(_c(c) for c in coeffs)

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, [0] * (degree + 1))

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "BinaryForm":
        """c X^a Y^b."""
        co = [0] * (a + b + 1)
        co[b] = c
        return cls(a + b, co)

    @classmethod
    def constant(cls, c) -> "BinaryForm":
        return cls(0, [c])

    @classmethod
    def linear(cls, p, q) -> "BinaryForm":
        return cls(1, [p, q])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    __bool__ = lambda self: not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise FormError("adding forms of different degree")
        return BinaryForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise FormError("subtracting forms of different degree")
        return BinaryForm(self.degree, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm(self.degree, [-a for a in self.coeffs])

    def scale(self, s) -> "BinaryForm":
        return BinaryForm(self.degree, [a * s if a else a for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        return BinaryForm(self.degree + other.degree, _pmul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BinaryForm":
        out = BinaryForm.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def evaluate(self, x, y=1) -> Cyclotomic:
        """P(x, y) by Horner in both variables."""
        x, y = _c(x), _c(y)
        acc = _c(0)
        ypow = _c(1)
        xs = [_c(1)]
        for _ in range(self.degree):
            xs.append(xs[-1] * x)
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + c * xs[self.degree - k] * ypow
            if k < self.degree:
                ypow = ypow * y
        return acc

    def at(self, p: ProjPoint) -> Cyclotomic:
        return self.evaluate(p.x, p.y)

    def leading_index(self) -> int | None:
        return next((k for k, c in enumerate(self.coeffs) if c), None)

    def normalized(self) -> "BinaryForm":
        """Scale so that the first nonzero coefficient is 1."""
        k = self.leading_index()
        if k is None:
            return self
        return self.scale(self.coeffs[k].inverse())

    def ratio_to(self, other: "BinaryForm") -> Cyclotomic | None:
        """The scalar c with self = c * other, or None."""
        k = other.leading_index()
        if k is None or self.degree != other.degree:
            return None
        c = self.coeffs[k] / other.coeffs[k]
        if all(a == c * b for a, b in zip(self.coeffs, other.coeffs)):
            return c
        return None

    def shrink(self) -> "BinaryForm":
        """Move all coefficients into the smallest common cyclotomic field."""
        mins = [c.minimal() for c in self.coeffs]
        n = reduce(math.lcm, (c.n for c in mins), 1)
        return BinaryForm(self.degree, [c.embed(n) if c.n != n else c for c in mins])

    def embed(self, n: int) -> "BinaryForm":
        return BinaryForm(self.degree, [c if c.n == n else c.embed(n) for c in self.coeffs])

    @property
    def conductor(self) -> int:
        return reduce(math.lcm, (c.n for c in self.coeffs), 1)

    def to_json(self) -> dict:
        return {"deg": self.degree, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "BinaryForm":
        return cls(data["deg"], [Cyclotomic.from_json(c) for c in data["coeffs"]])

    def __str__(self):
        terms = []
        d = self.degree
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(s for s in (_pw("X", d - k), _pw("Y", k)) if s)
            cs = str(c.minimal())
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            elif cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append(f"({cs})*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    __repr__ = __str__


def _pw(v: str, e: int) -> str:
    return "" if e == 0 else v if e == 1 else f"{v}^{e}"


def _pmul(a: Sequence[Cyclotomic], b: Sequence[Cyclotomic]) -> list:
    out = [None] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                t = x * y
                k = i + j
                out[k] = t if out[k] is None else out[k] + t
    zero = _c(0)
    return [zero if v is None else v for v in out]


# ---------------------------------------------------------------------------
# the group action

def _powers(form: BinaryForm, e: int) -> list[BinaryForm]:
    out = [BinaryForm.constant(1)]
    for _ in range(e):
        out.append(out[-1] * form)
    return out


def sym_power_matrix(g: Mat2, d: int) -> list[list[Cyclotomic]]:
    """Matrix of P -> g.P on the monomial basis X^(d-k) Y^k of degree d.

    With (g.P)(X, Y) = P(g^-1 (X, Y)) this is a left action, so the map
    g -> matrix is a homomorphism.  Its trace is chi_d(g^-1).
    """
    return _sym_power_matrix(g.inverse(), d)


@lru_cache(maxsize=256)
def _sym_power_matrix(h: Mat2, d: int):
    # column k holds (aX + bY)^(d-k) (cX + dY)^k for h = [[a, b], [c, d]]
    p1 = _powers(BinaryForm.linear(h.a, h.b), d)
    p2 = _powers(BinaryForm.linear(h.c, h.d), d)
    cols = [(p1[d - k] * p2[k]).coeffs for k in range(d + 1)]
    return [[cols[k][j] for k in range(d + 1)] for j in range(d + 1)]


def act_on_form(g: Mat2, P: BinaryForm) -> BinaryForm:
    M = _sym_power_matrix(g.inverse(), P.degree)
    out = []
    for row in M:
        acc = _c(0)
        for m, p in zip(row, P.coeffs):
            if m and p:
                acc = acc + m * p
        out.append(acc)
    return BinaryForm(P.degree, out)


# ---------------------------------------------------------------------------
# ground forms

@dataclass
class GroundForm:
    form: BinaryForm
    orbit: OrbitData
    multiplier: dict  # generator label -> root of unity

    @property
    def label(self) -> str:
        return self.orbit.label

    @property
    def degree(self) -> int:
        return self.form.degree


def orbit_form(points: Sequence[ProjPoint]) -> BinaryForm:
    """Product of the linear forms y0 X - x0 Y, normalized."""
    f = BinaryForm.constant(1)
    for p in points:
        f = f * BinaryForm.linear(p.y, -p.x)
    return f.normalized().shrink()


def relative_character(G: FiniteMatrixGroup, F: BinaryForm, label: str) -> Cyclotomic:
    g = G.elements[G.gens[label]]
    c = act_on_form(g, F).ratio_to(F)
    if c is None:
        raise FormError(f"{G.spec}: form is not a relative invariant under g_{label}")
    return c


_GF_CACHE: dict = {}


def ground_form(G: FiniteMatrixGroup, orbit: OrbitData) -> GroundForm:
    key = (id(G), orbit.label, orbit.points[0])
    hit = _GF_CACHE.get(key)
    if hit is not None and hit[0] is G:
        return hit[1]
    F = orbit_form(orbit.points)
    F = F.embed(math.lcm(F.conductor, G.conductor))
    mult = {}
    for lbl in sorted(set(G.gens) & set("abcgrs")):
        mult[lbl] = relative_character(G, F, lbl)
    gf = GroundForm(F, orbit, mult)
    _GF_CACHE[key] = (G, gf)
    return gf


def ground_forms(G: FiniteMatrixGroup) -> dict[str, GroundForm]:
    return {o.label: ground_form(G, o) for o in G.exceptional_orbits}


# ---------------------------------------------------------------------------
# exact division

def divide_exact(P: BinaryForm, F: BinaryForm) -> BinaryForm | None:
    """Q with P = F Q, or None if F does not divide P.

    Forms are dehomogenised at X = 1 (u = Y/X); a power of X in F shows up
    as F having u-degree below its degree tag, and P must then carry at least
    the same power of X, which is the bound on the quotient degree below.
    """
    if F.is_zero():
        raise ZeroDivisionError("division by the zero form")
    qdeg = P.degree - F.degree
    if qdeg < 0:
        return None
    if P.is_zero():
        return BinaryForm.zero(qdeg)
    f = list(F.coeffs)
    while not f[-1]:
        f.pop()
    p = list(P.coeffs)
    while p and not p[-1]:
        p.pop()
    # power of Y: lowest nonzero index
    lf = next(k for k, c in enumerate(f) if c)
    lp = next(k for k, c in enumerate(p) if c)
    if lp < lf:
        return None
    f, p = f[lf:], p[lf:]
    n = len(p) - len(f)
    if n < 0:
        return None
    inv = f[0].inverse()
    q = [None] * (n + 1)
    rem = list(p)
    for i in range(n + 1):
        c = rem[i]
        if not c:
            q[i] = c
            continue
        c = c * inv
        q[i] = c
        for j in range(1, len(f)):
            if f[j]:
                rem[i + j] = rem[i + j] - c * f[j]
    if any(rem[n + 1:]):
        return None
    if n > qdeg:
        return None
    return BinaryForm(qdeg, q + [_c(0)] * (qdeg - n))


def multiplicity(P: BinaryForm, F: BinaryForm) -> tuple[int, BinaryForm]:
    """Largest e with F^e | P, and the cofactor."""
    e = 0
    while True:
        Q = divide_exact(P, F)
        if Q is None:
            return e, P
        P, e = Q, e + 1
