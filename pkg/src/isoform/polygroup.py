"""Finite Möbius groups and their 2x2 matrix lifts.

Every polyhedral group is realised as an explicit matrix group over a
cyclotomic field, enumerated by closure.  The module also locates the
exceptional orbits on the projective line, stabilisers, exponents and the
order of the Schur multiplier implied by the exponent of the binary cover.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from typing import Iterable, Sequence

from .cyclofield import Cyclotomic

FAMILIES = {"C": "Cyclic", "D": "Dihedral", "T": "Tetrahedral",
            "O": "Octahedral", "Y": "Icosahedral"}


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    family: str  # one of C, D, T, O, Y
    N: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GroupError(f"unknown family {self.family!r}")
        if self.family == "C" and self.N < 1:
            raise GroupError("cyclic groups need N >= 1")
        if self.family == "D" and self.N < 2:
            raise GroupError("dihedral groups need N >= 2")
        if self.family in "TOY" and self.N:
            raise GroupError(f"{self.family} takes no parameter")

    @classmethod
    def parse(cls, text: str | "GroupSpec") -> "GroupSpec":
        if isinstance(text, GroupSpec):
            return text
        m = re.fullmatch(r"\s*([CDTOY])\s*(\d*)\s*", text.upper())
        if not m:
            raise GroupError(f"cannot parse group spec {text!r}")
        fam, num = m.group(1), m.group(2)
        if fam in "CD":
            if not num:
                raise GroupError(f"{fam} needs a parameter, e.g. {fam}3")
            return cls(fam, int(num))
        if num:
            raise GroupError(f"{fam} takes no parameter")
        return cls(fam)

    def __str__(self):
        return f"{self.family}{self.N}" if self.family in "CD" else self.family

    @property
    def order(self) -> int:
        """Order |G| of the Möbius group."""
        return {"C": self.N, "D": 2 * self.N, "T": 12, "O": 24, "Y": 60}[self.family]

    @property
    def is_cyclic(self) -> bool:
        return self.family == "C"

    @property
    def matrix_conductor(self) -> int:
        f, N = self.family, self.N
        if f == "C":
            return max(N, 1)
        if f == "D":
            return N if N % 2 else 2 * N
        return {"T": 4, "O": 8, "Y": 5}[f]

    @property
    def field_conductor(self) -> int:
        """A field holding every matrix entry, fixed point and character value."""
        f, N = self.family, self.N
        if f == "C":
            return max(N, 1)
        if f == "D":
            return 4 * N
        return {"T": 24, "O": 24, "Y": 60}[f]

    @property
    def rep_conductor(self) -> int:
        """Field used for irreducible representation matrices."""
        f, N = self.family, self.N
        if f in "CD":
            return self.matrix_conductor
        return {"T": 12, "O": 8, "Y": 5}[f]


# structure data: stabiliser orders, orbit sizes, exponent, |M(G)|, abelianisation
def table1_row(spec: GroupSpec) -> dict:
    f, N = spec.family, spec.N
    if f == "C":
        return dict(nu=(N, N), d=(1, 1), order=N, exponent=N, schur=1, abelian=f"Z{N}")
    if f == "D":
        if N % 2:
            return dict(nu=(N, 2, 2), d=(2, N, N), order=2 * N, exponent=2 * N,
                        schur=1, abelian="Z2")
        return dict(nu=(N, 2, 2), d=(2, N, N), order=2 * N, exponent=N,
                    schur=2, abelian="Z2xZ2")
    return {
        "T": dict(nu=(3, 3, 2), d=(4, 4, 6), order=12, exponent=6, schur=2, abelian="Z3"),
        "O": dict(nu=(4, 3, 2), d=(6, 8, 12), order=24, exponent=12, schur=2, abelian="Z2"),
        "Y": dict(nu=(5, 3, 2), d=(12, 20, 30), order=60, exponent=30, schur=2, abelian="1"),
    }[f]


# ---------------------------------------------------------------------------
# 2x2 matrices

class Mat2:
    __slots__ = ("a", "b", "c", "d", "n", "_key", "_det")

    def __init__(self, a, b, c, d, n: int):
        self.n = n
        self.a, self.b, self.c, self.d = (_at(x, n) for x in (a, b, c, d))
        self._key = None
        self._det = None

    @property
    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def key(self):
        if self._key is None:
            self._key = tuple((x.num, x.den) for x in (self.a, self.b, self.c, self.d))
        return self._key

    def __eq__(self, other):
        return isinstance(other, Mat2) and self.n == other.n and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __mul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d, self.n)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d, self.n)

    def scale(self, s) -> "Mat2":
        return Mat2(s * self.a, s * self.b, s * self.c, s * self.d, self.n)

    @property
    def det(self) -> Cyclotomic:
        if self._det is None:
            self._det = self.a * self.d - self.b * self.c
        return self._det

    @property
    def trace(self) -> Cyclotomic:
        return self.a + self.d

    def inverse(self) -> "Mat2":
        inv = self.det.inverse()
        return Mat2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv, self.n)

    def is_scalar(self) -> bool:
        return self.b.is_zero() and self.c.is_zero() and self.a == self.d

    def apply(self, p: "ProjPoint") -> "ProjPoint":
        return ProjPoint.make(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y, p.n)

    def to_json(self):
        return [[x.to_json() for x in r] for r in self.rows]

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    __repr__ = __str__


def _at(x, n: int) -> Cyclotomic:
    if not isinstance(x, Cyclotomic):
        x = Cyclotomic.rational(x)
    return x if x.n == n else x.embed(n)


def identity_mat(n: int) -> Mat2:
    return Mat2(1, 0, 0, 1, n)


# ---------------------------------------------------------------------------
# projective points

@dataclass(frozen=True)
class ProjPoint:
    x: Cyclotomic
    y: Cyclotomic
    n: int

    @classmethod
    def make(cls, x, y, n: int) -> "ProjPoint":
        x, y = _at(x, n), _at(y, n)
        if y.is_zero():
            if x.is_zero():
                raise ValueError("(0, 0) is not a projective point")
            return cls(_at(1, n), _at(0, n), n)
        return cls(x / y, _at(1, n), n)

    @classmethod
    def parse(cls, text: str, n: int) -> "ProjPoint":
        text = text.strip().lower()
        if text in ("inf", "oo", "infinity"):
            return cls.make(1, 0, n)
        return cls.make(Cyclotomic.rational(Fraction(text)), 1, n)

    @property
    def is_infinity(self) -> bool:
        return self.y.is_zero()

    def key(self):
        return (self.y.is_zero(), self.x.num, self.x.den)

    def sort_key(self):
        return (self.is_infinity, self.x._sort_key())

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.n == other.n and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def to_numeric(self) -> complex | None:
        return None if self.is_infinity else self.x.to_numeric()

    def to_json(self):
        return "inf" if self.is_infinity else self.x.to_json()

    def __str__(self):
        return "inf" if self.is_infinity else str(self.x.minimal())


@dataclass(frozen=True)
class OrbitData:
    label: str  # a, b, c or generic
    points: tuple
    nu: int

    @property
    def d(self) -> int:
        return len(self.points)

    def contains(self, p: ProjPoint) -> bool:
        return p in self.points

    def to_json(self):
        return {"label": self.label, "nu": self.nu, "d": self.d,
                "points": [p.to_json() for p in self.points]}


# ---------------------------------------------------------------------------
# generator matrices

def _quat(n: int, a, b, c, d) -> Mat2:
    # a + b i + c j + d k with i -> diag(i,-i), j -> [[0,1],[-1,0]], k -> [[0,i],[i,0]]
    i = Cyclotomic.zeta(4).embed(n)
    a, b, c, d = (_at(Cyclotomic.rational(v), n) for v in (a, b, c, d))
    return Mat2(a + b * i, c + d * i, -c + d * i, a - b * i, n)


def _generators(spec: GroupSpec, binary: bool = False) -> tuple[int, list[Mat2]]:
    f, N = spec.family, spec.N
    if f == "C":
        if binary:
            n = 2 * N
            z = Cyclotomic.zeta(n)
            return n, [Mat2(z, 0, 0, z.inverse(), n)]
        n = max(N, 1)
        return n, [Mat2(Cyclotomic.zeta(n), 0, 0, 1, n)]
    if f == "D":
        if N % 2 and not binary:
            w = Cyclotomic.zeta(N)
            return N, [Mat2(w, 0, 0, w.inverse(), N), Mat2(0, 1, 1, 0, N)]
        n = 2 * N if N % 2 == 0 else 4 * N
        z = Cyclotomic.zeta(2 * N).embed(n)
        i = Cyclotomic.zeta(4).embed(n)
        return n, [Mat2(z, 0, 0, z.inverse(), n), Mat2(0, i, i, 0, n)]
    h = Fraction(1, 2)
    if f == "T":
        return 4, [_quat(4, 0, 1, 0, 0), _quat(4, 0, 0, 1, 0), _quat(4, h, h, h, h)]
    if f == "O":
        z8 = Cyclotomic.zeta(8)
        return 8, [_quat(8, 0, 1, 0, 0), _quat(8, h, h, h, h), Mat2(z8, 0, 0, z8.inverse(), 8)]
    # icosahedral: Klein's matrices over Q(zeta_5)
    e = [Cyclotomic.zeta(5, k) for k in range(5)]
    s5 = Cyclotomic.sqrt(5).embed(5)
    S = Mat2(e[3], 0, 0, e[2], 5)
    T = Mat2(-(e[1] - e[4]), e[2] - e[3], e[2] - e[3], e[1] - e[4], 5).scale(s5.inverse())
    return 5, [S, T]


def _labeled_words(spec: GroupSpec):
    """Preferred generator triples, given as matrices, for T, O and Y.

    For T the orientation is chosen so that F_a is a relative invariant with
    multiplier T3, which makes it an invariant vector for T2 under the action
    P -> P o g^-1.  Y is found by search.
    """
    h = Fraction(1, 2)
    if spec.family == "T":
        return [_quat(4, h, -h, -h, -h), _quat(4, h, -h, -h, h)]
    if spec.family == "O":
        z8 = Cyclotomic.zeta(8)
        return [Mat2(z8, 0, 0, z8.inverse(), 8), _quat(8, h, h, h, h)]
    return None


# ---------------------------------------------------------------------------
# the group

class FiniteMatrixGroup:
    """A finite subgroup of GL2 over Q(zeta_n), enumerated breadth first."""

    def __init__(self, spec: GroupSpec | str, binary: bool = False):
        self.spec = spec = GroupSpec.parse(spec)
        self.binary = binary or spec.family in "TOY" or (spec.family == "D" and spec.N % 2 == 0)
        self.conductor, gens = _generators(spec, self.binary)
        self.field = spec.field_conductor if not (binary and spec.family == "C") \
            else math.lcm(spec.field_conductor, 2 * spec.N)
        if self.binary and spec.family == "D":
            self.field = 4 * spec.N
        self.elements: list[Mat2] = []
        self.index: dict = {}
        self._enumerate(gens)
        self._mul: dict = {}
        self.identity = 0
        self.mobius_order = spec.order
        self.lift_order = len(self.elements)
        mz = -self.elements[0]
        self.z = self.index.get(mz.key())
        self.is_double_cover = self.z is not None and self.lift_order == 2 * self.mobius_order
        if self.lift_order not in (self.mobius_order, 2 * self.mobius_order):
            raise GroupError(f"{spec}: enumerated {self.lift_order} elements")
        self.gens = self._label_generators(gens)
        self._check_presentation()

    # -- enumeration and products
    def _enumerate(self, gens: Sequence[Mat2]):
        e = identity_mat(self.conductor)
        self.elements.append(e)
        self.index[e.key()] = 0
        queue = deque([e])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = x * g
                if y.key() not in self.index:
                    self.index[y.key()] = len(self.elements)
                    self.elements.append(y)
                    queue.append(y)
            if len(self.elements) > 1000:
                raise GroupError("group is not finite (or too large)")

    def find(self, m: Mat2) -> int:
        m = m if m.n == self.conductor else Mat2(m.a, m.b, m.c, m.d, self.conductor)
        try:
            return self.index[m.key()]
        except KeyError:
            raise GroupError(f"matrix {m} is not in {self.spec}") from None

    def mul(self, i: int, j: int) -> int:
        k = self._mul.get((i, j))
        if k is None:
            k = self.index[(self.elements[i] * self.elements[j]).key()]
            self._mul[(i, j)] = k
        return k

    def inv(self, i: int) -> int:
        return self.find(self.elements[i].inverse())

    def power(self, i: int, k: int) -> int:
        if k < 0:
            i, k = self.inv(i), -k
        out = 0
        for _ in range(k):
            out = self.mul(out, i)
        return out

    def word(self, text: str) -> int:
        """Evaluate a word such as '1', 'z', 'a', 'b^2', 'ab', 'a^3'."""
        text = text.replace(" ", "")
        if text == "1":
            return 0
        out = 0
        for sym, exp in re.findall(r"([a-z])(?:\^(-?\d+))?", text):
            g = self.z if sym == "z" else self.gens[sym]
            if g is None:
                raise GroupError("no central element z in a plain lift")
            out = self.mul(out, self.power(g, int(exp) if exp else 1))
        return out

    def order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.mul(x, i)
            k += 1
        return k

    def is_central(self, i: int) -> bool:
        return self.elements[i].is_scalar()

    @cached_property
    def center(self) -> list[int]:
        return [i for i, m in enumerate(self.elements) if m.is_scalar()]

    # -- Möbius quotient
    @cached_property
    def mobius_id(self) -> list[int]:
        """Index of the representative of each element's Möbius image."""
        if not self.is_double_cover:
            return list(range(self.lift_order))
        out = [0] * self.lift_order
        for i in range(self.lift_order):
            out[i] = min(i, self.mul(i, self.z))
        return out

    @cached_property
    def mobius_elements(self) -> list[int]:
        return sorted(set(self.mobius_id))

    def mobius_order_of(self, i: int) -> int:
        k, x = 1, i
        while not self.is_central(x) if self.is_double_cover else x != 0:
            x = self.mul(x, i)
            k += 1
        return k

    def preimage(self, H: Iterable[int]) -> list[int]:
        H = set(H)
        if not self.is_double_cover:
            return sorted(H)
        return sorted(H | {self.mul(h, self.z) for h in H})

    # -- conjugacy classes
    @cached_property
    def classes(self) -> list[list[int]]:
        gens = list(dict.fromkeys(self.gens[k] for k in self.gens))
        ginv = [self.inv(g) for g in gens]
        seen = [-1] * self.lift_order
        out = []
        for i in range(self.lift_order):
            if seen[i] >= 0:
                continue
            cls, queue = [i], deque([i])
            seen[i] = len(out)
            while queue:
                x = queue.popleft()
                for g, gi in zip(gens, ginv):
                    y = self.mul(self.mul(g, x), gi)
                    if seen[y] < 0:
                        seen[y] = len(out)
                        cls.append(y)
                        queue.append(y)
            out.append(sorted(cls))
        return out

    @cached_property
    def class_of(self) -> list[int]:
        out = [0] * self.lift_order
        for k, cls in enumerate(self.classes):
            for i in cls:
                out[i] = k
        return out

    # -- labelled generators
    def _label_generators(self, gens: Sequence[Mat2]) -> dict:
        spec, z = self.spec, self.z
        zi = z if z is not None else 0
        if spec.family == "C":
            g = self.find(gens[0])
            return {"g": g, "a": g, "b": self.inv(g)}
        if spec.family == "D":
            r, s = self.find(gens[0]), self.find(gens[1])
            b = self.mul(self.mul(self.inv(r), self.inv(s)), zi)
            return {"r": r, "s": s, "a": r, "b": b, "c": s}
        pref = _labeled_words(spec)
        if pref is not None:
            a, b = self.find(pref[0]), self.find(pref[1])
        else:
            a, b = self._search_generators()
        c = self.mul(self.inv(self.mul(a, b)), zi)
        return {"a": a, "b": b, "c": c}

    def _search_generators(self):
        target = {"T": Cyclotomic.rational(1), "O": Cyclotomic.sqrt(2),
                  "Y": (1 + Cyclotomic.sqrt(5)) / 2}[self.spec.family]
        one = Cyclotomic.rational(1)
        els = self.elements
        for a in range(self.lift_order):
            if els[a].trace != target:
                continue
            for b in range(self.lift_order):
                if els[b].trace != one:
                    continue
                if not els[self.mul(a, b)].trace.is_zero():
                    continue
                if len(self._closure([a, b])) == self.lift_order:
                    return a, b
        raise GroupError("no generator pair found")

    def _closure(self, gens: Sequence[int]) -> set[int]:
        seen, queue = {0}, deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def _check_presentation(self):
        if self.spec.family == "C":
            return
        nu = table1_row(self.spec)["nu"] if not self.binary or self.spec.family != "D" \
            else (self.spec.N, 2, 2)
        g = self.gens
        prod = self.mul(self.mul(g["a"], g["b"]), g["c"])
        want = self.z if self.binary else 0
        vals = [self.power(g[k], n) for k, n in zip("abc", nu)] + [prod]
        if any(v != want for v in vals):
            raise GroupError(f"{self.spec}: presentation relations fail")
        if len(self._closure([g["a"], g["b"]])) != self.lift_order:
            raise GroupError(f"{self.spec}: g_a, g_b do not generate")

    # -- points and orbits
    def point(self, x, y=1) -> ProjPoint:
        return ProjPoint.make(x, y, self.field)

    def act(self, i: int, p: ProjPoint) -> ProjPoint:
        return self.elements[i].apply(p)

    def fixes(self, i: int, p: ProjPoint) -> bool:
        m = self.elements[i]
        return (m.a * p.x + m.b * p.y) * p.y == (m.c * p.x + m.d * p.y) * p.x

    def fixed_points(self, i: int) -> list[ProjPoint]:
        m = self.elements[i]
        if m.is_scalar():
            return []
        if m.b.is_zero() and m.c.is_zero():
            return [self.point(1, 0), self.point(0, 1)]
        o = self.order(i)
        pts = []
        for k in range(o):
            mu = Cyclotomic.zeta(o, k).embed(self.field) if o > 1 else Cyclotomic.rational(1)
            if (mu * mu - m.trace * mu + m.det).is_zero():
                if not m.b.is_zero():
                    p = self.point(m.b, mu - m.a)
                else:
                    p = self.point(mu - m.d, m.c)
                if p not in pts:
                    pts.append(p)
        return pts

    def stabiliser(self, p: ProjPoint) -> list[int]:
        """Möbius elements (as representative indices) fixing p."""
        return [i for i in self.mobius_elements if self.fixes(i, p)]

    def orbit_points(self, p: ProjPoint) -> tuple:
        seen = {}
        for i in self.mobius_elements:
            q = self.act(i, p)
            seen.setdefault(q, None)
        return tuple(sorted(seen, key=ProjPoint.sort_key))

    @cached_property
    def exceptional_orbits(self) -> list[OrbitData]:
        pts = {}
        for i in self.mobius_elements:
            for p in self.fixed_points(i):
                pts.setdefault(p, None)
        orbits, done = [], set()
        for p in sorted(pts, key=ProjPoint.sort_key):
            if p in done:
                continue
            orb = self.orbit_points(p)
            done.update(orb)
            orbits.append(orb)
        return self._label_orbits(orbits)

    def _label_orbits(self, orbits) -> list[OrbitData]:
        G = self.mobius_order
        data = [(G // len(o), o) for o in orbits]
        zero, one = self.point(0), self.point(1)
        if self.spec.family == "C":
            return [OrbitData("a", (zero,), G), OrbitData("b", (self.point(1, 0),), G)]
        if self.spec.family == "D":
            a = next(o for o in data if zero in o[1])
            c = next(o for o in data if one in o[1])
            b = next(o for o in data if o is not a and o is not c)
            ordered = [a, b, c]
        else:
            ordered = sorted(data, key=lambda t: (-t[0], [p.sort_key() for p in t[1]]))
        return [OrbitData(lbl, o, nu) for lbl, (nu, o) in zip("abc", ordered)]

    def orbit(self, label: str) -> OrbitData:
        for o in self.exceptional_orbits:
            if o.label == label:
                return o
        raise GroupError(f"{self.spec} has no orbit {label!r}")

    def orbit_of(self, p: ProjPoint) -> OrbitData:
        for o in self.exceptional_orbits:
            if p in o.points:
                return o
        pts = self.orbit_points(p)
        return OrbitData("generic" if len(pts) == self.mobius_order else "?",
                         pts, self.mobius_order // len(pts))

    @property
    def nu(self) -> tuple[int, ...]:
        return tuple(o.nu for o in self.exceptional_orbits)

    @property
    def labels(self) -> str:
        return "".join(o.label for o in self.exceptional_orbits)

    def cyclic_subgroup(self, label: str) -> list[int]:
        """Möbius image of <g_label> as representative indices."""
        g = self.gens[label]
        out, x = [], 0
        while True:
            m = self.mobius_id[x]
            if m in out:
                break
            out.append(m)
            x = self.mul(x, g)
        return out

    def to_json(self) -> dict:
        return {
            "spec": str(self.spec), "mobius_order": self.mobius_order,
            "lift_order": self.lift_order, "double_cover": self.is_double_cover,
            "conductor": self.conductor,
            "generators": {k: self.elements[v].to_json() for k, v in self.gens.items()},
            "class_sizes": [len(c) for c in self.classes],
            "orbits": [o.to_json() for o in self.exceptional_orbits],
        }


@lru_cache(maxsize=None)
def build_group(spec: GroupSpec | str) -> FiniteMatrixGroup:
    return FiniteMatrixGroup(GroupSpec.parse(spec))


@lru_cache(maxsize=None)
def binary_group(spec: GroupSpec | str) -> FiniteMatrixGroup:
    """Preimage of the Möbius group in SL2 (equal to build_group for T, O, Y, even D)."""
    spec = GroupSpec.parse(spec)
    if spec.family in "TOY" or (spec.family == "D" and spec.N % 2 == 0):
        return build_group(spec)
    return FiniteMatrixGroup(spec, binary=True)


def exceptional_orbits(G: FiniteMatrixGroup) -> list[OrbitData]:
    return G.exceptional_orbits


def stabiliser(G: FiniteMatrixGroup, p: ProjPoint) -> list[int]:
    return G.stabiliser(p)


def orbit_of(G: FiniteMatrixGroup, p: ProjPoint) -> OrbitData:
    return G.orbit_of(p)


def exponent_and_schur(G: FiniteMatrixGroup) -> dict:
    mob = reduce(math.lcm, (G.mobius_order_of(i) for i in G.mobius_elements), 1)
    lift = reduce(math.lcm, (G.order(i) for i in range(G.lift_order)), 1)
    B = binary_group(G.spec)
    binexp = reduce(math.lcm, (B.order(i) for i in range(B.lift_order)), 1)
    nu = table1_row(G.spec)["nu"]
    expected = 2 * reduce(math.lcm, nu, 1)
    return {"exponent": mob, "lift_exponent": lift, "binary_exponent": binexp,
            "binary_exponent_formula": expected,
            "schur": Fraction(2 * G.mobius_order, binexp)}


def regular_fixed_dim(G: FiniteMatrixGroup, H: Iterable[int]) -> int:
    """Dimension of the H-fixed space of the regular representation of G.

    H is given as Möbius representatives.  The permutation action of H on the
    |G| basis vectors is built by left multiplication and the dimension of its
    fixed space is the number of orbits.
    """
    H = list(H)
    labels = {m: k for k, m in enumerate(G.mobius_elements)}
    perms = [[labels[G.mobius_id[G.mul(h, g)]] for g in G.mobius_elements] for h in H]
    parent = list(range(len(labels)))

    def root(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i, j in enumerate(p):
            ri, rj = root(i), root(j)
            if ri != rj:
                parent[ri] = rj
    return len({root(i) for i in range(len(parent))})


def euler_identity(spec: GroupSpec) -> bool:
    nu = table1_row(spec)["nu"]
    lhs = 2 * (1 - Fraction(1, spec.order))
    return lhs == sum(1 - Fraction(1, v) for v in nu)
