"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored in the power basis 1, z, ..., z^(phi(n)-1) reduced modulo
the n-th cyclotomic polynomial, as a tuple of integer numerators over a single
positive common denominator.  The representation is canonical, so equality of
two elements at the same conductor is equality of the stored tuples.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class ConductorMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# field data

def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    # integer polynomials, lowest degree first; b monic
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    assert not any(a), "inexact division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divexact(p, list(cyclotomic_polynomial(d)))
    return tuple(p)


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis vectors of z^e for e = 0..n-1."""
    phi = totient(n)
    poly = cyclotomic_polynomial(n)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for t in range(phi):
                cur[t] -= top * poly[t]
    return tuple(rows)


def _reduce(res: list[int], n: int) -> list[int]:
    phi = totient(n)
    poly = cyclotomic_polynomial(n)
    for e in range(len(res) - 1, phi - 1, -1):
        c = res[e]
        if c:
            base = e - phi
            for t in range(phi):
                pt = poly[t]
                if pt:
                    res[base + t] -= c * pt
    return res[:phi]


@lru_cache(maxsize=None)
def _embedding(k: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Images of 1, z_k, ..., z_k^(phi(k)-1) in the power basis of Q(zeta_n)."""
    step = n // k
    table = _power_table(n)
    return tuple(table[(j * step) % n] for j in range(totient(k)))


@lru_cache(maxsize=None)
def _preimage_data(k: int, n: int):
    # pick phi(k) rows of the embedding matrix forming an invertible block
    emb = _embedding(k, n)
    phik, phin = totient(k), totient(n)
    cols = [[Fraction(emb[j][r]) for j in range(phik)] for r in range(phin)]
    rows_sel: list[int] = []
    basis: list[list[Fraction]] = []
    for r in range(phin):
        v = list(cols[r])
        for b, p in zip(basis, _pivots(basis)):
            if v[p]:
                f = v[p] / b[p]
                v = [x - f * y for x, y in zip(v, b)]
        if any(v):
            basis.append(v)
            rows_sel.append(r)
            if len(rows_sel) == phik:
                break
    block = [cols[r] for r in rows_sel]
    return tuple(rows_sel), _invert_rational(block)


def _pivots(basis):
    out = []
    for b in basis:
        out.append(next(i for i, x in enumerate(b) if x))
    return out


def _invert_rational(m: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(m)]
    for c in range(size):
        p = next(r for r in range(c, size) if aug[r][c])
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(size):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[size:] for row in aug]


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------

class Cyclotomic:
    """Immutable element of Q(zeta_n)."""

    __slots__ = ("n", "num", "den", "_hash")

    def __init__(self, n: int, coeffs: Iterable = (0,)):
        coeffs = [Fraction(c) for c in coeffs]
        phi = totient(n)
        if len(coeffs) < phi:
            coeffs += [Fraction(0)] * (phi - len(coeffs))
        if len(coeffs) > phi:
            # accept any polynomial in z and reduce it
            den = math.lcm(*(c.denominator for c in coeffs))
            nums = [int(c * den) for c in coeffs]
            nums = _reduce(nums, n)
        else:
            den = math.lcm(*(c.denominator for c in coeffs))
            nums = [int(c * den) for c in coeffs]
        self._set(n, nums, den)

    def _set(self, n, nums, den):
        g = math.gcd(*nums, den)
        if g != 1:
            nums = [x // g for x in nums]
            den //= g
        self.n = n
        self.num = tuple(nums)
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, n: int, nums, den: int = 1) -> "Cyclotomic":
        obj = cls.__new__(cls)
        if den != 1:
            obj._set(n, nums, den)
        else:
            obj.n = n
            obj.num = tuple(nums)
            obj.den = 1
            obj._hash = None
        return obj

    # constructors ---------------------------------------------------------

    @classmethod
    def rational(cls, q, n: int = 1) -> "Cyclotomic":
        q = Fraction(q)
        return cls._raw(n, [q.numerator] + [0] * (totient(n) - 1), q.denominator)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        """zeta_n ** k with zeta_n = exp(2 pi i / n)."""
        return cls._raw(n, _power_table(n)[k % n])

    @classmethod
    def sqrt(cls, d: int) -> "Cyclotomic":
        """Principal square root of a small integer d via Gauss sums."""
        if d == 0:
            return cls.rational(0)
        sign = -1 if d < 0 else 1
        d = abs(d)
        sq = 1
        for p in range(2, d + 1):
            while d % (p * p) == 0:
                d //= p * p
                sq *= p
        if d == 1:
            out = cls.rational(sq)
            return out * cls.zeta(4) if sign < 0 else out
        factors = [cls.rational(sq)] + [_sqrt_prime(p) for p in _prime_factors(d)]
        if sign < 0:
            factors.append(cls.zeta(4))
        factors = lcm_embed(factors)
        acc = factors[0]
        for f in factors[1:]:
            acc = acc * f
        return acc.minimal()

    # basic protocol -------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def embed(self, m: int) -> "Cyclotomic":
        """The same number viewed in Q(zeta_m); requires n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ConductorMismatch(f"cannot embed conductor {self.n} into {m}")
        emb = _embedding(self.n, m)
        out = [0] * totient(m)
        for c, row in zip(self.num, emb):
            if c:
                for t, r in enumerate(row):
                    if r:
                        out[t] += c * r
        return Cyclotomic._raw(m, out, self.den)

    def minimal(self) -> "Cyclotomic":
        """The same number at the smallest conductor whose field contains it."""
        if self.is_rational():
            return Cyclotomic._raw(1, self.num[:1], self.den) if self.n != 1 else self
        for k in _divisors(self.n):
            if k == self.n:
                return self
            if k % 4 == 2:
                continue
            rows, inv = _preimage_data(k, self.n)
            sub = [self.num[r] for r in rows]
            x = [sum(row[j] * sub[j] for j in range(len(sub))) for row in inv]
            if any(v.denominator != 1 for v in x):
                continue
            cand = Cyclotomic._raw(k, [int(v) for v in x], self.den)
            if cand.embed(self.n).num == self.num:
                return cand
        return self

    def __hash__(self):
        if self._hash is None:
            m = self.minimal()
            self._hash = hash((m.n, m.num, m.den))
        return self._hash

    def _common(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.rational(other)
        a, b = self, other
        if a.n == b.n:
            return a, b
        if b.n % a.n == 0:
            return a.embed(b.n), b
        if a.n % b.n == 0:
            return a, b.embed(a.n)
        raise ConductorMismatch(f"conductors {a.n} and {b.n} are incompatible")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        try:
            a, b = self._common(other)
        except ConductorMismatch:
            return self.minimal()._eq_min(other.minimal())
        return a.num == b.num and a.den == b.den

    def _eq_min(self, other):
        return self.n == other.n and self.num == other.num and self.den == other.den

    def __lt__(self, other):
        # total order used only for deterministic sorting
        return self._sort_key() < other._sort_key()

    def _sort_key(self):
        return tuple(Fraction(x, self.den) for x in self.num)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            nums = list(self.num)
            if self.den == q.denominator:
                nums[0] += q.numerator
                return Cyclotomic._raw(self.n, nums, self.den) if self.den != 1 else Cyclotomic._raw(self.n, nums)
            d = self.den * q.denominator
            nums = [x * q.denominator for x in nums]
            nums[0] += q.numerator * self.den
            return Cyclotomic._raw(self.n, nums, d)
        a, b = self._common(other)
        if a.den == b.den:
            return Cyclotomic._raw(a.n, [x + y for x, y in zip(a.num, b.num)], a.den) if a.den != 1 \
                else Cyclotomic._raw(a.n, [x + y for x, y in zip(a.num, b.num)])
        da, db = a.den, b.den
        return Cyclotomic._raw(a.n, [x * db + y * da for x, y in zip(a.num, b.num)], da * db)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.n, [-x for x in self.num], self.den) if self.den != 1 \
            else Cyclotomic._raw(self.n, [-x for x in self.num])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-Fraction(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclotomic._raw(self.n, [x * q.numerator for x in self.num], self.den * q.denominator)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.n == 1:
            return Cyclotomic._raw(self.n, [x * other.num[0] for x in self.num], self.den * other.den)
        if self.n == 1:
            return Cyclotomic._raw(other.n, [x * self.num[0] for x in other.num], self.den * other.den)
        a, b = self._common(other)
        phi = len(a.num)
        res = [0] * (2 * phi - 1)
        bn = b.num
        for i, ai in enumerate(a.num):
            if ai:
                for j, bj in enumerate(bn):
                    if bj:
                        res[i + j] += ai * bj
        return Cyclotomic._raw(a.n, _reduce(res, a.n), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.is_rational():
            a = self.num[0]
            sgn = -1 if a < 0 else 1
            return Cyclotomic._raw(self.n, [sgn * self.den] + [0] * (len(self.num) - 1), abs(a))
        return _inverse_num(self.n, self.num) * self.den

    def _inverse_euclid(self) -> "Cyclotomic":
        # extended Euclid on the coefficient polynomial modulo Phi_n
        a = _strip([Fraction(x) for x in self.num])
        m = [Fraction(x) for x in cyclotomic_polynomial(self.n)]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        r0, r1 = m, a
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        c = r1[0]
        return Cyclotomic(self.n, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.rational(1, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Image under zeta -> zeta^-1 (complex conjugation)."""
        table = _power_table(self.n)
        out = [0] * len(self.num)
        for k, c in enumerate(self.num):
            if c:
                for t, r in enumerate(table[(-k) % self.n]):
                    if r:
                        out[t] += c * r
        return Cyclotomic._raw(self.n, out, self.den)

    def galois(self, a: int) -> "Cyclotomic":
        """Image under zeta -> zeta^a, gcd(a, n) = 1."""
        table = _power_table(self.n)
        out = [0] * len(self.num)
        for k, c in enumerate(self.num):
            if c:
                for t, r in enumerate(table[(a * k) % self.n]):
                    if r:
                        out[t] += c * r
        return Cyclotomic._raw(self.n, out, self.den)

    def is_real(self) -> bool:
        return self == self.conjugate()

    def to_numeric(self) -> complex:
        re = []
        im = []
        for k, c in enumerate(self.num):
            if c:
                w = cmath.exp(2j * math.pi * k / self.n)
                q = Fraction(c, self.den)
                re.append(float(q) * w.real)
                im.append(float(q) * w.imag)
        return complex(math.fsum(re), math.fsum(im))

    # serialisation --------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "c": [[str(q.numerator), str(q.denominator)] for q in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        return cls(int(data["n"]), [Fraction(int(a), int(b)) for a, b in data["c"]])

    def __repr__(self):
        return f"Cyclotomic({self.n}, {self})"

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        terms = []
        for k, q in enumerate(self.coeffs):
            if not q:
                continue
            mon = "" if k == 0 else (f"z{self.n}" if k == 1 else f"z{self.n}^{k}")
            if k == 0:
                terms.append(str(q))
            elif q == 1:
                terms.append(mon)
            elif q == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{q}*{mon}")
        return "+".join(terms).replace("+-", "-")


@lru_cache(maxsize=8192)
def _inverse_num(n: int, num: tuple) -> Cyclotomic:
    # inverse of the integer numerator; repeated points and matrix entries hit this often
    return Cyclotomic._raw(n, num)._inverse_euclid()


def _prime_factors(d: int) -> list[int]:
    out, p = [], 2
    while p * p <= d:
        while d % p == 0:
            out.append(p)
            d //= p
        p += 1
    if d > 1:
        out.append(d)
    return out


def _sqrt_prime(p: int) -> Cyclotomic:
    if p == 2:
        return Cyclotomic.zeta(8) + Cyclotomic.zeta(8, 7)
    # quadratic Gauss sum g = sum (a/p) z_p^a, g^2 = (-1)^((p-1)/2) p
    g = Cyclotomic.rational(0, p)
    for a in range(1, p):
        leg = pow(a, (p - 1) // 2, p)
        g = g + (Cyclotomic.zeta(p, a) if leg == 1 else -Cyclotomic.zeta(p, a))
    if p % 4 == 3:
        # g = i sqrt(p)
        g = g.embed(4 * p) * (-Cyclotomic.zeta(4))
    return g


def _strip(p):
    p = list(p)
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def _pdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _strip(q), _strip(a[: len(b) - 1] or [Fraction(0)])


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _strip([x - y for x, y in zip(a, b)])


def lcm_embed(values: Sequence[Cyclotomic]) -> list[Cyclotomic]:
    """Embed all values into the field of the lcm of their conductors."""
    n = math.lcm(*(v.n for v in values))
    return [v.embed(n) for v in values]


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)


def golden_phi(sign: int = 1) -> Cyclotomic:
    """(1 + sign*sqrt 5)/2 in Q(zeta_5)."""
    return (Cyclotomic.rational(1, 5) + sign * Cyclotomic.sqrt(5)) * Fraction(1, 2)
