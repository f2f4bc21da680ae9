"""Determinants of invariant vectors and their divisors.

The determinant of the chi(1) generators of an isotypical component is a
form of degree chi(1)|G|.  It factors as a scalar times a monomial in the
ground forms, and the exponents are compared with nu_i kappa(chi)_i.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .binforms import BinaryForm, divide_exact, ground_form, ground_forms
from .chartab import CharacterError, character_table, inner_product, kappa, trivial
from .invec import (GeneratorSet, generator_set, invariant_basis, pole_orbit)
from .polygroup import FiniteMatrixGroup, OrbitData, ProjPoint


class DeterminantError(RuntimeError):
    pass


def form_determinant(M: Sequence[Sequence[BinaryForm]]) -> BinaryForm:
    """Laplace expansion along the first row, with minors memoised by column set."""
    k = len(M)
    memo: dict = {}

    def minor(row: int, cols: tuple) -> BinaryForm:
        if row == k:
            return BinaryForm.constant(1)
        hit = memo.get(cols)
        if hit is not None:
            return hit
        acc = None
        for pos, c in enumerate(cols):
            entry = M[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if sub.is_zero():
                continue
            term = entry * sub
            if pos % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            deg = sum(M[r][0].degree for r in range(row, k))
            acc = BinaryForm.zero(deg)
        memo[cols] = acc
        return acc

    return minor(0, tuple(range(k)))


def determinant_form(gens: GeneratorSet | Sequence) -> BinaryForm:
    """Determinant of the numerator matrix: rows are generators, columns components."""
    vecs = gens.generators if isinstance(gens, GeneratorSet) else gens
    rows = [g.numerator.components if hasattr(g, "numerator") else g.components for g in vecs]
    if len(rows) != len(rows[0]):
        raise DeterminantError(f"{len(rows)} generators with {len(rows[0])} components")
    D = form_determinant(rows)
    if D.is_zero():
        raise DeterminantError("determinant vanishes: generators are not free")
    return D


@dataclass
class Factorization:
    exponents: dict  # orbit label -> exponent
    residual: object  # nonzero scalar

    def as_tuple(self, labels: str) -> tuple:
        return tuple(self.exponents[l] for l in labels)


def factor_ground_forms(P: BinaryForm, G: FiniteMatrixGroup) -> Factorization:
    if P.is_zero():
        raise DeterminantError("cannot factor the zero form")
    exps = {}
    for label, gf in ground_forms(G).items():
        e = 0
        while True:
            Q = divide_exact(P, gf.form)
            if Q is None:
                break
            P, e = Q, e + 1
        exps[label] = e
    if P.degree != 0:
        raise DeterminantError(f"{G.spec}: residual factor of degree {P.degree} "
                               "is not a monomial in the ground forms")
    return Factorization(exps, P.coeffs[0])


@dataclass
class Divisor:
    coeffs: dict  # orbit label (a, b, c, or 'pole') -> integer coefficient

    def zero_part(self, labels: str) -> tuple:
        return tuple(self.coeffs.get(l, 0) for l in labels)

    def __add__(self, other: "Divisor") -> "Divisor":
        keys = list(dict.fromkeys(list(self.coeffs) + list(other.coeffs)))
        return Divisor({k: self.coeffs.get(k, 0) + other.coeffs.get(k, 0) for k in keys})

    def __str__(self):
        parts = [f"{v}*{k}" for k, v in self.coeffs.items() if v]
        return " + ".join(parts) if parts else "0"


_DELTA_CACHE: dict = {}


def delta(G: FiniteMatrixGroup, label: str) -> dict:
    """Ground-form exponents of the determinant of the degree-|G| invariant vectors."""
    key = (id(G), label)
    hit = _DELTA_CACHE.get(key)
    if hit is not None and hit[0] is G:
        return hit[1]
    tab = character_table(G)
    if label == tab.trivial_label:
        out = {o.label: 0 for o in G.exceptional_orbits}
    else:
        basis = invariant_basis(G, label, G.mobius_order)
        out = factor_ground_forms(determinant_form(basis), G).exponents
    _DELTA_CACHE[key] = (G, out)
    return out


def divisor_of_char(G: FiniteMatrixGroup, labels: Iterable[str] | dict, orbit: OrbitData) -> Divisor:
    """Divisor of the determinant for a character given as a multiset of irreducibles."""
    tab = character_table(G)
    if isinstance(labels, dict):
        items = list(labels.items())
    else:
        items = [(l, 1) for l in labels]
    total = Divisor({o.label: 0 for o in G.exceptional_orbits})
    for label, mult in items:
        irr = tab[label]
        if irr.spinorial:
            raise CharacterError(f"{label} is spinorial")
        if label == tab.trivial_label:
            continue
        dl = delta(G, label)
        d = Divisor(dict(dl))
        # the homogenising denominator F_orbit^(nu chi(1)) contributes the pole
        pole = irr.degree * orbit.nu
        key = orbit.label if orbit.label in dl else "pole"
        d.coeffs[key] = d.coeffs.get(key, 0) - pole
        for _ in range(mult):
            total = total + d
    return total


@dataclass
class DetCheck:
    label: str
    orbit: str
    delta: tuple
    nu_kappa: tuple
    real: bool
    degree_sum: Fraction
    expected_sum: Fraction
    ok: bool
    note: str = ""


def verify_det_theorem(G: FiniteMatrixGroup, orbits: Sequence[str] = ("a", "b", "c", "pt:2")) -> list[DetCheck]:
    tab = character_table(G)
    labels = G.labels
    nus = {o.label: o.nu for o in G.exceptional_orbits}
    out = []
    for irr in tab.nonspinorial():
        if irr.label == tab.trivial_label:
            continue
        kap = kappa(irr.label, G)
        nk = tuple(kap.nu_kappa)
        for ospec in orbits:
            if ospec in ("c",) and "c" not in labels:
                continue
            orb = pole_orbit(G, ospec)
            gens = generator_set(G, irr.label, orb)
            if gens.count != irr.degree:
                out.append(DetCheck(irr.label, ospec, (), nk, irr.real, Fraction(0),
                                    Fraction(irr.degree), False,
                                    f"{gens.count} generators, expected {irr.degree}"))
                continue
            D = determinant_form(gens)
            fac = factor_ground_forms(D, G)
            dl = fac.as_tuple(labels)
            s = sum(Fraction(fac.exponents[l], nus[l]) for l in labels)
            triv = inner_product(irr.char, trivial(G)).to_fraction()
            expected = irr.degree - triv
            matches = all(Fraction(x) == y for x, y in zip(dl, nk))
            if irr.real:
                ok = matches and s == expected
                note = "" if ok else "real character but delta differs from nu*kappa"
            else:
                ok = (not matches) and s == expected
                note = "formula fails as expected for a non-real character" if ok else \
                    "non-real character unexpectedly matches nu*kappa"
            out.append(DetCheck(irr.label, ospec, dl, nk, irr.real, s, expected, ok, note))
    return out


def vanishing_order_numeric(P: BinaryForm, point: ProjPoint, radii=(1e-2, 5e-3, 2.5e-3)) -> float:
    """Estimate the order of vanishing of P at a finite point from float probes."""
    if point.is_infinity:
        raise ValueError("use a finite point")
    coeffs = [c.to_numeric() for c in P.coeffs]
    x0 = point.x.to_numeric()

    def val(x):
        # P(x, 1) = sum c_k x^(d-k)
        acc = 0j
        for c in coeffs:
            acc = acc * x + c
        return acc

    dirs = [cmath.exp(2j * math.pi * t / 7 + 0.3j) for t in range(7)]
    logs = []
    for r in radii:
        m = sum(abs(val(x0 + r * u)) for u in dirs) / len(dirs)
        logs.append((math.log(r), math.log(m)))
    slopes = [(b[1] - a[1]) / (b[0] - a[0]) for a, b in zip(logs, logs[1:])]
    return sum(slopes) / len(slopes)
