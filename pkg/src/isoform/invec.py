"""Invariant vectors: irreducible representation matrices, fixed spaces in
V (x) S^d, generators of isotypical components with poles on an orbit, and
their values at points of the projective line.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

from .binforms import BinaryForm, ground_form, sym_power_matrix
from .chartab import (CharacterError, character_table, inner_product, natural,
                      sym_power_char)
from .cyclofield import Cyclotomic
from .linalg import Echelon, identity, matmul, rank, solve
from .polygroup import FiniteMatrixGroup, OrbitData, ProjPoint


class InvariantError(RuntimeError):
    pass


def _emb(x, n: int) -> Cyclotomic:
    if not isinstance(x, Cyclotomic):
        x = Cyclotomic.rational(x)
    if x.n == n:
        return x
    if n % x.n == 0:
        return x.embed(n)
    return x.minimal().embed(n)


# ---------------------------------------------------------------------------
# representation matrices

@dataclass
class IrrepRealization:
    label: str
    dim: int
    group: FiniteMatrixGroup
    conductor: int
    matrices: dict  # element index -> dim x dim matrix

    def __call__(self, i: int):
        return self.matrices[i]


def work_conductor(G: FiniteMatrixGroup) -> int:
    return math.lcm(G.conductor, G.spec.rep_conductor)


def torus_element(G: FiniteMatrixGroup) -> int:
    """A diagonal non-central element of largest order."""
    best, best_order = None, 0
    for i, m in enumerate(G.elements):
        if m.b.is_zero() and m.c.is_zero() and not m.is_scalar():
            o = G.order(i)
            if o > best_order:
                best, best_order = i, o
    return best


def _matrices_from_gens(G: FiniteMatrixGroup, gens: dict[int, list], n: int) -> dict:
    """Extend generator matrices to all elements along a breadth-first search."""
    dim = len(next(iter(gens.values())))
    one = Cyclotomic.rational(1).embed(n)
    zero = Cyclotomic.rational(0).embed(n)
    mats = {0: identity(dim, one, zero)}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, M in gens.items():
                y = G.mul(x, g)
                if y not in mats:
                    mats[y] = matmul(mats[x], M)
                    nxt.append(y)
        frontier = nxt
    return mats


def _dihedral_two_dim(G: FiniteMatrixGroup, label: str, n: int) -> IrrepRealization:
    N = G.spec.N
    cover = G.is_double_cover
    if label.startswith("psi"):
        k = int(label[3:]) * (2 if cover else 1)
    else:
        k = int(label[4:])
    root = 2 * N if cover else N
    z = _emb(Cyclotomic.zeta(root, k), n)
    zero = _emb(0, n)
    R = [[z, zero], [zero, z.inverse()]]
    # on the cover s = [[0, i], [i, 0]] squares to z; i^k keeps rho(s)^2 = rho(z)
    t = _emb(Cyclotomic.zeta(4, k), n) if cover else _emb(1, n)
    S = [[zero, t], [t, zero]]
    mats = _matrices_from_gens(G, {G.gens["r"]: R, G.gens["s"]: S}, n)
    return IrrepRealization(label, 2, G, n, mats)


def _from_symmetric_power(G: FiniteMatrixGroup, irr, n: int) -> IrrepRealization:
    """Cut the irreducible out of the first S^h in which it occurs once."""
    chi = irr.char
    deg = irr.degree
    h_el = torus_element(G)
    for h in range(0, 2 * G.lift_order + 1):
        mult = inner_product(sym_power_char(G, h), chi)
        if mult != _emb(1, mult.n):
            continue
        # isotypical projector of S^h (action P -> P o g^-1)
        size = h + 1
        zero = _emb(0, n)
        proj = [[zero] * size for _ in range(size)]
        for g in range(G.lift_order):
            c = _emb(chi(g).conjugate(), n)
            if not c:
                continue
            S = sym_power_matrix(G.elements[g], h)
            for r in range(size):
                row, prow = S[r], proj[r]
                for k in range(size):
                    if row[k]:
                        prow[k] = prow[k] + c * row[k]
        # basis of the image adapted to the eigenspaces of the diagonal element
        Sh = sym_power_matrix(G.elements[h_el], h)
        groups: dict = {}
        for k in range(size):
            groups.setdefault(Sh[k][k].minimal(), []).append(k)
        basis = []
        for ks in groups.values():
            ech = Echelon(size)
            for k in ks:
                col = [proj[r][k] for r in range(size)]
                if ech.add(col):
                    basis.append(col)
        if len(basis) != deg:
            raise InvariantError(f"projector image has rank {len(basis)}, expected {deg}")
        # pivot rows making the basis square and invertible
        rows = _independent_rows(basis, size)
        Bsq = [[basis[c][r] for c in range(deg)] for r in rows]
        Binv = _inverse(Bsq, n)
        mats = {}
        for g in range(G.lift_order):
            S = sym_power_matrix(G.elements[g], h)
            SB = [[_dot(S[r], basis[c]) for c in range(deg)] for r in rows]
            mats[g] = matmul(Binv, SB)
        return IrrepRealization(irr.label, deg, G, n, mats)
    raise InvariantError(f"{irr.label} never occurs once in a symmetric power")


def _dot(row, col):
    acc = None
    for x, y in zip(row, col):
        if x and y:
            acc = x * y if acc is None else acc + x * y
    return acc if acc is not None else row[0] * 0


def _independent_rows(basis, size):
    ech = Echelon(len(basis))
    rows = []
    for r in range(size):
        if ech.add([b[r] for b in basis]):
            rows.append(r)
        if len(rows) == len(basis):
            break
    return rows


def _inverse(M, n):
    k = len(M)
    one, zero = _emb(1, n), _emb(0, n)
    aug = [list(M[i]) + [one if i == j else zero for j in range(k)] for i in range(k)]
    ech = Echelon(2 * k)
    for row in aug:
        ech.add(row)
    return [ech.rows[i][k:] for i in range(k)]


_IRREP_CACHE: dict = {}


def irrep_matrices(G: FiniteMatrixGroup, label: str) -> IrrepRealization:
    key = (id(G), label)
    hit = _IRREP_CACHE.get(key)
    if hit is not None and hit.group is G:
        return hit
    tab = character_table(G)
    irr = tab[label]
    n = work_conductor(G)
    if irr.degree == 1:
        mats = {g: [[_emb(irr.char(g), n)]] for g in range(G.lift_order)}
        rep = IrrepRealization(label, 1, G, n, mats)
    elif irr.natural and G.spec.family in "TOY":
        mats = {g: [[_emb(x, n) for x in r] for r in m.rows] for g, m in enumerate(G.elements)}
        rep = IrrepRealization(label, 2, G, n, mats)
    elif G.spec.family == "D":
        rep = _dihedral_two_dim(G, label, n)
    else:
        rep = _from_symmetric_power(G, irr, n)
    check_realization(rep)
    _IRREP_CACHE[key] = rep
    return rep


def check_realization(rep: IrrepRealization) -> None:
    G = rep.group
    irr = character_table(G)[rep.label]
    for cls in G.classes:
        g = cls[0]
        M = rep(g)
        tr = reduce(lambda a, b: a + b, (M[i][i] for i in range(rep.dim)))
        if tr != irr.char(g):
            raise InvariantError(f"{rep.label}: trace mismatch on class of element {g}")
    for a in (G.gens.get("a"), G.gens.get("b")):
        if a is None:
            continue
        for b in (G.gens.get("a"), G.gens.get("b")):
            if matmul(rep(a), rep(b)) != rep(G.mul(a, b)):
                raise InvariantError(f"{rep.label}: not a homomorphism")


# ---------------------------------------------------------------------------
# form tuples and rational vectors

@dataclass
class FormTuple:
    components: tuple
    label: str = ""

    @property
    def degree(self) -> int:
        return self.components[0].degree

    @property
    def dim(self) -> int:
        return len(self.components)

    @classmethod
    def from_vector(cls, vec: Sequence, dim: int, d: int, label: str = "") -> "FormTuple":
        comps = tuple(BinaryForm(d, list(vec[i * (d + 1):(i + 1) * (d + 1)])) for i in range(dim))
        return cls(comps, label)

    def to_vector(self) -> list:
        out = []
        for c in self.components:
            out.extend(c.coeffs)
        return out

    def scale_by(self, F: BinaryForm) -> "FormTuple":
        return FormTuple(tuple(c * F for c in self.components), self.label)

    def evaluate(self, p: ProjPoint) -> list:
        return [c.at(p) for c in self.components]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def to_json(self):
        return [c.to_json() for c in self.components]

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass
class RationalVector:
    numerator: FormTuple
    orbit: OrbitData
    power: int
    denominator: BinaryForm  # the ground form of the orbit, before raising to `power`

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def evaluate(self, p: ProjPoint) -> list:
        if p in self.orbit.points:
            raise ZeroDivisionError("point lies on the pole orbit")
        den = self.denominator.at(p) ** self.power
        inv = den.inverse()
        return [v * inv for v in self.numerator.evaluate(p)]

    def same_function(self, other: "RationalVector") -> bool:
        if self.orbit.points != other.orbit.points:
            return False
        F = self.denominator
        a = self.numerator.scale_by(F ** other.power) if other.power else self.numerator
        b = other.numerator.scale_by(F ** self.power) if self.power else other.numerator
        return a.to_vector() == b.to_vector()

    def to_json(self):
        return {"numerator": self.numerator.to_json(), "orbit": self.orbit.label,
                "power": self.power, "denominator": self.denominator.to_json()}


def homogenise(v: FormTuple, G: FiniteMatrixGroup, orbit: OrbitData) -> RationalVector:
    """v / F_orbit^r with r |orbit| = deg v; the zero vector if |orbit| does not divide deg v."""
    F = ground_form(G, orbit).form
    if v.degree % orbit.d:
        zero = FormTuple(tuple(BinaryForm.zero(0) for _ in v.components), v.label)
        return RationalVector(zero, orbit, 0, F)
    return RationalVector(v, orbit, v.degree // orbit.d, F)


# ---------------------------------------------------------------------------
# invariant vectors

def predicted_dim(G: FiniteMatrixGroup, label: str, d: int) -> int:
    irr = character_table(G)[label]
    # dimension of (V (x) S^d)^G, with S^d carrying the action P -> P o g^-1
    q = inner_product(irr.char, sym_power_char(G, d))
    return int(q.to_fraction())


def _tensor_apply(R, S, V):
    """(R (x) S) applied to V stored as dim rows of length d+1: R V S^T."""
    VS = [[_dot(row, srow) for srow in S] for row in V]
    return [[_dot([R[i][j] for j in range(len(R))], [VS[j][k] for j in range(len(R))])
             for k in range(len(S))] for i in range(len(R))]


_INV_CACHE: dict = {}


def invariant_basis(G: FiniteMatrixGroup, label: str, d: int) -> list[FormTuple]:
    key = (id(G), label, d)
    hit = _INV_CACHE.get(key)
    if hit is not None and hit[0] is G:
        return hit[1]
    basis = _invariant_basis(G, label, d)
    _INV_CACHE[key] = (G, basis)
    return basis


def _invariant_basis(G: FiniteMatrixGroup, label: str, d: int) -> list[FormTuple]:
    rep = irrep_matrices(G, label)
    n = rep.conductor
    dim = rep.dim
    target = predicted_dim(G, label, d)
    if target == 0 and d >= 0:
        return []
    one, zero = _emb(1, n), _emb(0, n)
    t = torus_element(G)
    Rt, St = rep(t), sym_power_matrix(G.elements[t], d)
    cols = [(i, k) for i in range(dim) for k in range(d + 1) if Rt[i][i] * St[k][k] == one]
    if any(Rt[i][j] for i in range(dim) for j in range(dim) if i != j):
        cols = [(i, k) for i in range(dim) for k in range(d + 1)]
    ncols = len(cols)
    gens = [G.gens["b"], G.gens["a"]]
    mats = [(rep(g), sym_power_matrix(G.elements[g], d)) for g in gens]
    ech = Echelon(ncols)

    def vectors():
        out = []
        for v in ech.nullspace(zero, one):
            full = [[zero] * (d + 1) for _ in range(dim)]
            for (i, k), x in zip(cols, v):
                full[i][k] = x
            out.append(full)
        return out

    def verified(vs):
        for R, S in mats:
            for V in vs:
                if _tensor_apply(R, S, V) != V:
                    return False
        return True

    result = None
    for R, S in mats:
        for i2 in range(dim):
            for k2 in range(d + 1):
                row = []
                for (i, k) in cols:
                    x = R[i2][i] * S[k2][k] if R[i2][i] and S[k2][k] else zero
                    if i == i2 and k == k2:
                        x = x - one
                    row.append(x)
                if not ech.add(row):
                    continue
                if ncols - ech.rank == target:
                    vs = vectors()
                    if verified(vs):
                        result = vs
                        break
            if result is not None:
                break
        if result is not None:
            break
    if result is None:
        result = vectors()
    if len(result) != target:
        raise InvariantError(f"{G.spec} {label} degree {d}: found {len(result)} invariant "
                             f"vectors, character theory predicts {target}")
    return [FormTuple(tuple(BinaryForm(d, V[i]) for i in range(dim)), label) for V in result]


# ---------------------------------------------------------------------------
# generators of isotypical components

@dataclass
class GeneratorSet:
    label: str
    orbit: OrbitData
    generators: list
    degree: int
    base_ring: str

    @property
    def count(self) -> int:
        return len(self.generators)


def pole_orbit(G: FiniteMatrixGroup, spec: str) -> OrbitData:
    """Orbit from 'a', 'b', 'c', 'pt:<rational>' or 'pt:inf'."""
    spec = spec.strip()
    if spec in ("a", "b", "c"):
        return G.orbit(spec)
    if spec.startswith("pt:"):
        return G.orbit_of(ProjPoint.parse(spec[3:], G.field))
    raise InvariantError(f"cannot parse orbit {spec!r}")


def automorphic_description(G: FiniteMatrixGroup, orbit: OrbitData) -> str:
    others = [o.label for o in G.exceptional_orbits if o.points != orbit.points]
    return f"C[I_{others[0]}]" if others else "C"


def generator_set(G: FiniteMatrixGroup, label: str, orbit: OrbitData, m: int = 1) -> GeneratorSet:
    tab = character_table(G)
    irr = tab[label]
    if irr.spinorial:
        raise CharacterError(f"{label} is spinorial")
    if label == tab.trivial_label:
        raise CharacterError("the trivial component is handled by trivial_generators")
    d = m * G.mobius_order
    basis = invariant_basis(G, label, d)
    gens = [homogenise(v, G, orbit) for v in basis]
    return GeneratorSet(label, orbit, gens, d, automorphic_description(G, orbit))


def trivial_generators(G: FiniteMatrixGroup, orbit: OrbitData, m: int = 1) -> GeneratorSet:
    """1 and the secondary invariants F_i^(r nu_i) F_j^((m-r) nu_j), r = 1..m-1."""
    tab = character_table(G)
    F = ground_form(G, orbit).form
    others = [o for o in G.exceptional_orbits if o.points != orbit.points][:2]
    if len(others) < 2:
        others = list(G.exceptional_orbits)[:2]
    gens = [RationalVector(FormTuple((BinaryForm.constant(1),), tab.trivial_label), orbit, 0, F)]
    Fi = ground_form(G, others[0]).form ** others[0].nu
    Fj = ground_form(G, others[1]).form ** others[1].nu
    for r in range(1, m):
        num = FormTuple(((Fi ** r) * (Fj ** (m - r)),), tab.trivial_label)
        gens.append(homogenise(num, G, orbit))
    return GeneratorSet(tab.trivial_label, orbit, gens, m * G.mobius_order,
                        automorphic_description(G, orbit))


def fixed_space_dim(G: FiniteMatrixGroup, label: str, H: Sequence[int]) -> int:
    """Rank of the averaging projector of the realised irrep over H (lift indices)."""
    rep = irrep_matrices(G, label)
    n = rep.conductor
    zero = _emb(0, n)
    P = [[zero] * rep.dim for _ in range(rep.dim)]
    for h in H:
        M = rep(h)
        P = [[P[i][j] + M[i][j] for j in range(rep.dim)] for i in range(rep.dim)]
    return rank(P)


def evaluate_span(G: FiniteMatrixGroup, label: str, orbit: OrbitData, point: ProjPoint,
                  extra: bool = False) -> tuple[int, list]:
    """Rank and basis of the values at `point` of the generators (poles on `orbit`)."""
    if point in orbit.points:
        raise ZeroDivisionError("evaluation point lies on the pole orbit")
    gs = generator_set(G, label, orbit)
    vals = [g.evaluate(point) for g in gs.generators]
    if extra:
        vals += [homogenise(v, G, orbit).evaluate(point)
                 for v in invariant_basis(G, label, 2 * G.mobius_order)]
    ech = Echelon(len(vals[0]))
    basis = []
    for v in vals:
        if ech.add(v):
            basis.append(v)
    return ech.rank, basis


def stabiliser_dim(G: FiniteMatrixGroup, label: str, point: ProjPoint) -> int:
    H = G.preimage(G.stabiliser(point))
    return fixed_space_dim(G, label, H)


def syzygy_coeffs(G: FiniteMatrixGroup) -> tuple[Cyclotomic, Cyclotomic]:
    """(c1, c2) with F_a^nu_a = c1 F_b^nu_b + c2 F_c^nu_c."""
    if G.spec.family == "C":
        raise InvariantError("cyclic groups have only two exceptional orbits")
    P = {o.label: ground_form(G, o).form ** o.nu for o in G.exceptional_orbits}
    A = [[b, c] for b, c in zip(P["b"].coeffs, P["c"].coeffs)]
    x = solve(A, list(P["a"].coeffs), zero=Cyclotomic.rational(0), one=Cyclotomic.rational(1))
    if x is None:
        raise InvariantError(f"{G.spec}: no linear relation among the invariant powers")
    return x[0], x[1]


def surjectivity_check(G: FiniteMatrixGroup, label: str, orbit: OrbitData) -> bool:
    """Every degree-2|G| invariant vector is a C[I]-combination of the degree-|G| generators.

    The products F^nu v lie in the component, so it is enough that their span
    has the dimension given by the character inner product.
    """
    basis1 = invariant_basis(G, label, G.mobius_order)
    FG = ground_form(G, orbit).form ** orbit.nu
    other = next(o for o in G.exceptional_orbits if o.points != orbit.points)
    FI = ground_form(G, other).form ** other.nu
    span = [v.scale_by(FG).to_vector() for v in basis1] + [v.scale_by(FI).to_vector() for v in basis1]
    return rank(span) == predicted_dim(G, label, 2 * G.mobius_order)


def quotient_model_check(G: FiniteMatrixGroup, gen: RationalVector) -> bool:
    F = gen.denominator ** gen.orbit.nu
    lifted = RationalVector(gen.numerator.scale_by(F), gen.orbit, gen.power + gen.orbit.nu,
                            gen.denominator)
    return lifted.same_function(gen)
