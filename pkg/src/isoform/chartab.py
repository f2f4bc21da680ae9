"""Character tables of the lifted polyhedral groups and related class functions.

The tables of the binary tetrahedral, octahedral and icosahedral groups are
shipped as data and attached to the constructed groups by locating each
column's word (1, g_a, g_b^2, z, ...) among the enumerated elements.  The
cyclic and dihedral tables are produced from closed formulas.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .cyclofield import Cyclotomic
from .polygroup import FiniteMatrixGroup, GroupSpec, build_group, table1_row


class CharacterError(ValueError):
    pass


def _c(x, n: int) -> Cyclotomic:
    if not isinstance(x, Cyclotomic):
        x = Cyclotomic.rational(x)
    return x if x.n == n else x.embed(n)


class ClassFunction:
    """Exact values of a class function, one per conjugacy class."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteMatrixGroup, values: Sequence):
        self.group = group
        n = group.field
        self.values = tuple(_c(v, n) for v in values)
        if len(self.values) != len(group.classes):
            raise CharacterError("one value per conjugacy class expected")

    @classmethod
    def from_elements(cls, group, fn) -> "ClassFunction":
        return cls(group, [fn(c[0]) for c in group.classes])

    def __call__(self, i: int) -> Cyclotomic:
        """Value at the element with index i."""
        return self.values[self.group.class_of[i]]

    @property
    def degree(self) -> Cyclotomic:
        return self.values[self.group.class_of[0]]

    def _same(self, other):
        if other.group is not self.group:
            raise CharacterError("class functions live on different groups")

    def __add__(self, other):
        self._same(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._same(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._same(other)
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.group, [a * other for a in self.values])

    __rmul__ = __mul__

    def __neg__(self):
        return ClassFunction(self.group, [-a for a in self.values])

    def __eq__(self, other):
        return (isinstance(other, ClassFunction) and other.group is self.group
                and self.values == other.values)

    def __hash__(self):
        return hash(self.values)

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, [a.conjugate() for a in self.values])

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def is_real(self) -> bool:
        return all(v.is_real() for v in self.values)

    def to_json(self):
        return [v.to_json() for v in self.values]


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    if f.group is not g.group:
        raise CharacterError("inner product of class functions on different groups")
    G = f.group
    acc = _c(0, G.field)
    for cls, a, b in zip(G.classes, f.values, g.values):
        if a and b:
            acc = acc + (a * b.conjugate()) * len(cls)
    return acc * Fraction(1, G.lift_order)


def trivial(G: FiniteMatrixGroup) -> ClassFunction:
    return ClassFunction(G, [1] * len(G.classes))


def natural(G: FiniteMatrixGroup) -> ClassFunction:
    """Trace of the defining matrices."""
    return ClassFunction.from_elements(G, lambda i: G.elements[i].trace)


def determinant(G: FiniteMatrixGroup) -> ClassFunction:
    return ClassFunction.from_elements(G, lambda i: G.elements[i].det)


def regular_lift(G: FiniteMatrixGroup) -> ClassFunction:
    """Regular character of the lifted group."""
    return ClassFunction.from_elements(G, lambda i: G.lift_order if i == 0 else 0)


def regular_pullback(G: FiniteMatrixGroup) -> ClassFunction:
    """Regular character of the Möbius group pulled back to the lift."""
    return ClassFunction.from_elements(
        G, lambda i: G.mobius_order if G.is_central(i) and G.mobius_id[i] == 0 else 0)


# ---------------------------------------------------------------------------
# symmetric powers

_SYM_CACHE: dict = {}


def sym_power_char(G: FiniteMatrixGroup, h: int) -> ClassFunction:
    """Character of S^h of the defining representation, by the two-term recurrence.

    chi_h = chi * chi_{h-1} - det * chi_{h-2} with chi_{-1} = 0, chi_0 = 1; for
    the SL2 lifts det = 1 and this is the usual Clebsch-Gordan recurrence.
    """
    if h < -1:
        raise ValueError("h must be >= -1")
    seq = _SYM_CACHE.setdefault(id(G), [ClassFunction(G, [0] * len(G.classes)), trivial(G)])
    if seq[0].group is not G:
        seq[:] = [ClassFunction(G, [0] * len(G.classes)), trivial(G)]
    chi, det = natural(G), determinant(G)
    while len(seq) < h + 2:
        seq.append(chi * seq[-1] - det * seq[-2])
    return seq[h + 1]


def eigenvalues(G: FiniteMatrixGroup, i: int) -> tuple[Cyclotomic, Cyclotomic]:
    m = G.elements[i]
    o = G.order(i)
    n = G.field
    found = []
    for k in range(o):
        mu = _c(Cyclotomic.zeta(o, k), n)
        if (mu * mu - m.trace * mu + m.det).is_zero():
            found.append(mu)
    if len(found) == 1:
        found.append(found[0])
    if len(found) != 2:
        raise CharacterError("eigenvalues are not roots of unity of the element order")
    return found[0], found[1]


def sym_power_char_closed(G: FiniteMatrixGroup, h: int) -> ClassFunction:
    """Independent formula: complete homogeneous sum of the two eigenvalues."""
    def value(i):
        if h < 0:
            return 0
        a, b = eigenvalues(G, i)
        acc = _c(0, G.field)
        for k in range(h + 1):
            acc = acc + a ** k * b ** (h - k)
        return acc
    return ClassFunction.from_elements(G, value)


# ---------------------------------------------------------------------------
# character tables

@dataclass
class Irreducible:
    label: str
    char: ClassFunction
    degree: int
    spinorial: bool
    real: bool
    natural: bool = False


@dataclass
class CharacterTable:
    group: FiniteMatrixGroup
    irreducibles: list[Irreducible]
    columns: list[str] = field(default_factory=list)  # words naming the class representatives
    column_classes: list[int] = field(default_factory=list)

    def __getitem__(self, label: str) -> Irreducible:
        for irr in self.irreducibles:
            if irr.label == label:
                return irr
        raise KeyError(f"{self.group.spec} has no irreducible {label!r}")

    def __contains__(self, label: str) -> bool:
        return any(irr.label == label for irr in self.irreducibles)

    @property
    def labels(self) -> list[str]:
        return [irr.label for irr in self.irreducibles]

    @property
    def trivial_label(self) -> str:
        return self.irreducibles[0].label

    @property
    def natural_label(self) -> str | None:
        for irr in self.irreducibles:
            if irr.natural:
                return irr.label
        return None

    def nonspinorial(self) -> list[Irreducible]:
        return [irr for irr in self.irreducibles if not irr.spinorial]


def _sym(name: str, n: int) -> Cyclotomic:
    s5 = Cyclotomic.sqrt(5)
    table = {
        "w": Cyclotomic.zeta(3), "w2": Cyclotomic.zeta(3, 2),
        "-w": -Cyclotomic.zeta(3), "-w2": -Cyclotomic.zeta(3, 2),
        "r2": Cyclotomic.sqrt(2), "-r2": -Cyclotomic.sqrt(2),
        "p+": (1 + s5) / 2, "p-": (1 - s5) / 2,
        "-p+": -(1 + s5) / 2, "-p-": -(1 - s5) / 2,
    }
    if name in table:
        return _c(table[name], n)
    return _c(Fraction(name), n)


_DATA = {
    "T": {
        "columns": ["1", "a^2", "c", "z", "b^2", "b", "a"],
        "natural": "T4",
        "rows": {
            "T1": "1 1 1 1 1 1 1",
            "T2": "1 w 1 1 w2 w w2",
            "T3": "1 w2 1 1 w w2 w",
            "T4": "2 -1 0 -2 -1 1 1",
            "T5": "2 -w2 0 -2 -w w2 w",
            "T6": "2 -w 0 -2 -w2 w w2",
            "T7": "3 0 -1 3 0 0 0",
        },
    },
    "O": {
        "columns": ["1", "c", "b^2", "a^2", "z", "a^3", "b", "a"],
        "natural": "O4",
        "rows": {
            "O1": "1 1 1 1 1 1 1 1",
            "O2": "1 -1 1 1 1 -1 1 -1",
            "O3": "2 0 -1 2 2 0 -1 0",
            "O4": "2 0 -1 0 -2 -r2 1 r2",
            "O5": "2 0 -1 0 -2 r2 1 -r2",
            "O6": "3 1 0 -1 3 -1 0 -1",
            "O7": "3 -1 0 -1 3 1 0 1",
            "O8": "4 0 1 0 -4 0 -1 0",
        },
    },
    "Y": {
        "columns": ["1", "a^2", "a^4", "b", "c", "b^2", "a^3", "z", "a"],
        "natural": "Y2",
        "rows": {
            "Y1": "1 1 1 1 1 1 1 1 1",
            "Y2": "2 -p- -p+ 1 0 -1 p- -2 p+",
            "Y3": "2 -p+ -p- 1 0 -1 p+ -2 p-",
            "Y4": "3 p+ p- 0 -1 0 p+ 3 p-",
            "Y5": "3 p- p+ 0 -1 0 p- 3 p+",
            "Y6": "4 -1 -1 1 0 1 -1 4 -1",
            "Y7": "4 -1 -1 -1 0 1 1 -4 1",
            "Y8": "5 0 0 -1 1 -1 0 5 0",
            "Y9": "6 1 1 0 0 0 -1 -6 -1",
        },
    },
}


def _polyhedral_table(G: FiniteMatrixGroup) -> CharacterTable:
    data = _DATA[G.spec.family]
    cols = [G.class_of[G.word(w)] for w in data["columns"]]
    if sorted(cols) != list(range(len(G.classes))):
        raise CharacterError(f"{G.spec}: table columns do not match the conjugacy classes")
    irrs = []
    for label, row in data["rows"].items():
        vals = [_sym(t, G.field) for t in row.split()]
        by_class = [None] * len(cols)
        for k, v in zip(cols, vals):
            by_class[k] = v
        ch = ClassFunction(G, by_class)
        deg = int(vals[0].to_fraction())
        z = ch(G.z)
        irrs.append(Irreducible(label, ch, deg, z == _c(-deg, G.field), ch.is_real(),
                                label == data["natural"]))
    return CharacterTable(G, irrs, list(data["columns"]), cols)


def _dihedral_table(G: FiniteMatrixGroup) -> CharacterTable:
    N = G.spec.N
    n = G.field
    cover = G.is_double_cover
    # every element is r^k (diagonal) or s r^k (antidiagonal); on the cover
    # r = diag(zeta_2N, zeta_2N^-1), otherwise r = diag(w_N, w_N^-1)
    root = 2 * N if cover else N

    def split(i):
        m = G.elements[i]
        if m.b.is_zero():
            x, refl = m.a, False
        else:
            x, refl = m.c, True
            if cover:
                x = x * _c(Cyclotomic.zeta(4), x.n).inverse()
        for k in range(root):
            if _c(Cyclotomic.zeta(root, k), n) == _c(x, n):
                return refl, k
        raise CharacterError("dihedral element not of the expected shape")

    reps = [split(c[0]) for c in G.classes]

    def one_dim(rv, sv):
        return ClassFunction(G, [(sv if refl else 1) * rv ** k for refl, k in reps])

    def two_dim(k):
        vals = []
        for refl, m in reps:
            vals.append(0 if refl else Cyclotomic.zeta(root, k * m) + Cyclotomic.zeta(root, -k * m))
        return ClassFunction(G, vals)

    irrs = [Irreducible("chi1", one_dim(1, 1), 1, False, True),
            Irreducible("chi2", one_dim(1, -1), 1, False, True)]
    if N % 2 == 0:
        irrs += [Irreducible("chi3", one_dim(-1, 1), 1, False, True),
                 Irreducible("chi4", one_dim(-1, -1), 1, False, True)]
        for k in range(1, N):
            spin = k % 2 == 1
            label = f"spin{k}" if spin else f"psi{k // 2}"
            irrs.append(Irreducible(label, two_dim(k), 2, spin, True, k == 1))
    else:
        for j in range(1, (N + 1) // 2):
            irrs.append(Irreducible(f"psi{j}", two_dim(j), 2, False, True, j == 1))
    # spinorial characters last, nonspinorial ones in the usual order
    irrs.sort(key=lambda r: (r.spinorial, r.label[:3] != "chi", _label_index(r.label)))
    return CharacterTable(G, irrs)


def _label_index(label: str) -> int:
    digits = "".join(ch for ch in label if ch.isdigit())
    return int(digits) if digits else 0


def _cyclic_table(G: FiniteMatrixGroup) -> CharacterTable:
    N = G.spec.N
    n = G.field
    g = G.gens["g"]
    exps = {}
    x = 0
    for k in range(G.lift_order):
        exps[x] = k
        x = G.mul(x, g)
    irrs = []
    for k in range(N):
        ch = ClassFunction(G, [Cyclotomic.zeta(N, k * exps[c[0]]) for c in G.classes])
        irrs.append(Irreducible(f"c{k}", ch, 1, False, ch.is_real()))
    return CharacterTable(G, irrs)


@lru_cache(maxsize=None)
def _table_for(G: FiniteMatrixGroup) -> CharacterTable:
    f = G.spec.family
    if f == "C":
        tab = _cyclic_table(G)
    elif f == "D":
        tab = _dihedral_table(G)
    else:
        tab = _polyhedral_table(G)
    validate_table(tab)
    return tab


def character_table(G: FiniteMatrixGroup | GroupSpec | str) -> CharacterTable:
    if not isinstance(G, FiniteMatrixGroup):
        G = build_group(G)
    return _table_for(G)


def validate_table(tab: CharacterTable) -> None:
    G = tab.group
    one = _c(1, G.field)
    irrs = tab.irreducibles
    if len(irrs) != len(G.classes):
        raise CharacterError(f"{G.spec}: {len(irrs)} characters for {len(G.classes)} classes")
    if sum(r.degree ** 2 for r in irrs) != G.lift_order:
        raise CharacterError(f"{G.spec}: degrees do not square-sum to the group order")
    for i, r in enumerate(irrs):
        for j in range(i, len(irrs)):
            ip = inner_product(r.char, irrs[j].char)
            if ip != (one if i == j else _c(0, G.field)):
                raise CharacterError(f"{G.spec}: ({r.label},{irrs[j].label}) = {ip}")
    nat = [r for r in irrs if r.natural]
    if G.spec.family != "C":
        if len(nat) != 1 or nat[0].char != natural(G):
            raise CharacterError(f"{G.spec}: natural character does not match the traces")


# ---------------------------------------------------------------------------
# decomposition, fixed dimensions, kappa

def decompose(f: ClassFunction, tab: CharacterTable | None = None) -> dict[str, int]:
    tab = tab or character_table(f.group)
    out = {}
    recon = ClassFunction(f.group, [0] * len(f.values))
    for irr in tab.irreducibles:
        m = inner_product(f, irr.char)
        if not m.is_rational():
            raise CharacterError(f"multiplicity of {irr.label} is not rational: {m}")
        q = m.to_fraction()
        if q.denominator != 1 or q < 0:
            raise CharacterError(f"not a character: multiplicity of {irr.label} is {q}")
        if q:
            out[irr.label] = int(q)
            recon = recon + irr.char * int(q)
    if recon != f:
        raise CharacterError("decomposition does not reconstruct the class function")
    return out


def format_decomposition(mults: dict[str, int], tab: CharacterTable | None = None) -> str:
    if not mults:
        return "0"
    order = tab.labels if tab else sorted(mults)
    parts = []
    for label in order:
        m = mults.get(label, 0)
        if m:
            parts.append(label if m == 1 else f"{m}{label}")
    return "+".join(parts)


def fixed_dim(chi: ClassFunction, H: Iterable[int]) -> Fraction:
    """Average of chi over the element indices H (a subgroup)."""
    H = list(H)
    acc = _c(0, chi.group.field)
    for h in H:
        acc = acc + chi(h)
    val = acc * Fraction(1, len(H))
    if not val.is_rational():
        raise CharacterError("fixed-space dimension is not rational")
    q = val.to_fraction()
    if q.denominator != 1:
        raise CharacterError(f"fixed-space dimension {q} is not an integer")
    return q


@dataclass
class KappaRecord:
    label: str
    kappa: tuple
    nu_kappa: tuple
    degree: int
    real: bool


def kappa(label: str, G: FiniteMatrixGroup | GroupSpec | str) -> KappaRecord:
    tab = character_table(G)
    G = tab.group
    irr = tab[label]
    if irr.spinorial:
        raise CharacterError(f"{label} is spinorial; kappa is defined on the Möbius group")
    ks, nks = [], []
    for orb in G.exceptional_orbits:
        nu = orb.nu
        g = G.gens[orb.label]
        acc = _c(0, G.field)
        x = 0
        for _ in range(nu):
            acc = acc + irr.char(x)
            x = G.mul(x, g)
        avg = acc * Fraction(1, nu)
        if not avg.is_rational():
            raise CharacterError("average over a cyclic subgroup is not rational")
        k = (irr.degree - avg.to_fraction()) / 2
        ks.append(k)
        nks.append(nu * k)
    return KappaRecord(label, tuple(ks), tuple(nks), irr.degree, irr.real)


def serre_lusztig(G: FiniteMatrixGroup, label: str) -> tuple[Fraction, Fraction]:
    """Both sides of (|Omega|-2) chi(1) + 2 (chi,1) = sum_i dim V^<g_i>."""
    tab = character_table(G)
    irr = tab[label]
    triv = inner_product(irr.char, trivial(G)).to_fraction()
    lhs = (len(G.exceptional_orbits) - 2) * irr.degree + 2 * triv
    rhs = Fraction(0)
    for orb in G.exceptional_orbits:
        rhs += fixed_dim(irr.char, [G.power(G.gens[orb.label], j) for j in range(orb.nu)])
    return lhs, rhs


def poincare_coefficient(G: FiniteMatrixGroup, label: str, k: int, m: int) -> int:
    """Coefficient of t^(k m |G|) in the generating function of the chi-component."""
    tab = character_table(G)
    irr = tab[label]
    if irr.spinorial:
        return 0
    if label == tab.trivial_label:
        return (k + 1) + (m - 1) * k
    return m * irr.degree ** 2 * k
