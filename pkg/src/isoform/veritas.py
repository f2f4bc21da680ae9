"""Verification runner and table emission.

Every check returns CheckRecord objects; failures are data, not exceptions.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from importlib import resources
from typing import Callable, Iterable, Sequence

from . import binforms, chartab, detdiv, invec, polygroup
from .binforms import BinaryForm, act_on_form, ground_forms
from .chartab import (character_table, decompose, format_decomposition, inner_product,
                      kappa, natural, regular_lift, regular_pullback, sym_power_char,
                      sym_power_char_closed, trivial)
from .cyclofield import Cyclotomic
from .polygroup import GroupSpec, binary_group, build_group, table1_row

DEFAULT_GROUPS = ["C2", "C3", "C4", "C5", "C6", "C7", "C8", "D3", "D4", "D5", "D6", "T", "O", "Y"]


@dataclass
class CheckRecord:
    check: str
    group: str
    anchor: str
    ok: bool
    details: str = ""

    def to_json(self):
        return {"check": self.check, "group": self.group, "anchor": self.anchor,
                "status": "pass" if self.ok else "fail", "details": self.details}


@dataclass
class VerificationReport:
    groups: list
    records: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    def add(self, check, group, anchor, ok, details=""):
        self.records.append(CheckRecord(check, str(group), anchor, bool(ok), details))

    def to_json(self):
        return {"groups": self.groups, "status": "pass" if self.ok else "fail",
                "checks": [r.to_json() for r in self.records]}


# ---------------------------------------------------------------------------
# individual checks

def check_structure(spec: GroupSpec, rep: VerificationReport):
    G = build_group(spec)
    row = table1_row(spec)
    rep.add("structure", spec, "orbit formula 2(1-1/|G|) = sum(1-1/nu)",
            polygroup.euler_identity(spec))
    expected_lift = spec.order * (2 if row["schur"] == 2 else 1)
    rep.add("structure", spec, "group order by closure",
            G.mobius_order == row["order"] and G.lift_order == expected_lift,
            f"|G|={G.mobius_order}, lift={G.lift_order}")
    nu = tuple(o.nu for o in G.exceptional_orbits)
    d = tuple(o.d for o in G.exceptional_orbits)
    stab_ok = all(len(G.stabiliser(o.points[0])) == o.nu for o in G.exceptional_orbits)
    rep.add("structure", spec, "exceptional orbits (nu, d)",
            nu == row["nu"] and d == row["d"] and stab_ok, f"nu={nu}, d={d}")
    ex = polygroup.exponent_and_schur(G)
    rep.add("structure", spec, "exponent and Schur multiplier",
            ex["exponent"] == row["exponent"] and ex["schur"] == row["schur"]
            and ex["binary_exponent"] == ex["binary_exponent_formula"],
            f"exponent={ex['exponent']}, binary exponent={ex['binary_exponent']}, |M|={ex['schur']}")
    if spec.family in "TOY":
        rep.add("structure", spec, "class count matches the character table",
                len(G.classes) == {"T": 7, "O": 8, "Y": 9}[spec.family], f"{len(G.classes)} classes")


def check_regular(spec, rep):
    G = build_group(spec)
    ok, dims = True, []
    for o in G.exceptional_orbits:
        H = G.stabiliser(o.points[0])
        dim = polygroup.regular_fixed_dim(G, H)
        dims.append(dim)
        ok &= dim == o.d
    ok &= polygroup.regular_fixed_dim(G, [0]) == G.mobius_order
    ok &= polygroup.regular_fixed_dim(G, G.mobius_elements) == 1
    rep.add("regular-rep", spec, "fixed space of the regular representation under stabilisers",
            ok, f"dims={dims}")


def check_char_table(spec, rep):
    try:
        tab = character_table(spec)
        rep.add("char-table", spec, "orthogonality, degrees and natural character", True,
                f"{len(tab.irreducibles)} irreducibles")
    except chartab.CharacterError as e:
        rep.add("char-table", spec, "orthogonality, degrees and natural character", False, str(e))


def check_char_identity(spec, rep):
    row = table1_row(spec)
    base = 2 // row["schur"]
    B = binary_group(spec)
    for m in sorted({base, 2 * base} if spec.family != "C" else {2}):
        h = m * spec.order
        rG, rB, one = regular_pullback(B), regular_lift(B), trivial(B)
        ok1 = sym_power_char(B, h) == rG * m + one
        ok2 = sym_power_char(B, h - 1) == (rB - rG) * m
        rep.add("char-identity", spec, f"chi_(m|G|) = m r_G + 1 and chi_(m|G|-1) = m (r_G* - r_G), m={m}",
                ok1 and ok2)


def check_degree_reduction(spec, rep):
    B = binary_group(spec)
    ok = True
    for cls in B.classes:
        g = cls[0]
        nu = B.order(g)
        if nu <= 2:
            continue
        for h in range(0, 2 * spec.order + 1):
            if sym_power_char(B, h + nu)(g) != sym_power_char(B, h)(g):
                ok = False
    closed = all(sym_power_char(B, h) == sym_power_char_closed(B, h) for h in range(-1, 2 * spec.order + 1))
    rep.add("degree-reduction", spec, "chi_(h+nu)(g) = chi_h(g) for elements of order nu > 2", ok)
    rep.add("degree-reduction", spec, "recurrence agrees with the eigenvalue formula", closed)


def check_spinorial_even(spec, rep):
    G = build_group(spec)
    if not G.is_double_cover:
        return
    tab = character_table(G)
    ok = True
    for irr in tab.irreducibles:
        if irr.spinorial:
            for d in range(0, 2 * G.mobius_order + 1, 2):
                ok &= inner_product(sym_power_char(G, d), irr.char).is_zero()
    rep.add("spinorial-even", spec, "spinorial characters do not occur in even symmetric powers", ok)


def check_poincare(spec, rep, m: int | None = None):
    G = build_group(spec)
    if not G.is_double_cover:
        return
    m = m or 2 // table1_row(spec)["schur"]
    tab = character_table(G)
    bad = []
    for irr in tab.irreducibles:
        for k in range(4):
            d = k * m * G.mobius_order
            dim = irr.degree * inner_product(sym_power_char(G, d), irr.char.conjugate()).to_fraction()
            want = chartab.poincare_coefficient(G, irr.label, k, m)
            if dim != want:
                bad.append(f"{irr.label}@{d}: {dim} vs {want}")
    rep.add("poincare", spec, "Poincaré series of the prehomogenised components", not bad, "; ".join(bad))


def check_serre_lusztig(spec, rep):
    if spec.family == "C":
        return
    G = build_group(spec)
    tab = character_table(G)
    bad = []
    for irr in tab.nonspinorial():
        lhs, rhs = chartab.serre_lusztig(G, irr.label)
        if lhs != rhs:
            bad.append(f"{irr.label}: {lhs} vs {rhs}")
    rep.add("serre-lusztig", spec, "(|Omega|-2) chi(1) + 2 (chi,1) = sum of fixed dimensions",
            not bad, "; ".join(bad))


def check_ground_forms(spec, rep):
    G = build_group(spec)
    gfs = ground_forms(G)
    ok, notes = True, []
    for lbl, gf in gfs.items():
        F = gf.form
        if F.degree != gf.orbit.d:
            ok = False
        if not all(F.at(p).is_zero() for p in gf.orbit.points):
            ok, _ = False, notes.append(f"F_{lbl} does not vanish on its orbit")
        for other in G.exceptional_orbits:
            if other.label != lbl and F.at(other.points[0]).is_zero():
                ok, _ = False, notes.append(f"F_{lbl} vanishes on orbit {other.label}")
        P = F ** gf.orbit.nu
        for g in ("a", "b"):
            if act_on_form(G.elements[G.gens[g]], P) != P:
                ok, _ = False, notes.append(f"F_{lbl}^nu not invariant under g_{g}")
    rep.add("ground-forms", spec, "ground forms: zero sets and invariance of F^nu", ok, "; ".join(notes))
    if spec.family != "C":
        try:
            c1, c2 = invec.syzygy_coeffs(G)
            P = {o.label: gfs[o.label].form ** o.nu for o in G.exceptional_orbits}
            ok = P["a"] == P["b"] * c1 + P["c"] * c2 and not c1.is_zero() and not c2.is_zero()
            rep.add("syzygy", spec, "linear relation among F_a^nu_a, F_b^nu_b, F_c^nu_c", ok,
                    f"c1={c1.minimal()}, c2={c2.minimal()}")
        except invec.InvariantError as e:
            rep.add("syzygy", spec, "linear relation among F_a^nu_a, F_b^nu_b, F_c^nu_c", False, str(e))


def _orbit_specs(G):
    return [o.label for o in G.exceptional_orbits] + ["pt:2"]


def check_det_theorem(spec, rep):
    G = build_group(spec)
    try:
        results = detdiv.verify_det_theorem(G, _orbit_specs(G))
    except (detdiv.DeterminantError, invec.InvariantError) as e:
        rep.add("generator-count", spec, "chi(1) free generators", False, str(e))
        return
    count_ok = all(r.delta != () for r in results)
    rep.add("generator-count", spec, "chi(1) generators with nonzero determinant for every pole orbit",
            count_ok, f"{len(results)} (character, orbit) pairs")
    for r in results:
        rep.add("det-theorem", spec, f"{r.label} poles on {r.orbit}", r.ok,
                f"delta={r.delta} nu*kappa={tuple(str(x) for x in r.nu_kappa)} "
                f"{'real' if r.real else 'non-real'} {r.note}".strip())
    if spec.family == "T":
        d2 = detdiv.delta(G, "T2")
        d23 = detdiv.divisor_of_char(G, ["T2", "T3"], invec.pole_orbit(G, "pt:2"))
        rep.add("det-theorem", spec, "one-dimensional example values",
                (d2["a"], d2["b"], d2["c"]) == (2, 1, 0) and d23.zero_part("abc") == (3, 3, 0),
                f"delta(T2)={d2}, T2+T3 zero part={d23.zero_part('abc')}")


def _generic_point(G, avoid):
    for q in ("3", "5/2", "7", "-5/3", "11/4"):
        p = polygroup.ProjPoint.parse(q, G.field)
        if p in avoid.points:
            continue
        if len(G.stabiliser(p)) == 1:
            return p
    raise RuntimeError("no generic point found")


def check_evaluation(spec, rep):
    G = build_group(spec)
    tab = character_table(G)
    bad, count = [], 0
    for irr in tab.nonspinorial():
        if irr.label == tab.trivial_label:
            continue
        for ospec in _orbit_specs(G):
            orb = invec.pole_orbit(G, ospec)
            pts = [_generic_point(G, orb)]
            pts += [o.points[0] for o in G.exceptional_orbits if o.points != orb.points]
            for p in pts:
                r, _ = invec.evaluate_span(G, irr.label, orb, p)
                want = invec.stabiliser_dim(G, irr.label, p)
                count += 1
                if r != want:
                    bad.append(f"{irr.label} poles {ospec} at {p}: rank {r} vs {want}")
    rep.add("evaluation", spec, "rank of values equals the stabiliser-fixed dimension",
            not bad, "; ".join(bad) if bad else f"{count} evaluations")


def dihedral_table_vectors(G) -> dict:
    """Module generators of the dihedral components written with F_a, F_b, F_c and X, Y."""
    N = G.spec.N
    F = {l: gf.form for l, gf in ground_forms(G).items()}
    X, Y = BinaryForm.monomial(1, 0), BinaryForm.monomial(0, 1)
    out = {}
    if N % 2:
        out["chi2"] = [(F["c"],)]
        for j in range(1, (N + 1) // 2):
            out[f"psi{j}"] = [(X ** j, Y ** j), (Y ** (N - j), X ** (N - j))]
    else:
        out["chi2"] = [(F["b"] * F["c"],)]
        out["chi3"] = [(F["b"],)]
        out["chi4"] = [(F["c"],)]
        for j in range(1, N // 2):
            out[f"psi{j}"] = [(X ** (2 * j), Y ** (2 * j)), (Y ** (2 * N - 2 * j), X ** (2 * N - 2 * j))]
    return out


def _scaled_span(G, etas, degree):
    N = G.spec.N
    F = {l: gf.form for l, gf in ground_forms(G).items()}
    ring = [(F["a"], 2), (F["b"], N)] if N % 2 else [(F["a"], 2), (F["b"] ** 2, 2 * N)]
    vecs = []
    for eta in etas:
        rest = degree - eta[0].degree
        for p in range(rest // ring[0][1] + 1):
            left = rest - p * ring[0][1]
            if left % ring[1][1]:
                continue
            q = left // ring[1][1]
            m = (ring[0][0] ** p) * (ring[1][0] ** q)
            # in the binary lift F_a picks up -1 under s; on a two-dimensional
            # component an odd power of F_a is absorbed by the intertwiner diag(-1, 1)
            sign = -1 if (N % 2 == 0 and p % 2 and len(eta) == 2) else 1
            vec = []
            for i, c in enumerate(eta):
                vec.extend((c * m).scale(sign if i == 0 else 1).coeffs)
            vecs.append(vec)
    return vecs


def check_dihedral(spec, rep):
    if spec.family != "D":
        return
    G = build_group(spec)
    N = spec.N
    gfs = ground_forms(G)
    X, Y = BinaryForm.monomial(1, 0), BinaryForm.monomial(0, 1)
    half = Fraction(1, 2)
    closed = {"a": X * Y, "b": (X ** N + Y ** N).scale(half), "c": (X ** N - Y ** N).scale(half)}
    ok = all(gfs[l].form.ratio_to(closed[l]) is not None for l in "abc")
    rep.add("dihedral-closed-forms", spec, "ground forms XY, (X^N+Y^N)/2, (X^N-Y^N)/2", ok)
    from .linalg import rank
    for label, etas in dihedral_table_vectors(G).items():
        ours = [v.to_vector() for v in invec.invariant_basis(G, label, 2 * N)]
        theirs = _scaled_span(G, etas, 2 * N)
        r1, r2, r12 = rank(ours), rank(theirs), rank(ours + theirs)
        rep.add("dihedral-closed-forms", spec, f"{label}: degree-2N span equals the module generators",
                r1 == r2 == r12 and r1 > 0, f"ranks {r1}, {r2}, joint {r12}")


def check_surjectivity(spec, rep):
    G = build_group(spec)
    tab = character_table(G)
    ok, n = True, 0
    for irr in tab.nonspinorial():
        if irr.label == tab.trivial_label:
            continue
        orb = G.exceptional_orbits[-1]
        ok &= invec.surjectivity_check(G, irr.label, orb)
        gs = invec.generator_set(G, irr.label, orb)
        ok &= all(invec.quotient_model_check(G, g) for g in gs.generators)
        n += 1
    rep.add("surjectivity", spec, "degree-2|G| vectors are C[I]-combinations of the generators",
            ok, f"{n} characters")


def check_local_order(spec, rep):
    if spec.family != "T":
        return
    G = build_group(spec)
    basis = invec.invariant_basis(G, "T7", G.mobius_order)
    D = detdiv.determinant_form(basis)
    p = next(q for q in G.orbit("c").points if not q.is_infinity)
    est = detdiv.vanishing_order_numeric(D, p)
    dc = detdiv.delta(G, "T7")["c"]
    rep.add("local-order", spec, "numeric vanishing order of the T7 determinant on orbit c",
            abs(est - dc) < 0.1, f"estimate {est:.4f}, exact {dc}")


def check_sympow_golden(rep):
    text = emit_table("sympow", group="T", max_h=12, fmt="md")
    gold = golden("sympow_T.md")
    rep.add("sympow-golden", "T", "symmetric power decomposition of the natural 2T module",
            text == gold, "" if text == gold else _first_diff(text, gold))


def check_kappa_golden(rep):
    text = emit_table("kappa", fmt="md")
    gold = golden("kappa.md")
    rep.add("kappa-golden", "D,T,O,Y", "kappa and nu*kappa table", text == gold,
            "" if text == gold else _first_diff(text, gold))


def _first_diff(a, b):
    for i, (x, y) in enumerate(zip(a.splitlines(), b.splitlines())):
        if x != y:
            return f"line {i + 1}: {x!r} != {y!r}"
    return "length differs"


CHECKS: dict[str, Callable] = {
    "structure": check_structure,
    "regular-rep": check_regular,
    "char-table": check_char_table,
    "char-identity": check_char_identity,
    "degree-reduction": check_degree_reduction,
    "spinorial-even": check_spinorial_even,
    "poincare": check_poincare,
    "serre-lusztig": check_serre_lusztig,
    "ground-forms": check_ground_forms,
    "det-theorem": check_det_theorem,
    "evaluation": check_evaluation,
    "dihedral-closed-forms": check_dihedral,
    "surjectivity": check_surjectivity,
    "local-order": check_local_order,
}
GLOBAL_CHECKS = {"sympow-golden": check_sympow_golden, "kappa-golden": check_kappa_golden}
ALIASES = {"generator-count": "det-theorem", "syzygy": "ground-forms"}


def run_verifications(specs: Sequence[str | GroupSpec] | None = None,
                      checks: Iterable[str] | None = None) -> VerificationReport:
    specs = [GroupSpec.parse(s) for s in (specs or DEFAULT_GROUPS)]
    wanted = None
    if checks:
        wanted = {ALIASES.get(c, c) for c in checks}
        unknown = wanted - set(CHECKS) - set(GLOBAL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
    rep = VerificationReport([str(s) for s in specs])
    for s in specs:
        if s.family == "C" and s.N < 2:
            continue
        for cid, fn in CHECKS.items():
            if wanted is None or cid in wanted:
                try:
                    fn(s, rep)
                except Exception as e:  # a crash is a failed check, with context
                    rep.add(cid, s, "check raised", False, f"{type(e).__name__}: {e}")
    fams = {s.family for s in specs}
    if (wanted is None or "sympow-golden" in wanted) and "T" in fams:
        check_sympow_golden(rep)
    if (wanted is None or "kappa-golden" in wanted) and fams & set("TOY"):
        check_kappa_golden(rep)
    return rep


# ---------------------------------------------------------------------------
# tables

def golden(name: str) -> str:
    return resources.files("isoform").joinpath("golden").joinpath(name).read_text(encoding="utf-8")


def _render(header: list, rows: list, fmt: str, records: list | None = None) -> str:
    if fmt == "json":
        data = records if records is not None else [dict(zip(header, r)) for r in rows]
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt != "md":
        raise ValueError(f"unknown format {fmt!r}")
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    for r in rows:
        lines.append("| " + " | ".join(str(x) for x in r) + " |")
    return "\n".join(lines) + "\n"


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def sympow_rows(group: str, max_h: int):
    G = build_group(group)
    tab = character_table(G)
    chi = natural(G)
    rows = []
    for h in range(-1, max_h + 1):
        s = format_decomposition(decompose(sym_power_char(G, h)), tab)
        t = format_decomposition(decompose(chi * sym_power_char(G, h)), tab) if h < max_h else ""
        rows.append([str(h), s, t])
    return rows


KAPPA_COLUMNS = [("D", "chi2"), ("D", "chi3"), ("D", "chi4"), ("D", "psi_j"),
                 ("T", "T2"), ("T", "T3"), ("T", "T7"), ("O", "O2"), ("O", "O3"),
                 ("O", "O6"), ("O", "O7"), ("Y", "Y4"), ("Y", "Y5"), ("Y", "Y6"), ("Y", "Y8")]
DIHEDRAL_SAMPLES = ["D3", "D4", "D5", "D6"]


def dihedral_kappa(label: str) -> tuple:
    """kappa of a dihedral character, checked to be the same for N = 3..6 and all j."""
    recs = []
    for s in DIHEDRAL_SAMPLES:
        tab = character_table(s)
        if label == "psi_j":
            recs += [kappa(l, s) for l in tab.labels if l.startswith("psi")]
        elif label in tab:
            recs.append(kappa(label, s))
    ks = {r.kappa for r in recs}
    if len(ks) != 1:
        raise RuntimeError(f"kappa of {label} depends on N or j: {ks}")
    return recs[0].kappa, recs[0].degree


def _symbolic_N(q: Fraction) -> str:
    if q == 0:
        return "0"
    if q == 1:
        return "N"
    if q.numerator == 1:
        return f"N/{q.denominator}"
    return f"{_frac(q)}N"


def kappa_table():
    cols = []
    for fam, label in KAPPA_COLUMNS:
        if fam == "D":
            k, deg = dihedral_kappa(label)
            nk = (_symbolic_N(k[0]), _frac(2 * k[1]), _frac(2 * k[2]))
            cols.append((label, deg, tuple(_frac(x) for x in k), nk))
        else:
            r = kappa(label, fam)
            cols.append((label, r.degree, tuple(_frac(x) for x in r.kappa),
                         tuple(_frac(x) for x in r.nu_kappa)))
    return cols


def emit_table(kind: str, group: str | None = None, max_h: int = 12, fmt: str = "md",
               groups: Sequence[str] | None = None) -> str:
    if kind == "sympow":
        group = group or "T"
        rows = sympow_rows(group, max_h)
        return _render(["h", "S^h", "U (x) S^h"], rows, fmt)
    if kind == "kappa":
        if groups:
            return _kappa_per_group(groups, fmt)
        cols = kappa_table()
        header = [""] + [c[0] for c in cols]
        rows = [["dim"] + [str(c[1]) for c in cols]]
        for i, l in enumerate("abc"):
            rows.append([f"kappa_{l}"] + [c[2][i] for c in cols])
        for i, l in enumerate("abc"):
            rows.append([f"nu kappa_{l}"] + [c[3][i] for c in cols])
        return _render(header, rows, fmt)
    if kind == "table1":
        return _table1(groups or ["C5", "D5", "D6", "T", "O", "Y"], fmt)
    if kind == "chartable":
        return _chartable(group or "T", fmt)
    if kind == "groundforms":
        return _groundforms(group or "T", fmt)
    raise ValueError(f"unknown table kind {kind!r}")


def _kappa_per_group(groups, fmt):
    rows = []
    for s in groups:
        G = build_group(s)
        tab = character_table(G)
        for irr in tab.nonspinorial():
            r = kappa(irr.label, G)
            rows.append([str(G.spec), irr.label, str(irr.degree),
                         " ".join(_frac(x) for x in r.kappa), " ".join(_frac(x) for x in r.nu_kappa)])
    return _render(["group", "char", "dim", "kappa (a b c)", "nu kappa"], rows, fmt)


def _table1(groups, fmt):
    rows = []
    for s in groups:
        G = build_group(s)
        ex = polygroup.exponent_and_schur(G)
        row = table1_row(G.spec)
        rows.append([str(G.spec), str(G.mobius_order), str(G.lift_order),
                     ",".join(str(o.nu) for o in G.exceptional_orbits),
                     ",".join(str(o.d) for o in G.exceptional_orbits),
                     str(ex["exponent"]), str(ex["binary_exponent"]), _frac(ex["schur"]), row["abelian"]])
    return _render(["G", "|G|", "|G*|", "nu", "d", "exponent", "binary exponent", "|M(G)|",
                    "abelianisation"], rows, fmt)


def _class_words(G) -> list[str]:
    tab = character_table(G)
    if tab.columns:
        words = [None] * len(G.classes)
        for w, k in zip(tab.columns, tab.column_classes):
            words[k] = w
        return words
    gens = ["g"] if G.spec.family == "C" else ["r", "s"]
    seen = {0: ""}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, G.gens[g])
                if y not in seen:
                    seen[y] = seen[x] + g
                    nxt.append(y)
        frontier = nxt
    out = []
    for cls in G.classes:
        w = min((seen[i] for i in cls), key=lambda s: (len(s), s))
        out.append(_compress(w) or "1")
    return out


def _compress(w: str) -> str:
    out, i = [], 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(w[i] if j - i == 1 else f"{w[i]}^{j - i}")
        i = j
    return "".join(out)


def _chartable(group, fmt):
    G = build_group(group)
    tab = character_table(G)
    words = _class_words(G)
    order = tab.column_classes or list(range(len(G.classes)))
    header = ["char", "dim", "spinorial", "real", "natural"] + [words[k] for k in order]
    rows, recs = [], []
    for irr in tab.irreducibles:
        vals = [irr.char.values[k].minimal() for k in order]
        rows.append([irr.label, str(irr.degree), _yn(irr.spinorial), _yn(irr.real),
                     _yn(irr.natural)] + [str(v) for v in vals])
        recs.append({"label": irr.label, "degree": irr.degree, "spinorial": irr.spinorial,
                     "real": irr.real, "natural": irr.natural,
                     "values": {words[k]: {"exact": v.to_json(), "numeric": _num(v)}
                                for k, v in zip(order, vals)}})
    return _render(header, rows, fmt, recs)


def _num(v: Cyclotomic):
    z = v.to_numeric()
    return [round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0]


def _yn(b):
    return "yes" if b else "no"


def _groundforms(group, fmt):
    G = build_group(group)
    rows, recs = [], []
    for lbl, gf in ground_forms(G).items():
        mult = ", ".join(f"g_{k}: {v.minimal()}" for k, v in gf.multiplier.items() if k in "abc")
        rows.append([lbl, str(gf.orbit.nu), str(gf.degree), str(gf.form), mult])
        recs.append({"orbit": lbl, "nu": gf.orbit.nu, "form": gf.form.to_json(), "text": str(gf.form),
                     "multiplier": {k: v.to_json() for k, v in gf.multiplier.items()}})
    return _render(["orbit", "nu", "degree", "form", "multiplier"], rows, fmt, recs)
