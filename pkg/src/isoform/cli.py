"""Command line interface: ``isoform <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 for bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import detdiv, invec, veritas
from .binforms import ground_forms
from .chartab import CharacterError, character_table, kappa
from .polygroup import GroupError, GroupSpec, build_group

FORMATS = ("md", "csv", "json")


class UsageError(Exception):
    pass


def _group(text: str):
    try:
        return build_group(GroupSpec.parse(text))
    except (GroupError, ValueError) as e:
        raise UsageError(str(e)) from e


def _groups(text: str | None) -> list[str] | None:
    if not text:
        return None
    return [g.strip() for g in text.split(",") if g.strip()]


def _label(G, label: str | None) -> str:
    tab = character_table(G)
    if label is None:
        raise UsageError(f"--char is required; choose from {', '.join(tab.labels)}")
    if label not in tab:
        raise UsageError(f"{G.spec} has no character {label!r}; choose from {', '.join(tab.labels)}")
    return label


def _orbit(G, text: str):
    try:
        return invec.pole_orbit(G, text)
    except (invec.InvariantError, ValueError, KeyError) as e:
        raise UsageError(f"bad orbit {text!r}: {e}") from e


def cmd_group(args) -> str:
    G = _group(args.group)
    if args.format == "json":
        return json.dumps(G.to_json(), indent=2) + "\n"
    rows = [["family", G.spec.family], ["|G|", str(G.mobius_order)], ["lift order", str(G.lift_order)],
            ["double cover", "yes" if G.is_double_cover else "no"],
            ["matrix field", f"Q(zeta_{G.conductor})"],
            ["nu", ",".join(str(n) for n in G.nu)]]
    for k, v in G.gens.items():
        rows.append([f"g_{k}", str(G.elements[v])])
    return veritas._render(["property", "value"], rows, args.format)


def cmd_orbits(args) -> str:
    G = _group(args.group)
    rows, recs = [], []
    for o in G.exceptional_orbits:
        rows.append([o.label, str(o.nu), str(o.d), " ".join(str(p) for p in o.points)])
        recs.append(o.to_json())
    return veritas._render(["orbit", "nu", "size", "points"], rows, args.format, recs)


def cmd_chartable(args) -> str:
    _group(args.group)
    return veritas.emit_table("chartable", group=args.group, fmt=args.format)


def cmd_sympow(args) -> str:
    _group(args.group)
    if args.max < -1:
        raise UsageError("--max must be at least -1")
    return veritas.emit_table("sympow", group=args.group, max_h=args.max, fmt=args.format)


def cmd_groundforms(args) -> str:
    _group(args.group)
    return veritas.emit_table("groundforms", group=args.group, fmt=args.format)


def cmd_generators(args) -> str:
    G = _group(args.group)
    label = _label(G, args.char)
    orb = _orbit(G, args.orbit)
    tab = character_table(G)
    if label == tab.trivial_label:
        gs = invec.trivial_generators(G, orb, args.m)
    else:
        gs = invec.generator_set(G, label, orb, args.m)
    if args.format == "json":
        return json.dumps({
            "group": str(G.spec), "char": label, "orbit": args.orbit, "base_ring": gs.base_ring,
            "degree": gs.degree,
            "generators": [{"numerator": [c.to_json() for c in g.numerator.components],
                            "denominator": g.denominator.to_json(), "power": g.power}
                           for g in gs.generators]}, indent=2) + "\n"
    rows = []
    for i, g in enumerate(gs.generators):
        num = "; ".join(str(c) for c in g.numerator.components)
        rows.append([str(i + 1), f"({num})", f"F_{orb.label}^{g.power}" if g.power else "1"])
    head = f"{gs.count} generators over {gs.base_ring}\n\n"
    return head + veritas._render(["#", "numerator", "denominator"], rows, args.format)


def cmd_det(args) -> str:
    G = _group(args.group)
    label = _label(G, args.char)
    orb = _orbit(G, args.orbit)
    gs = invec.generator_set(G, label, orb)
    D = detdiv.determinant_form(gs)
    fac = detdiv.factor_ground_forms(D, G)
    k = kappa(label, G)
    div = detdiv.divisor_of_char(G, [label], orb)
    rec = {"group": str(G.spec), "char": label, "orbit": args.orbit,
           "delta": fac.exponents, "nu_kappa": [str(x) for x in k.nu_kappa],
           "real": k.real, "divisor": div.coeffs, "scalar": str(fac.residual.minimal())}
    if args.format == "json":
        return json.dumps(rec, indent=2) + "\n"
    rows = [[key, str(v)] for key, v in rec.items()]
    return veritas._render(["field", "value"], rows, args.format)


def cmd_kappa(args) -> str:
    return veritas.emit_table("kappa", fmt=args.format, groups=_groups(args.groups))


def cmd_table1(args) -> str:
    return veritas.emit_table("table1", fmt=args.format, groups=_groups(args.groups))


def cmd_verify(args):
    checks = _groups(args.checks)
    try:
        rep = veritas.run_verifications(_groups(args.groups), checks)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if args.format == "json":
        out = json.dumps(rep.to_json(), indent=2) + "\n"
    else:
        rows = [[r.check, r.group, r.anchor, "pass" if r.ok else "FAIL", r.details] for r in rep.records]
        out = veritas._render(["check", "group", "anchor", "status", "details"], rows, args.format)
        if args.format == "md":
            failed = sum(not r.ok for r in rep.records)
            out += f"\n{len(rep.records) - failed} passed, {failed} failed\n"
    return out, (0 if rep.ok else 1)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="isoform",
                                description="Invariant vectors of finite subgroups of PGL2(C).")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, group=True, help=""):
        sp = sub.add_parser(name, help=help)
        if group:
            sp.add_argument("group", help="C<N>, D<N>, T, O or Y")
        sp.add_argument("--format", choices=FORMATS, default="md")
        sp.set_defaults(fn=fn)
        return sp

    add("group", cmd_group, help="generators and basic data")
    add("orbits", cmd_orbits, help="exceptional orbits")
    add("chartable", cmd_chartable, help="character table")
    sp = add("sympow", cmd_sympow, help="decomposition of symmetric powers")
    sp.add_argument("--max", type=int, default=12)
    add("groundforms", cmd_groundforms, help="ground forms of the exceptional orbits")
    for name, fn in (("generators", cmd_generators), ("det", cmd_det)):
        sp = add(name, fn, help=f"{name} of an isotypical component")
        sp.add_argument("--char", required=False)
        sp.add_argument("--orbit", default="c", help="a, b, c, pt:<rational> or pt:inf")
        if name == "generators":
            sp.add_argument("--m", type=int, default=1)
    sp = add("kappa", cmd_kappa, group=False, help="kappa table")
    sp.add_argument("--groups")
    sp = add("table1", cmd_table1, group=False, help="structure data per group")
    sp.add_argument("--groups")
    sp = add("verify", cmd_verify, group=False, help="run verification checks")
    sp.add_argument("--groups")
    sp.add_argument("--checks", help="comma separated check ids")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "m", 1) < 1:
        print("isoform: --m must be positive", file=sys.stderr)
        return 2
    try:
        result = args.fn(args)
    except UsageError as e:
        print(f"isoform: {e}", file=sys.stderr)
        return 2
    except (CharacterError, detdiv.DeterminantError) as e:
        print(f"isoform: {e}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
