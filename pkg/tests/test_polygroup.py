import pytest

from isoform.polygroup import (GroupError, GroupSpec, ProjPoint, binary_group, build_group,
                               euler_identity, exponent_and_schur, regular_fixed_dim, table1_row)

ALL = ["C2", "C3", "C5", "C8", "D3", "D4", "D5", "D6", "T", "O", "Y"]


def test_parse():
    assert str(GroupSpec.parse("d6")) == "D6"
    assert GroupSpec.parse("Y").order == 60
    for bad in ("Q3", "D1", "C0", ""):
        with pytest.raises((GroupError, ValueError)):
            GroupSpec.parse(bad)


@pytest.mark.parametrize("g", ALL)
def test_orders_and_orbits(g):
    G = build_group(g)
    row = table1_row(G.spec)
    assert G.mobius_order == row["order"]
    assert tuple(o.nu for o in G.exceptional_orbits) == row["nu"]
    assert tuple(o.d for o in G.exceptional_orbits) == row["d"]
    for o in G.exceptional_orbits:
        assert len(set(o.points)) == o.d
        assert len(G.stabiliser(o.points[0])) == o.nu
    assert euler_identity(G.spec)


@pytest.mark.parametrize("g", ["T", "O", "Y", "D4", "D6"])
def test_double_covers(g):
    G = build_group(g)
    assert G.is_double_cover and G.lift_order == 2 * G.mobius_order
    for e in G.elements:
        assert e.det == 1


@pytest.mark.parametrize("g", ALL)
def test_labelled_generators(g):
    G = build_group(g)
    if G.spec.family == "C":
        return
    z = G.z if G.z is not None else 0
    a, b, c = (G.gens[k] for k in "abc")
    assert G.mul(G.mul(a, b), c) in (0, z)
    for k, o in zip("abc", G.exceptional_orbits):
        assert G.mobius_order_of(G.gens[k]) == o.nu
        assert any(G.fixes(G.gens[k], p) for p in o.points)


@pytest.mark.parametrize("g", ALL)
def test_exponent_and_schur(g):
    G = build_group(g)
    ex = exponent_and_schur(G)
    row = table1_row(G.spec)
    assert ex["exponent"] == row["exponent"]
    assert ex["schur"] == row["schur"]


@pytest.mark.parametrize("g", ["C3", "D5"])
def test_binary_group_is_sl2(g):
    B = binary_group(g)
    assert B.lift_order == 2 * B.mobius_order
    assert all(e.det == 1 for e in B.elements)


def test_orbit_of_generic_point():
    G = build_group("O")
    p = ProjPoint.parse("2", G.field)
    assert len(G.orbit_of(p).points) == 24
    assert len(G.stabiliser(p)) == 1


def test_regular_fixed_dims():
    for g in ("D5", "T", "O"):
        G = build_group(g)
        for o in G.exceptional_orbits:
            assert regular_fixed_dim(G, G.stabiliser(o.points[0])) == o.d


def test_point_parse():
    G = build_group("T")
    assert ProjPoint.parse("inf", G.field).is_infinity
    assert ProjPoint.parse("1/2", G.field) == ProjPoint.make(1, 2, G.field)
