import pytest

from isoform.binforms import (BinaryForm, act_on_form, divide_exact, ground_forms, multiplicity,
                              sym_power_matrix)
from isoform.cyclofield import Cyclotomic
from isoform.linalg import matmul

X = BinaryForm.monomial(1, 0)
Y = BinaryForm.monomial(0, 1)


def test_arithmetic():
    f = X + Y
    assert (f ** 2).coeffs == (1, 2, 1)
    assert (f * (X - Y)) == X ** 2 - Y ** 2
    assert f.evaluate(2, 3) == 5


def test_division():
    P = (X - Y) ** 3 * (X + Y) * Y ** 2
    q = divide_exact(P, X - Y)
    assert q * (X - Y) == P
    assert divide_exact(P, X + 2 * Y) is None
    e, cof = multiplicity(P, X - Y)
    assert e == 3 and cof == (X + Y) * Y ** 2
    assert multiplicity(P, Y)[0] == 2


@pytest.mark.parametrize("g", ["D4", "T", "O"])
def test_sym_power_matrix_homomorphism(g):
    from isoform.polygroup import build_group
    G = build_group(g)
    a, b = G.elements[G.gens["a"]], G.elements[G.gens["b"]]
    for d in (1, 3, 4):
        lhs = sym_power_matrix(a * b, d)
        rhs = matmul(sym_power_matrix(a, d), sym_power_matrix(b, d))
        assert lhs == rhs


def test_octahedral_forms():
    from isoform.polygroup import build_group
    F = {k: v.form for k, v in ground_forms(build_group("O")).items()}
    assert F["a"].ratio_to(X ** 5 * Y - X * Y ** 5) is not None
    assert F["b"].ratio_to(X ** 8 + 14 * X ** 4 * Y ** 4 + Y ** 8) is not None
    assert F["c"].degree == 12


@pytest.mark.parametrize("g", ["D5", "D6", "T", "O", "Y"])
def test_ground_form_powers_invariant(g):
    from isoform.polygroup import build_group
    G = build_group(g)
    for gf in ground_forms(G).values():
        P = gf.form ** gf.orbit.nu
        for k in "ab":
            assert act_on_form(G.elements[G.gens[k]], P) == P
        assert all(gf.form.at(p).is_zero() for p in gf.orbit.points)


def test_json_roundtrip():
    f = X ** 2 * Cyclotomic.zeta(5) + Y ** 2
    assert BinaryForm.from_json(f.to_json()) == f
