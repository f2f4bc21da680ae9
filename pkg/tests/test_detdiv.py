import pytest

from isoform.binforms import BinaryForm
from isoform.detdiv import (delta, determinant_form, divisor_of_char, factor_ground_forms,
                            form_determinant, vanishing_order_numeric, verify_det_theorem)
from isoform.invec import invariant_basis, pole_orbit
from isoform.polygroup import build_group

X = BinaryForm.monomial(1, 0)
Y = BinaryForm.monomial(0, 1)


def test_form_determinant():
    M = [[X, Y], [Y, X]]
    assert form_determinant(M) == X ** 2 - Y ** 2


@pytest.mark.parametrize("g", ["D3", "D4", "D5", "D6", "T", "O"])
def test_det_theorem(g):
    for r in verify_det_theorem(build_group(g)):
        assert r.ok, r


def test_tetrahedral_one_dimensional():
    G = build_group("T")
    assert delta(G, "T2") == {"a": 2, "b": 1, "c": 0}
    assert delta(G, "T3") == {"a": 1, "b": 2, "c": 0}
    d = divisor_of_char(G, ["T2", "T3"], pole_orbit(G, "pt:2"))
    assert d.zero_part("abc") == (3, 3, 0)


def test_factorization_residual_is_scalar():
    G = build_group("O")
    D = determinant_form(invariant_basis(G, "O7", 24))
    fac = factor_ground_forms(D, G)
    assert fac.exponents == {"a": 4, "b": 3, "c": 2}
    assert not fac.residual.is_zero()


def test_numeric_order_simple():
    P = (X - Y) ** 3 * (X + Y)
    from isoform.polygroup import ProjPoint
    assert abs(vanishing_order_numeric(P, ProjPoint.parse("1", 1)) - 3) < 0.05
