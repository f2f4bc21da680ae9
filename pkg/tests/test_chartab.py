from fractions import Fraction

import pytest

from isoform.chartab import (character_table, decompose, format_decomposition, inner_product,
                             kappa, natural, poincare_coefficient, serre_lusztig, sym_power_char,
                             sym_power_char_closed, trivial, validate_table)
from isoform.polygroup import build_group

GROUPS = ["C4", "C5", "D3", "D4", "D5", "D6", "T", "O", "Y"]


@pytest.mark.parametrize("g", GROUPS)
def test_orthonormal(g):
    tab = character_table(g)
    validate_table(tab)
    G = tab.group
    assert sum(i.degree ** 2 for i in tab.irreducibles) == G.lift_order
    for x in tab.irreducibles:
        for y in tab.irreducibles:
            assert inner_product(x.char, y.char) == (1 if x is y else 0)


@pytest.mark.parametrize("g,n", [("T", 7), ("O", 8), ("Y", 9), ("D4", 7), ("D5", 4)])
def test_table_sizes(g, n):
    assert len(character_table(g).irreducibles) == n


@pytest.mark.parametrize("g", ["D4", "T", "O", "Y"])
def test_natural_is_irreducible(g):
    tab = character_table(g)
    nat = tab[tab.natural_label]
    assert nat.char == natural(tab.group)
    assert nat.spinorial


def test_cyclic_has_no_natural_irreducible():
    assert character_table("C5").natural_label is None


@pytest.mark.parametrize("g", ["T", "O", "D6"])
def test_recurrence_matches_closed_form(g):
    G = build_group(g)
    for h in range(-1, 30):
        assert sym_power_char(G, h) == sym_power_char_closed(G, h)


def test_sympow_decomposition_text():
    tab = character_table("T")
    assert format_decomposition(decompose(sym_power_char(tab.group, 12)), tab) == "2T1+T2+T3+3T7"
    assert format_decomposition(decompose(sym_power_char(tab.group, -1)), tab) == "0"


@pytest.mark.parametrize("label,k,nk", [
    ("T7", (1, 1, 1), (3, 3, 2)),
    ("O6", (Fraction(3, 2), 1, Fraction(1, 2)), (6, 3, 1)),
    ("Y8", (2, 2, 1), (10, 6, 2)),
])
def test_kappa_values(label, k, nk):
    rec = kappa(label, label[0])
    assert rec.kappa == k
    assert rec.nu_kappa == nk


@pytest.mark.parametrize("g", ["D3", "D4", "D5", "D6", "T", "O", "Y"])
def test_serre_lusztig(g):
    G = build_group(g)
    for irr in character_table(G).nonspinorial():
        lhs, rhs = serre_lusztig(G, irr.label)
        assert lhs == rhs


def test_poincare_trivial():
    G = build_group("O")
    assert poincare_coefficient(G, "O1", 1, 1) == 2
    assert poincare_coefficient(G, "O1", 2, 2) == 5
    mult = inner_product(sym_power_char(G, 24), trivial(G))
    assert mult == 2
