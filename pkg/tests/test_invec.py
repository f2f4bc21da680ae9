import pytest

from isoform.binforms import act_on_form
from isoform.chartab import character_table
from isoform.invec import (evaluate_span, generator_set, invariant_basis, irrep_matrices,
                           pole_orbit, predicted_dim, quotient_model_check, stabiliser_dim,
                           surjectivity_check, syzygy_coeffs, check_realization)
from isoform.polygroup import ProjPoint, build_group


@pytest.mark.parametrize("g", ["D3", "D4", "D6", "T", "O"])
def test_realizations(g):
    G = build_group(g)
    for irr in character_table(G).irreducibles:
        check_realization(irrep_matrices(G, irr.label))


@pytest.mark.parametrize("g,label,d", [("T", "T7", 12), ("O", "O6", 24), ("D5", "psi2", 10),
                                       ("D4", "psi1", 8), ("T", "T2", 12)])
def test_invariant_basis_dimension_and_invariance(g, label, d):
    G = build_group(g)
    basis = invariant_basis(G, label, d)
    assert len(basis) == predicted_dim(G, label, d)
    rep = irrep_matrices(G, label)
    for v in basis:
        for k in "ab":
            gi = G.gens[k]
            moved = [act_on_form(G.elements[gi], c) for c in v.components]
            R = rep(gi)
            image = [sum((R[i][j] * moved[j] for j in range(rep.dim)), moved[0] * 0)
                     for i in range(rep.dim)]
            assert image == list(v.components)


def test_generator_count_and_poles():
    G = build_group("O")
    orb = pole_orbit(G, "pt:2")
    gs = generator_set(G, "O7", orb)
    assert gs.count == 3
    assert all(quotient_model_check(G, x) for x in gs.generators)
    with pytest.raises(ZeroDivisionError):
        gs.generators[0].evaluate(orb.points[0])


def test_evaluation_rank():
    G = build_group("T")
    orb = G.orbit("c")
    p = ProjPoint.parse("3", G.field)
    assert evaluate_span(G, "T7", orb, p)[0] == 3 == stabiliser_dim(G, "T7", p)
    q = G.orbit("a").points[0]
    assert evaluate_span(G, "T7", orb, q)[0] == stabiliser_dim(G, "T7", q) == 1


def test_syzygy_nonzero():
    for g in ("D5", "T", "O"):
        c1, c2 = syzygy_coeffs(build_group(g))
        assert not c1.is_zero() and not c2.is_zero()


def test_surjectivity():
    G = build_group("T")
    assert surjectivity_check(G, "T7", G.orbit("c"))


def test_bad_orbit():
    from isoform.invec import InvariantError
    with pytest.raises(InvariantError):
        pole_orbit(build_group("T"), "q")
