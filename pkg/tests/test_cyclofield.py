from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from isoform.cyclofield import ConductorMismatch, Cyclotomic, golden_phi


def elem(n):
    q = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 7))
    return st.lists(q, min_size=1, max_size=n).map(lambda cs: Cyclotomic(n, cs))


@pytest.mark.parametrize("n", [3, 4, 5, 8, 12, 15])
def test_zeta_is_primitive_root(n):
    z = Cyclotomic.zeta(n)
    assert z ** n == 1
    for k in range(1, n):
        assert z ** k != 1
    assert sum((z ** k for k in range(n)), Cyclotomic.rational(0, n)) == 0


def test_inverse_of_one_plus_zeta3():
    a = 1 + Cyclotomic.zeta(3)
    inv = a.inverse()
    assert a * inv == 1
    # 1 + z3 = -z3^2, so its inverse is -z3
    assert inv == -Cyclotomic.zeta(3)


@pytest.mark.parametrize("d", [2, 3, 5, 6, 12, -1, -2, -3])
def test_sqrt(d):
    r = Cyclotomic.sqrt(d)
    assert r * r == d
    assert abs(r.to_numeric() ** 2 - d) < 1e-9


def test_golden_ratio():
    p = golden_phi()
    assert p * p == p + 1
    assert abs(p.to_numeric() - (1 + 5 ** 0.5) / 2) < 1e-12


def test_promotion_and_mismatch():
    a = Cyclotomic.zeta(4)
    b = Cyclotomic.zeta(8)
    assert (a + b).n == 8
    assert b * b == a
    with pytest.raises(ConductorMismatch):
        Cyclotomic.zeta(3) + Cyclotomic.zeta(5)


def test_minimal_and_hash():
    a = Cyclotomic.zeta(3).embed(12)
    assert a.minimal().n == 3
    assert hash(a) == hash(Cyclotomic.zeta(3))
    assert Cyclotomic.zeta(12, 6) == -1
    assert Cyclotomic.zeta(12, 6).is_rational()


def test_conjugate_and_galois():
    z = Cyclotomic.zeta(5)
    assert z.conjugate() == z ** 4
    assert (z + z.conjugate()).is_real()
    assert z.galois(2) == z ** 2


def test_json_roundtrip():
    a = Cyclotomic(7, [Fraction(1, 3), 2, 0, -5])
    assert Cyclotomic.from_json(a.to_json()) == a


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.rational(0, 5).inverse()


@settings(max_examples=40, deadline=None)
@given(elem(12), elem(12), elem(12))
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == 1
    assert abs((a * b).to_numeric() - a.to_numeric() * b.to_numeric()) < 1e-6 * (1 + abs(a.to_numeric() * b.to_numeric()))


@settings(max_examples=30, deadline=None)
@given(elem(15))
def test_conjugate_multiplicative_norm_real(a):
    assert (a * a.conjugate()).is_real()
