from fractions import Fraction as F

from isoform.cyclofield import Cyclotomic
from isoform.linalg import Echelon, det, nullspace, rank, solve


def test_rank_and_nullspace():
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(1), F(0), F(1)]]
    assert rank(rows) == 2
    ns = nullspace(rows, 3, F(0), F(1))
    assert len(ns) == 1
    v = ns[0]
    assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


def test_solve_and_inconsistent():
    a = [[F(1), F(1)], [F(1), F(-1)]]
    assert solve(a, [F(3), F(1)], F(0), F(1)) == [2, 1]
    assert solve([[F(1), F(1)], [F(2), F(2)]], [F(1), F(3)], F(0), F(1)) is None


def test_det_cyclotomic():
    z = Cyclotomic.zeta(3)
    m = [[z, Cyclotomic.rational(1, 3)], [Cyclotomic.rational(1, 3), z ** 2]]
    assert det(m) == 1 - 1


def test_echelon_incremental():
    e = Echelon(3)
    assert e.add([F(1), F(0), F(0)])
    assert e.add([F(1), F(1), F(0)])
    assert not e.add([F(3), F(2), F(0)])
    assert e.contains([F(0), F(5), F(0)])
    assert e.rank == 2
