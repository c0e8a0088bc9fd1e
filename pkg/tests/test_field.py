from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF as SymGF
from sympy import Matrix
from sympy.polys.matrices import DomainMatrix

from srkit.errors import ParameterRange
from srkit.field import (
    QQ,
    ExactMatrix,
    FieldSpec,
    GaloisField,
    is_prime,
    rank,
    select_independent_rows,
    select_rows_generic,
)

GF2 = FieldSpec.gf(2)
P = 32003


def oracle_rank(rows, modulus=None):
    if not rows or not rows[0]:
        return 0
    if modulus is None:
        return Matrix(rows).rank()
    dom = SymGF(modulus)
    return DomainMatrix([[dom(x) for x in r] for r in rows], (len(rows), len(rows[0])), dom).rank()


small_matrices = st.integers(1, 8).flatmap(
    lambda r: st.integers(1, 8).flatmap(
        lambda c: st.lists(st.lists(st.integers(-1, 1), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def test_fieldspec_parse_and_validation():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("gf:7").modulus == 7
    assert str(FieldSpec.gf(2)) == "GF(2)"
    assert str(QQ) == "QQ"
    with pytest.raises(ParameterRange):
        FieldSpec.gf(4)
    with pytest.raises(ParameterRange):
        FieldSpec.parse("gf:x")
    with pytest.raises(ParameterRange):
        FieldSpec.parse("reals")


def test_is_prime_small():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(P)


def test_exact_matrix_invariants():
    with pytest.raises(ValueError):
        ExactMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ValueError):
        ExactMatrix(1, 1, (5,), GF2)
    m = ExactMatrix.from_rows([[Fraction(1, 2), 3]])
    assert m[0, 0] == Fraction(1, 2) and m[0, 1] == 3
    assert m.over(FieldSpec.gf(5)).entries == (3, 3)


def test_rank_examples():
    assert rank(ExactMatrix.from_rows([[1, 0], [0, 1]], GF2)) == 2
    assert rank(ExactMatrix(0, 5, ())) == 0
    # boundary of the 5-cycle: vertices minus components
    edges = [(i, (i + 1) % 5) for i in range(5)]
    rows = []
    for a, b in edges:
        r = [0] * 5
        r[a], r[b] = -1, 1
        rows.append(r)
    assert rank(ExactMatrix.from_rows(rows)) == 4


def test_select_rows_examples():
    assert select_independent_rows(ExactMatrix.from_rows([[1, 0], [0, 1], [1, 1]])) == (0, 1)
    assert select_independent_rows(ExactMatrix.from_rows([[0, 0], [1, 1]])) == (1,)
    assert select_independent_rows(ExactMatrix.from_rows([[1, 1], [2, 2], [1, 0]])) == (0, 2)


def test_rank_depends_on_characteristic():
    m = ExactMatrix.from_rows([[1, 1], [1, -1]])
    assert rank(m) == 2
    assert rank(m, GF2) == 1


def test_rational_entries():
    m = ExactMatrix.from_rows([[Fraction(1, 3), Fraction(2, 3)], [1, 2]])
    assert rank(m) == 1


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_rank_transpose_and_oracle(rows):
    m = ExactMatrix.from_rows(rows)
    r = rank(m)
    assert r == rank(m.transpose())
    assert r == oracle_rank(rows)
    assert rank(m, FieldSpec.gf(P)) == oracle_rank(rows, P)
    assert rank(m, GF2) == oracle_rank(rows, 2)


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_rationals_agree_with_large_prime(rows):
    m = ExactMatrix.from_rows(rows)
    assert rank(m) == rank(m, FieldSpec.gf(P))


@settings(max_examples=60, deadline=None)
@given(small_matrices, st.sampled_from([None, 2, 3, P]))
def test_selected_rows_form_a_basis(rows, modulus):
    fld = QQ if modulus is None else FieldSpec.gf(modulus)
    m = ExactMatrix.from_rows(rows, fld)
    idx = select_independent_rows(m)
    assert len(idx) == rank(m)
    assert list(idx) == sorted(idx)
    assert rank(m.select_rows(idx)) == len(idx)


def test_matmul_and_zero():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    b = ExactMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).to_rows() == [[2, 1], [4, 3]]
    assert ExactMatrix.zeros(2, 3).is_zero()


@pytest.mark.parametrize("p,m", [(2, 2), (2, 4), (3, 2), (5, 2)])
def test_galois_field_axioms(p, m):
    gf = GaloisField(p, m)
    elems = range(gf.order)
    rng = random.Random(p * 100 + m)
    for _ in range(200):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert gf.add(a, b) == gf.add(b, a)
        assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))
        assert gf.add(a, gf.neg(a)) == 0
        if a:
            assert gf.mul(a, gf.inv(a)) == 1
    # multiplicative group is cyclic of order q-1: every nonzero element has an inverse
    assert len({gf.inv(a) for a in range(1, gf.order)}) == gf.order - 1


def test_galois_field_characteristic():
    gf = GaloisField.at_least(2, P)
    assert gf.order >= P and gf.p == 2
    one = 1
    assert gf.add(one, one) == 0


def test_select_rows_generic_matches_prime_field():
    rng = random.Random(5)
    gf = GaloisField(7)
    for _ in range(30):
        rows = [[rng.randrange(7) for _ in range(4)] for _ in range(5)]
        keep = select_rows_generic(rows, gf)
        assert tuple(keep) == select_independent_rows(ExactMatrix.from_rows(rows, FieldSpec.gf(7)))
