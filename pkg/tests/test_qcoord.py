from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coideal_schur.qcoord import (
    QuantumMatrices,
    coideal_check,
    comult,
    dual_product,
    dual_unit,
    jB_generators,
    pairing_check,
    quotient_basis,
    straighten,
    tcomm_check,
)
from coideal_schur.scalars import ScalarField
from coideal_schur.schur import dim_formula
from coideal_schur.tensor import index_set

F = ScalarField.rational(2, 3)
S = ScalarField.symbolic()


def test_same_row_relation():
    assert straighten([(1, 1), (1, -1)], 2, F) == {((1, -1), (1, 1)): 1 / F.q}


def test_plain_swap():
    # k > l and i < j commute
    assert straighten([(1, -1), (-1, 1)], 2, F) == {((-1, 1), (1, -1)): F.one}


def test_crossing_relation_extra_term():
    out = straighten([(1, 1), (-1, -1)], 2, F)
    assert out == {((-1, -1), (1, 1)): F.one, ((-1, 1), (1, -1)): 1 / F.q - F.q}


@pytest.mark.parametrize("n,d", [(n, d) for n in (2, 3) for d in (1, 2, 3)])
def test_canonical_monomial_count(n, d):
    A = QuantumMatrices(n, F)
    assert len(A.monomials(d)) == comb(n * n + d - 1, d)
    for m in A.monomials(d):
        assert A.straighten(m) == {m: F.one}


variables3 = st.sampled_from([(i, j) for i in index_set(3) for j in index_set(3)])


@given(st.lists(variables3, max_size=3), st.lists(variables3, max_size=3))
def test_straightening_is_multiplicative(u, v):
    A = QuantumMatrices(3, F)
    assert A.straighten(u + v) == A.multiply(A.straighten(u), A.straighten(v))


@given(st.lists(variables3, min_size=1, max_size=2), st.lists(variables3, min_size=1, max_size=2))
def test_comultiplication_is_multiplicative(u, v):
    A = QuantumMatrices(3, F)
    lhs = A.comult(u + v)
    du, dv = A.comult(u), A.comult(v)
    rhs = {}
    for (a1, b1), c1 in du.items():
        for (a2, b2), c2 in dv.items():
            for ma, ca in A.straighten(a1 + a2).items():
                for mb, cb in A.straighten(b1 + b2).items():
                    key = (ma, mb)
                    rhs[key] = rhs.get(key, 0) + c1 * c2 * ca * cb
    assert lhs == {k: c for k, c in rhs.items() if c}


def test_comult_of_generator():
    assert comult([(-1, -1)], 2, F) == {(((-1, -1),), ((-1, -1),)): 1, (((-1, 1),), ((1, -1),)): 1}


@pytest.mark.parametrize("n,count", [(2, 2), (3, 4), (4, 8)])
def test_ideal_generator_counts(n, count):
    assert len(jB_generators(n, F)) == count


@pytest.mark.parametrize("n,d,dim", [(2, 1, 2), (2, 2, 3), (3, 1, 5), (2, 3, 4), (3, 2, 15), (4, 2, 36)])
def test_quotient_dimensions(n, d, dim):
    qb = quotient_basis(n, d, F)
    assert qb.dim == dim == dim_formula(n, d, "B")
    assert not qb.degenerate


def test_rank_one_quotient():
    qb = quotient_basis(2, 1, S)
    assert qb.chosen_basis == [((-1, -1),), ((-1, 1),)]
    assert qb.reduce({((1, 1),): S.one}) == {0: S.one, 1: S.Q - 1 / S.Q}
    assert qb.delta(0) == {(0, 0): S.one, (1, 1): S.one}


def test_rank_one_dual_table():
    qb = quotient_basis(2, 1, S)
    a, b = {0: S.one}, {1: S.one}
    assert dual_product(a, a, qb) == a
    assert dual_product(a, b, qb) == b == dual_product(b, a, qb)
    assert dual_product(b, b, qb) == {0: S.one, 1: S.Q - 1 / S.Q}


@given(st.lists(st.integers(-3, 3), min_size=15, max_size=15), st.lists(st.integers(-3, 3), min_size=15, max_size=15))
def test_dual_algebra_unit_and_associativity(fc, gc):
    qb = quotient_basis(3, 2, F)
    f = {k: F.coerce(c) for k, c in enumerate(fc) if c}
    g = {k: F.coerce(c) for k, c in enumerate(gc) if c}
    u = dual_unit(qb)
    assert dual_product(u, f, qb) == f == dual_product(f, u, qb)
    h = {0: F.one, 7: F.coerce(2)}
    assert dual_product(dual_product(f, g, qb), h, qb) == dual_product(f, dual_product(g, h, qb), qb)


@pytest.mark.parametrize("n,d", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_quotient_checks(n, d):
    recs = pairing_check(n, d, F) + [coideal_check(n, d, F), tcomm_check(n, d, F)]
    assert all(r.ok for r in recs), [r.to_dict() for r in recs]
