import pytest
from hypothesis import given
from hypothesis import strategies as st

from coideal_schur.cellular import (
    AxiomFailure,
    CellDatum,
    SizeGuard,
    counterexample_datum,
    dominates,
    gram_factorization_check,
    is_semistandard,
    murphy_datum,
    product_datum,
    reverse_dominance,
    standard_tableaux,
    verify_cell_axioms,
)
from coideal_schur.scalars import GaussRational, ScalarField
from coideal_schur.schur import dim_formula, partitions

F = ScalarField.rational(2, 3)
S = ScalarField.symbolic()
GI = ScalarField.gaussian(GaussRational(2), GaussRational(0, 1))


def hook_count(shape):
    from math import factorial

    cols = [sum(1 for r in shape if r > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= row - j + cols[j] - i - 1
    return factorial(sum(shape)) // hooks


@pytest.mark.parametrize("shape", [(1,), (2, 1), (3, 2), (2, 2, 1), (4, 1, 1)])
def test_standard_tableaux_match_hook_length(shape):
    assert len(standard_tableaux(shape)) == hook_count(shape)


@given(st.integers(1, 7).flatmap(lambda k: st.tuples(st.sampled_from(partitions(k, k)), st.sampled_from(partitions(k, k)))))
def test_dominance_is_antisymmetric(pair):
    a, b = pair
    if dominates(a, b) and dominates(b, a):
        assert a == b
    assert not (reverse_dominance(a, b) and reverse_dominance(b, a))


def test_semistandard_test():
    assert is_semistandard(((1, 1), (2,)))
    assert not is_semistandard(((1, 2), (1,)))


def test_one_row_murphy_datum():
    D = murphy_datum(1, 3, F)
    assert D.cell_sizes() == {(3,): 1}


@pytest.mark.parametrize("m,k,sizes", [(2, 2, {(2,): 3, (1, 1): 1}), (2, 3, {(3,): 4, (2, 1): 2})])
def test_murphy_cell_sizes(m, k, sizes):
    D = murphy_datum(m, k, F)
    assert D.cell_sizes() == sizes
    assert sum(v * v for v in sizes.values()) == dim_formula(m, k, "A")


def test_murphy_axioms_and_gram():
    rep = verify_cell_axioms(murphy_datum(2, 2, F))
    assert rep.ok and rep.quasi_hereditary
    (g2,) = [g for g in rep.grams if g.lam == (2,)]
    # the middle weight of the two-row Weyl module pairs to 1 + q^-2
    diag = [g2.matrix[i][i] for i in range(3)]
    assert diag == [F.one, 1 + 1 / (F.q * F.q), F.one]


def test_trivial_gram():
    rep = verify_cell_axioms(murphy_datum(1, 1, F))
    assert [g.matrix for g in rep.grams] == [[[F.one]]]


def test_size_guard():
    with pytest.raises(SizeGuard):
        murphy_datum(3, 2, F)


@pytest.mark.parametrize("n,d,cells,dim", [(2, 1, 2, 2), (2, 2, 3, 3), (3, 1, 2, 5), (3, 2, 4, 15)])
def test_product_datum(n, d, cells, dim):
    D = product_datum(n, d, F)
    assert len(D.poset) == cells
    assert sum(v * v for v in D.cell_sizes().values()) == dim
    rep = verify_cell_axioms(D)
    assert rep.ok and rep.quasi_hereditary


def test_gram_factorization():
    assert gram_factorization_check(3, 2, F).ok


def test_counterexample_symbolic():
    rep = verify_cell_axioms(counterexample_datum(S))
    assert rep.ok
    grams = {g.lam: g.matrix for g in rep.grams}
    Q = S.Q
    assert grams[(2,)] == [[1 / (Q * Q) + 1]]
    assert grams[(1, 1)] == [[S.one]]


def test_counterexample_vanishes_at_Q_i():
    rep = verify_cell_axioms(counterexample_datum(GI))
    assert rep.ok
    assert rep.quasi_hereditary is False
    grams = {g.lam: g.matrix for g in rep.grams}
    assert grams[(2,)] == [[GI.zero]]


def test_counterexample_rational_value():
    grams = {g.lam: g.matrix for g in verify_cell_axioms(counterexample_datum(F)).grams}
    assert grams[(2,)] == [[F.coerce(10) / 9]]


def test_broken_datum_is_rejected():
    good = counterexample_datum(F)
    flipped = CellDatum(good.algebra, good.poset, lambda a, b: a == (1, 1) and b == (2,), good.M, good.C, "flipped")
    with pytest.raises(AxiomFailure):
        verify_cell_axioms(flipped)
    assert not verify_cell_axioms(flipped, strict=False).ok
