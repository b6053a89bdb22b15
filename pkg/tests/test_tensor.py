from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coideal_schur.hecke import BadSplit
from coideal_schur.linalg import rank, same_span
from coideal_schur.scalars import ScalarField
from coideal_schur.tensor import InvalidIndex, TensorElt, TensorSpace, index_set

F = ScalarField.rational(2, 3)


def v(*word):
    return TensorElt({tuple(word): 1})


def test_index_sets():
    assert index_set(2) == (-1, 1)
    assert index_set(3) == (-1, 0, 1)
    assert index_set(4) == (-2, -1, 1, 2)


def test_T0_on_positive_letter():
    V = TensorSpace(2, 1, F)
    assert V.act_gen(V.basis((1,)), 0) == V.basis((-1,))


def test_T0_on_zero_letter():
    V = TensorSpace(3, 1, F)
    assert V.act_gen(V.basis((0,)), 0) == V.basis((0,)).scale(1 / V.Q)


def test_T1_on_equal_letters():
    V = TensorSpace(2, 2, F)
    assert V.act_gen(V.basis((1, 1)), 1) == V.basis((1, 1)).scale(1 / V.q)


def test_T0_on_negative_letter():
    V = TensorSpace(2, 1, F)
    expect = V.basis((1,)) + V.basis((-1,)).scale(1 / V.Q - V.Q)
    assert V.act(V.basis((-1,)), V.hecke.gen(0)) == expect


def test_identity_acts_trivially():
    V = TensorSpace(3, 2, F)
    x = V.basis((0, -1))
    assert V.act(x, V.hecke.one) == x


def test_u_plus_on_constant_word():
    V = TensorSpace(2, 2, F)
    assert V.act(V.basis((1, 1)), V.hecke.u_pm(2, "+")) == V.w_pm((1, 1), "+")


def test_w_vectors_rank_one():
    V = TensorSpace(2, 1, F)
    assert V.w_pm((1,), "+") == V.basis((-1,)) + V.basis((1,)).scale(V.Q)
    V3 = TensorSpace(3, 1, F)
    assert V3.w_factor(0, 0, "-") == TensorElt()
    with pytest.raises(InvalidIndex):
        V3.w_pm((0,), "-")


def test_w_plus_sorted_is_tensor_of_factors():
    V = TensorSpace(7, 4, F)
    I = (0, 1, 1, 3)
    expect = V.w_factor(0, 0, "+").tensor(V.w_factor(1, 0, "+")).tensor(V.w_factor(1, 1, "+")).tensor(V.w_factor(3, 0, "+"))
    assert V.w_pm(I, "+") == expect


def test_projections():
    V = TensorSpace(2, 1, F)
    assert V.project(V.w_pm((1,), "+"), "p_d") == V.basis((-1,))
    V2 = TensorSpace(2, 2, F)
    x = V2.basis((-1, -1))
    assert V2.project(x, "p_d") == x
    assert V2.project(V2.basis((1, -1)), "p'_ab", 1, 1) == V2.basis((1, -1))
    assert V2.project(V2.basis((1, 1)), "p'_ab", 1, 1) == TensorElt()
    with pytest.raises(BadSplit):
        V2.project(x, "p_ab", 2, 1)


def test_block_maps_rank_one():
    V = TensorSpace(2, 1, F)
    plus = V.block_map(1, 0)
    assert V.from_vec(plus.column(0)) == V.w_pm((1,), "+")
    minus = V.block_map(0, 1)
    assert V.from_vec(minus.column(0)) == V.w_pm((1,), "-")


def test_block_map_full_column_rank():
    # n = 2: V_{>=0} and V_{>0} are both spanned by v_1, so the domain is a line
    V = TensorSpace(2, 2, F)
    M = V.block_map(1, 1)
    assert M.shape == (4, 1)
    assert M.rank() == 1
    V3 = TensorSpace(3, 2, F)
    assert V3.block_map(1, 1).rank() == 2 * 1


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3)])
def test_generators_satisfy_relations_on_tensor_space(n, d):
    V = TensorSpace(n, d, F)
    H = V.hecke
    for word in V.words:
        x = V.basis(word)
        for t in range(d):
            c = V.Q if t == 0 else V.q
            xx = V.act_gen(V.act_gen(x, t), t)
            assert xx == x + V.act_gen(x, t).scale(1 / c - c)
        if d >= 2:
            lhs = V.act(x, H.gen(0) * H.gen(1) * H.gen(0) * H.gen(1))
            assert lhs == V.act(x, H.gen(1) * H.gen(0) * H.gen(1) * H.gen(0))


@given(st.data())
def test_action_is_a_right_module(data):
    n = data.draw(st.integers(2, 4))
    d = data.draw(st.integers(1, 3))
    V = TensorSpace(n, d, F)
    H = V.hecke
    word = data.draw(st.sampled_from(V.words))
    g1, g2 = data.draw(st.sampled_from(H.elements)), data.draw(st.sampled_from(H.elements))
    h1 = H.T(g1) + 2 * H.T(g2)
    h2 = H.T(g2)
    x = V.basis(word)
    assert V.act(V.act(x, h1), h2) == V.act(x, h1 * h2)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(2, 6) for d in range(1, 4) if n ** d <= 125])
def test_u_action_produces_w_bases(n, d):
    V = TensorSpace(n, d, F)
    r = n // 2
    lo = 0 if n % 2 else 1
    up, um = V.hecke.u_pm(d, "+"), V.hecke.u_pm(d, "-")
    for I in product(range(lo, r + 1), repeat=d):
        assert V.act(V.basis(I), up) == V.w_pm(I, "+")
    for I in product(range(1, r + 1), repeat=d):
        assert V.act(V.basis(I), um) == V.w_pm(I, "-")


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (4, 2), (3, 3)])
def test_u_plus_image_spanned_by_nonnegative_words(n, d):
    V = TensorSpace(n, d, F)
    up = V.hecke.u_pm(d, "+")
    full = [V.to_vec(V.act(V.basis(w), up)) for w in V.words]
    part = [V.to_vec(V.act(V.basis(w), up)) for w in V.words_in([">=0"] * d)]
    assert same_span(full, part)
    um = V.hecke.u_pm(d, "-")
    full = [V.to_vec(V.act(V.basis(w), um)) for w in V.words]
    part = [V.to_vec(V.act(V.basis(w), um)) for w in V.words_in([">0"] * d)]
    assert same_span(full, part)


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (4, 2), (3, 3)])
def test_block_map_image_is_ideal_image(n, d):
    V = TensorSpace(n, d, F)
    for a in range(d + 1):
        vab = V.hecke.v_ab(a, d - a)
        full = [V.to_vec(V.act(V.basis(w), vab)) for w in V.words]
        M = V.block_map(a, d - a)
        cols = [M.column(j) for j in range(len(M.domain_basis))]
        assert same_span(full, cols)
        assert rank(cols) == len(cols)
