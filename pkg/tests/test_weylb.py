from itertools import combinations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coideal_schur.schur import dim_formula
from coideal_schur.weylb import (
    CompositionB,
    InvalidWeight,
    RankMismatch,
    SignedPerm,
    compose,
    coset_reps,
    double_coset,
    enumerate_group,
    from_word,
    generator,
    identity,
    inverse,
    length,
    longest,
    parabolic_elements,
    parabolic_of,
    reduced_word,
    weights,
    word_action,
)


def combinatorial_length(w):
    """Inversions plus negative entries plus negative-sum pairs."""
    d = len(w)
    inv = sum(1 for i, j in combinations(range(d), 2) if w[i] > w[j])
    nsp = sum(1 for i, j in combinations(range(d), 2) if w[i] + w[j] < 0)
    neg = sum(1 for x in w if x < 0)
    return inv + nsp + neg


signed_perms = st.integers(1, 4).flatmap(
    lambda d: st.tuples(st.permutations(range(1, d + 1)), st.lists(st.booleans(), min_size=d, max_size=d))
).map(lambda pr: SignedPerm([x if s else -x for x, s in zip(*pr)]))


def test_generator_squares_to_identity():
    s0 = generator(0, 2)
    assert compose(s0, s0) == identity(2)


def test_identity_is_neutral():
    w = SignedPerm([2, -1, 3])
    assert compose(identity(3), w) == w == compose(w, identity(3))


def test_composition_is_functional():
    assert compose(generator(0, 2), generator(1, 2)) == SignedPerm([2, -1])


def test_lengths():
    assert length(longest(2)) == 4
    assert length(from_word((0, 1, 0), 2)) == 3


@pytest.mark.parametrize("d,size", [(1, 2), (2, 8), (3, 48)])
def test_group_sizes(d, size):
    assert len(enumerate_group(d)) == size == 2**d * factorial(d)


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        compose(identity(2), identity(3))


def test_centre_part_must_be_odd():
    with pytest.raises(InvalidWeight):
        CompositionB(2, (1,))


@given(signed_perms)
def test_length_matches_combinatorial_count(w):
    assert length(w) == combinatorial_length(w)


@given(signed_perms)
def test_reduced_word_roundtrip(w):
    word = reduced_word(w)
    assert len(word) == length(w)
    assert from_word(word, len(w)) == w


@given(signed_perms)
def test_inverse(w):
    assert compose(w, inverse(w)) == identity(len(w))
    assert length(inverse(w)) == length(w)


@given(signed_perms, st.data())
def test_word_action_is_a_right_action(w, data):
    d = len(w)
    u = data.draw(st.sampled_from(enumerate_group(d)))
    mu = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=d, max_size=d)))
    assert word_action(word_action(mu, u), w) == word_action(mu, compose(u, w))


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 6) for d in range(1, 4)])
def test_cosets_and_double_cosets(n, d):
    total = 0
    for lam in weights(n, d):
        W_lam = parabolic_elements(d, parabolic_of(lam))
        assert len(W_lam) * len(coset_reps(lam)) == 2**d * factorial(d)
        for mu in weights(n, d):
            total += len(coset_reps(lam, mu))
    assert total == dim_formula(n, d, "B")


def test_double_cosets_partition_the_group():
    lam = weights(3, 2)[1]
    gens = parabolic_of(lam)
    reps = coset_reps(lam, lam)
    members = [x for g in reps for x in double_coset(2, gens, g, gens)]
    assert sorted(members) == sorted(enumerate_group(2))
