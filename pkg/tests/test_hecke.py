import pytest
from hypothesis import given
from hypothesis import strategies as st

from coideal_schur.hecke import BadGenerator, BadSplit, HeckeAlgebra, OutOfRange
from coideal_schur.scalars import ScalarField
from coideal_schur.weylb import CompositionB, enumerate_group, from_word, reduced_word

F = ScalarField.rational(2, 3)


def alg(d, field=F):
    return HeckeAlgebra(d, field)


def test_T0_quadratic():
    H = alg(1)
    T0 = H.gen(0)
    assert T0 * T0 == H.one + (1 / H.Q - H.Q) * T0


def test_length_additive_product():
    H = alg(2)
    assert H.one * H.gen(1) == H.T(from_word((1,), 2))


def test_type_A_quadratic():
    H = alg(2)
    T1 = H.gen(1)
    assert T1 * T1 == H.one + (1 / H.q - H.q) * T1


def test_lengths_add_for_distinct_generators():
    H = alg(3)
    assert H.gen(1) * H.gen(2) == H.T(from_word((1, 2), 3))


@pytest.mark.parametrize("field", [F, ScalarField.symbolic()], ids=["rational", "symbolic"])
def test_braid_relations(field):
    H = alg(3, field)
    T0, T1, T2 = (H.gen(t) for t in range(3))
    assert T0 * T1 * T0 * T1 == T1 * T0 * T1 * T0
    assert T1 * T2 * T1 == T2 * T1 * T2
    assert T0 * T2 == T2 * T0


def test_bad_generator():
    with pytest.raises(BadGenerator):
        alg(2).gen(2)


def test_parabolic_sums():
    H = alg(2)
    assert H.x_lambda(CompositionB(None, (1, 1))) == H.one
    H1 = alg(1)
    # weighted: T_0 carries Q^-1
    assert H1.x_lambda(CompositionB(3, ())) == H1.one + (1 / H1.Q) * H1.gen(0)
    full = H.x_lambda(CompositionB(5, ()))
    assert len(full.terms) == 8


@pytest.mark.parametrize("t", [0, 1])
def test_parabolic_sum_absorbs_generators(t):
    H = alg(2)
    x = H.x_lambda(CompositionB(5, ()))
    c = H.Q if t == 0 else H.q
    assert x * H.gen(t) == (1 / c) * x
    assert H.gen(t) * x == (1 / c) * x


def test_jucys_murphy():
    H = alg(2)
    assert H.jm_element(1) == H.gen(0)
    assert H.jm_element(2) == H.T(from_word((1, 0, 1), 2))
    assert H.jm_element(1) * H.jm_element(2) == H.jm_element(2) * H.jm_element(1)
    with pytest.raises(OutOfRange):
        H.jm_element(3)


def test_jucys_murphy_commute_d3():
    H = alg(3)
    L = [H.jm_element(m) for m in (1, 2, 3)]
    for a in L:
        for b in L:
            assert a * b == b * a


def test_u_elements():
    H = alg(1)
    up = H.u_pm(1, "+")
    assert up == H.gen(0) + H.Q
    assert H.u_pm(0, "-") == H.one
    assert up * up == (H.Q + 1 / H.Q) * up


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("sign", ["+", "-"])
def test_u_d_is_central(d, sign):
    H = alg(d)
    u = H.u_pm(d, sign)
    for t in range(d):
        assert u * H.gen(t) == H.gen(t) * u


@pytest.mark.parametrize("d", [1, 2, 3])
def test_T0_eigenvalue_on_u_plus(d):
    H = alg(d)
    u = H.u_pm(d, "+")
    assert H.gen(0) * u == (1 / H.Q) * u


@pytest.mark.parametrize("d", [1, 2])
def test_overlong_split_annihilates(d):
    H = alg(d)
    for a in range(d + 1):
        for b in range(d + 1):
            if a + b > d:
                for w in H.elements:
                    assert H.u_pm(b, "-") * H.T(w) * H.u_pm(a, "+") == H.zero


def test_v_degenerate_splits():
    H = alg(2)
    assert H.v_ab(2, 0) == H.u_pm(2, "+")
    assert H.v_ab(0, 2) == H.u_pm(2, "-")
    with pytest.raises(BadSplit):
        H.v_ab(1, 2)


def test_v_11_expansion():
    H = alg(2)
    T0, T1 = H.gen(0), H.gen(1)
    assert H.v_ab(1, 1) == (T0 - 1 / H.Q) * T1 * (T0 + H.Q)


def test_e_rank_one():
    H = alg(1)
    c = H.Q + 1 / H.Q
    assert H.e_ab(1, 0) == (1 / c) * H.u_pm(1, "+")
    assert H.e_ab(0, 1) == (-1 / c) * H.u_pm(1, "-")


@pytest.mark.parametrize("d", [2, 3])
def test_e_idempotent_and_generates_ideal(d):
    H = alg(d)
    for a in range(d + 1):
        e = H.e_ab(a, d - a)
        v = H.v_ab(a, d - a)
        assert e * e == e
        for w in H.elements:
            x = v * H.T(w)
            assert e * x == x


@pytest.mark.parametrize("d", [2, 3])
def test_e_commutes_with_young_subalgebra(d):
    H = alg(d)
    for a in range(d + 1):
        e = H.e_ab(a, d - a)
        for t in H.young_gens(d - a):
            assert e * H.gen(t) == H.gen(t) * e


def test_star_is_anti_automorphism():
    H = alg(2)
    a, b = H.gen(0) + 2 * H.gen(1), H.gen(1) * H.gen(0)
    assert H.star(a * b) == H.star(b) * H.star(a)


elements3 = st.sampled_from(enumerate_group(3))


@given(elements3, elements3, elements3)
def test_associativity(u, v, w):
    H = alg(3)
    a, b, c = H.T(u), H.T(v) + H.T(w), H.T(w)
    assert (a * b) * c == a * (b * c)


@given(st.sampled_from(enumerate_group(2)))
def test_generator_products_reexpand(w):
    H = alg(2)
    assert H.prod([H.gen(t) for t in reduced_word(w)]) == H.T(w)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_T0_eigenvalue_on_u_minus(d):
    H = alg(d)
    u = H.u_pm(d, "-")
    assert H.gen(0) * u == (-H.Q) * u
