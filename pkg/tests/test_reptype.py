import pytest
from hypothesis import given
from hypothesis import strategies as st

from coideal_schur.reptype import (
    CLAUSES,
    GRID,
    FieldParams,
    RepType,
    UnsupportedRegime,
    classify,
    classify_detail,
    condition_report,
    order_of_q_squared,
    sweep,
)
from coideal_schur.scalars import GaussRational, ScalarField

SS, FIN, TAME, WILD = RepType.SEMISIMPLE, RepType.FINITE, RepType.TAME, RepType.WILD


def B(n, d, p=0, l="generic"):
    return classify("B", n, d, FieldParams(p, l))


def A(n, r, p=0, l="generic"):
    return classify("A", n, r, FieldParams(p, l))


def test_type_B_semisimple_clauses():
    assert B(1, 9, 5, 2) is SS
    assert B(5, 9) is SS
    assert B(5, 3, 0, 4) is SS
    assert B(2, 10, 3, 2) is SS


@pytest.mark.parametrize(
    "n,d,p,l",
    [(5, 4, 0, 3), (6, 5, 7, 3), (3, 9, 0, 2), (3, 5, 2, 3), (4, 5, 0, 2), (4, 7, 0, 2), (4, 5, 3, 2), (4, 9, 5, 2)],
)
def test_type_B_finite_clauses(n, d, p, l):
    assert B(n, d, p, l) is FIN


@pytest.mark.parametrize("n,d,p,l", [(3, 6, 3, 2), (3, 6, 2, 3), (3, 10, 3, 3), (3, 9, 3, 3), (4, 7, 3, 2)])
def test_type_B_tame_clauses(n, d, p, l):
    assert B(n, d, p, l) is TAME


@pytest.mark.parametrize("n,d,p,l", [(5, 6, 0, 3), (4, 6, 0, 2), (4, 9, 3, 2), (3, 9, 2, 3), (6, 10, 5, 2)])
def test_type_B_wild_complements(n, d, p, l):
    assert B(n, d, p, l) is WILD


def test_n4_even_degree_note():
    res = classify_detail("B", 4, 4, FieldParams(0, 2))
    assert res.rep_type is WILD and res.notes


@pytest.mark.parametrize(
    "n,r,p,l,expected",
    [
        (1, 7, 3, 2, SS),
        (3, 2, 0, 3, SS),
        (2, 5, 0, 2, SS),
        (2, 5, 3, 2, SS),
        (3, 4, 0, 3, FIN),
        (2, 4, 5, 3, FIN),
        (2, 4, 0, 2, FIN),
        (2, 9, 3, 2, FIN),
        (3, 7, 5, 3, TAME),
        (3, 5, 0, 2, TAME),
        (4, 5, 7, 2, TAME),
        (2, 7, 2, 3, TAME),
        (2, 19, 3, 2, TAME),
    ],
)
def test_type_A_clauses(n, r, p, l, expected):
    assert A(n, r, p, l) is expected


def test_q_squared_equal_one_is_unsupported():
    with pytest.raises(UnsupportedRegime):
        B(3, 2, 0, 1)


@pytest.mark.parametrize("kind", ["A", "B"])
def test_grid_is_total_and_disjoint(kind):
    rows = sweep(kind)
    assert len(rows) == len(GRID["n"]) * len(GRID["d"]) * len(GRID["l"]) * len(GRID["p"])
    assert all(r["type"] in {t.value for t in RepType} for r in rows)


def test_every_clause_fires_on_the_grid():
    fired = {(kind, c) for kind in ("A", "B") for r in sweep(kind) for c in r["clauses"]}
    names = {(kind, c) for kind in CLAUSES for t in CLAUSES[kind] for c, _ in CLAUSES[kind][t]}
    assert names == fired


points = st.tuples(st.sampled_from(list(GRID["n"])), st.sampled_from(list(GRID["d"])), st.sampled_from(GRID["p"]), st.sampled_from(GRID["l"]))


@given(points)
def test_semisimplicity_follows_type_A_blocks(pt):
    n, d, p, l = pt
    hi, lo = (n + 1) // 2, n // 2
    ok = True
    for i in range(d + 1):
        comps = [(hi, i), (lo, d - i)]
        if any(m == 0 and k for m, k in comps):
            continue
        ok &= all(A(m, k, p, l) is SS for m, k in comps if m and k)
    assert (B(n, d, p, l) is SS) == ok


def test_condition_report():
    assert condition_report(4, 2, ScalarField.rational(2, 3)) == {"fB_invertible": True, "r_ge_d": True, "ell_ge_4_or_generic": True}
    gi = ScalarField.gaussian(GaussRational(2), GaussRational(0, 1))
    assert condition_report(2, 1, gi)["fB_invertible"] is False
    assert condition_report(2, 3, ScalarField.rational(2, 3))["r_ge_d"] is False


def test_order_of_q_squared():
    assert order_of_q_squared(ScalarField.gaussian(GaussRational(0, 1), GaussRational(3))) == 2
    assert order_of_q_squared(ScalarField.rational(2, 3)) is None
    assert order_of_q_squared(ScalarField.rational(-1, 3)) == 1
