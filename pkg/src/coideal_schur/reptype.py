"""Representation type of the type A and type B q-Schur algebras.

The classifier is a literal transcription of the known case lists.  Parameters
are the characteristic ``p`` and the multiplicative order ``l`` of
``qbar = q^-2`` (the same as the order of ``q^2``), or ``"generic"`` when
``q^2`` is not a root of unity.  ``l = 1`` (``q^2 = 1``) is outside the lists.

Each clause is a named predicate; ``classify_detail`` reports every clause that
fired so that overlaps are visible instead of silently resolved.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple, Union

from .scalars import ScalarField, f_B

__all__ = [
    "RepType",
    "FieldParams",
    "UnsupportedRegime",
    "InconsistentClauses",
    "classify",
    "classify_detail",
    "condition_report",
    "order_of_q_squared",
    "GRID",
    "sweep",
]

GENERIC = "generic"


class UnsupportedRegime(ValueError):
    pass


class InconsistentClauses(AssertionError):
    """More than one representation type matched."""


class RepType(str, Enum):
    SEMISIMPLE = "semisimple"
    FINITE = "finite"
    TAME = "tame"
    WILD = "wild"


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class FieldParams:
    """``p`` is 0 or a prime; ``l`` is the order of ``qbar = q^-2`` or ``"generic"``."""

    p: int = 0
    l: Union[int, str] = GENERIC

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"characteristic must be 0 or prime, got {self.p}")
        if self.l != GENERIC and not (isinstance(self.l, int) and self.l >= 1):
            raise ValueError(f"l must be a positive integer or 'generic', got {self.l!r}")

    @property
    def generic(self) -> bool:
        return self.l == GENERIC

    def root(self) -> bool:
        """``qbar`` is a primitive ``l``-th root of unity."""
        return not self.generic


Clause = Tuple[str, Callable[[int, int, FieldParams], bool]]


def _l(P: FieldParams) -> int:
    return P.l  # type: ignore[return-value]


# -- type A ------------------------------------------------------------------

A_SEMISIMPLE: List[Clause] = [
    ("n=1", lambda n, r, P: n == 1),
    ("generic", lambda n, r, P: P.generic),
    ("r<l", lambda n, r, P: P.root() and r < _l(P)),
    ("n=2,p=0,l=2,r odd", lambda n, r, P: n == 2 and P.p == 0 and P.l == 2 and r % 2 == 1),
    ("n=2,p>=3,l=2,r odd,r<2p+1", lambda n, r, P: n == 2 and P.p >= 3 and P.l == 2 and r % 2 == 1 and r < 2 * P.p + 1),
]

A_FINITE: List[Clause] = [
    ("n>=3,r<2l", lambda n, r, P: n >= 3 and r < 2 * _l(P)),
    ("n=2,p>0,l>=3,r<lp", lambda n, r, P: n == 2 and P.p != 0 and _l(P) >= 3 and r < _l(P) * P.p),
    ("n=2,p=0,l>=3 or (l=2,r even)", lambda n, r, P: n == 2 and P.p == 0 and (_l(P) >= 3 or (P.l == 2 and r % 2 == 0))),
    (
        "n=2,p>=3,l=2,(r even,r<2p) or (r odd,2p+1<=r<2p^2+1)",
        lambda n, r, P: n == 2
        and P.p >= 3
        and P.l == 2
        and ((r % 2 == 0 and r < 2 * P.p) or (r % 2 == 1 and 2 * P.p + 1 <= r < 2 * P.p**2 + 1)),
    ),
]

A_TAME: List[Clause] = [
    ("n=3,l=3,p!=2,r in {7,8}", lambda n, r, P: n == 3 and P.l == 3 and P.p != 2 and r in (7, 8)),
    ("n=3,l=2,r in {4,5}", lambda n, r, P: n == 3 and P.l == 2 and r in (4, 5)),
    ("n=4,l=2,r=5", lambda n, r, P: n == 4 and P.l == 2 and r == 5),
    ("n=2,l>=3,p in {2,3},pl<=r<(p+1)l", lambda n, r, P: n == 2 and _l(P) >= 3 and P.p in (2, 3) and P.p * _l(P) <= r < (P.p + 1) * _l(P)),
    ("n=2,l=2,p=3,r in {6,19,21,23}", lambda n, r, P: n == 2 and P.l == 2 and P.p == 3 and r in (6, 19, 21, 23)),
]

# -- type B ------------------------------------------------------------------

B_SEMISIMPLE: List[Clause] = [
    ("n=1", lambda n, d, P: n == 1),
    ("generic", lambda n, d, P: P.generic),
    ("d<l", lambda n, d, P: P.root() and d < _l(P)),
    ("n=2", lambda n, d, P: n == 2),
]

# n = 4 clauses keep the parity condition: d = 4 itself never qualifies.
B_FINITE: List[Clause] = [
    ("n>=5,l<=d<2l", lambda n, d, P: n >= 5 and _l(P) <= d < 2 * _l(P)),
    ("n=3,p=0,l<=d", lambda n, d, P: n == 3 and P.p == 0 and _l(P) <= d),
    ("n=3,p>=2,l<=d<lp", lambda n, d, P: n == 3 and P.p >= 2 and _l(P) <= d < _l(P) * P.p),
    ("n=4,p=0,l=2,d>=4,d odd", lambda n, d, P: n == 4 and P.p == 0 and P.l == 2 and d >= 4 and d % 2 == 1),
    ("n=4,p>=3,l=2,4<d<=2p-1,d odd", lambda n, d, P: n == 4 and P.p >= 3 and P.l == 2 and 4 < d <= 2 * P.p - 1 and d % 2 == 1),
]

B_TAME: List[Clause] = [
    ("n=3,l=2,p=3,d=6", lambda n, d, P: n == 3 and P.l == 2 and P.p == 3 and d == 6),
    ("n=3,l>=3,p in {2,3},lp<=d<l(p+1)", lambda n, d, P: n == 3 and _l(P) >= 3 and P.p in (2, 3) and _l(P) * P.p <= d < _l(P) * (P.p + 1)),
    ("n=4,l=2,p=3,d=7", lambda n, d, P: n == 4 and P.l == 2 and P.p == 3 and d == 7),
]

CLAUSES: Dict[str, Dict[RepType, List[Clause]]] = {
    "A": {RepType.SEMISIMPLE: A_SEMISIMPLE, RepType.FINITE: A_FINITE, RepType.TAME: A_TAME},
    "B": {RepType.SEMISIMPLE: B_SEMISIMPLE, RepType.FINITE: B_FINITE, RepType.TAME: B_TAME},
}


@dataclass
class Classification:
    kind: str
    n: int
    d: int
    params: FieldParams
    rep_type: RepType
    clauses: List[str]
    notes: List[str]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "d": self.d,
            "p": self.params.p,
            "l": self.params.l,
            "type": self.rep_type.value,
            "clauses": self.clauses,
            "notes": self.notes,
        }


def _matches(kind: str, n: int, d: int, P: FieldParams) -> Dict[RepType, List[str]]:
    """Every clause that fires, grouped by type.

    The finite and tame lists presuppose that ``qbar`` is a primitive ``l``-th
    root of unity; the finite list also presupposes ``l <= d``.
    """
    table = CLAUSES[kind]
    gate = {
        RepType.SEMISIMPLE: True,
        RepType.FINITE: P.root() and _l(P) <= d,
        RepType.TAME: P.root(),
    }
    hits = {t: [name for name, pred in table[t] if gate[t] and pred(n, d, P)] for t in table}
    return {t: names for t, names in hits.items() if names}


def classify_detail(kind: str, n: int, d: int, params: FieldParams) -> Classification:
    if kind not in CLAUSES:
        raise ValueError(f"kind must be 'A' or 'B', got {kind!r}")
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got ({n}, {d})")
    if params.l == 1:
        raise UnsupportedRegime("q^2 = 1 is outside the classification lists")
    hits = _matches(kind, n, d, params)
    if len(hits) > 1:
        raise InconsistentClauses(f"{kind}({n},{d}) {params}: {hits}")
    notes = []
    if kind == "B" and n == 4 and params.l == 2 and d == 4:
        notes.append("n=4, l=2 finite clauses require odd d; d=4 is excluded by parity")
    if hits:
        (t, names), = hits.items()
        return Classification(kind, n, d, params, t, names, notes)
    return Classification(kind, n, d, params, RepType.WILD, [], notes)


def classify(kind: str, n: int, d: int, params: FieldParams) -> RepType:
    """The unique representation type, ``wild`` when no listed clause applies."""
    return classify_detail(kind, n, d, params).rep_type


# -- parameter conditions ------------------------------------------------------


def order_of_q_squared(field: ScalarField, max_order: int = 12) -> Optional[int]:
    """Multiplicative order of ``q^2``, or ``None`` if it is not a root of unity."""
    if field.mode == "symbolic":
        return None
    x = field.q * field.q
    y = x
    for k in range(1, max_order + 1):
        if y == field.one:
            return k
        y = y * x
    return None


def condition_report(n: int, d: int, field: ScalarField) -> Dict[str, bool]:
    """``f^B_d`` invertible, ``floor(n/2) >= d``, and order of ``q^2`` at least 4 (or infinite)."""
    ell = order_of_q_squared(field)
    return {
        "fB_invertible": bool(field.laurent(f_B(d))),
        "r_ge_d": n // 2 >= d,
        "ell_ge_4_or_generic": ell is None or ell >= 4,
    }


# -- grid sweeps ---------------------------------------------------------------

GRID = {
    "n": range(1, 7),
    "d": range(1, 11),
    "l": (GENERIC, 2, 3, 4, 5, 6),
    "p": (0, 2, 3, 5, 7),
}


def sweep(kind: str = "B") -> List[dict]:
    """Classification of every grid point, in a stable order."""
    rows = []
    for n in GRID["n"]:
        for d in GRID["d"]:
            for l in GRID["l"]:
                for p in GRID["p"]:
                    rows.append(classify_detail(kind, n, d, FieldParams(p, l)).to_dict())
    return rows
