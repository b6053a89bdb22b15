"""The tensor space ``V^{(x)d}`` as a right module over the type B Hecke algebra.

``V`` has basis ``v_i`` for ``i`` in ``I(n) = [-r, r]`` (``0`` omitted when
``n = 2r``).  A basis word ``mu`` in ``I(n)^d`` stands for
``v_{mu_1} (x) ... (x) v_{mu_d}``; words are ordered lexicographically.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from . import weylb
from .hecke import BadGenerator, BadSplit, HeckeAlgebra, HeckeElt
from .linalg import Endo, SparseVec, axpy
from .scalars import ScalarField
from .weylb import SignedPerm

__all__ = [
    "InvalidIndex",
    "SingularMap",
    "TensorElt",
    "TensorSpace",
    "index_set",
]

Word = Tuple[int, ...]


class InvalidIndex(ValueError):
    pass


class SingularMap(ArithmeticError):
    """A map expected to be injective has a kernel."""


@lru_cache(maxsize=None)
def index_set(n: int) -> Tuple[int, ...]:
    if n < 1:
        raise InvalidIndex(f"n must be positive, got {n}")
    r = n // 2
    return tuple(i for i in range(-r, r + 1) if i or n % 2)


class TensorElt:
    """Finite linear combination of basis words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Word, object]] = None):
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v}

    def __add__(self, other: "TensorElt") -> "TensorElt":
        out = dict(self.terms)
        axpy(out, 1, other.terms)
        return TensorElt(out)

    def __sub__(self, other: "TensorElt") -> "TensorElt":
        out = dict(self.terms)
        axpy(out, -1, other.terms)
        return TensorElt(out)

    def __neg__(self):
        return TensorElt({k: -v for k, v in self.terms.items()})

    def scale(self, c) -> "TensorElt":
        return TensorElt({k: c * v for k, v in self.terms.items()})

    def tensor(self, other: "TensorElt") -> "TensorElt":
        return TensorElt({a + b: x * y for a, x in self.terms.items() for b, y in other.terms.items()})

    def coeff(self, word: Sequence[int]):
        return self.terms.get(tuple(word), 0)

    def __eq__(self, other):
        return isinstance(other, TensorElt) and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def to_pairs(self) -> List[Tuple[List[int], str]]:
        return [(list(k), str(v)) for k, v in sorted(self.terms.items())]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({v})*v{list(k)}" for k, v in sorted(self.terms.items()))


class TensorSpace:
    """``V^{(x)d}`` for ``V`` of dimension ``n`` over a :class:`ScalarField`."""

    def __init__(self, n: int, d: int, field: ScalarField):
        self.n, self.d, self.field = n, d, field
        self.r = n // 2
        self.indices = index_set(n)
        self.words: Tuple[Word, ...] = tuple(product(self.indices, repeat=d))
        self.position = {w: k for k, w in enumerate(self.words)}
        self.hecke = HeckeAlgebra(d, field)
        self.q, self.Q = field.q, field.Q
        self._word_T: Dict[Tuple[Word, SignedPerm], Dict[Word, object]] = {}

    # -- elements ---------------------------------------------------------

    def basis(self, word: Sequence[int]) -> TensorElt:
        word = self._check(word)
        return TensorElt({word: self.field.one})

    def _check(self, word: Sequence[int]) -> Word:
        word = tuple(word)
        if len(word) != self.d or any(i not in self.indices for i in word):
            raise InvalidIndex(f"{word} is not in I({self.n})^{self.d}")
        return word

    def to_vec(self, x: TensorElt) -> SparseVec:
        return {self.position[w]: c for w, c in x.terms.items()}

    def from_vec(self, v: SparseVec) -> TensorElt:
        return TensorElt({self.words[k]: c for k, c in v.items()})

    # -- Hecke action -----------------------------------------------------

    def _word_gen(self, mu: Word, t: int) -> Dict[Word, object]:
        if t == 0:
            a, b = 0, mu[0]
            c = self.Q
            swapped = (-mu[0],) + mu[1:]
        else:
            a, b = mu[t - 1], mu[t]
            c = self.q
            swapped = mu[: t - 1] + (mu[t], mu[t - 1]) + mu[t + 1 :]
        if a < b:
            return {swapped: self.field.one}
        if a == b:
            return {swapped: 1 / c}
        out = {swapped: self.field.one}
        axpy(out, 1 / c - c, {mu: self.field.one})
        return out

    def act_gen(self, x: TensorElt, t: int) -> TensorElt:
        if not 0 <= t < self.d:
            raise BadGenerator(f"T_{t} is not a generator for d = {self.d}")
        out: Dict[Word, object] = {}
        for mu, c in x.terms.items():
            axpy(out, c, self._word_gen(mu, t))
        return TensorElt(out)

    def _word_times_T(self, mu: Word, w: SignedPerm) -> Dict[Word, object]:
        key = (mu, w)
        hit = self._word_T.get(key)
        if hit is not None:
            return hit
        word = weylb.reduced_word(w)
        if not word:
            val = {mu: self.field.one}
        else:
            prev = self._word_times_T(mu, weylb.from_word(word[:-1], self.d))
            val = {}
            for nu, c in prev.items():
                axpy(val, c, self._word_gen(nu, word[-1]))
        self._word_T[key] = val
        return val

    def act(self, x: TensorElt, h: HeckeElt) -> TensorElt:
        if h.alg.d != self.d:
            raise weylb.RankMismatch(f"Hecke rank {h.alg.d} on tensor degree {self.d}")
        out: Dict[Word, object] = {}
        for mu, c in x.terms.items():
            for w, a in h.terms.items():
                axpy(out, c * a, self._word_times_T(mu, w))
        return TensorElt(out)

    def action_matrix(self, h: HeckeElt) -> List[list]:
        """Column ``mu`` holds the coordinates of ``v_mu . h``."""
        N = len(self.words)
        zero = self.field.zero
        M = [[zero] * N for _ in range(N)]
        for j, mu in enumerate(self.words):
            for nu, c in self.act(TensorElt({mu: self.field.one}), h).terms.items():
                M[self.position[nu]][j] = c
        return M

    def generator_matrix(self, t: int) -> List[list]:
        return self.action_matrix(self.hecke.gen(t))

    # -- distinguished subspaces -----------------------------------------

    def part(self, kind: str) -> Tuple[int, ...]:
        """Indices spanning ``V_{>0}``, ``V_{>=0}``, ``V_{<0}`` or ``V_{<=0}``."""
        tests = {">0": lambda i: i > 0, ">=0": lambda i: i >= 0, "<0": lambda i: i < 0, "<=0": lambda i: i <= 0}
        return tuple(i for i in self.indices if tests[kind](i))

    def words_in(self, kinds: Sequence[str]) -> List[Word]:
        return [tuple(w) for w in product(*(self.part(k) for k in kinds))]

    # -- the bases w^+ and w^- -------------------------------------------

    def w_factor(self, i: int, j: int, sign: str) -> TensorElt:
        """The one-factor vectors ``w^{+-}_{i(j)}``, ``0 <= i <= r``."""
        q, Q = self.q, self.Q
        qj = q ** (-j)
        if sign == "+":
            if i == 0:
                return TensorElt({(0,): qj * qj / Q + Q})
            return TensorElt({(-i,): qj, (i,): Q})
        if sign == "-":
            if i == 0:
                return TensorElt()
            return TensorElt({(-i,): qj, (i,): -1 / Q})
        raise ValueError("sign must be '+' or '-'")

    def w_pm(self, I: Sequence[int], sign: str) -> TensorElt:
        I = tuple(I)
        lo = 0 if sign == "+" else 1
        if len(I) != self.d or any(not lo <= i <= self.r for i in I):
            raise InvalidIndex(f"{I} is not in [{lo},{self.r}]^{self.d}")
        if sign == "+" and 0 in I and self.n % 2 == 0:
            raise InvalidIndex("index 0 needs odd n")
        ordered = tuple(sorted(I))
        out = TensorElt({(): self.field.one})
        for k, i in enumerate(ordered):
            j = 0
            while j < k and ordered[k - j - 1] == i:
                j += 1
            out = out.tensor(self.w_factor(i, j, sign))
        g = sorting_perm(I)
        return self.act(out, self.hecke.T(g))

    # -- projections ------------------------------------------------------

    def project(self, x: TensorElt, kind: str, a: Optional[int] = None, b: Optional[int] = None) -> TensorElt:
        """Kill every basis word outside the target subspace.

        ``p_d``: onto ``V_{<=0}^{(x)d}``; ``p_ab``: onto
        ``V_{<=0}^{(x)a} (x) V_{<0}^{(x)b}``; ``p'_ab``: onto
        ``V^{(x)a} (x) V_{<0}^{(x)b}``.
        """
        if kind == "p_d":
            keep = lambda w: all(i <= 0 for i in w)
        else:
            if a is None or b is None or a < 0 or b < 0 or a + b != self.d:
                raise BadSplit(f"split ({a}, {b}) does not match d = {self.d}")
            if kind == "p_ab":
                keep = lambda w: all(i <= 0 for i in w[:a]) and all(i < 0 for i in w[a:])
            elif kind == "p'_ab":
                keep = lambda w: all(i < 0 for i in w[a:])
            else:
                raise ValueError(f"unknown projection {kind!r}")
        return TensorElt({w: c for w, c in x.terms.items() if keep(w)})

    # -- the block maps ---------------------------------------------------

    def block_domain(self, a: int, b: int) -> List[Tuple[Word, Word]]:
        return [(w[:a], w[a:]) for w in self.words_in([">=0"] * a + [">0"] * b)]

    def block_map(self, a: int, b: int) -> Endo:
        """``v_I (x) v_J -> (v_J (x) v_I) v_{a,b}`` on ``V_{>=0}^a (x) V_{>0}^b``.

        Columns are labelled by ``(I, J)``; rows by the words of ``V^{(x)d}``.
        """
        if a < 0 or b < 0 or a + b != self.d:
            raise BadSplit(f"{a} + {b} != {self.d}")
        v = self.hecke.v_ab(a, b)
        dom = self.block_domain(a, b)
        zero = self.field.zero
        M = [[zero] * len(dom) for _ in self.words]
        for j, (I, J) in enumerate(dom):
            for nu, c in self.act(TensorElt({J + I: self.field.one}), v).terms.items():
                M[self.position[nu]][j] = c
        out = Endo(M, dom, self.words)
        if out.rank() != len(dom):
            raise SingularMap(f"block map for ({a}, {b}) is not injective")
        return out


def sorting_perm(J: Sequence[int]) -> SignedPerm:
    """Shortest ``g`` with ``sorted(J) . g == J`` (stable on equal entries)."""
    order = sorted(range(len(J)), key=lambda k: (J[k], k))
    g = [0] * len(J)
    for rank_, k in enumerate(order, start=1):
        g[k] = rank_
    return SignedPerm._raw(tuple(g))
