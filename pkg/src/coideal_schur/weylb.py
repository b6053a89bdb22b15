"""Signed permutations: the Weyl group of type B.

Elements of ``W(d)`` are stored in window notation ``(w(1), ..., w(d))`` with
``w(-k) = -w(k)``.  Composition is that of functions, ``(uw)(k) = u(w(k))``.
The generator ``s_0`` negates the first entry of a window when multiplied on
the right, and ``s_t`` (``t >= 1``) swaps entries ``t`` and ``t + 1``.

Right action on index words: ``(mu . w)_k = sign(w(k)) * mu_|w(k)|``; with
this rule ``mu . s_0`` negates ``mu_1`` and ``mu . s_t`` swaps positions
``t`` and ``t + 1``.

>>> s0, s1 = generator(0, 2), generator(1, 2)
>>> compose(s0, s1)
SignedPerm(2, -1)
>>> length(longest(2))
4
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

__all__ = [
    "RankMismatch",
    "RankTooLarge",
    "InvalidWeight",
    "SignedPerm",
    "CompositionB",
    "identity",
    "generator",
    "compose",
    "inverse",
    "length",
    "reduced_word",
    "from_word",
    "right_descent",
    "left_descent",
    "enumerate_group",
    "longest",
    "word_action",
    "weights",
    "parabolic_of",
    "parabolic_elements",
    "coset_reps",
    "min_coset_reps",
    "double_coset_reps",
    "double_coset",
]

MAX_RANK = 6


class RankMismatch(ValueError):
    pass


class RankTooLarge(ValueError):
    pass


class InvalidWeight(ValueError):
    pass


class SignedPerm(tuple):
    """Window of a signed permutation."""

    __slots__ = ()

    def __new__(cls, window: Sequence[int]):
        w = tuple(int(x) for x in window)
        if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a signed permutation window: {w}")
        return tuple.__new__(cls, w)

    @classmethod
    def _raw(cls, w: Tuple[int, ...]) -> "SignedPerm":
        return tuple.__new__(cls, w)

    @property
    def rank(self) -> int:
        return len(self)

    def __call__(self, k: int) -> int:
        v = self[abs(k) - 1]
        return v if k > 0 else -v

    def __mul__(self, other):
        return compose(self, other)

    def __repr__(self):
        return f"SignedPerm{tuple(self)!r}" if len(self) != 1 else f"SignedPerm({self[0]},)"

    def __str__(self):
        return "[" + ",".join(str(x) for x in self) + "]"

    @classmethod
    def parse(cls, text: str) -> "SignedPerm":
        body = text.strip().strip("[]()")
        return cls([int(x) for x in body.split(",") if x.strip()])


def identity(d: int) -> SignedPerm:
    return SignedPerm._raw(tuple(range(1, d + 1)))


def generator(t: int, d: int) -> SignedPerm:
    if not 0 <= t < d:
        raise ValueError(f"no generator s_{t} in rank {d}")
    w = list(range(1, d + 1))
    if t == 0:
        w[0] = -1
    else:
        w[t - 1], w[t] = w[t], w[t - 1]
    return SignedPerm._raw(tuple(w))


def compose(u: SignedPerm, w: SignedPerm) -> SignedPerm:
    if len(u) != len(w):
        raise RankMismatch(f"ranks {len(u)} and {len(w)}")
    return SignedPerm._raw(tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in w))


def inverse(w: SignedPerm) -> SignedPerm:
    out = [0] * len(w)
    for k, x in enumerate(w, start=1):
        out[abs(x) - 1] = k if x > 0 else -k
    return SignedPerm._raw(tuple(out))


@lru_cache(maxsize=None)
def length(w: SignedPerm) -> int:
    """``inv(w) + #{i <= j : w(i) + w(j) < 0}``."""
    d = len(w)
    n = 0
    for i in range(d):
        for j in range(i, d):
            if j > i and w[i] > w[j]:
                n += 1
            if w[i] + w[j] < 0:
                n += 1
    return n


def right_descent(w: SignedPerm, t: int) -> bool:
    """Whether ``length(w s_t) < length(w)``."""
    if t == 0:
        return w[0] < 0
    return w[t - 1] > w[t]


def left_descent(w: SignedPerm, t: int) -> bool:
    """Whether ``length(s_t w) < length(w)``."""
    return right_descent(inverse(w), t)


def mul_gen_right(w: SignedPerm, t: int) -> SignedPerm:
    x = list(w)
    if t == 0:
        x[0] = -x[0]
    else:
        x[t - 1], x[t] = x[t], x[t - 1]
    return SignedPerm._raw(tuple(x))


def mul_gen_left(t: int, w: SignedPerm) -> SignedPerm:
    if t == 0:
        return SignedPerm._raw(tuple(-x if abs(x) == 1 else x for x in w))
    swap = {t: t + 1, t + 1: t, -t: -t - 1, -t - 1: -t}
    return SignedPerm._raw(tuple(swap.get(x, x) for x in w))


@lru_cache(maxsize=None)
def reduced_word(w: SignedPerm) -> Tuple[int, ...]:
    word: List[int] = []
    while True:
        for t in range(len(w)):
            if right_descent(w, t):
                word.append(t)
                w = mul_gen_right(w, t)
                break
        else:
            return tuple(reversed(word))


def from_word(word: Sequence[int], d: int) -> SignedPerm:
    w = identity(d)
    for t in word:
        w = mul_gen_right(w, t)
    return w


@lru_cache(maxsize=None)
def enumerate_group(d: int) -> Tuple[SignedPerm, ...]:
    """All ``2^d d!`` elements, ordered by length then window."""
    if d > MAX_RANK:
        raise RankTooLarge(f"rank {d} exceeds guard {MAX_RANK}")
    out = []
    for perm in permutations(range(1, d + 1)):
        for signs in product((1, -1), repeat=d):
            out.append(SignedPerm._raw(tuple(s * x for s, x in zip(signs, perm))))
    out.sort(key=lambda w: (length(w), tuple(w)))
    return tuple(out)


def longest(d: int) -> SignedPerm:
    return SignedPerm._raw(tuple(-k for k in range(1, d + 1)))


def word_action(mu: Sequence[int], w: SignedPerm) -> Tuple[int, ...]:
    return tuple(mu[x - 1] if x > 0 else -mu[-x - 1] for x in w)


# ---------------------------------------------------------------------------
# Weights and parabolic subgroups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CompositionB:
    """Symmetric weight ``lambda_{-i} = lambda_i`` of ``Lambda^B(n, d)``.

    ``a0`` is the (odd) centre part for odd ``n`` and ``None`` for even ``n``;
    ``pos`` holds ``lambda_1 .. lambda_r``.
    """

    a0: Optional[int]
    pos: Tuple[int, ...]

    def __post_init__(self):
        if self.a0 is not None and self.a0 % 2 != 1:
            raise InvalidWeight(f"centre part must be odd, got {self.a0}")
        if any(x < 0 for x in self.pos):
            raise InvalidWeight(f"negative part in {self.pos}")

    @property
    def n(self) -> int:
        return 2 * len(self.pos) + (1 if self.a0 is not None else 0)

    @property
    def d(self) -> int:
        return (self.a0 // 2 if self.a0 is not None else 0) + sum(self.pos)

    def parts(self) -> Tuple[int, ...]:
        """``(lambda_{-r}, ..., lambda_r)`` over the index set."""
        mid = (self.a0,) if self.a0 is not None else ()
        return tuple(reversed(self.pos)) + mid + self.pos

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.parts()) + ")"


def _compositions(total: int, k: int):
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def weights(n: int, d: int) -> Tuple[CompositionB, ...]:
    """``Lambda^B(n, d)`` in a fixed order."""
    r = n // 2
    if n % 2 == 0:
        return tuple(CompositionB(None, c) for c in _compositions(d, r))
    out = []
    for k in range(d, -1, -1):
        for c in _compositions(d - k, r):
            out.append(CompositionB(2 * k + 1, c))
    return tuple(out)


def parabolic_of(lam: CompositionB) -> FrozenSet[int]:
    """Generators of ``W_lambda``: all of ``s_0..s_{d-1}`` except the cuts.

    The cuts sit at the partial sums ``k + lambda_1 + ... + lambda_j`` for
    ``0 <= j < r``, where ``k`` is half the centre part (``k = 0`` for even
    ``n``, in which case ``s_0`` is always cut).
    """
    d = lam.d
    k = lam.a0 // 2 if lam.a0 is not None else 0
    cuts = set()
    s = k
    for j in range(len(lam.pos)):
        cuts.add(s)
        s += lam.pos[j]
    return frozenset(t for t in range(d) if t not in cuts)


@lru_cache(maxsize=None)
def parabolic_elements(d: int, gens: FrozenSet[int]) -> Tuple[SignedPerm, ...]:
    seen = {identity(d)}
    frontier = [identity(d)]
    while frontier:
        nxt = []
        for w in frontier:
            for t in gens:
                u = mul_gen_right(w, t)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: (length(w), tuple(w))))


@lru_cache(maxsize=None)
def min_coset_reps(d: int, gens: FrozenSet[int]) -> Tuple[SignedPerm, ...]:
    """Shortest members of the right cosets ``W_J w``."""
    return tuple(w for w in enumerate_group(d) if not any(left_descent(w, t) for t in gens))


@lru_cache(maxsize=None)
def _double_coset_table(d: int, left: FrozenSet[int], right: FrozenSet[int]):
    """Partition of the group into ``W_J g W_K`` classes by orbit closure."""
    rep_of: Dict[SignedPerm, SignedPerm] = {}
    classes: Dict[SignedPerm, Tuple[SignedPerm, ...]] = {}
    for w in enumerate_group(d):
        if w in rep_of:
            continue
        cls = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for x in frontier:
                for t in left:
                    y = mul_gen_left(t, x)
                    if y not in cls:
                        cls.add(y)
                        nxt.append(y)
                for t in right:
                    y = mul_gen_right(x, t)
                    if y not in cls:
                        cls.add(y)
                        nxt.append(y)
            frontier = nxt
        members = sorted(cls, key=lambda x: (length(x), tuple(x)))
        g = members[0]
        if len(members) > 1 and length(members[1]) == length(g):
            raise AssertionError("double coset without a unique shortest element")
        for x in members:
            rep_of[x] = g
        classes[g] = tuple(members)
    return rep_of, classes


def double_coset_reps(d: int, left: FrozenSet[int], right: FrozenSet[int]) -> Tuple[SignedPerm, ...]:
    _, classes = _double_coset_table(d, frozenset(left), frozenset(right))
    return tuple(sorted(classes, key=lambda x: (length(x), tuple(x))))


def double_coset(d: int, left: FrozenSet[int], g: SignedPerm, right: FrozenSet[int]) -> Tuple[SignedPerm, ...]:
    rep_of, classes = _double_coset_table(d, frozenset(left), frozenset(right))
    if rep_of[g] != g:
        raise ValueError(f"{g} is not the shortest element of its double coset")
    return classes[g]


def coset_reps(lam: CompositionB, mu: Optional[CompositionB] = None) -> Tuple[SignedPerm, ...]:
    """Minimal right coset reps of ``W_lambda``, or double coset reps with ``W_mu``."""
    if mu is not None and (mu.d != lam.d or mu.n != lam.n):
        raise InvalidWeight("weights of different (n, d)")
    if mu is None:
        return min_coset_reps(lam.d, parabolic_of(lam))
    return double_coset_reps(lam.d, parabolic_of(lam), parabolic_of(mu))
