"""The two-parameter Hecke algebra of type B.

``H(d)`` has basis ``T_w`` (``w`` a signed permutation) and generators
``T_0, ..., T_{d-1}`` subject to the braid relations and

    T_0^2 = (Q^-1 - Q) T_0 + 1,        T_t^2 = (q^-1 - q) T_t + 1  (t >= 1).

Consequently ``T_s`` acts by ``c^-1`` on the trivial module (``c = Q`` for
``s_0`` and ``c = q`` otherwise).  The parabolic sums used throughout are
weighted accordingly: ``x_J = sum_{w in W_J} c(w) T_w`` where ``c(w)`` is the
product of ``c^-1`` over a reduced word, so that ``x_J T_s = c_s^-1 x_J`` for
``s`` in ``J``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import weylb
from .linalg import Echelon, SparseVec
from .scalars import ScalarField, f_B
from .weylb import CompositionB, SignedPerm

__all__ = [
    "BadGenerator",
    "OutOfRange",
    "BadSplit",
    "NotInvertible",
    "NotMinimalRep",
    "HeckeElt",
    "HeckeAlgebra",
    "shuffle",
]


class BadGenerator(ValueError):
    pass


class OutOfRange(ValueError):
    pass


class BadSplit(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


class NotMinimalRep(ValueError):
    pass


class HeckeElt:
    """Sparse linear combination of ``T_w``."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "HeckeAlgebra", terms: Optional[Dict[SignedPerm, object]] = None):
        self.alg = alg
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    def __add__(self, other):
        if not isinstance(other, HeckeElt):
            other = self.alg.scalar(other)
        t = dict(self.terms)
        _acc(t, other.terms, 1)
        return HeckeElt(self.alg, t)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElt(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return self.alg.mul(self, other)
        return HeckeElt(self.alg, {w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other):
        return HeckeElt(self.alg, {w: other * c for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            other = self.alg.scalar(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, w: SignedPerm):
        return self.terms.get(w, self.alg.field.zero)

    def support(self) -> List[SignedPerm]:
        return sorted(self.terms, key=lambda w: (weylb.length(w), tuple(w)))

    def to_pairs(self) -> List[Tuple[str, str]]:
        return [(str(w), str(self.terms[w])) for w in self.support()]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*T{list(w)}" for w, c in self.to_pairs())


def _acc(target: dict, src: dict, a) -> None:
    for k, v in src.items():
        s = target.get(k)
        s = a * v if s is None else s + a * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


def shuffle(a: int, b: int) -> SignedPerm:
    """Block shuffle ``k -> b + k`` (``k <= a``), ``a + j -> j`` (``j <= b``)."""
    return SignedPerm._raw(tuple(b + k for k in range(1, a + 1)) + tuple(range(1, b + 1)))


class HeckeAlgebra:
    """``H(d)`` over a :class:`ScalarField`."""

    def __init__(self, d: int, field: ScalarField):
        self.d = d
        self.field = field
        self.q = field.q
        self.Q = field.Q
        self.elements: Tuple[SignedPerm, ...] = weylb.enumerate_group(d)
        self.index = {w: i for i, w in enumerate(self.elements)}
        self._quad = {t: (1 / self._c(t) - self._c(t)) for t in range(d)}
        self._cinv = {t: 1 / self._c(t) for t in range(d)}
        self._weight: Dict[SignedPerm, object] = {}

    def _c(self, t: int):
        return self.Q if t == 0 else self.q

    # -- elements ---------------------------------------------------------

    @property
    def one(self) -> HeckeElt:
        return HeckeElt(self, {weylb.identity(self.d): self.field.one})

    @property
    def zero(self) -> HeckeElt:
        return HeckeElt(self, {})

    def scalar(self, c) -> HeckeElt:
        if isinstance(c, (int, Fraction)):
            c = self.field.coerce(c)
        return HeckeElt(self, {weylb.identity(self.d): c})

    def T(self, w) -> HeckeElt:
        if not isinstance(w, SignedPerm):
            w = SignedPerm(w)
        if len(w) != self.d:
            raise weylb.RankMismatch(f"{w} has rank {len(w)}, algebra rank {self.d}")
        return HeckeElt(self, {w: self.field.one})

    def gen(self, t: int) -> HeckeElt:
        self._check_gen(t)
        return self.T(weylb.generator(t, self.d))

    def _check_gen(self, t: int) -> None:
        if not 0 <= t < self.d:
            raise BadGenerator(f"T_{t} is not a generator of H({self.d})")

    def to_vec(self, h: HeckeElt) -> SparseVec:
        return {self.index[w]: c for w, c in h.terms.items()}

    def from_vec(self, v: SparseVec) -> HeckeElt:
        return HeckeElt(self, {self.elements[i]: c for i, c in v.items()})

    # -- products ---------------------------------------------------------

    def mul_by_gen(self, h: HeckeElt, t: int, side: str = "right") -> HeckeElt:
        self._check_gen(t)
        out: Dict[SignedPerm, object] = {}
        quad = self._quad[t]
        for w, c in h.terms.items():
            if side == "right":
                u = weylb.mul_gen_right(w, t)
                down = weylb.right_descent(w, t)
            elif side == "left":
                u = weylb.mul_gen_left(t, w)
                down = weylb.left_descent(w, t)
            else:
                raise ValueError(f"side must be left or right, got {side!r}")
            _acc(out, {u: c}, 1)
            if down:
                _acc(out, {w: c * quad}, 1)
        return HeckeElt(self, out)

    def right_multiples(self, h: HeckeElt, targets: Optional[Iterable[SignedPerm]] = None) -> Dict[SignedPerm, HeckeElt]:
        """``{w: h T_w}`` for ``w`` in ``targets`` (default: whole group)."""
        memo = {weylb.identity(self.d): h}

        def get(w):
            if w in memo:
                return memo[w]
            word = weylb.reduced_word(w)
            prev = weylb.from_word(word[:-1], self.d)
            val = self.mul_by_gen(get(prev), word[-1], "right")
            memo[w] = val
            return val

        ws = self.elements if targets is None else targets
        return {w: get(w) for w in ws}

    def left_multiples(self, h: HeckeElt, targets: Optional[Iterable[SignedPerm]] = None) -> Dict[SignedPerm, HeckeElt]:
        """``{w: T_w h}`` for ``w`` in ``targets`` (default: whole group)."""
        memo = {weylb.identity(self.d): h}

        def get(w):
            if w in memo:
                return memo[w]
            word = weylb.reduced_word(w)
            rest = weylb.from_word(word[1:], self.d)
            val = self.mul_by_gen(get(rest), word[0], "left")
            memo[w] = val
            return val

        ws = self.elements if targets is None else targets
        return {w: get(w) for w in ws}

    def mul(self, h1: HeckeElt, h2: HeckeElt) -> HeckeElt:
        if h1.alg.d != h2.alg.d:
            raise weylb.RankMismatch("Hecke elements of different rank")
        if not h1.terms or not h2.terms:
            return self.zero
        parts = self.right_multiples(h1, h2.terms)
        out: Dict[SignedPerm, object] = {}
        for w, c in h2.terms.items():
            _acc(out, parts[w].terms, c)
        return HeckeElt(self, out)

    def prod(self, factors: Sequence[HeckeElt]) -> HeckeElt:
        out = self.one
        for f in factors:
            out = out * f
        return out

    def star(self, h: HeckeElt) -> HeckeElt:
        """Anti-involution ``T_w -> T_{w^-1}``."""
        return HeckeElt(self, {weylb.inverse(w): c for w, c in h.terms.items()})

    # -- parabolic sums ---------------------------------------------------

    def weight(self, w: SignedPerm):
        """Product of ``c_t^-1`` along a reduced word of ``w``."""
        val = self._weight.get(w)
        if val is None:
            val = self.field.one
            for t in weylb.reduced_word(w):
                val = val * self._cinv[t]
            self._weight[w] = val
        return val

    def parabolic_sum(self, gens: FrozenSet[int]) -> HeckeElt:
        return HeckeElt(self, {w: self.weight(w) for w in weylb.parabolic_elements(self.d, frozenset(gens))})

    def x_lambda(self, lam: CompositionB) -> HeckeElt:
        return self.parabolic_sum(weylb.parabolic_of(lam))

    def coset_sum(self, left: FrozenSet[int], g: SignedPerm, right: FrozenSet[int]) -> HeckeElt:
        """Weighted double coset sum, normalised to coefficient 1 on ``T_g``."""
        try:
            members = weylb.double_coset(self.d, frozenset(left), g, frozenset(right))
        except ValueError as exc:
            raise NotMinimalRep(str(exc)) from None
        wg = 1 / self.weight(g)
        return HeckeElt(self, {w: self.weight(w) * wg for w in members})

    def double_coset_sum(self, lam: CompositionB, g: SignedPerm, mu: CompositionB) -> HeckeElt:
        return self.coset_sum(weylb.parabolic_of(lam), g, weylb.parabolic_of(mu))

    # -- Jucys-Murphy and Dipper-James elements ---------------------------

    def jm_element(self, m: int) -> HeckeElt:
        """``L_m = T_{m-1} ... T_1 T_0 T_1 ... T_{m-1}``."""
        if not 1 <= m <= self.d:
            raise OutOfRange(f"L_{m} undefined for d = {self.d}")
        word = list(range(m - 1, 0, -1)) + [0] + list(range(1, m))
        return self.prod([self.gen(t) for t in word])

    def u_pm(self, i: int, sign: str) -> HeckeElt:
        """``u^+_i = prod (L_l + Q)``, ``u^-_i = prod (L_l - Q^-1)``, ``l = 1..i``."""
        if not 0 <= i <= self.d:
            raise OutOfRange(f"u_{i} undefined for d = {self.d}")
        if sign not in ("+", "-"):
            raise ValueError("sign must be '+' or '-'")
        shift = self.Q if sign == "+" else -1 / self.Q
        return self.prod([self.jm_element(m) + shift for m in range(1, i + 1)])

    def w_ab(self, a: int, b: int) -> SignedPerm:
        if a + b != self.d or a < 0 or b < 0:
            raise BadSplit(f"{a} + {b} != {self.d}")
        return shuffle(a, b)

    def v_ab(self, a: int, b: int) -> HeckeElt:
        """``u^-_b T_{w_{a,b}} u^+_a``."""
        w = self.w_ab(a, b)
        return self.u_pm(b, "-") * self.T(w) * self.u_pm(a, "+")

    def young_gens(self, a: int) -> FrozenSet[int]:
        """Generators of the type A subgroup ``Sigma_a x Sigma_{d-a}``."""
        return frozenset(t for t in range(1, self.d) if t != a)

    def e_ab(self, a: int, b: int) -> HeckeElt:
        """Idempotent generating the right ideal ``v_{a,b} H``.

        Sought as ``e = v_{a,b} T_{w_{b,a}} z`` with ``z`` in the type A Young
        subalgebra on the first ``b`` and last ``a`` strands, subject to
        ``e y = y`` for all ``y`` in ``v_{a,b} H``.  This system has exactly one
        solution when ``f_B(d)`` is invertible; dropping the ``z`` ansatz leaves
        free parameters (``v_{1,1}^2 = 0`` at ``d = 2``).
        """
        v = self.v_ab(a, b)
        head = v * self.T(shuffle(b, a))
        young = weylb.parabolic_elements(self.d, self.young_gens(b))
        Y = [self.from_vec(y) for y in _basis(self.to_vec(head * self.T(w)) for w in young)]
        R = [self.from_vec(r) for r in _basis(self.to_vec(x) for x in self.right_multiples(v).values())]
        m = len(Y)
        rows: List[SparseVec] = []
        for r in R:
            rows.extend(_equations([self.to_vec(y * r) for y in Y], self.to_vec(r), m, 0))
        ech = Echelon().extend(rows)
        if not R or m in ech.rows or any(k not in ech.rows for k in range(m)):
            raise NotInvertible(f"no unique idempotent for split ({a}, {b})")
        e = self.zero
        for k, y in enumerate(Y):
            e = e + y * (-ech.rows[k].get(m, self.field.zero))
        return e

    def fB_value(self):
        return self.field.laurent(f_B(self.d))


def _basis(vectors: Iterable[SparseVec]) -> List[SparseVec]:
    out = []
    ech = Echelon()
    for v in vectors:
        if ech.add(v):
            out.append(v)
    return out


def _equations(prods: List[SparseVec], rhs: SparseVec, m: int, n: int) -> List[SparseVec]:
    """Rows ``sum_k c_k prods[k][i] - rhs[i] = 0``; column ``m`` holds the constant."""
    coords = set(rhs)
    for p in prods:
        coords.update(p)
    rows = []
    for i in sorted(coords):
        row = {k: p[i] for k, p in enumerate(prods) if i in p}
        if i in rhs:
            row[m] = -rhs[i]
        if row:
            rows.append(row)
    return rows
