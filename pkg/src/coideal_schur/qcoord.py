"""Quantum matrix coordinates and the coideal quotient coalgebra.

Monomials in the generators ``x_{ij}`` (``i, j`` in ``I(n)``) are kept in a
canonical form: factors sorted by (row, column).  Every word is brought to that
form by the four commutation rules of the quantum matrix bialgebra.  The
quotient by the right ideal generated by the degree one elements below is
computed by plain linear algebra in each degree:

    x_{i,j} - x_{-i,-j}                         i < 0 < j
    x_{i,j} - x_{-i,-j} - (Q^-1 - Q) x_{-i,j}   i, j < 0
    x_{0,j} - Q^-1 x_{0,-j}                     j < 0
    x_{i,0} - Q^-1 x_{-i,0}                     i < 0
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Dict, List, Sequence, Tuple

from .linalg import Echelon, Endo, SparseVec, axpy, mat_eq, mat_mul, rank
from .scalars import ScalarField
from .schur import CheckRecord, _record, dim_formula
from .tensor import TensorSpace, index_set

__all__ = [
    "QuantumMatrices",
    "QuotientBasis",
    "straighten",
    "comult",
    "jB_generators",
    "quotient_basis",
    "dual_product",
    "dual_basis_endos",
    "pairing_check",
    "coideal_check",
    "tcomm_check",
]

Var = Tuple[int, int]
Mono = Tuple[Var, ...]
QPoly = Dict[Mono, object]


class QuantumMatrices:
    """Degree-wise straightening in ``K[M_q(n)]`` over a field."""

    def __init__(self, n: int, field: ScalarField):
        self.n, self.field = n, field
        self.indices = index_set(n)
        self.variables: Tuple[Var, ...] = tuple(product(self.indices, repeat=2))
        q = field.q
        self._qi = 1 / q
        self._gap = 1 / q - q
        self._append_memo: Dict[Tuple[Mono, Var], QPoly] = {}

    def _swap(self, a: Var, b: Var) -> List[Tuple[object, Var, Var]]:
        """Rewrite ``x_a x_b`` with ``a > b`` as ordered products."""
        (k, i), (l, j) = a, b
        one = self.field.one
        if k == l:
            return [(self._qi, b, a)]
        if i == j:
            return [(self._qi, b, a)]
        if i < j:
            return [(one, b, a)]
        return [(one, b, a), (self._gap, (l, i), (k, j))]

    def _append(self, mono: Mono, var: Var) -> QPoly:
        if not mono or mono[-1] <= var:
            return {mono + (var,): self.field.one}
        key = (mono, var)
        hit = self._append_memo.get(key)
        if hit is not None:
            return hit
        out: QPoly = {}
        head, last = mono[:-1], mono[-1]
        for c, p1, p2 in self._swap(last, var):
            for m1, c1 in self._append(head, p1).items():
                axpy(out, c * c1, self._append(m1, p2))
        self._append_memo[key] = out
        return out

    def straighten(self, word: Sequence[Var]) -> QPoly:
        poly: QPoly = {(): self.field.one}
        for var in word:
            nxt: QPoly = {}
            for m, c in poly.items():
                axpy(nxt, c, self._append(m, tuple(var)))
            poly = nxt
        return poly

    def multiply(self, f: QPoly, g: QPoly) -> QPoly:
        out: QPoly = {}
        for m1, c1 in f.items():
            for m2, c2 in g.items():
                axpy(out, c1 * c2, self.straighten(m1 + m2))
        return out

    def monomials(self, d: int) -> List[Mono]:
        return list(combinations_with_replacement(self.variables, d))

    def comult(self, mono: Sequence[Var]) -> Dict[Tuple[Mono, Mono], object]:
        """``Delta`` of a product of generators, both legs straightened."""
        out: Dict[Tuple[Mono, Mono], object] = {}
        for ks in product(self.indices, repeat=len(mono)):
            left = tuple((i, k) for (i, _), k in zip(mono, ks))
            right = tuple((k, j) for (_, j), k in zip(mono, ks))
            for ml, cl in self.straighten(left).items():
                for mr, cr in self.straighten(right).items():
                    axpy(out, cl * cr, {(ml, mr): 1})
        return out

    def jB_generators(self) -> List[QPoly]:
        Q = self.field.Q
        one = self.field.one
        out: List[QPoly] = []
        I = self.indices
        for i in I:
            for j in I:
                if i < 0 < j:
                    out.append(_poly({((i, j),): one, ((-i, -j),): -one}))
        for i in I:
            for j in I:
                if i < 0 and j < 0:
                    out.append(_poly({((i, j),): one, ((-i, -j),): -one, ((-i, j),): -(1 / Q - Q)}))
        if 0 in I:
            for j in I:
                if j < 0:
                    out.append(_poly({((0, j),): one, ((0, -j),): -1 / Q}))
            for i in I:
                if i < 0:
                    out.append(_poly({((i, 0),): one, ((-i, 0),): -1 / Q}))
        return out


def _poly(terms: QPoly) -> QPoly:
    return {m: c for m, c in terms.items() if c}


def _in_I_minus(var: Var) -> bool:
    i, j = var
    return i < 0 or (i == 0 and j < 0)


@dataclass
class QuotientBasis:
    """Degree ``d`` part of the quotient coalgebra with a chosen monomial basis."""

    n: int
    d: int
    field: ScalarField
    algebra: QuantumMatrices
    monomials: List[Mono]
    chosen_basis: List[Mono]
    ideal: Echelon
    degenerate: bool

    def __post_init__(self):
        self.position = {m: k for k, m in enumerate(self.monomials)}
        self.coord_of = {self.position[m]: k for k, m in enumerate(self.chosen_basis)}
        self._delta: Dict[int, Dict[Tuple[int, int], object]] = {}

    @property
    def dim(self) -> int:
        return len(self.chosen_basis)

    def reduce(self, poly: QPoly) -> SparseVec:
        """Coordinates of the class of ``poly`` in the chosen basis."""
        v = {self.position[m]: c for m, c in poly.items()}
        r = self.ideal.reduce(v)
        return {self.coord_of[k]: c for k, c in r.items()}

    def delta(self, b: int) -> Dict[Tuple[int, int], object]:
        """Reduced coproduct of the ``b``-th basis monomial."""
        if b not in self._delta:
            out: Dict[Tuple[int, int], object] = {}
            for (ml, mr), c in self.algebra.comult(self.chosen_basis[b]).items():
                rl = self.reduce({ml: self.field.one})
                rr = self.reduce({mr: self.field.one})
                for x, cx in rl.items():
                    for y, cy in rr.items():
                        axpy(out, c * cx * cy, {(x, y): 1})
            self._delta[b] = out
        return self._delta[b]

    def label(self, b: int) -> str:
        return "[" + ",".join(f"({i},{j})" for i, j in self.chosen_basis[b]) + "]"


def straighten(word: Sequence[Var], n: int, field: ScalarField) -> QPoly:
    return QuantumMatrices(n, field).straighten(word)


def comult(mono: Sequence[Var], n: int, field: ScalarField):
    return QuantumMatrices(n, field).comult(mono)


def jB_generators(n: int, field: ScalarField) -> List[QPoly]:
    return QuantumMatrices(n, field).jB_generators()


def ideal_spanning_set(A: QuantumMatrices, d: int) -> List[QPoly]:
    """``g m`` straightened, for every generator ``g`` and monomial ``m`` of degree ``d - 1``."""
    out = []
    for g in A.jB_generators():
        for m in A.monomials(d - 1):
            out.append(A.multiply(g, {m: A.field.one}))
    return out


@lru_cache(maxsize=32)
def quotient_basis(n: int, d: int, field: ScalarField) -> QuotientBasis:
    A = QuantumMatrices(n, field)
    monos = A.monomials(d)
    # Monomials off the I_- region get the small column indices so that they
    # become pivots; the survivors are then supported on I_- when possible.
    monos.sort(key=lambda m: (all(_in_I_minus(v) for v in m), m))
    position = {m: k for k, m in enumerate(monos)}
    ech = Echelon()
    if d > 0:
        for p in ideal_spanning_set(A, d):
            ech.add({position[m]: c for m, c in p.items()})
    chosen = [m for m in monos if position[m] not in ech.rows]
    chosen.sort()
    degenerate = len(chosen) != dim_formula(n, d, "B")
    return QuotientBasis(n, d, field, A, monos, chosen, ech, degenerate)


def dual_product(f: SparseVec, g: SparseVec, basis: QuotientBasis) -> SparseVec:
    """``(f g)(x) = (f (x) g)(Delta x)`` on the chosen basis."""
    out: SparseVec = {}
    for b in range(basis.dim):
        s = basis.field.zero
        for (x, y), c in basis.delta(b).items():
            fx, gy = f.get(x), g.get(y)
            if fx and gy:
                s = s + c * fx * gy
        if s:
            out[b] = s
    return out


def dual_unit(basis: QuotientBasis) -> SparseVec:
    """The counit: ``x_{ij} -> delta_{ij}`` extended multiplicatively."""
    out: SparseVec = {}
    for b, m in enumerate(basis.chosen_basis):
        if all(i == j for i, j in m):
            out[b] = basis.field.one
    return out


def dual_basis_endos(n: int, d: int, field: ScalarField) -> List[Endo]:
    """Action of the dual basis functionals on ``V^{(x)d}``."""
    qb = quotient_basis(n, d, field)
    S = TensorSpace(n, d, field)
    zero = field.zero
    mats = [[[zero] * len(S.words) for _ in S.words] for _ in range(qb.dim)]
    for c_, mu in enumerate(S.words):
        for r_, nu in enumerate(S.words):
            red = qb.reduce(qb.algebra.straighten(tuple(zip(nu, mu))))
            for b, x in red.items():
                mats[b][r_][c_] = x
    return [Endo(M, S.words) for M in mats]


def coideal_check(n: int, d: int, field: ScalarField) -> CheckRecord:
    qb = quotient_basis(n, d, field)
    A = qb.algebra
    bad = None
    for p in ideal_spanning_set(A, d):
        total: Dict[Tuple[int, int], object] = {}
        for m, c in p.items():
            for (ml, mr), cc in A.comult(m).items():
                for x, cx in qb.reduce({ml: field.one}).items():
                    for y, cy in qb.reduce({mr: field.one}).items():
                        axpy(total, c * cc * cx * cy, {(x, y): 1})
        if total:
            bad = p
            break
    return _record("qcoord.coideal", {"n": n, "d": d, **field.describe()}, bad is None, {"quotient": qb.dim}, bad)


def pairing_check(n: int, d: int, field: ScalarField) -> List[CheckRecord]:
    """The dual algebra acting on ``V^{(x)d}`` is the centralizer, multiplicatively."""
    params = {"n": n, "d": d, **field.describe()}
    qb = quotient_basis(n, d, field)
    endos = dual_basis_endos(n, d, field)
    S = TensorSpace(n, d, field)
    zero = field.zero
    recs = [_record("qcoord.quotient_dim", params, qb.dim == dim_formula(n, d, "B"), {"quotient": qb.dim, "formula": dim_formula(n, d, "B")})]
    gens = [S.generator_matrix(t) for t in range(d)]
    inside = all(mat_eq(mat_mul(E.matrix, G, zero), mat_mul(G, E.matrix, zero)) for E in endos for G in gens)
    rk = rank(E.flat() for E in endos)
    recs.append(_record("qcoord.pairing_bijective", params, inside and rk == qb.dim == dim_formula(n, d, "B"), {"rank": rk}))
    N = len(S.words)
    ok, bad = True, None
    for a in range(qb.dim):
        for b in range(qb.dim):
            prod_ = dual_product({a: field.one}, {b: field.one}, qb)
            rhs = [[zero] * N for _ in range(N)]
            for k, c in prod_.items():
                M = endos[k].matrix
                for i in range(N):
                    for j in range(N):
                        if M[i][j]:
                            rhs[i][j] = rhs[i][j] + c * M[i][j]
            if not mat_eq(mat_mul(endos[a].matrix, endos[b].matrix, zero), rhs):
                ok, bad = False, (qb.label(a), qb.label(b))
    recs.append(_record("qcoord.pairing_multiplicative", params, ok, {}, bad))
    unit = dual_unit(qb)
    unit_ok = all(dual_product(unit, {b: field.one}, qb) == {b: field.one} == dual_product({b: field.one}, unit, qb) for b in range(qb.dim))
    recs.append(_record("qcoord.unit", params, unit_ok))
    return recs


def tcomm_check(n: int, d: int, field: ScalarField) -> CheckRecord:
    """The quotient comodule map commutes with ``T_0`` on every basis word."""
    qb = quotient_basis(n, d, field)
    S = TensorSpace(n, d, field)
    A = qb.algebra
    red = {}

    def coeff(nu, mu):
        key = (nu, mu)
        if key not in red:
            red[key] = qb.reduce(A.straighten(tuple(zip(nu, mu))))
        return red[key]

    bad = None
    for mu in S.words:
        lhs: Dict[Tuple[tuple, int], object] = {}
        for nu in S.words:
            for kappa, c in S.act_gen(S.basis(nu), 0).terms.items():
                for b, x in coeff(nu, mu).items():
                    axpy(lhs, c * x, {(kappa, b): 1})
        rhs: Dict[Tuple[tuple, int], object] = {}
        for rho, c in S.act_gen(S.basis(mu), 0).terms.items():
            for nu in S.words:
                for b, x in coeff(nu, rho).items():
                    axpy(rhs, c * x, {(nu, b): 1})
        if lhs != rhs:
            bad = mu
            break
    return _record("qcoord.T0_comodule", {"n": n, "d": d, **field.describe()}, bad is None, {}, bad)
