"""Exact linear algebra over any of the scalar fields.

Vectors are sparse ``dict`` objects mapping integer coordinates to nonzero
scalars.  :class:`Echelon` keeps a fully reduced row echelon form under
incremental insertion and is the single elimination routine used by the rest
of the package (rank, span membership, coordinates, null spaces).
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence

SparseVec = Dict[int, object]


class NotInSpan(ArithmeticError):
    """A vector expected to lie in a span does not."""


def sparse(vec: Sequence) -> SparseVec:
    return {i: v for i, v in enumerate(vec) if v}


def dense(vec: SparseVec, n: int, zero=0) -> list:
    out = [zero] * n
    for i, v in vec.items():
        out[i] = v
    return out


def axpy(y: SparseVec, a, x: SparseVec) -> None:
    """In place ``y += a * x``."""
    for i, v in x.items():
        s = y.get(i)
        s = a * v if s is None else s + a * v
        if s:
            y[i] = s
        else:
            y.pop(i, None)


def scaled(x: SparseVec, a) -> SparseVec:
    if not a:
        return {}
    return {i: a * v for i, v in x.items()}


class Echelon:
    """Reduced row echelon form with optional bookkeeping of combinations.

    The pivot of a row is its smallest coordinate.  Every stored row has a 1
    in its pivot and 0 in all other pivot columns.  When ``track`` is set each
    row also records which linear combination of the inserted vectors it is.
    """

    def __init__(self, track: bool = False):
        self.rows: Dict[int, SparseVec] = {}
        self.combo: Dict[int, SparseVec] = {}
        self.track = track
        self.count = 0

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: SparseVec, combo: Optional[SparseVec] = None) -> SparseVec:
        v = dict(v)
        for p in [p for p in v if p in self.rows]:
            c = v.get(p)
            if c:
                axpy(v, -c, self.rows[p])
                if combo is not None:
                    axpy(combo, -c, self.combo[p])
        return v

    def add(self, v: SparseVec) -> bool:
        """Insert ``v``; return whether it was independent of earlier rows."""
        combo = {self.count: 1} if self.track else None
        self.count += 1
        r = self.reduce(v, combo)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = scaled(r, inv)
        if combo is not None:
            combo = scaled(combo, inv)
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                axpy(row, -c, r)
                if self.track:
                    axpy(self.combo[q], -c, combo)
        self.rows[p] = r
        if self.track:
            self.combo[p] = combo
        return True

    def extend(self, vs: Iterable[SparseVec]) -> "Echelon":
        for v in vs:
            self.add(v)
        return self

    def contains(self, v: SparseVec) -> bool:
        return not self.reduce(v)

    def pivots(self) -> List[int]:
        return sorted(self.rows)


def rank(vectors: Iterable[SparseVec]) -> int:
    return Echelon().extend(vectors).rank


def span_contains(basis: Iterable[SparseVec], vectors: Iterable[SparseVec]) -> bool:
    e = Echelon().extend(basis)
    return all(e.contains(v) for v in vectors)


def same_span(u: Sequence[SparseVec], v: Sequence[SparseVec]) -> bool:
    eu = Echelon().extend(u)
    ev = Echelon().extend(v)
    return eu.rank == ev.rank and all(eu.contains(x) for x in v)


def nullspace(rows: Iterable[SparseVec], ncols: int, one=1) -> List[SparseVec]:
    """Basis of ``{x : r . x = 0 for all rows r}`` in ``ncols`` unknowns."""
    e = Echelon().extend(rows)
    out = []
    for f in range(ncols):
        if f in e.rows:
            continue
        x = {f: one}
        for p, row in e.rows.items():
            c = row.get(f)
            if c:
                x[p] = -c
        out.append(x)
    return out


class CoordinateSystem:
    """Coordinates with respect to a list of linearly independent vectors."""

    def __init__(self, basis: Sequence[SparseVec]):
        self.dim = len(basis)
        self._e = Echelon(track=True)
        for i, b in enumerate(basis):
            if not self._e.add(b):
                raise ArithmeticError(f"basis vector {i} is linearly dependent")

    def coords(self, v: SparseVec) -> SparseVec:
        out: SparseVec = {}
        r = dict(v)
        for p in [p for p in r if p in self._e.rows]:
            c = r.get(p)
            if c:
                axpy(r, -c, self._e.rows[p])
                axpy(out, c, self._e.combo[p])
        if r:
            raise NotInSpan("vector not in span")
        return out

    def try_coords(self, v: SparseVec) -> Optional[SparseVec]:
        try:
            return self.coords(v)
        except NotInSpan:
            return None


# ---------------------------------------------------------------------------
# Dense matrices (lists of rows)
# ---------------------------------------------------------------------------


def mat_mul(a: List[list], b: List[list], zero=0) -> List[list]:
    n, m = len(a), len(b[0]) if b else 0
    out = [[zero] * m for _ in range(n)]
    for i, row in enumerate(a):
        acc = out[i]
        for k, x in enumerate(row):
            if not x:
                continue
            for j, y in enumerate(b[k]):
                if y:
                    acc[j] = acc[j] + x * y
    return out


def mat_eq(a: List[list], b: List[list]) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)) and len(a) == len(b)


def identity(n: int, one=1, zero=0) -> List[list]:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(a: List[list]) -> List[list]:
    return [list(r) for r in zip(*a)] if a else []


def kron(a: List[list], b: List[list]) -> List[list]:
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def flatten(a: List[list]) -> SparseVec:
    out = {}
    m = len(a[0]) if a else 0
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if x:
                out[i * m + j] = x
    return out


def unflatten(v: SparseVec, n: int, m: int, zero=0) -> List[list]:
    out = [[zero] * m for _ in range(n)]
    for k, x in v.items():
        out[k // m][k % m] = x
    return out


def columns(a: List[list]) -> List[SparseVec]:
    if not a:
        return []
    return [{i: a[i][j] for i in range(len(a)) if a[i][j]} for j in range(len(a[0]))]


class Endo:
    """A matrix with labelled bases; column ``j`` is the image of ``domain_basis[j]``.

    ``codomain_basis`` defaults to the domain basis, in which case the map is
    an endomorphism and composes by matrix product.
    """

    __slots__ = ("matrix", "domain_basis", "codomain_basis")

    def __init__(self, matrix: List[list], domain_basis: Sequence, codomain_basis: Optional[Sequence] = None):
        self.matrix = matrix
        self.domain_basis = tuple(domain_basis)
        self.codomain_basis = tuple(codomain_basis) if codomain_basis is not None else self.domain_basis
        if len(matrix) != len(self.codomain_basis) or any(len(r) != len(self.domain_basis) for r in matrix):
            raise ValueError("matrix shape does not match the bases")

    @property
    def shape(self):
        return len(self.codomain_basis), len(self.domain_basis)

    def __matmul__(self, other: "Endo") -> "Endo":
        if self.domain_basis != other.codomain_basis:
            raise ValueError("incompatible bases")
        zero = _zero_like(self.matrix, other.matrix)
        return Endo(mat_mul(self.matrix, other.matrix, zero), other.domain_basis, self.codomain_basis)

    def __eq__(self, other):
        return (
            isinstance(other, Endo)
            and self.domain_basis == other.domain_basis
            and self.codomain_basis == other.codomain_basis
            and mat_eq(self.matrix, other.matrix)
        )

    __hash__ = None

    def column(self, j: int) -> SparseVec:
        return {i: row[j] for i, row in enumerate(self.matrix) if row[j]}

    def flat(self) -> SparseVec:
        return flatten(self.matrix)

    def rank(self) -> int:
        return rank(columns(self.matrix))


def _zero_like(*mats):
    for m in mats:
        for row in m:
            for x in row:
                return x - x
    return 0
