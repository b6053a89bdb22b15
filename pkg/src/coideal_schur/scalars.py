"""Exact coefficient arithmetic.

Three coefficient fields are supported and every downstream module is
parametric in the choice:

* ``rational``: :class:`fractions.Fraction`, with ``q`` and ``Q`` specialised
  to nonzero rationals;
* ``gaussian``: :class:`GaussRational`, the field Q(i), used to reach
  specialisations such as ``Q = i`` where ``Q^-2 + 1`` vanishes;
* ``symbolic``: :class:`FracBi`, fractions of bivariate Laurent polynomials
  in the indeterminates ``q`` and ``Q``.

Scalars of all three kinds support ``+ - * /``, unary minus, ``==`` and
truthiness (nonzero), and mix freely with ``int`` and ``Fraction``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Tuple, Union

__all__ = [
    "ZeroInverse",
    "GaussRational",
    "LaurentBi",
    "FracBi",
    "ScalarField",
    "poly_arith",
    "field_invert",
    "f_B",
    "specialize",
    "parse_rational",
    "parse_gaussian",
    "format_scalar",
]

Exponent = Tuple[int, int]


class ZeroInverse(ZeroDivisionError):
    """Raised when inverting an exact zero."""


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------


class GaussRational:
    """``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _lift(x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussRational(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussRational":
        n = self.norm()
        if n == 0:
            raise ZeroInverse("inverse of 0 in Q(i)")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussRational(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussRational({self})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


# ---------------------------------------------------------------------------
# Laurent polynomials in q, Q
# ---------------------------------------------------------------------------


class LaurentBi:
    """Finitely supported map ``(a, b) -> c`` meaning ``sum c * q^a * Q^b``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Dict[Exponent, object], None] = None):
        c: Dict[Exponent, Fraction] = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v:
                    c[(int(e[0]), int(e[1]))] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[Exponent, Fraction]) -> "LaurentBi":
        out = cls.__new__(cls)
        out._c = c
        out._hash = None
        return out

    @classmethod
    def const(cls, c) -> "LaurentBi":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c, a: int, b: int) -> "LaurentBi":
        return cls({(a, b): c})

    @classmethod
    def q(cls) -> "LaurentBi":
        return cls({(1, 0): 1})

    @classmethod
    def Q(cls) -> "LaurentBi":
        return cls({(0, 1): 1})

    @property
    def coeffs(self) -> Dict[Exponent, Fraction]:
        return dict(self._c)

    def terms(self) -> Iterable[Tuple[Exponent, Fraction]]:
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def is_unit(self) -> bool:
        return len(self._c) == 1

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    @staticmethod
    def _lift(x) -> "LaurentBi":
        if isinstance(x, LaurentBi):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentBi.const(x)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        c = dict(self._c)
        for e, v in o._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentBi._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentBi._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        c: Dict[Exponent, Fraction] = {}
        for (a1, b1), v1 in self._c.items():
            for (a2, b2), v2 in o._c.items():
                e = (a1 + a2, b1 + b2)
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentBi._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ZeroInverse("only monomials are invertible Laurent polynomials")
            ((a, b), v), = self._c.items()
            return LaurentBi({(a * k, b * k): v ** k})
        out = LaurentBi.const(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, a: int, b: int) -> "LaurentBi":
        return LaurentBi._raw({(x + a, y + b): v for (x, y), v in self._c.items()})

    def scale(self, c) -> "LaurentBi":
        return LaurentBi({e: v * c for e, v in self._c.items()})

    def min_exponents(self) -> Exponent:
        return (min(a for a, _ in self._c), min(b for _, b in self._c))

    def evaluate(self, q0, Q0):
        """Substitute field elements for q and Q."""
        total = 0
        for (a, b), v in self._c.items():
            total = total + v * _ipow(q0, a) * _ipow(Q0, b)
        return total

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentBi({self})"

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{v}*q^{a}*Q^{b}" for (a, b), v in self.terms())

    @classmethod
    def parse(cls, text: str) -> "LaurentBi":
        """Inverse of ``str``: a ``+``-separated sum of ``c*q^a*Q^b`` terms.

        Terms may omit factors, e.g. ``q``, ``-2*Q^-1`` or ``3/4``.
        """
        text = text.strip()
        if text == "0":
            return cls()
        out = cls()
        for term in text.replace("- ", "+ -").split("+"):
            term = term.strip()
            if not term:
                continue
            coef = Fraction(1)
            a = b = 0
            for factor in term.split("*"):
                factor = factor.strip()
                m = re.fullmatch(r"(-?)([qQ])(?:\^(-?\d+))?", factor)
                if m:
                    if m.group(1):
                        coef = -coef
                    k = int(m.group(3) or 1)
                    if m.group(2) == "q":
                        a += k
                    else:
                        b += k
                else:
                    coef *= Fraction(factor)
            out = out + cls.monomial(coef, a, b)
        return out


def _ipow(x, k: int):
    if k >= 0:
        out = 1
        for _ in range(k):
            out = out * x
        return out
    return Fraction(1) / _ipow(x, -k)


def poly_arith(a: LaurentBi, b: LaurentBi, op: str) -> LaurentBi:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Fractions of Laurent polynomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _poly_ring():
    from sympy.polys.domains import QQ
    from sympy.polys.rings import ring

    R, _, _ = ring("q,Q", QQ)
    return R, QQ


def _to_poly(p: LaurentBi, a0: int, b0: int):
    R, QQ = _poly_ring()
    return R.from_dict({(a - a0, b - b0): QQ(v.numerator, v.denominator) for (a, b), v in p._c.items()})


def _from_poly(P, a0: int, b0: int) -> LaurentBi:
    return LaurentBi._raw(
        {(a + a0, b + b0): Fraction(int(v.numerator), int(v.denominator)) for (a, b), v in P.terms()}
    )


class FracBi:
    """``num / den`` with Laurent polynomial numerator and denominator.

    Canonical form: the fraction is reduced (common polynomial factors are
    cancelled, monomials are units), and the lexicographically smallest term
    of ``den`` is ``1 * q^0 * Q^0``.  Equal values therefore have equal
    representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, _normalized: bool = False):
        num = LaurentBi._lift(num)
        den = LaurentBi._lift(den)
        if den.is_zero():
            raise ZeroInverse("zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _lift(x) -> "FracBi":
        if isinstance(x, FracBi):
            return x
        if isinstance(x, (int, Fraction, LaurentBi)):
            return FracBi(x, 1)
        return NotImplemented

    def is_laurent(self) -> bool:
        return self.den == _ONE

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return FracBi(self.num + o.num, self.den, _normalized=self.den == _ONE)
        return FracBi(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FracBi(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return FracBi(0, 1, _normalized=True)
        if self.den == _ONE and o.den == _ONE:
            return FracBi(self.num * o.num, _ONE, _normalized=True)
        return FracBi(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "FracBi":
        if not self.num:
            raise ZeroInverse("inverse of 0 in Q(q, Q)")
        return FracBi(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = FracBi(1)
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, q0, Q0):
        den = self.den.evaluate(q0, Q0)
        if not den:
            raise ZeroInverse("denominator vanishes at this specialisation")
        return self.num.evaluate(q0, Q0) / den

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den == _ONE:
            return hash(self.num)
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"FracBi({self})"

    def __str__(self):
        if self.den == _ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


_ONE = LaurentBi.const(1)


def _normalize(num: LaurentBi, den: LaurentBi) -> Tuple[LaurentBi, LaurentBi]:
    if num.is_zero():
        return LaurentBi(), _ONE
    if den.is_unit():
        ((a, b), v), = den._c.items()
        return num.shift(-a, -b).scale(1 / v), _ONE
    a1, b1 = num.min_exponents()
    a2, b2 = den.min_exponents()
    N = _to_poly(num, a1, b1)
    D = _to_poly(den, a2, b2)
    g = N.gcd(D)
    if g != 1:
        N = N.exquo(g)
        D = D.exquo(g)
    num = _from_poly(N, a1 - a2, b1 - b2)
    den = _from_poly(D, 0, 0)
    if den.is_unit():
        return _normalize(num, den)
    (a, b), v = min(den._c.items())
    inv = 1 / v
    return num.shift(-a, -b).scale(inv), den.shift(-a, -b).scale(inv)


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScalarField:
    """Coefficient field together with the values of the parameters q, Q."""

    mode: str
    q0: object = None
    Q0: object = None

    def __post_init__(self):
        if self.mode not in ("symbolic", "rational", "gaussian"):
            raise ValueError(f"unknown field mode {self.mode!r}")
        if self.mode != "symbolic":
            if not self.q0 or not self.Q0:
                raise ZeroInverse("q and Q must be invertible")

    @classmethod
    def symbolic(cls) -> "ScalarField":
        return cls("symbolic")

    @classmethod
    def rational(cls, q0=2, Q0=3) -> "ScalarField":
        return cls("rational", Fraction(q0), Fraction(Q0))

    @classmethod
    def gaussian(cls, q0, Q0) -> "ScalarField":
        return cls("gaussian", GaussRational._lift(_as_gauss(q0)), GaussRational._lift(_as_gauss(Q0)))

    @property
    def q(self):
        if self.mode == "symbolic":
            return FracBi(LaurentBi.q())
        return self.q0

    @property
    def Q(self):
        if self.mode == "symbolic":
            return FracBi(LaurentBi.Q())
        return self.Q0

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def coerce(self, x):
        if self.mode == "symbolic":
            if isinstance(x, FracBi):
                return x
            return FracBi(x)
        if self.mode == "gaussian":
            return _as_gauss(x)
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into a rational field")

    def laurent(self, p: LaurentBi):
        """Image of a Laurent polynomial in this field."""
        if self.mode == "symbolic":
            return FracBi(p)
        return self.coerce(p.evaluate(self.q0, self.Q0))

    def describe(self) -> dict:
        if self.mode == "symbolic":
            return {"field": "symbolic"}
        return {"field": self.mode, "q": str(self.q0), "Q": str(self.Q0)}


def _as_gauss(x) -> GaussRational:
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, str):
        return parse_gaussian(x)
    return GaussRational(x)


def field_invert(x):
    if not x:
        raise ZeroInverse(f"cannot invert {x}")
    if isinstance(x, (GaussRational, FracBi)):
        return x.inverse()
    return 1 / Fraction(x)


@lru_cache(maxsize=None)
def f_B(d: int) -> LaurentBi:
    """``prod_{i=1-d}^{d-1} (Q^-2 + q^(2i))``; ``f_B(0) == 1``."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    out = LaurentBi.const(1)
    for i in range(1 - d, d):
        out = out * LaurentBi({(0, -2): 1, (2 * i, 0): 1})
    return out


def specialize(x: LaurentBi, field: ScalarField):
    if field.mode == "symbolic":
        raise ValueError("specialize needs a numeric field")
    return field.laurent(x)


# ---------------------------------------------------------------------------
# Text forms
# ---------------------------------------------------------------------------


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def parse_gaussian(text: str) -> GaussRational:
    """Parse forms such as ``i``, ``-i``, ``3/2*i``, ``1+2*i``, ``1-i``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    re_part = Fraction(0)
    im_part = Fraction(0)
    for tok in re.findall(r"[+-]?[^+-]+", s):
        if tok.endswith("i"):
            coef = tok[:-1].rstrip("*")
            if coef in ("", "+"):
                im_part += 1
            elif coef == "-":
                im_part -= 1
            else:
                im_part += Fraction(coef)
        else:
            re_part += Fraction(tok)
    return GaussRational(re_part, im_part)


def format_scalar(x) -> str:
    return str(x)
