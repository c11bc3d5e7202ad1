"""Exact real algebraic numbers.

A value is either a rational (``fractions.Fraction`` fast path) or the
unique root of an irreducible integer polynomial inside an isolating
interval with rational endpoints.  Every arithmetic result is normalized
down to its minimal polynomial, so equality of values coincides with
structural equality of (polynomial, root index) and hashing/dedup are
exact and cheap.

Irrational-by-irrational sums and products go through resultant
elimination (evaluation/interpolation over integer subresultant PRS),
followed by squarefree reduction, factorization into irreducibles and
root selection by exact interval arithmetic on the operands.  Mixed
rational/irrational operations use direct linear substitutions into the
defining polynomial and never need factoring.

Interval state is narrowed in place as a transparent cache: the number a
value denotes never changes, narrowing is monotone, and exported
intervals are always recomputed from the canonical root isolation so
serialized bytes do not depend on computation history.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import sympy

__all__ = [
    "DegreeOverflow",
    "NegativeRadicand",
    "ZeroPolynomial",
    "IntPoly",
    "RealAlg",
    "degree_cap",
    "current_degree_cap",
    "sqrt",
    "cbrt",
    "sign",
    "approx",
    "minimal_degree",
    "real_roots",
    "resultant",
]

Rational = Union[int, Fraction]

DEFAULT_DEGREE_CAP = 64

_degree_cap: ContextVar[int] = ContextVar("toolmaps_degree_cap", default=DEFAULT_DEGREE_CAP)


class DegreeOverflow(ArithmeticError):
    """The defining polynomial of a result would exceed the degree budget."""


class NegativeRadicand(ValueError):
    """Square root of a negative value was requested."""


class ZeroPolynomial(ValueError):
    """An operation that needs a nonzero polynomial received zero."""


@contextmanager
def degree_cap(limit: int):
    """Temporarily lower (or raise) the defining-polynomial degree budget."""
    token = _degree_cap.set(int(limit))
    try:
        yield
    finally:
        _degree_cap.reset(token)


def current_degree_cap() -> int:
    return _degree_cap.get()


def _check_degree(candidate_degree: int) -> None:
    """Intermediate cost guard plus the budget on the result degree.

    The elimination polynomial may be larger than the budget as long as the
    minimal polynomial of the final value fits it; runaway intermediates are
    refused outright.
    """
    cap = _degree_cap.get()
    ceiling = max(4 * cap, 256)
    if candidate_degree > ceiling:
        raise DegreeOverflow(
            f"elimination degree {candidate_degree} exceeds computation ceiling {ceiling}"
        )


def _check_result_degree(degree: int) -> None:
    cap = _degree_cap.get()
    if degree > cap:
        raise DegreeOverflow(f"defining polynomial degree {degree} exceeds cap {cap}")


# ---------------------------------------------------------------------------
# Integer polynomial helpers.  Coefficients are tuples, lowest degree first.
# ---------------------------------------------------------------------------

Coeffs = tuple  # tuple[int, ...]


def _ptrim(c: Sequence[int]) -> Coeffs:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pdeg(c: Coeffs) -> int:
    return len(c) - 1  # -1 for the zero polynomial


def _padd(a: Coeffs, b: Coeffs) -> Coeffs:
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pneg(a: Coeffs) -> Coeffs:
    return tuple(-x for x in a)


def _pmul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _ptrim(out)


def _pscale(a: Coeffs, k: int) -> Coeffs:
    if k == 0:
        return ()
    return tuple(x * k for x in a)


def _pderiv(a: Coeffs) -> Coeffs:
    return _ptrim([i * a[i] for i in range(1, len(a))])


def _peval_fr(a: Coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _peval_int(a: Coeffs, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _content(a: Coeffs) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def _primitive(a: Coeffs) -> Coeffs:
    """Content removed and leading coefficient made positive."""
    if not a:
        return a
    g = _content(a)
    if a[-1] < 0:
        g = -g
    return tuple(x // g for x in a)


def _prem(a: Coeffs, b: Coeffs) -> Coeffs:
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a  mod  b."""
    da, db = _pdeg(a), _pdeg(b)
    if da < db:
        return a
    lb = b[-1]
    r = list(a)
    for k in range(da - db, -1, -1):
        top = r[db + k]
        for i in range(len(r)):
            r[i] *= lb
        for i in range(db + 1):
            r[i + k] -= top * b[i]
        del r[-1]
    return _ptrim(r)


def _pgcd(a: Coeffs, b: Coeffs) -> Coeffs:
    """Polynomial gcd over the integers (primitive PRS), positive leading."""
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    ca, cb = abs(_content(a)), abs(_content(b))
    g0 = math.gcd(ca, cb)
    a, b = _primitive(a), _primitive(b)
    if _pdeg(a) < _pdeg(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    return _pscale(a, g0) if g0 != 1 else a


def _pdiv_exact(a: Coeffs, b: Coeffs) -> Coeffs:
    """Exact quotient a / b when b divides a over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(x) for x in a]
    db = _pdeg(b)
    out = [Fraction(0)] * (len(a) - db)
    lb = Fraction(b[-1])
    for k in range(len(a) - db - 1, -1, -1):
        q = rem[db + k] / lb
        out[k] = q
        if q:
            for i in range(db + 1):
                rem[i + k] -= q * b[i]
    if any(rem):
        raise ValueError("inexact polynomial division")
    res = []
    for q in out:
        if q.denominator != 1:
            raise ValueError("quotient not integral")
        res.append(q.numerator)
    return _ptrim(res)


def _squarefree_part(a: Coeffs) -> Coeffs:
    a = _primitive(a)
    if _pdeg(a) <= 1:
        return a
    g = _pgcd(a, _pderiv(a))
    if _pdeg(g) == 0:
        return a
    return _primitive(_pdiv_exact(a, g))


def _compose_linear(p: Coeffs, u: int, v: int, w: int) -> Coeffs:
    """w^deg(p) * p((u*x + v) / w) as an integer polynomial."""
    n = _pdeg(p)
    lin = (v, u)
    acc: Coeffs = (p[n],)
    for i in range(n - 1, -1, -1):
        acc = _pmul(acc, lin)
        acc = _padd(acc, (p[i] * w ** (n - i),))
    return _ptrim(acc)


def _taylor_shift1(p: Coeffs) -> Coeffs:
    """p(x + 1)."""
    acc: Coeffs = ()
    for c in reversed(p):
        acc = _padd(_pmul(acc, (1, 1)), (c,))
    return acc


def _sign_variations(c: Coeffs) -> int:
    count, prev = 0, 0
    for x in c:
        if x == 0:
            continue
        s = 1 if x > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


# ---------------------------------------------------------------------------
# Resultants: subresultant PRS for production, Bareiss/Sylvester as fallback.
# ---------------------------------------------------------------------------


def _resultant_bareiss(a: Coeffs, b: Coeffs) -> int:
    m, n = _pdeg(a), _pdeg(b)
    if m < 0 or n < 0:
        raise ZeroPolynomial("resultant of the zero polynomial")
    if m == 0:
        return a[0] ** n
    if n == 0:
        return b[0] ** m
    size = m + n
    mat = [[0] * size for _ in range(size)]
    for r in range(n):
        for i in range(m + 1):
            mat[r][r + i] = a[m - i]
    for r in range(m):
        for i in range(n + 1):
            mat[n + r][r + i] = b[n - i]
    sign_acc = 1
    prev = 1
    for k in range(size - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, size):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign_acc = -sign_acc
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign_acc * mat[size - 1][size - 1]


def resultant(a: Sequence[int], b: Sequence[int]) -> int:
    """Resultant of two nonzero integer polynomials (subresultant PRS)."""
    a, b = _ptrim(a), _ptrim(b)
    da, db = _pdeg(a), _pdeg(b)
    if da < 0 or db < 0:
        raise ZeroPolynomial("resultant of the zero polynomial")
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if (da * db) % 2 == 1:
            s = -s
    ca, cb = abs(_content(a)), abs(_content(b))
    a = tuple(x // ca for x in a)
    b = tuple(x // cb for x in b)
    t = ca**db * cb**da
    g = h = 1
    while True:
        da, db = _pdeg(a), _pdeg(b)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = _prem(a, b)
        if not r:
            return 0
        a = b
        denom = g * h**delta
        b = tuple(x // denom for x in r)
        g = a[-1]
        if delta > 0:
            h = g**delta // h ** (delta - 1)
        if _pdeg(b) == 0:
            da = _pdeg(a)
            final = b[0] ** da // h ** (da - 1) if da >= 1 else h
            return s * t * final


def _interp_int_poly(xs: Sequence[int], ys: Sequence[int]) -> Coeffs:
    """Integer polynomial through (xs, ys) via Newton divided differences."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly: list[Fraction] = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        poly = [Fraction(0)] + poly
        for k in range(len(poly) - 1):
            poly[k] -= xs[i] * poly[k + 1]
        poly[0] += coef[i]
    out = []
    for q in poly:
        if q.denominator != 1:
            raise ValueError("interpolation did not produce integers")
        out.append(q.numerator)
    return _ptrim(out)


def _sample_points(n: int) -> list[int]:
    pts = [0]
    k = 1
    while len(pts) < n:
        pts.append(k)
        if len(pts) < n:
            pts.append(-k)
        k += 1
    return pts


# ---------------------------------------------------------------------------
# Real root isolation (Descartes / interval bisection on (0, 1)).
# ---------------------------------------------------------------------------


def _descartes_01(p: Coeffs) -> int:
    """Upper bound for the number of roots of p in (0, 1)."""
    return _sign_variations(_taylor_shift1(tuple(reversed(p))))


def _isolate_01(p: Coeffs) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for roots in (0,1); p must have no rational roots."""
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(Fraction(0), Fraction(1), p)]
    n = _pdeg(p)
    while stack:
        lo, hi, q = stack.pop()
        v = _descartes_01(q)
        if v == 0:
            continue
        if v == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = tuple(q[i] * 2 ** (n - i) for i in range(len(q)))  # q(x/2) * 2^n
        right = _taylor_shift1(left)
        stack.append((mid, hi, right))
        stack.append((lo, mid, left))
    out.sort(key=lambda iv: iv[0])
    return out


def _root_bound(p: Coeffs) -> int:
    lead = abs(p[-1])
    top = max(abs(c) for c in p)
    return 1 + (top + lead - 1) // lead


def _isolate_irreducible(p: Coeffs) -> tuple[tuple[Fraction, Fraction], ...]:
    """Isolating intervals (increasing) for all real roots of irreducible p, deg >= 2."""
    bound = _root_bound(p)
    res: list[tuple[Fraction, Fraction]] = []
    # negative roots via p(-x)
    neg = _compose_linear(p, -1, 0, 1)
    negb = tuple(neg[i] * bound**i for i in range(len(neg)))  # neg(bound * x)
    for lo, hi in reversed(_isolate_01(negb)):
        res.append((-hi * bound, -lo * bound))
    posb = tuple(p[i] * bound**i for i in range(len(p)))
    for lo, hi in _isolate_01(posb):
        res.append((lo * bound, hi * bound))
    return tuple(res)


@lru_cache(maxsize=None)
def _canonical_roots(p: Coeffs) -> tuple[tuple[Fraction, Fraction], ...]:
    return _isolate_irreducible(p)


@lru_cache(maxsize=None)
def _factor_irreducible(coeffs: Coeffs) -> tuple[Coeffs, ...]:
    """Irreducible integer factors of a squarefree polynomial, canonical order."""
    poly = sympy.Poly(list(reversed(coeffs)), sympy.Symbol("x"), domain="ZZ")
    factors = []
    for fac, _mult in poly.factor_list()[1]:
        fc = tuple(int(c) for c in reversed(fac.all_coeffs()))
        factors.append(_primitive(fc))
    factors.sort(key=lambda f: (len(f), f))
    return tuple(factors)


# ---------------------------------------------------------------------------
# The number type.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, lowest-degree coefficient first."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _ptrim(self.coeffs))

    @property
    def degree(self) -> int:
        return _pdeg(self.coeffs)

    def __call__(self, x: Rational) -> Fraction:
        return _peval_fr(self.coeffs, Fraction(x))

    def derivative(self) -> "IntPoly":
        return IntPoly(_pderiv(self.coeffs))

    def primitive(self) -> "IntPoly":
        return IntPoly(_primitive(self.coeffs))

    def squarefree_part(self) -> "IntPoly":
        if not self.coeffs:
            raise ZeroPolynomial("squarefree part of the zero polynomial")
        return IntPoly(_squarefree_part(self.coeffs))

    def is_squarefree(self) -> bool:
        if not self.coeffs:
            return False
        return _pdeg(_pgcd(self.coeffs, _pderiv(self.coeffs))) == 0


class RealAlg:
    """An exact real algebraic number."""

    __slots__ = ("_rat", "_poly", "_idx", "_lo", "_hi", "_slo")

    def __init__(self, value: Rational = 0):
        if isinstance(value, RealAlg):
            self._rat = value._rat
            self._poly = value._poly
            self._idx = value._idx
            self._lo = value._lo
            self._hi = value._hi
            self._slo = value._slo
            return
        if not isinstance(value, (int, Fraction)):
            raise TypeError(f"RealAlg from {type(value).__name__} is not exact")
        q = Fraction(value)
        self._rat = q
        self._poly = None
        self._idx = 0
        self._lo = q
        self._hi = q
        self._slo = 0

    @classmethod
    def _from_root(cls, poly: Coeffs, idx: int) -> "RealAlg":
        if _pdeg(poly) == 1:
            return cls(Fraction(-poly[0], poly[1]))
        self = object.__new__(cls)
        self._rat = None
        self._poly = poly
        self._idx = idx
        lo, hi = _canonical_roots(poly)[idx]
        self._lo = lo
        self._hi = hi
        self._slo = 1 if _peval_fr(poly, lo) > 0 else -1
        return self

    # -- basic state ------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self._rat is not None

    def as_fraction(self) -> Fraction:
        if self._rat is None:
            raise ValueError("not a rational value")
        return self._rat

    @property
    def defining(self) -> IntPoly:
        if self._rat is not None:
            return IntPoly((-self._rat.numerator, self._rat.denominator))
        return IntPoly(self._poly)

    def minimal_degree(self) -> int:
        return 1 if self._rat is not None else _pdeg(self._poly)

    def isolating_interval(self) -> tuple[Fraction, Fraction]:
        return (self._lo, self._hi)

    def _refine(self) -> None:
        if self._rat is not None:
            return
        mid = (self._lo + self._hi) / 2
        smid = 1 if _peval_fr(self._poly, mid) > 0 else -1
        if smid == self._slo:
            self._lo = mid
        else:
            self._hi = mid

    def sign(self) -> int:
        if self._rat is not None:
            q = self._rat
            return (q > 0) - (q < 0)
        while self._lo < 0 < self._hi:
            self._refine()
        return 1 if self._lo >= 0 else -1

    def approx(self, eps: Rational = Fraction(1, 10**12)) -> Fraction:
        """A rational within eps of the value; deterministic for fixed eps."""
        eps = Fraction(eps)
        if eps <= 0:
            raise ValueError("eps must be positive")
        if self._rat is not None:
            return self._rat
        lo, hi = _canonical_roots(self._poly)[self._idx]
        slo = 1 if _peval_fr(self._poly, lo) > 0 else -1
        while hi - lo > eps:
            mid = (lo + hi) / 2
            if (1 if _peval_fr(self._poly, mid) > 0 else -1) == slo:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2

    def __float__(self) -> float:
        return float(self.approx(Fraction(1, 2**80)))

    # -- equality / ordering ----------------------------------------------

    def _key(self):
        if self._rat is not None:
            return (1, (-self._rat.numerator, self._rat.denominator), 0)
        return (_pdeg(self._poly), self._poly, self._idx)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._rat is not None:
            return other._rat == self._rat
        return self._poly == other._poly and self._idx == other._idx

    def __hash__(self):
        if self._rat is not None:
            return hash(self._rat)
        return hash((self._poly, self._idx))

    def _compare(self, other: "RealAlg") -> int:
        if self == other:
            return 0
        if self._rat is not None and other._rat is not None:
            return -1 if self._rat < other._rat else 1
        a, b = self, other
        while True:
            if a._hi <= b._lo:
                return -1
            if b._hi <= a._lo:
                return 1
            a._refine()
            b._refine()

    def __lt__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else self._compare(other) < 0

    def __le__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else self._compare(other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else self._compare(other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else self._compare(other) >= 0

    def __bool__(self) -> bool:
        return self._rat != 0 if self._rat is not None else True

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "RealAlg":
        if self._rat is not None:
            return RealAlg(-self._rat)
        poly = _primitive(_compose_linear(self._poly, -1, 0, 1))
        return _locate(poly, -self._hi, -self._lo)

    def __add__(self, other) -> "RealAlg":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "RealAlg":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _add(self, -other)

    def __rsub__(self, other) -> "RealAlg":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _add(other, -self)

    def __mul__(self, other) -> "RealAlg":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RealAlg":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _mul(self, _inverse(other))

    def __rtruediv__(self, other) -> "RealAlg":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _mul(other, _inverse(self))

    def __pow__(self, n: int) -> "RealAlg":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return _inverse(self) ** (-n)
        out = RealAlg(1)
        base = self
        while n:
            if n & 1:
                out = _mul(out, base)
            base_needed = n > 1
            n >>= 1
            if base_needed and n:
                base = _mul(base, base)
        return out

    def __repr__(self) -> str:
        if self._rat is not None:
            return f"RealAlg({self._rat})"
        val = float(self)
        return f"RealAlg(root {self._idx} of {list(self._poly)}, ~{val:.6g})"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        """Spec wire form: defining coefficients plus an isolating interval."""
        if self._rat is not None:
            q = self._rat
            s = f"{q.numerator}/{q.denominator}"
            return {"defining": [-q.numerator, q.denominator], "lo": s, "hi": s}
        lo, hi = _canonical_roots(self._poly)[self._idx]
        slo = 1 if _peval_fr(self._poly, lo) > 0 else -1
        width = Fraction(1, 2**32)
        while hi - lo > width:
            mid = (lo + hi) / 2
            if (1 if _peval_fr(self._poly, mid) > 0 else -1) == slo:
                lo = mid
            else:
                hi = mid
        return {
            "defining": list(self._poly),
            "lo": f"{lo.numerator}/{lo.denominator}",
            "hi": f"{hi.numerator}/{hi.denominator}",
        }

    @classmethod
    def from_json(cls, data: dict) -> "RealAlg":
        coeffs = _ptrim(int(c) for c in data["defining"])
        lo = Fraction(data["lo"])
        hi = Fraction(data["hi"])
        if _pdeg(coeffs) < 1:
            raise ValueError("defining polynomial must be nonconstant")
        if _pdeg(coeffs) == 1:
            return cls(Fraction(-coeffs[0], coeffs[1]))
        poly = _squarefree_part(coeffs)
        if _peval_fr(poly, lo) == 0 or _peval_fr(poly, hi) == 0:
            raise ValueError("interval endpoints must not be roots")
        factors = _factor_irreducible(poly)
        for fac in factors:
            if _pdeg(fac) == 1:
                q = Fraction(-fac[0], fac[1])
                if lo < q < hi:
                    return cls(q)
            else:
                if _sign_change(fac, lo, hi):
                    return _locate(fac, lo, hi)
        raise ValueError("no root of the defining polynomial in the interval")


def _coerce(x) -> "RealAlg":
    if isinstance(x, RealAlg):
        return x
    if isinstance(x, (int, Fraction)):
        return RealAlg(x)
    return NotImplemented


def _sign_change(poly: Coeffs, lo: Fraction, hi: Fraction) -> bool:
    return (_peval_fr(poly, lo) > 0) != (_peval_fr(poly, hi) > 0)


def _locate(poly: Coeffs, lo: Fraction, hi: Fraction) -> RealAlg:
    """The root of irreducible poly inside (lo, hi); the bracket must isolate it."""
    if _pdeg(poly) == 1:
        return RealAlg(Fraction(-poly[0], poly[1]))
    intervals = _canonical_roots(poly)
    live = [[l, h, i] for i, (l, h) in enumerate(intervals)]
    slos = {i: (1 if _peval_fr(poly, l) > 0 else -1) for i, (l, h) in enumerate(intervals)}
    while True:
        nxt = []
        for l, h, i in live:
            if h <= lo or l >= hi:
                continue
            if lo <= l and h <= hi:
                out = RealAlg._from_root(poly, i)
                out._lo, out._hi = l, h
                out._slo = slos[i]
                return out
            mid = (l + h) / 2
            if (1 if _peval_fr(poly, mid) > 0 else -1) == slos[i]:
                nxt.append([mid, h, i])
            else:
                nxt.append([l, mid, i])
        live = nxt
        if not live:
            raise ValueError("bracket does not contain a root")


class _Candidate:
    __slots__ = ("poly", "idx", "lo", "hi", "slo", "rat")

    def __init__(self, poly, idx, lo, hi, rat=None):
        self.poly = poly
        self.idx = idx
        self.lo = lo
        self.hi = hi
        self.rat = rat
        if rat is None:
            self.slo = 1 if _peval_fr(poly, lo) > 0 else -1

    def refine(self):
        if self.rat is not None:
            return
        mid = (self.lo + self.hi) / 2
        if (1 if _peval_fr(self.poly, mid) > 0 else -1) == self.slo:
            self.lo = mid
        else:
            self.hi = mid

    def overlaps(self, lo: Fraction, hi: Fraction) -> bool:
        return not (self.hi < lo or self.lo > hi)

    def build(self) -> RealAlg:
        if self.rat is not None:
            return RealAlg(self.rat)
        _check_result_degree(_pdeg(self.poly))
        out = RealAlg._from_root(self.poly, self.idx)
        out._lo, out._hi = self.lo, self.hi
        out._slo = self.slo
        return out


def _candidates_of(d: Coeffs) -> list[_Candidate]:
    """All real roots of nonzero d as selection candidates."""
    d = _squarefree_part(d)
    cands: list[_Candidate] = []
    for fac in _factor_irreducible(d):
        if _pdeg(fac) == 1:
            q = Fraction(-fac[0], fac[1])
            cands.append(_Candidate(None, 0, q, q, rat=q))
        else:
            for i, (lo, hi) in enumerate(_canonical_roots(fac)):
                cands.append(_Candidate(fac, i, lo, hi))
    return cands


def _select(cands: list[_Candidate], interval_fn, refine_operands) -> RealAlg:
    while True:
        lo, hi = interval_fn()
        cands = [c for c in cands if c.overlaps(lo, hi)]
        if len(cands) == 1:
            return cands[0].build()
        if not cands:
            raise AssertionError("no candidate root matches the operand interval")
        refine_operands()
        for c in cands:
            c.refine()


def _add(a: RealAlg, b: RealAlg) -> RealAlg:
    if a._rat is not None and b._rat is not None:
        return RealAlg(a._rat + b._rat)
    if b._rat is not None:
        a, b = b, a
    if a._rat is not None:
        q = a._rat
        if q == 0:
            return b
        poly = _primitive(_compose_linear(b._poly, q.denominator, -q.numerator, q.denominator))
        return _locate(poly, b._lo + q, b._hi + q)
    da, db = _pdeg(a._poly), _pdeg(b._poly)
    _check_degree(da * db)
    n = da * db + 1
    xs = _sample_points(n)
    ys = [resultant(a._poly, _compose_linear(b._poly, -1, k, 1)) for k in xs]
    d = _interp_int_poly(xs, ys)
    if not d:
        raise AssertionError("vanishing resultant in addition")
    cands = _candidates_of(d)

    def interval():
        return (a._lo + b._lo, a._hi + b._hi)

    def refine():
        a._refine()
        b._refine()

    return _select(cands, interval, refine)


def _mul_interval(a: RealAlg, b: RealAlg) -> tuple[Fraction, Fraction]:
    prods = (a._lo * b._lo, a._lo * b._hi, a._hi * b._lo, a._hi * b._hi)
    return (min(prods), max(prods))


def _mul(a: RealAlg, b: RealAlg) -> RealAlg:
    if a._rat is not None and b._rat is not None:
        return RealAlg(a._rat * b._rat)
    if b._rat is not None:
        a, b = b, a
    if a._rat is not None:
        q = a._rat
        if q == 0:
            return RealAlg(0)
        if q == 1:
            return b
        # y = q*x  =>  substitute x = y/q
        poly = _primitive(_compose_linear(b._poly, q.denominator, 0, q.numerator))
        lo, hi = b._lo * q, b._hi * q
        if q < 0:
            lo, hi = hi, lo
        return _locate(poly, lo, hi)
    da, db = _pdeg(a._poly), _pdeg(b._poly)
    _check_degree(da * db)
    n = da * db + 1
    xs = _sample_points(n)
    qq = b._poly
    ys = []
    for k in xs:
        my = [0] * (db + 1)
        for i in range(db + 1):
            my[db - i] = qq[i] * k**i
        my = _ptrim(my)
        ys.append(resultant(a._poly, my) if my else 0)
    d = _interp_int_poly(xs, ys)
    if not d:
        raise AssertionError("vanishing resultant in multiplication")
    cands = _candidates_of(d)

    def interval():
        return _mul_interval(a, b)

    def refine():
        a._refine()
        b._refine()

    return _select(cands, interval, refine)


def _inverse(a: RealAlg) -> RealAlg:
    if a._rat is not None:
        if a._rat == 0:
            raise ZeroDivisionError("division by zero")
        return RealAlg(1 / a._rat)
    if a.sign() > 0:
        while a._lo <= 0:
            a._refine()
    else:
        while a._hi >= 0:
            a._refine()
    poly = _primitive(tuple(reversed(a._poly)))
    return _locate(poly, 1 / a._hi, 1 / a._lo)


def sqrt(value: Union[RealAlg, Rational]) -> RealAlg:
    """The nonnegative square root, exact."""
    a = _coerce(value)
    if a is NotImplemented:
        raise TypeError("sqrt expects an exact value")
    s = a.sign()
    if s < 0:
        raise NegativeRadicand("square root of a negative value")
    if s == 0:
        return RealAlg(0)
    if a._rat is not None:
        q = a._rat
        rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
        if rn * rn == q.numerator and rd * rd == q.denominator:
            return RealAlg(Fraction(rn, rd))
        poly = _primitive((-q.numerator, 0, q.denominator))
        bound = _root_bound(poly)
        return _locate(poly, Fraction(0), Fraction(bound))
    _check_degree(2 * _pdeg(a._poly))
    d = _ptrim([a._poly[i // 2] if i % 2 == 0 else 0 for i in range(2 * len(a._poly) - 1)])
    cands = [c for c in _candidates_of(d)]

    def positive(c: _Candidate) -> bool:
        # drop strictly negative candidates (the true root is positive)
        while c.lo < 0 < c.hi:
            c.refine()
        return c.lo >= 0

    cands = [c for c in cands if positive(c)]

    def interval():
        lo = max(a._lo, Fraction(0))
        return (lo, a._hi)

    def refine():
        a._refine()

    # compare candidate squares against the operand's interval
    class _Sq:
        __slots__ = ("c",)

        def __init__(self, c):
            self.c = c

        def overlaps(self, lo, hi):
            return not (self.c.hi * self.c.hi < lo or self.c.lo * self.c.lo > hi)

        def refine(self):
            self.c.refine()

        def build(self):
            return self.c.build()

    return _select([_Sq(c) for c in cands], interval, refine)


def cbrt(value: Union[RealAlg, Rational]) -> RealAlg:
    """The real cube root (any sign), via root isolation of x^3 - value."""
    a = _coerce(value)
    if a is NotImplemented:
        raise TypeError("cbrt expects an exact value")
    if a._rat is not None:
        q = a._rat
        rn = round(abs(q.numerator) ** (1 / 3))
        rd = round(q.denominator ** (1 / 3))
        for n in (rn - 1, rn, rn + 1):
            for dd in (rd - 1, rd, rd + 1):
                if dd > 0 and n >= 0 and n**3 == abs(q.numerator) and dd**3 == q.denominator:
                    r = Fraction(n, dd)
                    return RealAlg(r if q >= 0 else -r)
        roots = real_roots((-q.numerator, 0, 0, q.denominator))
        assert len(roots) == 1
        return roots[0]
    _check_degree(3 * _pdeg(a._poly))
    # roots of p(x^3)
    d = _ptrim([a._poly[i // 3] if i % 3 == 0 else 0 for i in range(3 * len(a._poly) - 2)])
    cands = _candidates_of(d)

    class _Cu:
        __slots__ = ("c",)

        def __init__(self, c):
            self.c = c

        def overlaps(self, lo, hi):
            return not (self.c.hi**3 < lo or self.c.lo**3 > hi)

        def refine(self):
            self.c.refine()

        def build(self):
            return self.c.build()

    def interval():
        return (a._lo, a._hi)

    def refine():
        a._refine()

    return _select([_Cu(c) for c in cands], interval, refine)


def sign(value: Union[RealAlg, Rational]) -> int:
    a = _coerce(value)
    if a is NotImplemented:
        raise TypeError("sign expects an exact value")
    return a.sign()


def approx(value: Union[RealAlg, Rational], eps: Rational) -> Fraction:
    a = _coerce(value)
    if a is NotImplemented:
        raise TypeError("approx expects an exact value")
    return a.approx(eps)


def minimal_degree(value: Union[RealAlg, Rational]) -> int:
    a = _coerce(value)
    if a is NotImplemented:
        raise TypeError("minimal_degree expects an exact value")
    return a.minimal_degree()


def real_roots(poly: Union[IntPoly, Sequence[int]]) -> list[RealAlg]:
    """All distinct real roots of an integer polynomial, increasing."""
    coeffs = _ptrim(poly.coeffs if isinstance(poly, IntPoly) else tuple(poly))
    if not coeffs:
        raise ZeroPolynomial("real_roots of the zero polynomial")
    if _pdeg(coeffs) == 0:
        return []
    roots: list[RealAlg] = []
    # split off the root at zero
    nz = 0
    while coeffs[nz] == 0:
        nz += 1
    if nz:
        roots.append(RealAlg(0))
        coeffs = coeffs[nz:]
    sf = _squarefree_part(coeffs)
    if _pdeg(sf) >= 1:
        for fac in _factor_irreducible(sf):
            if _pdeg(fac) == 1:
                roots.append(RealAlg(Fraction(-fac[0], fac[1])))
            else:
                for i in range(len(_canonical_roots(fac))):
                    roots.append(RealAlg._from_root(fac, i))
    roots.sort()
    return roots
