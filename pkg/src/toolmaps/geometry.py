"""Exact geometric primitives: points, lines, circles, conics.

Curves carry canonical coefficient forms so that two curves denote the
same point set exactly when their canonical coefficients are equal
component-wise; that equality is what layer deduplication hashes on.
The radial sweep used to fix multi-output axiom orderings is computed
with exact cross/dot sign tests only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .realalg import RealAlg

__all__ = [
    "GeometryError",
    "DegenerateConic",
    "NonpositiveEccentricity",
    "CoincidentWithCenter",
    "Point",
    "Line",
    "Circle",
    "Conic",
    "ParabolaSpec",
    "Curve",
    "incident",
    "conic_from_focus_directrix",
    "sweep_compare",
    "sweep_sort",
    "perpendicular_foot",
    "reflect_point",
    "dist2",
    "as_real",
]


class GeometryError(ValueError):
    """Base class for geometric precondition failures."""


class DegenerateConic(GeometryError):
    pass


class NonpositiveEccentricity(GeometryError):
    pass


class CoincidentWithCenter(GeometryError):
    pass


Exact = Union[RealAlg, int, Fraction]


def as_real(x: Exact) -> RealAlg:
    return x if isinstance(x, RealAlg) else RealAlg(x)


@dataclass(frozen=True)
class Point:
    x: RealAlg
    y: RealAlg

    def __init__(self, x: Exact, y: Exact):
        object.__setattr__(self, "x", as_real(x))
        object.__setattr__(self, "y", as_real(y))

    def key(self):
        return (self.x._key(), self.y._key())

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "y": self.y.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "Point":
        return cls(RealAlg.from_json(data["x"]), RealAlg.from_json(data["y"]))

    def __repr__(self):
        return f"Point({float(self.x):.6g}, {float(self.y):.6g})"


@dataclass(frozen=True)
class Line:
    """a*x + b*y + c = 0, canonical: first nonzero of (a, b) is exactly 1."""

    a: RealAlg
    b: RealAlg
    c: RealAlg

    def __init__(self, a: Exact, b: Exact, c: Exact):
        a, b, c = as_real(a), as_real(b), as_real(c)
        if a.sign() != 0:
            a, b, c = RealAlg(1), b / a, c / a
        elif b.sign() != 0:
            b, c = RealAlg(1), c / b
        else:
            raise GeometryError("line requires (a, b) != (0, 0)")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def key(self):
        return (0, self.a._key(), self.b._key(), self.c._key())

    def direction(self) -> tuple[RealAlg, RealAlg]:
        return (-self.b, self.a)

    def normal(self) -> tuple[RealAlg, RealAlg]:
        return (self.a, self.b)

    def eval_at(self, p: Point) -> RealAlg:
        return self.a * p.x + self.b * p.y + self.c

    def is_parallel_to(self, other: "Line") -> bool:
        return self.a == other.a and self.b == other.b

    def to_json(self) -> dict:
        return {
            "kind": "line",
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "c": self.c.to_json(),
        }

    def __repr__(self):
        return f"Line({float(self.a):.4g}x + {float(self.b):.4g}y + {float(self.c):.4g} = 0)"


@dataclass(frozen=True)
class Circle:
    """Center (cx, cy) and squared radius r2 > 0; no square roots stored."""

    cx: RealAlg
    cy: RealAlg
    r2: RealAlg

    def __init__(self, cx: Exact, cy: Exact, r2: Exact):
        r2 = as_real(r2)
        if r2.sign() <= 0:
            raise GeometryError("circle requires positive squared radius")
        object.__setattr__(self, "cx", as_real(cx))
        object.__setattr__(self, "cy", as_real(cy))
        object.__setattr__(self, "r2", r2)

    def key(self):
        return (1, self.cx._key(), self.cy._key(), self.r2._key())

    @property
    def center(self) -> Point:
        return Point(self.cx, self.cy)

    def to_json(self) -> dict:
        return {
            "kind": "circle",
            "cx": self.cx.to_json(),
            "cy": self.cy.to_json(),
            "r2": self.r2.to_json(),
        }

    def __repr__(self):
        return f"Circle(({float(self.cx):.4g}, {float(self.cy):.4g}), r2={float(self.r2):.4g})"


@dataclass(frozen=True)
class Conic:
    """A x^2 + B xy + C y^2 + D x + E y + F = 0, scaled so the first nonzero
    coefficient in (A, B, C, D, E, F) is exactly 1; (A, B, C) not all zero."""

    A: RealAlg
    B: RealAlg
    C: RealAlg
    D: RealAlg
    E: RealAlg
    F: RealAlg

    def __init__(self, A: Exact, B: Exact, C: Exact, D: Exact, E: Exact, F: Exact):
        coeffs = [as_real(v) for v in (A, B, C, D, E, F)]
        if all(coeffs[i].sign() == 0 for i in range(3)):
            raise GeometryError("conic requires a nonzero quadratic part")
        lead = next(c for c in coeffs if c.sign() != 0)
        if lead != 1:
            coeffs = [c / lead for c in coeffs]
        for name, val in zip("ABCDEF", coeffs):
            object.__setattr__(self, name, val)

    def key(self):
        return (2,) + tuple(getattr(self, n)._key() for n in "ABCDEF")

    def eval_at(self, p: Point) -> RealAlg:
        x, y = p.x, p.y
        return self.A * x * x + self.B * x * y + self.C * y * y + self.D * x + self.E * y + self.F

    def center(self) -> Optional[Point]:
        """Solution of the gradient system; None for parabolic conics."""
        det = 4 * self.A * self.C - self.B * self.B
        if det.sign() == 0:
            return None
        x = (self.B * self.E - 2 * self.C * self.D) / det
        y = (self.B * self.D - 2 * self.A * self.E) / det
        return Point(x, y)

    def to_json(self) -> dict:
        out = {"kind": "conic"}
        for n in "ABCDEF":
            out[n] = getattr(self, n).to_json()
        return out

    def __repr__(self):
        vals = ", ".join(f"{n}={float(getattr(self, n)):.4g}" for n in "ABCDEF")
        return f"Conic({vals})"


Curve = Union[Line, Circle, Conic]


@dataclass(frozen=True)
class ParabolaSpec:
    """The (directrix, focus) pair consumed by the fold-style tangency axioms."""

    directrix: Line
    focus: Point

    def __post_init__(self):
        if incident(self.focus, self.directrix):
            raise DegenerateConic("focus lies on the directrix")


def curve_from_json(data: dict) -> Curve:
    kind = data["kind"]
    if kind == "line":
        return Line(*(RealAlg.from_json(data[k]) for k in "abc"))
    if kind == "circle":
        return Circle(*(RealAlg.from_json(data[k]) for k in ("cx", "cy", "r2")))
    if kind == "conic":
        return Conic(*(RealAlg.from_json(data[k]) for k in "ABCDEF"))
    raise ValueError(f"unknown curve kind {kind!r}")


def canonicalize(c: Curve) -> Curve:
    """Canonical-form representative; construction already canonicalizes, so
    this is idempotent by re-normalization."""
    if isinstance(c, Line):
        return Line(c.a, c.b, c.c)
    if isinstance(c, Circle):
        return Circle(c.cx, c.cy, c.r2)
    if isinstance(c, Conic):
        return Conic(c.A, c.B, c.C, c.D, c.E, c.F)
    raise TypeError(f"not a curve: {c!r}")


def incident(p: Point, c: Curve) -> bool:
    """Exact incidence of a point with a curve."""
    if isinstance(c, Line):
        return c.eval_at(p).sign() == 0
    if isinstance(c, Circle):
        dx = p.x - c.cx
        dy = p.y - c.cy
        return (dx * dx + dy * dy - c.r2).sign() == 0
    if isinstance(c, Conic):
        return c.eval_at(p).sign() == 0
    raise TypeError(f"not a curve: {c!r}")


def dist2(p: Point, q: Point) -> RealAlg:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def line_dist2(p: Point, line: Line) -> RealAlg:
    v = line.eval_at(p)
    n2 = line.a * line.a + line.b * line.b
    return v * v / n2


def conic_from_focus_directrix(directrix: Line, focus: Point, e: Exact) -> Conic:
    """The locus dist(P, F)^2 = e^2 * dist(P, directrix)^2 as a canonical conic."""
    e = as_real(e)
    if e.sign() <= 0:
        raise NonpositiveEccentricity("eccentricity must be positive")
    if incident(focus, directrix):
        raise DegenerateConic("focus on the directrix")
    return _conic_from_focus_directrix_e2(directrix, focus, e * e)


def _conic_from_focus_directrix_e2(directrix: Line, focus: Point, e2: RealAlg) -> Conic:
    a, b, c = directrix.a, directrix.b, directrix.c
    n2 = a * a + b * b
    fx, fy = focus.x, focus.y
    A = n2 - e2 * a * a
    B = -2 * e2 * a * b
    C = n2 - e2 * b * b
    D = -2 * n2 * fx - 2 * e2 * a * c
    E = -2 * n2 * fy - 2 * e2 * b * c
    F = n2 * (fx * fx + fy * fy) - e2 * c * c
    return Conic(A, B, C, D, E, F)


def _angle_class(vx: RealAlg, vy: RealAlg, rx: RealAlg, ry: RealAlg) -> int:
    """Quadrant-style class of the angle from ref (rx, ry) to v, in [0, 2pi):
    0 on the ray, 1 in (0, pi), 2 opposite the ray, 3 in (pi, 2pi)."""
    cross = (rx * vy - ry * vx).sign()
    if cross > 0:
        return 1
    if cross < 0:
        return 3
    dot = (rx * vx + ry * vy).sign()
    return 0 if dot > 0 else 2


def sweep_compare(center: Point, ref: Point, p: Point, q: Point) -> int:
    """Order of p, q in a counterclockwise radial sweep from half-line
    center->ref; equal angles break by increasing distance from the center.
    Returns -1, 0 or +1."""
    rx, ry = ref.x - center.x, ref.y - center.y
    if rx.sign() == 0 and ry.sign() == 0:
        raise CoincidentWithCenter("reference point coincides with the sweep center")
    px, py = p.x - center.x, p.y - center.y
    qx, qy = q.x - center.x, q.y - center.y
    if px.sign() == 0 and py.sign() == 0:
        raise CoincidentWithCenter("swept point coincides with the sweep center")
    if qx.sign() == 0 and qy.sign() == 0:
        raise CoincidentWithCenter("swept point coincides with the sweep center")
    cp = _angle_class(px, py, rx, ry)
    cq = _angle_class(qx, qy, rx, ry)
    if cp != cq:
        return -1 if cp < cq else 1
    if cp in (1, 3):
        cross = (px * qy - py * qx).sign()
        if cross > 0:
            return -1
        if cross < 0:
            return 1
    # same direction: nearer point first
    d = (px * px + py * py - qx * qx - qy * qy).sign()
    return d


def sweep_sort(center: Point, ref: Point, points: list[Point]) -> list[Point]:
    import functools

    return sorted(points, key=functools.cmp_to_key(lambda p, q: sweep_compare(center, ref, p, q)))


def perpendicular_foot(line: Line, p: Point) -> Point:
    """Orthogonal projection of p onto the line."""
    n2 = line.a * line.a + line.b * line.b
    t = line.eval_at(p) / n2
    return Point(p.x - t * line.a, p.y - t * line.b)


def reflect_point(p: Point, line: Line) -> Point:
    n2 = line.a * line.a + line.b * line.b
    t = (2 * line.eval_at(p)) / n2
    return Point(p.x - t * line.a, p.y - t * line.b)


def reflect_line(m: Line, mirror: Line) -> Line:
    """Reflection of a line across another, via two reflected points."""
    p0 = _point_on(m)
    p1 = Point(p0.x - m.b, p0.y + m.a)
    q0 = reflect_point(p0, mirror)
    q1 = reflect_point(p1, mirror)
    a = q1.y - q0.y
    b = q0.x - q1.x
    c = -(a * q0.x + b * q0.y)
    return Line(a, b, c)


def _point_on(line: Line) -> Point:
    if line.b.sign() != 0:
        return Point(RealAlg(0), -line.c / line.b)
    return Point(-line.c / line.a, RealAlg(0))
