"""The axiom operations: elementary construction and intersection steps.

Construction axioms produce curves from points and curves; intersection
axioms produce points.  Multi-output axioms order their results by the
documented radial-sweep conventions, computed with exact sign tests.

Tangency axioms work in fold form: a tangent of the parabola with
directrix ``l`` and focus ``F`` is the perpendicular bisector of ``F``
and a point of ``l``, which keeps every output exactly tangent by
construction.  The common-tangent solve eliminates the contact parameter
to a cubic, the algebraic source of cube roots.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

import sympy

from .geometry import (
    Circle,
    CoincidentWithCenter,
    Conic,
    Curve,
    GeometryError,
    Line,
    Point,
    _conic_from_focus_directrix_e2,
    dist2,
    incident,
    line_dist2,
    perpendicular_foot,
    sweep_sort,
)
from .realalg import (
    DegreeOverflow,
    RealAlg,
    _pdeg,
    _ptrim,
    real_roots,
    sqrt,
)

__all__ = [
    "AxiomError",
    "CoincidentPoints",
    "ZeroRadius",
    "IdenticalLines",
    "ParallelLines",
    "IdenticalCircles",
    "PointNotExterior",
    "FocusOnDirectrix",
    "NoSuchTangent",
    "DegenerateConfiguration",
    "NoCommonTangent",
    "SharedComponent",
    "ZeroEccentricity",
    "AxiomId",
    "AXIOMS",
    "apply_axiom",
    "line_through",
    "circle_center_through",
    "radius_circle",
    "bisectors",
    "perpendicular_bisector",
    "perpendicular",
    "point_perpendicular",
    "tangents",
    "common_tangents",
    "perpendicular_tangent",
    "conic_axiom",
    "line_intersect",
    "circle_intersect",
    "line_circle_intersect",
    "conic_intersections",
    "line_unit_circle_intersect",
    "conic_ordering_note",
    "ORIGIN",
    "UNIT_CIRCLE",
]


class AxiomError(GeometryError):
    """An axiom precondition failed for the given inputs."""


class CoincidentPoints(AxiomError):
    pass


class ZeroRadius(AxiomError):
    pass


class IdenticalLines(AxiomError):
    pass


class ParallelLines(AxiomError):
    pass


class IdenticalCircles(AxiomError):
    pass


class PointNotExterior(AxiomError):
    pass


class FocusOnDirectrix(AxiomError):
    pass


class NoSuchTangent(AxiomError):
    pass


class DegenerateConfiguration(AxiomError):
    pass


class NoCommonTangent(AxiomError):
    pass


class SharedComponent(AxiomError):
    pass


class ZeroEccentricity(AxiomError):
    pass


ORIGIN = Point(0, 0)
UNIT_CIRCLE = Circle(0, 0, 1)


# ---------------------------------------------------------------------------
# Construction axioms.
# ---------------------------------------------------------------------------


def line_through(a: Point, b: Point) -> Line:
    """Line through two distinct points."""
    if a == b:
        raise CoincidentPoints("line through coincident points")
    la = b.y - a.y
    lb = a.x - b.x
    lc = -(la * a.x + lb * a.y)
    return Line(la, lb, lc)


def circle_center_through(a: Point, b: Point) -> Circle:
    """Circle with center a through b."""
    if a == b:
        raise CoincidentPoints("circle through its own center")
    return Circle(a.x, a.y, dist2(a, b))


def radius_circle(a: Point, b: Point, c: Point) -> Circle:
    """Circle with center a and radius the distance from b to c."""
    if b == c:
        raise ZeroRadius("radius endpoints coincide")
    return Circle(a.x, a.y, dist2(b, c))


def bisectors(l1: Line, l2: Line) -> tuple[Line, ...]:
    """Angle bisectors of two lines.

    For intersecting lines returns (b1, b2) where b1 bisects the oriented
    angle from l1 to l2 and b2 the oriented angle from l2 to l1 (the
    perpendicular mate).  For distinct parallels returns the midline as a
    1-tuple (a documented extension; the angle case is the paper one).
    """
    if l1 == l2:
        raise IdenticalLines("bisector of a line with itself")
    if l1.is_parallel_to(l2):
        return (Line(l1.a, l1.b, (l1.c + l2.c) / 2),)
    o = line_intersect(l1, l2)
    d1x, d1y = l1.direction()
    d2x, d2y = l2.direction()
    if (d1x * d2y - d1y * d2x).sign() < 0:
        d2x, d2y = -d2x, -d2y
    n1sq = d1x * d1x + d1y * d1y
    n2sq = d2x * d2x + d2y * d2y
    s = sqrt(n1sq * n2sq)
    ux = n2sq * d1x + s * d2x
    uy = n2sq * d1y + s * d2y
    b1 = _line_point_direction(o, ux, uy)
    b2 = _line_point_direction(o, -uy, ux)
    return (b1, b2)


def _line_point_direction(p: Point, dx: RealAlg, dy: RealAlg) -> Line:
    a, b = -dy, dx
    return Line(a, b, -(a * p.x + b * p.y))


def perpendicular_bisector(a: Point, b: Point) -> Line:
    """Locus of points equidistant from two distinct points."""
    if a == b:
        raise CoincidentPoints("perpendicular bisector of coincident points")
    la = 2 * (b.x - a.x)
    lb = 2 * (b.y - a.y)
    lc = (a.x * a.x + a.y * a.y) - (b.x * b.x + b.y * b.y)
    return Line(la, lb, lc)


def perpendicular(l: Line, p: Point) -> Line:
    """The unique line through p perpendicular to l."""
    a, b = -l.b, l.a
    return Line(a, b, -(a * p.x + b * p.y))


def point_perpendicular(a: Point, b: Point, c: Point) -> Line:
    """Line perpendicular to segment ab through c."""
    if a == b:
        raise CoincidentPoints("perpendicular to a degenerate segment")
    return perpendicular(line_through(a, b), c)


def _exteriority(l: Line, f: Point, a: Point) -> int:
    """Sign of dist(a, f)^2 - dist(a, l)^2: positive means exterior."""
    return (dist2(a, f) - line_dist2(a, l)).sign()


def tangents(l: Line, f: Point, a: Point) -> tuple[Line, Line]:
    """The two tangents through a to the parabola with directrix l, focus f.

    Fold form: each tangent is the perpendicular bisector of f and a point
    x on l at distance |af| from a.  Ordered by a counterclockwise radial
    sweep centered at a with reference half-line a->f: a line through a is
    met when the rotating half-line first aligns with it.
    """
    if incident(f, l):
        raise FocusOnDirectrix("tangent axiom requires the focus off the directrix")
    ext = _exteriority(l, f, a)
    if ext <= 0:
        raise PointNotExterior(
            "tangent axiom requires the source point strictly exterior to the parabola"
        )
    feet = _line_circle_points(l, Circle(a.x, a.y, dist2(a, f)))
    assert len(feet) == 2
    out = [perpendicular_bisector(f, x) for x in feet]
    out = _order_lines_through(a, f, out)
    return (out[0], out[1])


def _order_lines_through(center: Point, ref: Point, lines: list[Line]) -> list[Line]:
    """Sort lines through ``center`` by first alignment of a CCW-sweeping
    half-line starting toward ``ref`` (angles taken mod pi)."""
    rx, ry = ref.x - center.x, ref.y - center.y

    def canon_dir(line: Line):
        dx, dy = line.direction()
        cr = (rx * dy - ry * dx).sign()
        if cr == 0:
            raise CoincidentWithCenter("swept line contains the reference direction")
        if cr < 0:
            dx, dy = -dx, -dy
        return dx, dy

    dirs = [canon_dir(l) for l in lines]

    def cmp(i: int, j: int) -> int:
        (dix, diy), (djx, djy) = dirs[i], dirs[j]
        return -(dix * djy - diy * djx).sign()

    order = sorted(range(len(lines)), key=functools.cmp_to_key(cmp))
    return [lines[i] for i in order]


# -- polynomial helpers over RealAlg coefficients ---------------------------


def _pp_trim(c: list[RealAlg]) -> list[RealAlg]:
    while c and c[-1].sign() == 0:
        c.pop()
    return c


def _pp_add(a: list[RealAlg], b: list[RealAlg]) -> list[RealAlg]:
    n = max(len(a), len(b))
    zero = RealAlg(0)
    return _pp_trim(
        [(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)]
    )


def _pp_mul(a: list[RealAlg], b: list[RealAlg]) -> list[RealAlg]:
    if not a or not b:
        return []
    out = [RealAlg(0) for _ in range(len(a) + len(b) - 1)]
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return _pp_trim(out)


def _pp_scale(a: list[RealAlg], k: RealAlg) -> list[RealAlg]:
    return _pp_trim([x * k for x in a])


def _pp_eval(a: list[RealAlg], x: Union[RealAlg, Fraction, int]) -> RealAlg:
    acc = RealAlg(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _pp_deriv(a: list[RealAlg]) -> list[RealAlg]:
    return _pp_trim([a[i] * i for i in range(1, len(a))])


def _pp_rem(a: list[RealAlg], b: list[RealAlg]) -> list[RealAlg]:
    """Remainder of a by b over the field of exact reals."""
    r = _pp_trim(list(a))
    db = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= db and r:
        q = r[-1] / lead
        k = len(r) - 1 - db
        for i in range(db + 1):
            r[i + k] = r[i + k] - q * b[i]
        r.pop()
        r = _pp_trim(r)
    return r


def _pp_gcd(a: list[RealAlg], b: list[RealAlg]) -> list[RealAlg]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pp_rem(a, b)
    return a


def _pp_squarefree(a: list[RealAlg]) -> list[RealAlg]:
    if len(a) <= 2:
        return a
    g = _pp_gcd(a, _pp_deriv(a))
    if len(g) <= 1:
        return a
    # exact division a / g (remainder is zero by construction)
    q: list[RealAlg] = []
    r = list(a)
    dg = len(g) - 1
    lead = g[-1]
    while len(r) - 1 >= dg:
        c = r[-1] / lead
        k = len(r) - 1 - dg
        q.append(c)
        for i in range(dg + 1):
            r[i + k] = r[i + k] - c * g[i]
        r.pop()
    q.reverse()
    return _pp_trim(q)


_ELIMINATION_CEILING = 256


def _real_roots_exact(coeffs: Sequence[RealAlg]) -> list[RealAlg]:
    """All real roots of a polynomial with exact real algebraic coefficients.

    Rational coefficients go straight to integer root isolation.  Otherwise
    the coefficients are eliminated symbol-by-symbol with resultants against
    their minimal polynomials, and each candidate root of the resulting
    integer polynomial is kept exactly when the squarefree original changes
    sign across the candidate's isolating interval.
    """
    c = _pp_trim(list(coeffs))
    if not c:
        raise ValueError("zero polynomial has no well-defined root set")
    if len(c) == 1:
        return []
    if all(x.is_rational for x in c):
        fracs = [x.as_fraction() for x in c]
        den = math.lcm(*(f.denominator for f in fracs))
        ints = _ptrim(int(f * den) for f in fracs)
        return real_roots(ints)

    t = sympy.Symbol("t")
    sym_of: dict[RealAlg, sympy.Symbol] = {}
    minpolys: list[tuple[sympy.Symbol, sympy.Expr]] = []
    terms = []
    bound = len(c) - 1
    for i, x in enumerate(c):
        if x.is_rational:
            q = x.as_fraction()
            terms.append(sympy.Rational(q.numerator, q.denominator) * t**i)
        else:
            if x not in sym_of:
                s = sympy.Symbol(f"u{len(sym_of)}")
                sym_of[x] = s
                poly = x.defining.coeffs
                minpolys.append((s, sum(int(k) * s**j for j, k in enumerate(poly))))
                bound *= len(poly) - 1
            terms.append(sym_of[x] * t**i)
    if bound > _ELIMINATION_CEILING:
        raise DegreeOverflow(f"elimination degree {bound} exceeds internal ceiling")
    expr = sympy.Add(*terms)
    for s, mp in minpolys:
        expr = sympy.resultant(expr, mp, s)
    poly = sympy.Poly(sympy.expand(expr), t)
    d = _ptrim(int(v) for v in reversed(poly.all_coeffs()))
    if not d:
        raise RuntimeError("degenerate elimination: identically vanishing resultant")
    cands = real_roots(d)
    g = _pp_squarefree(c)
    out = []
    for i, r in enumerate(cands):
        if i + 1 < len(cands):
            r._compare(cands[i + 1])  # force disjoint cached intervals
    for r in cands:
        if r.is_rational:
            if _pp_eval(g, r).sign() == 0:
                out.append(r)
        else:
            lo, hi = r.isolating_interval()
            if _pp_eval(g, lo).sign() * _pp_eval(g, hi).sign() < 0:
                out.append(r)
    return out


def common_tangents(l1: Line, f1: Point, l2: Line, f2: Point) -> list[Line]:
    """All real common tangents of two parabolas given by directrix/focus.

    The contact parameter on the first parabola is eliminated to a cubic
    (lower degree when the tangency condition degenerates); every real
    solution is returned as an exactly tangent line.  Outputs are ordered
    by the radial sweep of their contact points with the first parabola,
    centered at f1 with reference half-line f1->f2.
    """
    if incident(f1, l1) or incident(f2, l2):
        raise FocusOnDirectrix("common tangent axiom requires foci off their directrices")
    if l1 == l2 and f1 == f2:
        raise DegenerateConfiguration("common tangents of a parabola with itself")
    x0 = perpendicular_foot(l1, f1)
    dx, dy = l1.direction()
    # tangent of parabola 1 at parameter t: normal n(t) = f1 - (x0 + t d)
    a_t = [f1.x - x0.x, -dx]
    b_t = [f1.y - x0.y, -dy]
    c_t = [
        (x0.x * x0.x + x0.y * x0.y - f1.x * f1.x - f1.y * f1.y) / 2,
        x0.x * dx + x0.y * dy,
        (dx * dx + dy * dy) / 2,
    ]
    # reflection of f2 across the tangent lies on l2
    k = l2.eval_at(f2)
    n2_t = _pp_add(_pp_mul(a_t, a_t), _pp_mul(b_t, b_t))
    val_t = _pp_add(_pp_add(_pp_scale(a_t, f2.x), _pp_scale(b_t, f2.y)), c_t)
    proj_t = _pp_add(_pp_scale(a_t, l2.a), _pp_scale(b_t, l2.b))
    g = _pp_add(_pp_scale(n2_t, k), _pp_scale(_pp_mul(val_t, proj_t), RealAlg(-2)))
    if not g or len(g) == 1:
        raise DegenerateConfiguration("tangency condition degenerates")
    ts = _real_roots_exact(g)
    if not ts:
        raise NoCommonTangent("no real common tangent")
    lines, contacts = [], []
    for tv in ts:
        la = _pp_eval(a_t, tv)
        lb = _pp_eval(b_t, tv)
        lc = _pp_eval(c_t, tv)
        tang = Line(la, lb, lc)
        foot = Point(x0.x + tv * dx, x0.y + tv * dy)
        contact = line_intersect(tang, perpendicular(l1, foot))
        lines.append(tang)
        contacts.append(contact)
    ref = f2 if f2 != f1 else Point(f1.x + 1, f1.y)
    order = sorted(
        range(len(lines)),
        key=functools.cmp_to_key(
            lambda i, j: _sweep_cmp_safe(f1, ref, contacts[i], contacts[j])
        ),
    )
    return [lines[i] for i in order]


def _sweep_cmp_safe(center: Point, ref: Point, p: Point, q: Point) -> int:
    from .geometry import sweep_compare

    return sweep_compare(center, ref, p, q)


def perpendicular_tangent(l1: Line, f: Point, l2: Line) -> Line:
    """The tangent to the parabola (directrix l1, focus f) perpendicular to l2."""
    if incident(f, l1):
        raise FocusOnDirectrix("tangent axiom requires the focus off the directrix")
    denom = l1.a * l2.b - l1.b * l2.a
    if denom.sign() == 0:
        raise NoSuchTangent("requested direction is the parabola's axis direction")
    s = -l1.eval_at(f) / denom
    x = Point(f.x + s * l2.b, f.y - s * l2.a)
    return perpendicular_bisector(f, x)


def conic_axiom(l: Line, f: Point, a: Point, b: Point) -> Conic:
    """Conic with directrix l, focus f and eccentricity the distance |ab|."""
    if a == b:
        raise ZeroEccentricity("eccentricity endpoints coincide")
    if incident(f, l):
        raise FocusOnDirectrix("conic requires the focus off the directrix")
    return _conic_from_focus_directrix_e2(l, f, dist2(a, b))


# ---------------------------------------------------------------------------
# Intersection axioms.
# ---------------------------------------------------------------------------


def line_intersect(l1: Line, l2: Line) -> Point:
    """The common point of two non-parallel lines."""
    if l1 == l2:
        raise IdenticalLines("intersection of identical lines")
    if l1.is_parallel_to(l2):
        raise ParallelLines("intersection of parallel lines")
    det = l1.a * l2.b - l2.a * l1.b
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return Point(x, y)


def _line_circle_points(l: Line, c: Circle) -> list[Point]:
    """Unordered exact intersection points of a line and a circle."""
    foot = perpendicular_foot(l, c.center)
    disc = c.r2 - dist2(foot, c.center)
    s = disc.sign()
    if s < 0:
        return []
    if s == 0:
        return [foot]
    dx, dy = l.direction()
    q = sqrt(disc / (dx * dx + dy * dy))
    return [Point(foot.x + q * dx, foot.y + q * dy), Point(foot.x - q * dx, foot.y - q * dy)]


def circle_intersect(c1: Circle, c2: Circle) -> list[Point]:
    """Intersection points of two circles, ordered by the radial sweep
    centered at c1's center toward c2's center."""
    if c1 == c2:
        raise IdenticalCircles("intersection of identical circles")
    la = 2 * (c2.cx - c1.cx)
    lb = 2 * (c2.cy - c1.cy)
    if la.sign() == 0 and lb.sign() == 0:
        return []  # concentric with different radii
    p1 = c1.cx * c1.cx + c1.cy * c1.cy - c1.r2
    p2 = c2.cx * c2.cx + c2.cy * c2.cy - c2.r2
    axis = Line(la, lb, p1 - p2)
    pts = _line_circle_points(axis, c1)
    pts = [p for p in pts if incident(p, c2)]
    if len(pts) == 2:
        return sweep_sort(c1.center, c2.center, pts)
    return pts


def line_circle_intersect(l: Line, c: Circle) -> list[Point]:
    """Intersection points of a line and a circle.

    For a chord that is not a diameter, the pair (p1, p2) makes the angle
    p2-center-p1 positive.  For a diameter the points are swept from the
    half-line center->origin, falling back to the +x direction when the
    center is the origin.
    """
    pts = _line_circle_points(l, c)
    if len(pts) < 2:
        return pts
    center = c.center
    if incident(center, l):
        ref = ORIGIN if center != ORIGIN else Point(center.x + 1, center.y)
        return sweep_sort(center, ref, pts)
    pa, pb = pts
    cross = ((pb.x - center.x) * (pa.y - center.y) - (pb.y - center.y) * (pa.x - center.x)).sign()
    return [pa, pb] if cross > 0 else [pb, pa]


def line_unit_circle_intersect(l: Line) -> list[Point]:
    """Intersections with the fixed unit circle (the rusty-compass axiom)."""
    return line_circle_intersect(l, UNIT_CIRCLE)


# -- conic intersections -----------------------------------------------------


def _as_y_poly(c: Curve) -> list[list[RealAlg]]:
    """Curve equation as a polynomial in y with coefficient polynomials in x,
    index = y-degree, entries lowest-x-degree first, trimmed exactly."""
    zero = RealAlg(0)
    if isinstance(c, Line):
        packed = [[c.c, c.a], [c.b]]
    elif isinstance(c, Circle):
        packed = [
            [c.cx * c.cx + c.cy * c.cy - c.r2, -2 * c.cx, RealAlg(1)],
            [-2 * c.cy],
            [RealAlg(1)],
        ]
    elif isinstance(c, Conic):
        packed = [[c.F, c.D, c.A], [c.E, c.B], [c.C]]
    else:
        raise TypeError(f"not a curve: {c!r}")
    out = [_pp_trim(list(row)) for row in packed]
    while out and not out[-1]:
        out.pop()
    if not out:
        out = [[zero]]
    return out


def _y_resultant(u: list[list[RealAlg]], v: list[list[RealAlg]]) -> list[RealAlg]:
    """Resultant in y of two curves in _as_y_poly form (y-degrees <= 2)."""
    du, dv = len(u) - 1, len(v) - 1
    if du < dv:
        u, v, du, dv = v, u, dv, du
    if dv == 0:
        return v[0]
    u0 = u[0]
    u1 = u[1] if du >= 1 else []
    u2 = u[2] if du >= 2 else []
    v0, v1 = v[0], v[1]
    if du == 1:
        return _pp_add(_pp_mul(u1, v0), _pp_mul(_pp_mul(u0, v1), [RealAlg(-1)]))
    if dv == 1:
        t0 = _pp_mul(u2, _pp_mul(v0, v0))
        t1 = _pp_mul(_pp_mul(u1, v0), v1)
        t2 = _pp_mul(u0, _pp_mul(v1, v1))
        return _pp_add(_pp_add(t0, _pp_mul(t1, [RealAlg(-1)])), t2)
    v2 = v[2]
    m0 = _pp_add(_pp_mul(u2, v0), _pp_mul(_pp_mul(u0, v2), [RealAlg(-1)]))
    m1 = _pp_add(_pp_mul(u2, v1), _pp_mul(_pp_mul(u1, v2), [RealAlg(-1)]))
    m2 = _pp_add(_pp_mul(u1, v0), _pp_mul(_pp_mul(u0, v1), [RealAlg(-1)]))
    return _pp_add(_pp_mul(m0, m0), _pp_mul(_pp_mul(m1, m2), [RealAlg(-1)]))


def _y_candidates(curve_poly: list[list[RealAlg]], x: RealAlg) -> Optional[list[RealAlg]]:
    """Exact y solutions of one curve at a fixed x; None when unconstrained."""
    vals = [_pp_eval(row, x) for row in curve_poly]
    while vals and vals[-1].sign() == 0:
        vals.pop()
    if len(vals) <= 1:
        return None if not vals or vals[0].sign() == 0 else []
    if len(vals) == 2:
        return [-vals[0] / vals[1]]
    a0, a1, a2 = vals
    disc = a1 * a1 - 4 * a2 * a0
    s = disc.sign()
    if s < 0:
        return []
    if s == 0:
        return [-a1 / (2 * a2)]
    r = sqrt(disc)
    return [(-a1 + r) / (2 * a2), (-a1 - r) / (2 * a2)]


def conic_intersections(kind: str, u: Curve, v: Curve) -> list[Point]:
    """Real intersection points of conic-involving curve pairs.

    kind is one of 'conic-conic', 'line-conic', 'circle-conic'.  The x
    coordinates come from a resultant of y-degree <= 2 polynomials, the y
    values from back-substitution, and every candidate is filtered by
    exact incidence with both curves.  Ordering follows the radial-sweep
    conventions with curve centers where they exist; centerless cases fall
    back to a deterministic canonical order (see conic_ordering_note).
    """
    expected = {
        "conic-conic": (Conic, Conic),
        "line-conic": (Line, Conic),
        "circle-conic": (Circle, Conic),
    }
    if kind not in expected:
        raise ValueError(f"unknown intersection kind {kind!r}")
    tu, tv = expected[kind]
    if not isinstance(u, tu) or not isinstance(v, tv):
        raise TypeError(f"{kind} expects ({tu.__name__}, {tv.__name__})")
    if u == v:
        raise SharedComponent("intersection of identical curves")
    pu, pv = _as_y_poly(u), _as_y_poly(v)
    res = _y_resultant(pu, pv)
    if not res:
        raise SharedComponent("curves share a component")
    if len(res) == 1:
        return []
    xs = _real_roots_exact(res)
    pts: dict = {}
    for x in xs:
        cands: list[RealAlg] = []
        for cp in (pu, pv):
            ys = _y_candidates(cp, x)
            if ys is not None:
                cands.extend(ys)
        for y in cands:
            p = Point(x, y)
            if p.key() not in pts and incident(p, u) and incident(p, v):
                pts[p.key()] = p
    points = [pts[k] for k in sorted(pts)]
    return _order_conic_points(kind, u, v, points)


def _curve_center(c: Curve) -> Optional[Point]:
    if isinstance(c, Circle):
        return c.center
    if isinstance(c, Conic):
        return c.center()
    return None


def _coordinate_sort(points: list[Point]) -> list[Point]:
    """Deterministic centerless fallback: numeric lexicographic (x, y)."""
    import functools as _ft

    def cmp(p: Point, q: Point) -> int:
        c = p.x._compare(q.x)
        return c if c else p.y._compare(q.y)

    return sorted(points, key=_ft.cmp_to_key(cmp))


def _order_conic_points(kind: str, u: Curve, v: Curve, points: list[Point]) -> list[Point]:
    if len(points) < 2:
        return points
    if kind == "line-conic":
        center = _curve_center(v)
        if center is None:
            return _coordinate_sort(points)  # flagged via conic_ordering_note
        if incident(center, u):
            ref = ORIGIN if center != ORIGIN else Point(center.x + 1, center.y)
            return sweep_sort(center, ref, points)
        pa, pb = points
        cross = (
            (pb.x - center.x) * (pa.y - center.y) - (pb.y - center.y) * (pa.x - center.x)
        ).sign()
        return [pa, pb] if cross > 0 else [pb, pa]
    center = _curve_center(u)
    refp = _curve_center(v)
    if center is None:
        return _coordinate_sort(points)
    if refp is None or refp == center:
        refp = Point(center.x + 1, center.y)
    return sweep_sort(center, refp, points)


def conic_ordering_note(kind: str, u: Curve, v: Curve) -> Optional[str]:
    """A metadata flag when the sweep convention has no defined center."""
    if kind == "line-conic" and _curve_center(v) is None:
        return "centerless-conic-canonical-order"
    if kind != "line-conic":
        if _curve_center(u) is None:
            return "centerless-conic-canonical-order"
        refp = _curve_center(v)
        if refp is None or refp == _curve_center(u):
            return "degenerate-sweep-reference"
    return None


# ---------------------------------------------------------------------------
# Axiom registry: wire names, kinds and argument signatures.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomId:
    """A named axiom: wire name, construction/intersection kind, and the
    argument kinds it consumes (P point, L line, C circle, K conic)."""

    name: str
    kind: str  # "construction" | "intersection"
    args: tuple[str, ...]
    apply: Callable

    def __repr__(self):
        return f"AxiomId({self.name})"


def _listify(fn, n=None):
    def wrapped(*args):
        out = fn(*args)
        if isinstance(out, (list, tuple)):
            return list(out)
        return [out]

    return wrapped


AXIOMS: dict[str, AxiomId] = {
    a.name: a
    for a in [
        AxiomId("Line", "construction", ("P", "P"), _listify(line_through)),
        AxiomId("Circle", "construction", ("P", "P"), _listify(circle_center_through)),
        AxiomId("RadiusCircle", "construction", ("P", "P", "P"), _listify(radius_circle)),
        AxiomId("Bisector", "construction", ("L", "L"), _listify(bisectors)),
        AxiomId(
            "PerpendicularBisector", "construction", ("P", "P"), _listify(perpendicular_bisector)
        ),
        AxiomId("Perpendicular", "construction", ("L", "P"), _listify(perpendicular)),
        AxiomId(
            "PointPerpendicular", "construction", ("P", "P", "P"), _listify(point_perpendicular)
        ),
        AxiomId("Tangent", "construction", ("L", "P", "P"), _listify(tangents)),
        AxiomId(
            "CommonTangent", "construction", ("L", "P", "L", "P"), _listify(common_tangents)
        ),
        AxiomId(
            "PerpendicularTangent", "construction", ("L", "P", "L"), _listify(perpendicular_tangent)
        ),
        AxiomId("Conic", "construction", ("L", "P", "P", "P"), _listify(conic_axiom)),
        AxiomId("LineIntersect", "intersection", ("L", "L"), _listify(line_intersect)),
        AxiomId("CircleIntersect", "intersection", ("C", "C"), _listify(circle_intersect)),
        AxiomId(
            "LineCircleIntersect", "intersection", ("L", "C"), _listify(line_circle_intersect)
        ),
        AxiomId(
            "ConicIntersect",
            "intersection",
            ("K", "K"),
            _listify(lambda u, v: conic_intersections("conic-conic", u, v)),
        ),
        AxiomId(
            "LineConicIntersect",
            "intersection",
            ("L", "K"),
            _listify(lambda l, k: conic_intersections("line-conic", l, k)),
        ),
        AxiomId(
            "CircleConicIntersect",
            "intersection",
            ("C", "K"),
            _listify(lambda c, k: conic_intersections("circle-conic", c, k)),
        ),
        AxiomId(
            "LineUnitCircleIntersect",
            "intersection",
            ("L",),
            _listify(line_unit_circle_intersect),
        ),
    ]
}

CONSTRUCTION_AXIOMS = frozenset(a.name for a in AXIOMS.values() if a.kind == "construction")
INTERSECTION_AXIOMS = frozenset(a.name for a in AXIOMS.values() if a.kind == "intersection")


def arg_kind_of(value) -> str:
    if isinstance(value, Point):
        return "P"
    if isinstance(value, Line):
        return "L"
    if isinstance(value, Circle):
        return "C"
    if isinstance(value, Conic):
        return "K"
    raise TypeError(f"not an axiom argument: {value!r}")


def apply_axiom(name: str, args: Sequence) -> list:
    """Run an axiom by wire name with type-checked arguments."""
    if name not in AXIOMS:
        raise KeyError(f"unknown axiom {name!r}")
    ax = AXIOMS[name]
    if len(args) != len(ax.args):
        raise TypeError(f"{name} takes {len(ax.args)} arguments, got {len(args)}")
    for v, kind in zip(args, ax.args):
        if arg_kind_of(v) != kind:
            raise TypeError(f"{name} expects argument kinds {ax.args}")
    return ax.apply(*args)
