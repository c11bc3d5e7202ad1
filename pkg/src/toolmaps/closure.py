"""Layer-closure engine: materialize the constructible sets of a map.

A map is a tool with an initial configuration of points and curves.  Each
expansion step applies every construction axiom of the tool to the
previous layer in all possible ordered ways, then every intersection
axiom to the enlarged curve set, deduplicating by canonical equality.
The full constructible sets are usually infinite, so expansion runs under
explicit budgets and reports what it skipped; it never claims
non-membership, only "not found within budget".

Expansion is deterministic for fixed inputs regardless of the worker
count: candidates are merged in canonical sorted order before indices
are assigned.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .axioms import (
    AXIOMS,
    UNIT_CIRCLE,
    AxiomError,
    apply_axiom,
    arg_kind_of,
    conic_ordering_note,
)
from .geometry import Circle, Conic, Curve, GeometryError, Line, Point, curve_from_json
from .realalg import DegreeOverflow, RealAlg, degree_cap
from .tools import Tool, tool_get

__all__ = [
    "Budget",
    "BudgetExhausted",
    "Layer",
    "MapState",
    "MembershipResult",
    "new_map",
    "map_preset",
    "PRESETS",
    "expand_layer",
    "expand_to_depth",
    "contains_point",
    "map_from_json",
]


class BudgetExhausted(RuntimeError):
    """A per-layer cap was hit; the partial layer was discarded."""


@dataclass(frozen=True)
class Budget:
    max_depth: int = 4
    max_curves: int = 10_000
    max_points: int = 10_000
    max_degree: int = 64

    def __post_init__(self):
        if min(self.max_depth, self.max_curves, self.max_points, self.max_degree) <= 0:
            raise ValueError("budget fields must be positive")


@dataclass(frozen=True)
class Provenance:
    depth: int
    axiom: Optional[str]  # None for initial elements
    inputs: tuple = ()
    note: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "axiom": self.axiom,
            "inputs": [list(ref) for ref in self.inputs],
            **({"note": self.note} if self.note else {}),
        }


@dataclass(frozen=True)
class Layer:
    """A view of one layer: cumulative element counts plus skip diagnostics."""

    depth: int
    curve_count: int
    point_count: int
    skipped: dict


@dataclass(frozen=True)
class MapState:
    """Immutable snapshot of a map's materialized layers."""

    tool: Tool
    curves: tuple
    points: tuple
    curve_prov: tuple
    point_prov: tuple
    layers: tuple  # Layer objects, layers[0] is the initial configuration
    constructed_marker: tuple = (0, 0)  # (curves, points) already used for constructions
    intersected_marker: int = 0  # curves already used for intersections

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    def curve_index(self) -> dict:
        return {_curve_key(c): i for i, c in enumerate(self.curves)}

    def point_index(self) -> dict:
        return {p.key(): i for i, p in enumerate(self.points)}

    def layer_counts(self, depth: int) -> tuple[int, int]:
        layer = self.layers[depth]
        return (layer.curve_count, layer.point_count)

    def point_depth(self, p: Point) -> Optional[int]:
        idx = self.point_index().get(p.key())
        return None if idx is None else self.point_prov[idx].depth

    def to_json(self) -> dict:
        prov = [
            {"kind": "curve", "index": i, **pr.to_json()} for i, pr in enumerate(self.curve_prov)
        ] + [
            {"kind": "point", "index": i, **pr.to_json()} for i, pr in enumerate(self.point_prov)
        ]
        skipped: dict = {}
        for layer in self.layers:
            for k, v in layer.skipped.items():
                skipped[k] = skipped.get(k, 0) + v
        return {
            "tool": self.tool.name,
            "depth": self.depth,
            "curves": [c.to_json() for c in self.curves],
            "points": [p.to_json() for p in self.points],
            "provenance": prov,
            "skipped": skipped,
            "layers": [
                {
                    "depth": l.depth,
                    "curve_count": l.curve_count,
                    "point_count": l.point_count,
                    "skipped": dict(l.skipped),
                }
                for l in self.layers
            ],
        }


def _curve_key(c: Curve):
    return c.key()


def new_map(tool: Union[Tool, str], points: Iterable[Point] = (), curves: Iterable[Curve] = ()) -> MapState:
    """A fresh map from a tool and an initial configuration."""
    if isinstance(tool, str):
        tool = tool_get(tool)
    pts, cvs, pseen, cseen = [], [], set(), set()
    for c in curves:
        k = _curve_key(c)
        if k not in cseen:
            cseen.add(k)
            cvs.append(c)
    for p in points:
        k = p.key()
        if k not in pseen:
            pseen.add(k)
            pts.append(p)
    if not pts and not cvs:
        raise ValueError("initial configuration must be nonempty")
    prov0 = Provenance(0, None)
    return MapState(
        tool=tool,
        curves=tuple(cvs),
        points=tuple(pts),
        curve_prov=tuple(prov0 for _ in cvs),
        point_prov=tuple(prov0 for _ in pts),
        layers=(Layer(0, len(cvs), len(pts), {}),),
    )


# -- Table-based initial configurations -------------------------------------

_ZERO_ONE = [Point(0, 0), Point(1, 0)]

PRESETS: dict[str, dict] = {
    "R": {"tool": "R", "points": [Point(1, 0), Point(2, 0), Point(0, 1), Point(0, 2)]},
    "C": {"tool": "C", "points": _ZERO_ONE},
    "RC": {"tool": "RC", "points": _ZERO_ONE},
    "EC": {"tool": "EC", "points": _ZERO_ONE},
    "REC": {"tool": "REC", "points": _ZERO_ONE},
    "O": {"tool": "O", "points": _ZERO_ONE},
    "PO": {"tool": "PO", "points": _ZERO_ONE},
    "CO": {"tool": "CO", "points": _ZERO_ONE},
    "TO": {
        "tool": "TO",
        "points": [Point(0, 0)],
        "curves": [Line(0, 1, 0), Line(1, 0, 0)],
    },
    "RP": {
        "tool": "RP",
        "points": [Point(0, 0), Point(2, 0), Point(0, 2)],
        "curves": [UNIT_CIRCLE],
    },
}


def map_preset(name: str) -> MapState:
    """Named map presets: the Table-1 initial sets (complex labels read as
    coordinate points), the fixed-point origami configuration, and the
    ruler-with-unit-circle map."""
    if name not in PRESETS:
        raise KeyError(f"unknown map preset {name!r}")
    spec = PRESETS[name]
    return new_map(spec["tool"], spec.get("points", ()), spec.get("curves", ()))


def map_from_json(data: dict) -> MapState:
    points = [Point.from_json(p) for p in data.get("initial", {}).get("points", [])]
    curves = [curve_from_json(c) for c in data.get("initial", {}).get("curves", [])]
    return new_map(data["tool"], points, curves)


# -- expansion ---------------------------------------------------------------


def _typed_pools(curves: Sequence[Curve], points: Sequence[Point]) -> dict:
    pools = {"P": list(range(len(points))), "L": [], "C": [], "K": []}
    for i, c in enumerate(curves):
        if isinstance(c, Line):
            pools["L"].append(i)
        elif isinstance(c, Circle):
            pools["C"].append(i)
        elif isinstance(c, Conic):
            pools["K"].append(i)
    return pools


def _jobs_for(
    axiom_names: Iterable[str],
    pools: dict,
    fresh_after: dict,
) -> list[tuple[str, tuple]]:
    """All ordered argument tuples for the axioms, skipping tuples whose
    inputs were all available the last time this phase ran (their outputs
    are already stored)."""
    jobs = []
    for name in sorted(axiom_names):
        ax = AXIOMS[name]
        slots = [pools[k] for k in ax.args]
        if any(not s for s in slots):
            continue
        for combo in itertools.product(*slots):
            if all(
                idx < fresh_after[kind] for idx, kind in zip(combo, ax.args)
            ):
                continue
            jobs.append((name, combo))
    return jobs


def _run_jobs(jobs, curves, points, budget, workers):
    """Execute axiom jobs; returns (candidates, degree_skips) where
    candidates maps output key -> (value, provenance record)."""

    def run_chunk(chunk):
        out = []
        skips = 0
        with degree_cap(budget.max_degree):
            for name, combo in chunk:
                ax = AXIOMS[name]
                args = []
                for idx, kind in zip(combo, ax.args):
                    args.append(points[idx] if kind == "P" else curves[idx])
                try:
                    results = ax.apply(*args)
                except DegreeOverflow:
                    skips += 1
                    continue
                except AxiomError:
                    continue
                except GeometryError:
                    continue
                note = None
                if name in ("ConicIntersect", "LineConicIntersect", "CircleConicIntersect"):
                    kind_name = {
                        "ConicIntersect": "conic-conic",
                        "LineConicIntersect": "line-conic",
                        "CircleConicIntersect": "circle-conic",
                    }[name]
                    note = conic_ordering_note(kind_name, args[0], args[1])
                inputs = tuple(
                    ("p" if kind == "P" else "c", idx) for idx, kind in zip(combo, ax.args)
                )
                for value in results:
                    out.append((value, name, inputs, note))
        return out, skips

    if workers <= 1 or len(jobs) < 2:
        chunks = [jobs]
    else:
        chunks = [jobs[i::workers] for i in range(workers)]
        chunks = [c for c in chunks if c]
    if len(chunks) == 1:
        results = [run_chunk(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            results = list(pool.map(run_chunk, chunks))

    candidates: dict = {}
    degree_skips = 0
    for out, skips in results:
        degree_skips += skips
        for value, name, inputs, note in out:
            key = value.key() if isinstance(value, Point) else _curve_key(value)
            prov = (name, inputs, note)
            if key not in candidates or prov < candidates[key][1]:
                candidates[key] = (value, prov)
    return candidates, degree_skips


def expand_layer(state: MapState, budget: Budget, workers: int = 1) -> MapState:
    """Append one layer: new curves from all construction axioms over the
    previous layer, then new points from all intersection axioms over the
    enlarged curve set.  Raises BudgetExhausted (leaving the input state
    untouched) when a cap would be exceeded."""
    if state.depth >= budget.max_depth:
        raise BudgetExhausted(f"depth {state.depth} already at max_depth {budget.max_depth}")
    depth = state.depth + 1
    skipped: dict = {}

    # phase 1: constructions over U_{n-1}
    pools = _typed_pools(state.curves, state.points)
    fresh = {
        "P": state.constructed_marker[1],
        "L": state.constructed_marker[0],
        "C": state.constructed_marker[0],
        "K": state.constructed_marker[0],
    }
    jobs = _jobs_for(state.tool.constructions, pools, fresh)
    if len(jobs) > budget.max_curves:
        raise BudgetExhausted(
            f"layer {depth}: {len(jobs)} construction candidates exceed max_curves "
            f"{budget.max_curves}"
        )
    candidates, skips = _run_jobs(jobs, state.curves, state.points, budget, workers)
    if skips:
        skipped["degree_overflow"] = skipped.get("degree_overflow", 0) + skips

    curve_idx = state.curve_index()
    new_curves = []
    for key in sorted(k for k in candidates if k not in curve_idx):
        value, (axname, inputs, note) = candidates[key]
        if axname == "Bisector" and _is_midline(value, inputs, state):
            note = "parallel-midline"
            skipped["parallel_midline"] = skipped.get("parallel_midline", 0) + 1
        new_curves.append((value, Provenance(depth, axname, inputs, note)))
    all_curves = list(state.curves) + [c for c, _ in new_curves]
    if len(all_curves) > budget.max_curves:
        raise BudgetExhausted(
            f"layer {depth}: {len(all_curves)} curves exceed max_curves {budget.max_curves}"
        )

    # phase 2: intersections over [C_n, P_{n-1}]
    pools = _typed_pools(all_curves, state.points)
    fresh = {
        "P": len(state.points),  # no intersection axiom takes points; inert
        "L": state.intersected_marker,
        "C": state.intersected_marker,
        "K": state.intersected_marker,
    }
    jobs = _jobs_for(state.tool.intersections, pools, fresh)
    if len(jobs) > max(budget.max_points, budget.max_curves):
        raise BudgetExhausted(
            f"layer {depth}: {len(jobs)} intersection candidates exceed budget"
        )
    candidates, skips = _run_jobs(jobs, all_curves, state.points, budget, workers)
    if skips:
        skipped["degree_overflow"] = skipped.get("degree_overflow", 0) + skips

    point_idx = state.point_index()
    new_points = []
    for key in sorted(k for k in candidates if k not in point_idx):
        value, (axname, inputs, note) = candidates[key]
        new_points.append((value, Provenance(depth, axname, inputs, note)))
    all_points = list(state.points) + [p for p, _ in new_points]
    if len(all_points) > budget.max_points:
        raise BudgetExhausted(
            f"layer {depth}: {len(all_points)} points exceed max_points {budget.max_points}"
        )

    return MapState(
        tool=state.tool,
        curves=tuple(all_curves),
        points=tuple(all_points),
        curve_prov=state.curve_prov + tuple(pr for _, pr in new_curves),
        point_prov=state.point_prov + tuple(pr for _, pr in new_points),
        layers=state.layers + (Layer(depth, len(all_curves), len(all_points), skipped),),
        constructed_marker=(len(state.curves), len(state.points)),
        intersected_marker=len(all_curves),
    )


def _is_midline(value, inputs, state: MapState) -> bool:
    if len(inputs) != 2:
        return False
    (k1, i1), (k2, i2) = inputs
    try:
        l1, l2 = state.curves[i1], state.curves[i2]
    except IndexError:
        return False
    return isinstance(l1, Line) and isinstance(l2, Line) and l1.is_parallel_to(l2)


def expand_to_depth(state: MapState, depth: int, budget: Budget, workers: int = 1) -> MapState:
    while state.depth < depth:
        state = expand_layer(state, budget, workers)
    return state


@dataclass(frozen=True)
class MembershipResult:
    found: bool
    depth: Optional[int]
    state: MapState
    reason: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "found": self.found,
            "depth": self.depth,
            "reason": self.reason,
            "searched_depth": self.state.depth,
        }


def contains_point(
    state: MapState, target: Point, budget: Budget, workers: int = 1
) -> MembershipResult:
    """First layer depth whose point set contains the target, else a
    not-found-within-budget report (never a non-constructibility claim)."""
    d = state.point_depth(target)
    if d is not None:
        return MembershipResult(True, d, state)
    while state.depth < budget.max_depth:
        try:
            state = expand_layer(state, budget, workers)
        except BudgetExhausted as e:
            return MembershipResult(False, None, state, reason=str(e))
        d = state.point_depth(target)
        if d is not None:
            return MembershipResult(True, d, state)
    return MembershipResult(False, None, state, reason=f"not found within depth {budget.max_depth}")
