"""Tools: named bundles of construction and intersection axioms.

A tool abstracts a drawing instrument by what it can do.  The registry
carries the standard instruments (ruler, compass variants, the origami
family, conics, and the ruler-plus-fixed-circle used for the rusty
compass results); subsumption between tools is plain set inclusion of
their axiom names.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import AXIOMS, CONSTRUCTION_AXIOMS, INTERSECTION_AXIOMS

__all__ = ["Tool", "UnknownTool", "TOOLS", "tool_get", "tool_subsumes"]


class UnknownTool(KeyError):
    pass


@dataclass(frozen=True)
class Tool:
    name: str
    constructions: frozenset[str]
    intersections: frozenset[str]

    def __post_init__(self):
        if not self.constructions or not self.intersections:
            raise ValueError("a tool needs nonempty construction and intersection sets")
        bad = [a for a in self.constructions if a not in CONSTRUCTION_AXIOMS]
        bad += [a for a in self.intersections if a not in INTERSECTION_AXIOMS]
        if bad:
            raise ValueError(f"axiom kind mismatch or unknown axiom: {bad}")

    @property
    def axioms(self) -> frozenset[str]:
        return self.constructions | self.intersections

    def __contains__(self, axiom_name: str) -> bool:
        return axiom_name in self.axioms

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "constructions": sorted(self.constructions),
            "intersections": sorted(self.intersections),
        }


def _tool(name, constructions, intersections) -> Tool:
    return Tool(name, frozenset(constructions), frozenset(intersections))


TOOLS: dict[str, Tool] = {
    t.name: t
    for t in [
        _tool("R", {"Line"}, {"LineIntersect"}),
        _tool("C", {"Circle", "RadiusCircle"}, {"CircleIntersect"}),
        _tool(
            "RC",
            {"Line", "Circle", "RadiusCircle"},
            {"LineIntersect", "CircleIntersect", "LineCircleIntersect"},
        ),
        _tool("EC", {"Circle"}, {"CircleIntersect"}),
        _tool(
            "REC",
            {"Line", "Circle"},
            {"LineIntersect", "CircleIntersect", "LineCircleIntersect"},
        ),
        _tool(
            "O",
            {
                "Line",
                "PerpendicularBisector",
                "Bisector",
                "Perpendicular",
                "Tangent",
                "CommonTangent",
                "PerpendicularTangent",
            },
            {"LineIntersect"},
        ),
        _tool("TO", {"Line", "PerpendicularBisector"}, {"LineIntersect"}),
        _tool("PO", {"Line", "PerpendicularBisector", "Bisector"}, {"LineIntersect"}),
        _tool(
            "CO",
            {"Line", "Circle", "RadiusCircle", "Conic"},
            {
                "LineIntersect",
                "CircleIntersect",
                "LineCircleIntersect",
                "LineConicIntersect",
                "CircleConicIntersect",
                "ConicIntersect",
            },
        ),
        _tool("RP", {"Line"}, {"LineIntersect", "LineUnitCircleIntersect"}),
    ]
}


def tool_get(name: str) -> Tool:
    try:
        return TOOLS[name]
    except KeyError:
        raise UnknownTool(name) from None


def tool_subsumes(tool: Tool, other: Tool) -> bool:
    """True when ``other``'s axioms are a subset of ``tool``'s (so the first
    tool can do whatever the second can, axiom for axiom)."""
    return other.constructions <= tool.constructions and other.intersections <= tool.intersections
