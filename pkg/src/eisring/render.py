"""Minimal deterministic SVG scatter output for constellations and partitions.

Points are drawn on the complex plane with a 40-unit lattice spacing,
rho at (-1/2, sqrt(3)/2) and the mathematical y axis pointing up (SVG y
coordinates are negated).  A <desc> element carries the machine-readable
metadata, including certified distances for partitions.
"""

from __future__ import annotations

import json
import math
from xml.sax.saxutils import escape

from .constellation import Constellation, planar_coordinates
from .partition import PartitionNode
from .quotient import SCHEMA, Modulus

LATTICE_SPACING = 40.0
POINT_RADIUS = 7.0
MARGIN = 30.0

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
    "#98df8a", "#ff9896", "#c5b0d5", "#c49c94",
)


def _svg(points_with_colors, metadata: dict) -> str:
    coords = [
        (LATTICE_SPACING * x, -LATTICE_SPACING * y, color)
        for (x, y), color in points_with_colors
    ]
    xs = [c[0] for c in coords] or [0.0]
    ys = [c[1] for c in coords] or [0.0]
    min_x, max_x = min(xs) - MARGIN, max(xs) + MARGIN
    min_y, max_y = min(ys) - MARGIN, max(ys) + MARGIN
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{min_x:.2f} {min_y:.2f} {max_x - min_x:.2f} {max_y - min_y:.2f}">',
        f"<desc>{escape(json.dumps(metadata, sort_keys=True))}</desc>",
    ]
    for cx, cy, color in coords:
        lines.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{POINT_RADIUS}" fill="{color}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def constellation_svg(c: Constellation) -> str:
    meta = {
        "schema": SCHEMA,
        "kind": "constellation",
        "family": c.kind,
        "modulus": [c.modulus.a, c.modulus.b],
        "size": c.size,
        "lattice_spacing": LATTICE_SPACING,
    }
    pts = [(planar_coordinates(p), PALETTE[0]) for p in c.points]
    return _svg(pts, meta)


def _finite(value):
    return None if value == math.inf else value


def partition_svg(mod: Modulus, root: PartitionNode) -> str:
    """One color per top-level coset; leaves inherit their ancestor's color."""
    meta = {
        "schema": SCHEMA,
        "kind": "partition",
        "modulus": [mod.eta.a, mod.eta.b],
        "size": mod.norm,
        "lattice_spacing": LATTICE_SPACING,
        "root_min_d2": _finite(root.min_d2),
        "root_min_dhex": _finite(root.min_dhex),
        "cosets": [
            {
                "label": list(child.label),
                "size": len(child.points),
                "min_d2": _finite(child.min_d2),
                "min_dhex": _finite(child.min_dhex),
            }
            for child in root.children
        ],
    }
    pts = []
    if root.children:
        for idx, child in enumerate(root.children):
            color = PALETTE[idx % len(PALETTE)]
            for p in child.points:
                pts.append((planar_coordinates(p), color))
    else:
        pts = [(planar_coordinates(p), PALETTE[0]) for p in root.points]
    return _svg(pts, meta)
