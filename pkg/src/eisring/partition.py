"""Set partitioning of a reduced residue system into additive cosets.

A constellation is split into equal-sized cosets of an additive subgroup so
that the minimum distance inside each coset grows.  Two constructions are
available, chosen by the shape of the modulus eta = t*(m + n*rho):

* primitive modulus (t = 1): the ring is a line of N(eta) integer classes;
  for N = c*d the multiples of c form a subgroup whose c cosets each carry
  minimum squared Euclidean distance at least c;
* non-primitive modulus (t = c*d): grid points whose coordinates are both
  multiples of c form a subgroup with c^2 cosets of minimum Euclidean
  distance at least c.

Chains of factors refine recursively.  Advertised distances are never taken
from the construction: every node's minima are recomputed exhaustively over
its points, so the tree is self-certifying.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from math import prod

from .eisenstein import Eisenstein
from .errors import BadFactorOfT, NotAFactorization, NotPrimitiveModulus
from .metrics import hex_distance, sq_euclid_distance
from .quotient import SCHEMA, Modulus, mu_reduce

__all__ = [
    "PartitionNode",
    "subset_min_distances",
    "subgroup_primitive",
    "subgroup_nonprimitive",
    "recursive_partition",
    "partition_json",
]


@dataclass(frozen=True)
class PartitionNode:
    """One subset in the partition tree.

    ``label`` is the chain of coset indices from the root; ``min_d2`` and
    ``min_dhex`` are exhaustively verified pairwise minima (math.inf for a
    singleton).  Children, when present, partition ``points`` into cosets
    of equal size.
    """

    label: tuple[int, ...]
    points: tuple[Eisenstein, ...]
    min_d2: int | float
    min_dhex: int | float
    children: tuple["PartitionNode", ...]

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


def subset_min_distances(points) -> tuple[int | float, int | float]:
    """Exhaustive pairwise minima of (squared Euclidean, hexagonal) distance."""
    pts = list(points)
    if len(pts) < 2:
        return math.inf, math.inf
    best_d2: int | float = math.inf
    best_hex: int | float = math.inf
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            d2 = sq_euclid_distance(p, q)
            if d2 < best_d2:
                best_d2 = d2
            dh = hex_distance(p, q)
            if dh < best_hex:
                best_hex = dh
    return best_d2, best_hex


def _node(label, points, children=()) -> PartitionNode:
    d2, dh = subset_min_distances(points)
    return PartitionNode(
        label=label, points=tuple(points), min_d2=d2, min_dhex=dh, children=tuple(children)
    )


def _build_line(mod: Modulus, label, base: int, stride: int, factors) -> PartitionNode:
    size = mod.norm
    points = [mu_reduce(Eisenstein(base + stride * j, 0), mod) for j in range(size // stride)]
    children = []
    if factors:
        c = factors[0]
        children = [
            _build_line(mod, label + (i,), base + stride * i, stride * c, factors[1:])
            for i in range(c)
        ]
    return _node(label, points, children)


def _build_grid(mod: Modulus, label, bx: int, by: int, step: int, factors) -> PartitionNode:
    points = [
        mu_reduce(Eisenstein(bx + step * u, by + step * v), mod)
        for v in range(mod.grid_height // step)
        for u in range(mod.grid_width // step)
    ]
    children = []
    if factors:
        c = factors[0]
        children = [
            _build_grid(mod, label + (j * c + i,), bx + step * i, by + step * j, step * c, factors[1:])
            for j in range(c)
            for i in range(c)
        ]
    return _node(label, points, children)


def recursive_partition(mod: Modulus, factors) -> PartitionNode:
    """Refine the constellation along a chain of split factors.

    Each level splits every subset by the next factor: c cosets per subset
    on the line (primitive modulus, product of factors dividing N(eta)),
    c^2 per subset on the grid (non-primitive, product dividing t).  An
    empty chain returns the root alone.
    """
    factors = tuple(int(c) for c in factors)
    if any(c < 1 for c in factors):
        raise NotAFactorization("split factors must be positive")
    if mod.t == 1:
        if mod.norm % prod(factors) != 0:
            raise NotAFactorization(
                f"product {prod(factors)} does not divide the ring size {mod.norm}"
            )
        return _build_line(mod, (), 0, 1, factors)
    if mod.t % prod(factors) != 0:
        raise BadFactorOfT(
            f"product {prod(factors)} does not divide the content t = {mod.t}"
        )
    return _build_grid(mod, (), 0, 0, 1, factors)


def subgroup_primitive(mod: Modulus, c: int, d: int) -> PartitionNode:
    """Split a primitive-modulus ring of size c*d into c cosets of size d.

    Coset k collects the classes of k, k + c, k + 2c, ...; coset 0 is the
    subgroup itself.  Each coset's minima are certified exhaustively.
    """
    if mod.t != 1:
        raise NotPrimitiveModulus(f"modulus {mod.eta} has content t = {mod.t} != 1")
    if c < 1 or d < 1 or c * d != mod.norm:
        raise NotAFactorization(f"{c} * {d} != ring size {mod.norm}")
    return _build_line(mod, (), 0, 1, (c,))


def subgroup_nonprimitive(mod: Modulus, c: int, d: int) -> PartitionNode:
    """Split a non-primitive ring (t = c*d) into c^2 grid cosets.

    The subgroup holds the grid points with both coordinates multiples of
    c; the coset of representative i + j*rho (0 <= i, j < c, row-major)
    gets child index j*c + i.
    """
    if c < 1 or d < 1 or c * d != mod.t:
        raise BadFactorOfT(f"{c} * {d} != content t = {mod.t}")
    return _build_grid(mod, (), 0, 0, 1, (c,))


def _distance_json(value: int | float):
    return None if value == math.inf else value


def _node_json(node: PartitionNode) -> dict:
    return {
        "label": list(node.label),
        "points": [[p.a, p.b] for p in node.points],
        "min_d2": _distance_json(node.min_d2),
        "min_dhex": _distance_json(node.min_dhex),
        "children": [_node_json(child) for child in node.children],
    }


def partition_json(mod: Modulus, factors, root: PartitionNode, indent: int | None = 2) -> str:
    doc = {
        "schema": SCHEMA,
        "kind": "partition",
        "modulus": {
            "given": [mod.eta.a, mod.eta.b],
            "working": [mod.working_eta.a, mod.working_eta.b],
            "size": mod.norm,
        },
        "factors": [int(c) for c in factors],
        "tree": _node_json(root),
    }
    return json.dumps(doc, indent=indent)
