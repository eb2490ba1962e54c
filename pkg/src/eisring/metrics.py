"""Distance measures on Eisenstein integers.

The hexagonal weight of a + b*rho is

    min(|a| + |b|, |a - b| + |a|, |a - b| + |b|),

the least number of unit steps along the six lattice directions (multiples
of pi/3) needed to reach the point.  Squared Euclidean distance is the norm
of the difference.  Vector forms sum the componentwise distances.
"""

from __future__ import annotations

from collections.abc import Sequence

from .eisenstein import Eisenstein
from .errors import LengthMismatch
from .quotient import Modulus

__all__ = [
    "hex_weight",
    "hex_distance",
    "vector_hex_distance",
    "sq_euclid_distance",
    "vector_sq_euclid_distance",
    "min_class_hex_weight",
]


def hex_weight(x: Eisenstein) -> int:
    a, b = x.a, x.b
    return min(abs(a) + abs(b), abs(a - b) + abs(a), abs(a - b) + abs(b))


def hex_distance(x: Eisenstein, y: Eisenstein) -> int:
    """Hexagonal weight of the difference; a metric on the lattice."""
    return hex_weight(x - y)


def sq_euclid_distance(x: Eisenstein, y: Eisenstein) -> int:
    """Squared Euclidean distance N(x - y); always an integer."""
    return (x - y).norm()


def vector_hex_distance(xs: Sequence[Eisenstein], ys: Sequence[Eisenstein]) -> int:
    if len(xs) != len(ys):
        raise LengthMismatch(f"vector lengths differ: {len(xs)} vs {len(ys)}")
    return sum(hex_distance(x, y) for x, y in zip(xs, ys))


def vector_sq_euclid_distance(xs: Sequence[Eisenstein], ys: Sequence[Eisenstein]) -> int:
    if len(xs) != len(ys):
        raise LengthMismatch(f"vector lengths differ: {len(xs)} vs {len(ys)}")
    return sum(sq_euclid_distance(x, y) for x, y in zip(xs, ys))


def min_class_hex_weight(delta: Eisenstein, mod: Modulus) -> int:
    """Least hexagonal weight among the lattice translates nearest to delta.

    Scans delta + (u + v*rho)*eta for u, v in {-1, 0, 1}; the class member
    of minimal hexagonal weight sits in one of the adjacent cells.
    """
    eta = mod.working_eta
    return min(
        hex_weight(delta + Eisenstein(u, v) * eta)
        for u in (-1, 0, 1)
        for v in (-1, 0, 1)
    )
