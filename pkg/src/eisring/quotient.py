"""Residue systems of Z[rho]/<eta> and the reduce/lift pair between them.

A nonzero modulus eta factors as t*(m + n*rho) with t the gcd of its
coefficients.  Two representative sets of the quotient ring are used side
by side:

* the grid system: x + y*rho with 0 <= x < t*N(m + n*rho), 0 <= y < t;
* the reduced system: the norm-minimal (Voronoi-cell) representative of
  each grid point, produced by ``euclid_divmod``.

``mu_reduce`` maps any element onto the reduced system and ``pi_lift``
recovers the grid representative, so the two are mutually inverse on their
respective systems.  The lift needs a modular inverse of m or n modulo
t*N(m + n*rho), which exists when m or n is coprime to t; ``decompose``
picks an associate of the modulus for which that holds.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import gcd as _int_gcd

from .eisenstein import (
    UNITS,
    Eisenstein,
    canonical_associate,
    euclid_divmod,
)
from .errors import NoSuitableAssociate, ZeroModulus

__all__ = [
    "Modulus",
    "ResidueSystem",
    "decompose",
    "residue_system",
    "mu_reduce",
    "pi_lift",
    "class_equal",
    "ring_op_mod",
    "isomorphism_kind",
    "residue_table_csv",
    "residue_table_json",
]

SCHEMA = "eisring/v1"


@dataclass(frozen=True, slots=True)
class Modulus:
    """A nonzero modulus together with its normalized decomposition.

    working_eta = t*(m + n*rho) is the associate of ``eta`` actually used
    for reduction and lifting; it satisfies gcd(m, t) = 1 or gcd(n, t) = 1
    (recorded in ``coprime_side`` as "m" or "n").
    """

    eta: Eisenstein
    working_eta: Eisenstein
    t: int
    m: int
    n: int
    coprime_side: str

    @property
    def core(self) -> Eisenstein:
        return Eisenstein(self.m, self.n)

    @property
    def core_norm(self) -> int:
        return self.core.norm()

    @property
    def grid_width(self) -> int:
        return self.t * self.core_norm

    @property
    def grid_height(self) -> int:
        return self.t

    @property
    def norm(self) -> int:
        """Cardinality of the quotient ring, N(eta) = t^2 * N(m + n*rho)."""
        return self.t * self.t * self.core_norm


def _split(eta: Eisenstein) -> tuple[int, int, int]:
    t = _int_gcd(eta.a, eta.b)
    return t, eta.a // t, eta.b // t


def _qualifies(eta: Eisenstein) -> bool:
    t, m, n = _split(eta)
    return _int_gcd(m, t) == 1 or _int_gcd(n, t) == 1


def decompose(eta: Eisenstein) -> Modulus:
    """Choose a workable associate of eta and record its decomposition.

    eta itself is kept whenever it qualifies.  Otherwise the canonical
    associate is preferred, and failing that the first qualifying associate
    in the fixed unit order (1, -1, rho, -rho, rho^2, -rho^2).  A modulus
    with no qualifying associate is rejected.
    """
    if eta.is_zero():
        raise ZeroModulus("cannot decompose the zero modulus")
    if _qualifies(eta):
        working = eta
    else:
        candidates = [eta * u for u in UNITS]
        qualifying = [c for c in candidates if _qualifies(c)]
        if not qualifying:
            raise NoSuitableAssociate(
                f"no associate of {eta} has a component coprime to its content"
            )
        canonical = canonical_associate(eta)
        working = canonical if canonical in qualifying else qualifying[0]
    t, m, n = _split(working)
    side = "n" if _int_gcd(n, t) == 1 else "m"
    return Modulus(eta=eta, working_eta=working, t=t, m=m, n=n, coprime_side=side)


def mu_reduce(alpha: Eisenstein, mod: Modulus) -> Eisenstein:
    """The norm-minimal representative of alpha's class (Voronoi reduction)."""
    _, rem = euclid_divmod(alpha, mod.working_eta)
    return rem


def pi_lift(delta: Eisenstein, mod: Modulus) -> Eisenstein:
    """The grid representative x' + y'*rho of delta's residue class.

    y' = y mod t, and x' follows from the congruence that ties the two
    coordinates together, solved with a modular inverse of n (or of m,
    whichever is coprime to t) modulo t*N(m + n*rho).
    """
    big = mod.grid_width
    y_lift = delta.b % mod.t
    dy = delta.b - y_lift
    if mod.coprime_side == "n":
        inv = pow(mod.n, -1, big) if big > 1 else 0
        x_lift = (delta.a - mod.m * inv * dy) % big
    else:
        inv = pow(mod.m, -1, big) if big > 1 else 0
        x_lift = (delta.a + (inv * mod.n - 1) * dy) % big
    return Eisenstein(x_lift, y_lift)


def class_equal(alpha: Eisenstein, theta: Eisenstein, mod: Modulus) -> bool:
    """alpha = theta (mod eta), decided by congruences on the coordinates.

    With dx, dy the coordinate differences, membership of the difference in
    <t*(m + n*rho)> is equivalent to dy = 0 (mod t) together with
    n*dx = m*dy (mod t*N) on the n-coprime side, or
    m*dx = (m - n)*dy (mod t*N) on the m-coprime side.
    """
    dx = theta.a - alpha.a
    dy = theta.b - alpha.b
    if dy % mod.t != 0:
        return False
    big = mod.grid_width
    if mod.coprime_side == "n":
        return (mod.n * dx - mod.m * dy) % big == 0
    return (mod.m * dx - (mod.m - mod.n) * dy) % big == 0


def ring_op_mod(op: str, alpha: Eisenstein, theta: Eisenstein, mod: Modulus) -> Eisenstein:
    """Modular ring operation on reduced representatives: op in {add, mul}."""
    if op == "add":
        return mu_reduce(alpha + theta, mod)
    if op == "mul":
        return mu_reduce(alpha * theta, mod)
    raise ValueError(f"unknown ring operation {op!r}")


def isomorphism_kind(mod: Modulus) -> str:
    """Shape of the quotient ring: "Rational", "FullGrid" or "Mixed".

    t = 1 gives a line of N(eta) integers (ring isomorphic to Z_N); a unit
    core m + n*rho means eta is an associate of the integer t and the grid
    is the full t x t square (isomorphic to Z_t[rho]); anything else is the
    mixed rectangle.
    """
    if mod.t == 1:
        return "Rational"
    if mod.core_norm == 1:
        return "FullGrid"
    return "Mixed"


@dataclass(frozen=True)
class ResidueSystem:
    """Paired grid and reduced representatives, in row-major grid order."""

    modulus: Modulus
    r_points: tuple[Eisenstein, ...]
    e_points: tuple[Eisenstein, ...]

    def __len__(self) -> int:
        return len(self.r_points)


def residue_system(mod: Modulus) -> ResidueSystem:
    """Materialize the grid system and its reduction (y outer, x inner)."""
    grid = [
        Eisenstein(x, y)
        for y in range(mod.grid_height)
        for x in range(mod.grid_width)
    ]
    reduced = [mu_reduce(g, mod) for g in grid]
    return ResidueSystem(modulus=mod, r_points=tuple(grid), e_points=tuple(reduced))


def residue_table_csv(system: ResidueSystem) -> str:
    """CSV with one row per grid point: x, y, re_rep_a, re_rep_b."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "y", "re_rep_a", "re_rep_b"])
    for grid, rep in zip(system.r_points, system.e_points):
        writer.writerow([grid.a, grid.b, rep.a, rep.b])
    return buf.getvalue()


def residue_table_json(system: ResidueSystem) -> dict:
    mod = system.modulus
    return {
        "schema": SCHEMA,
        "kind": "residue_table",
        "modulus": {
            "given": [mod.eta.a, mod.eta.b],
            "working": [mod.working_eta.a, mod.working_eta.b],
            "t": mod.t,
            "m": mod.m,
            "n": mod.n,
            "size": mod.norm,
        },
        "rows": [
            {"x": grid.a, "y": grid.b, "rep": [rep.a, rep.b]}
            for grid, rep in zip(system.r_points, system.e_points)
        ],
    }
