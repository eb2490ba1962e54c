"""Constellations and their average-energy statistics.

A constellation is the reduced residue system of a modulus, on either the
Eisenstein or the Gaussian lattice.  Average energies are exact rationals
except for E, the mean Euclidean norm, which sums square roots and is
carried in high-precision decimal.  The comparison table pairs Gaussian
and Eisenstein constellations of equal cardinality and reports the six
energy columns rounded half-up to two decimals.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction

from . import reference
from .eisenstein import Eisenstein
from .errors import CardinalityMismatch
from .gaussian import Gaussian, g_mod_reduce, g_residue_system
from .metrics import hex_distance, hex_weight
from .quotient import SCHEMA, decompose, residue_system

__all__ = [
    "Constellation",
    "EnergyReport",
    "build",
    "energy_report",
    "TableRow",
    "compare_table",
    "builtin_pairs",
    "table_text",
    "table_csv",
    "table_json",
    "scatter_csv",
    "constellation_json",
]

_SQRT_PRECISION = 40
_TWO_PLACES = Decimal("0.01")


@dataclass(frozen=True)
class Constellation:
    """A finite set of reduced representatives with its modulus label."""

    kind: str  # "eisenstein" | "gaussian"
    modulus: Eisenstein | Gaussian
    points: tuple

    @property
    def size(self) -> int:
        return len(self.points)


def build(kind: str, modulus_pair: tuple[int, int]) -> Constellation:
    """Reduced residue system for the modulus, as a constellation."""
    if kind == "eisenstein":
        eta = Eisenstein(*modulus_pair)
        system = residue_system(decompose(eta))
        return Constellation(kind, eta, system.e_points)
    if kind == "gaussian":
        eta = Gaussian(*modulus_pair)
        points = tuple(g_mod_reduce(p, eta) for p in g_residue_system(eta))
        return Constellation(kind, eta, points)
    raise ValueError(f"unknown constellation kind {kind!r}")


@dataclass(frozen=True)
class EnergyReport:
    """Averages over the constellation under uniform point usage.

    e_avg is the mean Euclidean norm (decimal), e2_avg the mean squared
    norm, both exact where possible.  w_avg is the mean hexagonal weight
    for Eisenstein points and the mean Manhattan weight of the transmitted
    representatives for Gaussian points (the convention of the reference
    comparison; the class-minimizing Mannheim weight lives in
    ``gaussian.mannheim_weight``).  Minimum distances are exhaustive pair
    minima; d_hex_min is None for Gaussian constellations.
    """

    kind: str
    size: int
    e_avg: Decimal
    e2_avg: Fraction
    w_avg: Fraction
    d2_min: int | None = None
    d_hex_min: int | None = None


def _mean_sqrt(norms) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = _SQRT_PRECISION
        cache: dict[int, Decimal] = {}
        total = Decimal(0)
        count = 0
        for n in norms:
            if n not in cache:
                cache[n] = Decimal(n).sqrt()
            total += cache[n]
            count += 1
        return total / count


def energy_report(c: Constellation, *, with_min_distances: bool = True) -> EnergyReport:
    norms = [p.norm() for p in c.points]
    size = len(norms)
    e2 = Fraction(sum(norms), size)
    if c.kind == "eisenstein":
        weights = [hex_weight(p) for p in c.points]
    else:
        weights = [p.manhattan() for p in c.points]
    w_avg = Fraction(sum(weights), size)
    e_avg = _mean_sqrt(norms)
    d2_min = None
    dhex_min = None
    if with_min_distances and size >= 2:
        d2_min = min(
            (p - q).norm() for i, p in enumerate(c.points) for q in c.points[i + 1 :]
        )
        if c.kind == "eisenstein":
            dhex_min = min(
                hex_distance(p, q)
                for i, p in enumerate(c.points)
                for q in c.points[i + 1 :]
            )
    return EnergyReport(c.kind, size, e_avg, e2, w_avg, d2_min, dhex_min)


def round2(value: Decimal | Fraction) -> Decimal:
    """Half-up rounding to two decimal places."""
    if isinstance(value, Fraction):
        with localcontext() as ctx:
            ctx.prec = _SQRT_PRECISION
            value = Decimal(value.numerator) / Decimal(value.denominator)
    return value.quantize(_TWO_PLACES, rounding=ROUND_HALF_UP)


@dataclass(frozen=True)
class TableRow:
    gaussian: str
    eisenstein: str
    gaussian_pair: tuple[int, int]
    eisenstein_pair: tuple[int, int]
    size: int
    e_g: Decimal
    e_e: Decimal
    e2_g: Decimal
    e2_e: Decimal
    em_g: Decimal
    ehex_e: Decimal

    def cells(self) -> tuple[Decimal, ...]:
        return (self.e_g, self.e_e, self.e2_g, self.e2_e, self.em_g, self.ehex_e)


def builtin_pairs() -> tuple:
    """The built-in Gaussian/Eisenstein modulus pairs of the comparison."""
    return reference.BUILTIN_PAIRS


def compare_table(pairs=None) -> list[TableRow]:
    """One row of six rounded energy columns per equal-cardinality pair."""
    if pairs is None:
        pairs = builtin_pairs()
    rows = []
    for g_pair, e_pair in pairs:
        gc = build("gaussian", tuple(g_pair))
        ec = build("eisenstein", tuple(e_pair))
        if gc.size != ec.size:
            raise CardinalityMismatch(
                f"|G_{Gaussian(*g_pair)}| = {gc.size} but |E_{Eisenstein(*e_pair)}| = {ec.size}"
            )
        gr = energy_report(gc, with_min_distances=False)
        er = energy_report(ec, with_min_distances=False)
        rows.append(
            TableRow(
                gaussian=str(Gaussian(*g_pair)),
                eisenstein=str(Eisenstein(*e_pair)),
                gaussian_pair=tuple(g_pair),
                eisenstein_pair=tuple(e_pair),
                size=gc.size,
                e_g=round2(gr.e_avg),
                e_e=round2(er.e_avg),
                e2_g=round2(gr.e2_avg),
                e2_e=round2(er.e2_avg),
                em_g=round2(gr.w_avg),
                ehex_e=round2(er.w_avg),
            )
        )
    return rows


_COLUMNS = (
    "gaussian",
    "eisenstein",
    "size",
    "e_gaussian",
    "e_eisenstein",
    "e2_gaussian",
    "e2_eisenstein",
    "mannheim_gaussian",
    "hex_eisenstein",
)


def _row_values(row: TableRow) -> list[str]:
    return [row.gaussian, row.eisenstein, str(row.size)] + [str(c) for c in row.cells()]


def table_text(rows) -> str:
    data = [list(_COLUMNS)] + [_row_values(r) for r in rows]
    widths = [max(len(line[i]) for line in data) for i in range(len(_COLUMNS))]
    out = []
    for line in data:
        out.append("  ".join(cell.rjust(w) for cell, w in zip(line, widths)))
    return "\n".join(out) + "\n"


def table_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_COLUMNS)
    for r in rows:
        writer.writerow(_row_values(r))
    return buf.getvalue()


def table_json(rows, indent: int | None = 2) -> str:
    doc = {
        "schema": SCHEMA,
        "kind": "energy_table",
        "rows": [
            {
                "gaussian": r.gaussian,
                "eisenstein": r.eisenstein,
                "gaussian_modulus": list(r.gaussian_pair),
                "eisenstein_modulus": list(r.eisenstein_pair),
                "size": r.size,
                "e_gaussian": str(r.e_g),
                "e_eisenstein": str(r.e_e),
                "e2_gaussian": str(r.e2_g),
                "e2_eisenstein": str(r.e2_e),
                "mannheim_gaussian": str(r.em_g),
                "hex_eisenstein": str(r.ehex_e),
            }
            for r in rows
        ],
    }
    return json.dumps(doc, indent=indent)


def planar_coordinates(point) -> tuple[float, float]:
    """Cartesian embedding: rho at (-1/2, sqrt(3)/2), i at (0, 1)."""
    if isinstance(point, Eisenstein):
        return (point.a - point.b / 2.0, point.b * (3.0**0.5) / 2.0)
    return (float(point.a), float(point.b))


def scatter_csv(c: Constellation) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["re", "im"])
    for p in c.points:
        re, im = planar_coordinates(p)
        writer.writerow([f"{re:.6f}", f"{im:.6f}"])
    return buf.getvalue()


def constellation_json(c: Constellation, indent: int | None = 2) -> str:
    doc = {
        "schema": SCHEMA,
        "kind": "constellation",
        "family": c.kind,
        "modulus": [c.modulus.a, c.modulus.b],
        "size": c.size,
        "points": [[p.a, p.b] for p in c.points],
    }
    return json.dumps(doc, indent=indent)
