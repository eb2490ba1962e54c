"""Gaussian integers Z[i]: arithmetic, residue systems, and Mannheim weight.

This is the comparison side for constellation energy studies.  Only what
that comparison needs lives here: exact ring arithmetic, the reduction
``g_mod_reduce`` onto the minimal residue (componentwise rounded division),
the rectangular complete residue system for eta = t*(c + d*i), and the
Mannheim weight computed over a residue class.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as _int_gcd

from .eisenstein import round_half_down
from .errors import ZeroModulus

__all__ = ["Gaussian", "g_mod_reduce", "g_residue_system", "mannheim_weight"]


@dataclass(frozen=True, slots=True)
class Gaussian:
    """The Gaussian integer a + b*i, with exact integer components."""

    a: int
    b: int

    def __add__(self, other: "Gaussian | int") -> "Gaussian":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Gaussian(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: "Gaussian | int") -> "Gaussian":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Gaussian(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "Gaussian | int") -> "Gaussian":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return Gaussian(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self) -> "Gaussian":
        return Gaussian(-self.a, -self.b)

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.a, -self.b)

    def norm(self) -> int:
        """N(a + b*i) = a^2 + b^2; multiplicative and zero only at zero."""
        return self.a * self.a + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def manhattan(self) -> int:
        return abs(self.a) + abs(self.b)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        imag = "i" if self.b == 1 else "-i" if self.b == -1 else f"{self.b}i"
        if self.a == 0:
            return imag
        sign = "+" if self.b > 0 else ""
        return f"{self.a}{sign}{imag}"

    def __repr__(self) -> str:
        return f"Gaussian({self.a}, {self.b})"


def _coerce(value: object) -> Gaussian:
    if isinstance(value, Gaussian):
        return value
    if isinstance(value, int):
        return Gaussian(value, 0)
    return NotImplemented


def g_mod_reduce(alpha: Gaussian, eta: Gaussian) -> Gaussian:
    """alpha mod eta: subtract the componentwise-rounded multiple of eta.

    Returns alpha - round(alpha*conj(eta)/N(eta)) * eta, with each component
    rounded by the same exact half-toward-minus-infinity rule used on the
    Eisenstein side.  The result is congruent to alpha and satisfies
    N(result) <= N(eta)/2.
    """
    if eta.is_zero():
        raise ZeroModulus("reduction modulo zero Gaussian integer")
    w = alpha * eta.conjugate()
    den = eta.norm()
    quot = Gaussian(round_half_down(w.a, den), round_half_down(w.b, den))
    return alpha - quot * eta


def g_residue_system(eta: Gaussian) -> list[Gaussian]:
    """The rectangular complete residue system for eta = t*(c + d*i).

    With t the gcd of the components, the N(eta) grid points x + y*i for
    0 <= x < t*N(c + d*i), 0 <= y < t are pairwise incongruent mod eta.
    Returned in row-major order (y outer, x inner).
    """
    if eta.is_zero():
        raise ZeroModulus("no residue system modulo 0")
    t = _int_gcd(eta.a, eta.b)
    core = Gaussian(eta.a // t, eta.b // t)
    width = t * core.norm()
    return [Gaussian(x, y) for y in range(t) for x in range(width)]


def mannheim_weight(theta: Gaussian, eta: Gaussian) -> int:
    """Minimum of |a| + |b| over the residue class of theta mod eta.

    The class member of least Manhattan weight lies within one lattice
    step of the reduced representative, so the search covers the 3x3 block
    of translates around g_mod_reduce(theta, eta).
    """
    delta = g_mod_reduce(theta, eta)
    return min(
        (delta - Gaussian(u, v) * eta).manhattan()
        for u in (-1, 0, 1)
        for v in (-1, 0, 1)
    )
