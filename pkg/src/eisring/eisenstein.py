"""Exact arithmetic in Z[rho], the ring of Eisenstein integers.

rho = (-1 + sqrt(3) i) / 2 is a primitive third root of unity, so
rho^2 = -1 - rho and rho^3 = 1.  An element is stored as the integer pair
(a, b) meaning a + b*rho.  Python integers are arbitrary precision, so no
operation can overflow or wrap.

The ring is a Euclidean domain under the norm

    N(a + b*rho) = a^2 + b^2 - a*b >= 0,

which is multiplicative.  ``euclid_divmod`` implements division with the
norm-minimal remainder (the nearest-lattice-point reduction), with an exact
rational tie rule so results are identical on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as _int_gcd, isqrt

from .errors import BothZero, UnitOrZero, ZeroIdealGenerator, ZeroInput, ZeroModulus

__all__ = [
    "Eisenstein",
    "PrimeKind",
    "Factorization",
    "ZERO",
    "ONE",
    "RHO",
    "BETA",
    "UNITS",
    "round_half_down",
    "canonical_associate",
    "euclid_divmod",
    "gcd",
    "is_primitive",
    "classify_prime",
    "factorize",
    "primitivity_structure_check",
    "ideal_member",
]


@dataclass(frozen=True, slots=True)
class Eisenstein:
    """The Eisenstein integer a + b*rho."""

    a: int
    b: int

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Eisenstein | int") -> "Eisenstein":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Eisenstein(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: "Eisenstein | int") -> "Eisenstein":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Eisenstein(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: "Eisenstein | int") -> "Eisenstein":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: "Eisenstein | int") -> "Eisenstein":
        # (a + b rho)(c + d rho) = (ac - bd) + (ad + bc - bd) rho,
        # using rho^2 = -1 - rho.
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return Eisenstein(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __neg__(self) -> "Eisenstein":
        return Eisenstein(-self.a, -self.b)

    # -- basic queries -----------------------------------------------------

    def conjugate(self) -> "Eisenstein":
        """Complex conjugate: (a - b) - b*rho."""
        return Eisenstein(self.a - self.b, -self.b)

    def norm(self) -> int:
        """N(a + b*rho) = a^2 + b^2 - a*b.  Zero only for the zero element."""
        return self.a * self.a + self.b * self.b - self.a * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def associates(self) -> tuple["Eisenstein", ...]:
        """The six unit multiples (+-x, +-rho x, +-rho^2 x), in that order."""
        rx = self * RHO
        rrx = rx * RHO
        return (self, -self, rx, -rx, rrx, -rrx)

    # -- presentation --------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.b == 1:
            rho = "ρ"
        elif self.b == -1:
            rho = "-ρ"
        else:
            rho = f"{self.b}ρ"
        if self.a == 0:
            return rho
        sign = "+" if self.b > 0 else ""
        return f"{self.a}{sign}{rho}"

    def __repr__(self) -> str:
        return f"Eisenstein({self.a}, {self.b})"


def _coerce(value: object) -> Eisenstein:
    if isinstance(value, Eisenstein):
        return value
    if isinstance(value, int):
        return Eisenstein(value, 0)
    return NotImplemented


ZERO = Eisenstein(0, 0)
ONE = Eisenstein(1, 0)
RHO = Eisenstein(0, 1)
BETA = Eisenstein(1, -1)  # 1 - rho, the ramified prime above 3

#: The six units, in the fixed order used throughout the package.
UNITS = ONE.associates()


def round_half_down(p: int, q: int) -> int:
    """Nearest integer to the exact rational p/q, ties toward minus infinity.

    Requires q > 0.  This is the bracket rule round(x) = floor(x) when
    x - floor(x) <= 1/2 and ceil(x) otherwise, evaluated with integer
    comparisons only.
    """
    fl = p // q
    return fl if 2 * (p - fl * q) <= q else fl + 1


def euclid_divmod(alpha: Eisenstein, eta: Eisenstein) -> tuple[Eisenstein, Eisenstein]:
    """Division with norm-minimal remainder: alpha = q*eta + r, N(r) < N(eta).

    The quotient is the lattice point of <eta> nearest to alpha.  Two
    candidates are formed, one on the sublattice with even rho-coefficient
    and one on the odd sublattice; the smaller-norm remainder wins, and
    exact norm ties go to the candidate quotient with smaller real part.
    (The two candidate quotients have integer and half-odd-integer real
    parts respectively, so that comparison never ties.)

    All arithmetic is exact: alpha/eta is handled as the integer pair
    alpha*conj(eta) over the denominator N(eta).
    """
    if eta.is_zero():
        raise ZeroModulus("division by zero Eisenstein integer")
    w = alpha * eta.conjugate()
    u, v = w.a, w.b
    den = eta.norm()
    two_den = 2 * den
    # Rectangular coordinates of z = alpha/eta:
    #   Re(z) = (2u - v) / (2 den),   Im(z)/sqrt(3) = v / (2 den),
    # and sqrt(3) i = 1 + 2 rho.
    r1 = round_half_down(2 * u - v, two_den)
    s1 = round_half_down(v, two_den)
    theta1 = Eisenstein(r1 + s1, 2 * s1)
    r2 = round_half_down(2 * u - v + den, two_den)
    s2 = round_half_down(v - den, two_den)
    theta2 = Eisenstein(r2 + s2, 2 * s2 + 1)
    delta1 = alpha - eta * theta1
    delta2 = alpha - eta * theta2
    n1 = delta1.norm()
    n2 = delta2.norm()
    # Re(theta1) = r1, Re(theta2) = r2 - 1/2; compare doubled values.
    if n1 < n2 or (n1 == n2 and 2 * r1 < 2 * r2 - 1):
        return theta1, delta1
    return theta2, delta2


def canonical_associate(x: Eisenstein) -> Eisenstein:
    """The unique associate with a > 0 and 0 <= b < a (argument in [0, pi/3)).

    canonical_associate(0) = 0.  Idempotent, and constant on associate
    classes, which makes it the normal form for gcd and factorization
    output.
    """
    if x.is_zero():
        return ZERO
    for cand in x.associates():
        if cand.a > 0 and 0 <= cand.b < cand.a:
            return cand
    raise AssertionError(f"no canonical associate found for {x!r}")


def gcd(alpha: Eisenstein, theta: Eisenstein) -> Eisenstein:
    """Greatest common divisor, returned as a canonical associate.

    Computed by the Euclidean chain of ``euclid_divmod``; any common
    divisor of the inputs divides the result.
    """
    if alpha.is_zero() and theta.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not theta.is_zero():
        _, r = euclid_divmod(alpha, theta)
        alpha, theta = theta, r
    return canonical_associate(alpha)


def is_primitive(eta: Eisenstein) -> bool:
    """True when the two integer coefficients of eta are coprime."""
    if eta.is_zero():
        raise ZeroInput("0 is neither primitive nor imprimitive")
    return _int_gcd(eta.a, eta.b) == 1


@dataclass(frozen=True, slots=True)
class PrimeKind:
    """Outcome of prime classification.

    kind is one of "type1" (associate of 1 - rho), "type2" (norm is a
    rational prime q = 1 mod 3, recorded in ``q``), "type3" (associate of a
    rational prime p = 2 mod 3, recorded in ``p``) or "not_prime".
    """

    kind: str
    q: int | None = None
    p: int | None = None

    @property
    def is_prime(self) -> bool:
        return self.kind != "not_prime"


def _is_rational_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def classify_prime(gamma: Eisenstein) -> PrimeKind:
    """Sort a nonzero non-unit into the three prime families (or neither).

    Associates of 1 - rho are exactly the norm-3 elements; a norm that is a
    rational prime q = 1 mod 3 certifies a split prime; an associate of a
    rational prime p = 2 mod 3 is inert.  Everything else is composite.
    """
    n = gamma.norm()
    if n <= 1:
        raise UnitOrZero("prime classification needs a nonzero non-unit")
    if n == 3:
        return PrimeKind("type1")
    if n % 3 == 1 and _is_rational_prime(n):
        return PrimeKind("type2", q=n)
    p = isqrt(n)
    if p * p == n and p % 3 == 2 and _is_rational_prime(p):
        if canonical_associate(gamma) == Eisenstein(p, 0):
            return PrimeKind("type3", p=p)
    return PrimeKind("not_prime")


@dataclass(frozen=True)
class Factorization:
    """unit * product(prime^exponent) with canonical, pairwise distinct primes."""

    unit: Eisenstein
    factors: tuple[tuple[Eisenstein, int], ...]

    def value(self) -> Eisenstein:
        """Multiply the factorization back out."""
        acc = self.unit
        for prime, exp in self.factors:
            for _ in range(exp):
                acc = acc * prime
        return acc


def _factor_int(n: int) -> list[tuple[int, int]]:
    out = []
    for p in _small_primes_iter():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return out


def _small_primes_iter():
    yield 2
    yield 3
    k = 5
    while True:
        yield k
        yield k + 2
        k += 6


def split_rational_prime(q: int) -> Eisenstein:
    """A canonical prime of norm q, for a rational prime q = 1 mod 3.

    Solves a^2 - a*b + b^2 = q by searching a in [1, ceil(sqrt(4q/3))] and
    testing whether the discriminant 4q - 3a^2 is a perfect square.
    """
    if q % 3 != 1 or not _is_rational_prime(q):
        raise ZeroInput(f"{q} is not a rational prime congruent to 1 mod 3")
    a = 1
    while 3 * a * a <= 4 * q:
        disc = 4 * q - 3 * a * a
        s = isqrt(disc)
        if s * s == disc:
            for num in (a + s, a - s):
                if num % 2 == 0:
                    cand = Eisenstein(a, num // 2)
                    if cand.norm() == q:
                        return canonical_associate(cand)
        a += 1
    raise AssertionError(f"no Eisenstein prime of norm {q} found")


def _exact_div(x: Eisenstein, d: Eisenstein) -> Eisenstein | None:
    quot, rem = euclid_divmod(x, d)
    return quot if rem.is_zero() else None


def factorize(eta: Eisenstein) -> Factorization:
    """Unique factorization into canonical primes, recovered from N(eta).

    The norm is factored over Z by trial division; 3 contributes copies of
    the ramified prime, p = 2 mod 3 contributes rational primes, and each
    q = 1 mod 3 is split by bounded search, with exact divisions deciding
    how the multiplicity distributes between a split prime and its
    conjugate.
    """
    if eta.is_zero():
        raise ZeroInput("cannot factor 0")
    remaining = eta
    factors: list[tuple[Eisenstein, int]] = []
    for p, e in _factor_int(eta.norm()):
        if p == 3:
            candidates = [canonical_associate(BETA)]
        elif p % 3 == 2:
            candidates = [Eisenstein(p, 0)]
        else:
            psi = split_rational_prime(p)
            psi_bar = canonical_associate(psi.conjugate())
            candidates = sorted({psi, psi_bar}, key=lambda g: (g.a, g.b))
        for gamma in candidates:
            k = 0
            while True:
                quot = _exact_div(remaining, gamma)
                if quot is None:
                    break
                remaining = quot
                k += 1
            if k:
                factors.append((gamma, k))
    if not remaining.is_unit():
        raise AssertionError(f"factorization of {eta!r} left non-unit {remaining!r}")
    return Factorization(unit=remaining, factors=tuple(factors))


def primitivity_structure_check(eta: Eisenstein) -> bool:
    """Primitivity read off the prime factorization.

    True exactly when eta is, up to a unit, beta^r times a product of split
    primes (norms q_i = 1 mod 3) with r in {0, 1} and the q_i pairwise
    distinct; in particular a split prime and its conjugate never both
    occur.  Agrees with ``is_primitive`` on every nonzero input.
    """
    if eta.is_zero():
        raise ZeroInput("0 has no primitivity structure")
    fact = factorize(eta)
    seen_q: set[int] = set()
    for gamma, exp in fact.factors:
        kind = classify_prime(gamma)
        if kind.kind == "type1":
            if exp > 1:
                return False
        elif kind.kind == "type2":
            if kind.q in seen_q:
                return False
            seen_q.add(kind.q)
        else:
            return False
    return True


def ideal_member(x: Eisenstein, k: int, g: Eisenstein) -> bool:
    """Membership of x = c + d*rho in the principal ideal <k*(a + b*rho)>.

    Decided by the divisibility test: x belongs to the ideal exactly when
    k*(a^2 + b^2 - ab) divides both (a - b)*c + b*d and a*d - b*c.
    """
    if k == 0 or g.is_zero():
        raise ZeroIdealGenerator("membership in the zero ideal is degenerate")
    a, b = g.a, g.b
    c, d = x.a, x.b
    modulus = k * g.norm()
    return ((a - b) * c + b * d) % modulus == 0 and (a * d - b * c) % modulus == 0
