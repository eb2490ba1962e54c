"""Linear codes over a reduced residue ring, and field extensions of it.

Codes are materialized at desk scale: the span of a generator list is the
set of all coefficient combinations, a group code is any word set closed
under componentwise subtraction, and minimum distances are exhaustive.

For a prime modulus gamma the residue ring is a field; adjoining a root of
a monic irreducible polynomial f of degree n gives the extension of order
N(gamma)^n, represented by coefficient tuples reduced through f.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from itertools import product

from .eisenstein import Eisenstein, classify_prime
from .errors import (
    LengthMismatch,
    NotPrimeModulus,
    ReduciblePolynomial,
    SpanTooLarge,
    TooFewWords,
    UnitOrZero,
)
from .metrics import vector_hex_distance, vector_sq_euclid_distance
from .quotient import Modulus, decompose, mu_reduce, residue_system

__all__ = [
    "LinearCode",
    "span",
    "is_group_code",
    "code_min_distance",
    "codewords_csv",
    "EisensteinField",
    "prime_field",
    "ext_field_build",
    "mult_group_order_check",
]

DEFAULT_SPAN_BOUND = 10**6


@dataclass(frozen=True)
class LinearCode:
    alphabet: Modulus
    length: int
    generators: tuple[tuple[Eisenstein, ...], ...]
    codewords: tuple[tuple[Eisenstein, ...], ...]

    def __len__(self) -> int:
        return len(self.codewords)


def span(alphabet: Modulus, generators, *, length: int | None = None,
         bound: int = DEFAULT_SPAN_BOUND) -> LinearCode:
    """All alphabet-linear combinations of the generators, materialized.

    With no generators the code is the zero word of the given ``length``
    (which is otherwise inferred).  Raises when the coefficient space
    |R|^k exceeds ``bound``.
    """
    gens = [tuple(g) for g in generators]
    if gens:
        length = len(gens[0])
        if any(len(g) != length for g in gens):
            raise LengthMismatch("generators have mixed lengths")
    elif length is None:
        length = 1
    scalars = residue_system(alphabet).e_points
    if len(scalars) ** len(gens) > bound:
        raise SpanTooLarge(
            f"{len(scalars)}^{len(gens)} combinations exceed the bound {bound}"
        )
    zero = tuple(Eisenstein(0, 0) for _ in range(length))
    words = set()
    for coeffs in product(scalars, repeat=len(gens)):
        word = zero
        for c, g in zip(coeffs, gens):
            word = tuple(
                mu_reduce(w + c * gi, alphabet) for w, gi in zip(word, g)
            )
        words.add(word)
    ordered = tuple(sorted(words, key=lambda w: [(e.a, e.b) for e in w]))
    return LinearCode(alphabet, length, tuple(gens), ordered)


def is_group_code(words, mod: Modulus) -> bool:
    """Closure under componentwise modular subtraction."""
    word_set = {tuple(w) for w in words}
    for u in word_set:
        for v in word_set:
            diff = tuple(mu_reduce(ui - vi, mod) for ui, vi in zip(u, v))
            if diff not in word_set:
                return False
    return True


def code_min_distance(code, metric: str = "sq_euclid"):
    """Exhaustive minimum distance over distinct codeword pairs."""
    words = list(code.codewords) if isinstance(code, LinearCode) else [tuple(w) for w in code]
    if len(words) < 2:
        raise TooFewWords("minimum distance needs at least two codewords")
    if metric == "sq_euclid":
        dist = vector_sq_euclid_distance
    elif metric == "hex":
        dist = vector_hex_distance
    else:
        raise ValueError(f"unknown metric {metric!r}")
    return min(dist(u, v) for i, u in enumerate(words) for v in words[i + 1 :])


def codewords_csv(code: LinearCode) -> str:
    """One codeword per row, components rendered as a+bρ strings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for word in code.codewords:
        writer.writerow([str(e) for e in word])
    return buf.getvalue()


# -- field extensions -------------------------------------------------------


@dataclass(frozen=True)
class EisensteinField:
    """R[X]/<f> for a prime-modulus residue field R and monic f.

    Elements are length-n coefficient tuples (low degree first) over the
    reduced residue system of gamma.  Degree 1 with f = X gives back the
    base field itself.
    """

    gamma: Eisenstein
    modulus: Modulus
    poly: tuple[Eisenstein, ...]  # monic, length degree + 1
    base: tuple[Eisenstein, ...]

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    @property
    def order(self) -> int:
        return len(self.base) ** self.degree

    def elements(self):
        return [tuple(c) for c in product(self.base, repeat=self.degree)]

    @property
    def zero(self) -> tuple[Eisenstein, ...]:
        z = mu_reduce(Eisenstein(0, 0), self.modulus)
        return tuple(z for _ in range(self.degree))

    @property
    def one(self) -> tuple[Eisenstein, ...]:
        parts = [mu_reduce(Eisenstein(1, 0), self.modulus)]
        parts += [mu_reduce(Eisenstein(0, 0), self.modulus)] * (self.degree - 1)
        return tuple(parts)

    def add(self, x, y):
        return tuple(mu_reduce(a + b, self.modulus) for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple(mu_reduce(a - b, self.modulus) for a, b in zip(x, y))

    def mul(self, x, y):
        n = self.degree
        conv = [Eisenstein(0, 0)] * (2 * n - 1)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                conv[i + j] = conv[i + j] + a * b
        reduced = [mu_reduce(c, self.modulus) for c in conv]
        # fold degrees >= n down through the monic relation f(alpha) = 0
        for i in range(len(reduced) - 1, n - 1, -1):
            c = reduced[i]
            if c.is_zero():
                continue
            reduced[i] = Eisenstein(0, 0)
            for j in range(n):
                reduced[i - n + j] = mu_reduce(reduced[i - n + j] - c * self.poly[j], self.modulus)
        return tuple(reduced[:n])

    def pow(self, x, k: int):
        acc = self.one
        base = x
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc


def _reduced_poly(coeffs, mod: Modulus) -> tuple[Eisenstein, ...]:
    out = [mu_reduce(c if isinstance(c, Eisenstein) else Eisenstein(c, 0), mod) for c in coeffs]
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    return tuple(out)


def _poly_mul(f, g, mod: Modulus):
    conv = [Eisenstein(0, 0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            conv[i + j] = conv[i + j] + a * b
    return tuple(mu_reduce(c, mod) for c in conv)


def _poly_rem(f, g, mod: Modulus):
    # g monic; classic long division, remainder only
    rem = list(f)
    dg = len(g) - 1
    while len(rem) - 1 >= dg and any(not c.is_zero() for c in rem):
        while rem and rem[-1].is_zero():
            rem.pop()
        if len(rem) - 1 < dg:
            break
        lead = rem[-1]
        shift = len(rem) - 1 - dg
        for j in range(len(g)):
            rem[shift + j] = mu_reduce(rem[shift + j] - lead * g[j], mod)
    while len(rem) > 1 and rem[-1].is_zero():
        rem.pop()
    return tuple(rem)


def _poly_eval(f, x: Eisenstein, mod: Modulus) -> Eisenstein:
    acc = Eisenstein(0, 0)
    for c in reversed(f):
        acc = mu_reduce(acc * x + c, mod)
    return acc


def _is_irreducible(f, mod: Modulus, base) -> bool:
    n = len(f) - 1
    if n <= 1:
        return True
    if any(_poly_eval(f, x, mod).is_zero() for x in base):
        return False
    if n <= 3:
        return True
    # trial division by every monic polynomial of degree 1 .. n//2
    one = mu_reduce(Eisenstein(1, 0), mod)
    for d in range(2, n // 2 + 1):
        for tail in product(base, repeat=d):
            g = tuple(tail) + (one,)
            rem = _poly_rem(f, g, mod)
            if all(c.is_zero() for c in rem):
                return False
    return True


def _field_base(gamma: Eisenstein) -> tuple[Modulus, tuple[Eisenstein, ...]]:
    try:
        kind = classify_prime(gamma)
    except UnitOrZero as exc:
        raise NotPrimeModulus(str(exc)) from exc
    if not kind.is_prime:
        raise NotPrimeModulus(f"{gamma} is not an Eisenstein prime")
    mod = decompose(gamma)
    return mod, residue_system(mod).e_points


def prime_field(gamma: Eisenstein) -> EisensteinField:
    """The residue field of a prime modulus, of order N(gamma)."""
    mod, base = _field_base(gamma)
    poly = (mu_reduce(Eisenstein(0, 0), mod), mu_reduce(Eisenstein(1, 0), mod))
    return EisensteinField(gamma=gamma, modulus=mod, poly=poly, base=base)


def ext_field_build(gamma: Eisenstein, f_coeffs) -> EisensteinField:
    """Extension field of order N(gamma)^n from a monic irreducible f.

    ``f_coeffs`` lists the coefficients low degree first; the polynomial
    must be monic of degree n >= 2 and have no nontrivial monic factor
    over the base field (checked exhaustively).
    """
    mod, base = _field_base(gamma)
    poly = _reduced_poly(f_coeffs, mod)
    n = len(poly) - 1
    if n < 2:
        raise ReduciblePolynomial("the defining polynomial must have degree >= 2")
    if poly[-1] != mu_reduce(Eisenstein(1, 0), mod):
        raise ReduciblePolynomial("the defining polynomial must be monic")
    if not _is_irreducible(poly, mod, base):
        raise ReduciblePolynomial(f"{list(map(str, poly))} factors over the base field")
    return EisensteinField(gamma=gamma, modulus=mod, poly=poly, base=base)


def mult_group_order_check(field: EisensteinField):
    """(group order, a generator of full order or None).

    Walks every nonzero element, computing its multiplicative order; the
    group order is N(gamma)^n - 1 and every element order must divide it.
    """
    group_order = field.order - 1
    divisors = sorted(
        d for d in range(1, group_order + 1) if group_order % d == 0
    )
    generator = None
    one = field.one
    zero = field.zero
    for elem in field.elements():
        if elem == zero:
            continue
        order = next(d for d in divisors if field.pow(elem, d) == one)
        if order == group_order and generator is None:
            generator = elem
    return group_order, generator
