"""Exact scalar and polynomial arithmetic kernel.

Scalars are arbitrary-precision rationals (`fractions.Fraction`, always in
lowest terms).  Polynomials are immutable tuples of Fractions indexed by
power of x, with trailing zeros trimmed; the zero polynomial is the empty
tuple and has degree -1 by convention.  Everything in this module is a pure
function on immutable values, so concurrent use needs no locking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

Rational = Fraction
Poly = tuple[Fraction, ...]

ZERO: Poly = ()
ONE: Poly = (Fraction(1),)
X: Poly = (Fraction(0), Fraction(1))


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); 0 outside 0 <= k <= n.  Requires n >= 0."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """Multinomial coefficient n! / prod(parts_i!).

    The parts must be non-negative and sum to n; anything else signals a
    malformed index tuple and is rejected.
    """
    if n < 0:
        raise ValueError(f"multinomial requires n >= 0, got n={n}")
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be non-negative, got {parts!r}")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts {parts!r} do not sum to n={n}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def pochhammer(z: Fraction | int, k: int) -> Fraction:
    """Rising factorial z(z+1)...(z+k-1); the empty product 1 when k = 0."""
    if k < 0:
        raise ValueError(f"pochhammer requires k >= 0, got k={k}")
    out = Fraction(1)
    for i in range(k):
        out *= z + i
    return out


def harmonic(n: int) -> Fraction:
    """Harmonic number H_n = sum_{j=1}^{n} 1/j, with H_0 = 0."""
    if n < 0:
        raise ValueError(f"harmonic requires n >= 0, got n={n}")
    out = Fraction(0)
    for j in range(1, n + 1):
        out += Fraction(1, j)
    return out


def harmonic_shifted(a: Fraction | int, n: int) -> Fraction:
    """Shifted harmonic number sum_{j=0}^{n-1} 1/(j+a) for a > 0; 0 at n = 0.

    The shift a = 1 recovers the ordinary harmonic numbers.
    """
    if n < 0:
        raise ValueError(f"harmonic_shifted requires n >= 0, got n={n}")
    if a <= 0:
        raise ValueError(f"harmonic_shifted requires a > 0, got a={a}")
    out = Fraction(0)
    for j in range(n):
        out += 1 / (Fraction(a) + j)
    return out


def harmonic_second(n: int) -> Fraction:
    """Second-order harmonic number sum_{j=1}^{n} 1/j^2, with value 0 at n = 0."""
    if n < 0:
        raise ValueError(f"harmonic_second requires n >= 0, got n={n}")
    out = Fraction(0)
    for j in range(1, n + 1):
        out += Fraction(1, j * j)
    return out


def poly(coeffs: Iterable[Fraction | int]) -> Poly:
    """Build a polynomial from coefficients in ascending power order."""
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_degree(p: Poly) -> int:
    """Degree of p; -1 for the zero polynomial."""
    return len(p) - 1


def poly_add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_sub(p: Poly, q: Poly) -> Poly:
    out = list(p) + [Fraction(0)] * (len(q) - len(p))
    for i, c in enumerate(q):
        out[i] -= c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_scale(c: Fraction | int, p: Poly) -> Poly:
    if c == 0:
        return ZERO
    return tuple(c * a for a in p)


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Exact coefficient convolution of p and q."""
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def poly_eval(p: Poly, x0: Fraction | int) -> Fraction:
    """Evaluate p at a rational point by Horner's rule."""
    out = Fraction(0)
    for c in reversed(p):
        out = out * x0 + c
    return out


def poly_compose_linear(p: Poly, c: Fraction | int) -> Poly:
    """The polynomial x -> p(c*x)."""
    out = [a * Fraction(c) ** i for i, a in enumerate(p)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_shift(p: Poly, u: Fraction | int) -> Poly:
    """The polynomial x -> p(x + u), by exact Taylor shift."""
    if u == 0:
        return p
    n = len(p)
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        if c == 0:
            continue
        for j in range(i + 1):
            out[j] += c * comb(i, j) * Fraction(u) ** (i - j)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_derivative(p: Poly) -> Poly:
    return tuple(i * c for i, c in enumerate(p) if i > 0)


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of non-negative integers with a fixed sum."""

    parts: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)


def composition_parts(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Raw-tuple companion of `compositions`, in the same lexicographic order.

    A negative n yields nothing; this encodes the empty index set of a
    vacuous summation range.
    """
    if k < 1:
        raise ValueError(f"compositions require k >= 1, got k={k}")
    if n < 0:
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in composition_parts(n - first, k - 1):
            yield (first,) + rest


def compositions(n: int, k: int) -> Iterator[Composition]:
    """All weak compositions of n into k parts, lexicographically.

    Each composition appears exactly once; there are C(n+k-1, k-1) of them.
    """
    for parts in composition_parts(n, k):
        yield Composition(parts)
