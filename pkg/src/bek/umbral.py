"""Formal moment-symbol calculus with difference operators.

An expression is a finite rational combination of monomials x^e * S_1^{e_1}
* ... * S_m^{e_m} in the formal variable x and moment symbols S_i.  Each
symbol kind carries a prescribed moment sequence; evaluation replaces every
symbol power by its moment, multiplicatively across distinct (independent)
symbols, and returns an exact polynomial in x.  The moments are

    bernoulli^n         -> B_n
    euler^n             -> E_n(0)
    uniform-continuous^n -> 1/(n+1)
    uniform-discrete^n  -> 1 for n = 0, else 1/2

On top of the expressions sit the forward difference f -> f(x+u) - f(x),
the two-point mean f -> (f(x) + f(x+u))/2, and mechanical verifiers for the
subset-expansion identities these operators and symbols satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Mapping, Sequence

from .exactmath import (
    Poly,
    ZERO,
    composition_parts,
    multinomial,
    poly,
    poly_add,
    poly_derivative,
    poly_scale,
    poly_shift,
    poly_sub,
)
from .sequences import bernoulli_number, euler_poly_at_zero


class SymbolKind(Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"
    UNIFORM_CONTINUOUS = "uniform-continuous"
    UNIFORM_DISCRETE = "uniform-discrete"


@dataclass(frozen=True)
class SymbolId:
    """A moment symbol; distinct (kind, index) pairs are independent."""

    kind: SymbolKind
    index: int = 0


class _FormalVariable:
    """Singleton marker for the polynomial variable x in affine forms."""

    _instance: "_FormalVariable | None" = None

    def __new__(cls) -> "_FormalVariable":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "x"


X = _FormalVariable()


def bernoulli_symbol(index: int = 0) -> SymbolId:
    return SymbolId(SymbolKind.BERNOULLI, index)


def euler_symbol(index: int = 0) -> SymbolId:
    return SymbolId(SymbolKind.EULER, index)


def uniform_symbol(index: int = 0) -> SymbolId:
    return SymbolId(SymbolKind.UNIFORM_CONTINUOUS, index)


def discrete_symbol(index: int = 0) -> SymbolId:
    return SymbolId(SymbolKind.UNIFORM_DISCRETE, index)


def _sym_key(s: SymbolId) -> tuple[str, int]:
    return (s.kind.value, s.index)


# Monomial key: (exponent of x, symbol powers sorted by canonical symbol order).
Monomial = tuple[int, tuple[tuple[SymbolId, int], ...]]

AffineTerm = tuple[Fraction | int, "SymbolId | _FormalVariable"]


def _merge_sym_pows(
    a: tuple[tuple[SymbolId, int], ...], b: tuple[tuple[SymbolId, int], ...]
) -> tuple[tuple[SymbolId, int], ...]:
    if not a:
        return b
    if not b:
        return a
    merged: dict[SymbolId, int] = dict(a)
    for sid, e in b:
        merged[sid] = merged.get(sid, 0) + e
    return tuple(sorted(merged.items(), key=lambda it: _sym_key(it[0])))


@dataclass(frozen=True, eq=False)
class UmbralExpr:
    """A rational combination of x-and-symbol monomials; no zero terms stored."""

    terms: Mapping[Monomial, Fraction]

    @staticmethod
    def zero() -> "UmbralExpr":
        return UmbralExpr({})

    @staticmethod
    def constant(c: Fraction | int) -> "UmbralExpr":
        c = Fraction(c)
        return UmbralExpr({} if c == 0 else {(0, ()): c})

    def __add__(self, other: "UmbralExpr") -> "UmbralExpr":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return UmbralExpr(out)

    def __neg__(self) -> "UmbralExpr":
        return UmbralExpr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "UmbralExpr") -> "UmbralExpr":
        return self + (-other)

    def __mul__(self, other: "UmbralExpr | Fraction | int") -> "UmbralExpr":
        if isinstance(other, UmbralExpr):
            out: dict[Monomial, Fraction] = {}
            for (xa, sa), ca in self.terms.items():
                for (xb, sb), cb in other.terms.items():
                    mono = (xa + xb, _merge_sym_pows(sa, sb))
                    s = out.get(mono, Fraction(0)) + ca * cb
                    if s:
                        out[mono] = s
                    else:
                        out.pop(mono, None)
            return UmbralExpr(out)
        c = Fraction(other)
        if c == 0:
            return UmbralExpr({})
        return UmbralExpr({m: c * v for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UmbralExpr):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)


def umbral_pow(affine: Sequence[AffineTerm], n: int) -> UmbralExpr:
    """Full multinomial expansion of (sum_i c_i * s_i)^n.

    Each s_i is a SymbolId or the formal variable X.  Repeated symbols are
    merged up front (their coefficients add), so the expansion runs over
    distinct slots only.
    """
    if n < 0:
        raise ValueError(f"umbral_pow requires n >= 0, got n={n}")
    x_coeff = Fraction(0)
    sym_coeffs: dict[SymbolId, Fraction] = {}
    for c, s in affine:
        c = Fraction(c)
        if s is X:
            x_coeff += c
        else:
            assert isinstance(s, SymbolId)
            sym_coeffs[s] = sym_coeffs.get(s, Fraction(0)) + c
    slots: list[tuple[Fraction, SymbolId | None]] = []
    if x_coeff:
        slots.append((x_coeff, None))
    for sid in sorted(sym_coeffs, key=_sym_key):
        if sym_coeffs[sid]:
            slots.append((sym_coeffs[sid], sid))
    if not slots:
        return UmbralExpr.constant(1) if n == 0 else UmbralExpr.zero()

    m = len(slots)
    # coefficient powers c_i^e, precomputed per slot
    pows = [[Fraction(1)] for _ in range(m)]
    for i, (c, _) in enumerate(slots):
        for _ in range(n):
            pows[i].append(pows[i][-1] * c)

    terms: dict[Monomial, Fraction] = {}
    for parts in composition_parts(n, m):
        coeff = Fraction(multinomial(n, parts))
        for i, e in enumerate(parts):
            coeff *= pows[i][e]
        x_exp = 0
        sym_pows: list[tuple[SymbolId, int]] = []
        for (c, sid), e in zip(slots, parts):
            if e == 0:
                continue
            if sid is None:
                x_exp = e
            else:
                sym_pows.append((sid, e))
        mono = (x_exp, tuple(sym_pows))
        s = terms.get(mono, Fraction(0)) + coeff
        if s:
            terms[mono] = s
        else:
            terms.pop(mono, None)
    return UmbralExpr(terms)


def umbral_substitute(f: Poly, affine: Sequence[AffineTerm]) -> UmbralExpr:
    """f evaluated at an affine symbol combination: sum_m f_m (affine)^m."""
    out = UmbralExpr.zero()
    for m, c in enumerate(f):
        if c:
            out = out + umbral_pow(affine, m) * c
    return out


_MOMENTS = {
    SymbolKind.BERNOULLI: bernoulli_number,
    SymbolKind.EULER: euler_poly_at_zero,
    SymbolKind.UNIFORM_CONTINUOUS: lambda n: Fraction(1, n + 1),
    SymbolKind.UNIFORM_DISCRETE: lambda n: Fraction(1) if n == 0 else Fraction(1, 2),
}


def umbral_eval(e: UmbralExpr) -> Poly:
    """Replace symbol powers by moments, multiplicatively across symbols.

    The formal variable stays; the result is an exact polynomial in x.
    """
    acc: dict[int, Fraction] = {}
    for (x_exp, sym_pows), coeff in e.terms.items():
        val = coeff
        for sid, exp in sym_pows:
            val *= _MOMENTS[sid.kind](exp)
            if val == 0:
                break
        if val:
            acc[x_exp] = acc.get(x_exp, Fraction(0)) + val
    if not acc:
        return ZERO
    top = max(acc)
    return poly([acc.get(i, Fraction(0)) for i in range(top + 1)])


class OpVariant(Enum):
    FORWARD = "forward"
    DISCRETE_MEAN = "discrete-mean"


@dataclass(frozen=True)
class DifferenceOp:
    """A composition of single-shift difference or two-point-mean operators.

    The single-shift factors commute, so the order of `shifts` is
    immaterial; it is kept as given for determinism.
    """

    shifts: tuple[Fraction, ...]
    variant: OpVariant


def forward_difference(*shifts: Fraction | int) -> DifferenceOp:
    return DifferenceOp(tuple(Fraction(u) for u in shifts), OpVariant.FORWARD)


def discrete_mean(*shifts: Fraction | int) -> DifferenceOp:
    return DifferenceOp(tuple(Fraction(u) for u in shifts), OpVariant.DISCRETE_MEAN)


def apply_delta(op: DifferenceOp, p: Poly) -> Poly:
    """Apply the operator composition to an exact polynomial."""
    half = Fraction(1, 2)
    for u in op.shifts:
        if op.variant is OpVariant.FORWARD:
            p = poly_sub(poly_shift(p, u), p)
        else:
            p = poly_scale(half, poly_add(p, poly_shift(p, u)))
    return p


def _subset_ops(k: int):
    for j in range(1, k + 1):
        for subset in combinations(range(k), j):
            yield j, subset


def verify_lemma1(k: int, shifts: Sequence[Fraction], test_poly: Poly) -> bool:
    """Forward difference at the summed shift equals the sum over all
    non-empty shift subsets of the composed single-shift differences."""
    if k < 1 or len(shifts) != k:
        raise ValueError(f"verify_lemma1 requires len(shifts) == k >= 1, got k={k}")
    shifts = [Fraction(u) for u in shifts]
    lhs = apply_delta(forward_difference(sum(shifts)), test_poly)
    rhs = ZERO
    for _, subset in _subset_ops(k):
        rhs = poly_add(rhs, apply_delta(forward_difference(*(shifts[i] for i in subset)), test_poly))
    return lhs == rhs


def verify_lemma3(k: int, shifts: Sequence[Fraction], test_poly: Poly) -> bool:
    """Two-point-mean analogue of the subset expansion.

    The mean at the summed shift equals, for even k, the identity minus the
    alternating subset sum sum_j (-2)^{j-1} sum_{|J|=j} delta_J, and for odd
    k the alternating subset sum itself.
    """
    if k < 1 or len(shifts) != k:
        raise ValueError(f"verify_lemma3 requires len(shifts) == k >= 1, got k={k}")
    shifts = [Fraction(u) for u in shifts]
    lhs = apply_delta(discrete_mean(sum(shifts)), test_poly)
    acc = ZERO
    for j, subset in _subset_ops(k):
        term = apply_delta(discrete_mean(*(shifts[i] for i in subset)), test_poly)
        acc = poly_add(acc, poly_scale(Fraction(-2) ** (j - 1), term))
    if k % 2 == 0:
        return lhs == poly_sub(test_poly, acc)
    return lhs == acc


def verify_lemma2(k: int, u: Sequence[Fraction], n: int) -> bool:
    """Subset expansion of a weighted power of independent Bernoulli symbols.

    With weights summing to 1, (x + u_1 S_1 + ... + u_k S_k)^n / n! equals
    sum over non-empty subsets J of u_J / (n+1-|J|)! times
    (x + S_0 + sum_{i not in J} u_i S_i)^{n+1-|J|}, where S_0..S_k are
    independent Bernoulli symbols and terms with |J| > n+1 vanish.  Both
    sides are compared after exact moment evaluation.
    """
    if k < 1 or len(u) != k:
        raise ValueError(f"verify_lemma2 requires len(u) == k >= 1, got k={k}")
    if n < 0:
        raise ValueError(f"verify_lemma2 requires n >= 0, got n={n}")
    u = [Fraction(v) for v in u]
    if sum(u) != 1:
        raise ValueError("verify_lemma2 requires the weights to sum to 1")
    syms = [bernoulli_symbol(i) for i in range(k + 1)]
    lhs = umbral_pow([(Fraction(1), X)] + [(u[i], syms[i + 1]) for i in range(k)], n)
    lhs = lhs * Fraction(1, factorial(n))
    rhs = UmbralExpr.zero()
    for j, subset in _subset_ops(k):
        if j > n + 1:
            continue
        u_j = Fraction(1)
        for i in subset:
            u_j *= u[i]
        rest: list[AffineTerm] = [(Fraction(1), X), (Fraction(1), syms[0])]
        rest += [(u[i], syms[i + 1]) for i in range(k) if i not in subset]
        rhs = rhs + umbral_pow(rest, n + 1 - j) * (u_j / factorial(n + 1 - j))
    return umbral_eval(lhs) == umbral_eval(rhs)


def verify_lemma4(k: int, u: Sequence[Fraction], n: int) -> bool:
    """Subset expansion of a weighted power of independent Euler symbols.

    With weights summing to 1: for even k, (n+1) (x + sum u_i T_i)^n equals
    sum_j (-2)^j sum_{|J|=j} (x + S + sum_{i not in J} u_i T_i)^{n+1} with a
    Bernoulli symbol S; for odd k, (x + sum u_i T_i)^n equals
    sum_j (-2)^{j-1} sum_{|J|=j} (x + T_0 + sum_{i not in J} u_i T_i)^n.
    Both sides are compared after exact moment evaluation.
    """
    if k < 1 or len(u) != k:
        raise ValueError(f"verify_lemma4 requires len(u) == k >= 1, got k={k}")
    if n < 0:
        raise ValueError(f"verify_lemma4 requires n >= 0, got n={n}")
    u = [Fraction(v) for v in u]
    if sum(u) != 1:
        raise ValueError("verify_lemma4 requires the weights to sum to 1")
    es = [euler_symbol(i) for i in range(k + 1)]
    weighted: list[AffineTerm] = [(Fraction(1), X)]
    weighted += [(u[i], es[i + 1]) for i in range(k)]
    rhs = UmbralExpr.zero()
    if k % 2 == 0:
        lhs = umbral_pow(weighted, n) * (n + 1)
        banchor = bernoulli_symbol(0)
        for j, subset in _subset_ops(k):
            rest: list[AffineTerm] = [(Fraction(1), X), (Fraction(1), banchor)]
            rest += [(u[i], es[i + 1]) for i in range(k) if i not in subset]
            rhs = rhs + umbral_pow(rest, n + 1) * Fraction(-2) ** j
    else:
        lhs = umbral_pow(weighted, n)
        for j, subset in _subset_ops(k):
            rest = [(Fraction(1), X), (Fraction(1), es[0])]
            rest += [(u[i], es[i + 1]) for i in range(k) if i not in subset]
            rhs = rhs + umbral_pow(rest, n) * Fraction(-2) ** (j - 1)
    return umbral_eval(lhs) == umbral_eval(rhs)


def verify_annihilation(symbol_pair: tuple[SymbolId, SymbolId], n: int) -> bool:
    """True iff the moment evaluation of (S + T)^n is identically zero.

    Holds for n >= 1 when (S, T) is a Bernoulli symbol with a continuous
    uniform symbol, or an Euler symbol with a discrete uniform symbol.
    """
    if n < 1:
        raise ValueError(f"verify_annihilation requires n >= 1, got n={n}")
    s, t = symbol_pair
    e = umbral_pow([(Fraction(1), s), (Fraction(1), t)], n)
    return umbral_eval(e) == ZERO


def verify_general_f(k: int, u: Sequence[Fraction], f: Poly) -> bool:
    """Polynomial form of the subset expansion for an arbitrary function.

    f(x + u_1 S_1 + ... + u_k S_k) equals sum over non-empty subsets J of
    u_J f^(|J|-1)(x + S_0 + sum_{i not in J} u_i S_i), with independent
    Bernoulli symbols S_0..S_k and weights summing to 1, compared after
    exact moment evaluation.
    """
    if k < 1 or len(u) != k:
        raise ValueError(f"verify_general_f requires len(u) == k >= 1, got k={k}")
    u = [Fraction(v) for v in u]
    if sum(u) != 1:
        raise ValueError("verify_general_f requires the weights to sum to 1")
    syms = [bernoulli_symbol(i) for i in range(k + 1)]
    lhs = umbral_substitute(f, [(Fraction(1), X)] + [(u[i], syms[i + 1]) for i in range(k)])
    derivs = [f]
    for _ in range(k - 1):
        derivs.append(poly_derivative(derivs[-1]))
    rhs = UmbralExpr.zero()
    for j, subset in _subset_ops(k):
        u_j = Fraction(1)
        for i in subset:
            u_j *= u[i]
        rest: list[AffineTerm] = [(Fraction(1), X), (Fraction(1), syms[0])]
        rest += [(u[i], syms[i + 1]) for i in range(k) if i not in subset]
        rhs = rhs + umbral_substitute(derivs[j - 1], rest) * u_j
    return umbral_eval(lhs) == umbral_eval(rhs)
