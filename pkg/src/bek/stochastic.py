"""Monte Carlo cross-check of the Dirichlet mixed-moment formula.

The exact side says that for independent gamma variables with shapes a_i,
the normalized weights u_i = g_i / sum(g) satisfy

    E[u_1^{l_1} ... u_k^{l_k}] = prod_i (a_i)_{l_i} / (sum a)_{sum l}

with rising-factorial products on the right.  The sampler estimates the
left side directly and reports agreement in standard errors.

Sampling is blocked: sample index space is cut into fixed-size blocks and
each block gets its own generator spawned from the master seed and the
block index alone.  Workers may therefore split blocks among themselves in
any way; the merged estimate depends only on the seed and sample count,
never on the shard layout.  Block sums are merged with compensated
summation so the final reduction is also order-insensitive in practice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exactmath import composition_parts, multinomial, pochhammer

BLOCK_SIZE = 65536


def dirichlet_moment_exact(a_vec: Sequence[Fraction], l_vec: Sequence[int]) -> Fraction:
    """Exact mixed moment prod_i (a_i)_{l_i} / (sum a)_{sum l}."""
    a = tuple(Fraction(v) for v in a_vec)
    l = tuple(int(v) for v in l_vec)
    if not a or len(a) != len(l):
        raise ValueError(f"need matching non-empty vectors, got lengths {len(a)} and {len(l)}")
    if any(v <= 0 for v in a):
        raise ValueError(f"shape parameters must be positive, got {a}")
    if any(v < 0 for v in l):
        raise ValueError(f"exponents must be non-negative, got {l}")
    num = Fraction(1)
    for ai, li in zip(a, l):
        num *= pochhammer(ai, li)
    return num / pochhammer(sum(a), sum(l))


@dataclass(frozen=True)
class MomentQuery:
    """One mixed-moment estimation request.

    Vectors are stored exactly; shapes are converted to floats only at the
    sampling boundary.
    """

    a_vec: tuple[Fraction, ...]
    l_vec: tuple[int, ...]
    samples: int
    seed: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_vec", tuple(Fraction(v) for v in self.a_vec))
        object.__setattr__(self, "l_vec", tuple(int(v) for v in self.l_vec))
        if len(self.a_vec) < 2 or len(self.a_vec) != len(self.l_vec):
            raise ValueError(
                f"need k >= 2 with matching vectors, got lengths {len(self.a_vec)} and {len(self.l_vec)}"
            )
        if any(v <= 0 for v in self.a_vec):
            raise ValueError(f"shape parameters must be positive, got {self.a_vec}")
        if any(v < 0 for v in self.l_vec):
            raise ValueError(f"exponents must be non-negative, got {self.l_vec}")
        if self.samples < 2:
            raise ValueError(f"need samples >= 2 for a standard error, got {self.samples}")

    @property
    def k(self) -> int:
        return len(self.a_vec)


@dataclass(frozen=True)
class MomentEstimate:
    """Sample mean with its standard error and the attached exact value."""

    mean: float
    stderr: float
    n_samples: int
    exact: Fraction

    @property
    def deviation(self) -> float:
        return abs(self.mean - float(self.exact))

    def within(self, sigma: float) -> bool:
        """True when the mean sits within sigma standard errors of exact.

        A zero standard error (degenerate moment) demands exact agreement.
        """
        if self.stderr == 0.0:
            return self.deviation == 0.0
        return self.deviation <= sigma * self.stderr


def sample_gamma(shape: float, rng: np.random.Generator) -> float:
    """One draw from the unit-scale gamma distribution with the given shape.

    Delegates to the generator's squeeze/rejection gamma method, which is
    valid for every shape > 0 (shapes below 1 are boosted internally), and
    is deterministic for a fixed generator state and draw order.
    """
    if shape <= 0:
        raise ValueError(f"shape must be positive, got {shape}")
    return float(rng.standard_gamma(shape))


def block_generator(seed: int, block: int) -> np.random.Generator:
    """Generator for one sampling block, a pure function of seed and block."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(block,))))


def dirichlet_moment_mc(q: MomentQuery) -> MomentEstimate:
    """Estimate the mixed moment by direct simulation of the weights.

    Each sample draws the k gammas, normalizes them to weights summing to
    one, and evaluates the monomial.  Results are identical for any shard
    split of the block range.
    """
    exact = dirichlet_moment_exact(q.a_vec, q.l_vec)
    shapes = np.array([float(v) for v in q.a_vec])
    exponents = np.array([float(v) for v in q.l_vec])
    remaining = q.samples
    block = 0
    block_sums: list[float] = []
    block_sq_sums: list[float] = []
    while remaining > 0:
        m = min(BLOCK_SIZE, remaining)
        rng = block_generator(q.seed, block)
        draws = rng.standard_gamma(shapes, size=(m, q.k))
        weights = draws / draws.sum(axis=1, keepdims=True)
        values = np.prod(weights ** exponents, axis=1)
        block_sums.append(float(values.sum()))
        block_sq_sums.append(float(np.square(values).sum()))
        remaining -= m
        block += 1
    n = q.samples
    mean = math.fsum(block_sums) / n
    second = math.fsum(block_sq_sums)
    variance = max(second - n * mean * mean, 0.0) / (n - 1)
    return MomentEstimate(mean=mean, stderr=math.sqrt(variance / n), n_samples=n, exact=exact)


def normalization_check(a_vec: Sequence[Fraction], n: int) -> Fraction:
    """Exact sum of multinomially weighted moments over all exponent splits.

    Because the weights sum to one, expanding (u_1 + ... + u_k)^n termwise
    must give exactly 1; the return value is that sum, for the caller to
    compare.
    """
    a = tuple(Fraction(v) for v in a_vec)
    if len(a) < 2:
        raise ValueError(f"need k >= 2 shapes, got {len(a)}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    total = Fraction(0)
    for parts in composition_parts(n, len(a)):
        total += multinomial(n, parts) * dirichlet_moment_exact(a, parts)
    return total
