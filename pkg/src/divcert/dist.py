"""Exact finite distributions on the rationals.

All values and probabilities are :class:`fractions.Fraction`; every
operation here is exact, so equality of canonical distributions is
equality of the distributions themselves.  No floating point enters the
core: machine reals are converted to their exact binary value on ingest
and decimal strings parse as exact decimal fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

#: expand_to_uniform_grid refuses to build grids larger than this by default;
#: lcm blowup of probability denominators is the one real resource hazard.
DEFAULT_GRID_CAP = 10**6


class GridCapError(ValueError):
    """Raised when a uniform-grid refinement would exceed the atom cap."""


def as_rational(x) -> Fraction:
    """Convert `x` to an exact Fraction.

    Accepts Fractions, ints, strings ("p/q" or decimal, both parsed
    exactly) and finite floats (converted from their exact binary value,
    not re-parsed through decimal text).
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"cannot represent non-finite value {x!r}")
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def simplex_weights(weights: Sequence, size: int | None = None) -> tuple[Fraction, ...]:
    """Validate and convert a weight vector: entries >= 0, exact sum 1."""
    ws = tuple(as_rational(w) for w in weights)
    if size is not None and len(ws) != size:
        raise ValueError(f"expected {size} weights, got {len(ws)}")
    if any(w < 0 for w in ws):
        raise ValueError("weights must be non-negative")
    if sum(ws) != 1:
        raise ValueError("weights must sum to exactly 1")
    return ws


@dataclass(frozen=True)
class SimpleDist:
    """Canonical finite distribution on the rationals.

    `atoms` holds (value, probability) pairs with strictly increasing
    values, all probabilities positive and summing to exactly 1.  The
    canonical form makes structural equality coincide with equality in
    distribution.  Instances are immutable; build them with
    :meth:`from_pairs` unless the input is already canonical.
    """

    atoms: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("a distribution needs at least one atom")
        total = Fraction(0)
        prev = None
        for value, prob in self.atoms:
            if not isinstance(value, Fraction) or not isinstance(prob, Fraction):
                raise ValueError("atoms must hold Fraction pairs; use from_pairs()")
            if prob <= 0:
                raise ValueError("probabilities must be positive")
            if prev is not None and value <= prev:
                raise ValueError("values must be strictly increasing")
            prev = value
            total += prob
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")

    @staticmethod
    def from_pairs(pairs: Iterable[tuple]) -> "SimpleDist":
        """Build from (value, prob) pairs: converts, merges equal values,
        drops zero-probability atoms and sorts."""
        merged: dict[Fraction, Fraction] = {}
        for value, prob in pairs:
            v = as_rational(value)
            p = as_rational(prob)
            if p < 0:
                raise ValueError("probabilities must be non-negative")
            if p == 0:
                continue
            merged[v] = merged.get(v, Fraction(0)) + p
        return SimpleDist(tuple(sorted(merged.items())))

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(v for v, _ in self.atoms)

    @property
    def probs(self) -> tuple[Fraction, ...]:
        return tuple(p for _, p in self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def mean(self) -> Fraction:
        return sum((v * p for v, p in self.atoms), Fraction(0))

    def cdf(self, x) -> Fraction:
        """P(value < x) - the left-continuous distribution function."""
        x = as_rational(x)
        return sum((p for v, p in self.atoms if v < x), Fraction(0))

    def prob_at_most(self, x) -> Fraction:
        """P(value <= x), the right limit of the CDF at x."""
        x = as_rational(x)
        return sum((p for v, p in self.atoms if v <= x), Fraction(0))

    def quantile(self, u) -> Fraction:
        """Lower quantile inf{x : P(value < x or value = x) >= u}, u in (0, 1]."""
        u = as_rational(u)
        if not 0 < u <= 1:
            raise ValueError(f"quantile level must lie in (0, 1], got {u}")
        cum = Fraction(0)
        for value, prob in self.atoms:
            cum += prob
            if cum >= u:
                return value
        raise AssertionError("unreachable: probabilities sum to 1")

    def shift(self, c) -> "SimpleDist":
        c = as_rational(c)
        return SimpleDist(tuple((v + c, p) for v, p in self.atoms))

    def scale(self, k) -> "SimpleDist":
        k = as_rational(k)
        if k == 0:
            return dirac(0)
        return SimpleDist.from_pairs((v * k, p) for v, p in self.atoms)


def dirac(value) -> SimpleDist:
    """Point mass at `value`."""
    return SimpleDist(((as_rational(value), Fraction(1)),))


def from_samples(xs: Sequence) -> SimpleDist:
    """Empirical distribution of the samples, each with weight 1/N."""
    xs = list(xs)
    if not xs:
        raise ValueError("cannot build a distribution from no samples")
    w = Fraction(1, len(xs))
    return SimpleDist.from_pairs((x, w) for x in xs)


@dataclass(frozen=True)
class UniformGrid:
    """n equally likely values (probability 1/n each), sorted non-decreasing.

    Repeats are allowed; the grid is the slot-level view of a distribution
    whose probabilities all have denominator dividing n.
    """

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("a grid needs at least one value")
        for prev, cur in zip(self.values, self.values[1:]):
            if cur < prev:
                raise ValueError("grid values must be sorted non-decreasing")
        for v in self.values:
            if not isinstance(v, Fraction):
                raise ValueError("grid values must be Fractions")

    @staticmethod
    def from_values(values: Iterable) -> "UniformGrid":
        return UniformGrid(tuple(sorted(as_rational(v) for v in values)))

    @property
    def n(self) -> int:
        return len(self.values)

    def to_dist(self) -> SimpleDist:
        w = Fraction(1, self.n)
        return SimpleDist.from_pairs((v, w) for v in self.values)

    def mean(self) -> Fraction:
        return Fraction(sum(self.values), self.n)


def regrid(d: SimpleDist, n: int) -> UniformGrid:
    """Represent `d` on a uniform grid of exactly n slots.

    Each atom must carry probability k/n for integer k; otherwise the
    distribution is not representable at this resolution and ValueError
    is raised.
    """
    if n < 1:
        raise ValueError("grid size must be positive")
    values: list[Fraction] = []
    for value, prob in d.atoms:
        count = prob * n
        if count.denominator != 1:
            raise ValueError(f"distribution does not fit on a grid of {n} slots")
        values.extend([value] * int(count))
    return UniformGrid(tuple(values))


def expand_to_uniform_grid(d: SimpleDist, cap: int = DEFAULT_GRID_CAP) -> UniformGrid:
    """Smallest uniform-grid representation of `d` (n = lcm of probability
    denominators).  Refuses grids above `cap` atoms; quantize the
    probabilities first if that happens."""
    n = math.lcm(*(p.denominator for p in d.probs))
    if n > cap:
        raise GridCapError(
            f"uniform refinement needs {n} atoms, above the cap of {cap}; "
            "quantize the probabilities to a coarser denominator first"
        )
    return regrid(d, n)


def common_refinement(
    a: SimpleDist, b: SimpleDist, cap: int = DEFAULT_GRID_CAP
) -> tuple[UniformGrid, UniformGrid]:
    """Uniform grids of a shared size representing `a` and `b` exactly."""
    n = math.lcm(*(p.denominator for p in a.probs + b.probs))
    if n > cap:
        raise GridCapError(
            f"common refinement needs {n} atoms, above the cap of {cap}; "
            "quantize the probabilities to a coarser denominator first"
        )
    return regrid(a, n), regrid(b, n)


def mixture(ds: Sequence[SimpleDist], weights: Sequence) -> SimpleDist:
    """Probabilistic mixture: P(x) = sum_i w_i P_i(x).

    Zero-weight components drop out entirely.
    """
    ws = simplex_weights(weights, len(ds))
    pairs = []
    for d, w in zip(ds, ws):
        if w == 0:
            continue
        pairs.extend((v, w * p) for v, p in d.atoms)
    return SimpleDist.from_pairs(pairs)


@dataclass(frozen=True)
class JointDist:
    """Finite joint distribution of m real coordinates.

    Atoms are (vector, probability) pairs with distinct vectors sorted
    lexicographically, probabilities positive and summing to 1.
    """

    atoms: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("a joint distribution needs at least one atom")
        m = len(self.atoms[0][0])
        if m < 1:
            raise ValueError("joint distributions need at least one coordinate")
        total = Fraction(0)
        prev = None
        for vec, prob in self.atoms:
            if len(vec) != m:
                raise ValueError("all atom vectors must share the same length")
            if prob <= 0:
                raise ValueError("probabilities must be positive")
            if prev is not None and vec <= prev:
                raise ValueError("atom vectors must be distinct and sorted")
            prev = vec
            total += prob
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")

    @staticmethod
    def from_pairs(pairs: Iterable[tuple]) -> "JointDist":
        # sort-and-merge rather than a dict: vectors can be long, and
        # comparing them short-circuits where hashing cannot
        converted = []
        for vec, prob in pairs:
            p = as_rational(prob)
            if p < 0:
                raise ValueError("probabilities must be non-negative")
            if p == 0:
                continue
            converted.append((tuple(as_rational(v) for v in vec), p))
        converted.sort(key=lambda pair: pair[0])
        merged: list[tuple[tuple[Fraction, ...], Fraction]] = []
        for vec, p in converted:
            if merged and merged[-1][0] == vec:
                merged[-1] = (vec, merged[-1][1] + p)
            else:
                merged.append((vec, p))
        return JointDist(tuple(merged))

    @property
    def m(self) -> int:
        return len(self.atoms[0][0])

    def marginal(self, i: int) -> SimpleDist:
        """Distribution of coordinate i (0-based)."""
        if not 0 <= i < self.m:
            raise IndexError(f"coordinate {i} out of range for m={self.m}")
        return SimpleDist.from_pairs((vec[i], p) for vec, p in self.atoms)

    def marginals(self) -> tuple[SimpleDist, ...]:
        return tuple(self.marginal(i) for i in range(self.m))


def convex_combination(j: JointDist, weights: Sequence) -> SimpleDist:
    """Distribution of the scalar sum_i w_i X_i under the joint law `j`."""
    ws = simplex_weights(weights, j.m)
    pairs = []
    for vec, prob in j.atoms:
        s = sum((w * v for w, v in zip(ws, vec)), Fraction(0))
        pairs.append((s, prob))
    return SimpleDist.from_pairs(pairs)


def quantize_values(d: SimpleDist, q: int) -> SimpleDist:
    """Round every value to the nearest multiple of 1/q, ties toward -inf.

    Moves each atom by at most 1/(2q), so the transport distance to the
    original is at most 1/(2q).
    """
    if q < 1:
        raise ValueError("quantization denominator must be a positive integer")
    pairs = []
    half = Fraction(1, 2)
    for value, prob in d.atoms:
        k = math.ceil(value * q - half)
        pairs.append((Fraction(k, q), prob))
    return SimpleDist.from_pairs(pairs)
