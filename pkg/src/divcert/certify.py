"""Constructive certificates for dominance relations.

Everything here produces machine-checkable witnesses with exact rational
data:

* a chain of two-coordinate transfer matrices turning one uniform grid
  into a majorized one, multiplied out to a doubly stochastic matrix D
  with a = D b;
* a Birkhoff peeling of D into a convex combination of at most
  (n-1)^2 + 1 permutation matrices (the permutation-weight certificate
  for diversification dominance);
* the martingale coupling C = D/n realizing the mean-preserving spread;
* the lift that adds a non-negative slack to each side of an arbitrary
  pair until the dominated-with-equal-means case applies;
* the truncation splitting second-order dominance into a first-order
  step followed by an equal-means step.

All constructions are deterministic: the transfer chain always picks the
smallest deficient index and the smallest surplus index after it, and
the peeling always extracts the lexicographically smallest perfect
matching of the positive-entry graph.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .dist import (
    DEFAULT_GRID_CAP,
    JointDist,
    SimpleDist,
    UniformGrid,
    common_refinement,
)
from .dominance import check_majorization
from .matching import lex_min_perfect_matching
from .risk import ssd_violation


class CertificationError(ValueError):
    """A certificate cannot be built for these inputs."""


class MeansDifferError(CertificationError):
    def __init__(self, mean_xi: Fraction, mean_eta: Fraction):
        super().__init__(f"means differ: {mean_xi} vs {mean_eta}")
        self.mean_xi = mean_xi
        self.mean_eta = mean_eta


class SsdViolatedError(CertificationError):
    def __init__(self, alpha: Fraction):
        super().__init__(f"second-order dominance violated at level {alpha}")
        self.alpha = alpha


class MajorizationError(CertificationError):
    def __init__(self, witness: int):
        super().__init__(f"prefix-sum dominance violated at index {witness}")
        self.witness = witness


@dataclass(frozen=True)
class TTransform:
    """Doubly stochastic transfer (1-s)*I + s*Q_ij mixing coordinates i<j."""

    i: int
    j: int
    s: Fraction

    def __post_init__(self):
        if not 0 <= self.i < self.j:
            raise ValueError("need 0 <= i < j")
        if not 0 < self.s <= 1:
            raise ValueError("mixing share must lie in (0, 1]")

    def apply(self, vec: list[Fraction]) -> None:
        """Replace entries i and j by their s-mix, in place."""
        vi, vj = vec[self.i], vec[self.j]
        vec[self.i] = vi + self.s * (vj - vi)
        vec[self.j] = vj + self.s * (vi - vj)


@dataclass(frozen=True)
class DoublyStochasticMatrix:
    """Square matrix of exact rationals with all row and column sums 1."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        col_sums = [Fraction(0)] * n
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            total = Fraction(0)
            for j, x in enumerate(row):
                if x < 0:
                    raise ValueError("entries must be non-negative")
                total += x
                col_sums[j] += x
            if total != 1:
                raise ValueError(f"row sum {total} is not 1")
        if any(c != 1 for c in col_sums):
            raise ValueError("column sums must all be 1")

    @property
    def n(self) -> int:
        return len(self.rows)

    def apply(self, vec: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        return tuple(
            sum((x * v for x, v in zip(row, vec)), Fraction(0)) for row in self.rows
        )


@dataclass(frozen=True)
class PermutationCertificate:
    """Convex combination of permutations witnessing a = sum_k w_k * (b o perm_k).

    `terms` holds (perm, weight) pairs; perm maps slot index to source
    index in the dominated grid (0-based).  Weights are positive and sum
    to exactly 1, and the term count never exceeds (n-1)^2 + 1.
    """

    n: int
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("grid size must be positive")
        if not self.terms:
            raise ValueError("a certificate needs at least one term")
        if len(self.terms) > (self.n - 1) ** 2 + 1:
            raise ValueError(
                f"{len(self.terms)} terms exceed the bound {(self.n - 1) ** 2 + 1}"
            )
        full = frozenset(range(self.n))
        total = Fraction(0)
        for perm, weight in self.terms:
            if len(perm) != self.n or frozenset(perm) != full:
                raise ValueError(f"{perm} is not a permutation of 0..{self.n - 1}")
            if weight <= 0:
                raise ValueError("term weights must be positive")
            total += weight
        if total != 1:
            raise ValueError(f"term weights sum to {total}, not 1")

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(w for _, w in self.terms)

    def combine(self, values: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        """Slot-wise weighted combination sum_k w_k * values[perm_k[i]]."""
        if len(values) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(values)}")
        out = [Fraction(0)] * self.n
        for perm, weight in self.terms:
            for i, src in enumerate(perm):
                out[i] += weight * values[src]
        return tuple(out)

    def as_matrix(self) -> DoublyStochasticMatrix:
        """The convex combination of permutation matrices, reassembled."""
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        for perm, weight in self.terms:
            for i, src in enumerate(perm):
                rows[i][src] += weight
        return DoublyStochasticMatrix(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class MartingaleCoupling:
    """Joint law on grid slots with uniform marginals and the martingale
    property: conditionally on each row slot, the column values average
    back to the row value exactly."""

    n: int
    matrix: tuple[tuple[Fraction, ...], ...]
    row_values: tuple[Fraction, ...]
    col_values: tuple[Fraction, ...]

    def __post_init__(self):
        n = self.n
        if len(self.matrix) != n or len(self.row_values) != n or len(self.col_values) != n:
            raise ValueError("matrix and value grids must all have size n")
        share = Fraction(1, n)
        col_sums = [Fraction(0)] * n
        for i, row in enumerate(self.matrix):
            if len(row) != n:
                raise ValueError("matrix must be square")
            row_sum = Fraction(0)
            row_mean = Fraction(0)
            for j, c in enumerate(row):
                if c < 0:
                    raise ValueError("entries must be non-negative")
                row_sum += c
                col_sums[j] += c
                row_mean += c * self.col_values[j]
            if row_sum != share:
                raise ValueError(f"row {i} sums to {row_sum}, not 1/{n}")
            if row_mean * n != self.row_values[i]:
                raise ValueError(f"martingale property fails on row {i}")
        if any(c != share for c in col_sums):
            raise ValueError(f"column sums must all be 1/{n}")


@dataclass(frozen=True)
class LiftResult:
    """Outcome of lifting an arbitrary pair to a dominated one.

    `delta` lives on the slots of xi's refined grid; `gamma_top` is added
    to the top slot of eta's.  The lifted pair has equal means and the
    lifted xi second-order dominates the lifted eta, with the mean of
    delta equal to the dominance gap of the original pair.
    """

    xi_grid: tuple[Fraction, ...]
    eta_grid: tuple[Fraction, ...]
    delta: tuple[Fraction, ...]
    gamma_top: Fraction
    lifted_xi: SimpleDist
    lifted_eta: SimpleDist

    def __post_init__(self):
        if any(d < 0 for d in self.delta):
            raise ValueError("slack values must be non-negative")
        if self.gamma_top < 0:
            raise ValueError("top-slot slack must be non-negative")


@dataclass(frozen=True)
class DecompositionResult:
    """Truncation step splitting second-order dominance.

    `c` is the truncation level (None when the means already match and
    zeta = xi); zeta = min(xi, c) satisfies: xi first-order dominates
    zeta, mean(zeta) = mean(eta), and zeta second-order dominates eta.
    """

    c: Fraction | None
    zeta: SimpleDist


def t_transform_chain(a: UniformGrid, b: UniformGrid) -> tuple[TTransform, ...]:
    """Transfers turning grid b into grid a, at most n-1 of them.

    Requires a to be majorized by b (equal totals, ascending prefix sums
    of a at least those of b).  Each step picks the smallest index i
    where the working vector is still below a (prefix dominance forces
    the deficit), the smallest j > i holding a surplus, and moves
    t = min(deficit, surplus) between them; every step settles at least
    one index for good.
    """
    maj = check_majorization(a, b)
    if not maj:
        raise MajorizationError(maj.witness)
    n = a.n
    c = list(b.values)
    target = a.values
    transforms = []
    i = 0
    for _ in range(n):
        while i < n and c[i] == target[i]:
            i += 1
        if i == n:
            break
        j = i + 1
        while c[j] <= target[j]:
            j += 1
        t = min(target[i] - c[i], c[j] - target[j])
        transforms.append(TTransform(i, j, t / (c[j] - c[i])))
        c[i] += t
        c[j] -= t
    else:
        raise AssertionError("transfer loop failed to settle all indices")
    return tuple(transforms)


def _scaled_transfer_rows(a: UniformGrid, b: UniformGrid) -> tuple[list[list[int]], int]:
    """Integer numerators of L*D for the transfer-chain product D.

    Rows carry individual denominators while the chain is applied (each
    transfer touches two rows only) and are brought to the common
    denominator L at the end.  Integer arithmetic keeps the peeling hot
    path free of per-operation gcd normalization.
    """
    n = a.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
    denoms = [1] * n
    for tr in t_transform_chain(a, b):
        p = tr.s.numerator
        q = tr.s.denominator
        li, lj = denoms[tr.i], denoms[tr.j]
        lcm_ij = li // math.gcd(li, lj) * lj
        ci = lcm_ij // li
        cj = lcm_ij // lj
        qp = q - p
        ri, rj = rows[tr.i], rows[tr.j]
        for k in range(n):
            x = ri[k] * ci
            y = rj[k] * cj
            ri[k] = qp * x + p * y
            rj[k] = p * x + qp * y
        denoms[tr.i] = denoms[tr.j] = q * lcm_ij
    L = 1
    for d in denoms:
        L = L // math.gcd(L, d) * d
    for i in range(n):
        m = L // denoms[i]
        if m != 1:
            row = rows[i]
            for k in range(n):
                row[k] *= m
    return rows, L


def build_doubly_stochastic(a: UniformGrid, b: UniformGrid) -> DoublyStochasticMatrix:
    """Doubly stochastic D with a = D b, built as the exact product of the
    transfer chain."""
    if a.n != b.n:
        raise ValueError(f"grid sizes differ: {a.n} vs {b.n}")
    rows, L = _scaled_transfer_rows(a, b)
    matrix = DoublyStochasticMatrix(
        tuple(tuple(Fraction(x, L) for x in row) for row in rows)
    )
    if matrix.apply(b.values) != a.values:
        raise AssertionError("transfer product failed to reproduce the target grid")
    return matrix


def _peel_scaled(
    rows: list[list[int]], L: int
) -> list[tuple[tuple[int, ...], Fraction]]:
    """Birkhoff peeling of the integer matrix rows/L.

    Each round extracts the lexicographically smallest perfect matching
    of the positive-entry bipartite graph and subtracts the minimum
    matched entry, zeroing at least one cell.  The support adjacency is
    maintained incrementally since a peel only changes matched entries.
    """
    n = len(rows)
    adjacency = [[j for j, x in enumerate(row) if x] for row in rows]
    remaining = L
    terms = []
    for _ in range(n * n + 1):
        perm = lex_min_perfect_matching(adjacency)
        if perm is None:
            raise ValueError(
                "positive entries admit no perfect matching; "
                "the matrix is not doubly stochastic"
            )
        weight = min(rows[i][perm[i]] for i in range(n))
        terms.append((tuple(perm), Fraction(weight, L)))
        for i in range(n):
            j = perm[i]
            left = rows[i][j] - weight
            rows[i][j] = left
            if not left:
                adjacency[i].remove(j)
        remaining -= weight
        if not remaining:
            return terms
    raise AssertionError("peeling failed to terminate")


def birkhoff_decompose(D: DoublyStochasticMatrix) -> PermutationCertificate:
    """Peel D into a convex combination of at most (n-1)^2 + 1 permutation
    matrices.  Deterministic: every round takes the lexicographically
    smallest perfect matching of the support."""
    L = 1
    for row in D.rows:
        for x in row:
            L = L // math.gcd(L, x.denominator) * x.denominator
    rows = [[x.numerator * (L // x.denominator) for x in row] for row in D.rows]
    terms = _peel_scaled(rows, L)
    return PermutationCertificate(n=D.n, terms=tuple(terms))


def _certified_refinement(
    xi: SimpleDist, eta: SimpleDist, cap: int
) -> tuple[UniformGrid, UniformGrid]:
    mean_xi = xi.mean()
    mean_eta = eta.mean()
    if mean_xi != mean_eta:
        raise MeansDifferError(mean_xi, mean_eta)
    alpha = ssd_violation(xi, eta)
    if alpha is not None:
        raise SsdViolatedError(alpha)
    return common_refinement(xi, eta, cap)


def certify_div1(
    xi: SimpleDist, eta: SimpleDist, cap: int = DEFAULT_GRID_CAP
) -> tuple[PermutationCertificate, JointDist]:
    """Permutation-weight certificate that xi diversification-dominates eta.

    Requires equal means and second-order dominance.  On the common
    uniform refinement (grids a and b), builds the doubly stochastic D
    with a = D b and peels it into permutations; also materializes the
    witnessing joint law whose k-th coordinate is the k-th rearranged
    copy of eta (slot i carries the vector of b[perm_k[i]] with
    probability 1/n).  The certificate reconstructs xi exactly.
    """
    a, b = _certified_refinement(xi, eta, cap)
    rows, L = _scaled_transfer_rows(a, b)
    cert = PermutationCertificate(n=a.n, terms=tuple(_peel_scaled(rows, L)))
    n = a.n
    share = Fraction(1, n)
    joint = JointDist.from_pairs(
        (tuple(b.values[perm[i]] for perm, _ in cert.terms), share) for i in range(n)
    )
    return cert, joint


def mps_coupling(
    xi: SimpleDist, eta: SimpleDist, cap: int = DEFAULT_GRID_CAP
) -> MartingaleCoupling:
    """Joint law of (xi, eta) on the common refinement under which eta is
    xi plus conditionally-mean-zero noise: C = D/n, whose rows average
    back to xi's grid values exactly."""
    a, b = _certified_refinement(xi, eta, cap)
    D = build_doubly_stochastic(a, b)
    n = a.n
    matrix = tuple(tuple(x / n for x in row) for row in D.rows)
    return MartingaleCoupling(
        n=n, matrix=matrix, row_values=a.values, col_values=b.values
    )


def lift_delta_gamma(
    xi: SimpleDist, eta: SimpleDist, cap: int = DEFAULT_GRID_CAP
) -> LiftResult:
    """Lift an arbitrary pair to one where certification applies.

    On the common refinement (x sorted, y sorted), the slot slacks are
    built iteratively: delta_k = max(0, sum_{i<=k} y_i - sum_{i<=k} x_i
    - sum_{i<k} delta_i), which forces every prefix of x + delta to
    dominate the matching prefix of y while keeping x + delta sorted.
    The top slot of y then absorbs gamma_top = sum(x) + sum(delta) -
    sum(y) >= 0 so both lifted grids share the same mean.  The mean of
    delta equals the dominance gap of the original pair exactly.
    """
    gx, gy = common_refinement(xi, eta, cap)
    x = gx.values
    y = gy.values
    n = len(x)
    delta = []
    running = Fraction(0)  # prefix of y - prefix of x - prefix of delta
    for xk, yk in zip(x, y):
        running += yk - xk
        d = max(Fraction(0), running)
        delta.append(d)
        running -= d
    gamma_top = sum(x) + sum(delta) - sum(y)
    lifted_x = [xv + dv for xv, dv in zip(x, delta)]
    lifted_y = list(y)
    lifted_y[-1] += gamma_top
    share = Fraction(1, n)
    return LiftResult(
        xi_grid=x,
        eta_grid=y,
        delta=tuple(delta),
        gamma_top=gamma_top,
        lifted_xi=SimpleDist.from_pairs((v, share) for v in lifted_x),
        lifted_eta=SimpleDist.from_pairs((v, share) for v in lifted_y),
    )


def decompose_ssd(xi: SimpleDist, eta: SimpleDist) -> DecompositionResult:
    """Split second-order dominance into a first-order step and an
    equal-means step.

    When the means already agree, zeta = xi.  Otherwise the truncation
    level c solves E min(xi, c) = E eta on the piecewise-linear
    increasing map y -> E min(xi, y), in closed form on the segment
    located by bisection, and zeta = min(xi, c).
    """
    alpha = ssd_violation(xi, eta)
    if alpha is not None:
        raise SsdViolatedError(alpha)
    target = eta.mean()
    if xi.mean() == target:
        return DecompositionResult(c=None, zeta=xi)

    probs = xi.probs
    # g(v_k) for every atom; g(y) = E min(xi, y) is linear between atoms
    # with slope P(xi > v_k) and equals y below the support.
    g_at = []
    below_mass = Fraction(0)  # E[xi; xi < v_k]
    cum = Fraction(0)  # P(xi < v_k)
    for v, p in xi.atoms:
        g_at.append(below_mass + v * (1 - cum))
        below_mass += v * p
        cum += p

    if target <= g_at[0]:
        c = target  # g(y) = y below the smallest atom
    else:
        k = bisect_left(g_at, target) - 1  # largest k with g_at[k] < target
        head_mass = sum((v * p for v, p in xi.atoms[: k + 1]), Fraction(0))
        tail_prob = 1 - sum(probs[: k + 1], Fraction(0))
        c = (target - head_mass) / tail_prob

    mass_at_c = Fraction(0)
    pairs = []
    for v, p in xi.atoms:
        if v < c:
            pairs.append((v, p))
        else:
            mass_at_c += p
    pairs.append((c, mass_at_c))
    zeta = SimpleDist.from_pairs(pairs)
    if zeta.mean() != target:
        raise AssertionError("truncation failed to match the target mean")
    return DecompositionResult(c=c, zeta=zeta)
