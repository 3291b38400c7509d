"""Expected Shortfall and the dominance gap functional, computed exactly.

Everything here works on the step quantile function of a
:class:`~divcert.dist.SimpleDist`: tail integrals are sums of full steps
plus one exact partial step, so no interpolation error exists anywhere.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .dist import SimpleDist, as_rational


def _check_level(alpha) -> Fraction:
    alpha = as_rational(alpha)
    if not 0 < alpha <= 1:
        raise ValueError(f"level must lie in (0, 1], got {alpha}")
    return alpha


def tail_integral(d: SimpleDist, alpha) -> Fraction:
    """Integral of the lower quantile function over (0, alpha], exact."""
    alpha = _check_level(alpha)
    total = Fraction(0)
    cum = Fraction(0)
    for value, prob in d.atoms:
        if cum + prob < alpha:
            total += value * prob
            cum += prob
        else:
            return total + value * (alpha - cum)
    raise AssertionError("unreachable: probabilities sum to 1")


def expected_shortfall(d: SimpleDist, alpha) -> Fraction:
    """Average loss over the worst alpha-fraction of outcomes:
    -(1/alpha) * integral of the quantile function over (0, alpha]."""
    alpha = _check_level(alpha)
    return -tail_integral(d, alpha) / alpha


@dataclass(frozen=True)
class ESCurve:
    """The map alpha -> integral of the quantile function over (0, alpha].

    Piecewise linear and continuous, with kinks only at the stored
    breakpoints (the cumulative probabilities of the distribution); its
    value at 1 is the mean.  Evaluation between breakpoints is the exact
    partial-step formula, so no approximation is involved.
    """

    breakpoints: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if not self.breakpoints:
            raise ValueError("an ES curve needs at least one breakpoint")
        prev = Fraction(0)
        for alpha, _ in self.breakpoints:
            if not 0 < alpha <= 1 or alpha <= prev:
                raise ValueError("breakpoint levels must increase within (0, 1]")
            prev = alpha
        if self.breakpoints[-1][0] != 1:
            raise ValueError("the last breakpoint must sit at level 1")
        object.__setattr__(self, "_levels", tuple(a for a, _ in self.breakpoints))

    @property
    def alphas(self) -> tuple[Fraction, ...]:
        return self._levels

    def tail_integral_at(self, alpha) -> Fraction:
        alpha = _check_level(alpha)
        k = bisect_left(self._levels, alpha)
        a, t = self.breakpoints[k]
        prev_a, prev_t = self.breakpoints[k - 1] if k else (Fraction(0), Fraction(0))
        slope = (t - prev_t) / (a - prev_a)
        return prev_t + slope * (alpha - prev_a)

    def es_at(self, alpha) -> Fraction:
        alpha = _check_level(alpha)
        return -self.tail_integral_at(alpha) / alpha


def es_curve(d: SimpleDist) -> ESCurve:
    points = []
    cum = Fraction(0)
    total = Fraction(0)
    for value, prob in d.atoms:
        cum += prob
        total += value * prob
        points.append((cum, total))
    return ESCurve(tuple(points))


def merged_breakpoints(xi: SimpleDist, eta: SimpleDist) -> tuple[Fraction, ...]:
    """Union of the cumulative-probability breakpoints of both
    distributions, sorted, always ending at 1."""
    levels = set()
    for d in (xi, eta):
        cum = Fraction(0)
        for _, prob in d.atoms:
            cum += prob
            levels.add(cum)
    return tuple(sorted(levels))


def _gap_at_breakpoints(
    xi: SimpleDist, eta: SimpleDist
) -> list[tuple[Fraction, Fraction]]:
    """(alpha, G(alpha)) at every merged breakpoint, where G(alpha) is the
    integral of (q_eta - q_xi) over (0, alpha].  G is piecewise linear
    with kinks only at these points and G(0) = 0.

    Single merge pass over both step quantile functions.
    """
    out = []
    ix = iy = 0
    cx = xi.atoms[0][1]
    cy = eta.atoms[0][1]
    prev = Fraction(0)
    gx = Fraction(0)
    gy = Fraction(0)
    while True:
        level = cx if cx <= cy else cy
        gx += xi.atoms[ix][0] * (level - prev)
        gy += eta.atoms[iy][0] * (level - prev)
        out.append((level, gy - gx))
        if level == 1:
            return out
        prev = level
        if cx == level:
            ix += 1
            cx += xi.atoms[ix][1]
        if cy == level:
            iy += 1
            cy += eta.atoms[iy][1]


def ssd_violation(xi: SimpleDist, eta: SimpleDist) -> Fraction | None:
    """Smallest breakpoint alpha at which the quantile-gap integral
    G(alpha) is positive, or None when xi second-order dominates eta."""
    for alpha, gap in _gap_at_breakpoints(xi, eta):
        if gap > 0:
            return alpha
    return None


def ssd_gap(xi: SimpleDist, eta: SimpleDist) -> Fraction:
    """sup over alpha in (0,1] of alpha*(ES_alpha(xi) - ES_alpha(eta)),
    clamped below at 0 (the alpha -> 0 limit contributes exactly 0).

    The function inside the sup is piecewise linear, so the sup is
    attained at a breakpoint; zero iff xi second-order dominates eta.
    """
    worst = Fraction(0)
    for _, gap in _gap_at_breakpoints(xi, eta):
        if gap > worst:
            worst = gap
    return worst
