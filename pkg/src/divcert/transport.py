"""Exact transport (Kantorovich / Wasserstein-1) distance.

Two independently computed closed forms are provided: the L1 distance
between quantile functions and the L1 distance between CDFs.  For step
functions both integrals are finite sums, so they agree exactly; the
tests use that agreement as an internal consistency check.
"""

from __future__ import annotations

from fractions import Fraction

from .dist import SimpleDist


def kantorovich(a: SimpleDist, b: SimpleDist) -> Fraction:
    """Integral over (0,1] of |q_a(u) - q_b(u)|, exact.

    Both quantile functions are constant between merged cumulative
    probability breakpoints, so the integral is a finite sum.
    """
    total = Fraction(0)
    ia = ib = 0
    ca = a.atoms[0][1]
    cb = b.atoms[0][1]
    prev = Fraction(0)
    while True:
        level = ca if ca <= cb else cb
        total += abs(a.atoms[ia][0] - b.atoms[ib][0]) * (level - prev)
        if level == 1:
            return total
        prev = level
        if ca == level:
            ia += 1
            ca += a.atoms[ia][1]
        if cb == level:
            ib += 1
            cb += b.atoms[ib][1]


def kantorovich_cdf(a: SimpleDist, b: SimpleDist) -> Fraction:
    """Integral over the reals of |F_a(x) - F_b(x)|, exact.

    Both CDFs are constant between merged atom values and agree outside
    the merged support, so the integral is a finite sum over consecutive
    merged values.
    """
    values = sorted(set(a.values) | set(b.values))
    total = Fraction(0)
    fa = Fraction(0)
    fb = Fraction(0)
    ia = ib = 0
    for left, right in zip(values, values[1:]):
        while ia < len(a.atoms) and a.atoms[ia][0] <= left:
            fa += a.atoms[ia][1]
            ia += 1
        while ib < len(b.atoms) and b.atoms[ib][0] <= left:
            fb += b.atoms[ib][1]
            ib += 1
        total += abs(fa - fb) * (right - left)
    return total
