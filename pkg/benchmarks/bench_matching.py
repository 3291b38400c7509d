"""Head-to-head benchmark: compiled matching kernel vs pure-Python twin.

The kernel sits in the inner loop of Birkhoff peeling, which dominates
certificate construction for large refinements, so two views are timed:

* raw kernel calls on support graphs harvested from real peeling runs;
* end-to-end certificate construction with each backend selected.

Usage: python benchmarks/bench_matching.py [--pairs N] [--seed S]
"""

from __future__ import annotations

import argparse
import random
import time
from fractions import Fraction

from divcert import UniformGrid, certify_div1, matching


def spread_pair(rng: random.Random, base_atoms: int, doublings: int):
    xi_vals = sorted(Fraction(rng.randint(-32, 32), 4) for _ in range(base_atoms))
    eta_vals = list(xi_vals)
    for _ in range(doublings):
        spread = []
        for v in eta_vals:
            if rng.random() < 0.7:
                s = Fraction(rng.randint(0, 16), 8)
                spread.extend([v - s, v + s])
            else:
                spread.extend([v, v])
        eta_vals = spread
    return (
        UniformGrid.from_values(xi_vals).to_dist(),
        UniformGrid.from_values(sorted(eta_vals)).to_dist(),
    )


def harvest_supports(pairs):
    """Collect the support graphs the peeling loop actually sees."""
    from divcert.certify import _scaled_transfer_rows
    from divcert.dist import common_refinement
    from divcert.matching import lex_min_perfect_matching

    supports = []
    for xi, eta in pairs:
        a, b = common_refinement(xi, eta)
        rows, scale = _scaled_transfer_rows(a, b)
        n = len(rows)
        adjacency = [[j for j, x in enumerate(row) if x] for row in rows]
        remaining = scale
        while remaining:
            supports.append([list(cols) for cols in adjacency])
            perm = lex_min_perfect_matching(adjacency)
            weight = min(rows[i][perm[i]] for i in range(n))
            for i in range(n):
                j = perm[i]
                rows[i][j] -= weight
                if not rows[i][j]:
                    adjacency[i].remove(j)
            remaining -= weight
    return supports


def time_kernel(supports, backend: str) -> float:
    start = time.perf_counter()
    for adjacency in supports:
        matching.lex_min_perfect_matching(adjacency, backend=backend)
    return time.perf_counter() - start


def time_certify(pairs, backend: str) -> float:
    active = matching.active_backend()
    matching.set_active_backend(backend)
    try:
        start = time.perf_counter()
        for xi, eta in pairs:
            certify_div1(xi, eta)
        return time.perf_counter() - start
    finally:
        matching.set_active_backend(active)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=60)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    pairs = [spread_pair(rng, rng.randint(4, 8), rng.randint(2, 3)) for _ in range(args.pairs)]
    supports = harvest_supports(pairs[: max(5, args.pairs // 10)])
    backends = matching.available_backends()
    print(f"backends available: {', '.join(backends)}")
    if "compiled" not in backends:
        print("compiled kernel not built; timing the pure kernel only")

    print(f"\nraw kernel, {len(supports)} support graphs from real peeling runs:")
    times = {}
    for backend in backends:
        times[backend] = time_kernel(supports, backend)
        print(f"  {backend:>8}: {times[backend]:8.3f}s")
    if len(times) == 2:
        print(f"  speedup: {times['python'] / times['compiled']:.1f}x")

    print(f"\nend-to-end certificate construction, {len(pairs)} spread pairs:")
    times = {}
    for backend in backends:
        times[backend] = time_certify(pairs, backend)
        print(f"  {backend:>8}: {times[backend]:8.3f}s")
    if len(times) == 2:
        print(f"  speedup: {times['python'] / times['compiled']:.1f}x")


if __name__ == "__main__":
    main()
