"""Backend selection for the perfect-matching kernel.

The compiled Cython kernel (``divcert._matching``) is preferred when it
was built; otherwise the pure-Python twin is used.  Both expose the same
CSR-level function and must produce identical output; the active backend
can be switched at runtime, which the benchmark and the cross-validation
tests rely on.
"""

from __future__ import annotations

from array import array
from typing import Sequence

from . import _matching_py

_BACKENDS = {"python": _matching_py}
try:
    from . import _matching  # compiled extension, optional

    _BACKENDS["compiled"] = _matching
except ImportError:  # pragma: no cover - depends on the build environment
    _matching = None

_active = "compiled" if "compiled" in _BACKENDS else "python"


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def active_backend() -> str:
    return _active


def set_active_backend(name: str) -> None:
    if name not in _BACKENDS:
        raise ValueError(f"unknown matching backend {name!r}; have {available_backends()}")
    global _active
    _active = name


def csr_from_adjacency(adjacency: Sequence[Sequence[int]]) -> tuple[int, array, array]:
    """Flatten per-row column lists (each sorted ascending) to CSR arrays."""
    n = len(adjacency)
    indptr = array("i", [0] * (n + 1))
    indices = array("i")
    for i, cols in enumerate(adjacency):
        indices.extend(cols)
        indptr[i + 1] = len(indices)
    return n, indptr, indices


def lex_min_perfect_matching(
    adjacency: Sequence[Sequence[int]], backend: str | None = None
) -> list[int] | None:
    """Lexicographically smallest perfect matching of a bipartite graph.

    `adjacency[i]` lists the columns reachable from row i in ascending
    order.  Returns the row->column assignment, or None when the graph
    has no perfect matching.
    """
    n, indptr, indices = csr_from_adjacency(adjacency)
    impl = _BACKENDS[backend or _active]
    result = impl.lex_min_perfect_matching(n, indptr, indices)
    return None if result is None else list(result)
