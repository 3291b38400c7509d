"""Pure-Python matching kernel.

Finds the lexicographically smallest perfect matching of a bipartite
graph given in CSR form (``indptr``/``indices`` over ``n`` left rows and
``n`` right columns, column lists sorted ascending).  "Lexicographically
smallest" means the column sequence (col(0), col(1), ..., col(n-1)) is
minimal among all perfect matchings.

The algorithm runs Kuhn's augmenting-path search with rows processed in
index order and columns scanned in ascending order to get an initial
perfect matching, then pins rows one by one: for each row, every smaller
column is tried in turn and kept if the remaining graph still extends to
a perfect matching (one augmenting-path test per candidate).

``divcert._matching`` is the compiled twin; both must stay behaviourally
identical (see tests).
"""

from __future__ import annotations

from typing import Sequence


def _augment(
    root: int,
    barrier: int,
    indptr: Sequence[int],
    indices: Sequence[int],
    row_of: list[int],
    col_of: list[int],
    visited: list[bool],
) -> bool:
    """Search an augmenting path from free row `root`, iteratively.

    Rows below `barrier` are pinned: their matched columns may not be
    displaced.  On success the matching arrays are updated in place.
    """
    stack_row = [root]
    stack_ptr = [indptr[root]]
    stack_col = [-1]
    while stack_row:
        row = stack_row[-1]
        ptr = stack_ptr[-1]
        if ptr >= indptr[row + 1]:
            stack_row.pop()
            stack_ptr.pop()
            stack_col.pop()
            continue
        stack_ptr[-1] = ptr + 1
        col = indices[ptr]
        if visited[col]:
            continue
        owner = row_of[col]
        if owner != -1 and owner < barrier:
            continue
        visited[col] = True
        stack_col[-1] = col
        if owner == -1:
            for r, c in zip(stack_row, stack_col):
                row_of[c] = r
                col_of[r] = c
            return True
        stack_row.append(owner)
        stack_ptr.append(indptr[owner])
        stack_col.append(-1)
    return False


def lex_min_perfect_matching(
    n: int, indptr: Sequence[int], indices: Sequence[int]
) -> list[int] | None:
    """Return the lex-smallest perfect matching as a row->column list.

    Returns None when the graph has no perfect matching.
    """
    col_of = [-1] * n
    row_of = [-1] * n

    for row in range(n):
        visited = [False] * n
        if not _augment(row, 0, indptr, indices, row_of, col_of, visited):
            return None

    for row in range(n):
        current = col_of[row]
        for ptr in range(indptr[row], indptr[row + 1]):
            col = indices[ptr]
            if col >= current:
                break
            owner = row_of[col]
            if owner <= row:
                continue  # column already pinned to an earlier row
            # Tentatively move `row` onto `col`, freeing `owner`, and test
            # whether the displaced row can be rematched elsewhere.
            col_of[row] = col
            row_of[col] = row
            col_of[owner] = -1
            row_of[current] = -1
            visited = [False] * n
            if _augment(owner, row + 1, indptr, indices, row_of, col_of, visited):
                current = col
                break
            col_of[row] = current
            row_of[current] = row
            col_of[owner] = col
            row_of[col] = owner

    return col_of
