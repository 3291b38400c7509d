# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled matching kernel.

Behavioural twin of ``divcert._matching_py`` (lexicographically smallest
perfect matching on a CSR bipartite graph); see that module for the
algorithm description.  Keep the two implementations in sync.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset


cdef bint _augment(
    int root,
    int barrier,
    const int* indptr,
    const int* indices,
    int* row_of,
    int* col_of,
    unsigned char* visited,
    int* stack_row,
    int* stack_ptr,
    int* stack_col,
) noexcept nogil:
    cdef int depth = 0
    cdef int row, ptr, col, owner, k
    stack_row[0] = root
    stack_ptr[0] = indptr[root]
    stack_col[0] = -1
    while depth >= 0:
        row = stack_row[depth]
        ptr = stack_ptr[depth]
        if ptr >= indptr[row + 1]:
            depth -= 1
            continue
        stack_ptr[depth] = ptr + 1
        col = indices[ptr]
        if visited[col]:
            continue
        owner = row_of[col]
        if owner != -1 and owner < barrier:
            continue
        visited[col] = 1
        stack_col[depth] = col
        if owner == -1:
            for k in range(depth + 1):
                row_of[stack_col[k]] = stack_row[k]
                col_of[stack_row[k]] = stack_col[k]
            return True
        depth += 1
        stack_row[depth] = owner
        stack_ptr[depth] = indptr[owner]
        stack_col[depth] = -1
    return False


def lex_min_perfect_matching(int n, int[::1] indptr, int[::1] indices):
    """Return the lex-smallest perfect matching as a row->column list,
    or None when no perfect matching exists."""
    cdef const int* iptr = &indptr[0]
    cdef const int* ind = NULL
    if indices.shape[0] > 0:
        ind = &indices[0]

    cdef int* col_of = <int*> malloc(n * sizeof(int))
    cdef int* row_of = <int*> malloc(n * sizeof(int))
    cdef int* stack_row = <int*> malloc(n * sizeof(int))
    cdef int* stack_ptr = <int*> malloc(n * sizeof(int))
    cdef int* stack_col = <int*> malloc(n * sizeof(int))
    cdef unsigned char* visited = <unsigned char*> calloc(n, 1)
    if (col_of == NULL or row_of == NULL or stack_row == NULL
            or stack_ptr == NULL or stack_col == NULL or visited == NULL):
        free(col_of); free(row_of); free(stack_row)
        free(stack_ptr); free(stack_col); free(visited)
        raise MemoryError()

    cdef int row, ptr, col, owner, current
    cdef bint ok = True
    try:
        for row in range(n):
            col_of[row] = -1
            row_of[row] = -1
        for row in range(n):
            memset(visited, 0, n)
            if not _augment(row, 0, iptr, ind, row_of, col_of, visited,
                            stack_row, stack_ptr, stack_col):
                ok = False
                break
        if not ok:
            return None

        for row in range(n):
            current = col_of[row]
            for ptr in range(iptr[row], iptr[row + 1]):
                col = ind[ptr]
                if col >= current:
                    break
                owner = row_of[col]
                if owner <= row:
                    continue
                col_of[row] = col
                row_of[col] = row
                col_of[owner] = -1
                row_of[current] = -1
                memset(visited, 0, n)
                if _augment(owner, row + 1, iptr, ind, row_of, col_of,
                            visited, stack_row, stack_ptr, stack_col):
                    current = col
                    break
                col_of[row] = current
                row_of[current] = row
                col_of[owner] = col
                row_of[col] = owner

        return [col_of[row] for row in range(n)]
    finally:
        free(col_of)
        free(row_of)
        free(stack_row)
        free(stack_ptr)
        free(stack_col)
        free(visited)
