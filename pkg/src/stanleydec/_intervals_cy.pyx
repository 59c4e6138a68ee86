# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled interval-partition search kernel.

Same contract and same deterministic search order as _intervals_py:
find_partition(elements, g, k, budget) -> (status, intervals, nodes).
Box cells are flattened to integer codes with the first coordinate most
significant, so numeric order on codes equals lexicographic order on
exponent tuples.
"""

from libc.stdlib cimport malloc, free

cdef int FOUND = 0
cdef int INFEASIBLE = 1
cdef int BUDGET = 2


cdef struct SearchState:
    int n
    int m                # number of poset elements
    long T               # box size
    long *strides
    int *gdig
    long *elem_codes     # ascending
    char *covered        # by code
    char *in_poset       # by code
    long *corner_codes   # ascending, rho >= k
    int ccount
    long *ib             # interval lower corners (codes), by depth
    long *ic             # interval upper corners
    int depth
    long nodes
    long budget


cdef void decode(SearchState *st, long code, int *out):
    cdef int i
    for i in range(st.n):
        out[i] = <int>(code // st.strides[i])
        code = code % st.strides[i]


cdef int search(SearchState *st, int pos, int *bdig, int *cdig, int *cell):
    cdef int i, ci, ok, all_done
    cdef long code, cellcode
    while pos < st.m and st.covered[st.elem_codes[pos]]:
        pos += 1
    if pos == st.m:
        return FOUND
    code = st.elem_codes[pos]
    decode(st, code, bdig)
    for ci in range(st.ccount):
        if st.corner_codes[ci] < code:
            continue
        decode(st, st.corner_codes[ci], cdig)
        ok = 1
        for i in range(st.n):
            if cdig[i] < bdig[i]:
                ok = 0
                break
        if not ok:
            continue
        # first pass: every cell of [b, c] must be an uncovered element
        for i in range(st.n):
            cell[i] = bdig[i]
        ok = 1
        while True:
            cellcode = 0
            for i in range(st.n):
                cellcode += cell[i] * st.strides[i]
            if not st.in_poset[cellcode] or st.covered[cellcode]:
                ok = 0
                break
            all_done = 1
            for i in range(st.n - 1, -1, -1):
                if cell[i] < cdig[i]:
                    cell[i] += 1
                    all_done = 0
                    break
                cell[i] = bdig[i]
            if all_done:
                break
        if not ok:
            continue
        st.nodes += 1
        if st.nodes > st.budget:
            return BUDGET
        # second pass: mark
        for i in range(st.n):
            cell[i] = bdig[i]
        while True:
            cellcode = 0
            for i in range(st.n):
                cellcode += cell[i] * st.strides[i]
            st.covered[cellcode] = 1
            all_done = 1
            for i in range(st.n - 1, -1, -1):
                if cell[i] < cdig[i]:
                    cell[i] += 1
                    all_done = 0
                    break
                cell[i] = bdig[i]
            if all_done:
                break
        st.ib[st.depth] = code
        st.ic[st.depth] = st.corner_codes[ci]
        st.depth += 1
        ok = search(st, pos + 1, bdig, cdig, cell)
        if ok != INFEASIBLE:
            return ok
        st.depth -= 1
        decode(st, code, bdig)
        decode(st, st.corner_codes[ci], cdig)
        for i in range(st.n):
            cell[i] = bdig[i]
        while True:
            cellcode = 0
            for i in range(st.n):
                cellcode += cell[i] * st.strides[i]
            st.covered[cellcode] = 0
            all_done = 1
            for i in range(st.n - 1, -1, -1):
                if cell[i] < cdig[i]:
                    cell[i] += 1
                    all_done = 0
                    break
                cell[i] = bdig[i]
            if all_done:
                break
    return INFEASIBLE


def find_partition(elements, g, k, budget):
    cdef SearchState st
    cdef int n = len(g)
    cdef int i, j, rho, verdict
    cdef long T = 1, code
    cdef int *bdig
    cdef int *cdig
    cdef int *cell
    gl = list(g)
    for i in range(n):
        T *= gl[i] + 1
    st.n = n
    st.m = len(elements)
    st.T = T
    st.nodes = 0
    st.budget = budget
    st.depth = 0
    st.strides = <long *> malloc(n * sizeof(long))
    st.gdig = <int *> malloc(n * sizeof(int))
    st.elem_codes = <long *> malloc((st.m + 1) * sizeof(long))
    st.covered = <char *> malloc(T * sizeof(char))
    st.in_poset = <char *> malloc(T * sizeof(char))
    st.corner_codes = <long *> malloc(T * sizeof(long))
    st.ib = <long *> malloc((st.m + 1) * sizeof(long))
    st.ic = <long *> malloc((st.m + 1) * sizeof(long))
    bdig = <int *> malloc(n * sizeof(int))
    cdig = <int *> malloc(n * sizeof(int))
    cell = <int *> malloc(n * sizeof(int))
    try:
        for i in range(n - 1, -1, -1):
            st.strides[i] = 1 if i == n - 1 else st.strides[i + 1] * (gl[i + 1] + 1)
            st.gdig[i] = gl[i]
        for code in range(T):
            st.covered[code] = 0
            st.in_poset[code] = 0
        for j, e in enumerate(sorted(elements)):
            code = 0
            for i in range(n):
                code += e[i] * st.strides[i]
            st.elem_codes[j] = code
            st.in_poset[code] = 1
        st.ccount = 0
        for code in range(T):
            rho = 0
            decode(&st, code, cdig)
            for i in range(n):
                if cdig[i] == st.gdig[i]:
                    rho += 1
            if rho >= k:
                st.corner_codes[st.ccount] = code
                st.ccount += 1
        verdict = search(&st, 0, bdig, cdig, cell)
        nodes = st.nodes
        if verdict == FOUND:
            intervals = []
            for j in range(st.depth):
                decode(&st, st.ib[j], bdig)
                b = tuple(bdig[i] for i in range(n))
                decode(&st, st.ic[j], cdig)
                c = tuple(cdig[i] for i in range(n))
                intervals.append((b, c))
            return "found", intervals, nodes
        if verdict == BUDGET:
            return "budget", None, nodes
        return "infeasible", None, nodes
    finally:
        free(st.strides); free(st.gdig); free(st.elem_codes)
        free(st.covered); free(st.in_poset); free(st.corner_codes)
        free(st.ib); free(st.ic)
        free(bdig); free(cdig); free(cell)
