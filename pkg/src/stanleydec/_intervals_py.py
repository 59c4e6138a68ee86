"""Pure-Python interval-partition search kernel.

Decides whether the characteristic poset admits a partition into intervals
[b, c] whose upper corners all touch the bound g in at least k coordinates.
The search always extends from the lexicographically smallest uncovered
element (which is forced to be the lower corner of its interval) and tries
upper corners in lexicographic order, so the first partition found is the
lexicographically smallest one - both kernels must return it identically.

Contract shared with the compiled kernel:

    find_partition(elements, g, k, budget) -> (status, intervals, nodes)

elements is a lex-sorted list of exponent tuples, status is one of
"found" / "infeasible" / "budget", intervals is the partition (list of
(b, c) pairs) when found, nodes counts candidate expansions.
"""

from itertools import product


def _corners_at_least(g, k):
    """All box points whose corner count rho(c) = #{i: c_i = g_i} is >= k,
    in lexicographic order."""
    out = []
    for c in product(*[range(gi + 1) for gi in g]):
        if sum(1 for ci, gi in zip(c, g) if ci == gi) >= k:
            out.append(c)
    return out


def find_partition(elements, g, k, budget):
    n = len(g)
    elements = sorted(elements)
    index = {e: i for i, e in enumerate(elements)}
    m = len(elements)
    covered = [False] * m
    corners = _corners_at_least(g, k)
    intervals = []
    state = {"nodes": 0, "budget": budget}

    def interval_cells(b, c):
        return product(*[range(b[i], c[i] + 1) for i in range(n)])

    def search(scan_from):
        # advance to the lex-smallest uncovered element
        pos = scan_from
        while pos < m and covered[pos]:
            pos += 1
        if pos == m:
            return "found"
        b = elements[pos]
        for c in corners:
            if any(c[i] < b[i] for i in range(n)):
                continue
            cells = []
            ok = True
            for cell in interval_cells(b, c):
                j = index.get(cell)
                if j is None or covered[j]:
                    ok = False
                    break
                cells.append(j)
            if not ok:
                continue
            state["nodes"] += 1
            if state["nodes"] > state["budget"]:
                return "budget"
            for j in cells:
                covered[j] = True
            intervals.append((b, c))
            verdict = search(pos + 1)
            if verdict != "infeasible":
                return verdict
            intervals.pop()
            for j in cells:
                covered[j] = False
        return "infeasible"

    status = search(0)
    if status == "found":
        return status, list(intervals), state["nodes"]
    return status, None, state["nodes"]
