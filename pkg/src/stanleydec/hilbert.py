"""Modified Hilbert function and series for subquotients of the localized
ring.

Degrees are total absolute degrees |a| = sum |a_i|, so a Laurent variable
contributes in both directions.  Series are rational functions P(t)/(1-t)^d
with integer P, kept in the canonical form where P is not divisible by
(1-t).  Note these degree slices do not multiply into each other - nothing
here ever multiplies two graded components.
"""

from dataclasses import dataclass
from itertools import product

from . import ring
from .errors import MalformedInputError
from .stanley import StanleyDecomposition, StanleySpace


def _poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _poly_trim(out)


def _poly_mul_one_minus_t(p, times):
    """Multiply by (1-t)^times."""
    out = list(p)
    for _ in range(times):
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i] += c
            nxt[i + 1] -= c
        out = nxt
    return _poly_trim(out)


def _poly_div_one_minus_t(p):
    """Exact division by (1-t); returns None when not divisible."""
    if not p:
        return ()
    q = []
    acc = 0
    for c in p:
        acc += c
        q.append(acc)
    if q[-1] != 0:
        return None
    return _poly_trim(q[:-1])


@dataclass(frozen=True)
class HilbertSeries:
    """P(t)/(1-t)^pole with P an ascending integer coefficient tuple."""

    numerator: tuple
    pole: int

    def __post_init__(self):
        num = _poly_trim(self.numerator)
        pole = self.pole
        if pole < 0:
            raise MalformedInputError("pole order must be nonnegative")
        while pole > 0:
            q = _poly_div_one_minus_t(num)
            if q is None:
                break
            num = q
            pole -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "pole", pole)

    def numerator_at_one(self):
        return sum(self.numerator)

    def __add__(self, other):
        pole = max(self.pole, other.pole)
        a = _poly_mul_one_minus_t(self.numerator, pole - self.pole)
        b = _poly_mul_one_minus_t(other.numerator, pole - other.pole)
        return HilbertSeries(_poly_add(a, b), pole)


ZERO_SERIES = HilbertSeries((), 0)


@dataclass(frozen=True)
class DegreeCount:
    degree: int
    count: int


def _vectors_of_abs_degree(ctx, d):
    """All exponent vectors of total absolute degree d, nonnegative off the
    inverted coordinates."""
    def rec(i, remaining):
        if i == ctx.n:
            if remaining == 0:
                yield ()
            return
        for v in range(remaining + 1):
            signs = (v, -v) if (v > 0 and i in ctx.inverted) else (v,)
            for s in signs:
                for rest in rec(i + 1, remaining - v):
                    yield (s,) + rest
    return rec(0, d)


def hilbert_count(I, J, d):
    """Number of monomials of I\\J of total absolute degree d, by direct
    enumeration.  This is the independent oracle for the series machinery
    and deliberately shares none of its code."""
    if d < 0:
        raise MalformedInputError("degree must be nonnegative")
    ring.require_subquotient(I, J)
    n = 0
    for a in _vectors_of_abs_degree(I.context, d):
        if ring.contains(I, a) and not ring.contains(J, a):
            n += 1
    return n


def _t_power(k):
    return (0,) * k + (1,)


def series_of_space(s):
    """Series of a single Stanley space by the split-toward-zero recursion.

    While the root points against an admissible direction (positive
    exponent with the inverse admissible, or negative exponent with the
    plain variable admissible), peel off the degree-zero-slice summand and
    shift the root one step toward zero.  The conflict-free base case is
    t^{|root|}/(1-t)^{|Z|}.
    """
    root = s.root
    conflict = None
    for i in range(s.context.n):
        if (root[i] > 0 and i in s.zminus) or (root[i] < 0 and i in s.zplus):
            conflict = i
            break
    if conflict is None:
        return HilbertSeries(_t_power(ring.abs_degree(root)), s.dimension)
    i = conflict
    if root[i] > 0:
        slab = StanleySpace(s.context, root, s.zplus, s.zminus - {i})
        shifted = root[:i] + (root[i] - 1,) + root[i + 1:]
    else:
        slab = StanleySpace(s.context, root, s.zplus - {i}, s.zminus)
        shifted = root[:i] + (root[i] + 1,) + root[i + 1:]
    rest = StanleySpace(s.context, shifted, s.zplus, s.zminus)
    return series_of_space(slab) + series_of_space(rest)


def series_of_laurent_ring(u, inverted, extra_vars):
    """Closed form for u times the ring with the given coordinates
    inverted and extra_vars additional plain variables:
    t^{|u'|} (1+t)^{|A|} / (1-t)^{|A|+extra}, with unit factors of u
    stripped."""
    inverted = frozenset(inverted)
    deg = sum(abs(e) for i, e in enumerate(u) if i not in inverted)
    for i, e in enumerate(u):
        if e < 0 and i not in inverted:
            raise MalformedInputError("negative exponent off the inverted set")
    num = _t_power(deg)
    for _ in range(len(inverted)):
        num = _poly_add(num, (0,) + num)
    return HilbertSeries(num, len(inverted) + extra_vars)


def series_of_decomposition(D):
    """Sum of the space series over a common denominator.  For a valid
    decomposition the numerator evaluated at 1 counts the spaces of
    maximal dimension."""
    total = ZERO_SERIES
    for s in D.spaces:
        total = total + series_of_space(s)
    return total


def count_maximal_spaces(obj):
    """P(1) of the canonical series - the decomposition-independent number
    of maximal-dimension Stanley spaces."""
    if isinstance(obj, StanleyDecomposition):
        obj = series_of_decomposition(obj)
    return obj.numerator_at_one()


def expand(series, d_max):
    """Power-series coefficients up to degree d_max (exact integers)."""
    if d_max < 0:
        raise MalformedInputError("expansion degree must be nonnegative")
    coeffs = list(series.numerator[: d_max + 1])
    coeffs += [0] * (d_max + 1 - len(coeffs))
    for _ in range(series.pole):
        acc = 0
        for i in range(d_max + 1):
            acc += coeffs[i]
            coeffs[i] = acc
    return [DegreeCount(d, c) for d, c in enumerate(coeffs)]
