"""Exact Stanley depth via the characteristic-poset interval method.

The quotient is first contracted to the plain polynomial ring on the
non-inverted variables (each inverted variable contributes +1 to sdepth).
There the monomials of I'\\J' below the componentwise generator bound g
form a finite poset whose interval partitions correspond to Stanley
decompositions; sdepth is the best achievable minimum corner count.  The
partition search runs in a compiled kernel when available.
"""

from dataclasses import dataclass
from itertools import product

from . import ring, stanley
from ._intervals import find_partition
from .errors import (
    BudgetExceededError,
    ContextMismatchError,
    ZeroModuleError,
)
from .ring import MonomialIdeal, RingContext
from .stanley import StanleyDecomposition, StanleySpace

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class CharacteristicPoset:
    context: RingContext          # polynomial ring on the kept variables
    bound: tuple                  # componentwise generator maximum g
    elements: tuple               # lex-sorted exponent vectors of I'\J' below g


@dataclass(frozen=True)
class IntervalPartition:
    intervals: tuple              # (b, c) pairs, b <= c <= g


def reduce_to_polynomial(I, J):
    """Contract a subquotient of the localized ring to the polynomial ring
    on the non-inverted variables.

    Returns (I', J', offset, kept) where offset = number of inverted
    variables (sdepth I/J = sdepth I'/J' + offset) and kept maps the new
    coordinates back to the original ones.
    """
    if I.context != J.context:
        raise ContextMismatchError("ideals live in different rings")
    ring.require_subquotient(I, J)
    ctx = I.context
    kept = ctx.plain
    new_ctx = RingContext(len(kept), frozenset())
    def project(g):
        return tuple(g[i] for i in kept)
    Ip = MonomialIdeal(new_ctx, frozenset(project(g) for g in I.generators))
    Jp = MonomialIdeal(new_ctx, frozenset(project(g) for g in J.generators))
    return Ip, Jp, len(ctx.inverted), tuple(kept)


def build_characteristic_poset(Ip, Jp):
    """The finite poset of exponent vectors a <= g with x^a in I'\\J',
    where g is the componentwise maximum over all generators."""
    ctx = Ip.context
    if ctx.inverted or Jp.context.inverted:
        raise ContextMismatchError("characteristic poset needs a polynomial ring")
    ring.require_subquotient(Ip, Jp)
    gens = list(Ip.generators) + list(Jp.generators)
    g = tuple(
        max((gen[i] for gen in gens), default=0) for i in range(ctx.n)
    )
    elements = [
        a
        for a in product(*[range(gi + 1) for gi in g])
        if ring.contains(Ip, a) and not ring.contains(Jp, a)
    ]
    elements.sort()
    return CharacteristicPoset(ctx, g, tuple(elements))


def max_interval_partition(poset, budget=DEFAULT_BUDGET):
    """Best interval partition of the poset: maximizes the minimum corner
    count rho(c) = #{i: c_i = g_i} over its intervals.

    Tries the decision problem for each target k from the dimension down;
    the first feasible k wins and the witness is the lexicographically
    smallest optimal partition.  The node budget is shared across targets
    and exhausting it raises rather than returning a possibly wrong value.
    """
    if not poset.elements:
        raise ZeroModuleError("empty poset: the quotient is the zero module")
    remaining = budget
    total = 0
    for k in range(poset.context.n, -1, -1):
        status, intervals, nodes = find_partition(
            list(poset.elements), poset.bound, k, remaining
        )
        total += nodes
        remaining -= nodes
        if status == "budget":
            raise BudgetExceededError(
                "interval search budget exceeded after %d nodes" % total, total
            )
        if status == "found":
            return k, IntervalPartition(tuple(intervals))
    raise AssertionError("k=0 singleton partition must always exist")


def partition_to_decomposition(poset, partition, Ip, Jp):
    """Map an interval partition to the Stanley decomposition it encodes.

    The interval [b, c] gets the admissible set Z = {x_i : c_i = g_i} and
    one space x^a K[Z] per root a in [b, c] with a_i = b_i on Z; when the
    upper corner is extremal in every non-Z coordinate this is the single
    space x^b K[Z].
    """
    ctx = poset.context
    g = poset.bound
    spaces = []
    for b, c in partition.intervals:
        z = frozenset(i for i in range(ctx.n) if c[i] == g[i])
        root_ranges = [
            range(b[i], b[i] + 1) if i in z else range(b[i], c[i] + 1)
            for i in range(ctx.n)
        ]
        for a in product(*root_ranges):
            spaces.append(StanleySpace(ctx, a, z, frozenset()))
    return StanleyDecomposition(ctx, tuple(spaces))


@dataclass(frozen=True)
class SdepthResult:
    value: int
    witness: StanleyDecomposition

    def __int__(self):
        return self.value


def _embed_and_invert(D, ctx, kept):
    """Lift a decomposition over the kept variables back to the full ring,
    re-adjoining every inverted variable as an x, x^-1 pair of spaces."""
    A = sorted(ctx.inverted)
    back = dict(zip(range(len(kept)), kept))
    spaces = []
    for s in D.spaces:
        base_root = [0] * ctx.n
        for i, e in enumerate(s.root):
            base_root[back[i]] = e
        base_z = frozenset(back[i] for i in s.zplus)
        for bits in product((False, True), repeat=len(A)):
            L = frozenset(a for a, b in zip(A, bits) if b)
            root = tuple(
                -1 if i in L else e for i, e in enumerate(base_root)
            )
            zplus = base_z | (frozenset(A) - L)
            spaces.append(StanleySpace(ctx, root, zplus, L))
    spaces.sort(key=lambda s: s.key())
    return StanleyDecomposition(ctx, tuple(spaces))


def sdepth(I, J, budget=DEFAULT_BUDGET):
    """Exact Stanley depth of I/J with a verifying witness decomposition."""
    Ip, Jp, offset, kept = reduce_to_polynomial(I, J)
    if Ip == Jp:
        raise ZeroModuleError("I/J is the zero module; sdepth undefined")
    poset = build_characteristic_poset(Ip, Jp)
    k, partition = max_interval_partition(poset, budget)
    Dp = partition_to_decomposition(poset, partition, Ip, Jp)
    witness = _embed_and_invert(Dp, I.context, kept)
    return SdepthResult(k + offset, witness)
