"""Shared helpers for randomized test instances."""

import random

from stanleydec import ring, solver
from stanleydec.ring import MonomialIdeal, RingContext
from stanleydec.solver import IntervalPartition
from stanleydec.stanley import StanleyDecomposition


def random_quotient(rng, n=None, inverted=None, max_exp=2, max_gens=3):
    """A random pair J < I (strict) of monomial ideals, J built from
    multiples of generators of I so containment holds by construction."""
    while True:
        n_ = n if n is not None else rng.randint(1, 3)
        if inverted is None:
            A = frozenset(i for i in range(n_) if rng.random() < 0.35)
        else:
            A = frozenset(inverted)
        ctx = RingContext(n_, A)
        plain = ctx.plain

        def rand_gen(lo=0):
            g = [0] * n_
            for i in plain:
                g[i] = rng.randint(lo, max_exp)
            return tuple(g)

        I = MonomialIdeal(
            ctx, frozenset(rand_gen() for _ in range(rng.randint(1, max_gens)))
        )
        if I.is_zero:
            continue
        Jg = set()
        for g in I.generators:
            if rng.random() < 0.5:
                Jg.add(ring.mul(g, rand_gen()))
        J = MonomialIdeal(ctx, frozenset(Jg))
        if I == J:
            continue
        return ctx, I, J


def polynomial_quotient(rng, n=None, max_exp=2):
    return random_quotient(rng, n=n, inverted=frozenset(), max_exp=max_exp)


def localize_pair(I, J, A):
    ctx = RingContext(I.context.n, frozenset(A))
    return ring.extend_to(I, ctx), ring.extend_to(J, ctx)


def singleton_partition(poset):
    """Every poset element as its own interval: always a valid partition."""
    return IntervalPartition(tuple((e, e) for e in poset.elements))


def greedy_partition(poset, rng):
    """Random valid interval partition: repeatedly take the lex-smallest
    uncovered element and a random feasible upper corner."""
    from itertools import product

    g = poset.bound
    n = poset.context.n
    elems = set(poset.elements)
    covered = set()
    intervals = []
    for b in poset.elements:
        if b in covered:
            continue
        feasible = []
        for c in product(*[range(b[i], g[i] + 1) for i in range(n)]):
            cells = list(product(*[range(b[i], c[i] + 1) for i in range(n)]))
            if all(x in elems and x not in covered for x in cells):
                feasible.append((c, cells))
        c, cells = feasible[rng.randrange(len(feasible))]
        covered.update(cells)
        intervals.append((b, c))
    return IntervalPartition(tuple(intervals))


def split_refinement(partition, poset):
    """Split every splittable interval once along its first wide axis."""
    out = []
    g = poset.bound
    for b, c in partition.intervals:
        axis = next((i for i in range(len(b)) if c[i] > b[i]), None)
        if axis is None:
            out.append((b, c))
            continue
        low_c = tuple(b[i] if i == axis else c[i] for i in range(len(b)))
        high_b = tuple(b[i] + 1 if i == axis else b[i] for i in range(len(b)))
        out.append((b, low_c))
        out.append((high_b, c))
    return IntervalPartition(tuple(out))


def decomposition_from_partition(I, J, partition):
    """Lift a partition of the contracted poset to a decomposition of I/J
    in its own (possibly localized) ring."""
    Ip, Jp, _, kept = solver.reduce_to_polynomial(I, J)
    poset = solver.build_characteristic_poset(Ip, Jp)
    Dp = solver.partition_to_decomposition(poset, partition, Ip, Jp)
    return solver._embed_and_invert(Dp, I.context, kept)


def all_decomposition_variants(I, J, rng):
    """Several structurally different valid decompositions of I/J."""
    Ip, Jp, _, kept = solver.reduce_to_polynomial(I, J)
    poset = solver.build_characteristic_poset(Ip, Jp)
    _, best = solver.max_interval_partition(poset)
    parts = [
        best,
        singleton_partition(poset),
        greedy_partition(poset, rng),
        split_refinement(best, poset),
    ]
    return [decomposition_from_partition(I, J, p) for p in parts]
