"""Monomials and monomial ideals in a localized polynomial ring.

The ambient ring is K[x_1..x_n] with the variables indexed by ``inverted``
turned into units.  Monomials are bare exponent tuples (Python ints, so
arbitrary precision); exponents may be negative exactly on the inverted
coordinates.  Ideals are kept in normal form at all times: generators have
zero exponents on inverted coordinates and are pairwise incomparable under
componentwise divisibility.
"""

from dataclasses import dataclass, field
from itertools import product

from .errors import (
    ContainmentError,
    ContextMismatchError,
    MalformedInputError,
)

Exponents = tuple


@dataclass(frozen=True)
class RingContext:
    """Ambient ring: n variables, the ones in `inverted` made invertible."""

    n: int
    inverted: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise MalformedInputError("variable count must be nonnegative")
        object.__setattr__(self, "inverted", frozenset(self.inverted))
        for j in self.inverted:
            if not (0 <= j < self.n):
                raise MalformedInputError(
                    "inverted index %r out of range for n=%d" % (j, self.n)
                )

    @property
    def plain(self):
        """Indices of the non-inverted (ordinary polynomial) variables."""
        return [i for i in range(self.n) if i not in self.inverted]

    def polynomial_context(self):
        """The same variables with nothing inverted."""
        return RingContext(self.n, frozenset())


def check_monomial(m, ctx):
    """Validate an exponent tuple against the ring, returning it as a tuple."""
    m = tuple(m)
    if len(m) != ctx.n:
        raise MalformedInputError(
            "exponent vector has length %d, expected %d" % (len(m), ctx.n)
        )
    for i, e in enumerate(m):
        if not isinstance(e, int):
            raise MalformedInputError("exponent %r is not an integer" % (e,))
        if e < 0 and i not in ctx.inverted:
            raise MalformedInputError(
                "negative exponent on non-inverted variable %d" % (i + 1)
            )
    return m


def one(ctx):
    """The unit monomial."""
    return (0,) * ctx.n


def mul(a, b):
    """Product of two monomials."""
    return tuple(x + y for x, y in zip(a, b))


def strip_units(m, ctx):
    """Zero out the exponents on inverted coordinates (divide by a unit)."""
    return tuple(0 if i in ctx.inverted else e for i, e in enumerate(m))


def abs_degree(m):
    """Total absolute degree: sum of |exponent| over all coordinates."""
    return sum(abs(e) for e in m)


def signed_supports(m):
    """Return (supp, supp_plus, supp_minus) as frozensets of indices."""
    supp = frozenset(i for i, e in enumerate(m) if e != 0)
    plus = frozenset(i for i, e in enumerate(m) if e > 0)
    minus = frozenset(i for i, e in enumerate(m) if e < 0)
    return supp, plus, minus


def _divides(g, m, ctx):
    # g is normalized (zero on inverted coords); inverted coords of m are free
    return all(m[i] >= g[i] for i in range(ctx.n) if i not in ctx.inverted)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in normal form.

    The empty generator set is the zero ideal; the set {1} is the unit
    ideal.  The constructor normalizes eagerly, so two ideals are equal
    iff their (context, generators) pairs are equal.
    """

    context: RingContext
    generators: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        gens = [check_monomial(g, self.context) for g in self.generators]
        gens = {strip_units(g, self.context) for g in gens}
        unit = one(self.context)
        if unit in gens:
            gens = {unit}
        else:
            gens = {
                g
                for g in gens
                if not any(
                    h != g and _divides(h, g, self.context) for h in gens
                )
            }
        object.__setattr__(self, "generators", frozenset(gens))

    @property
    def is_zero(self):
        return not self.generators

    @property
    def is_unit(self):
        return one(self.context) in self.generators

    def sorted_generators(self):
        return sorted(self.generators)

    def plus(self, m):
        """The ideal generated by this one together with the monomial m."""
        return MonomialIdeal(self.context, self.generators | {tuple(m)})


def ideal(ctx, *gens):
    """Convenience constructor from raw generator tuples."""
    return MonomialIdeal(ctx, frozenset(tuple(g) for g in gens))


def normalize_ideal(raw_gens, ctx):
    """Unique normalized minimal generating set of the ideal the raw
    generators span in the localized ring."""
    return MonomialIdeal(ctx, frozenset(tuple(g) for g in raw_gens))


def contains(I, m):
    """Membership of the monomial m in the ideal I."""
    m = check_monomial(m, I.context)
    return any(_divides(g, m, I.context) for g in I.generators)


def is_subideal(J, I):
    """Whether J is contained in I (same context required)."""
    if J.context != I.context:
        raise ContextMismatchError("ideals live in different rings")
    return all(contains(I, g) for g in J.generators)


def require_subquotient(I, J):
    """Raise unless J is an ideal contained in I, in the same context."""
    if not is_subideal(J, I):
        raise ContainmentError("J is not contained in I")


def in_quotient(I, J, m):
    """Whether m represents a nonzero basis element of I/J."""
    require_subquotient(I, J)
    return contains(I, m) and not contains(J, m)


def contraction(I):
    """The same generators reinterpreted in the polynomial ring (nothing
    inverted); this is I intersected with the polynomial ring."""
    return MonomialIdeal(I.context.polynomial_context(), I.generators)


def colon(I, u):
    """The colon ideal (I : u) for a monomial u (units in u are ignored)."""
    u = strip_units(check_monomial(u, I.context), I.context)
    gens = {
        tuple(max(g[i] - u[i], 0) for i in range(I.context.n))
        for g in I.generators
    }
    return MonomialIdeal(I.context, frozenset(gens))


def extend_to(I, ctx):
    """Extend I to a context with the same variables but a different
    inverted set (the generators are re-normalized there)."""
    if ctx.n != I.context.n:
        raise ContextMismatchError("variable counts differ")
    return MonomialIdeal(ctx, I.generators)


def box_monomials(ctx, bound):
    """All monomials with |exponent| <= bound per coordinate (nonnegative on
    non-inverted coordinates).  Brute-force helper for oracles."""
    ranges = [
        range(-bound, bound + 1) if i in ctx.inverted else range(bound + 1)
        for i in range(ctx.n)
    ]
    return product(*ranges)
