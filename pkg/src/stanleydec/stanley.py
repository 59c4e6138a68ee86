"""Stanley spaces and decompositions over a localized polynomial ring.

A Stanley space is a root monomial u together with an admissible variable
set Z: plain variables x_i (any i) and inverses x_j^-1 (only for inverted
j), never both for the same j.  Geometrically u*K[Z] is an axis-aligned
semi-infinite box of lattice points, which is what the Region view makes
explicit and what all verification works on.
"""

from dataclasses import dataclass
from itertools import product

from . import ring
from .errors import (
    ContextMismatchError,
    MalformedInputError,
    VerificationError,
    ZeroModuleError,
)
from .ring import MonomialIdeal, RingContext


@dataclass(frozen=True)
class StanleySpace:
    context: RingContext
    root: tuple
    zplus: frozenset = frozenset()
    zminus: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "root", ring.check_monomial(self.root, self.context))
        object.__setattr__(self, "zplus", frozenset(self.zplus))
        object.__setattr__(self, "zminus", frozenset(self.zminus))
        if self.zplus & self.zminus:
            raise MalformedInputError(
                "a variable and its inverse cannot both be admissible"
            )
        if not self.zminus <= self.context.inverted:
            raise MalformedInputError("inverse variable outside the inverted set")
        for i in self.zplus:
            if not 0 <= i < self.context.n:
                raise MalformedInputError("admissible index out of range")

    @property
    def dimension(self):
        return len(self.zplus) + len(self.zminus)

    def key(self):
        return (self.root, tuple(sorted(self.zplus)), tuple(sorted(self.zminus)))


@dataclass(frozen=True)
class Region:
    """Per-coordinate constraints: (lo, hi) pairs, None meaning unbounded."""

    bounds: tuple

    def contains(self, m):
        for e, (lo, hi) in zip(m, self.bounds):
            if lo is not None and e < lo:
                return False
            if hi is not None and e > hi:
                return False
        return True

    def kind(self, i):
        lo, hi = self.bounds[i]
        if lo is not None and hi is not None:
            return ("fixed", lo)
        if lo is not None:
            return ("atleast", lo)
        return ("atmost", hi)


def space_region(s):
    """The lattice region of u*K[Z]: coordinatewise AtLeast on zplus,
    AtMost on zminus, Fixed elsewhere."""
    bounds = []
    for i in range(s.context.n):
        if i in s.zplus:
            bounds.append((s.root[i], None))
        elif i in s.zminus:
            bounds.append((None, s.root[i]))
        else:
            bounds.append((s.root[i], s.root[i]))
    return Region(tuple(bounds))


def space_contains(s, m):
    """Whether the monomial m lies in the space."""
    m = ring.check_monomial(m, s.context)
    return space_region(s).contains(m)


@dataclass(frozen=True)
class StanleyDecomposition:
    context: RingContext
    spaces: tuple

    def __post_init__(self):
        object.__setattr__(self, "spaces", tuple(self.spaces))
        for s in self.spaces:
            if s.context != self.context:
                raise ContextMismatchError("space context differs from decomposition")

    def key(self):
        """Multiset-comparable form (order-insensitive equality)."""
        return tuple(sorted(s.key() for s in self.spaces))

    def same_as(self, other):
        return self.context == other.context and self.key() == other.key()


def sdepth_of(D):
    """min |Z_i| over the spaces of the decomposition."""
    if not D.spaces:
        raise ZeroModuleError("sdepth of an empty decomposition is undefined")
    return min(s.dimension for s in D.spaces)


def canonical_sf_decomposition(ctx):
    """The canonical decomposition of the whole localized ring: one space
    per subset L of the inverted indices, with root prod_{l in L} x_l^-1
    and Z inverting exactly the variables in L.  2^|A| spaces, all of
    dimension n."""
    A = sorted(ctx.inverted)
    spaces = []
    for bits in product((False, True), repeat=len(A)):
        L = frozenset(a for a, b in zip(A, bits) if b)
        root = tuple(-1 if i in L else 0 for i in range(ctx.n))
        zplus = frozenset(i for i in range(ctx.n) if i not in L)
        spaces.append(StanleySpace(ctx, root, zplus, L))
    spaces.sort(key=lambda s: s.key())
    return StanleyDecomposition(ctx, tuple(spaces))


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    failure: str = ""        # "", "disjointness", "coverage", "containment"
    witness: tuple = None    # a concrete monomial exhibiting the failure
    box_bound: int = 0       # every predicate threshold is < box_bound

    def __bool__(self):
        return self.valid


def clamp_bound(D, I, J):
    """1 + the largest |exponent| over all generators of I and J and all
    roots of D.  Clamping any coordinate into the box of this radius
    preserves every membership predicate, so a verdict on the box is a
    verdict on all of Z^n."""
    b = 0
    for ideal_ in (I, J):
        for g in ideal_.generators:
            for e in g:
                b = max(b, abs(e))
    for s in D.spaces:
        for e in s.root:
            b = max(b, abs(e))
    return b + 1


def verify_decomposition(D, I, J, box_bound=None):
    """Exact validity check of D against I/J on the clamp box.

    Reports the first failure found with a witness monomial:
    a monomial of I\\J covered by no space (coverage), a monomial covered
    by two spaces (disjointness), or a space monomial outside I\\J
    (containment).
    """
    if D.context != I.context or I.context != J.context:
        raise ContextMismatchError("decomposition and ideals must share a ring")
    ring.require_subquotient(I, J)
    B = clamp_bound(D, I, J)
    if box_bound is not None:
        if box_bound < B:
            raise MalformedInputError(
                "box bound %d is below the required clamp bound %d" % (box_bound, B)
            )
        B = box_bound
    regions = [space_region(s) for s in D.spaces]
    for m in ring.box_monomials(D.context, B):
        hits = [r for r in regions if r.contains(m)]
        member = ring.contains(I, m) and not ring.contains(J, m)
        if len(hits) > 1:
            return VerificationReport(False, "disjointness", m, B)
        if member and not hits:
            return VerificationReport(False, "coverage", m, B)
        if not member and hits:
            return VerificationReport(False, "containment", m, B)
    return VerificationReport(True, "", None, B)


@dataclass(frozen=True)
class LocalizationResult:
    decomposition: StanleyDecomposition
    dropped: tuple        # indices of input spaces with Z_A not inside Z_i
    localized_I: MonomialIdeal
    localized_J: MonomialIdeal


def localize_decomposition(D, I, J, A, check=True):
    """Localize a valid decomposition of I/J over the polynomial ring at
    the product of the variables indexed by A.

    Spaces whose Z does not contain every localized variable are dropped;
    each surviving space u*K[Z] fans out into one space per subset L of A,
    with x_l inverted for l in L and the root divided by prod_{l in L} x_l.
    """
    ctx = D.context
    if ctx.inverted:
        raise ContextMismatchError("input decomposition must be over the polynomial ring")
    A = frozenset(A)
    for j in A:
        if not 0 <= j < ctx.n:
            raise MalformedInputError("localized index out of range")
    if check:
        report = verify_decomposition(D, I, J)
        if not report:
            raise VerificationError(
                "input is not a decomposition of I/J (%s at %r)"
                % (report.failure, report.witness)
            )
    new_ctx = RingContext(ctx.n, A)
    If = ring.extend_to(I, new_ctx)
    Jf = ring.extend_to(J, new_ctx)
    A_sorted = sorted(A)
    spaces = []
    dropped = []
    for idx, s in enumerate(D.spaces):
        if not A <= s.zplus:
            dropped.append(idx)
            continue
        for bits in product((False, True), repeat=len(A_sorted)):
            L = frozenset(a for a, b in zip(A_sorted, bits) if b)
            root = tuple(
                e - 1 if i in L else e for i, e in enumerate(s.root)
            )
            zplus = frozenset(s.zplus - L)
            spaces.append(StanleySpace(new_ctx, root, zplus, L))
    Df = StanleyDecomposition(new_ctx, tuple(spaces))
    return LocalizationResult(Df, tuple(dropped), If, Jf)


def adjoin_ideal(I, laurent):
    """Extend an ideal by one fresh variable t (inverted iff laurent)."""
    ctx = I.context
    inverted = ctx.inverted | ({ctx.n} if laurent else frozenset())
    new_ctx = RingContext(ctx.n + 1, inverted)
    return MonomialIdeal(new_ctx, frozenset(g + (0,) for g in I.generators))


def adjoin_variable(D, laurent):
    """Extend a decomposition of I/J by one fresh variable t.

    Plain extension appends t to every Z; Laurent extension additionally
    pairs each space with its t^-1 shadow.  Either way sdepth goes up by
    exactly one.
    """
    ctx = D.context
    inverted = ctx.inverted | ({ctx.n} if laurent else frozenset())
    new_ctx = RingContext(ctx.n + 1, inverted)
    t = ctx.n
    spaces = []
    for s in D.spaces:
        spaces.append(
            StanleySpace(new_ctx, s.root + (0,), s.zplus | {t}, s.zminus)
        )
        if laurent:
            spaces.append(
                StanleySpace(new_ctx, s.root + (-1,), s.zplus, s.zminus | {t})
            )
    return StanleyDecomposition(new_ctx, tuple(spaces))


def restrict_adjoined(D):
    """Test-only inverse of the Laurent adjunction: intersect a
    decomposition of (I/J)[t, t^-1] back down to I/J by stripping t-powers
    from roots and removing t and t^-1 from every Z."""
    ctx = D.context
    t = ctx.n - 1
    if t not in ctx.inverted:
        raise MalformedInputError("last variable is not a Laurent adjunction")
    new_ctx = RingContext(ctx.n - 1, ctx.inverted - {t})
    spaces = []
    for s in D.spaces:
        a = s.root[t]
        if a > 0 and t not in s.zminus:
            continue   # the space misses the t-degree-zero slice
        if a < 0 and t not in s.zplus:
            continue
        spaces.append(
            StanleySpace(
                new_ctx,
                s.root[:t],
                frozenset(s.zplus - {t}),
                frozenset(s.zminus - {t}),
            )
        )
    return StanleyDecomposition(new_ctx, tuple(spaces))
