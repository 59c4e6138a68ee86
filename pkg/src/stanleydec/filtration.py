"""Prime filtrations of monomial subquotients and the fdepth invariant.

A prime filtration refines I/J into a chain of monomial ideals whose
successive quotients are shifted copies of S modulo a variable-generated
prime; fdepth is the best achievable minimum codimension over such chains.
The enumeration is restricted to witnesses below the characteristic-poset
bound, which is a deliberate desk-scale limitation: a value obtained from
an exhausted budget or a truncated candidate box is reported as a lower
bound, never silently as exact.
"""

from dataclasses import dataclass
from itertools import product

from . import ring, solver
from .errors import (
    BudgetExceededError,
    ContextMismatchError,
    ZeroModuleError,
)
from .ring import MonomialIdeal, RingContext

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class FiltrationStep:
    monomial: tuple       # u_i, the new generator
    primes: frozenset     # variable indices generating (J_{i-1} : u_i)
    shift: tuple          # multidegree of u_i


@dataclass(frozen=True)
class PrimeFiltration:
    context: RingContext
    chain: tuple          # J = J_0 < J_1 < ... < J_r = I
    steps: tuple          # r FiltrationStep records


@dataclass(frozen=True)
class FiltrationReport:
    valid: bool
    step: int = -1
    reason: str = ""

    def __bool__(self):
        return self.valid


def _prime_indices(P):
    """Variable indices when every generator of P is a single variable,
    else None.  The zero ideal is the empty prime."""
    idx = set()
    for g in P.generators:
        nz = [i for i, e in enumerate(g) if e != 0]
        if len(nz) != 1 or g[nz[0]] != 1:
            return None
        idx.add(nz[0])
    return frozenset(idx)


def verify_filtration(F, I, J):
    """Check endpoints, strictness, and that every colon (J_{i-1} : u_i)
    is exactly the recorded variable prime."""
    if F.context != I.context or I.context != J.context:
        raise ContextMismatchError("filtration and ideals must share a ring")
    if len(F.chain) != len(F.steps) + 1:
        return FiltrationReport(False, -1, "chain/step length mismatch")
    if F.chain[0] != J:
        return FiltrationReport(False, -1, "chain does not start at J")
    if F.chain[-1] != I:
        return FiltrationReport(False, -1, "chain does not end at I")
    for i, step in enumerate(F.steps):
        prev, cur = F.chain[i], F.chain[i + 1]
        u = step.monomial
        if ring.contains(prev, u):
            return FiltrationReport(False, i, "step monomial already present")
        if prev.plus(u) != cur:
            return FiltrationReport(False, i, "chain step is not J + (u)")
        idx = _prime_indices(ring.colon(prev, u))
        if idx is None:
            return FiltrationReport(False, i, "colon ideal is not prime")
        if idx != step.primes:
            return FiltrationReport(False, i, "recorded prime differs from colon")
        if tuple(step.shift) != tuple(u):
            return FiltrationReport(False, i, "shift is not the multidegree of u")
    return FiltrationReport(True)


def _candidates(Ip, Jp):
    """Witness monomials a <= g, g the characteristic-poset bound."""
    poset = solver.build_characteristic_poset(Ip, Jp)
    return poset.elements


def step_dimension(ctx, primes):
    """Krull dimension of the quotient by the variable prime; unchanged by
    inverting variables outside the prime."""
    return ctx.n - len(primes)


def fdepth_of(F):
    """min over steps of dim S/P_i."""
    if not F.steps:
        raise ZeroModuleError("fdepth of an empty filtration is undefined")
    return min(step_dimension(F.context, s.primes) for s in F.steps)


def enumerate_prime_filtrations(Ip, Jp, budget=DEFAULT_BUDGET):
    """All prime filtrations of I'/J' whose witnesses stay below the
    characteristic bound, found by depth-first search.

    Returns (filtrations, complete); complete is False when the node
    budget ran out and the list is only partial.
    """
    ctx = Ip.context
    if ctx.inverted:
        raise ContextMismatchError("enumeration expects a polynomial ring")
    ring.require_subquotient(Ip, Jp)
    if Ip == Jp:
        raise ZeroModuleError("zero module has no prime filtration")
    cands = _candidates(Ip, Jp)
    found = []
    state = {"nodes": 0, "complete": True}

    def search(current, chain, steps):
        if current == Ip:
            found.append(PrimeFiltration(ctx, tuple(chain), tuple(steps)))
            return
        for u in cands:
            if not ring.contains(Ip, u) or ring.contains(current, u):
                continue
            idx = _prime_indices(ring.colon(current, u))
            if idx is None:
                continue
            state["nodes"] += 1
            if state["nodes"] > budget:
                state["complete"] = False
                return
            nxt = current.plus(u)
            if not ring.is_subideal(nxt, Ip):
                continue
            chain.append(nxt)
            steps.append(FiltrationStep(u, idx, u))
            search(nxt, chain, steps)
            chain.pop()
            steps.pop()
            if not state["complete"]:
                return

    search(Jp, [Jp], [])
    return found, state["complete"]


@dataclass(frozen=True)
class FdepthResult:
    value: int
    complete: bool        # exact when True, certified lower bound otherwise
    witness: PrimeFiltration

    def __int__(self):
        return self.value


def fdepth(I, J, budget=DEFAULT_BUDGET):
    """fdepth of I/J: contract to the polynomial ring on the non-inverted
    variables, search prime filtrations there (memoized over reachable
    ideals), and add one per inverted variable."""
    Ip, Jp, offset, _ = solver.reduce_to_polynomial(I, J)
    if Ip == Jp:
        raise ZeroModuleError("I/J is the zero module; fdepth undefined")
    ctx = Ip.context
    cands = _candidates(Ip, Jp)
    memo = {}
    state = {"nodes": 0, "complete": True}
    NEG = -1

    def best(current):
        """Best achievable min-dimension from this partial chain; -1 when
        no in-box filtration completes from here."""
        if current == Ip:
            return ctx.n + 1   # neutral element for min over the steps
        key = current.generators
        if key in memo:
            return memo[key]
        value = NEG
        for u in cands:
            if not ring.contains(Ip, u) or ring.contains(current, u):
                continue
            idx = _prime_indices(ring.colon(current, u))
            if idx is None:
                continue
            state["nodes"] += 1
            if state["nodes"] > budget:
                state["complete"] = False
                break
            tail = best(current.plus(u))
            if tail == NEG:
                continue
            value = max(value, min(step_dimension(ctx, idx), tail))
        memo[key] = value
        return value

    value = best(Jp)
    if value == NEG:
        raise BudgetExceededError(
            "no prime filtration found within the search bound", state["nodes"]
        )

    # reconstruct a witness chain achieving the value
    chain = [Jp]
    steps = []
    current = Jp
    while current != Ip:
        for u in cands:
            if not ring.contains(Ip, u) or ring.contains(current, u):
                continue
            idx = _prime_indices(ring.colon(current, u))
            if idx is None or step_dimension(ctx, idx) < value:
                continue
            tail = memo.get(current.plus(u).generators)
            if current.plus(u) == Ip:
                tail = ctx.n + 1
            if tail is not None and tail >= value:
                current = current.plus(u)
                chain.append(current)
                steps.append(FiltrationStep(u, idx, u))
                break
        else:
            if not state["complete"]:
                raise BudgetExceededError(
                    "budget exhausted before a witness chain was certified",
                    state["nodes"],
                )
            raise AssertionError("witness reconstruction failed")
    witness = PrimeFiltration(ctx, tuple(chain), tuple(steps))
    return FdepthResult(value + offset, state["complete"], witness)


def localize_filtration(F, A):
    """Push a prime filtration over the polynomial ring into the
    localization at the variables indexed by A: steps whose prime meets A
    collapse, the rest survive with the same witness and prime."""
    ctx = F.context
    if ctx.inverted:
        raise ContextMismatchError("input filtration must be over the polynomial ring")
    A = frozenset(A)
    new_ctx = RingContext(ctx.n, A)
    chain = [ring.extend_to(F.chain[0], new_ctx)]
    steps = []
    for step in F.steps:
        if step.primes & A:
            continue   # the factor dies in the localization
        u = ring.strip_units(step.monomial, new_ctx)
        nxt = chain[-1].plus(u)
        chain.append(nxt)
        steps.append(FiltrationStep(u, step.primes, u))
    return PrimeFiltration(new_ctx, tuple(chain), tuple(steps))
