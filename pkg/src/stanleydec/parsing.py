"""Text and JSON syntax for rings, monomials, ideals, decompositions,
series and filtrations.

Text conventions: variables are x1..xn, with x, y, z, w as aliases when
n <= 4; monomials are '*'-joined var^exp factors ('1' for the unit);
ideals are comma lists in parentheses with (0) and (1) for the zero and
unit ideals; Stanley spaces are 'u*K[g1, g2, ...]' with gi either a
variable or var^-1; decompositions are '+'-joined spaces.  Variable
indices are 1-based in all external formats and 0-based internally.
"""

import re

from .errors import ParseError
from .filtration import FiltrationStep, PrimeFiltration
from .hilbert import HilbertSeries
from .ring import MonomialIdeal, RingContext
from .stanley import StanleyDecomposition, StanleySpace

_ALIASES = ("x", "y", "z", "w")


def var_name(i, ctx):
    if ctx.n <= 4:
        return _ALIASES[i]
    return "x%d" % (i + 1)


def _var_index(name, ctx):
    m = re.fullmatch(r"x(\d+)", name)
    if m:
        i = int(m.group(1)) - 1
        if 0 <= i < ctx.n:
            return i
        raise ParseError("variable %s out of range for n=%d" % (name, ctx.n))
    if ctx.n <= 4 and name in _ALIASES[: ctx.n]:
        return _ALIASES.index(name)
    raise ParseError("unknown variable %r" % name)


# ---------------------------------------------------------------- rings

def parse_ring(text):
    m = re.fullmatch(
        r"\s*(?:ring\s+)?n\s*=\s*(\d+)\s*(?:invert\s*=\s*\{([\d\s,]*)\}\s*)?",
        text,
    )
    if not m:
        raise ParseError("cannot parse ring %r" % text)
    n = int(m.group(1))
    inverted = frozenset()
    if m.group(2):
        try:
            inverted = frozenset(int(p) - 1 for p in m.group(2).split(","))
        except ValueError:
            raise ParseError("bad invert list in %r" % text)
    return RingContext(n, inverted)


def ring_str(ctx):
    inv = ",".join(str(i + 1) for i in sorted(ctx.inverted))
    return "ring n=%d invert={%s}" % (ctx.n, inv)


def parse_index_set(text):
    """A set of 1-based variable indices like {1,3} (or {})."""
    m = re.fullmatch(r"\s*\{([\d\s,]*)\}\s*", text)
    if not m:
        raise ParseError("cannot parse index set %r" % text)
    body = m.group(1).strip()
    if not body:
        return frozenset()
    try:
        return frozenset(int(p) - 1 for p in body.split(","))
    except ValueError:
        raise ParseError("bad index in %r" % text)


# ------------------------------------------------------------ monomials

def parse_monomial(text, ctx):
    exps = [0] * ctx.n
    pos = 0
    for factor in text.split("*"):
        col = pos
        pos += len(factor) + 1
        factor = factor.strip()
        if factor == "1":
            continue
        m = re.fullmatch(r"([a-z]\d*)(?:\^(-?\d+))?", factor)
        if not m:
            raise ParseError("bad monomial factor %r" % factor, col)
        i = _var_index(m.group(1), ctx)
        exps[i] += int(m.group(2)) if m.group(2) else 1
    return tuple(exps)


def monomial_str(m, ctx):
    parts = []
    for i, e in enumerate(m):
        if e == 0:
            continue
        if e == 1:
            parts.append(var_name(i, ctx))
        else:
            parts.append("%s^%d" % (var_name(i, ctx), e))
    return "*".join(parts) if parts else "1"


# --------------------------------------------------------------- ideals

def parse_ideal(text, ctx):
    m = re.fullmatch(r"\s*\((.*)\)\s*", text, re.S)
    if not m:
        raise ParseError("ideal must be parenthesized: %r" % text)
    body = m.group(1).strip()
    if body in ("", "0"):
        return MonomialIdeal(ctx, frozenset())
    gens = [parse_monomial(p, ctx) for p in body.split(",")]
    return MonomialIdeal(ctx, frozenset(gens))


def ideal_str(I, ctx=None):
    ctx = ctx or I.context
    if I.is_zero:
        return "(0)"
    gens = [monomial_str(g, ctx) for g in I.sorted_generators()]
    return "(%s)" % ", ".join(gens)


# --------------------------------------------------------------- spaces

def parse_space(text, ctx):
    m = re.fullmatch(r"\s*(?:(.*?)\s*\*\s*)?K(?:\[(.*?)\])?\s*", text, re.S)
    if not m:
        raise ParseError("cannot parse Stanley space %r" % text)
    root = parse_monomial(m.group(1), ctx) if m.group(1) else (0,) * ctx.n
    zplus, zminus = set(), set()
    body = (m.group(2) or "").strip()
    if body:
        for entry in body.split(","):
            entry = entry.strip()
            g = re.fullmatch(r"([a-z]\d*)(\^-1)?", entry)
            if not g:
                raise ParseError("bad admissible variable %r" % entry)
            i = _var_index(g.group(1), ctx)
            (zminus if g.group(2) else zplus).add(i)
    return StanleySpace(ctx, root, frozenset(zplus), frozenset(zminus))


def space_str(s, ctx=None):
    ctx = ctx or s.context
    entries = []
    for i in range(ctx.n):
        if i in s.zplus:
            entries.append(var_name(i, ctx))
        elif i in s.zminus:
            entries.append("%s^-1" % var_name(i, ctx))
    head = "" if all(e == 0 for e in s.root) else monomial_str(s.root, ctx) + "*"
    if not entries:
        return head + "K"
    return "%sK[%s]" % (head, ", ".join(entries))


def parse_decomposition(text, ctx):
    spaces = [parse_space(p, ctx) for p in text.split("+")]
    return StanleyDecomposition(ctx, tuple(spaces))


def decomposition_str(D, ctx=None):
    ctx = ctx or D.context
    return " + ".join(space_str(s, ctx) for s in D.spaces)


# --------------------------------------------------------------- series

def series_str(h):
    if not h.numerator:
        return "0"
    terms = []
    for k, c in enumerate(h.numerator):
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            tpart = "t" if k == 1 else "t^%d" % k
            body = tpart if abs(c) == 1 else "%d*%s" % (abs(c), tpart)
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    num = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        num += " %s %s" % (sign, body)
    if h.pole == 0:
        return num
    if len(terms) > 1:
        num = "(%s)" % num
    return "%s / (1-t)^%d" % (num, h.pole)


# ----------------------------------------------------------------- JSON

def ring_to_json(ctx):
    return {"n": ctx.n, "invert": sorted(i + 1 for i in ctx.inverted)}


def ring_from_json(obj):
    return RingContext(obj["n"], frozenset(i - 1 for i in obj.get("invert", [])))


def ideal_to_json(I):
    return {"generators": [list(g) for g in I.sorted_generators()]}


def ideal_from_json(obj, ctx):
    return MonomialIdeal(ctx, frozenset(tuple(g) for g in obj["generators"]))


def space_to_json(s):
    return {
        "root": list(s.root),
        "zplus": sorted(i + 1 for i in s.zplus),
        "zminus": sorted(i + 1 for i in s.zminus),
    }


def space_from_json(obj, ctx):
    return StanleySpace(
        ctx,
        tuple(obj["root"]),
        frozenset(i - 1 for i in obj.get("zplus", [])),
        frozenset(i - 1 for i in obj.get("zminus", [])),
    )


def decomposition_to_json(D):
    return {
        "ring": ring_to_json(D.context),
        "spaces": [space_to_json(s) for s in D.spaces],
    }


def decomposition_from_json(obj):
    ctx = ring_from_json(obj["ring"])
    return StanleyDecomposition(
        ctx, tuple(space_from_json(s, ctx) for s in obj["spaces"])
    )


def series_to_json(h):
    return {
        "num": [[c, k] for k, c in enumerate(h.numerator) if c != 0],
        "pole": h.pole,
    }


def series_from_json(obj):
    num = [0] * (1 + max((k for _, k in obj["num"]), default=0))
    for c, k in obj["num"]:
        num[k] = c
    return HilbertSeries(tuple(num), obj["pole"])


def filtration_to_json(F):
    return {
        "ring": ring_to_json(F.context),
        "chain": [ideal_to_json(I) for I in F.chain],
        "steps": [
            {
                "u": list(s.monomial),
                "primes": sorted(i + 1 for i in s.primes),
                "shift": list(s.shift),
            }
            for s in F.steps
        ],
    }


def filtration_from_json(obj):
    ctx = ring_from_json(obj["ring"])
    chain = tuple(ideal_from_json(I, ctx) for I in obj["chain"])
    steps = tuple(
        FiltrationStep(
            tuple(s["u"]),
            frozenset(i - 1 for i in s["primes"]),
            tuple(s["shift"]),
        )
        for s in obj["steps"]
    )
    return PrimeFiltration(ctx, chain, steps)


def filtration_str(F):
    ctx = F.context
    lines = [" < ".join(ideal_str(I, ctx) for I in F.chain)]
    for i, s in enumerate(F.steps):
        primes = ", ".join(var_name(j, ctx) for j in sorted(s.primes))
        lines.append(
            "  step %d: u = %s, P = (%s), a = %s"
            % (i + 1, monomial_str(s.monomial, ctx), primes, list(s.shift))
        )
    return "\n".join(lines)
