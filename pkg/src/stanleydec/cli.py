"""Command-line front end.

Exit codes: 0 success, 2 mathematical or parse error, 3 budget exhausted.
The `batch` command reads one JSON request per stdin line and writes one
JSON report per line.
"""

import argparse
import json
import sys

from . import filtration, hilbert, parsing, ring, solver, stanley
from .errors import BudgetExceededError, StanleyError

EXIT_OK = 0
EXIT_MATH = 2
EXIT_BUDGET = 3

DEFAULT_MAX_DEGREE = 10


def _parse_pair(opts):
    ctx = parsing.parse_ring(opts["ring"])
    I = parsing.parse_ideal(opts.get("I", "(0)"), ctx)
    J = parsing.parse_ideal(opts.get("J", "(0)"), ctx)
    return ctx, I, J


def _cmd_normalize(opts):
    ctx, I, J = _parse_pair(opts)
    return {
        "ring": parsing.ring_to_json(ctx),
        "I": parsing.ideal_to_json(I),
        "text": "I = %s" % parsing.ideal_str(I, ctx),
    }


def _cmd_sdepth(opts):
    ctx, I, J = _parse_pair(opts)
    res = solver.sdepth(I, J, budget=opts.get("budget", solver.DEFAULT_BUDGET))
    witness = parsing.decomposition_str(res.witness)
    out = {
        "sdepth": res.value,
        "witness": parsing.decomposition_to_json(res.witness),
        "text": "sdepth = %d\nwitness: %s" % (res.value, witness),
    }
    return out


def _cmd_decompose(opts):
    ctx, I, J = _parse_pair(opts)
    res = solver.sdepth(I, J, budget=opts.get("budget", solver.DEFAULT_BUDGET))
    return {
        "decomposition": parsing.decomposition_to_json(res.witness),
        "sdepth": res.value,
        "text": "%s\nsdepth = %d"
        % (parsing.decomposition_str(res.witness), res.value),
    }


def _cmd_localize(opts):
    ctx, I, J = _parse_pair(opts)
    D = parsing.parse_decomposition(opts["D"], ctx)
    A = parsing.parse_index_set(opts["A"])
    res = stanley.localize_decomposition(D, I, J, A)
    return {
        "ring": parsing.ring_to_json(res.decomposition.context),
        "decomposition": parsing.decomposition_to_json(res.decomposition),
        "dropped": list(res.dropped),
        "sdepth_of": stanley.sdepth_of(res.decomposition)
        if res.decomposition.spaces
        else None,
        "text": "%s\ndropped input spaces: %s"
        % (parsing.decomposition_str(res.decomposition), list(res.dropped)),
    }


def _cmd_hilbert(opts):
    ctx, I, J = _parse_pair(opts)
    res = solver.sdepth(I, J, budget=opts.get("budget", solver.DEFAULT_BUDGET))
    series = hilbert.series_of_decomposition(res.witness)
    dmax = opts.get("max_degree", DEFAULT_MAX_DEGREE)
    coeffs = [dc.count for dc in hilbert.expand(series, dmax)]
    return {
        "series": parsing.series_to_json(series),
        "maximal_spaces": hilbert.count_maximal_spaces(series),
        "coefficients": coeffs,
        "text": "H(t) = %s\nmaximal spaces: %d\ncoefficients (d<=%d): %s"
        % (
            parsing.series_str(series),
            hilbert.count_maximal_spaces(series),
            dmax,
            coeffs,
        ),
    }


def _cmd_verify(opts):
    ctx, I, J = _parse_pair(opts)
    D = parsing.parse_decomposition(opts["D"], ctx)
    report = stanley.verify_decomposition(D, I, J, box_bound=opts.get("box_bound"))
    out = {
        "valid": report.valid,
        "box_bound": report.box_bound,
        "text": "valid (checked exactly on the clamp box, bound %d)" % report.box_bound,
    }
    if not report.valid:
        witness = parsing.monomial_str(report.witness, ctx)
        out["failure"] = report.failure
        out["witness"] = list(report.witness)
        out["text"] = "invalid: %s fails at %s (box bound %d)" % (
            report.failure,
            witness,
            report.box_bound,
        )
    return out


def _cmd_fdepth(opts):
    ctx, I, J = _parse_pair(opts)
    res = filtration.fdepth(I, J, budget=opts.get("budget", filtration.DEFAULT_BUDGET))
    qualifier = "" if res.complete else " (lower bound: search truncated)"
    return {
        "fdepth": res.value,
        "complete": res.complete,
        "witness": parsing.filtration_to_json(res.witness),
        "text": "fdepth = %d%s" % (res.value, qualifier),
    }


_COMMANDS = {
    "normalize": _cmd_normalize,
    "sdepth": _cmd_sdepth,
    "decompose": _cmd_decompose,
    "localize": _cmd_localize,
    "hilbert": _cmd_hilbert,
    "verify": _cmd_verify,
    "fdepth": _cmd_fdepth,
}


def run_request(command, opts):
    """Dispatch one request; returns (report dict, exit code)."""
    try:
        report = _COMMANDS[command](opts)
        return report, EXIT_OK
    except BudgetExceededError as exc:
        return {"error": str(exc), "text": "error: %s" % exc}, EXIT_BUDGET
    except StanleyError as exc:
        return {"error": str(exc), "text": "error: %s" % exc}, EXIT_MATH


def _emit(report, code, fmt, out):
    if fmt == "json":
        payload = {k: v for k, v in report.items() if k != "text"}
        payload["ok"] = code == EXIT_OK
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(report["text"] + "\n")
    return code


def _batch(args, stdin, stdout):
    worst = EXIT_OK
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        try:
            req = json.loads(line)
            command = req["command"]
            if command not in _COMMANDS:
                raise KeyError(command)
            opts = dict(req.get("options", {}))
            for key in ("ring", "I", "J", "D", "A"):
                if key in req:
                    opts[key] = req[key]
            report, code = run_request(command, opts)
        except (ValueError, KeyError) as exc:
            report, code = {"error": "bad request: %s" % exc}, EXIT_MATH
        payload = {k: v for k, v in report.items() if k != "text"}
        payload["ok"] = code == EXIT_OK
        stdout.write(json.dumps(payload, sort_keys=True) + "\n")
        worst = max(worst, code)
    return worst


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stanleydec",
        description="Stanley decompositions in localized polynomial rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--ring", required=True, help='e.g. "n=3 invert={2,3}"')
        p.add_argument("--I", default="(0)", help='ideal, e.g. "(x, y^2)"')
        p.add_argument("--J", default="(0)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--budget", type=int, default=solver.DEFAULT_BUDGET)
        p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
        p.add_argument("--box-bound", type=int, default=None)
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("normalize")
    common(p)
    p = sub.add_parser("sdepth")
    common(p)
    p.add_argument("--witness", action="store_true")
    for name in ("decompose", "hilbert", "fdepth"):
        common(sub.add_parser(name))
    p = sub.add_parser("localize")
    common(p)
    p.add_argument("--D", required=True, help="decomposition over the polynomial ring")
    p.add_argument("--A", required=True, help="indices to invert, e.g. {1}")
    p = sub.add_parser("verify")
    common(p)
    p.add_argument("--D", required=True)
    sub.add_parser("batch")
    return parser


def main(argv=None, stdin=None, stdout=None):
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    if args.command == "batch":
        return _batch(args, stdin, stdout)
    opts = {
        "ring": args.ring,
        "I": args.I,
        "J": args.J,
        "budget": args.budget,
        "max_degree": args.max_degree,
        "box_bound": args.box_bound,
    }
    for key in ("D", "A"):
        if hasattr(args, key):
            opts[key] = getattr(args, key)
    report, code = run_request(args.command, opts)
    return _emit(report, code, args.format, stdout)


if __name__ == "__main__":
    sys.exit(main())
