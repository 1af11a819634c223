"""Command-line interface.

Every command prints one document to stdout.  JSON payloads are wrapped as
``{"tool", "version", "command", "result"}``; counts are decimal strings and
rationals are ``{"num", "den"}`` objects of decimal strings.

Exit codes: 0 success, 1 a bound verification row failed, 2 usage error,
3 an oracle guard was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from . import core
from .bounds import STATISTICS, verify
from .core import (
    GeneralizedTableau,
    GuardExceeded,
    MultiplicityMatrix,
    Partition,
    PermOrderError,
    Permutation,
    StandardTableau,
    TwoLineArray,
)
from .counting import beth_exact, lds_distribution, xi3_closed, xi_brute, xi_shapes
from .genfunc import bessel_b, gessel_U, xi_from_series
from .posets import (
    canonical_form,
    epsilon_exact,
    is_isomorphic,
    max_antichain,
    poset_from_permutation,
)
from .rsk import (
    array_to_matrix,
    knuth_forward,
    knuth_inverse,
    matrix_to_array,
    rsk_forward,
    rsk_inverse,
)
from .stats import catalan, hook_lengths, lds, syt_count_hook, syt_enumerate

TOOL = "permorder"
EXIT_OK, EXIT_BOUND_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# argument parsing helpers
# ---------------------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rows(text: str) -> list[list[int]]:
    """Tableau rows as JSON (``[[1,3],[2]]``) or ``1,3/2``."""
    text = text.strip()
    try:
        if text.startswith("["):
            rows = json.loads(text)
        else:
            rows = [_int_list(part) for part in text.split("/") if part] if text else []
        if not all(isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rows):
            raise ValueError
        return rows
    except (ValueError, argparse.ArgumentTypeError):
        raise argparse.ArgumentTypeError(f"cannot parse rows {text!r}") from None


def _pairs(text: str) -> list[tuple[int, int]]:
    """Two-line array as ``1,1;1,3;2,2`` or JSON ``[[1,1],[1,3]]``."""
    text = text.strip()
    try:
        if text.startswith("["):
            raw = json.loads(text)
        else:
            raw = [_int_list(p) for p in text.split(";") if p]
        pairs = [tuple(p) for p in raw]
        if any(len(p) != 2 for p in pairs):
            raise ValueError
        return pairs
    except (ValueError, argparse.ArgumentTypeError):
        raise argparse.ArgumentTypeError(f"cannot parse pairs {text!r}") from None


def _dims(text: str) -> tuple[int, int]:
    try:
        r, c = text.lower().split("x")
        return int(r), int(c)
    except ValueError:
        raise argparse.ArgumentTypeError(f"dims must look like 2x3, got {text!r}") from None


# ---------------------------------------------------------------------------
# serialisation
# ---------------------------------------------------------------------------

def _count(value: int) -> str:
    return str(value)


def _rational(value: Fraction) -> dict[str, str]:
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _tableau(t) -> list[list[int]]:
    return [list(row) for row in t.rows]


def _count_map(mapping: dict[int, int]) -> dict[str, str]:
    return {str(k): _count(v) for k, v in sorted(mapping.items())}


class Output:
    """Result of a command: a JSON payload plus optional tabular form."""

    def __init__(self, result: Any, table: list[dict[str, Any]] | None = None, exit_code: int = EXIT_OK):
        self.result = result
        self.table = table
        self.exit_code = exit_code


def render(command: str, out: Output, fmt: str) -> str:
    if fmt == "json":
        payload = {"tool": TOOL, "version": __version__, "command": command, "result": out.result}
        return json.dumps(payload, sort_keys=False) + "\n"
    table = out.table
    if table is None:
        if isinstance(out.result, dict) and all(not isinstance(v, (dict, list)) for v in out.result.values()):
            table = [out.result]
        else:
            raise UsageError(f"--format {fmt} is not available for '{command}'; use json")
    columns = list(table[0].keys()) if table else []
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(table)
        return buf.getvalue()
    widths = {c: max([len(c)] + [len(str(row[c])) for row in table]) for c in columns}
    lines = ["  ".join(c.rjust(widths[c]) for c in columns)]
    lines.append("  ".join("-" * widths[c] for c in columns))
    lines += ["  ".join(str(row[c]).rjust(widths[c]) for c in columns) for row in table]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------

def cmd_rsk(args) -> Output:
    if args.perm is not None:
        if args.P is not None or args.Q is not None:
            raise UsageError("give either --perm or --P/--Q")
        pi = Permutation(tuple(args.perm))
        p, q = rsk_forward(pi)
        length, _ = lds(pi)
        return Output({
            "P": _tableau(p), "Q": _tableau(q), "shape": list(p.shape.parts), "lds": length,
        })
    if args.P is None or args.Q is None:
        raise UsageError("rsk needs --perm, or both --P and --Q for the inverse")
    pi = rsk_inverse(StandardTableau(args.P), StandardTableau(args.Q))
    return Output({"perm": list(pi.word)})


def cmd_knuth(args) -> Output:
    action = args.action
    if action == "forward":
        p, q = knuth_forward(TwoLineArray(tuple(args.pairs)))
        return Output({"P": _tableau(p), "Q": _tableau(q), "shape": list(p.shape.parts)})
    if action == "inverse":
        array = knuth_inverse(GeneralizedTableau(args.P), GeneralizedTableau(args.Q))
        return Output({"pairs": [list(pair) for pair in array.pairs]})
    if action == "to-matrix":
        m = array_to_matrix(TwoLineArray(tuple(args.pairs)), args.dims)
        return Output({"matrix": m.to_lists(), "dims": list(m.dims)})
    if action == "from-matrix":
        array = matrix_to_array(MultiplicityMatrix(args.matrix))
        return Output({"pairs": [list(pair) for pair in array.pairs]})
    # roundtrip: randomized self-check, reproducible through --seed
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.trials):
        size = rng.randint(0, args.max_len)
        pairs = sorted((rng.randint(1, args.alphabet), rng.randint(1, args.alphabet)) for _ in range(size))
        array = TwoLineArray(tuple(pairs))
        p, q = knuth_forward(array)
        ok = knuth_inverse(p, q) == array and matrix_to_array(array_to_matrix(array)) == array
        failures += not ok
    result = {"trials": args.trials, "seed": args.seed, "failures": failures}
    return Output(result, exit_code=EXIT_OK if failures == 0 else EXIT_BOUND_FAIL)


def _xi(n: int, k: int, method: str, guard, workers) -> int:
    if method == "brute":
        return xi_brute(n, k, guard=guard, workers=workers)
    if method == "shapes":
        return xi_shapes(n, k)
    if method == "series":
        return xi_from_series(k, n)
    if method == "closed":
        if k != 3:
            raise UsageError("--method closed exists only for k = 3")
        return xi3_closed(n)
    raise UsageError(f"unknown method {method!r} for xi")


def cmd_count(args) -> Output:
    what = args.what
    guard, workers = args.guard, args.threads
    method = args.method
    if what in ("xi", "beth") and (args.n is None or args.k is None):
        raise UsageError(f"count {what} needs --n and --k")
    if what in ("epsilon", "lds-dist", "catalan") and args.n is None:
        raise UsageError(f"count {what} needs --n")
    if what == "xi":
        method = method or "shapes"
        value = _xi(args.n, args.k, method, guard, workers)
        return Output({"value": _count(value), "method": method})
    if what == "beth":
        method = method or "shapes"
        if method == "shapes":
            value = beth_exact(args.n, args.k)
        elif method == "brute":
            value = sum(
                len(syt_enumerate(shape, guard=guard)) for shape in core.partitions(args.n, args.k)
            )
        else:
            raise UsageError(f"unknown method {method!r} for beth")
        return Output({"value": _count(value), "method": method})
    if what == "epsilon":
        method = method or "census"
        if method != "census":
            raise UsageError("epsilon is only available by census")
        census = epsilon_exact(args.n, guard=guard, workers=workers)
        if args.k is not None:
            return Output({"value": _count(census.get(args.k, 0)), "method": method})
        table = [{"k": k, "value": v} for k, v in sorted(census.items())]
        return Output({"values": _count_map(census), "method": method}, table)
    if what == "lds-dist":
        method = method or "brute"
        if method not in ("brute", "shapes"):
            raise UsageError(f"unknown method {method!r} for lds-dist")
        dist = lds_distribution(args.n, method=method, guard=guard, workers=workers)
        table = [{"k": k, "value": v} for k, v in sorted(dist.items())]
        return Output({"values": _count_map(dist), "method": method}, table)
    if what == "catalan":
        method = method or "formula"
        if method == "formula":
            value = catalan(args.n)
        else:
            value = _xi(args.n, 2, method, guard, workers) if args.n >= 1 else 1
        return Output({"value": _count(value), "method": method})
    raise UsageError(f"unknown count target {what!r}")


def cmd_bounds(args) -> Output:
    stats = args.statistics or list(STATISTICS)
    ks = "all" if args.k is None else args.k
    report = verify(
        args.max_n, k_policy=ks, statistics=stats, xi_method=args.xi_method,
        l_max=args.max_l, guard=args.guard, workers=args.threads,
    )
    rows = []
    table = []
    for row in report.rows:
        name = row.statistic if row.l is None else f"{row.statistic}(l={row.l})"
        entry = {
            "statistic": row.statistic, "n": row.n, "k": row.k, "exact": _count(row.exact),
            "bound": _rational(row.bound), "ratio": _rational(row.ratio), "pass": row.passed,
        }
        if row.l is not None:
            entry["l"] = row.l
        if row.at_most is not None:
            entry["exact_at_most"] = _count(row.at_most)
        rows.append(entry)
        table.append({
            "statistic": name, "n": row.n, "k": row.k, "exact": row.exact,
            "bound_num": row.bound.numerator, "bound_den": row.bound.denominator,
            "ratio": str(row.ratio), "pass": str(row.passed).lower(),
        })
    result = {"rows": rows, "all_pass": report.all_pass}
    return Output(result, table, EXIT_OK if report.all_pass else EXIT_BOUND_FAIL)


def cmd_series(args) -> Output:
    if args.what == "b":
        s = bessel_b(args.i, args.degree)
    elif args.what == "U":
        s = gessel_U(args.k, args.degree)
    else:
        value = xi_from_series(args.k, args.n)
        return Output({"value": _count(value), "method": "series"})
    coeffs = [_rational(c) for c in s.coeffs]
    table = [{"power": i, "coefficient": str(c)} for i, c in enumerate(s.coeffs)]
    return Output({"degree": s.degree, "coefficients": coeffs}, table)


def cmd_tableaux(args) -> Output:
    shape = Partition(tuple(args.shape))
    if args.action == "enumerate":
        tabs = syt_enumerate(shape, guard=args.guard)
        return Output({"shape": list(shape.parts), "count": _count(len(tabs)),
                       "tableaux": [_tableau(t) for t in tabs]})
    return Output({
        "shape": list(shape.parts), "hooks": hook_lengths(shape),
        "value": _count(syt_count_hook(shape)), "method": "hook",
    })


def cmd_posets(args) -> Output:
    if args.action == "from-perm":
        poset = poset_from_permutation(Permutation(tuple(args.perm)))
        size, witness = max_antichain(poset)
        return Output({
            "n": poset.n, "relations": [list(r) for r in poset.relations()],
            "max_antichain": size, "antichain_witness": sorted(witness),
            "canonical": canonical_form(poset, guard=args.guard).hex(),
        })
    if args.action == "census":
        census = epsilon_exact(args.n, guard=args.guard, workers=args.threads)
        table = [{"k": k, "classes": v} for k, v in sorted(census.items())]
        return Output({"n": args.n, "classes_by_width": _count_map(census),
                       "total": _count(sum(census.values()))}, table)
    a = poset_from_permutation(Permutation(tuple(args.perm_a)))
    b = poset_from_permutation(Permutation(tuple(args.perm_b)))
    return Output({"isomorphic": is_isomorphic(a, b, guard=args.guard)})


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--guard", type=int, default=None,
                        help="override the size guard of the oracles used (prints a warning)")
    common.add_argument("--threads", type=int, default=1, help="worker processes for sweeps")

    parser = _Parser(prog=TOOL, description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("rsk", parents=[common], help="RSK forward (--perm) or inverse (--P --Q)")
    p.add_argument("--perm", type=_int_list)
    p.add_argument("--P", type=_rows)
    p.add_argument("--Q", type=_rows)
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("knuth", parents=[common], help="Knuth correspondence and array/matrix maps")
    p.add_argument("action", choices=["forward", "inverse", "to-matrix", "from-matrix", "roundtrip"])
    p.add_argument("--pairs", type=_pairs)
    p.add_argument("--P", type=_rows)
    p.add_argument("--Q", type=_rows)
    p.add_argument("--matrix", type=_rows)
    p.add_argument("--dims", type=_dims)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-len", type=int, default=12)
    p.add_argument("--alphabet", type=int, default=5)
    p.set_defaults(func=cmd_knuth)

    p = sub.add_parser("count", parents=[common], help="exact counts")
    p.add_argument("what", choices=["xi", "beth", "epsilon", "lds-dist", "catalan"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--method", choices=["brute", "shapes", "series", "closed", "census", "formula"])
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bounds", parents=[common], help="compare bounds with exact counts")
    p.add_argument("action", choices=["verify"])
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-l", type=int, default=None)
    p.add_argument("--k", type=_int_list, default=None, help="restrict to these k values")
    p.add_argument("--statistics", type=lambda s: s.split(","), default=None,
                   help=f"subset of {','.join(STATISTICS)}")
    p.add_argument("--xi-method", choices=["brute", "shapes"], default="brute")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("series", parents=[common], help="Bessel-type series and their determinants")
    p.add_argument("what", choices=["b", "U", "xi"])
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--degree", type=int, default=10)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("tableaux", parents=[common], help="standard Young tableaux of a shape")
    p.add_argument("action", choices=["enumerate", "hook-count"])
    p.add_argument("--shape", type=_int_list, required=True)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("posets", parents=[common], help="dimension-2 posets")
    p.add_argument("action", choices=["from-perm", "census", "isomorphic"])
    p.add_argument("--perm", type=_int_list)
    p.add_argument("--perm-a", type=_int_list)
    p.add_argument("--perm-b", type=_int_list)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_posets)
    return parser


def _validate(args) -> None:
    need = {
        ("knuth", "forward"): ["pairs"], ("knuth", "to-matrix"): ["pairs"],
        ("knuth", "inverse"): ["P", "Q"], ("knuth", "from-matrix"): ["matrix"],
        ("posets", "from-perm"): ["perm"], ("posets", "census"): ["n"],
        ("posets", "isomorphic"): ["perm_a", "perm_b"],
    }
    key = (args.command, getattr(args, "action", None))
    missing = [f"--{name.replace('_', '-')}" for name in need.get(key, []) if getattr(args, name) is None]
    if missing:
        raise UsageError(f"{' '.join(k for k in key if k)} needs {', '.join(missing)}")
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    if args.guard is not None and args.guard < 1:
        raise UsageError("--guard must be positive")


def _error(kind: str, message: str, stream) -> None:
    stream.write(json.dumps({"tool": TOOL, "error": kind, "message": message}) + "\n")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        _validate(args)
    except UsageError as exc:
        _error("usage", str(exc), stderr)
        return EXIT_USAGE
    if args.guard is not None:
        stderr.write(f"warning: oracle guards overridden to {args.guard}; runtime may explode\n")
    command = args.command + (f" {args.action}" if getattr(args, "action", None) else "")
    if args.command == "count":
        command = f"count {args.what}"
    elif args.command == "series":
        command = f"series {args.what}"
    try:
        out = args.func(args)
        text = render(command, out, args.format)
    except UsageError as exc:
        _error("usage", str(exc), stderr)
        return EXIT_USAGE
    except GuardExceeded as exc:
        _error("guard", str(exc), stderr)
        return EXIT_GUARD
    except (PermOrderError, ValueError) as exc:
        _error(type(exc).__name__, str(exc), stderr)
        return EXIT_USAGE
    stdout.write(text)
    return out.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
