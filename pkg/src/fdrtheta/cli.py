"""Command-line entry point: ``fdrtheta <subcommand> ...``.

Exit codes: 0 success (or every report equal), 1 some report unequal,
2 usage or parameter error.  All state comes from argv.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import product

from .characters import character_table
from .coeffs import PoleError
from .exterior import BigradedTable, fdr_frobenius
from .identities import (
    BINOMIAL_VARIANTS,
    EMPTY_SUM_CONVENTIONS,
    HOOK_SKEW_FORMS,
    fdr_formula,
    hook_skew_check,
    kron_skew_check,
    main_theorem_check,
    nabla_hk_check,
    theta_q0t0,
    theta_recursion_check,
    zero_index_probe,
)
from .kronecker import kronecker, lr_coefficient
from .macdonald import BoundExceeded, enk, macdonald_schur, nabla, specialize_symf, theta_chain, to_classical
from .partitions import format_partition, parse_partition, partitions_of
from .symfunc import SymF, convert, e, schur

ORACLE_CAP = 8
QT_CAP = 6
ORACLE_DEFAULT = 6
QT_DEFAULT = 6

# rough single-core timings, printed by --unsafe
_COST_HINT = {
    "oracle": "n=6 takes about 15 s, n=7 several minutes, n=8 hours",
    "qt": "degree 5 takes seconds, degree 6 about a minute, degree 7 hours",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _bound(args, kind, requested):
    cap = ORACLE_CAP if kind == "oracle" else QT_CAP
    default = ORACLE_DEFAULT if kind == "oracle" else QT_DEFAULT
    bound = args.bound if getattr(args, "bound", None) is not None else default
    if args.unsafe:
        print(f"warning: safety caps disabled; expected cost: {_COST_HINT[kind]}", file=sys.stderr)
        return max(bound, requested)
    if bound > cap:
        raise UsageError(f"--bound {bound} exceeds the hard cap {cap} (use --unsafe)")
    if requested > bound:
        raise UsageError(f"size {requested} exceeds the bound {bound} (raise --bound, cap {cap})")
    return bound


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def emit(obj, as_json: bool) -> str:
    """Deterministic text or JSON rendering of a result."""
    if as_json:
        if isinstance(obj, BigradedTable):
            data = obj.to_json() if obj.entries else {}
        elif isinstance(obj, SymF):
            data = obj.to_json()
        elif isinstance(obj, list):
            data = {"reports": [r.to_json() for r in obj], "all_equal": all(r.equal for r in obj)}
        else:
            data = obj
        return json.dumps(data, sort_keys=True)
    if isinstance(obj, BigradedTable):
        return obj.format_text()
    if isinstance(obj, list):
        lines = [str(r) for r in obj]
        bad = sum(not r.equal for r in obj)
        lines.append(f"{len(obj) - bad}/{len(obj)} equal")
        return "\n".join(lines)
    return str(obj)


def _read_symf(path):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return SymF.from_json(json.loads(text))
    except (json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _specialize(f, args):
    if args.q is None and args.t is None:
        return f
    try:
        return specialize_symf(f, q=args.q, t=args.t)
    except PoleError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_fdr(args):
    n = args.n
    if n < 1:
        raise UsageError("--n must be positive")
    if args.method == "oracle":
        table = fdr_frobenius(n, bound=_bound(args, "oracle", n))
    else:
        fn = fdr_formula if args.method == "formula" else theta_q0t0
        table = BigradedTable(n, {(i, j): fn(n, i, j) for i, j in product(range(n + 1), repeat=2)})
    return table, 0


def _sweep_degrees(args):
    if args.degree is None:
        return None
    return range(0, args.degree + 1)


def _cmd_verify(args):
    ident = args.identity
    reports = []
    if ident == "kron-skew":
        if args.a is not None:
            if args.b is None or args.j is None:
                raise UsageError("kron-skew needs --a, --b and --j (or --n for a sweep)")
            reports.append(kron_skew_check(args.a, args.b, args.j, args.flavor))
        else:
            if args.n is None:
                raise UsageError("kron-skew needs --a/--b/--j or --n")
            for lam1, lam2 in product(partitions_of(args.n), repeat=2):
                for j in range(1, args.n + 1):
                    reports.append(kron_skew_check(lam1, lam2, j, args.flavor))
    elif ident == "hook-skew":
        if args.n is not None:
            for k in range(args.n + 1):
                for l in range(args.n + 1 - k):
                    m = args.n - k - l
                    for j in range(1, args.n + 1):
                        reports.append(hook_skew_check(k, l, m, j, args.form))
        else:
            if None in (args.k, args.l, args.m, args.j):
                raise UsageError("hook-skew needs --k --l --m --j (or --n for a sweep)")
            reports.append(hook_skew_check(args.k, args.l, args.m, args.j, args.form))
    elif ident == "theta-recursion":
        degrees = _sweep_degrees(args)
        if degrees is None:
            if None in (args.j, args.m, args.l, args.k):
                raise UsageError("theta-recursion needs --j --m --l --k (or --degree)")
            cases = [(args.j, args.m, args.l, args.k)]
        else:
            cases = [
                (j, m, l, d - m - l)
                for d in degrees
                for m in range(d + 1)
                for l in range(d + 1 - m)
                for j in range(1, d + 1)
                if d - m - l >= args.min_k
            ]
        bound = _bound(args, "qt", max(m + l + k for j, m, l, k in cases))
        for c in cases:
            reports.append(theta_recursion_check(*c, empty_sum=args.empty_sum, bound=bound, variant=args.variant))
    elif ident == "nabla-hk":
        degrees = _sweep_degrees(args)
        if degrees is None:
            if None in (args.m, args.l, args.k):
                raise UsageError("nabla-hk needs --m --l --k (or --degree)")
            cases = [(args.m, args.l, args.k)]
        else:
            cases = [(m, l, d - m - l) for d in degrees for m in range(d + 1) for l in range(d + 1 - m)]
        bound = _bound(args, "qt", max(sum(c) for c in cases))
        for c in cases:
            reports.append(nabla_hk_check(*c, bound=bound))
    elif ident == "main-theorem":
        if args.n is None or args.n < 1:
            raise UsageError("main-theorem needs --n N with N >= 1")
        methods = args.methods.split(",")
        oracle_bound = _bound(args, "oracle", args.n) if "oracle" in methods else ORACLE_DEFAULT
        qt_bound = _bound(args, "qt", args.n) if "direct_qt" in methods else QT_DEFAULT
        try:
            reports = main_theorem_check(args.n, methods, oracle_bound, qt_bound)
        except ValueError as exc:
            if isinstance(exc, BoundExceeded):
                raise
            raise UsageError(str(exc)) from None
    elif ident == "zero-index":
        if args.n is None:
            raise UsageError("zero-index needs --n N")
        for m in range(args.n + 1):
            reports.append(zero_index_probe(m, args.n - m))
    return reports, 0 if all(r.equal for r in reports) else 1


def _cmd_kronecker(args):
    if sum(args.a) != sum(args.b):
        raise UsageError("--a and --b must be partitions of the same size")
    return kronecker(schur(args.a), schur(args.b)), 0


def _cmd_lr(args):
    if sum(args.a) + sum(args.b) != sum(args.c):
        raise UsageError("|a| + |b| must equal |c|")
    return lr_coefficient(args.a, args.b, args.c, method=args.method), 0


def _cmd_char_table(args):
    if args.n < 1:
        raise UsageError("--n must be positive")
    if args.n > 12:
        raise UsageError("--n above 12 is not supported")
    parts = partitions_of(args.n)
    table = character_table(args.n)
    if args.json:
        return {
            "n": args.n,
            "classes": [list(mu) for mu in parts],
            "rows": [{"lambda": list(lam), "values": list(row)} for lam, row in zip(parts, table)],
        }, 0
    labels = [format_partition(mu) for mu in parts]
    width = max(len(x) for x in labels + [str(v) for row in table for v in row])
    lines = [" " * width + " | " + " ".join(x.rjust(width) for x in labels)]
    for lam, row in zip(labels, table):
        lines.append(lam.rjust(width) + " | " + " ".join(str(v).rjust(width) for v in row))
    return "\n".join(lines), 0


def _cmd_macdonald(args):
    _bound(args, "qt", sum(args.mu))
    return _specialize(macdonald_schur(args.mu), args), 0


def _source(args):
    if args.f is not None:
        return _read_symf(args.f)
    if args.e is not None:
        return e(args.e)
    raise UsageError("give --e K or --f FILE")


def _cmd_nabla(args):
    f = _source(args)
    bound = _bound(args, "qt", f.degree)
    return _specialize(nabla(f, bound=bound), args), 0


def _cmd_theta(args):
    f = _source(args)
    bound = _bound(args, "qt", f.degree + sum(d for d in args.d if d > 0))
    if args.nabla:
        f = nabla(f, bound=bound)
    return _specialize(theta_chain(args.d, f, bound=bound), args), 0


def _cmd_enk(args):
    if args.n < 0 or args.k < 0:
        raise UsageError("--n and --k must be nonnegative")
    _bound(args, "qt", args.n)
    out = enk(args.n, args.k)
    if args.nabla:
        out = nabla(out, bound=_bound(args, "qt", args.n))
    return _specialize(out, args), 0


def _cmd_schur_expand(args):
    f = _read_symf(args.f)
    if f.basis == "Htilde":
        _bound(args, "qt", f.degree)
        return to_classical(f, "s"), 0
    return convert(f, "s"), 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _common(p, bound=False):
    p.add_argument("--json", action="store_true", help="emit JSON")
    if bound:
        p.add_argument("--bound", type=int, help="raise the size bound (hard caps apply)")
        p.add_argument("--unsafe", action="store_true", help="disable the hard caps")


def _specialization(p):
    p.add_argument("--q", type=int, help="substitute an integer for q")
    p.add_argument("--t", type=int, help="substitute an integer for t")


def build_parser():
    parser = _Parser(prog="fdrtheta", description="Fermionic diagonal coinvariants and Theta operators.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("fdr", help="bigraded Frobenius table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("oracle", "formula", "theta"), default="formula")
    _common(p, bound=True)
    p.set_defaults(run=_cmd_fdr)

    p = sub.add_parser("verify", help="check an identity on one case or a sweep")
    p.add_argument(
        "identity",
        choices=("kron-skew", "hook-skew", "theta-recursion", "nabla-hk", "main-theorem", "zero-index"),
    )
    for name in ("n", "j", "k", "l", "m", "degree"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--a", type=_partition)
    p.add_argument("--b", type=_partition)
    p.add_argument("--flavor", choices=("h", "e"), default="h")
    p.add_argument("--form", choices=HOOK_SKEW_FORMS, default="difference")
    p.add_argument("--methods", default="formula,recursion")
    p.add_argument("--empty-sum", choices=EMPTY_SUM_CONVENTIONS, default="constant-only")
    p.add_argument("--variant", choices=BINOMIAL_VARIANTS, default="matched")
    p.add_argument("--min-k", type=int, default=0, help="theta-recursion sweep: smallest k")
    _common(p, bound=True)
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("kronecker", help="Kronecker product of two Schur functions")
    p.add_argument("--a", type=_partition, required=True)
    p.add_argument("--b", type=_partition, required=True)
    _common(p)
    p.set_defaults(run=_cmd_kronecker)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^c_{a,b}")
    p.add_argument("--a", type=_partition, required=True)
    p.add_argument("--b", type=_partition, required=True)
    p.add_argument("--c", type=_partition, required=True)
    p.add_argument("--method", choices=("rule", "oracle"), default="rule")
    _common(p)
    p.set_defaults(run=_cmd_lr)

    p = sub.add_parser("char-table", help="character table of the symmetric group")
    p.add_argument("--n", type=int, required=True)
    _common(p)
    p.set_defaults(run=_cmd_char_table)

    p = sub.add_parser("macdonald", help="Schur expansion of a modified Macdonald polynomial")
    p.add_argument("--mu", type=_partition, required=True)
    _specialization(p)
    _common(p, bound=True)
    p.set_defaults(run=_cmd_macdonald)

    p = sub.add_parser("nabla", help="apply nabla to e_K or to a SymF JSON file")
    p.add_argument("--e", type=int)
    p.add_argument("--f")
    _specialization(p)
    _common(p, bound=True)
    p.set_defaults(run=_cmd_nabla)

    p = sub.add_parser("theta", help="apply Theta operators (right to left)")
    p.add_argument("--d", type=_int_list, required=True, help="indices, e.g. 1,2")
    p.add_argument("--e", type=int)
    p.add_argument("--f")
    p.add_argument("--nabla", action="store_true", help="apply nabla to the input first")
    _specialization(p)
    _common(p, bound=True)
    p.set_defaults(run=_cmd_theta)

    p = sub.add_parser("enk", help="the symmetric function E_{n,k}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nabla", action="store_true")
    _specialization(p)
    _common(p, bound=True)
    p.set_defaults(run=_cmd_enk)

    p = sub.add_parser("schur-expand", help="Schur expansion of a SymF JSON file ('-' for stdin)")
    p.add_argument("--f", required=True)
    _common(p, bound=True)
    p.set_defaults(run=_cmd_schur_expand)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "run", None) is None:
            raise UsageError("missing subcommand")
        result, code = args.run(args)
    except UsageError as exc:
        print(f"fdrtheta: error: {exc}", file=sys.stderr)
        return 2
    except BoundExceeded as exc:
        print(f"fdrtheta: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"fdrtheta: error: {exc}", file=sys.stderr)
        return 2
    print(emit(result, args.json), file=out)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
