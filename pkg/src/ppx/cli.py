"""Command line interface.

    ppx seq <name> <N> [--format text|csv|json]
    ppx verify <suite> [--max-n K] [--m M] [--p P] [--format text|json]
    ppx verify all [--format text|json]
    ppx pascal <n> [--variant classic|q|m] [--m M] [--action print|factor]
                   [--format text|json]

Sequence names: e c a u r (classical) and eq Eq uq rq cq (q-analogs).
Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.
The environment variable PPX_MAX_N overrides the sequence length caps
(default 64 for the classical sequences, 20 for the q-sequences, chosen so
``verify all`` stays comfortably under a minute).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import pascal, qsequences, sequences
from .report import Report, render_reports_json
from .rings import ConsistencyError, serialize

INT_SEQ_CAP = 64
Q_SEQ_CAP = 20

SEQ_FUNCS = {
    "e": (sequences.e_seq, "int"),
    "c": (sequences.c_seq, "int"),
    "a": (sequences.a_seq, "int"),
    "u": (sequences.u_seq, "int"),
    "r": (sequences.r_seq, "int"),
    "eq": (qsequences.e_q_seq, "q"),
    "Eq": (qsequences.cap_e_q_seq, "q"),
    "uq": (qsequences.u_q_seq, "q"),
    "rq": (qsequences.r_q_seq, "q"),
    "cq": (qsequences.c_q_seq, "q"),
}


class UsageError(Exception):
    pass


def _seq_cap(family: str) -> int:
    override = os.environ.get("PPX_MAX_N")
    if override is not None:
        try:
            cap = int(override)
        except ValueError:
            raise UsageError(f"PPX_MAX_N must be an integer, got {override!r}")
        if cap < 1:
            raise UsageError("PPX_MAX_N must be >= 1")
        return cap
    return INT_SEQ_CAP if family == "int" else Q_SEQ_CAP


def cmd_seq(args) -> int:
    func, family = SEQ_FUNCS[args.name]
    cap = _seq_cap(family)
    if args.count < 1 or args.count > cap:
        raise UsageError(f"N must be between 1 and {cap} for sequence {args.name!r}")
    values = func(args.count)
    if args.format == "json":
        obj = {
            "sequence": args.name,
            "terms": [{"n": i + 1, "value": serialize(v)} for i, v in enumerate(values)],
        }
        print(json.dumps(obj, indent=2))
    elif args.format == "csv":
        print(",".join(str(v) for v in values))
    else:
        print(" ".join(str(v) for v in values))
    return 0


# ---------------------------------------------------------------------------
# verify


def _merge(name: str, reports) -> Report:
    merged = Report(name)
    for rep in reports:
        merged.checks.extend(rep.checks)
    return merged


def _suite_roundtrip(args):
    n = args.max_n if args.max_n is not None else 14
    return [_merge("roundtrip",
                   [sequences.check_oracle_roundtrip(n), qsequences.check_q_oracle(n)])]


def _suite_kolberg(args):
    return [sequences.check_kolberg(args.max_n if args.max_n is not None else 64)]


def _suite_borwein_lou(args):
    return [sequences.check_borwein_lou(args.max_n if args.max_n is not None else 64)]


def _suite_divisibility(args):
    return [sequences.check_divisibility(args.max_n if args.max_n is not None else 64)]


def _suite_closed_forms(args):
    return [sequences.check_closed_forms(args.max_n if args.max_n is not None else 64)]


def _suite_thm41(args):
    return [qsequences.check_golden_q_lists()]


def _suite_thm42(args):
    return [qsequences.check_integrality(args.max_n if args.max_n is not None else 14)]


def _suite_thm43(args):
    n = args.max_n if args.max_n is not None else 12
    ms = [args.m] if args.m is not None else [2, 3]
    return [_merge("thm43", [pascal.check_cyclotomic_specialization(n, m) for m in ms])]


def _suite_cor44(args):
    n = args.max_n if args.max_n is not None else 20
    ps = [args.p] if args.p is not None else [2, 3, 5]
    return [_merge("cor44", [pascal.check_carlitz(p, n) for p in ps])]


def _suite_thm45(args):
    return [qsequences.check_mod_q2(args.max_n if args.max_n is not None else 32)]


def _suite_eq18(args):
    return [qsequences.check_reciprocal_identity(args.max_n if args.max_n is not None else 10)]


def _suite_eq21(args):
    return [qsequences.check_log_coeffs(args.max_n if args.max_n is not None else 12)]


DEFAULT_ROOT_OF_UNITY_PAIRS = ((6, 2), (8, 2), (9, 3))


def _root_pairs(args):
    if args.m is not None:
        n = args.max_n if args.max_n is not None else max(args.m * 3, 6)
        return [(n, args.m)]
    return list(DEFAULT_ROOT_OF_UNITY_PAIRS)


def _suite_eq26(args):
    return [_merge("eq26", [pascal.check_root_of_unity_factorization(n, m)
                            for n, m in _root_pairs(args)])]


def _suite_eq28(args):
    return [_merge("eq28", [pascal.check_truncated_exp_product(n, m)
                            for n, m in _root_pairs(args)])]


def _suite_pascal(args):
    return [pascal.check_pascal(args.max_n if args.max_n is not None else 12)]


def _suite_qpascal(args):
    return [pascal.check_q_pascal(args.max_n if args.max_n is not None else 12)]


def _suite_pascal_m(args):
    n = args.max_n if args.max_n is not None else 12
    ms = (args.m,) if args.m is not None else (2, 3)
    return [pascal.check_pascal_m(n, ms)]


SUITES = {
    "roundtrip": _suite_roundtrip,
    "kolberg": _suite_kolberg,
    "borwein-lou": _suite_borwein_lou,
    "divisibility": _suite_divisibility,
    "closed-forms": _suite_closed_forms,
    "thm41": _suite_thm41,
    "thm42": _suite_thm42,
    "thm43": _suite_thm43,
    "cor44": _suite_cor44,
    "thm45": _suite_thm45,
    "eq18": _suite_eq18,
    "eq21": _suite_eq21,
    "eq26": _suite_eq26,
    "eq28": _suite_eq28,
    "pascal": _suite_pascal,
    "qpascal": _suite_qpascal,
    "pascal-m": _suite_pascal_m,
}


def cmd_verify(args) -> int:
    if args.suite == "all":
        defaults = argparse.Namespace(max_n=None, m=None, p=None)
        reports = []
        for token in SUITES:
            reports.extend(SUITES[token](defaults))
    else:
        reports = SUITES[args.suite](args)
    if args.format == "json":
        print(render_reports_json(reports))
    else:
        print("\n\n".join(rep.render_text() for rep in reports))
    return 0 if all(rep.passed for rep in reports) else 1


# ---------------------------------------------------------------------------
# pascal


def cmd_pascal(args) -> int:
    n, variant = args.n, args.variant
    if n < 1:
        raise UsageError("n must be >= 1")
    if variant == "m":
        if args.m is None:
            raise UsageError("--m is required with --variant m")
        if args.m < 1:
            raise UsageError("--m must be >= 1")
    elif args.m is not None:
        raise UsageError("--m only applies to --variant m")

    if args.action == "print":
        if variant == "classic":
            matrix = pascal.pascal_matrix(n)
        elif variant == "q":
            matrix = pascal.q_pascal(n)
        else:
            matrix = pascal.pascal_m(n, args.m)
        if args.format == "json":
            obj = {"pascal": n, "variant": variant, "entries": matrix.to_json_obj()}
            if variant == "m":
                obj["m"] = args.m
            print(json.dumps(obj, indent=2))
        else:
            print(matrix.render_text())
        return 0

    if n < 2:
        raise UsageError("factoring needs n >= 2")
    if variant == "classic":
        factors = pascal.factor_pascal(n)
    elif variant == "q":
        factors = pascal.factor_q_pascal(n)
    else:
        factors = pascal.factor_pascal_m(n, args.m)
    if args.format == "json":
        obj = {"pascal": n, "variant": variant,
               "factors": [serialize(c) for c in factors]}
        if variant == "m":
            obj["m"] = args.m
        print(json.dumps(obj, indent=2))
    else:
        print(", ".join(str(c) for c in factors))
    return 0


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppx",
        description="Exact power product expansions of exp and exp_q, "
                    "their sequences, and Pascal matrix factorizations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="print a sequence")
    p_seq.add_argument("name", choices=sorted(SEQ_FUNCS), help="sequence name")
    p_seq.add_argument("count", type=int, metavar="N", help="number of terms")
    p_seq.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_seq.set_defaults(func=cmd_seq)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p_verify.add_argument("--max-n", type=int, dest="max_n", default=None)
    p_verify.add_argument("--m", type=int, default=None)
    p_verify.add_argument("--p", type=int, default=None)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_pascal = sub.add_parser("pascal", help="print or factor a Pascal matrix")
    p_pascal.add_argument("n", type=int)
    p_pascal.add_argument("--variant", choices=("classic", "q", "m"), default="classic")
    p_pascal.add_argument("--m", type=int, default=None)
    p_pascal.add_argument("--action", choices=("print", "factor"), default="print")
    p_pascal.add_argument("--format", choices=("text", "json"), default="text")
    p_pascal.set_defaults(func=cmd_pascal)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
