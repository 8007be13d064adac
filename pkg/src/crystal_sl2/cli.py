"""Command-line front end: ``crystal-sl2 <command> ... [--text|--json|--csv]``.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .crystal import decompose
from .errors import DomainError
from .exactq import format_ratfunc, leading, qnum
from .halfint import HalfInt
from .qcg import cg_table, limit_rows, limits_csv
from .tensorops import (GammaSpec, gamma_renormalize, reduced_from_blocks,
                        selection_table, vector_from_generators)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


def _spin(text: str) -> HalfInt:
    try:
        return HalfInt(text)
    except (ValueError, TypeError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an integer or half-integer: {text!r}") from None


def _grid(rows) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    lines = [" | ".join(x.rjust(w) for x, w in zip(rows[0], widths))]
    lines.append("-+-".join("-" * w for w in widths))
    for r in rows[1:]:
        lines.append(" | ".join(x.rjust(w) for x, w in zip(r, widths)))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _cmd_qnum(args) -> str:
    value = format_ratfunc(qnum(args.x))
    if args.format == "json":
        return json.dumps({"x": str(args.x), "value": value}) + "\n"
    if args.format == "csv":
        return _csv([["x", "value"], [str(args.x), value]])
    return value + "\n"


def _cmd_cg(args) -> str:
    if args.spins[0].twice < 0 or args.spins[1].twice < 0:
        raise DomainError("spins must be non-negative")
    j1, j2 = args.spins
    if args.limits:
        rows = limit_rows(j1, j2, surviving_only=not args.all_j)
        if args.format == "csv":
            return limits_csv(rows)
        if args.format == "json":
            return json.dumps({"j1": str(j1), "j2": str(j2), "limits": [
                {"m1": str(m1), "m2": str(m2), "J": str(J),
                 "exponent": None if e is None else str(e), "sign": s, "mag2": str(mag2)}
                for m1, m2, J, e, s, mag2 in rows]}, indent=2) + "\n"
        text = [["m1", "m2", "J", "exponent", "sign", "mag2"]]
        text += [[str(m1), str(m2), str(J), "" if e is None else str(e),
                  {1: "+", -1: "-", 0: "0"}[s], str(mag2)] for m1, m2, J, e, s, mag2 in rows]
        return _grid(text)
    table = cg_table(j1, j2)
    if args.format == "json":
        return table.to_json() + "\n"
    keys = sorted(table.coefficients, key=lambda k: (-k.m1, -k.m2, -k.J))
    from .exactq import format_scalar
    rows = [["m1", "m2", "J", "M", "value"]]
    rows += [[str(k.m1), str(k.m2), str(k.J), str(k.M), format_scalar(table.coefficients[k])]
             for k in keys]
    return _csv(rows) if args.format == "csv" else _grid(rows)


def _cmd_decompose(args) -> str:
    dec = decompose(args.spins)
    if args.format == "json":
        return dec.to_json() + "\n"
    rows = [["word", "J", "M", "index"]]
    for J, idx, words in dec.components:
        for w in words:
            rows.append([str(w), str(J), str(w.weight), str(idx)])
    return _csv(rows) if args.format == "csv" else _grid(rows)


def _cmd_selection(args) -> str:
    table = selection_table(args.j, args.j1)
    if args.format == "json":
        return table.to_json() + "\n"
    if args.format == "csv":
        return table.to_csv()
    return table.to_text()


def _cmd_reduced(args) -> str:
    from .qboson import spinor_matrix_elements

    j1 = args.j1
    H = HalfInt("1/2")
    if args.operator == "vector":
        T = vector_from_generators(j1)
        J = j1
        gamma = GammaSpec.minimal_vector()
    else:
        dagger = args.operator == "spinor-dagger"
        if dagger and j1.twice <= 0:
            raise DomainError("the conjugate spinor needs j1 >= 1/2")
        T = spinor_matrix_elements(dagger, [j1])
        J = j1 - H if dagger else j1 + H
        gamma = GammaSpec.spinor()
    if args.gamma == "minimal":
        T = gamma_renormalize(T, gamma)
    info = reduced_from_blocks(T, J, j1).to_dict()
    if args.format == "json":
        return json.dumps(info, indent=2) + "\n"
    rows = [["J_out", "j_in", "value", "leading_exponent", "limit"],
            [info["J_out"], info["j_in"], info["value"],
             "" if info["leading_exponent"] is None else info["leading_exponent"], info["limit"]]]
    return _csv(rows) if args.format == "csv" else _grid(rows)


def _cmd_verify(args):
    from .verify import run_suites

    reports = run_suites(args.suite or None)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        out = json.dumps({"passed": ok, "suites": [r.to_dict() for r in reports]}, indent=2) + "\n"
    elif args.format == "csv":
        out = _csv([["suite", "passed", "checks", "failures"]] +
                   [[r.name, str(r.passed).lower(), str(r.checked), str(len(r.failures))] for r in reports])
    else:
        lines = []
        for r in reports:
            lines.append(r.summary())
            lines.extend(f"    {f}" for f in r.failures[:20])
        out = "\n".join(lines) + "\n"
    return out, (EXIT_OK if ok else EXIT_VERIFY)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--text", dest="format", action="store_const", const="text",
                       help="aligned text (default)")
    group.add_argument("--json", dest="format", action="store_const", const="json")
    group.add_argument("--csv", dest="format", action="store_const", const="csv")
    fmt.set_defaults(format="text")

    p = argparse.ArgumentParser(prog="crystal-sl2",
                                description="Exact U_q(sl(2)) tables and their q -> 0 crystal limits.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("qnum", parents=[fmt], help="the q-number [x]")
    s.add_argument("x", type=_spin)
    s.set_defaults(func=_cmd_qnum)

    s = sub.add_parser("cg", parents=[fmt], help="q-Clebsch-Gordan table for j1 x j2")
    s.add_argument("spins", type=_spin, nargs=2, metavar="j")
    s.add_argument("--limits", action="store_true",
                   help="q -> 0 behaviour: one row per (m1, m2), the surviving J")
    s.add_argument("--all-j", action="store_true",
                   help="with --limits, list every J instead of the surviving one")
    s.set_defaults(func=_cmd_cg)

    s = sub.add_parser("decompose", parents=[fmt], help="crystal components of j1 x j2 x ...")
    s.add_argument("spins", type=_spin, nargs="+", metavar="j")
    s.set_defaults(func=_cmd_decompose)

    s = sub.add_parser("selection", parents=[fmt], help="final J of tau^j_m |j1 m1>")
    s.add_argument("j", type=_spin)
    s.add_argument("j1", type=_spin)
    s.set_defaults(func=_cmd_selection)

    s = sub.add_parser("reduced", parents=[fmt], help="reduced matrix element of a q-tensor")
    s.add_argument("operator", choices=["vector", "spinor", "spinor-dagger"])
    s.add_argument("j1", type=_spin)
    s.add_argument("--gamma", choices=["none", "minimal"], default="none",
                   help="renormalize with the minimal central element for this operator")
    s.set_defaults(func=_cmd_reduced)

    s = sub.add_parser("verify", parents=[fmt], help="run the verification suites")
    s.add_argument("--suite", action="append", metavar="NAME",
                   help="run only this suite (repeatable)")
    s.set_defaults(func=_cmd_verify)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        result = args.func(args)
    except DomainError as exc:
        print(f"crystal-sl2 {args.command}: error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except KeyError as exc:
        if args.command == "verify":
            print(f"crystal-sl2 verify: error: {exc.args[0]}", file=stderr)
            return EXIT_USAGE
        raise
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    stdout.write(result)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
