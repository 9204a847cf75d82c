"""Command-line surface: exact values, series windows, verification suites.

Every subcommand prints either the human text form or a JSON envelope

    {"command": ..., "params": ..., "result": ..., "format_version": "1"}

selected by --format or the QSKEIN_FORMAT environment variable.  Integer
coefficients travel as decimal strings in JSON so arbitrary precision
survives any consumer.  Exit codes: 0 success, 1 verification or
consistency failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bubble import (BubbleParams, bubble_coeff_closed, bubble_coeff_quantum,
                     bubble_coeff_recursive, bubble_expand, theta)
from .errors import ConstraintViolation, InvalidParams, QSkeinError
from .exactpoly import RationalFn
from .quantum import alpha, delta, delta_product_identity, qint
from .series import TruncatedSeries, ts_doteq
from .tail import (mixed_bubble_poch_form, qint_product_identity,
                   reference_tail_coeffs, sb_state_sum, square_bubble_poch_form,
                   stabilization_check, tail_85, tail_85_double_sum,
                   theta_poch_form, theta_value_identity)

FORMAT_VERSION = "1"

_COEFF_FN = {"closed": bubble_coeff_closed,
             "recursive": bubble_coeff_recursive,
             "quantum": bubble_coeff_quantum}


def _emit(args, command: str, params: dict, result, text: str) -> None:
    if args.format == "json":
        envelope = {"command": command, "params": params, "result": result,
                    "format_version": FORMAT_VERSION}
        print(json.dumps(envelope, sort_keys=True))
    else:
        print(text)


def _cmd_qint(args) -> int:
    p = qint(args.n)
    _emit(args, "qint", {"n": args.n}, p.to_json(), p.text())
    return 0


def _cmd_delta(args) -> int:
    p = delta(args.n)
    _emit(args, "delta", {"n": args.n}, p.to_json(), p.text())
    return 0


def _cmd_bubble(args) -> int:
    params = {"m": args.m, "n": args.n, "k": args.k, "l": args.l}
    if args.i is not None:
        rf = _COEFF_FN[args.method](args.m, args.n, args.k, args.l, args.i)
        params.update({"i": args.i, "method": args.method})
        _emit(args, "bubble", params, rf.to_json(), rf.text())
        return 0
    terms = bubble_expand(BubbleParams.from_upper(args.m, args.n, args.k, args.l))
    result = [{"i": t.i, "coeff": t.coeff.to_json(),
               "top_label": t.top_label, "bottom_label": t.bottom_label}
              for t in terms]
    text = "\n".join(
        f"i={t.i}: top {t.top_label}, bottom {t.bottom_label}, coeff {t.coeff.text()}"
        for t in terms)
    _emit(args, "bubble", params, result, text)
    return 0


def _cmd_theta(args) -> int:
    rf = theta(args.m, args.n, args.k)
    _emit(args, "theta", {"m": args.m, "n": args.n, "k": args.k},
          rf.to_json(), rf.text())
    return 0


def _cmd_tail85(args) -> int:
    fn = tail_85 if args.method == "direct" else tail_85_double_sum
    ts = fn(args.terms)
    result = {"method": ts.method, "order": ts.order,
              "series": ts.terms.to_json()}
    _emit(args, "tail85", {"terms": args.terms, "method": args.method},
          result, ts.terms.text())
    return 0


def _cmd_sbsum(args) -> int:
    v = sb_state_sum(args.n)
    _emit(args, "sbsum", {"n": args.n},
          {"n": v.n, "value": v.value.to_json()}, v.value.text())
    return 0


def _run_suite(lines, label: str, failures: list) -> None:
    for ok, text in lines:
        print(("PASS " if ok else "FAIL ") + text)
        if not ok:
            failures.append(label + ": " + text)


def _suite_bubble(bound: int):
    mismatch = []
    cases = 0
    for m in range(bound + 1):
        for n in range(bound + 1):
            for k in range(1, bound + 1):
                for l in range(1, k + 1):
                    for i in range(min(m, n, l) + 1):
                        cases += 1
                        c = bubble_coeff_closed(m, n, k, l, i)
                        if c != bubble_coeff_recursive(m, n, k, l, i) \
                                or c != bubble_coeff_quantum(m, n, k, l, i):
                            mismatch.append((m, n, k, l, i))
    yield (not mismatch,
           f"closed, recursive and quantum coefficients agree on "
           f"m,n<={bound}, 1<=l<=k<={bound} ({cases} cases)"
           + (f"; first mismatch at (m,n,k,l,i)={mismatch[0]}" if mismatch else ""))
    sym = [(m, n, k, l, i)
           for m in range(bound + 1) for n in range(bound + 1)
           for k in range(1, bound + 1) for l in range(1, k + 1)
           for i in range(min(m, n, l) + 1)
           if bubble_coeff_closed(m, n, k, l, i) != bubble_coeff_closed(n, m, k, l, i)]
    yield (not sym, "coefficients are symmetric in the outer labels"
           + (f"; first mismatch at {sym[0]}" if sym else ""))
    asym = [(m, n, k) for m in range(bound + 1) for n in range(bound + 1)
            for k in range(1, bound + 1) if alpha(m, n, k) != alpha(n, m, k)]
    yield (not asym, "alpha weights are symmetric in the outer labels"
           + (f"; first mismatch at {asym[0]}" if asym else ""))
    stray = [(m, n, k, l, i)
             for m in range(bound + 1) for n in range(bound + 1)
             for k in range(1, bound + 1) for l in range(1, k + 1)
             for i in (-1, l + 1, min(m, n, l) + 1)
             if i > min(m, n, l) or i < 0
             if not bubble_coeff_closed(m, n, k, l, i).is_zero]
    yield (not stray, "coefficients vanish outside the channel range"
           + (f"; nonzero at {stray[0]}" if stray else ""))


def _suite_theta(bound: int):
    broken = [(m, n, k)
              for m in range(bound + 1) for n in range(bound + 1)
              for k in range(bound + 1)
              if not (theta(m, n, k) == theta(m, k, n) == theta(n, k, m))]
    yield (not broken, f"theta is symmetric in all three labels, 0..{bound}"
           + (f"; first mismatch at {broken[0]}" if broken else ""))
    e1 = [k for k in range(bound + 1)
          if theta(0, 0, k) != RationalFn.make(delta(k))]
    yield (not e1, "theta(0, 0, k) equals delta(k)"
           + (f"; fails at k={e1[0]}" if e1 else ""))
    e2 = [(m, n) for m in range(bound + 1) for n in range(bound + 1)
          if theta(m, n, 0) != RationalFn.make(delta(m + n))]
    yield (not e2, "theta(m, n, 0) equals delta(m + n)"
           + (f"; fails at {e2[0]}" if e2 else ""))
    e3 = [(m, n, k) for m in range(bound + 1) for n in range(bound + 1)
          for k in range(bound + 1) if not delta_product_identity(m, n, k)]
    yield (not e3, f"delta product identity holds on 0..{bound}"
           + (f"; fails at {e3[0]}" if e3 else ""))


def _suite_identities(bound: int):
    bad = [(n, j) for n in range(1, bound + 1) for j in range(n)
           if not qint_product_identity(n, j)]
    yield (not bad, f"quantum-integer product identity, n<={bound}"
           + (f"; fails at (n,j)={bad[0]}" if bad else ""))
    for name, pairs in (
            ("square bubble Pochhammer form",
             [((n, i), square_bubble_poch_form(n, i))
              for n in range(bound + 1) for i in range(n + 1)]),
            ("mixed bubble Pochhammer form",
             [((n, i, j), mixed_bubble_poch_form(n, i, j))
              for n in range(bound + 1) for i in range(n + 1)
              for j in range(n + 1)]),
            ("theta Pochhammer form",
             [((n, i, j), theta_poch_form(n, i, j))
              for n in range(bound + 1) for i in range(bound + 1)
              for j in range(bound + 1)])):
        failed = [args for args, cmp in pairs if not cmp.ok]
        monomials = sorted({cmp.factor.text() for _, cmp in pairs if cmp.ok})
        yield (not failed,
               f"{name}, n<={bound} ({len(pairs)} cases); "
               f"discrepancy monomials observed: {monomials}"
               + (f"; not unit-monomial at {failed[0]}" if failed else ""))
    bad = [(n, i, j) for n in range(bound + 1) for i in range(bound + 1)
           for j in range(bound + 1) if not theta_value_identity(n, i, j)]
    yield (not bad, "closed bubble times closing loop equals theta value"
           + (f"; fails at {bad[0]}" if bad else ""))


def _suite_tail():
    ref = reference_tail_coeffs()
    t = tail_85(len(ref))
    yield (tuple(t.terms.coeffs) == ref,
           f"tail coefficients match the embedded reference ({len(ref)} terms)")
    d = tail_85_double_sum(len(ref))
    yield (d.terms == t.terms,
           "double-sum rearrangement equals the direct sum at full order")


def _suite_stabilization(bound: int):
    for n in range(1, bound + 1):
        yield (stabilization_check(n),
               f"state sum at color {n} reproduces the tail through q^{n}")


def _cmd_verify(args) -> int:
    failures: list = []
    suites = (["bubble", "theta", "identities", "tail", "stabilization"]
              if args.suite == "all" else [args.suite])
    for name in suites:
        if name == "bubble":
            _run_suite(_suite_bubble(args.max or 5), name, failures)
        elif name == "theta":
            _run_suite(_suite_theta(args.max or 5), name, failures)
        elif name == "identities":
            _run_suite(_suite_identities(args.max or 5), name, failures)
        elif name == "tail":
            _run_suite(_suite_tail(), name, failures)
        elif name == "stabilization":
            _run_suite(_suite_stabilization(args.max or 3), name, failures)
    if failures:
        print(f"{len(failures)} failure(s)")
        return 1
    return 0


def _int_arg(parser, flag: str, help_text: str) -> None:
    parser.add_argument(flag, type=int, required=True, help=help_text)


def _build_parser() -> argparse.ArgumentParser:
    env_format = os.environ.get("QSKEIN_FORMAT", "text")
    if env_format not in ("text", "json"):
        env_format = "text"
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=env_format,
                        help="output format (default from QSKEIN_FORMAT, else text)")

    parser = argparse.ArgumentParser(
        prog="qskein",
        description="Exact bubble expansion coefficients, theta values, "
                    "and the 8_5 colored Jones tail.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qint", parents=[common], help="quantum integer [n]")
    _int_arg(p, "--n", "index")
    p.set_defaults(fn=_cmd_qint)

    p = sub.add_parser("delta", parents=[common], help="loop value delta(n)")
    _int_arg(p, "--n", "index")
    p.set_defaults(fn=_cmd_delta)

    p = sub.add_parser("bubble", parents=[common],
                       help="bubble expansion or a single coefficient")
    for flag in ("--m", "--n", "--k", "--l"):
        _int_arg(p, flag, "label " + flag.lstrip("-"))
    p.add_argument("--i", type=int, default=None,
                   help="channel; omit for the full expansion")
    p.add_argument("--method", choices=sorted(_COEFF_FN), default="closed",
                   help="evaluation route for a single coefficient")
    p.set_defaults(fn=_cmd_bubble)

    p = sub.add_parser("theta", parents=[common], help="theta graph value")
    for flag in ("--m", "--n", "--k"):
        _int_arg(p, flag, "label " + flag.lstrip("-"))
    p.set_defaults(fn=_cmd_theta)

    p = sub.add_parser("tail85", parents=[common],
                       help="tail coefficients of the 8_5 family")
    p.add_argument("--terms", type=int, required=True,
                   help="number of coefficients, starting at q^0")
    p.add_argument("--method", choices=("direct", "double-sum"),
                   default="direct")
    p.set_defaults(fn=_cmd_tail85)

    p = sub.add_parser("sbsum", parents=[common],
                       help="exact state sum for color n")
    _int_arg(p, "--n", "color")
    p.set_defaults(fn=_cmd_sbsum)

    p = sub.add_parser("verify", parents=[common],
                       help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=("all", "bubble", "theta", "identities", "tail",
                            "stabilization"))
    p.add_argument("--max", type=int, default=None,
                   help="grid bound override (default: suite-specific)")
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidParams, ConstraintViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QSkeinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
