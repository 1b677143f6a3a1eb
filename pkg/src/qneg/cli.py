"""Command-line front end: evaluation, tables, expansions, and verification
sweeps over every identity the library implements.

Every subcommand is a thin adapter over the library; output formats are
documented and stable so they can serve as golden fixtures.  Exit status is
0 on success or all-pass, 1 on verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Callable, Iterator

from .apery import apery, verify_apery_congruence, verify_apery_symmetry
from .congruence import is_prime, lucas_product, q_lucas_rhs, verify_lucas, verify_q_lucas
from .hybridset import qbinom_via_subsets, subset_count
from .laurent import ONE, LaurentPoly
from .qbinom import binom, degree_profile, qbinom, qbinom_pascal, six_forms
from .qseries import (
    Direction,
    freshman_congruence,
    pochhammer_expansion,
    power_xy,
    verify_chu_vandermonde,
)

SCHEMA = "qneg/1"

EXPAND_MODES = (
    "noncommutative-from-zero",
    "noncommutative-from-infinity",
    "pochhammer",
)

Outcome = bool | str  # True, False, or "skip"
Case = tuple[str, Outcome]


class _Parser(argparse.ArgumentParser):
    # Treat any "-<digits>..." token as a value rather than an option name,
    # so range flags accept "--n -30..30" without an equals sign.  argparse
    # assigns its matcher per instance, hence the override here.
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+")


def parse_range(text: str) -> tuple[int, int]:
    """Parse inclusive "lo..hi" (or a single integer) into (lo, hi)."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}, expected lo..hi")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}: lo must not exceed hi")
    return lo, hi


def _span(rng: tuple[int, int] | None, lo: int, hi: int) -> range:
    if rng is None:
        return range(lo, hi + 1)
    return range(rng[0], rng[1] + 1)


# -- verification suites ----------------------------------------------------
#
# Each suite streams (case id, outcome) in sorted case order; the aggregate
# report is therefore deterministic however the sweep is scheduled.


def _suite_pascal(ns) -> Iterator[Case]:
    # q-Pascal, its alternate form, and the absorption identity.
    for n in _span(ns.n, -12, 12):
        for k in _span(ns.k, -12, 12):
            case = f"pascal n={n} k={k}"
            if (n, k) == (0, 0):
                yield case, "skip"
                continue
            lhs = qbinom(n, k)
            ok = lhs == qbinom(n - 1, k - 1) + qbinom(n - 1, k).shift(k)
            ok = ok and lhs == qbinom(n - 1, k - 1).shift(n - k) + qbinom(n - 1, k)
            if ok and k != 0:
                cross = (ONE - LaurentPoly.q_power(k)) * lhs
                ok = cross == (ONE - LaurentPoly.q_power(n)) * qbinom(n - 1, k - 1)
            yield case, ok


def _suite_symmetry(ns) -> Iterator[Case]:
    for n in _span(ns.n, -12, 12):
        for k in _span(ns.k, -12, 12):
            yield f"symmetry n={n} k={k}", qbinom(n, k) == qbinom(n, n - k)


def _suite_reflection(ns) -> Iterator[Case]:
    # All six reflection/symmetry forms must reproduce the coefficient.
    for n in _span(ns.n, -12, 12):
        for k in _span(ns.k, -12, 12):
            lhs = qbinom(n, k)
            ok = all(pre * qbinom(n2, k2) == lhs for pre, (n2, k2) in six_forms(n, k))
            yield f"reflection n={n} k={k}", ok


def _suite_qinv(ns) -> Iterator[Case]:
    for n in _span(ns.n, -12, 12):
        for k in _span(ns.k, -12, 12):
            v = qbinom(n, k)
            ok = v == v.substitute_qinv().shift(k * (n - k))
            yield f"qinv n={n} k={k}", ok


def _suite_degrees(ns) -> Iterator[Case]:
    for n in _span(ns.n, -12, 12):
        for k in _span(ns.k, -12, 12):
            v = qbinom(n, k)
            prof = degree_profile(n, k)
            if v.is_zero():
                ok = prof is None
            else:
                ok = prof == (v.valuation(), v.degree()) and v.is_self_reciprocal()
            yield f"degrees n={n} k={k}", ok


def _suite_subsets(ns) -> Iterator[Case]:
    for n in _span(ns.n, -7, 7):
        for k in _span(ns.k, -7, 7):
            ok = qbinom_via_subsets(n, k) == qbinom(n, k)
            ok = ok and subset_count(n, k) == abs(binom(n, k))
            ok = ok and qbinom_pascal(n, k) == qbinom(n, k)
            yield f"subsets n={n} k={k}", ok


def _suite_chu(ns) -> Iterator[Case]:
    nspan, mspan, kspan = _span(ns.n, -5, 5), _span(ns.m, -5, 5), _span(ns.k, -6, 6)
    for n in nspan:
        for m in mspan:
            for k in (kk for kk in kspan if kk >= 0):
                yield f"chu n={n} m={m} k={k}", verify_chu_vandermonde(n, m, k)
    for n in (x for x in nspan if x < 0):
        for m in (x for x in mspan if x < 0):
            for k in (kk for kk in kspan if kk < 0):
                yield f"chu n={n} m={m} k={k}", verify_chu_vandermonde(n, m, k)


def _suite_qbt(ns) -> Iterator[Case]:
    # Commutative q-binomial theorem for the shifted factorial.
    trunc = ns.trunc or 10
    for n in _span(ns.n, -5, 5):
        series = pochhammer_expansion(n, trunc)
        for k in range(trunc):
            expect = qbinom(n, k).shift(k * (k - 1) // 2)
            yield f"qbt n={n} k={k}", series.coefficient(k) == expect


def _suite_ncqbt(ns) -> Iterator[Case]:
    # Noncommutative binomial theorem, both expansion directions.
    trunc = ns.trunc or 10
    for n in _span(ns.n, -6, 6):
        from_zero = power_xy(n, Direction.FROM_ZERO, trunc)
        for k in range(trunc):
            yield f"ncqbt zero n={n} k={k}", from_zero.coefficient(k) == qbinom(n, k)
        from_inf = power_xy(n, Direction.FROM_INFINITY, trunc)
        for k in range(n, n - trunc, -1):
            yield f"ncqbt inf n={n} k={k}", from_inf.coefficient(k) == qbinom(n, k)


def _suite_lucas(ns) -> Iterator[Case]:
    primes = [p for p in _span(ns.p, 2, 11) if is_prime(p)]
    for p in primes:
        for n in _span(ns.n, -50, 50):
            for k in _span(ns.k, -50, 50):
                ok = verify_lucas(n, k, p)
                ok = ok and lucas_product(n, k, p) == binom(n, k) % p
                yield f"lucas p={p} n={n} k={k}", ok


def _suite_qlucas(ns) -> Iterator[Case]:
    for m in _span(ns.m, 2, 9):
        for n in _span(ns.n, -15, 15):
            for k in _span(ns.k, -15, 15):
                yield f"qlucas m={m} n={n} k={k}", verify_q_lucas(n, k, m)


def _suite_freshman(ns) -> Iterator[Case]:
    for m in _span(ns.m, 2, 12):
        yield f"freshman m={m}", freshman_congruence(m, ns.trunc)


APERY_CONGRUENCE_CASES = (
    (5, 1, 1, "beukers"),
    (5, 1, 5, "beukers"),
    (5, 1, 1, "coster"),
    (5, 1, 2, "coster"),
    (5, 2, 1, "coster"),
)


def _suite_apery(ns) -> Iterator[Case]:
    for n in _span(ns.n, 0, 25):
        yield f"apery symmetry n={n}", verify_apery_symmetry(n)
    for p, r, m, variant in APERY_CONGRUENCE_CASES:
        ok = verify_apery_congruence(p, r, m, variant)
        yield f"apery {variant} p={p} r={r} m={m}", ok


SUITES: dict[str, Callable[[argparse.Namespace], Iterator[Case]]] = {
    "pascal": _suite_pascal,
    "symmetry": _suite_symmetry,
    "reflection": _suite_reflection,
    "qinv": _suite_qinv,
    "degrees": _suite_degrees,
    "subsets": _suite_subsets,
    "chu": _suite_chu,
    "qbt": _suite_qbt,
    "ncqbt": _suite_ncqbt,
    "lucas": _suite_lucas,
    "qlucas": _suite_qlucas,
    "freshman": _suite_freshman,
    "apery": _suite_apery,
}


# -- subcommand handlers ------------------------------------------------------


def _emit(ns, text: str, body: dict) -> None:
    if ns.format == "json":
        body = {"schema": SCHEMA, **body}
        print(json.dumps(body))
    else:
        print(text)


def _cmd_eval(ns) -> int:
    if ns.q1:
        value = str(binom(ns.n, ns.k))
    else:
        value = qbinom(ns.n, ns.k)
    _emit(
        ns,
        str(value),
        {
            "command": "eval",
            "n": ns.n,
            "k": ns.k,
            "q1": bool(ns.q1),
            "value": value if ns.q1 else value.to_json_dict(),
        },
    )
    return 0


def _cmd_table(ns) -> int:
    n_lo, n_hi = ns.n
    k_lo, k_hi = ns.k
    cells = []
    for n in range(n_lo, n_hi + 1):
        for k in range(k_lo, k_hi + 1):
            value = str(binom(n, k)) if ns.q1 else qbinom(n, k)
            cells.append((n, k, value))
    if ns.format == "json":
        body = {
            "schema": SCHEMA,
            "command": "table",
            "q1": bool(ns.q1),
            "cells": [
                {"n": n, "k": k, "value": v if ns.q1 else v.to_json_dict()}
                for n, k, v in cells
            ],
        }
        print(json.dumps(body))
    else:
        ks = range(k_lo, k_hi + 1)
        print("n\\k\t" + "\t".join(str(k) for k in ks))
        width = len(ks)
        for i in range(0, len(cells), width):
            row = cells[i : i + width]
            print(str(row[0][0]) + "\t" + "\t".join(str(v) for _, _, v in row))
    return 0


def _cmd_expand(ns) -> int:
    if ns.mode == "pochhammer":
        series = pochhammer_expansion(ns.n, ns.trunc)
        ks = list(range(ns.trunc))
        coeff = series.coefficient
    else:
        direction = (
            Direction.FROM_ZERO
            if ns.mode == "noncommutative-from-zero"
            else Direction.FROM_INFINITY
        )
        series = power_xy(ns.n, direction, ns.trunc)
        lo, hi = series.window()
        ks = list(range(lo, hi + 1)) if direction is Direction.FROM_ZERO else list(
            range(hi, lo - 1, -1)
        )
        coeff = series.coefficient
    if ns.format == "json":
        body = {
            "schema": SCHEMA,
            "command": "expand",
            "n": ns.n,
            "mode": ns.mode,
            "truncation": ns.trunc,
            "terms": [{"k": k, "value": coeff(k).to_json_dict()} for k in ks],
        }
        print(json.dumps(body))
    else:
        for k in ks:
            print(f"C({k}) = {coeff(k)}")
    return 0


def _cmd_lucas(ns) -> int:
    residue = lucas_product(ns.n, ns.k, ns.p)
    _emit(
        ns,
        str(residue),
        {"command": "lucas", "n": ns.n, "k": ns.k, "p": ns.p, "residue": residue},
    )
    return 0


def _cmd_qlucas(ns) -> int:
    rhs = q_lucas_rhs(ns.n, ns.k, ns.m)
    _emit(
        ns,
        str(rhs),
        {
            "command": "qlucas",
            "n": ns.n,
            "k": ns.k,
            "m": ns.m,
            "value": rhs.to_json_dict(),
        },
    )
    return 0


def _cmd_apery(ns) -> int:
    value = apery(ns.n)
    _emit(
        ns,
        str(value),
        {"command": "apery", "n": ns.n, "value": str(value)},
    )
    return 0


def _cmd_verify(ns) -> int:
    checked = passed = skipped = 0
    failures: list[str] = []
    for case, outcome in SUITES[ns.suite](ns):
        if outcome == "skip":
            skipped += 1
            continue
        checked += 1
        if outcome:
            passed += 1
        else:
            failures.append(case)
    if ns.format == "json":
        body = {
            "schema": SCHEMA,
            "command": "verify",
            "suite": ns.suite,
            "checked": checked,
            "passed": passed,
            "skipped": skipped,
            "failures": failures,
        }
        print(json.dumps(body))
    else:
        for case in failures:
            print(f"FAIL {case}", file=sys.stderr)
        line = f"checked {checked}, passed {passed}"
        if skipped:
            line += f", skipped {skipped}"
        print(line)
    return 0 if not failures else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default text)",
    )

    parser = _Parser(
        prog="qneg",
        description="Exact q-binomial coefficients for all integer arguments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate one coefficient")
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--k", type=int, required=True)
    p_eval.add_argument("--q1", action="store_true", help="evaluate at q = 1")
    p_eval.set_defaults(handler=_cmd_eval)

    p_table = sub.add_parser("table", parents=[common], help="emit a grid of values")
    p_table.add_argument("--n", type=parse_range, required=True, metavar="LO..HI")
    p_table.add_argument("--k", type=parse_range, required=True, metavar="LO..HI")
    p_table.add_argument("--q1", action="store_true", help="evaluate at q = 1")
    p_table.set_defaults(handler=_cmd_table)

    p_expand = sub.add_parser("expand", parents=[common], help="series expansions")
    p_expand.add_argument("--n", type=int, required=True)
    p_expand.add_argument("--mode", choices=EXPAND_MODES, required=True)
    p_expand.add_argument("--trunc", type=int, default=16)
    p_expand.set_defaults(handler=_cmd_expand)

    p_lucas = sub.add_parser(
        "lucas", parents=[common], help="digit-wise binomial residue mod a prime"
    )
    p_lucas.add_argument("--n", type=int, required=True)
    p_lucas.add_argument("--k", type=int, required=True)
    p_lucas.add_argument("--p", type=int, required=True)
    p_lucas.set_defaults(handler=_cmd_lucas)

    p_qlucas = sub.add_parser(
        "qlucas", parents=[common], help="q-Lucas right-hand side mod Phi_m"
    )
    p_qlucas.add_argument("--n", type=int, required=True)
    p_qlucas.add_argument("--k", type=int, required=True)
    p_qlucas.add_argument("--m", type=int, required=True)
    p_qlucas.set_defaults(handler=_cmd_qlucas)

    p_apery = sub.add_parser("apery", parents=[common], help="Apery number A(n)")
    p_apery.add_argument("--n", type=int, required=True)
    p_apery.set_defaults(handler=_cmd_apery)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="run an identity sweep"
    )
    p_verify.add_argument("suite", choices=sorted(SUITES))
    p_verify.add_argument("--n", type=parse_range, default=None, metavar="LO..HI")
    p_verify.add_argument("--k", type=parse_range, default=None, metavar="LO..HI")
    p_verify.add_argument("--m", type=parse_range, default=None, metavar="LO..HI")
    p_verify.add_argument("--p", type=parse_range, default=None, metavar="LO..HI")
    p_verify.add_argument("--trunc", type=int, default=None)
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.handler(ns)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main(sys.argv[1:]))
