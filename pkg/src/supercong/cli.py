"""Command-line front end: sweep primes, run selected congruence checks,
and emit machine-readable reports.

Exit codes: 0 when every record passes, 1 when at least one fails,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import supercongruence as sc
from .classical_hg import (
    entry20_partial_sum,
    entry20_target,
    ramanujan_partial_sum,
    ramanujan_target,
)
from .exactnum import DenominatorDivisibleByP
from .gaussian_hg import RoundingResidualTooLarge
from .padic_gamma import NotPIntegral, gamma_p_rational

DEFAULT_STATEMENTS = ("vanhamme_a", "lemma1", "lemma2", "prop3")

#: statements that honor a --mod-power override (the rest have fixed moduli)
_MOD_POWER_STATEMENTS = {"vanhamme_a": 3, "vanhamme_b": 4, "cor5": 3}


@dataclass(frozen=True)
class SweepConfig:
    prime_min: int
    prime_max: int
    statements: tuple
    mod_power: Optional[int]
    workers: int
    fmt: str
    tolerance: float


def _sieve_odd_primes(lo: int, hi: int) -> list:
    """Odd primes in [lo, hi]; 2 is silently excluded."""
    if hi < 3:
        return []
    size = hi + 1
    flags = bytearray([1]) * size
    flags[0:2] = b"\x00\x00"
    for q in range(2, int(hi**0.5) + 1):
        if flags[q]:
            flags[q * q :: q] = b"\x00" * len(range(q * q, size, q))
    return [n for n in range(max(lo, 3), size) if flags[n] and n % 2]


def _run_statement(statement: str, p: int, mod_power: Optional[int], tol: float):
    m = mod_power if (mod_power and statement in _MOD_POWER_STATEMENTS) else None
    if statement == "vanhamme_a":
        return sc.vanhamme_verify(p, m or 3)
    if statement == "vanhamme_b":
        return sc.vanhamme_b_verify(p, m or 4)
    if statement == "lemma1":
        return sc.lemma1_check(p)
    if statement == "lemma2":
        return sc.lemma2_check(p)
    if statement == "prop3":
        return sc.prop3_check(p)
    if statement == "thm_os":
        return sc.theorem_os_check(p, tol)
    if statement == "cor5":
        return sc.cor5_check(p, m or 3, tol)
    if statement == "whipple_inst":
        return sc.whipple_instance_check(p)
    raise ValueError(f"unknown statement {statement!r}")


def _prime_task(args) -> list:
    p, statements, mod_power, tol = args
    rows = []
    for statement in statements:
        start = time.perf_counter()
        rec = _run_statement(statement, p, mod_power, tol)
        millis = (time.perf_counter() - start) * 1000.0
        rows.append(
            {
                "statement": rec.statement,
                "p": rec.p,
                "lhs": rec.lhs.value,
                "rhs": rec.rhs.value,
                "modulus": rec.modulus,
                "pass": rec.passed,
                "millis": round(millis, 3),
            }
        )
    return rows


def _emit(rows: list, fmt: str, out) -> None:
    if fmt == "json-lines":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(["statement", "p", "lhs", "rhs", "modulus", "pass", "millis"])
        for row in rows:
            writer.writerow(
                [
                    row["statement"],
                    row["p"],
                    row["lhs"],
                    row["rhs"],
                    row["modulus"],
                    "true" if row["pass"] else "false",
                    f"{row['millis']:.3f}",
                ]
            )
    else:
        failures = 0
        for row in rows:
            mark = "ok " if row["pass"] else "FAIL"
            failures += 0 if row["pass"] else 1
            out.write(
                f"{mark} {row['statement']:<13} p={row['p']:<6} "
                f"lhs={row['lhs']} rhs={row['rhs']} mod={row['modulus']} "
                f"({row['millis']:.1f} ms)\n"
            )
        out.write(
            f"{len(rows)} checks, {len(rows) - failures} passed, {failures} failed\n"
        )


def cmd_verify(cfg: SweepConfig, out) -> int:
    primes = _sieve_odd_primes(cfg.prime_min, cfg.prime_max)
    tasks = [(p, cfg.statements, cfg.mod_power, cfg.tolerance) for p in primes]
    if cfg.workers <= 1 or len(tasks) <= 1:
        chunks = map(_prime_task, tasks)
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_prime_task, tasks, chunksize=4))
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda row: (row["statement"], row["p"]))
    _emit(rows, cfg.fmt, out)
    return 1 if any(not row["pass"] for row in rows) else 0


def cmd_gamma_p(x_literal: str, p: int, m: int, out) -> int:
    x = Fraction(x_literal)
    out.write(f"{gamma_p_rational(x, p, m).value}\n")
    return 0


def cmd_series(which: str, n_terms: int, out) -> int:
    if which == "ramanujan":
        value, target = ramanujan_partial_sum(n_terms), ramanujan_target()
    else:
        value, target = entry20_partial_sum(n_terms), entry20_target()
    out.write(f"{value!r} target={target!r} gap={abs(value - target):.6e}\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercong",
        description="Machine verification of truncated hypergeometric congruences "
        "over ranges of odd primes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="sweep primes and check statements")
    verify.add_argument(
        "--statements",
        default=",".join(DEFAULT_STATEMENTS),
        help=f"comma list from {{{','.join(sc.STATEMENTS)}}} "
        f"(default: {','.join(DEFAULT_STATEMENTS)})",
    )
    verify.add_argument("--primes", required=True, metavar="A..B", help="prime range")
    verify.add_argument(
        "--mod-power",
        type=int,
        default=None,
        help="modulus exponent override for vanhamme_a / vanhamme_b / cor5",
    )
    verify.add_argument(
        "--workers",
        type=int,
        default=None,
        help="worker processes (default: $SUPERCONG_WORKERS or 1)",
    )
    verify.add_argument(
        "--format",
        choices=("json-lines", "csv", "human"),
        default="human",
        dest="fmt",
    )
    verify.add_argument(
        "--tolerance",
        type=float,
        default=1e-3,
        help="rounding-residual bound for the finite-field series (default 1e-3)",
    )

    gamma = sub.add_parser("gamma-p", help="p-adic Gamma at a rational argument")
    gamma.add_argument("x", help="rational literal, e.g. 3/4")
    gamma.add_argument("p", type=int)
    gamma.add_argument("m", type=int)

    series = sub.add_parser("series", help="partial sums of the two classical series")
    series.add_argument("which", choices=("ramanujan", "entry20"))
    series.add_argument("n_terms", type=int)

    return parser


def _usage_error(message: str) -> int:
    print(f"supercong: error: {message}", file=sys.stderr)
    return 2


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout

    if args.command == "verify":
        try:
            lo_str, hi_str = args.primes.split("..", 1)
            lo, hi = int(lo_str), int(hi_str)
        except ValueError:
            return _usage_error(f"--primes expects A..B, got {args.primes!r}")
        if lo < 2 or lo > hi:
            return _usage_error(f"invalid prime range {args.primes!r}")
        statements = tuple(s for s in args.statements.split(",") if s)
        if not statements:
            return _usage_error("empty statement set")
        unknown = [s for s in statements if s not in sc.STATEMENTS]
        if unknown:
            return _usage_error(
                f"unknown statements {unknown}; choose from {list(sc.STATEMENTS)}"
            )
        if args.mod_power is not None and not 1 <= args.mod_power <= 8:
            return _usage_error("--mod-power must lie in 1..8")
        workers = args.workers
        if workers is None:
            workers = int(os.environ.get("SUPERCONG_WORKERS", "1"))
        if workers < 1:
            return _usage_error("--workers must be positive")
        cfg = SweepConfig(
            prime_min=lo,
            prime_max=hi,
            statements=statements,
            mod_power=args.mod_power,
            workers=workers,
            fmt=args.fmt,
            tolerance=args.tolerance,
        )
        try:
            return cmd_verify(cfg, out)
        except RoundingResidualTooLarge as exc:
            print(f"supercong: {exc}", file=sys.stderr)
            return 2

    if args.command == "gamma-p":
        try:
            return cmd_gamma_p(args.x, args.p, args.m, out)
        except (NotPIntegral, DenominatorDivisibleByP, ValueError, ZeroDivisionError) as exc:
            return _usage_error(str(exc))

    if args.command == "series":
        if args.n_terms < 0:
            return _usage_error("n_terms must be nonnegative")
        return cmd_series(args.which, args.n_terms, out)

    return _usage_error(f"unknown command {args.command!r}")  # unreachable


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
