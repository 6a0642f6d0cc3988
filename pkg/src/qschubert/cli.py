"""Command line front end.

Commands: ``lr`` (classical structure constants), ``qprod`` (quantum
products), ``gw`` (three-point invariants), ``puzzle`` (raw puzzle
counts), ``string`` (boundary-string encodings), ``verify`` (batch
suites).  Output is deterministic: identical invocations produce
identical bytes.  Exit codes: 0 success, 1 domain error, 2 usage error,
3 internal contract violation.

Product-shaped results can be cached in a line-delimited file of JSON
records keyed by a hash of the query and the engine version; stale
versions are ignored.  The location comes from ``--cache``, falling back
to the ``QSCHUBERT_CACHE`` environment variable.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import isotropic, puzzle, typea, verify
from .combinat import (grassmann_permutation, jd_string, partition,
                       rect_dual, to_01_string)
from .qpoly import ContractViolation

ENGINE_VERSION = "0.1.0"


class UsageError(ValueError):
    """Malformed command line input, as opposed to a domain violation."""


def parse_partition(text: str):
    """Comma-separated parts; '' and '0' denote the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        return partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from exc


def _terms_sorted_for_json(coeffs):
    return sorted(((list(nu), d, c) for (nu, d), c in coeffs.items()),
                  key=lambda t: (t[0], t[1]))


def _result_json(query: dict, coeffs) -> str:
    entries = [{"nu": nu, "d": d, "c": c} for nu, d, c in _terms_sorted_for_json(coeffs)]
    return json.dumps({"query": query, "result": entries}, sort_keys=True)


def _cache_key(query: dict) -> str:
    payload = json.dumps({"query": query, "version": ENGINE_VERSION}, sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


def _cache_lookup(path: str | None, key: str):
    if not path or not os.path.exists(path):
        return None
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError:
                continue
            if record.get("key") == key and record.get("version") == ENGINE_VERSION:
                return {(partition(nu), d): c for nu, d, c in record["result"]}
    return None


def _cache_store(path: str | None, key: str, coeffs):
    if not path:
        return
    record = {"key": key, "version": ENGINE_VERSION,
              "result": _terms_sorted_for_json(coeffs)}
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(record, sort_keys=True) + "\n")


def _element_for_space(args):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    if args.space == "A":
        if args.m is None or args.n is None:
            raise UsageError("space A needs --m and --n")
        return typea.quantum_product_a(lam, mu, args.m, args.n), "s"
    if args.n is None:
        raise UsageError(f"space {args.space} needs --n")
    if args.space == "LG":
        return isotropic.quantum_product_lg(lam, mu, args.n), "s"
    if args.space == "OG":
        return isotropic.quantum_product_og(lam, mu, args.n), "t"
    raise ValueError(f"unknown space {args.space!r}")


def _cmd_qprod(args) -> str:
    query = {"cmd": "qprod", "space": args.space, "m": args.m, "n": args.n,
             "lambda": list(parse_partition(args.lam)),
             "mu": list(parse_partition(args.mu))}
    cache_path = args.cache or os.environ.get("QSCHUBERT_CACHE")
    key = _cache_key(query)
    coeffs = _cache_lookup(cache_path, key)
    symbol = "t" if args.space == "OG" else "s"
    if coeffs is None:
        element, symbol = _element_for_space(args)
        coeffs = element.coeffs
        _cache_store(cache_path, key, coeffs)
    if args.format == "json":
        return _result_json(query, coeffs)
    if args.space == "A":
        element = typea.QHElement(args.m, args.n, coeffs)
    else:
        element = isotropic.IsoQHElement(args.space, args.n, coeffs)
    return element.text(symbol)


def _cmd_gw(args) -> str:
    lam, mu, nu = (parse_partition(x) for x in (args.lam, args.mu, args.nu))
    method = args.method
    if args.space == "A":
        if args.m is None or args.n is None:
            raise UsageError("space A needs --m and --n")
        if method == "puzzle":
            value = typea.gw_a_puzzle(lam, mu, nu, args.d, args.m, args.n)
        else:
            value = typea.gw_a(lam, mu, nu, args.d, args.m, args.n)
    elif args.space == "LG":
        if args.n is None:
            raise UsageError("space LG needs --n")
        value = isotropic.gw_lg(lam, mu, nu, args.d, args.n)
    elif args.space == "OG":
        if args.n is None:
            raise UsageError("space OG needs --n")
        if method == "duality":
            report = isotropic.duality_check(lam, mu, nu, args.d, args.n)
            value = report.data["og"]
            if not report.ok:
                raise ContractViolation("; ".join(report.failures))
        else:
            value = isotropic.gw_og(lam, mu, nu, args.d, args.n)
    else:
        raise ValueError(f"unknown space {args.space!r}")
    if args.format == "json":
        query = {"cmd": "gw", "space": args.space, "m": args.m, "n": args.n,
                 "lambda": list(lam), "mu": list(mu), "nu": list(nu), "d": args.d}
        return _result_json(query, {(nu, args.d): value})
    return str(value)


def _cmd_lr(args) -> str:
    lam, mu, nu = (parse_partition(x) for x in (args.lam, args.mu, args.nu))
    if args.method == "puzzle":
        strings = [to_01_string(x, args.m, args.n) for x in (lam, mu, rect_dual(nu, args.m, args.n))]
        value = puzzle.count_puzzles_1step(*strings)
    else:
        product = typea.quantum_product_a(lam, mu, args.m, args.n)
        value = product.coefficient(nu, 0)
    if args.format == "json":
        query = {"cmd": "lr", "m": args.m, "n": args.n, "lambda": list(lam),
                 "mu": list(mu), "nu": list(nu)}
        return _result_json(query, {(nu, 0): value})
    return str(value)


def _cmd_puzzle(args) -> str:
    if args.type == "1step":
        value = puzzle.count_puzzles_1step(args.nw, args.ne, args.s)
    else:
        value = puzzle.count_puzzles_2step(args.nw, args.ne, args.s)
    if args.format == "json":
        query = {"cmd": "puzzle", "type": args.type, "nw": args.nw,
                 "ne": args.ne, "s": args.s}
        return json.dumps({"query": query, "result": value}, sort_keys=True)
    return str(value)


def _cmd_string(args) -> str:
    lam = parse_partition(args.lam)
    i_string = to_01_string(lam, args.m, args.n).symbols
    w = grassmann_permutation(lam, args.m, args.n)
    payload = {"I": i_string, "w": list(w)}
    lines = [f"I={i_string}", "w=" + ",".join(str(x) for x in w)]
    if args.d is not None:
        j = jd_string(lam, args.m, args.n, args.d).symbols
        payload[f"J{args.d}"] = j
        lines.append(f"J{args.d}={j}")
    if args.format == "json":
        query = {"cmd": "string", "m": args.m, "n": args.n,
                 "lambda": list(lam), "d": args.d}
        return json.dumps({"query": query, "result": payload}, sort_keys=True)
    return "\n".join(lines)


def _cmd_verify(args) -> tuple[int, str]:
    suite = verify.SUITES.get(args.suite)
    if suite is None:
        return 2, f"unknown suite {args.suite!r}; choose from {sorted(verify.SUITES)}"
    kwargs = {}
    if args.max_N is not None:
        kwargs["max_N"] = args.max_N
    if args.max_n is not None:
        kwargs["max_n"] = args.max_n
    if args.max_weight is not None:
        kwargs["max_weight"] = args.max_weight
    try:
        report = suite(**kwargs)
    except TypeError as exc:
        return 2, f"bad bounds for suite {args.suite}: {exc}"
    if report.ok:
        return 0, f"PASS ({report.checked} checks)"
    first = report.failures[0] if report.failures else "unknown"
    return 1, f"FAIL ({report.checked} checks) first: {first}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qschubert",
                                     description="Exact Schubert calculus engine")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, partitions=("lambda", "mu"), space=True, mn=True):
        if space:
            p.add_argument("--space", choices=["A", "LG", "OG"], default="A")
        if mn:
            p.add_argument("--m", type=int, default=None)
            p.add_argument("--n", type=int, default=None)
        for name in partitions:
            dest = {"lambda": "lam"}.get(name, name)
            p.add_argument(f"--{name}", dest=dest, required=True)
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("qprod", help="quantum product of two classes")
    add_common(p)
    p.add_argument("--cache", default=None)

    p = sub.add_parser("gw", help="three-point invariant of given degree")
    add_common(p, partitions=("lambda", "mu", "nu"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--method", choices=["pieri", "qtilde", "puzzle", "duality"],
                   default=None)

    p = sub.add_parser("lr", help="classical structure constant on G(m,N)")
    add_common(p, partitions=("lambda", "mu", "nu"), space=False)
    p.add_argument("--method", choices=["pieri", "puzzle"], default="pieri")

    p = sub.add_parser("puzzle", help="raw puzzle count")
    p.add_argument("--type", choices=["1step", "2step"], required=True)
    p.add_argument("--nw", required=True)
    p.add_argument("--ne", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("string", help="boundary string encodings of a partition")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify", help="run a batch verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--max-N", dest="max_N", type=int, default=None)
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    p.add_argument("--max-weight", dest="max_weight", type=int, default=None)

    return parser


def run(argv) -> tuple[int, str]:
    """Execute one command line; returns (exit code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), ""
    try:
        if args.command == "qprod":
            return 0, _cmd_qprod(args)
        if args.command == "gw":
            return 0, _cmd_gw(args)
        if args.command == "lr":
            return 0, _cmd_lr(args)
        if args.command == "puzzle":
            return 0, _cmd_puzzle(args)
        if args.command == "string":
            return 0, _cmd_string(args)
        if args.command == "verify":
            return _cmd_verify(args)
    except ContractViolation as exc:
        return 3, f"contract violation: {exc}"
    except UsageError as exc:
        return 2, f"usage error: {exc}"
    except ValueError as exc:
        return 1, f"error: {exc}"
    return 2, f"unknown command {args.command!r}"


def main(argv=None) -> int:
    code, output = run(sys.argv[1:] if argv is None else argv)
    if output:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
