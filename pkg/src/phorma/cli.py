"""Command-line front end.

Usage::

    phorma count  SPEC
    phorma rank   SPEC 7 5 4 3
    phorma unrank SPEC 42
    phorma next   SPEC 7 5 4 3
    phorma sample SPEC [--seed S] [--draws K]
    phorma list   SPEC [--limit N]
    phorma dot    SPEC
    phorma check  SPEC [--limit N]

A spec file has two ``key: value`` lines, ``#`` starting a comment::

    bounds: 7 5 7 5
    where: a1>=a3 & a2>=a4 & a1>=a2

``where`` may be omitted (no restriction).  Exit status is 1 for malformed
input, 2 for a vector outside the set, 3 when ``check`` finds a failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import hashing, oracle
from .errors import EnumerationLimitError, ExprSyntaxError, NotAMemberError, RankRangeError
from .graph import PhormaSpec, build, export_dot

EXIT_USAGE = 1
EXIT_NOT_MEMBER = 2
EXIT_CHECK_FAILED = 3

DEFAULT_LIST_LIMIT = 10000


class SpecFileError(ValueError):
    pass


def parse_spec_text(text: str) -> PhormaSpec:
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in ("bounds", "where"):
            raise SpecFileError(f"line {lineno}: expected 'bounds:' or 'where:'")
        if key in fields:
            raise SpecFileError(f"line {lineno}: duplicate key {key!r}")
        fields[key] = value.strip()
    if "bounds" not in fields:
        raise SpecFileError("missing 'bounds:' line")
    try:
        bounds = tuple(int(x) for x in fields["bounds"].split())
    except ValueError:
        raise SpecFileError("bounds must be integers") from None
    if not bounds:
        raise SpecFileError("bounds are empty")
    return PhormaSpec.from_text(bounds, fields.get("where", ""))


def load_spec(path: str) -> PhormaSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_spec_text(fh.read())


def _vec(v) -> str:
    return " ".join(str(x) for x in v)


def _make_parser():
    p = argparse.ArgumentParser(prog="phorma", description="Perfect hash of an order-restricted array.")
    p.add_argument("command", choices=["count", "rank", "unrank", "next", "sample", "list", "dot", "check"])
    p.add_argument("specfile")
    p.add_argument("args", nargs="*", type=int, help="vector entries, or a rank for unrank")
    p.add_argument("--limit", type=int, default=None,
                   help="max elements for list; max box size for check")
    p.add_argument("--seed", type=int, default=None, help="seed for sample (PCG64)")
    p.add_argument("--draws", type=int, default=1, help="number of samples")
    return p


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _make_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0

    try:
        spec = load_spec(ns.specfile)
        graph = build(spec)
    except (OSError, SpecFileError, ExprSyntaxError, EnumerationLimitError, ValueError) as exc:
        print(f"phorma: {exc}", file=err)
        return EXIT_USAGE

    cmd, args = ns.command, ns.args
    try:
        if cmd == "count":
            print(graph.total, file=out)
        elif cmd == "rank":
            print(hashing.rank(graph, _need_vector(args, spec)), file=out)
        elif cmd == "unrank":
            if len(args) != 1:
                raise _Usage("unrank takes exactly one rank")
            print(_vec(hashing.unrank(graph, args[0])), file=out)
        elif cmd == "next":
            succ = hashing.next_member(graph, _need_vector(args, spec))
            print("last" if succ is None else _vec(succ), file=out)
        elif cmd == "sample":
            if graph.total == 0:
                raise _Usage("empty family: nothing to sample")
            rng = np.random.Generator(np.random.PCG64(ns.seed))
            for _ in range(ns.draws):
                print(_vec(hashing.sample(graph, float(rng.random()))), file=out)
        elif cmd == "list":
            limit = DEFAULT_LIST_LIMIT if ns.limit is None else ns.limit
            if graph.total > limit:
                raise _Usage(f"{graph.total} elements exceed --limit {limit}")
            for r in range(graph.total):
                print(_vec(hashing.unrank(graph, r)), file=out)
        elif cmd == "dot":
            out.write(export_dot(graph))
        elif cmd == "check":
            limit = oracle.DEFAULT_ORACLE_LIMIT if ns.limit is None else ns.limit
            results = oracle.run_checks(graph, limit)
            for name, ok in results:
                print(f"{'PASS' if ok else 'FAIL'}  {name}", file=out)
            if not all(ok for _, ok in results):
                return EXIT_CHECK_FAILED
    except NotAMemberError as exc:
        print(f"phorma: {exc}", file=err)
        return EXIT_NOT_MEMBER
    except (_Usage, RankRangeError, EnumerationLimitError) as exc:
        print(f"phorma: {exc}", file=err)
        return EXIT_USAGE
    return 0


class _Usage(Exception):
    pass


def _need_vector(args, spec):
    if len(args) != spec.n:
        raise _Usage(f"expected {spec.n} vector entries, got {len(args)}")
    return tuple(args)


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
