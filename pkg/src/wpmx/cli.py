"""Command-line front end (``wpmx``)."""

from __future__ import annotations

import argparse
import sys
import time
from typing import List, Optional

from .covers import compute_covers, shortest_covers
from .index import build_index
from .pwm import PWMFormatError, format_pwm, generate_random, parse_pwm, validate
from .suffix_tree import build_suffix_tree
from .trie import build_trie
from .widx import IndexFormatError, dumps, loads
from .wlcp import weighted_prefix_table

MATERIALIZE_CAP = 10**6


class DomainError(Exception):
    pass


def _read_pwm(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_pwm(fh)


def _positive_z(text: str) -> float:
    z = float(text)
    if not z >= 1:
        raise argparse.ArgumentTypeError("z must be >= 1")
    return z


def cmd_validate(args) -> int:
    X = _read_pwm(args.input)
    problems = validate(X)
    for p in problems:
        print(p)
    if problems:
        return 1
    print(f"ok: n={X.n} alphabet={X.alphabet}")
    return 0


def cmd_build(args) -> int:
    X = _read_pwm(args.input)
    I = build_index(X, args.z)
    with open(args.output, "wb") as fh:
        fh.write(dumps(I))
    print(f"wrote {args.output}: {len(I)} nodes, {len(I.ol)} occurrence entries", file=sys.stderr)
    return 0


def cmd_query(args) -> int:
    if args.index:
        with open(args.index, "rb") as fh:
            I = loads(fh.read())
    else:
        if args.input is None or args.z is None:
            raise DomainError("query needs either -x WIDX or both -i FILE and -z Z")
        I = build_index(_read_pwm(args.input), args.z)
    if args.patterns_file:
        with open(args.patterns_file, encoding="utf-8") as fh:
            patterns = [line.rstrip("\n") for line in fh]
    else:
        patterns = [args.pattern]
    for P in patterns:
        if args.mode == "exists":
            ans = "true" if I.exists(P) else "false"
        elif args.mode == "count":
            ans = str(I.count_occurrences(P))
        else:
            ans = " ".join(map(str, I.report(P)))
        print(f"{P}: {ans}".rstrip())
    return 0


def cmd_wpt(args) -> int:
    X = _read_pwm(args.input)
    print(" ".join(map(str, weighted_prefix_table(X, args.z))))
    return 0


def cmd_covers(args) -> int:
    X = _read_pwm(args.input)
    I = build_index(X, args.z)
    report = compute_covers(I)
    if args.shortest:
        for s in shortest_covers(report, I):
            print(s)
        return 0
    for e in report.entries:
        print(f"{I.string(e.node)} range=[{e.min_len}..{e.max_len}]")
    if args.materialize:
        total = report.expansion_chars()
        if total > MATERIALIZE_CAP and not args.force:
            raise DomainError(
                f"materializing would print {total} characters (cap {MATERIALIZE_CAP}); use --force"
            )
        for s in report.materialize(I):
            print(s)
    return 0


def cmd_gen(args) -> int:
    X = generate_random(args.n, args.sigma_letters, args.seed, args.uncertain_frac, args.resolution or None)
    text = format_pwm(X)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    zs = [float(t) for t in args.z.split(",")]
    res = run_selftest(args.n, args.sigma, zs, args.cases, args.seed, args.max_pattern)
    print(f"instances: {res.instances}")
    print(f"checks: {res.checks}")
    print(f"failures: {len(res.failures)}")
    print(f"cost violations: {len(res.cost_violations)}")
    for msg in (res.failures + res.cost_violations)[:10]:
        print(msg, file=sys.stderr)
    return 0 if res.ok else 1


def cmd_dump_trie(args) -> int:
    sys.stdout.write(build_trie(_read_pwm(args.input), args.z).dump())
    return 0


def cmd_dump_st(args) -> int:
    T = build_trie(_read_pwm(args.input), args.z)
    sys.stdout.write(build_suffix_tree(T).dump())
    return 0


def cmd_bench(args) -> int:
    import random

    print("n\tz\tbuild_s\tindex_nodes\tqueries_per_s")
    for n in args.n:
        for z in args.z:
            X = generate_random(n, args.sigma_letters, args.seed, args.uncertain_frac)
            t0 = time.perf_counter()
            I = build_index(X, z)
            build = time.perf_counter() - t0
            rng = random.Random(args.seed)
            pats = ["".join(rng.choice(X.alphabet) for _ in range(rng.randint(1, 12))) for _ in range(args.queries)]
            t0 = time.perf_counter()
            for P in pats:
                I.report(P)
            qps = len(pats) / max(time.perf_counter() - t0, 1e-9)
            print(f"{n}\t{z:g}\t{build:.3f}\t{len(I)}\t{qps:.0f}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wpmx", description="Index for weighted (PWM) sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a PWM v1 file")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("build", help="build an index and write it as WIDX")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-z", type=_positive_z, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="weighted pattern matching queries")
    p.add_argument("-i", "--input")
    p.add_argument("-z", type=_positive_z)
    p.add_argument("-x", "--index")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("-p", "--pattern")
    g.add_argument("--patterns-file")
    p.add_argument("--mode", choices=["exists", "count", "report"], default="report")
    p.set_defaults(func=cmd_query)

    for name, func, help_ in [
        ("wpt", cmd_wpt, "weighted prefix table"),
        ("dump-trie", cmd_dump_trie, "debug dump of the solid factor trie"),
        ("dump-st", cmd_dump_st, "debug dump of the suffix tree of the trie"),
    ]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("-i", "--input", required=True)
        p.add_argument("-z", type=_positive_z, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("covers", help="covers of the weighted sequence")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-z", type=_positive_z, required=True)
    p.add_argument("--shortest", action="store_true")
    p.add_argument("--materialize", action="store_true")
    p.add_argument("--force", action="store_true", help="materialize beyond the size cap")
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("gen", help="generate a random PWM file")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-s", "--alphabet", dest="sigma_letters", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--uncertain-frac", type=float, default=0.3)
    p.add_argument("--resolution", type=int, default=16, help="probability grid (0 = continuous)")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selftest", help="compare against brute-force oracles")
    p.add_argument("-n", type=int, default=12)
    p.add_argument("--sigma", type=int, default=3)
    p.add_argument("-z", default="2,4,8")
    p.add_argument("--cases", type=int, default=1000)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--max-pattern", type=int, default=6)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", help="informational timing table")
    p.add_argument("-n", type=int, nargs="+", default=[1000, 10000])
    p.add_argument("-z", type=_positive_z, nargs="+", default=[4, 16])
    p.add_argument("-s", "--alphabet", dest="sigma_letters", default="acgt")
    p.add_argument("--uncertain-frac", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--queries", type=int, default=2000)
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (PWMFormatError, IndexFormatError, DomainError, ValueError) as exc:
        print(f"wpmx: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"wpmx: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
